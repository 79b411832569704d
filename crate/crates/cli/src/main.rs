//! `pretzel`: compute members of the `(-2, 3, 3+2n)` pretzel-knot family,
//! compare Newton polygons with their predicted shapes, and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
//! error.

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pretzel_core::polygon::{self, LatticePolygon};
use pretzel_core::suite::{self, Suite};
use pretzel_core::{json as pjson, A2Normalization, Error, Family, FamilyTables, RationalFn, Report, Status};

#[derive(Parser)]
#[command(name = "pretzel", version, about = "A-polynomials of the (-2,3,3+2n) pretzel knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormArg {
    A,
    P,
    Q,
    R,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print one family member.
    Compute {
        #[arg(long, value_enum, ignore_case = true)]
        form: FormArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Use the `n < -2` normalization for `A_-2`.
        #[arg(long)]
        generic_n2: bool,
    },
    /// Newton polygon of a member next to its predicted hexagon.
    Polygon {
        #[arg(long, value_enum, ignore_case = true)]
        form: FormArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Use the `n < -2` normalization for `A_-2` and compare with the
        /// continued `n < -2` formulas.
        #[arg(long)]
        generic_n2: bool,
    },
    /// Run verification suites over an inclusive range `a..b`.
    Verify {
        /// Comma-separated: recursion, backward, polygon, fit, duality,
        /// pduality, substcoeff, nongeom, all.
        #[arg(long, value_delimiter = ',', default_value = "all", value_parser = parse_suite)]
        suite: Vec<Suite>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        range: RangeInclusive<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dump recursion tables and initial conditions.
    Tables {
        /// A single entry, e.g. `c3`, `gamma1`, `P0`, `Q-2`, `b`; all if omitted.
        #[arg(long, allow_hyphen_values = true)]
        name: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `a..b` or `a..=b` (both inclusive), or a single integer.
fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad integer {t:?} in range {s:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (int(a)?, int(b.strip_prefix('=').unwrap_or(b))?),
        None => (int(s)?, int(s)?),
    };
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn norm(generic: bool) -> A2Normalization {
    if generic {
        A2Normalization::Generic
    } else {
        A2Normalization::Tabulated
    }
}

fn check_domain(form: FormArg, n: i64) -> Result<(), Failure> {
    let bad = match form {
        FormArg::P if n < 0 => Some("P_n needs n >= 0"),
        FormArg::Q if n > 0 => Some("Q_n needs n <= 0"),
        _ => None,
    };
    bad.map_or(Ok(()), |m| Err(Failure::Usage(format!("{m}, got {n}"))))
}

fn member(family: &Family, form: FormArg, n: i64, generic: bool) -> Result<RationalFn, Failure> {
    check_domain(form, n)?;
    let m = match form {
        FormArg::P => family.compute_p(n)?.value.clone(),
        FormArg::Q => family.compute_q(n)?.value.clone(),
        FormArg::A => family.compute_a(n, norm(generic))?.value,
        FormArg::R => family.compute_r(n)?.value,
    };
    Ok(m)
}

fn cmd_compute(form: FormArg, n: i64, format: Format, generic: bool) -> Result<String, Failure> {
    let value = member(&Family::default(), form, n, generic)?;
    Ok(match (format, value.has_unit_den()) {
        (Format::Text, _) => value.to_string(),
        (Format::Json, true) => pjson::poly_to_string(value.num()),
        (Format::Json, false) => pjson::ratfn_to_string(&value),
    })
}

fn show(p: &LatticePolygon) -> String {
    p.vertices().iter().map(|(l, m)| format!("({l},{m})")).collect::<Vec<_>>().join(" ")
}

fn cmd_polygon(form: FormArg, n: i64, format: Format, generic: bool) -> Result<String, Failure> {
    let predicted = match form {
        FormArg::P => polygon::predicted_p_polygon(n)?,
        FormArg::Q => polygon::predicted_q_polygon(n)?,
        FormArg::A if n == -2 && generic => polygon::predicted_a_polygon_generic(n)?,
        FormArg::A => polygon::predicted_a_polygon(n)?,
        FormArg::R => return Err(Failure::Usage("no predicted polygon for R_n".into())),
    };
    let value = member(&Family::default(), form, n, generic)?;
    let poly = value.to_poly()?.ok_or_else(|| Failure::Usage(format!("member at n = {n} is not a polynomial")))?;
    let computed = polygon::hull(&poly)?;
    let equal = computed.vertex_set() == predicted.vertex_set();
    let shift = (!equal).then(|| computed.translation_to(&predicted)).flatten();
    Ok(match format {
        Format::Json => json!({
            "form": format!("{form:?}"),
            "n": n,
            "computed": computed,
            "predicted": predicted,
            "equal": equal,
            "translation": shift.map(|(l, m)| [l, m]),
        })
        .to_string(),
        Format::Text => {
            let mut s = format!(
                "coords: (L,M)\ncomputed:  {}\npredicted: {}\nequal: {equal}",
                show(&computed),
                show(&predicted)
            );
            if let Some((dl, dm)) = shift {
                s.push_str(&format!("\nequal after translating computed by ({dl},{dm})"));
            }
            s
        }
    })
}

fn cmd_verify(suites: &[Suite], range: RangeInclusive<i64>, format: Format) -> (String, bool) {
    let family = Family::default();
    let reports: Vec<Report> = suites.iter().map(|&s| suite::run(&family, s, range.clone())).collect();
    let ok = reports.iter().all(Report::all_passed);
    let count = |st| reports.iter().map(|r| r.count(st)).sum::<usize>();
    let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
    let out = match format {
        Format::Json => json!({
            "reports": reports,
            "passed": pass,
            "failed": fail,
            "skipped": skip,
        })
        .to_string(),
        Format::Text => {
            let mut s: String = reports.iter().map(ToString::to_string).collect();
            s.push_str(&format!("{pass} passed, {fail} failed, {skip} skipped"));
            s
        }
    };
    (out, ok)
}

fn table_entries(t: &FamilyTables) -> Vec<(String, RationalFn)> {
    let mut v: Vec<(String, RationalFn)> = Vec::new();
    for (k, c) in t.c.iter().enumerate() {
        v.push((format!("c{k}"), c.clone().into()));
    }
    for (k, g) in t.gamma.iter().enumerate() {
        v.push((format!("gamma{k}"), g.clone().into()));
    }
    for (i, p) in t.p_init.iter().enumerate() {
        v.push((format!("P{i}"), p.clone()));
    }
    for (i, q) in t.q_init.iter().enumerate() {
        let name = if i == 0 { "Q0".to_string() } else { format!("Q-{i}") };
        v.push((name, q.clone()));
    }
    v.push(("b".into(), t.b.clone()));
    v.push(("c".into(), t.c_unit.clone()));
    v
}

fn cmd_tables(name: Option<&str>, format: Format) -> Result<String, Failure> {
    let entries = table_entries(FamilyTables::standard());
    let chosen: Vec<_> = match name {
        Some(n) => {
            let e = entries.into_iter().find(|(k, _)| k == n).ok_or_else(|| {
                Failure::Usage(format!("unknown table entry {n:?}"))
            })?;
            vec![e]
        }
        None => entries,
    };
    Ok(match format {
        Format::Text => chosen.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let items: Vec<serde_json::Value> = chosen
                .iter()
                .map(|(k, v)| {
                    let value: serde_json::Value = if v.has_unit_den() {
                        serde_json::from_str(&pjson::poly_to_string(v.num()))
                    } else {
                        serde_json::from_str(&pjson::ratfn_to_string(v))
                    }
                    .expect("emitted JSON parses");
                    json!({ "name": k, "value": value })
                })
                .collect();
            serde_json::Value::Array(items).to_string()
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { form, n, format, generic_n2 } => cmd_compute(form, n, format, generic_n2),
        Command::Polygon { form, n, format, generic_n2 } => cmd_polygon(form, n, format, generic_n2),
        Command::Tables { name, format } => cmd_tables(name.as_deref(), format),
        Command::Verify { suite, range, format } => {
            let (out, ok) = cmd_verify(&suite, range, format);
            println!("{out}");
            if ok {
                Ok(String::new())
            } else {
                Err(Failure::Checks)
            }
        }
    };
    match result {
        Ok(s) if s.is_empty() => ExitCode::SUCCESS,
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
