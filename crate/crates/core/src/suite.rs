//! Named verification suites run over an inclusive range of `n`.
//!
//! Each suite emits one check per applicable `n` (or per identity, for the
//! range-independent ones) and a skip for every `n` outside its domain, so the
//! report always accounts for the whole range.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::duality;
use crate::error::{Error, Result};
use crate::polygon::{self, LatticePolygon};
use crate::recursion::{A2Normalization, Family};
use crate::report::{Check, Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Recursion,
    Backward,
    Polygon,
    Fit,
    Duality,
    Pduality,
    Substcoeff,
    Nongeom,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 8] = [
        Suite::Recursion,
        Suite::Backward,
        Suite::Polygon,
        Suite::Fit,
        Suite::Duality,
        Suite::Pduality,
        Suite::Substcoeff,
        Suite::Nongeom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recursion => "recursion",
            Suite::Backward => "backward",
            Suite::Polygon => "polygon",
            Suite::Fit => "fit",
            Suite::Duality => "duality",
            Suite::Pduality => "pduality",
            Suite::Substcoeff => "substcoeff",
            Suite::Nongeom => "nongeom",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Runs `suite` over `range`; `All` runs every suite in order and
/// concatenates the reports under the suite name `all`.
pub fn run(family: &Family, suite: Suite, range: RangeInclusive<i64>) -> Report {
    match suite {
        Suite::All => {
            let mut out = Report::new("all");
            for s in Suite::INDIVIDUAL {
                for c in run(family, s, range.clone()).checks {
                    out.push(Check { label: format!("{s}: {}", c.label), ..c });
                }
            }
            out
        }
        Suite::Recursion => recursion(family, range),
        Suite::Backward => backward(family, range),
        Suite::Polygon => polygons(family, range),
        Suite::Fit => fit(family, range),
        Suite::Duality => dual(family, range),
        Suite::Pduality => pdual(family, range),
        Suite::Substcoeff => substcoeff(family),
        Suite::Nongeom => nongeom(family, range),
    }
}

fn skip(label: impl Into<String>, n: i64, why: &str) -> Check {
    Check::new(label, Some(n), Status::Skip).with_detail(why)
}

fn recursion(family: &Family, range: RangeInclusive<i64>) -> Report {
    let mut r = Report::new("recursion");
    for n in range {
        if n < 0 {
            r.push(skip(format!("forward recursion at n = {n}"), n, "forward check needs n >= 0"));
        } else {
            r.extend(family.verify_forward([n]));
        }
    }
    r
}

fn backward(family: &Family, range: RangeInclusive<i64>) -> Report {
    let mut r = Report::new("backward");
    let (neg, pos): (Vec<i64>, Vec<i64>) = range.partition(|&n| n <= 0);
    r.extend(family.verify_backward(neg));
    for n in pos {
        r.push(skip(format!("backward R_{n}"), n, "backward check needs n <= 0"));
    }
    r.checks.sort_by_key(|c| c.n);
    r
}

fn hull_check(
    label: String,
    n: i64,
    computed: Result<LatticePolygon>,
    predicted: Result<LatticePolygon>,
) -> Check {
    Check::from_result(label, Some(n), computed.and_then(|c| Ok(c.vertex_set() == predicted?.vertex_set())))
}

fn polygons(family: &Family, range: RangeInclusive<i64>) -> Report {
    let mut r = Report::new("polygon");
    for n in range {
        if n.abs() < 2 {
            r.push(skip(format!("polygons at n = {n}"), n, "torus knot"));
            continue;
        }
        let a_hull = |norm| family.compute_a(n, norm).and_then(|a| polygon::hull(a.expect_poly()?));
        if n > 1 {
            let p = family.compute_p(n).and_then(|p| polygon::hull(p.expect_poly()?));
            r.push(hull_check(format!("hull(P_{n}) = predicted"), n, p, polygon::predicted_p_polygon(n)));
            r.push(Check::from_result(
                format!("leading L-coefficient of P_{n} = +-M^{}", 28 * n + 6),
                Some(n),
                leading_monomial_check(family, n),
            ));
        } else {
            let q = family.compute_q(n).and_then(|q| polygon::hull(q.expect_poly()?));
            r.push(hull_check(format!("hull(Q_{n}) = predicted"), n, q, polygon::predicted_q_polygon(n)));
        }
        if n == -2 {
            let t = a_hull(A2Normalization::Tabulated).and_then(|h| Ok(h.translation_to(&polygon::predicted_a_polygon(-2)?)));
            let c = match t {
                Ok(Some((dl, dm))) => Check::new("hull(A_-2) = predicted up to a unit", Some(n), Status::Pass)
                    .with_detail(format!("predicted = computed + ({dl},{dm}) in (L,M)")),
                Ok(None) => Check::new("hull(A_-2) = predicted up to a unit", Some(n), Status::Fail),
                Err(e) => Check::new("hull(A_-2) = predicted up to a unit", Some(n), Status::Fail).with_detail(e.to_string()),
            };
            r.push(c);
            r.push(hull_check(
                "hull(A_-2) = generic continuation (generic normalization)".into(),
                n,
                a_hull(A2Normalization::Generic),
                polygon::predicted_a_polygon_generic(-2),
            ));
        } else {
            r.push(hull_check(format!("hull(A_{n}) = predicted"), n, a_hull(A2Normalization::Tabulated), polygon::predicted_a_polygon(n)));
        }
    }
    r
}

/// `leading_coeff_L(P_n) = +-M^(28n+6)`.
pub fn leading_monomial_check(family: &Family, n: i64) -> Result<bool> {
    let lc = family.compute_p(n)?.expect_poly()?.leading_coeff_l()?;
    Ok(lc.is_monomial()
        && lc.leading_term().is_some_and(|(e, c)| e.m == 28 * n + 6 && e.l == 0 && c.is_sign_unit()))
}

/// Samples `hull(A_n)` for the given `n` and fits a period-1 quadratic.
pub fn fit_a_hulls(family: &Family, ns: &[i64]) -> Result<polygon::VertexFit> {
    let samples = ns
        .iter()
        .map(|&n| Ok((n, polygon::hull(family.compute_a(n, A2Normalization::Tabulated)?.expect_poly()?)?)))
        .collect::<Result<Vec<_>>>()?;
    polygon::fit_vertices(&samples, 2, 1)
}

fn fit(family: &Family, range: RangeInclusive<i64>) -> Report {
    let mut r = Report::new("fit");
    let pos: Vec<i64> = range.clone().filter(|&n| n >= 2).collect();
    let neg: Vec<i64> = range.filter(|&n| n <= -3).collect();
    for (ns, positive) in [(pos, true), (neg, false)] {
        let Some((&lo, &hi)) = ns.first().zip(ns.last()) else { continue };
        let label = format!("quadratic vertex fit of hull(A_n) over {lo}..={hi}");
        let c = match fit_a_hulls(family, &ns) {
            Ok(f) => Check::new(
                label,
                None,
                if polygon::fit_matches_table(&f, &polygon::a_vertex_table(positive)) { Status::Pass } else { Status::Fail },
            ),
            Err(Error::Underdetermined { have, need, .. }) => Check::new(label, None, Status::Skip)
                .with_detail(format!("{have} samples, need {need}")),
            Err(e) => Check::new(label, None, Status::Fail).with_detail(e.to_string()),
        };
        r.push(c);
    }
    r
}

fn dual(family: &Family, range: RangeInclusive<i64>) -> Report {
    let mut r = Report::new("duality");
    for n in range {
        let label = format!("B-polynomial duality at n = {n}");
        if n < 2 {
            r.push(skip(label, n, "duality needs n > 1"));
        } else if n == 2 {
            let c = match duality::duality_passing_normalizations(family) {
                Ok(v) if v.contains(&A2Normalization::Tabulated) => {
                    Check::new(label, Some(n), Status::Pass).with_detail(format!("holds under {v:?} A_-2 normalization"))
                }
                Ok(v) => Check::new(label, Some(n), Status::Fail).with_detail(format!("holds only under {v:?}")),
                Err(e) => Check::new(label, Some(n), Status::Fail).with_detail(e.to_string()),
            };
            r.push(c);
        } else {
            r.push(Check::from_result(label, Some(n), duality::verify_theorem2(family, n, A2Normalization::Tabulated)));
        }
    }
    r
}

fn pdual(family: &Family, range: RangeInclusive<i64>) -> Report {
    let mut r = Report::new("pduality");
    for n in range {
        let label = format!("P/Q duality at n = {n}");
        if n < 2 {
            r.push(skip(label, n, "duality needs n > 1"));
        } else {
            r.push(Check::from_result(label, Some(n), duality::verify_pduality(family, n)));
        }
    }
    r
}

fn substcoeff(family: &Family) -> Report {
    let mut r = Report::new("substcoeff");
    for k in 0..=3 {
        r.push(Check::from_result(
            format!("(c_{k}^- / c_4^-)(-LM)^({k}-4) = c_{k}^+ / c_4^+"),
            None,
            duality::verify_subst_coeff_identity(family.tables(), k),
        ));
    }
    r.push(Check::from_result(
        "c_0^- = L^4 (1+L)^4 (1-M)^4 / M^2",
        None,
        duality::verify_c0_minus(family.tables()),
    ));
    r
}

fn nongeom(family: &Family, range: RangeInclusive<i64>) -> Report {
    let mut r = Report::new("nongeom");
    for n in range {
        let label = format!("non-geometric factor divides A_{n}");
        if n % 3 != 0 || n.abs() < 3 {
            r.push(skip(label, n, "3 does not divide n"));
        } else {
            r.push(Check::from_result(label, Some(n), duality::verify_nongeom(family, n)));
        }
    }
    r
}
