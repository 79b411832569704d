//! Constants of the pretzel family: recursion coefficients, initial
//! conditions, normalization units.
//!
//! Everything is kept as the short factored source text in [`SOURCES`] and
//! expanded by the expression reader on construction.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly};
use crate::parse;
use crate::ratfn::RationalFn;
use crate::rational::Rational;

/// `(name, factored source)` for every table entry.
pub const SOURCES: &[(&str, &str)] = &[
    ("c4", "M^4"),
    ("c3", "1+M^4+2*L*M^12+L*M^14-L*M^16+L^2*M^20-L^2*M^22-2*L^2*M^24-L^3*M^32-L^3*M^36"),
    ("c2", concat!(
        "(-1+L*M^12)*(-1-2*L*M^10-3*L*M^12+2*L*M^14-L^2*M^16+2*L^2*M^18-4*L^2*M^20",
        "-2*L^2*M^22+3*L^2*M^24-3*L^3*M^28+2*L^3*M^30+4*L^3*M^32-2*L^3*M^34+L^3*M^36-2*L^4*M^38",
        "+3*L^4*M^40+2*L^4*M^42+L^5*M^52)")),
    ("c1", concat!(
        "-L^2*(-1+M)^2*M^16*(1+M)^2*(1+L*M^10)^2*",
        "(-1-M^4-2*L*M^12-L*M^14+L*M^16-L^2*M^20+L^2*M^22+2*L^2*M^24+L^3*M^32+L^3*M^36)")),
    ("c0", "L^4*(-1+M)^4*M^36*(1+M)^4*(1+L*M^10)^4"),
    ("gamma4", "L^4*(-1+M)^4*M^36*(1+M)^4*(1+L*M^10)^4"),
    ("gamma3", concat!(
        "L^3*(-1+M)^3*M^24*(1+M)^3*(1+L*M^10)^3*",
        "(-1-M^4-2*L*M^12-L*M^14+L*M^16-L^2*M^20+L^2*M^22+2*L^2*M^24+L^3*M^32+L^3*M^36)")),
    ("gamma2", concat!(
        "L^2*(-1+M)^2*M^16*(1+M)^2*(1+L*M^10)^2*(-1+L*M^12)*",
        "(-1-2*L*M^10-3*L*M^12+2*L*M^14-L^2*M^16+2*L^2*M^18-4*L^2*M^20-2*L^2*M^22+3*L^2*M^24",
        "-3*L^3*M^28+2*L^3*M^30+4*L^3*M^32-2*L^3*M^34+L^3*M^36-2*L^4*M^38+3*L^4*M^40",
        "+2*L^4*M^42+L^5*M^52)")),
    ("P0", "(-1+L*M^12)*(1+L*M^12)^2/(1+L*M^10)^3"),
    ("P1", "(-1+L*M^11)^2*(1+L*M^11)^2/(1+L*M^10)"),
    ("P2", concat!(
        "-1+L*M^8-2*L*M^10+L*M^12+2*L^2*M^20+L^2*M^22-L^4*M^40-2*L^4*M^42-L^5*M^50",
        "+2*L^5*M^52-L^5*M^54+L^6*M^62")),
    ("P3", concat!(
        "(-1+L*M^12)*(-1+L*M^4-L*M^6+2*L*M^8-5*L*M^10+L*M^12+5*L^2*M^16-4*L^2*M^18",
        "+L^2*M^22+L^3*M^26+3*L^3*M^30+2*L^3*M^32-2*L^4*M^36-3*L^4*M^38+3*L^4*M^40",
        "+2*L^4*M^42-2*L^5*M^46-3*L^5*M^48-L^5*M^52-L^6*M^56+4*L^6*M^60-5*L^6*M^62",
        "-L^7*M^66+5*L^7*M^68-2*L^7*M^70+L^7*M^72-L^7*M^74+L^8*M^78)")),
    ("Q0", "-(-1+L*M^12)*(1+L*M^12)^2/(L^3*(-1+M)^3*M^4*(1+M)^3)"),
    ("Q-1", "-M^12*(1+L*M^14)^2/(L*(-1+M)*(1+M))"),
    ("Q-2", concat!(
        "M^20*(1-L*M^8+2*L*M^10+2*L*M^12-L*M^16+L*M^18+L^2*M^20-L^2*M^22+2*L^2*M^26",
        "+2*L^2*M^28-L^2*M^30+L^3*M^38)")),
    ("Q-3", concat!(
        "M^16*(-1+L*M^12)*(1+L*M^10+5*L*M^12-L*M^14-2*L*M^16+2*L*M^18-L*M^20+2*L^2*M^20",
        "+L*M^22+4*L^2*M^22+3*L^2*M^26-3*L^2*M^28-L^3*M^28+5*L^3*M^30+5*L^2*M^32-L^2*M^34",
        "-3*L^3*M^34+3*L^3*M^36+4*L^3*M^40+L^4*M^40+2*L^3*M^42-L^4*M^42+2*L^4*M^44",
        "-2*L^4*M^46-L^4*M^48+5*L^4*M^50+L^4*M^52+L^5*M^62)")),
    ("b", "1/(L*M^8*(1-M^2)*(1+L*M^10))"),
    ("c", "L^3*M^12*(1-M^2)^3/(1+L*M^10)^3"),
];

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

fn load_poly(name: &str) -> LaurentPoly {
    parse::poly(source(name).expect("known table entry")).expect("table source parses")
}

fn load_ratfn(name: &str) -> RationalFn {
    parse::ratfn(source(name).expect("known table entry")).expect("table source parses")
}

/// The factors every table denominator splits into.
pub fn family_basis() -> Vec<LaurentPoly> {
    ["M", "L", "1-M", "1+M", "1+L*M^10", "1-L*M^12", "1+L*M^12"]
        .iter()
        .map(|s| parse::poly(s).expect("basis parses"))
        .collect()
}

/// All recursion data for the family. Fields are public so a corrupted copy
/// can be built for mutation tests.
#[derive(Clone, Debug)]
pub struct FamilyTables {
    /// `c[k]` multiplies `P_{n+k}` (and `Q_{n-k}`).
    pub c: [LaurentPoly; 5],
    /// `gamma[k]` multiplies `R_{n+k}`.
    pub gamma: [LaurentPoly; 5],
    /// `P_0 .. P_3`.
    pub p_init: [RationalFn; 4],
    /// `q_init[i]` is `Q_{-i}`.
    pub q_init: [RationalFn; 4],
    pub b: RationalFn,
    pub c_unit: RationalFn,
}

impl FamilyTables {
    pub fn build() -> Self {
        let gamma4 = load_poly("gamma4");
        let gamma3 = load_poly("gamma3");
        FamilyTables {
            c: ["c0", "c1", "c2", "c3", "c4"].map(load_poly),
            gamma: [gamma4.clone(), gamma3.clone(), load_poly("gamma2"), gamma3, gamma4],
            p_init: ["P0", "P1", "P2", "P3"].map(load_ratfn),
            q_init: ["Q0", "Q-1", "Q-2", "Q-3"].map(load_ratfn),
            b: load_ratfn("b"),
            c_unit: load_ratfn("c"),
        }
    }

    /// The shared, lazily built copy.
    pub fn standard() -> &'static FamilyTables {
        static TABLES: OnceLock<FamilyTables> = OnceLock::new();
        TABLES.get_or_init(FamilyTables::build)
    }

    pub fn coeff_c(&self, k: i64) -> Result<&LaurentPoly> {
        usize::try_from(k)
            .ok()
            .and_then(|i| self.c.get(i))
            .ok_or(Error::IndexOutOfRange { what: "c_k", index: k })
    }

    pub fn coeff_gamma(&self, k: i64) -> Result<&LaurentPoly> {
        usize::try_from(k)
            .ok()
            .and_then(|i| self.gamma.get(i))
            .ok_or(Error::IndexOutOfRange { what: "gamma_k", index: k })
    }

    pub fn initial_p(&self, i: i64) -> Result<&RationalFn> {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.p_init.get(i))
            .ok_or(Error::IndexOutOfRange { what: "P initial", index: i })
    }

    /// `Q_i` for `-3 <= i <= 0`.
    pub fn initial_q(&self, i: i64) -> Result<&RationalFn> {
        i.checked_neg()
            .and_then(|j| usize::try_from(j).ok())
            .and_then(|j| self.q_init.get(j))
            .ok_or(Error::IndexOutOfRange { what: "Q initial", index: i })
    }

    /// The unit `eps_n` relating `R_n` to the sheared A-polynomial, as
    /// tabulated (including the separate `n = -2` value).
    pub fn epsilon(&self, n: i64) -> Result<RationalFn> {
        match n {
            n if n > 1 => Ok(RationalFn::one()),
            -2 => self.c_unit.scale_monomial(&Rational::one(), Exp::new(-28, 0)),
            n if n < -2 => self.epsilon_generic(n),
            _ => Err(Error::IndexOutOfRange { what: "epsilon", index: n }),
        }
    }

    /// The `n < -2` branch of `eps_n` continued to any `n <= -2`.
    pub fn epsilon_generic(&self, n: i64) -> Result<RationalFn> {
        if n > -2 {
            return Err(Error::IndexOutOfRange { what: "epsilon (generic branch)", index: n });
        }
        let e = -4 * (3 + n) * (2 + 3 * n);
        self.c_unit.scale_monomial(&Rational::one(), Exp::new(e, 0))
    }
}

/// `eta_n`: `M^22` for `n = 2`, `1` for `n > 2`.
pub fn eta(n: i64) -> Result<LaurentPoly> {
    match n {
        2 => Ok(LaurentPoly::m_l(22, 0)),
        n if n > 2 => Ok(LaurentPoly::one()),
        _ => Err(Error::IndexOutOfRange { what: "eta", index: n }),
    }
}

/// The non-geometric factor of `A_n`, present only for nonzero multiples of 3.
pub fn nongeom(n: i64) -> Option<LaurentPoly> {
    if n == 0 || n % 3 != 0 {
        return None;
    }
    nongeom_candidate(n)
}

/// The same shape evaluated at any `n != 0`, used as a negative control
/// when `3` does not divide `n`.
pub fn nongeom_candidate(n: i64) -> Option<LaurentPoly> {
    let one = LaurentPoly::one();
    match n {
        n if n > 0 => Some(&one - &LaurentPoly::m_l(4 * (n + 3), 1)),
        n if n < 0 => Some(&LaurentPoly::m_l(0, 1) - &LaurentPoly::m_l(-4 * (n + 3), 0)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly;

    const C_INNER_3: &str = "(-1-M^4-2*L*M^12-L*M^14+L*M^16-L^2*M^20+L^2*M^22+2*L^2*M^24+L^3*M^32+L^3*M^36)";

    const C_INNER_2: &str = "(-1+L*M^12)*(-1-2*L*M^10-3*L*M^12+2*L*M^14-L^2*M^16+2*L^2*M^18-4*L^2*M^20\
        -2*L^2*M^22+3*L^2*M^24-3*L^3*M^28+2*L^3*M^30+4*L^3*M^32-2*L^3*M^34+L^3*M^36-2*L^4*M^38\
        +3*L^4*M^40+2*L^4*M^42+L^5*M^52)";

    fn t() -> &'static FamilyTables {
        FamilyTables::standard()
    }

    #[test]
    fn c4_is_m4() {
        assert_eq!(t().coeff_c(4).unwrap(), &LaurentPoly::m_l(4, 0));
    }

    #[test]
    fn c0_closed_form() {
        let expect = poly("L^4*(1-M)^4*(1+M)^4*M^36*(1+L*M^10)^4").unwrap();
        assert_eq!(t().coeff_c(0).unwrap(), &expect);
    }

    #[test]
    fn c3_coefficient_sum_is_zero() {
        let one = Rational::one();
        assert_eq!(t().coeff_c(3).unwrap().eval(&one, &one).unwrap(), Rational::zero());
    }

    #[test]
    fn inner_factor_constants_match_sources() {
        let c2 = poly(C_INNER_2).unwrap();
        assert_eq!(t().coeff_c(2).unwrap(), &c2);
        let c1 = &poly("-L^2*(-1+M)^2*M^16*(1+M)^2*(1+L*M^10)^2").unwrap() * &poly(C_INNER_3).unwrap();
        assert_eq!(t().coeff_c(1).unwrap(), &c1);
    }

    #[test]
    fn gamma_palindromic_and_gamma4() {
        assert_eq!(t().coeff_gamma(1).unwrap(), t().coeff_gamma(3).unwrap());
        assert_eq!(t().coeff_gamma(0).unwrap(), t().coeff_gamma(4).unwrap());
        let g4 = poly("L^4*(-1+M)^4*M^36*(1+M)^4*(1+L*M^10)^4").unwrap();
        assert_eq!(t().coeff_gamma(4).unwrap(), &g4);
    }

    #[test]
    fn gamma_times_b_power_is_c() {
        for k in 0..5 {
            let lhs = &RationalFn::from(t().gamma[k].clone()) * &t().b.pow(k as i32).unwrap();
            assert_eq!(lhs, RationalFn::from(t().c[k].clone()), "k = {k}");
        }
    }

    #[test]
    fn c_have_even_m_exponents() {
        assert!(t().c.iter().all(LaurentPoly::all_m_even));
    }

    #[test]
    fn index_errors() {
        assert!(t().coeff_c(5).is_err());
        assert!(t().coeff_c(-1).is_err());
        assert!(t().coeff_gamma(7).is_err());
        assert!(t().initial_p(4).is_err());
        assert!(t().initial_q(1).is_err());
        assert!(t().initial_q(-4).is_err());
        assert!(eta(1).is_err());
        assert!(t().epsilon(0).is_err());
    }

    #[test]
    fn initial_values() {
        let p0 = parse::ratfn("(-1+L*M^12)*(1+L*M^12)^2/(1+L*M^10)^3").unwrap();
        assert_eq!(t().initial_p(0).unwrap(), &p0);
        let q1 = parse::ratfn("-M^12*(1+L*M^14)^2/(L*(-1+M)*(1+M))").unwrap();
        assert_eq!(t().initial_q(-1).unwrap(), &q1);
        let p2 = t().initial_p(2).unwrap();
        assert!(p2.has_unit_den());
        assert_eq!(p2.num().len(), 12);
        assert!(p2.num().all_m_even());
        for i in [2, 3] {
            assert!(t().initial_p(i).unwrap().has_unit_den());
            assert!(t().initial_q(-i).unwrap().has_unit_den());
        }
    }

    #[test]
    fn eta_and_nongeom() {
        assert_eq!(eta(2).unwrap(), LaurentPoly::m_l(22, 0));
        assert_eq!(eta(5).unwrap(), LaurentPoly::one());
        assert_eq!(nongeom(3), Some(poly("1 - L*M^24").unwrap()));
        assert_eq!(nongeom(-3), Some(poly("L - 1").unwrap()));
        assert_eq!(nongeom(-6), Some(poly("L - M^12").unwrap()));
        assert_eq!(nongeom(4), None);
        assert_eq!(nongeom(0), None);
    }

    #[test]
    fn epsilon_branches() {
        let c = &t().c_unit;
        assert_eq!(t().epsilon(2).unwrap(), RationalFn::one());
        assert_eq!(t().epsilon(-2).unwrap(), c.scale_monomial(&Rational::one(), Exp::new(-28, 0)).unwrap());
        // the generic branch continued to -2 is c M^16, not the tabulated c M^-28
        assert_eq!(t().epsilon_generic(-2).unwrap(), c.scale_monomial(&Rational::one(), Exp::new(16, 0)).unwrap());
        assert_eq!(t().epsilon(-3).unwrap(), c.scale_monomial(&Rational::one(), Exp::new(0, 0)).unwrap());
    }
}
