//! The GL(2,Z) duality between `K_n` and the mirror of `K_{-n}`, checked two
//! independent ways: on B-polynomials with integral monomial maps, and on
//! `P_n`/`Q_{-n}` with half-exponent maps and the i-power rule.

use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly};
use crate::parse;
use crate::ratfn::RationalFn;
use crate::rational::Rational;
use crate::recursion::{A2Normalization, Family};
use crate::subst::{GeneralSubst, Half, VarImage};
use crate::tables::{eta, nongeom, nongeom_candidate, FamilyTables};

/// `B(M^2, L) = A(M, L)`; only defined when every M-exponent is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPoly(LaurentPoly);

impl BPoly {
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }
}

pub fn to_b(p: &LaurentPoly) -> Result<BPoly> {
    if let Some(e) = p.exponents().find(|e| e.m % 2 != 0) {
        return Err(Error::OddMExponent(e.m));
    }
    Ok(BPoly(LaurentPoly::from_terms(
        p.terms().map(|(e, c)| (Exp::new(e.m / 2, e.l), c.clone())),
    )))
}

/// `(M, L) -> (M, L M^(2n-5))`.
pub fn duality_left(n: i64) -> GeneralSubst {
    GeneralSubst::shear(2 * n - 5)
}

/// `(M, L) -> (-L^-1, L^(2n+5) M^-1)`.
pub fn duality_right(n: i64) -> GeneralSubst {
    GeneralSubst::new(VarImage::neg_mono(0, -1), VarImage::mono(-1, 2 * n + 5))
}

/// `(M, L) -> (sqrt(M), L M^-5)`.
pub fn minus_subst() -> GeneralSubst {
    GeneralSubst::new(VarImage::new(false, Half::halves(1), Half(0)), VarImage::mono(-5, 1))
}

/// `(M, L) -> (i / sqrt(L), L^5 M^-1)`.
pub fn plus_subst() -> GeneralSubst {
    GeneralSubst::new(VarImage::new(false, Half(0), Half::halves(-1)), VarImage::mono(-1, 5)).with_i_power()
}

/// Both sides of `B_{-n}(M, L M^(2n-5)) = (-L)^n M^(3(2n^2-7n+7)) B_n(-1/L, L^(2n+5)/M) eta_n`.
pub fn duality_sides(family: &Family, n: i64, norm: A2Normalization) -> Result<(LaurentPoly, LaurentPoly)> {
    if n <= 1 {
        return Err(Error::Domain(format!("duality requires n > 1, got {n}")));
    }
    let b_pos = to_b(family.compute_a(n, norm)?.expect_poly()?)?;
    let b_neg = to_b(family.compute_a(-n, norm)?.expect_poly()?)?;
    let lhs = duality_left(n).apply(b_neg.poly())?;
    let unit = Exp::new(3 * (2 * n * n - 7 * n + 7), n);
    let rhs = &duality_right(n)
        .apply(b_pos.poly())?
        .monomial_mul(&Rational::sign_power(n), unit)?
        * &eta(n)?;
    Ok((lhs, rhs))
}

pub fn verify_theorem2(family: &Family, n: i64, norm: A2Normalization) -> Result<bool> {
    let (lhs, rhs) = duality_sides(family, n, norm)?;
    Ok(lhs == rhs)
}

/// Runs the `n = 2` duality under both `A_{-2}` conventions and returns the
/// ones that satisfy it.
pub fn duality_passing_normalizations(family: &Family) -> Result<Vec<A2Normalization>> {
    let mut out = Vec::new();
    for norm in [A2Normalization::Tabulated, A2Normalization::Generic] {
        if verify_theorem2(family, 2, norm)? {
            out.push(norm);
        }
    }
    Ok(out)
}

/// Both sides of `Q_{-n}(sqrt(M), L/M^5) = (-L)^n M^(n+13) P_n(i/sqrt(L), L^5/M)`.
pub fn pduality_sides(family: &Family, n: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    if n <= 1 {
        return Err(Error::Domain(format!("duality requires n > 1, got {n}")));
    }
    let q = family.compute_q(-n)?;
    let p = family.compute_p(n)?;
    let lhs = minus_subst().apply(q.expect_poly()?)?;
    let rhs = plus_subst()
        .with_multiplier(n % 2 != 0, Exp::new(n + 13, n))
        .apply(p.expect_poly()?)?;
    Ok((lhs, rhs))
}

pub fn verify_pduality(family: &Family, n: i64) -> Result<bool> {
    let (lhs, rhs) = pduality_sides(family, n)?;
    Ok(lhs == rhs)
}

/// `c_k^-` and `c_k^+`: the recursion coefficients under the two
/// substitutions that relate the P- and Q-recursions.
pub fn substituted_coeffs(tables: &FamilyTables, k: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    let c = tables.coeff_c(k)?;
    Ok((minus_subst().apply(c)?, plus_subst().apply(c)?))
}

/// `(c_k^- / c_4^-) (-L M)^(k-4) = c_k^+ / c_4^+` for `0 <= k <= 3`.
pub fn verify_subst_coeff_identity(tables: &FamilyTables, k: i64) -> Result<bool> {
    if !(0..=3).contains(&k) {
        return Err(Error::IndexOutOfRange { what: "substituted coefficient", index: k });
    }
    let (ck_minus, ck_plus) = substituted_coeffs(tables, k)?;
    let (c4_minus, c4_plus) = substituted_coeffs(tables, 4)?;
    let sign = Rational::sign_power(k - 4);
    let lhs = RationalFn::new(ck_minus.monomial_mul(&sign, Exp::new(k - 4, k - 4))?, c4_minus)?;
    let rhs = RationalFn::new(ck_plus, c4_plus)?;
    Ok(lhs == rhs)
}

/// `c_0^- = L^4 (1 + L)^4 (1 - M)^4 / M^2`.
pub fn verify_c0_minus(tables: &FamilyTables) -> Result<bool> {
    let (c0_minus, _) = substituted_coeffs(tables, 0)?;
    Ok(c0_minus == parse::poly("L^4*(1+L)^4*(1-M)^4*M^-2")?)
}

/// `A_n` is divisible by its non-geometric factor. Only defined for nonzero
/// multiples of 3.
pub fn verify_nongeom(family: &Family, n: i64) -> Result<bool> {
    let f = nongeom(n).ok_or_else(|| Error::Domain(format!("no non-geometric factor for n = {n}")))?;
    let a = family.compute_a(n, A2Normalization::Tabulated)?;
    Ok(a.expect_poly()?.exact_div(&f)?.is_some())
}

/// Whether the factor shape, evaluated at `n`, divides `A_n`. Used as the
/// negative control for `3 ∤ n`.
pub fn candidate_divides(family: &Family, n: i64) -> Result<bool> {
    let f = nongeom_candidate(n).ok_or_else(|| Error::Domain("n must be nonzero".into()))?;
    let a = family.compute_a(n, A2Normalization::Tabulated)?;
    Ok(a.expect_poly()?.exact_div(&f)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly;

    #[test]
    fn to_b_examples() {
        assert_eq!(to_b(&poly("1 + L*M^4").unwrap()).unwrap().into_poly(), poly("1 + L*M^2").unwrap());
        assert_eq!(to_b(&poly("M^-6").unwrap()).unwrap().into_poly(), poly("M^-3").unwrap());
        assert_eq!(to_b(&poly("M^3 + 1").unwrap()), Err(Error::OddMExponent(3)));
    }

    #[test]
    fn duality_matrix_is_in_gl2z() {
        // images of M and L give the columns
        for n in 2..6 {
            let s = duality_right(n);
            let det = s.m.m.0 * s.l.l.0 - s.l.m.0 * s.m.l.0;
            assert_eq!(det, -4, "doubled entries, so det * 4");
        }
    }

    #[test]
    fn c0_minus_closed_form() {
        assert!(verify_c0_minus(FamilyTables::standard()).unwrap());
    }

    #[test]
    fn subst_identity_range() {
        assert!(verify_subst_coeff_identity(FamilyTables::standard(), 4).is_err());
        assert!(verify_subst_coeff_identity(FamilyTables::standard(), -1).is_err());
    }

    #[test]
    fn subst_identity_detects_corruption() {
        let mut bad = FamilyTables::standard().clone();
        bad.c[1] = &bad.c[1] + &poly("L^2*M^4").unwrap();
        assert!(!verify_subst_coeff_identity(&bad, 1).unwrap());
    }
}
