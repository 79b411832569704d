//! Monomial changes of variables with signs and half-integer exponents.
//!
//! A substitution sends `M -> phase_m * M^a L^b` and `L -> phase_l * M^c L^d`
//! where `a, b, c, d` may be multiples of 1/2. The optional i-power rule
//! multiplies each term `M^e ...` by `(-1)^(e/2)`, which is how
//! `M -> i*sqrt(L)` or `M -> i/sqrt(L)` is applied without complex
//! coefficients: `(i*sqrt(L))^(2k) = (-1)^k L^k`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly};
use crate::rational::Rational;

/// A multiple of 1/2, stored as its double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Half(pub i64);

impl Half {
    pub const fn int(k: i64) -> Self {
        Half(2 * k)
    }

    /// `k / 2`.
    pub const fn halves(k: i64) -> Self {
        Half(k)
    }
}

/// Image of one variable: `phase * M^m L^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarImage {
    pub negate: bool,
    pub m: Half,
    pub l: Half,
}

impl VarImage {
    pub const fn new(negate: bool, m: Half, l: Half) -> Self {
        VarImage { negate, m, l }
    }

    /// An integral monomial image `M^m L^l`.
    pub const fn mono(m: i64, l: i64) -> Self {
        VarImage::new(false, Half::int(m), Half::int(l))
    }

    pub const fn neg_mono(m: i64, l: i64) -> Self {
        VarImage::new(true, Half::int(m), Half::int(l))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSubst {
    pub m: VarImage,
    pub l: VarImage,
    /// Apply `(-1)^(e/2)` to each term with M-exponent `e`.
    pub i_power: bool,
    pub multiplier_negate: bool,
    pub multiplier: Exp,
}

impl GeneralSubst {
    pub fn new(m: VarImage, l: VarImage) -> Self {
        GeneralSubst {
            m,
            l,
            i_power: false,
            multiplier_negate: false,
            multiplier: Exp::ZERO,
        }
    }

    pub fn identity() -> Self {
        Self::new(VarImage::mono(1, 0), VarImage::mono(0, 1))
    }

    /// `L -> L M^s`.
    pub fn shear(s: i64) -> Self {
        Self::new(VarImage::mono(1, 0), VarImage::mono(s, 1))
    }

    pub fn with_i_power(mut self) -> Self {
        self.i_power = true;
        self
    }

    /// Multiplies the result by `(+/-1) * M^e.m L^e.l`.
    pub fn with_multiplier(mut self, negate: bool, e: Exp) -> Self {
        self.multiplier_negate = negate;
        self.multiplier = e;
        self
    }

    fn image_exp(&self, e: Exp) -> Result<Exp> {
        let twice = |a: Half, b: Half| -> Result<i64> {
            e.m.checked_mul(a.0)
                .zip(e.l.checked_mul(b.0))
                .and_then(|(x, y)| x.checked_add(y))
                .ok_or(Error::ExponentOverflow)
        };
        let m2 = twice(self.m.m, self.l.m)?;
        let l2 = twice(self.m.l, self.l.l)?;
        if m2 % 2 != 0 || l2 % 2 != 0 {
            return Err(Error::NonIntegralExponent);
        }
        Exp::new(m2 / 2, l2 / 2).checked_add(self.multiplier)
    }

    fn sign(&self, e: Exp) -> bool {
        let mut neg = self.multiplier_negate;
        neg ^= self.m.negate && e.m.rem_euclid(2) == 1;
        neg ^= self.l.negate && e.l.rem_euclid(2) == 1;
        if self.i_power {
            neg ^= (e.m / 2).rem_euclid(2) == 1;
        }
        neg
    }

    /// Applies the substitution. A ring homomorphism (up to the fixed
    /// multiplier) on inputs satisfying the preconditions.
    pub fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if self.i_power {
            if let Some(e) = p.exponents().find(|e| e.m % 2 != 0) {
                return Err(Error::OddMExponent(e.m));
            }
        }
        let mut out: BTreeMap<Exp, Rational> = BTreeMap::new();
        for (e, c) in p.terms() {
            let img = self.image_exp(e)?;
            let c = if self.sign(e) { -c } else { c.clone() };
            let slot = out.entry(img).or_insert_with(Rational::zero);
            *slot += &c;
        }
        Ok(LaurentPoly::from_terms(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly;

    fn p(s: &str) -> LaurentPoly {
        poly(s).unwrap()
    }

    #[test]
    fn shear_example() {
        assert_eq!(GeneralSubst::shear(8).apply(&p("L")).unwrap(), p("L*M^8"));
    }

    #[test]
    fn half_exponent_example() {
        let sqrt_m = GeneralSubst::new(VarImage::new(false, Half::halves(1), Half(0)), VarImage::mono(0, 1));
        assert_eq!(sqrt_m.apply(&p("M^4 + L*M^12")).unwrap(), p("M^2 + L*M^6"));
        assert_eq!(sqrt_m.apply(&p("M^3")), Err(Error::NonIntegralExponent));
    }

    #[test]
    fn i_power_example() {
        let i_sqrt_l = GeneralSubst::new(VarImage::new(false, Half(0), Half::halves(1)), VarImage::mono(0, 1))
            .with_i_power();
        assert_eq!(i_sqrt_l.apply(&p("M^2")).unwrap(), p("-L"));
        assert_eq!(i_sqrt_l.apply(&p("M^4 + 3")).unwrap(), p("L^2 + 3"));
        assert_eq!(i_sqrt_l.apply(&p("M^2 + M")), Err(Error::OddMExponent(1)));
    }

    #[test]
    fn signed_images_and_multiplier() {
        // M -> -1/L, L -> L^3/M, times -M^2
        let s = GeneralSubst::new(VarImage::neg_mono(0, -1), VarImage::mono(-1, 3))
            .with_multiplier(true, Exp::new(2, 0));
        assert_eq!(s.apply(&p("M*L")).unwrap(), p("L^2*M"));
        assert_eq!(s.apply(&p("M^2 + 1")).unwrap(), p("-M^2*L^-2 - M^2"));
    }

    #[test]
    fn collisions_combine() {
        // M -> L, L -> L collapses M + L to 2L
        let s = GeneralSubst::new(VarImage::mono(0, 1), VarImage::mono(0, 1));
        assert_eq!(s.apply(&p("M - 3*L")).unwrap(), p("-2*L"));
    }
}
