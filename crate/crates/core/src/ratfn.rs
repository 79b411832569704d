//! Formal quotients of Laurent polynomials.
//!
//! There is no multivariate GCD here. Quotients are compared by
//! cross-multiplication and shrunk only by [`RationalFn::reduce_by_basis`],
//! which strips known factors from numerator and denominator together.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly};
use crate::rational::Rational;

#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFn { num, den }.fold_unit_den())
    }

    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the stored denominator is exactly `1`.
    pub fn has_unit_den(&self) -> bool {
        self.den.is_one()
    }

    /// A monomial denominator is a unit of the Laurent ring; fold it into the
    /// numerator so polynomials always carry denominator `1`.
    /// Moves any monomial factor of the denominator into the numerator, so
    /// the denominator has minimal `M`- and `L`-exponents both zero.
    fn fold_unit_den(self) -> Self {
        if self.den.is_monomial() && !self.den.is_one() {
            let num = self
                .num
                .exact_div(&self.den)
                .expect("monomial division cannot overflow here")
                .expect("monomials divide everything");
            return RationalFn { num, den: LaurentPoly::one() };
        }
        let Some((lo, _)) = self.den.exponent_box() else { return self };
        if lo == Exp::new(0, 0) {
            return self;
        }
        let shift = Exp::new(-lo.m, -lo.l);
        let one = Rational::one();
        match (self.num.monomial_mul(&one, shift), self.den.monomial_mul(&one, shift)) {
            (Ok(num), Ok(den)) => RationalFn { num, den },
            _ => self,
        }
    }

    /// The value as a Laurent polynomial when the denominator divides the
    /// numerator exactly.
    pub fn to_poly(&self) -> Result<Option<LaurentPoly>> {
        if self.den.is_one() {
            return Ok(Some(self.num.clone()));
        }
        self.num.exact_div(&self.den)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RationalFn) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(RationalFn {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
        .fold_unit_den())
    }

    pub fn scale_monomial(&self, coeff: &Rational, shift: Exp) -> Result<Self> {
        Ok(RationalFn {
            num: self.num.monomial_mul(coeff, shift)?,
            den: self.den.clone(),
        })
    }

    /// Strips every basis factor that divides both numerator and
    /// denominator, repeating until none does. Monomial basis entries are
    /// units and are handled by folding a monomial denominator away.
    pub fn reduce_by_basis(&self, basis: &[LaurentPoly]) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        if num.is_zero() {
            return RationalFn::zero();
        }
        let mut progress = true;
        while progress {
            progress = false;
            for b in basis.iter().filter(|b| !b.is_zero() && !b.is_monomial()) {
                // the denominator is small; test it before the numerator
                while let Ok(Some(dq)) = den.exact_div(b) {
                    let Ok(Some(nq)) = num.exact_div(b) else { break };
                    den = dq;
                    num = nq;
                    progress = true;
                }
            }
        }
        RationalFn { num, den }.fold_unit_den()
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(num: LaurentPoly) -> Self {
        RationalFn { num, den: LaurentPoly::one() }
    }
}

/// Equality by cross-multiplication.
impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        // a common denominator that is already present keeps backward sums small
        if let Ok(Some(k)) = self.den.exact_div(&rhs.den) {
            return RationalFn { num: &self.num + &(&rhs.num * &k), den: self.den.clone() };
        }
        if let Ok(Some(k)) = rhs.den.exact_div(&self.den) {
            return RationalFn { num: &(&self.num * &k) + &rhs.num, den: rhs.den.clone() };
        }
        RationalFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &-rhs
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .fold_unit_den()
    }
}

impl Mul<&LaurentPoly> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &LaurentPoly) -> RationalFn {
        RationalFn { num: &self.num * rhs, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
