//! Sparse bivariate Laurent polynomials in `M` and `L` with rational
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Exp`], whose ordering is
//! lexicographic in `(l, m)`. That ordering is also the serialization order,
//! so two equal polynomials always print and serialize identically.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exponent pair of the monomial `M^m L^l`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exp {
    pub m: i64,
    pub l: i64,
}

impl Exp {
    pub const ZERO: Exp = Exp { m: 0, l: 0 };

    pub const fn new(m: i64, l: i64) -> Self {
        Exp { m, l }
    }

    pub fn checked_add(self, o: Exp) -> Result<Exp> {
        Ok(Exp {
            m: self.m.checked_add(o.m).ok_or(Error::ExponentOverflow)?,
            l: self.l.checked_add(o.l).ok_or(Error::ExponentOverflow)?,
        })
    }

    pub fn checked_sub(self, o: Exp) -> Result<Exp> {
        Ok(Exp {
            m: self.m.checked_sub(o.m).ok_or(Error::ExponentOverflow)?,
            l: self.l.checked_sub(o.l).ok_or(Error::ExponentOverflow)?,
        })
    }

    fn add_or_panic(self, o: Exp) -> Exp {
        self.checked_add(o).expect("exponent overflow")
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.l, self.m).cmp(&(other.l, other.m))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^{} L^{}", self.m, self.l)
    }
}

/// A Laurent polynomial in canonical form: no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Exp::ZERO)
    }

    pub fn monomial(c: Rational, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `M^m L^l` with coefficient one.
    pub fn m_l(m: i64, l: i64) -> Self {
        Self::monomial(Rational::one(), Exp::new(m, l))
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Rational)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, e: Exp, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(Exp::ZERO).is_some_and(Rational::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(l, m)` ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exp, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn exponents(&self) -> impl Iterator<Item = Exp> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, e: Exp) -> Option<&Rational> {
        self.terms.get(&e)
    }

    /// Greatest term in the `(l, m)` order.
    pub fn leading_term(&self) -> Option<(Exp, &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn trailing_term(&self) -> Option<(Exp, &Rational)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Componentwise minimum and maximum exponents, or `None` for zero.
    pub fn exponent_box(&self) -> Option<(Exp, Exp)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| {
            (
                Exp::new(lo.m.min(e.m), lo.l.min(e.l)),
                Exp::new(hi.m.max(e.m), hi.l.max(e.l)),
            )
        }))
    }

    pub fn all_m_even(&self) -> bool {
        self.terms.keys().all(|e| e.m % 2 == 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by the unit `coeff * M^shift.m * L^shift.l`.
    pub fn monomial_mul(&self, coeff: &Rational, shift: Exp) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::InvalidUnit);
        }
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            terms.insert(e.checked_add(shift)?, v * coeff);
        }
        Ok(LaurentPoly { terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The shear `L -> L M^s`, mapping `M^m L^l` to `M^(m + s l) L^l`.
    pub fn shear_l(&self, s: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let m = s
                .checked_mul(e.l)
                .and_then(|t| t.checked_add(e.m))
                .ok_or(Error::ExponentOverflow)?;
            terms.insert(Exp::new(m, e.l), v.clone());
        }
        Ok(LaurentPoly { terms })
    }

    /// Exact division in the Laurent ring `Q[M^±1, L^±1]`.
    ///
    /// Returns `Ok(None)` when `d` does not divide `self`. The quotient of a
    /// genuine division has its exponents inside the box
    /// `[min(p) - min(d), max(p) - max(d)]`, so each reduction step checks the
    /// candidate quotient monomial against that box; leaving it proves
    /// non-divisibility and guarantees termination.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        let (d_lead, d_lead_c) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let Some((p_lo, p_hi)) = self.exponent_box() else {
            return Ok(Some(Self::zero()));
        };
        if d.is_monomial() {
            let inv = d_lead_c.recip()?;
            let shift = Exp::ZERO.checked_sub(d_lead)?;
            return self.monomial_mul(&inv, shift).map(Some);
        }
        let (d_lo, d_hi) = d.exponent_box().expect("nonzero");
        let q_lo = p_lo.checked_sub(d_lo)?;
        let q_hi = p_hi.checked_sub(d_hi)?;
        if q_lo.m > q_hi.m || q_lo.l > q_hi.l {
            return Ok(None);
        }
        let d_lead_inv = d_lead_c.recip()?;
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((r_lead, r_c)) = rem.leading_term() {
            let q_e = r_lead.checked_sub(d_lead)?;
            if q_e.m < q_lo.m || q_e.m > q_hi.m || q_e.l < q_lo.l || q_e.l > q_hi.l {
                return Ok(None);
            }
            let q_c = r_c * &d_lead_inv;
            for (e, v) in &d.terms {
                rem.add_term(e.checked_add(q_e)?, &-(v * &q_c));
            }
            quot.insert(q_e, q_c);
        }
        Ok(Some(LaurentPoly { terms: quot }))
    }

    /// The coefficient of the highest power of `L`, as a polynomial in `M`.
    pub fn leading_coeff_l(&self) -> Result<LaurentPoly> {
        let (top, _) = self.leading_term().ok_or(Error::ZeroPolynomial)?;
        Ok(LaurentPoly {
            terms: self
                .terms
                .range(Exp::new(i64::MIN, top.l)..)
                .map(|(e, c)| (Exp::new(e.m, 0), c.clone()))
                .collect(),
        })
    }

    /// Evaluates at rational `M`, `L`; both must be nonzero when negative
    /// exponents occur.
    pub fn eval(&self, m: &Rational, l: &Rational) -> Result<Rational> {
        fn pow(x: &Rational, k: i64) -> Result<Rational> {
            let base = if k < 0 { x.recip()? } else { x.clone() };
            let mut acc = Rational::one();
            for _ in 0..k.unsigned_abs() {
                acc = acc * &base;
            }
            Ok(acc)
        }
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            sum += &(c * &pow(m, e.m)? * pow(l, e.l)?);
        }
        Ok(sum)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut acc, other) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (e, c) in &other.terms {
            acc.add_term(*e, c);
        }
        acc
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc = self.clone();
        for (e, c) in &rhs.terms {
            acc.add_term(*e, &-c);
        }
        acc
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Panics on exponent overflow.
impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = LaurentPoly::zero();
        for (e1, c1) in &small.terms {
            for (e2, c2) in &big.terms {
                acc.add_term(e1.add_or_panic(*e2), &(c1 * c2));
            }
        }
        acc
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical `(l, m)` order with explicit signs, e.g. `-1 + L*M^8 - 2*L*M^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || *e == Exp::ZERO {
                factors.push(mag.to_string());
            }
            match e.l {
                0 => {}
                1 => factors.push("L".into()),
                l => factors.push(format!("L^{l}")),
            }
            match e.m {
                0 => {}
                1 => factors.push("M".into()),
                m => factors.push(format!("M^{m}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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
    fn add_examples() {
        assert_eq!(&p("M + L") + &p("-M"), p("L"));
        assert_eq!(&LaurentPoly::zero() + &p("1 + L*M^3"), p("1 + L*M^3"));
        assert_eq!(&p("1 + L*M^12") + &p("-1 + L*M^12"), p("2*L*M^12"));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let z = &p("M + L") - &p("L + M");
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("M + L") * &p("M - L"), p("M^2 - L^2"));
        assert_eq!(&p("1 - L*M^12") * &p("1 + L*M^12"), p("1 - L^2*M^24"));
        assert_eq!(&p("3 - M^-2") * &LaurentPoly::one(), p("3 - M^-2"));
    }

    #[test]
    fn monomial_mul_examples() {
        let one = Rational::one();
        assert_eq!(p("1 + L").monomial_mul(&one, Exp::new(4, 0)).unwrap(), p("M^4 + L*M^4"));
        assert_eq!(p("M^2").monomial_mul(&-one.clone(), Exp::new(-2, 0)).unwrap(), p("-1"));
        assert_eq!(p("L").monomial_mul(&one, Exp::new(0, -1)).unwrap(), p("1"));
        assert_eq!(p("L").monomial_mul(&Rational::zero(), Exp::ZERO), Err(Error::InvalidUnit));
    }

    #[test]
    fn monomial_mul_overflow_is_an_error() {
        let r = p("M").monomial_mul(&Rational::one(), Exp::new(i64::MAX, 0));
        assert_eq!(r, Err(Error::ExponentOverflow));
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn mul_overflow_panics() {
        let a = LaurentPoly::m_l(i64::MAX, 0);
        let _ = &a * &a;
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("1 - L^2*M^24").exact_div(&p("1 + L*M^12")).unwrap(), Some(p("1 - L*M^12")));
        assert_eq!(p("M^2 + L").exact_div(&p("M")).unwrap(), Some(p("M + L*M^-1")));
        assert_eq!(p("1 + L").exact_div(&p("1 + M")).unwrap(), None);
        assert_eq!(p("1 + L").exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(LaurentPoly::zero().exact_div(&p("1 + M")).unwrap(), Some(LaurentPoly::zero()));
    }

    #[test]
    fn exact_div_with_units_in_divisor() {
        // (M^-3 L)(1 - M) divides (M^-3 L)(1 - M)(2 + L M^5)
        let d = p("L*M^-3 - L*M^-2");
        let q = p("2 + L*M^5");
        assert_eq!((&d * &q).exact_div(&d).unwrap(), Some(q));
        assert_eq!(p("1 + M^2").exact_div(&p("1 + M")).unwrap(), None);
    }

    #[test]
    fn leading_coeff_examples() {
        assert_eq!(p("1 + L*M + L").leading_coeff_l().unwrap(), p("M + 1"));
        assert_eq!(p("M^-3").leading_coeff_l().unwrap(), p("M^-3"));
        assert_eq!(LaurentPoly::zero().leading_coeff_l(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_is_canonical() {
        let q = p("L*M^8 - 2*L*M^10 - 1 + M^-3");
        assert_eq!(q.to_string(), "M^-3 - 1 + L*M^8 - 2*L*M^10");
        assert_eq!(p("-1/2*L^2").to_string(), "-1/2*L^2");
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let b = p("1 + L*M^10");
        assert_eq!(b.pow(3), &(&b * &b) * &b);
        assert_eq!(b.pow(0), LaurentPoly::one());
    }
}
