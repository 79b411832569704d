//! A small reader for expressions in `M` and `L`.
//!
//! Grammar: sums and differences of products, `*` and `/`, integer powers
//! (`^-3` allowed), parentheses, integer literals. Juxtaposition is not
//! multiplication. Everything evaluates in [`RationalFn`], so the family
//! tables can be written in their factored form.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ratfn::RationalFn;
use crate::rational::Rational;

/// Parses an expression whose value is a Laurent polynomial.
pub fn poly(src: &str) -> Result<LaurentPoly> {
    ratfn(src)?
        .to_poly()?
        .ok_or_else(|| Error::Parse(format!("not a Laurent polynomial: {src}")))
}

/// Parses an arbitrary quotient of polynomials.
pub fn ratfn(src: &str) -> Result<RationalFn> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFn> {
        let mut acc = if self.eat(b'-') {
            -&self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFn> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let d = self.factor()?;
                acc = acc.div(&d).map_err(|_| self.error("division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFn> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let digits = self.digits()?;
        let k: i32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
        base.pow(if neg { -k } else { k })
            .map_err(|_| self.error("negative power of zero"))
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RationalFn> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(b'M') => {
                self.pos += 1;
                Ok(LaurentPoly::m_l(1, 0).into())
            }
            Some(b'L') => {
                self.pos += 1;
                Ok(LaurentPoly::m_l(0, 1).into())
            }
            Some(c) if c.is_ascii_digit() => {
                let n: Rational = self.digits()?.parse()?;
                Ok(LaurentPoly::constant(n).into())
            }
            _ => Err(self.error("expected M, L, an integer or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Exp;

    #[test]
    fn parses_factored_forms() {
        let p = poly("(-1 + L*M^12)*(1 + L*M^12)").unwrap();
        assert_eq!(p, poly("-1 + L^2*M^24").unwrap());
        let q = poly("-L^2*(-1+M)^2*M^16").unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(q.coeff(Exp::new(17, 2)), Some(&Rational::from(2)));
    }

    #[test]
    fn rational_coefficients_and_negative_powers() {
        let p = poly("1/2*M^-3 - 3/4").unwrap();
        assert_eq!(p.coeff(Exp::new(-3, 0)), Some(&Rational::new(1, 2).unwrap()));
        assert!(poly("1/(1+M)").is_err());
        assert!(ratfn("1/(1+M)").is_ok());
    }

    #[test]
    fn errors() {
        assert!(ratfn("M +").is_err());
        assert!(ratfn("(M").is_err());
        assert!(ratfn("M L").is_err());
        assert!(ratfn("1/0").is_err());
        assert!(ratfn("X").is_err());
    }

    #[test]
    fn display_round_trip() {
        let p = poly("-1 + L*M^8 - 2*L*M^10 + L^6*M^62 - 5/3*M^-4*L^-1").unwrap();
        assert_eq!(poly(&p.to_string()).unwrap(), p);
    }
}
