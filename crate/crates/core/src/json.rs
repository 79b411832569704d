//! JSON encoding of polynomials as term lists.
//!
//! A term is `{"l": int, "m": int, "num": "decimal", "den": "decimal"}`; a
//! polynomial is the list of its terms in ascending `(l, m)` order. A
//! rational function is `{"num": [...], "den": [...]}`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly};
use crate::ratfn::RationalFn;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub l: i64,
    pub m: i64,
    pub num: String,
    pub den: String,
}

pub fn terms(p: &LaurentPoly) -> Vec<Term> {
    p.terms()
        .map(|(e, c)| Term { l: e.l, m: e.m, num: c.numer().to_string(), den: c.denom().to_string() })
        .collect()
}

/// Rejects out-of-order or repeated exponents and zero coefficients, so that
/// every accepted list is the canonical encoding of exactly one polynomial.
pub fn from_terms(ts: &[Term]) -> Result<LaurentPoly> {
    let mut prev: Option<Exp> = None;
    let mut out = Vec::with_capacity(ts.len());
    for t in ts {
        let e = Exp::new(t.m, t.l);
        if prev.is_some_and(|p| p >= e) {
            return Err(Error::Parse(format!("term (l={}, m={}) out of canonical order", t.l, t.m)));
        }
        prev = Some(e);
        let num: BigInt = t.num.parse().map_err(|_| Error::Parse(format!("bad numerator {:?}", t.num)))?;
        let den: BigInt = t.den.parse().map_err(|_| Error::Parse(format!("bad denominator {:?}", t.den)))?;
        let c = Rational::new(num, den)?;
        if c.is_zero() {
            return Err(Error::Parse(format!("zero coefficient at (l={}, m={})", t.l, t.m)));
        }
        out.push((e, c));
    }
    Ok(LaurentPoly::from_terms(out))
}

#[derive(Serialize, Deserialize)]
struct RatFnTerms {
    num: Vec<Term>,
    den: Vec<Term>,
}

pub fn poly_to_string(p: &LaurentPoly) -> String {
    serde_json::to_string(&terms(p)).expect("term list serializes")
}

pub fn ratfn_to_string(f: &RationalFn) -> String {
    serde_json::to_string(&RatFnTerms { num: terms(f.num()), den: terms(f.den()) }).expect("term lists serialize")
}

pub fn poly_from_str(s: &str) -> Result<LaurentPoly> {
    let ts: Vec<Term> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_terms(&ts)
}

pub fn ratfn_from_str(s: &str) -> Result<RationalFn> {
    let raw: RatFnTerms = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    RationalFn::new(from_terms(&raw.num)?, from_terms(&raw.den)?)
}
