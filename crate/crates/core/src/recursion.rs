//! Generation of `P_n`, `Q_n`, `A_n` and `R_n` from the order-4 recursion.
//!
//! The recursion runs on denominator-cleared sequences: `P~_n = P_n (1 + L M^10)^3`
//! and `Q~_n = Q_n L^3 (1 - M)^3 (1 + M)^3` are Laurent polynomials for every
//! index, obey the same linear recursion, and one exact division at the end
//! recovers `P_n` or `Q_n`. For `|n| >= 2` that division must succeed.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentPoly};
use crate::parse;
use crate::ratfn::RationalFn;
use crate::rational::Rational;
use crate::report::{Check, Report};
use crate::tables::{family_basis, FamilyTables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    P,
    Q,
    A,
    R,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Form::P => "P",
            Form::Q => "Q",
            Form::A => "A",
            Form::R => "R",
        };
        f.write_str(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnotClass {
    Hyperbolic,
    Torus,
}

impl KnotClass {
    pub fn of(n: i64) -> Self {
        if (-1..=1).contains(&n) {
            KnotClass::Torus
        } else {
            KnotClass::Hyperbolic
        }
    }
}

/// Torus-knot names of the three non-hyperbolic members.
pub fn torus_name(n: i64) -> Option<&'static str> {
    match n {
        -1 => Some("5_1"),
        0 => Some("8_19"),
        1 => Some("10_124"),
        _ => None,
    }
}

/// Unit convention for `A_{-2}`, the one member whose tabulated
/// normalization departs from the `n < -2` formula.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum A2Normalization {
    /// `A_{-2}(M, L) = Q_{-2}(M, L M^-8) M^20`: the generic shear with the
    /// tabulated unit `M^20` in place of the generic `M^-24`. This is the
    /// convention under which `eta_2 = M^22` and `eps_{-2} = c M^-28` hold.
    #[default]
    Tabulated,
    /// `A_{-2}(M, L) = Q_{-2}(M, L M^-8) M^-24`, the `n < -2` formula at `n = -2`.
    Generic,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub n: i64,
    pub form: Form,
    pub value: RationalFn,
    pub is_polynomial: bool,
    pub knot_class: KnotClass,
}

impl FamilyMember {
    fn new(n: i64, form: Form, value: RationalFn) -> Self {
        let value = value.reduce_by_basis(&family_basis());
        FamilyMember {
            n,
            form,
            is_polynomial: value.has_unit_den(),
            value,
            knot_class: KnotClass::of(n),
        }
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn poly(&self) -> Option<&LaurentPoly> {
        self.is_polynomial.then(|| self.value.num())
    }

    pub fn expect_poly(&self) -> Result<&LaurentPoly> {
        self.poly()
            .ok_or_else(|| Error::Domain(format!("{}_{} is not a Laurent polynomial", self.form, self.n)))
    }
}

/// The family generator. Holds the tables and memoizes the cleared sequences
/// and finished members; safe to share between threads.
pub struct Family {
    tables: FamilyTables,
    p_clear: LaurentPoly,
    q_clear: LaurentPoly,
    /// `P~_0, P~_1, ...`
    p_seq: RwLock<Vec<LaurentPoly>>,
    /// `Q~_0, Q~_{-1}, ...`
    q_seq: RwLock<Vec<LaurentPoly>>,
    members: RwLock<HashMap<(Form, i64), Arc<FamilyMember>>>,
}

impl Default for Family {
    fn default() -> Self {
        Family::new(FamilyTables::standard().clone())
    }
}

impl Family {
    pub fn new(tables: FamilyTables) -> Self {
        Family {
            tables,
            p_clear: parse::poly("(1+L*M^10)^3").expect("static"),
            q_clear: parse::poly("L^3*(1-M)^3*(1+M)^3").expect("static"),
            p_seq: RwLock::new(Vec::new()),
            q_seq: RwLock::new(Vec::new()),
            members: RwLock::new(HashMap::new()),
        }
    }

    pub fn tables(&self) -> &FamilyTables {
        &self.tables
    }

    fn cleared_initial(init: &RationalFn, clear: &LaurentPoly, form: char, n: i64) -> Result<LaurentPoly> {
        (init * clear)
            .to_poly()?
            .ok_or(Error::DenominatorNotCleared { form, n })
    }

    /// `-(sum_{k<4} c_k x_k) / c_4`.
    fn step(&self, window: [&LaurentPoly; 4]) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        for (c, x) in self.tables.c.iter().zip(window) {
            acc = acc + c * x;
        }
        (-acc)
            .exact_div(&self.tables.c[4])?
            .ok_or_else(|| Error::Domain("c_4 is not a unit".into()))
    }

    /// Extends a cleared sequence up to `idx`. For P the window is
    /// `P~_{n-4..n-1}` with `c_k` on `P~_{n-4+k}`; for Q the sequence is
    /// stored as `Q~_0, Q~_{-1}, ...` and `c_k` multiplies `Q~_{m-k}` with
    /// `m = n + 4`, which is the same window read in storage order.
    fn extend(&self, seq: &RwLock<Vec<LaurentPoly>>, idx: usize, form: char) -> Result<LaurentPoly> {
        if let Some(v) = seq.read().expect("lock").get(idx) {
            return Ok(v.clone());
        }
        let mut seq = seq.write().expect("lock");
        while seq.len() <= idx {
            let i = seq.len();
            let next = if i < 4 {
                let (init, clear, n) = match form {
                    'P' => (&self.tables.p_init[i], &self.p_clear, i as i64),
                    _ => (&self.tables.q_init[i], &self.q_clear, -(i as i64)),
                };
                Self::cleared_initial(init, clear, form, n)?
            } else {
                let w = &seq[i - 4..i];
                self.step([&w[0], &w[1], &w[2], &w[3]])?
            };
            seq.push(next);
        }
        Ok(seq[idx].clone())
    }

    fn cached(&self, form: Form, n: i64) -> Option<Arc<FamilyMember>> {
        self.members.read().expect("lock").get(&(form, n)).cloned()
    }

    fn store(&self, m: FamilyMember) -> Arc<FamilyMember> {
        let m = Arc::new(m);
        self.members.write().expect("lock").insert((m.form, m.n), m.clone());
        m
    }

    /// `P_n` for `n >= 0`.
    pub fn compute_p(&self, n: i64) -> Result<Arc<FamilyMember>> {
        if n < 0 {
            return Err(Error::Domain(format!("P_n requires n >= 0, got {n}")));
        }
        if let Some(m) = self.cached(Form::P, n) {
            return Ok(m);
        }
        let value = if n <= 3 {
            self.tables.p_init[n as usize].clone()
        } else {
            let cleared = self.extend(&self.p_seq, n as usize, 'P')?;
            cleared
                .exact_div(&self.p_clear)?
                .map(RationalFn::from)
                .ok_or(Error::DenominatorNotCleared { form: 'P', n })?
        };
        let m = FamilyMember::new(n, Form::P, value);
        if n >= 2 && !m.is_polynomial {
            return Err(Error::DenominatorNotCleared { form: 'P', n });
        }
        Ok(self.store(m))
    }

    /// `Q_n` for `n <= 0`.
    pub fn compute_q(&self, n: i64) -> Result<Arc<FamilyMember>> {
        if n > 0 {
            return Err(Error::Domain(format!("Q_n requires n <= 0, got {n}")));
        }
        if let Some(m) = self.cached(Form::Q, n) {
            return Ok(m);
        }
        let value = if n >= -3 {
            self.tables.q_init[(-n) as usize].clone()
        } else {
            let cleared = self.extend(&self.q_seq, (-n) as usize, 'Q')?;
            cleared
                .exact_div(&self.q_clear)?
                .map(RationalFn::from)
                .ok_or(Error::DenominatorNotCleared { form: 'Q', n })?
        };
        let m = FamilyMember::new(n, Form::Q, value);
        if n <= -2 && !m.is_polynomial {
            return Err(Error::DenominatorNotCleared { form: 'Q', n });
        }
        Ok(self.store(m))
    }

    /// `A_n` for `|n| >= 2`, undoing the shear `L -> L M^{-4n}` and the
    /// normalizing unit.
    pub fn compute_a(&self, n: i64, norm: A2Normalization) -> Result<FamilyMember> {
        if let Some(name) = torus_name(n) {
            return Err(Error::TorusKnot { n, name });
        }
        let one = Rational::one();
        let value = if n >= 2 {
            self.compute_p(n)?.expect_poly()?.shear_l(4 * n)?
        } else {
            let q = self.compute_q(n)?;
            let unit = match (n, norm) {
                (-2, A2Normalization::Tabulated) => 20,
                _ => 4 * (3 * n * n + 11 * n + 4),
            };
            q.expect_poly()?.shear_l(4 * n)?.monomial_mul(&one, Exp::new(unit, 0))?
        };
        Ok(FamilyMember::new(n, Form::A, value.into()))
    }

    /// `R_n = P_n b^n` for `n >= 0`, `Q_n b^|n| c M^-8` for `n <= 0`; at
    /// `n = 0` both branches are computed and must agree.
    pub fn compute_r(&self, n: i64) -> Result<FamilyMember> {
        let via_p = |n: i64| -> Result<RationalFn> {
            Ok(&self.compute_p(n)?.value * &self.tables.b.pow(n as i32)?)
        };
        let via_q = |n: i64| -> Result<RationalFn> {
            let v = &(&self.compute_q(n)?.value * &self.tables.b.pow((-n) as i32)?) * &self.tables.c_unit;
            v.scale_monomial(&Rational::one(), Exp::new(-8, 0))
        };
        let value = match n {
            0 => {
                let (a, b) = (via_p(0)?, via_q(0)?);
                if a != b {
                    return Err(Error::BranchMismatch);
                }
                a
            }
            n if n > 0 => via_p(n)?,
            n => via_q(n)?,
        };
        Ok(FamilyMember::new(n, Form::R, value))
    }

    /// `R_n` rebuilt from the A-polynomial: `A_n(M, L M^{-4n}) b^|n| eps_n`.
    /// With the generic `A_{-2}` convention the generic `eps` branch is used.
    pub fn r_from_a(&self, n: i64, norm: A2Normalization) -> Result<RationalFn> {
        let a = self.compute_a(n, norm)?;
        let sheared = a.expect_poly()?.shear_l(-4 * n)?;
        let eps = match (n, norm) {
            (-2, A2Normalization::Generic) => self.tables.epsilon_generic(-2)?,
            _ => self.tables.epsilon(n)?,
        };
        let v = &(&RationalFn::from(sheared) * &self.tables.b.pow(n.unsigned_abs() as i32)?) * &eps;
        Ok(v.reduce_by_basis(&family_basis()))
    }

    /// Checks `sum c_k P_{n+k} = 0` and `sum gamma_k R_{n+k} = 0` for each `n`.
    pub fn verify_forward(&self, range: impl IntoIterator<Item = i64>) -> Report {
        let mut report = Report::new("recursion");
        for n in range {
            report.push(Check::from_result(
                format!("sum c_k P_(n+k) = 0 at n = {n}"),
                Some(n),
                self.forward_p(n),
            ));
            report.push(Check::from_result(
                format!("sum gamma_k R_(n+k) = 0 at n = {n}"),
                Some(n),
                self.forward_r(n),
            ));
        }
        report
    }

    fn forward_p(&self, n: i64) -> Result<bool> {
        if n < 0 {
            return Err(Error::Domain("forward check requires n >= 0".into()));
        }
        let mut acc = RationalFn::zero();
        for (k, c) in self.tables.c.iter().enumerate() {
            acc = &acc + &(&self.compute_p(n + k as i64)?.value * c);
        }
        Ok(acc.is_zero())
    }

    fn forward_r(&self, n: i64) -> Result<bool> {
        if n < 0 {
            return Err(Error::Domain("forward check requires n >= 0".into()));
        }
        let mut acc = RationalFn::zero();
        for (k, g) in self.tables.gamma.iter().enumerate() {
            acc = &acc + &(&self.compute_r(n + k as i64)?.value * g);
        }
        Ok(acc.is_zero())
    }

    /// Solves the `gamma` recursion downward from `R_0..R_3 = P_n b^n` and
    /// compares each value with `Q_n b^|n| c M^-8`.
    pub fn verify_backward(&self, range: impl IntoIterator<Item = i64>) -> Report {
        let mut report = Report::new("backward");
        let mut ns: Vec<i64> = range.into_iter().collect();
        ns.sort_unstable_by(|a, b| b.cmp(a));
        let lowest = ns.last().copied().unwrap_or(0);
        let solved = self.solve_r_backward(lowest.min(0));
        for n in ns {
            let outcome = match (&solved, n) {
                (_, n) if n > 0 => Err(Error::Domain("backward check requires n <= 0".into())),
                (Err(e), _) => Err(e.clone()),
                (Ok(seq), n) => self.compute_r(n).map(|target| seq[(-n) as usize] == target.value),
            };
            report.push(Check::from_result(
                format!("backward R_{n} = Q_{n} b^{} c M^-8", n.unsigned_abs()),
                Some(n),
                outcome,
            ));
        }
        report
    }

    /// `R_0, R_{-1}, ..., R_lowest` by the backward recursion.
    fn solve_r_backward(&self, lowest: i64) -> Result<Vec<RationalFn>> {
        let basis = family_basis();
        // window[k] = R_{n+k}
        let mut window: Vec<RationalFn> = (0..4)
            .map(|i| Ok(&self.tables.p_init[i] * &self.tables.b.pow(i as i32)?))
            .collect::<Result<_>>()?;
        let mut out = vec![window[0].clone()];
        let g0 = RationalFn::from(self.tables.gamma[0].clone());
        for _ in lowest..0 {
            let mut acc = RationalFn::zero();
            for k in 1..5 {
                acc = &acc + &(&window[k - 1] * &self.tables.gamma[k]);
            }
            let next = (-&acc).div(&g0)?.reduce_by_basis(&basis);
            window.pop();
            window.insert(0, next.clone());
            out.push(next);
        }
        Ok(out)
    }
}
