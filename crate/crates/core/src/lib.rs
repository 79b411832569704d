//! Exact symbolic computation for the A-polynomials of the `(-2, 3, 3+2n)`
//! pretzel knots.
//!
//! The crate is layered bottom-up:
//!
//! * [`rational`], [`laurent`], [`ratfn`], [`subst`]: exact arithmetic on
//!   bivariate Laurent polynomials in `M`, `L` and their quotients;
//! * [`tables`]: the recursion coefficients and initial conditions;
//! * [`recursion`]: generation of `P_n`, `Q_n`, `A_n`, `R_n`;
//! * [`polygon`]: Newton polygons, predicted hexagons, vertex fitting;
//! * [`duality`]: the GL(2,Z) duality and divisibility checks;
//! * [`suite`]: named verification suites over ranges of `n`.

pub mod duality;
pub mod error;
pub mod json;
pub mod laurent;
pub mod parse;
pub mod polygon;
pub mod ratfn;
pub mod rational;
pub mod recursion;
pub mod report;
pub mod subst;
pub mod suite;
pub mod tables;

pub use error::{Error, Result};
pub use laurent::{Exp, LaurentPoly};
pub use polygon::{LatticePolygon, VertexFit};
pub use ratfn::RationalFn;
pub use rational::Rational;
pub use recursion::{A2Normalization, Family, FamilyMember, Form, KnotClass};
pub use report::{Check, Report, Status};
pub use subst::GeneralSubst;
pub use tables::FamilyTables;
