//! Newton polygons on the exponent lattice and vertex-trajectory fitting.
//!
//! Polygons are reported in `(L, M)` coordinate order, i.e. each vertex is
//! `(l, m)` for the monomial `M^m L^l`. Polynomials index terms the other way
//! round, so keep the swap in mind when reading raw exponents.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rational::Rational;

pub type Vertex = (i64, i64);

/// Convex lattice polygon: counter-clockwise, starting from the
/// lexicographically smallest `(l, m)` vertex, no collinear vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<Vertex>,
}

fn cross(o: Vertex, a: Vertex, b: Vertex) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    (a.0 as i128 - ox) * (b.1 as i128 - oy) - (a.1 as i128 - oy) * (b.0 as i128 - ox)
}

impl LatticePolygon {
    /// Monotone-chain hull of a point set; one or two vertices for
    /// degenerate input.
    pub fn hull<I: IntoIterator<Item = Vertex>>(points: I) -> Result<Self> {
        let pts: Vec<Vertex> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if pts.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if pts.len() <= 2 {
            return Ok(LatticePolygon { vertices: pts });
        }
        let mut lower: Vec<Vertex> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Vertex> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Ok(LatticePolygon { vertices: lower })
    }

    /// Orders a list of vertices canonically, failing unless every point is
    /// a strict vertex of the hull.
    pub fn from_vertices(points: &[Vertex]) -> Result<Self> {
        let distinct: BTreeSet<Vertex> = points.iter().copied().collect();
        let poly = Self::hull(points.iter().copied())?;
        if distinct.len() != points.len() || poly.vertices.len() != points.len() {
            return Err(Error::NotStrictlyConvex);
        }
        Ok(poly)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    /// Image under `(l, m) -> (l, m + s l)`, the effect of `L -> L M^s`.
    pub fn shear(&self, s: i64) -> Self {
        Self::hull(self.vertices.iter().map(|&(l, m)| (l, m + s * l))).expect("nonempty")
    }

    pub fn translate(&self, dl: i64, dm: i64) -> Self {
        LatticePolygon {
            vertices: self.vertices.iter().map(|&(l, m)| (l + dl, m + dm)).collect(),
        }
    }

    /// The translation `t` with `self + t == other`, if there is one. A
    /// translation corresponds to multiplying by a monomial unit.
    pub fn translation_to(&self, other: &LatticePolygon) -> Option<Vertex> {
        let (a, b) = (self.vertices.first()?, other.vertices.first()?);
        let t = (b.0 - a.0, b.1 - a.1);
        (self.translate(t.0, t.1) == *other).then_some(t)
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    coords: String,
    vertices: Vec<[i64; 2]>,
}

impl Serialize for LatticePolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolygonJson {
            coords: "(L,M)".into(),
            vertices: self.vertices.iter().map(|&(l, m)| [l, m]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolygonJson::deserialize(d)?;
        if j.coords != "(L,M)" {
            return Err(D::Error::custom(format!("unsupported coordinate order {:?}", j.coords)));
        }
        let pts: Vec<Vertex> = j.vertices.iter().map(|v| (v[0], v[1])).collect();
        let p = LatticePolygon::hull(pts.iter().copied()).map_err(D::Error::custom)?;
        if p.vertices != pts {
            return Err(D::Error::custom("vertices are not in canonical order"));
        }
        Ok(p)
    }
}

/// Newton polygon of a nonzero Laurent polynomial, in `(L, M)` order.
pub fn hull(p: &LaurentPoly) -> Result<LatticePolygon> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    LatticePolygon::hull(p.exponents().map(|e| (e.l, e.m)))
}

pub fn leading_coeff_l(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.leading_coeff_l()
}

/// Predicted Newton polygon of `P_n`, `n > 1`.
pub fn predicted_p_polygon(n: i64) -> Result<LatticePolygon> {
    if n <= 1 {
        return Err(Error::Domain(format!("hexagon formulas for P_n require n > 1, got {n}")));
    }
    LatticePolygon::from_vertices(&[
        (0, 0),
        (1, -4 * n + 16),
        (n - 1, 12 * n - 12),
        (2 * n + 1, 16 * n + 18),
        (3 * n - 1, 32 * n - 10),
        (3 * n, 28 * n + 6),
    ])
}

/// Predicted Newton polygon of `Q_n`, `n < -1`.
pub fn predicted_q_polygon(n: i64) -> Result<LatticePolygon> {
    if n >= -1 {
        return Err(Error::Domain(format!("hexagon formulas for Q_n require n < -1, got {n}")));
    }
    LatticePolygon::from_vertices(&[
        (0, 4 * n + 28),
        (1, 38),
        (-n, -12 * n + 26),
        (-2 * n - 3, -16 * n - 4),
        (-3 * n - 4, -28 * n - 16),
        (-3 * n - 3, -32 * n - 6),
    ])
}

/// Vertex trajectories of the `A_n` hexagon as polynomials in `n`, lowest
/// degree first: the `n > 1` table when `positive`, else the `n < -2` table.
pub fn a_vertex_table(positive: bool) -> Vec<VertexTrajectory> {
    let rows: [(&[i64], &[i64]); 6] = if positive {
        [
            (&[0], &[0]),
            (&[1], &[16]),
            (&[-1, 1], &[-12, 8, 4]),
            (&[1, 2], &[18, 20, 8]),
            (&[-1, 3], &[-10, 28, 12]),
            (&[0, 3], &[6, 28, 12]),
        ]
    } else {
        [
            (&[-4, -3], &[0]),
            (&[-3, -3], &[10]),
            (&[-3, -2], &[12, 16, 4]),
            (&[0, -1], &[42, 32, 8]),
            (&[0], &[44, 48, 12]),
            (&[1], &[54, 48, 12]),
        ]
    };
    rows.iter()
        .map(|(l, m)| VertexTrajectory { l: NPoly::from_ints(l), m: NPoly::from_ints(m) })
        .collect()
}

fn eval_table(table: &[VertexTrajectory], n: i64) -> Result<LatticePolygon> {
    let int = |r: Rational| -> i64 {
        r.numer().try_into().expect("integer table entries stay in range")
    };
    let pts: Vec<Vertex> = table.iter().map(|v| (int(v.l.eval(n)), int(v.m.eval(n)))).collect();
    LatticePolygon::from_vertices(&pts)
}

/// Predicted Newton polygon of `A_n`, `|n| >= 2`, with the separate
/// `n = -2` hexagon.
pub fn predicted_a_polygon(n: i64) -> Result<LatticePolygon> {
    match n {
        n if n > 1 => eval_table(&a_vertex_table(true), n),
        -2 => LatticePolygon::from_vertices(&[(0, 0), (1, 0), (2, 4), (1, 10), (2, 14), (3, 14)]),
        n if n < -2 => eval_table(&a_vertex_table(false), n),
        _ => Err(Error::Domain(format!("A_n polygon formulas require |n| >= 2, got {n}"))),
    }
}

/// The `n < -2` formulas continued to any `n <= -2`.
pub fn predicted_a_polygon_generic(n: i64) -> Result<LatticePolygon> {
    if n > -2 {
        return Err(Error::Domain(format!("generic n < -2 formulas need n <= -2, got {n}")));
    }
    eval_table(&a_vertex_table(false), n)
}

/// Whether `fit` is a single-class exact fit whose trajectories are exactly
/// the rows of `table`, in any order.
pub fn fit_matches_table(fit: &VertexFit, table: &[VertexTrajectory]) -> bool {
    fit.period == 1
        && fit.exact
        && fit.classes.len() == 1
        && fit.classes[0].vertices.len() == table.len()
        && table.iter().all(|t| fit.classes[0].vertices.contains(t))
}

/// Polynomial in `n` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NPoly(pub Vec<Rational>);

impl NPoly {
    pub fn from_ints(c: &[i64]) -> Self {
        NPoly(c.iter().map(|&x| Rational::from(x)).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Rational::is_zero) {
            self.0.pop();
        }
        self
    }

    /// `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn eval(&self, n: i64) -> Rational {
        let x = Rational::from(n);
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexTrajectory {
    pub l: NPoly,
    pub m: NPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueFit {
    pub residue: i64,
    pub vertices: Vec<VertexTrajectory>,
}

/// Per-vertex polynomial trajectories, one set per residue class of `n`
/// modulo `period`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexFit {
    pub degree: usize,
    pub period: usize,
    pub classes: Vec<ResidueFit>,
    /// Every sample is reproduced exactly.
    pub exact: bool,
}

impl VertexFit {
    /// Largest degree actually used by any trajectory.
    pub fn effective_degree(&self) -> i64 {
        self.classes
            .iter()
            .flat_map(|c| c.vertices.iter())
            .flat_map(|v| [v.l.degree(), v.m.degree()])
            .max()
            .unwrap_or(-1)
            .max(0)
    }
}

/// Solves a square system exactly by Gaussian elimination; `None` if singular.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip().ok()?;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let pivot_row = a[col].clone();
            for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &(&f * p);
            }
            let d = &f * &b[col];
            b[r] -= &d;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

fn fit_coordinate(ns: &[i64], ys: &[i64], degree: usize) -> (NPoly, bool) {
    let k = degree + 1;
    let a = ns[..k]
        .iter()
        .map(|&n| (0..k).map(|j| Rational::from(n.pow(j as u32))).collect())
        .collect();
    let b = ys[..k].iter().map(|&y| Rational::from(y)).collect();
    let Some(coeffs) = solve(a, b) else {
        return (NPoly(Vec::new()), false);
    };
    let p = NPoly(coeffs).trimmed();
    let ok = ns.iter().zip(ys).all(|(&n, &y)| p.eval(n) == Rational::from(y));
    (p, ok)
}

/// Fits each vertex coordinate by a polynomial of degree `<= degree` in `n`,
/// separately on each residue class modulo `period`. Vertices are matched by
/// position in the canonical ordering.
pub fn fit_vertices(samples: &[(i64, LatticePolygon)], degree: usize, period: usize) -> Result<VertexFit> {
    if period == 0 {
        return Err(Error::Domain("period must be at least 1".into()));
    }
    let count = samples.first().map(|s| s.1.len()).unwrap_or(0);
    if let Some(bad) = samples.iter().find(|s| s.1.len() != count) {
        return Err(Error::InconsistentVertexCount(count, bad.1.len()));
    }
    let need = degree + 2;
    let mut classes = Vec::new();
    let mut exact = true;
    for residue in 0..period as i64 {
        let group: Vec<&(i64, LatticePolygon)> = samples
            .iter()
            .filter(|s| s.0.rem_euclid(period as i64) == residue)
            .collect();
        if group.len() < need {
            return Err(Error::Underdetermined { residue, have: group.len(), need });
        }
        let ns: Vec<i64> = group.iter().map(|s| s.0).collect();
        let mut vertices = Vec::new();
        for v in 0..count {
            let ls: Vec<i64> = group.iter().map(|s| s.1.vertices()[v].0).collect();
            let ms: Vec<i64> = group.iter().map(|s| s.1.vertices()[v].1).collect();
            let (l, ok_l) = fit_coordinate(&ns, &ls, degree);
            let (m, ok_m) = fit_coordinate(&ns, &ms, degree);
            exact &= ok_l && ok_m;
            vertices.push(VertexTrajectory { l, m });
        }
        classes.push(ResidueFit { residue, vertices });
    }
    Ok(VertexFit { degree, period, classes, exact })
}

/// Tries periods 1, 2, 3 and returns the first exact fit, or the period-1
/// attempt when none is exact.
pub fn fit_quasi(samples: &[(i64, LatticePolygon)], degree: usize) -> Result<VertexFit> {
    let first = fit_vertices(samples, degree, 1)?;
    if first.exact {
        return Ok(first);
    }
    for period in 2..=3 {
        match fit_vertices(samples, degree, period) {
            Ok(f) if f.exact => return Ok(f),
            Ok(_) => {}
            Err(Error::Underdetermined { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly;

    fn set(v: &[Vertex]) -> BTreeSet<Vertex> {
        v.iter().copied().collect()
    }

    #[test]
    fn small_hulls() {
        let t = hull(&poly("1 + L*M + L^2").unwrap()).unwrap();
        assert_eq!(t.vertices(), &[(0, 0), (2, 0), (1, 1)]);
        assert_eq!(hull(&poly("M^5").unwrap()).unwrap().vertices(), &[(0, 5)]);
        let seg = hull(&poly("1 + L*M + L^2*M^2 + L^3*M^3").unwrap()).unwrap();
        assert_eq!(seg.vertices(), &[(0, 0), (3, 3)]);
        assert_eq!(hull(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn interior_and_collinear_points_dropped() {
        let sq = LatticePolygon::hull([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(sq.vertices(), &[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(LatticePolygon::from_vertices(&[(0, 0), (1, 0), (2, 0), (0, 1)]), Err(Error::NotStrictlyConvex));
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(
            predicted_p_polygon(2).unwrap().vertex_set(),
            set(&[(0, 0), (1, 8), (1, 12), (5, 50), (5, 54), (6, 62)])
        );
        assert_eq!(
            predicted_q_polygon(-2).unwrap().vertex_set(),
            set(&[(0, 20), (1, 38), (2, 50), (1, 28), (2, 40), (3, 58)])
        );
        assert_eq!(
            predicted_a_polygon(2).unwrap().vertex_set(),
            set(&[(0, 0), (1, 16), (1, 20), (5, 90), (5, 94), (6, 110)])
        );
        assert_eq!(
            predicted_a_polygon(-2).unwrap().vertex_set(),
            set(&[(0, 0), (1, 0), (2, 4), (1, 10), (2, 14), (3, 14)])
        );
        assert_eq!(
            predicted_a_polygon(-3).unwrap().vertex_set(),
            set(&[(5, 0), (6, 10), (3, 0), (3, 18), (0, 8), (1, 18)])
        );
        assert_eq!(predicted_a_polygon(3).unwrap().shear(-12), predicted_p_polygon(3).unwrap());
    }

    #[test]
    fn predicted_domains() {
        assert!(predicted_p_polygon(1).is_err());
        assert!(predicted_q_polygon(-1).is_err());
        assert!(predicted_a_polygon(1).is_err());
        assert!(predicted_a_polygon(-1).is_err());
        assert!(predicted_a_polygon_generic(-1).is_err());
    }

    #[test]
    fn translation_detection() {
        let a = predicted_a_polygon(-2).unwrap();
        assert_eq!(a.translation_to(&a.translate(0, 40)), Some((0, 40)));
        assert_eq!(a.translation_to(&a.shear(16)), None);
    }

    #[test]
    fn leading_coeff() {
        assert_eq!(leading_coeff_l(&poly("1 + L*(M + 1)").unwrap()).unwrap(), poly("M + 1").unwrap());
    }

    #[test]
    fn constant_polygons_fit_with_degree_zero() {
        let tri = LatticePolygon::hull([(0, 0), (2, 0), (1, 3)]).unwrap();
        let samples: Vec<_> = (0..5).map(|n| (n, tri.clone())).collect();
        let fit = fit_vertices(&samples, 2, 1).unwrap();
        assert!(fit.exact);
        assert_eq!(fit.effective_degree(), 0);
    }

    #[test]
    fn linear_trajectory_recovered() {
        let samples: Vec<_> = (2..9).map(|n| (n, predicted_p_polygon(n).unwrap())).collect();
        let fit = fit_vertices(&samples, 1, 1).unwrap();
        assert!(fit.exact);
        let last = fit.classes[0].vertices.iter().find(|v| v.l == NPoly::from_ints(&[0, 3])).unwrap();
        assert_eq!(last.m, NPoly::from_ints(&[6, 28]));
    }

    #[test]
    fn period_two_detected() {
        // a vertex that alternates between two lines
        let samples: Vec<_> = (0..10)
            .map(|n: i64| {
                let m = if n % 2 == 0 { n } else { 2 * n + 1 };
                (n, LatticePolygon::hull([(0, 0), (1, m + 100), (2, 0)]).unwrap())
            })
            .collect();
        assert!(!fit_vertices(&samples, 1, 1).unwrap().exact);
        let q = fit_quasi(&samples, 1).unwrap();
        assert!(q.exact);
        assert_eq!(q.period, 2);
    }

    #[test]
    fn fit_errors() {
        let a = LatticePolygon::hull([(0, 0), (1, 0), (0, 1)]).unwrap();
        let b = LatticePolygon::hull([(0, 0), (1, 0)]).unwrap();
        assert_eq!(fit_vertices(&[(0, a.clone()), (1, b)], 0, 1), Err(Error::InconsistentVertexCount(3, 2)));
        assert!(matches!(
            fit_vertices(&[(0, a.clone()), (1, a)], 1, 1),
            Err(Error::Underdetermined { have: 2, need: 3, .. })
        ));
    }

    #[test]
    fn polygon_json() {
        let p = predicted_p_polygon(2).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coords":"(L,M)","vertices":[[0,0],[1,8],[5,50],[6,62],[5,54],[1,12]]}"#);
        let back: LatticePolygon = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<LatticePolygon>(r#"{"coords":"(M,L)","vertices":[[0,0]]}"#).is_err());
    }
}
