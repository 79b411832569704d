//! Inputs shared by the benchmarks in `benches/`.

use pretzel_core::parse::poly;
use pretzel_core::{A2Normalization, Family, LaurentPoly};

/// `P_n`, computed on a fresh family.
pub fn p(n: i64) -> LaurentPoly {
    Family::default().compute_p(n).expect("n >= 2").expect_poly().expect("polynomial").clone()
}

/// `A_n` under the default normalization.
pub fn a(n: i64) -> LaurentPoly {
    Family::default()
        .compute_a(n, A2Normalization::Tabulated)
        .expect("|n| >= 2")
        .expect_poly()
        .expect("polynomial")
        .clone()
}

/// The denominator cleared from `P_n` by the recursion.
pub fn p_clear() -> LaurentPoly {
    poly("(1 + L*M^10)^3").expect("literal parses")
}
