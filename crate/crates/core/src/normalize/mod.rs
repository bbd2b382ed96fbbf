//! Exact normalization of real critical-value sets into `{0, 1, ∞}`.
//!
//! Everything is generic over the integer type `I` behind `Ratio<I>`; the
//! crate root fixes `I = BigInt`.

mod gaussian;
mod map;
mod pipeline;
mod poly;
mod scalar;

pub use gaussian::{Gaussian, Point};
pub use map::{critical_values, RationalMap};
pub use pipeline::{
    fold_quadratic, j_invariant, moebius_to_standard, normalize, normalize_values, Certificate,
    CriticalSet, Normalization, Snapshot, Step, StepKind,
};
pub use poly::Poly;
pub use scalar::{exact_sqrt, ExactInt};
