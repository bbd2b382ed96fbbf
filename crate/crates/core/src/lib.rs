//! Maps and hypermaps on compact Klein surfaces, encoded as transitive
//! permutation actions of extended triangle groups.

pub mod blade;
pub mod census;
pub mod dart;
pub mod error;
pub mod io;
pub mod normalize;
pub mod perm;
pub mod triangle;

pub use blade::{
    boundary, canonical_form, classify, complex_double, is_isomorphic, BladeSystem, BoundaryReport,
    Cells, ComplexDouble, Passport, Reflection, SurfaceType,
};
pub use census::{CensusFilters, CensusQuery, CensusRecord};
pub use dart::{orient, to_blades, DartMap};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use triangle::{Period, TriangleSignature};

use num_bigint::BigInt;

/// Exact rational numbers.
pub type Rational = num_rational::Ratio<BigInt>;
/// `a + bi` with rational `a`, `b`.
pub type GaussianRational = normalize::Gaussian<BigInt>;
/// A point of the Riemann sphere with Gaussian-rational coordinate.
pub type SpherePoint = normalize::Point<BigInt>;
/// Quotient of rational polynomials.
pub type RealRationalMap = normalize::RationalMap<BigInt>;
pub type RationalPoly = normalize::Poly<BigInt>;
pub type CriticalSet = normalize::CriticalSet<BigInt>;
pub type Certificate = normalize::Certificate<BigInt>;
pub type Normalization = normalize::Normalization<BigInt>;
