//! Exact arithmetic: prime fields, sparse polynomials, elimination,
//! identity testing and rational series.

pub mod matrix;
pub mod modp;
pub mod pit;
pub mod poly;
pub mod rational;
pub mod series;
pub mod texpoly;

pub use matrix::PrimeFieldMatrix;
pub use modp::{Modulus, DEFAULT_PRIME};
pub use pit::{pit_is_zero, PitVerdict, PointSampler};
pub use poly::{Coefficient, IntPoly, SparsePoly};
pub use series::RationalSeries;
