//! Exact computational algebra for configurations of eight points on the
//! projective line and the theta constants of genus-3 hyperelliptic curves.

pub mod assets;
pub mod baselocus;
pub mod charspace;
pub mod error;
pub mod exactalg;
pub mod report;
pub mod runge;
pub mod specht;
pub mod thetaring;
pub mod thomae;

pub use error::{Error, Result};
