//! Runge's matrix group acting on the theta constants of the second kind,
//! and numerical theta series.

pub mod gauss;
pub mod invariance;
pub mod numeric;
pub mod theta;

pub use gauss::{group_report, GroupReport, n3_generators, n3_prime_generators, GaussMatrix, MatrixGroup};
pub use invariance::{invariance_pq, load_p, load_q, InvarianceReport};
pub use theta::{f_eval, theta_eval, SiegelPoint, Truncated};
pub use numeric::{duplication_check, random_samples, schottky_numeric_fit, DuplicationReport, SchottkyFit, ThetaSample};
