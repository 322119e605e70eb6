//! The Thomae map sending fourth powers of theta constants to signed
//! products of the differences `W_ij = X_i - X_j`.

pub mod cubic;
pub mod laws;
pub mod monomial;
pub mod rule;
pub mod table;

pub use cubic::{cubic_in_y, printed_factorization, verify_cubics, CubicReport, CubicTransport, YCubic};
pub use laws::{equivariance, equivariance_exhaustive, equivariance_suite, sum_vanishing, support_law};
pub use monomial::SignedMonomial;
pub use rule::{d_of_char, d_of_subset};
pub use table::{parse_table, verify_table, TableReport};
