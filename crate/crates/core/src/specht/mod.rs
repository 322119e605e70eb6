//! Specht polynomials of 2x4 tableaux, the basis `Y_1 .. Y_14`, the quadratic
//! relations among them and the Hilbert function of the ring they generate.

pub mod action;
pub mod basis;
pub mod hilbert;
pub mod koike;
pub mod tableau;

pub use action::YAction;
pub use basis::{coordinates_of, tableau_coordinates, SpechtBasis};
pub use hilbert::{config_series, deconcini_dim, graded_dim_config, howe_dim, RankCertificate};
pub use koike::{koike_ideal, verify_koike, KoikeReport};
pub use tableau::{enumerate_tableaux, Tableau};
