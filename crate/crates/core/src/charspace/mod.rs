//! The quadratic space `F_2^6` of theta characteristics.

pub mod chars;
pub mod chi;
pub mod combinatorics;
pub mod mumford;
pub mod perm;
pub mod subspace;

pub use chars::{enumerate_chars, nonzero_evens, odds, parse_theta_chars, Char};
pub use combinatorics::{
    boundary_dictionaries, enumerate_odd_triplets, enumerate_sextuplets, enumerate_stars, orthogonal_even_set,
    so_orbit_split, Star,
};
pub use mumford::{char_of_subset, phi, t_ij_char, verify_mumford_properties, EvenSubset};
pub use perm::{perm_to_orthogonal, F2Matrix, Perm};
pub use subspace::{singular_subspaces, Subspace};
