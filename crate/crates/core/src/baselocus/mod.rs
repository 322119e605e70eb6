//! The base locus of the map given by the Thomae images: 56 linear spaces on
//! the Specht variety, their vanishing patterns, and the 35 cusps.

pub mod locus;
pub mod orbit;
pub mod space;

pub use locus::{
    char_of_cusp, collision_table, collision_triplet, collisions, cusp_suite, locus_suite, triplet_for, variety_and_vanishing_check, Collision, CollisionData, CuspReport, LocusContext,
    LocusReport, SpaceReport,
};
pub use orbit::{cusp_orbit, move_point, orbit_of_base_space, space_orbit, GroupCensus, Orbit};
pub use space::{base_space, printed_cusp_data, LinearSpace};
