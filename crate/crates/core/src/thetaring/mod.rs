//! The fifteen Theta-forms on the hyperelliptic locus, their relations
//! pulled back through the Thomae map, graded dimensions and the Hilbert
//! series bookkeeping.

pub mod dims;
pub mod forms;
pub mod relations;
pub mod series;
pub mod span;
pub mod weight2;

pub use dims::graded_dim_b;
pub use forms::{decode_check, DecodeReport, ThetaForms};
pub use relations::{
    coset_quartic_relations, cubic_relation_suite, schottky_image, squared_quartic_relations, CosetQuarticReport,
    CubicRelationReport, SchottkyReport, SquaredQuarticReport,
};
pub use series::{series_suite, SeriesReport};
pub use weight2::{theta4_in_theta, theta4_suite, weight2_structure, Theta4Report, Weight2Report};
pub use span::{relation_spans, RelationSpanReport};
