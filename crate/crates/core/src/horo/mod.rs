//! Horofunction patches on finite balls.

pub mod criteria;
pub mod minimum;
pub mod patch;
pub mod projection;
pub mod space;

pub use criteria::{accumulation_probe, minimal_class_probe, AccumulationReport, MinimalClassReport};
pub use minimum::{is_dead_end, local_minimum_map, DeadEndReport, MinimumReport};
pub use patch::{
    finite_difference, horofunction_at, horofunction_of_point, limit_along_sequence, ConvergenceCertificate,
    FiniteDifferenceBound, HorofunctionPatch, Provenance,
};
pub use projection::{axis_projection_of_patch, equivariance_sides, AxisProjection};
pub use space::{HoroSpace, SubBall};
