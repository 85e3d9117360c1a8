//! Axis families satisfying the projection axioms and their projection complexes.

pub mod complex;
pub mod construct;
pub mod family;
pub mod myrberg;

pub use complex::{
    build_complex, least_connected_k, least_forcing_constant, verify_bgit, verify_forcing, BgitReport, ForcingReport,
    ProjectionComplexGraph,
};
pub use construct::{least_construct_power, minimal_loxodromic_construct, ConstructReport};
pub use family::{
    build_axis_family, build_axis_family_with, chain_family, power_chain, verify_projection_axioms, AxiomReport,
    AxisFamily, Member,
};
pub use myrberg::{myrberg_injectivity_probe, CompetitorVerdict, InjectivityReport};
