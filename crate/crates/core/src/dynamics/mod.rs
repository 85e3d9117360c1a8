//! Boundary dynamics: north-south behaviour, Myrberg rays, free semigroups,
//! paradoxical towers and faithfulness probes.

pub mod faithful;
pub mod myrberg;
pub mod north_south;
pub mod sample;
pub mod semigroup;
pub mod towers;

pub use north_south::{
    extreme_proximality_probe, fixed_pair_density_probe, north_south_probe, FixedPairReport, NorthSouthReport,
    ProximalityReport,
};
pub use sample::{reduced_ray, BoundarySample, SampleSummary, DEFAULT_SCALE};
pub use myrberg::{myrberg_ray, FellowSegment, MyrbergRay, DEFAULT_FELLOW_RADIUS};
pub use semigroup::{
    bounded_axis_probe, free_semigroup_certificate, pnai_certificate, BoundedAxisReport, PnaiCertificate,
    SemigroupCertificate,
};
pub use towers::{paradoxical_towers, TowerCertificate};
pub use faithful::{strongly_faithful_probe, tamedness_probe, FaithfulReport, TamednessReport};
