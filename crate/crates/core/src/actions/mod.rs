//! Marked groups and their actions.

pub mod action;
pub mod axis;
pub mod ball;
pub mod custom;
pub mod probes;
pub mod ray;
pub mod spec;
pub mod word;

pub use action::{Geometry, GroupAction, Isometry, Point};
pub use axis::{classify, quasi_axis, stable_translation_length, Classification, QuasiAxis};
pub use ball::{build_ball, ActionBall};
pub use probes::{
    acylindricity_probe, compose_loxodromic, extension_choice, kernel_sample, weakly_independent,
};
pub use ray::Ray;
pub use spec::GroupSpec;
pub use word::{Alphabet, Factor, Word, WordTemplate};
