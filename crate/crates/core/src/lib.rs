pub mod actions;
pub mod coned;
pub mod dynamics;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod half;
pub mod horo;
pub mod projection;

pub use error::{LabError, Result};
pub use half::HalfInt;
