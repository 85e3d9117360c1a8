use thiserror::Error;

/// Every failure the lab can report.
#[derive(Debug, Error)]
pub enum LabError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex count {count} exceeds the configured cap of {cap}")]
    ResourceLimit { count: usize, cap: usize },
    #[error("`{0}` lies outside the working ball")]
    OutOfBall(String),
    #[error("`{0}` is not loxodromic")]
    NotLoxodromic(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("value at `{vertex}` has not stabilised by horizon {horizon}")]
    NonConvergence { vertex: String, horizon: usize },
    #[error("patches are defined on different balls")]
    MismatchedBall,
    #[error("neither finite-minimum nor infinite-descent criterion fires (min {min} on radius {radius}, margin {margin})")]
    Inconclusive { min: i32, radius: u32, margin: u32 },
    #[error("`{0}` lies outside the certified region")]
    Uncertified(String),
    #[error("patch lies in a fixed class of `{0}`")]
    FixedClass(String),
    #[error("member `{0}` duplicates an existing axis")]
    DuplicateAxis(String),
    #[error("interval needs two distinct members")]
    SameMember,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown coset `{0}`")]
    UnknownCoset(String),
    #[error("conjugator sequence is bounded: {0}")]
    BoundedConjugators(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("relation found: {0}")]
    RelationFound(String),
    #[error("fixed points collide: {0}")]
    FixedPointsCollide(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{pointer}: {message}")]
    Config { pointer: String, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, LabError>;
