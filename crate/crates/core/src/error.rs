use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid structured spectrum: {0}")]
    Json(String),
    #[error("length must be strictly positive, got {0}")]
    NonPositiveLength(f64),
    #[error("multiplicity must be strictly positive, got {0}")]
    NonPositiveMultiplicity(f64),
    #[error("non-finite value: {0}")]
    NonFinite(&'static str),
    #[error("spectrum is empty")]
    EmptySpectrum,
    #[error("multiplicity of length {0} does not fit the floating format")]
    MultiplicityOverflow(u64),
    #[error("invalid tail policy: {0}")]
    InvalidPolicy(&'static str),
    #[error("divergent sum: growth * exp(lambda) = {ratio} >= 1")]
    DivergentSum { ratio: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector is off the probability simplex: {0}")]
    OffSimplex(String),
    #[error("weight {index} is {value}, must be at least 1e-300")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("subset size {n} out of range 1..={m}")]
    SubsetOutOfRange { n: usize, m: usize },
    #[error("simplex grid oracle supports at most 4 entries, got {0}")]
    TooManyEntries(usize),
    #[error("target mean length {target} outside the open range ({min}, {max})")]
    TargetOutOfRange { target: f64, min: f64, max: f64 },
    #[error("spectrum has a single distinct length {length}; target {target} unreachable")]
    DegenerateSpectrum { length: f64, target: f64 },
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
}
