use thiserror::Error;

/// Errors shared across the crate.
///
/// Geometric rejections (clipped discs, empty target sets) are surfaced
/// eagerly, before any sampling starts, so that truncation bias can never
/// silently alter an estimate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter {name} out of range: {detail}")]
    ParamOutOfRange { name: &'static str, detail: String },

    #[error("{shape} is clipped by the domain truncation (truncation_factor too small)")]
    TruncationClipped { shape: String },

    #[error("target set {what} is empty in this domain")]
    EmptyTargets { what: String },

    #[error("m = {m} does not divide n = {n}")]
    NonDivisible { n: i32, m: i32 },

    #[error("bit vector length {got} does not match domain site count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("domain has {sites} enumerable sites, above the exhaustive-enumeration cap of {cap}")]
    DomainTooLarge { sites: usize, cap: usize },

    #[error("no unique below-minimal crossing: {detail}")]
    NoUniqueMinimum { detail: String },

    #[error("cannot fit model {model}: {detail}")]
    FitRejected { model: String, detail: String },

    #[error("invalid event spec '{input}': {detail}")]
    EventParse { input: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
