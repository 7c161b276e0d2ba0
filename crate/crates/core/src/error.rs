use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The state carries non-negligible weight at the top of the truncated
    /// basis, so ladder or displacement actions are no longer exact.
    #[error("truncation overflow at dim {dim}: tail mass {tail_mass:.3e}")]
    TruncationOverflow { dim: usize, tail_mass: f64 },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("vector has vanishing norm")]
    ZeroVector,

    /// Pre- and postselected states are (numerically) orthogonal.
    #[error("weak value diverges at theta = {0}")]
    DivergentWeakValue(f64),

    #[error("cat state vanishes: normalization weight {0:.3e}")]
    DegenerateCat(f64),

    /// g²(0) is 0/0 for the vacuum.
    #[error("g2 undefined: mean photon number {0:.3e}")]
    VacuumUndefined(f64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("config: field `{field}`: {reason}")]
    ConfigParse { field: String, reason: String },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("invariant violated for {quantity}: value {value}")]
    InvariantViolation { quantity: &'static str, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::ConfigParse { field: field.into(), reason: reason.into() }
    }

    /// Process exit code: 1 for bad input, 2 for a failed computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConfigParse { .. } | Error::UnknownPreset(_) | Error::InvalidParameter { .. } => 1,
            _ => 2,
        }
    }

    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}
