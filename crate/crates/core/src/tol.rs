//! Numerical thresholds shared by every module.
//!
//! All arithmetic is `f64`; these are the only places where a cutoff is
//! chosen, so a change here is a change in the contract.

/// A vector is well-truncated iff its estimated tail mass is below this.
pub const WELL_TRUNCATED: f64 = 1e-12;

/// Displacement output must keep its tail mass below this.
pub const DISPLACE_TAIL: f64 = 1e-10;

/// `a†` needs the top amplitude below this to be exact.
pub const CREATE_HEADROOM: f64 = 1e-14;

/// Norms below this are treated as the zero vector.
pub const ZERO_NORM: f64 = 1e-300;

/// Postselection weights below this count as total destructive interference.
pub const DESTRUCTIVE_INTERFERENCE: f64 = 1e-14;

/// Mean photon numbers below this make g²(0) undefined.
pub const VACUUM_MEAN: f64 = 1e-12;

/// Cat states with `K⁻²` below this are rejected.
pub const DEGENERATE_CAT: f64 = 1e-12;

/// Preselection angles closer than this to π are rejected.
pub const THETA_POLE: f64 = 1e-9;

/// Largest accepted squeezing modulus.
pub const ETA_MAX: f64 = 4.0;

/// Tolerance on the invariants checked by `full_report`.
pub const REPORT_INVARIANT: f64 = 1e-9;

/// Tolerance on `Σ P(n) = 1` in `full_report`.
pub const REPORT_NORM: f64 = 1e-10;

/// Relative agreement required between a closed form and the Fock oracle.
pub const CLOSED_FORM_MATCH: f64 = 1e-8;

/// Truncation used when nothing else is requested.
pub const DEFAULT_DIM: usize = 128;

/// Auto-doubling stops here.
pub const MAX_DIM: usize = 1024;
