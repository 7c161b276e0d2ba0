//! Postselected von Neumann measurement on single-mode radiation fields.
//!
//! A spin-½ system (the polarization) is coupled to a single field mode (the
//! pointer) through `H = g A ⊗ P` with `A = σ_x`. After the interaction the
//! system is postselected onto `|↑_z⟩`, which leaves the pointer in a
//! superposition of two displaced copies of itself weighted by `½(1 ± ⟨A⟩_w)`.
//!
//! The crate has two independent routes to every observable of the final
//! pointer:
//!
//! * a brute-force route through a truncated Fock space ([`fock`], [`states`],
//!   [`postselect`], [`observables`]), and
//! * closed-form expressions for coherent, squeezed-vacuum and cat pointers
//!   ([`analytic`]), each kept both as written and, where misprinted, corrected,
//!   so that misprints can be detected and catalogued.
//!
//! [`sweep`] drives both routes over parameter grids and renders
//! deterministic CSV; the `postsel` binary is a thin front end over it.

pub mod analytic;
pub mod error;
pub mod fock;
pub mod observables;
pub mod postselect;
pub mod states;
pub mod sweep;
pub mod tol;

pub use num_complex::Complex64 as C64;

pub use error::{Error, Result};
pub use fock::{apply_annihilate, apply_create, displace, inner, normalize, FockVector};
pub use observables::{full_report, ObservableReport};
pub use postselect::{MeasurementConfig, WeakValue};
pub use states::{PointerKind, PointerSpec};
