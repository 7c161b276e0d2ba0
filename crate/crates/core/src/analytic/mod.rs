//! Closed-form observables for the three pointers and their validation
//! against the Fock-space pipeline.
//!
//! Each quantity has a literal form and, where the literal form is
//! misprinted, a corrected form. Evaluation here never
//! touches the Fock pipeline; [`validate`] does the comparison.

pub mod cat;
pub mod coherent;
pub mod initial;
pub mod squeezed;
pub mod typos;
pub mod validate;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::postselect::MeasurementConfig;
use crate::states::{PointerKind, PointerSpec};

pub use cat::CatForms;
pub use coherent::CoherentForms;
pub use squeezed::SqueezedForms;
pub use typos::{typo_evidence, TypoEntry, TypoEvidence, TYPOS};
pub use validate::{
    cat_closed_forms, coherent_closed_forms, squeezed_closed_forms, validate_all, GridPoint, GridSize,
    Summary, ValidationGrid,
};

/// Photon-number index used for the squeezed coherent amplitude check.
pub const AMPLITUDE_N: usize = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    CohNorm,
    CohMeanN,
    CohA2A2,
    CohXphi,
    CohA2,
    SqNorm,
    SqAmp,
    SqMeanN,
    SqXphi,
    SqX2,
    SqInitG2,
    SqInitQ,
    SqInitSphi,
    CatNorm,
    CatMeanN,
    CatA2A2,
    CatAmean,
    CatA2,
    CatInitQ,
    CatInitG2,
    CatInitSphi,
}

impl Quantity {
    pub const ALL: [Quantity; 21] = [
        Quantity::CohNorm,
        Quantity::CohMeanN,
        Quantity::CohA2A2,
        Quantity::CohXphi,
        Quantity::CohA2,
        Quantity::SqNorm,
        Quantity::SqAmp,
        Quantity::SqMeanN,
        Quantity::SqXphi,
        Quantity::SqX2,
        Quantity::SqInitG2,
        Quantity::SqInitQ,
        Quantity::SqInitSphi,
        Quantity::CatNorm,
        Quantity::CatMeanN,
        Quantity::CatA2A2,
        Quantity::CatAmean,
        Quantity::CatA2,
        Quantity::CatInitQ,
        Quantity::CatInitG2,
        Quantity::CatInitSphi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::CohNorm => "coh_norm",
            Quantity::CohMeanN => "coh_mean_n",
            Quantity::CohA2A2 => "coh_a2a2",
            Quantity::CohXphi => "coh_xphi",
            Quantity::CohA2 => "coh_a2",
            Quantity::SqNorm => "sq_norm",
            Quantity::SqAmp => "sq_amp",
            Quantity::SqMeanN => "sq_mean_n",
            Quantity::SqXphi => "sq_xphi",
            Quantity::SqX2 => "sq_x2",
            Quantity::SqInitG2 => "sq_init_g2",
            Quantity::SqInitQ => "sq_init_q",
            Quantity::SqInitSphi => "sq_init_sphi",
            Quantity::CatNorm => "cat_norm",
            Quantity::CatMeanN => "cat_mean_n",
            Quantity::CatA2A2 => "cat_a2a2",
            Quantity::CatAmean => "cat_amean",
            Quantity::CatA2 => "cat_a2",
            Quantity::CatInitQ => "cat_init_q",
            Quantity::CatInitG2 => "cat_init_g2",
            Quantity::CatInitSphi => "cat_init_sphi",
        }
    }

    pub fn pointer(self) -> PointerKind {
        use Quantity::*;
        match self {
            CohNorm | CohMeanN | CohA2A2 | CohXphi | CohA2 => PointerKind::Coherent,
            SqNorm | SqAmp | SqMeanN | SqXphi | SqX2 | SqInitG2 | SqInitQ | SqInitSphi => PointerKind::SqueezedVacuum,
            _ => PointerKind::Cat,
        }
    }

    /// Whether the quantity depends on the quadrature angle.
    pub fn needs_phi(self) -> bool {
        matches!(
            self,
            Quantity::CohXphi | Quantity::SqXphi | Quantity::SqX2 | Quantity::SqInitSphi | Quantity::CatInitSphi
        )
    }

    pub fn for_pointer(kind: PointerKind) -> impl Iterator<Item = Quantity> {
        Self::ALL.into_iter().filter(move |q| q.pointer() == kind)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|q| q.name() == key || format!("{q:?}").to_ascii_lowercase() == key)
            .ok_or_else(|| Error::invalid("quantity", format!("unknown quantity `{s}`")))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Match,
    /// The literal form misses the oracle but the corrected form hits it.
    TypoSuspected,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::TypoSuspected => "typo_suspected",
            Status::Fail => "fail",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One closed form at one parameter point, compared with the oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormReport {
    pub quantity: Quantity,
    pub point: GridPoint,
    pub phi_quad: Option<f64>,
    /// Literal transcription.
    pub analytic_value: C64,
    pub oracle_value: C64,
    pub abs_err: f64,
    pub status: Status,
    pub corrected_value: Option<C64>,
    pub corrected_err: Option<f64>,
}

/// `|value − oracle| < 1e−8 · max(1, |oracle|)`, false for non-finite values.
pub fn within_tolerance(value: C64, oracle: C64) -> bool {
    let err = (value - oracle).norm();
    err.is_finite() && err < crate::tol::CLOSED_FORM_MATCH * oracle.norm().max(1.0)
}

/// Literal and, where it differs, corrected closed-form value of `q`.
///
/// Panics if `q` does not belong to the pointer kind of `spec`.
pub fn closed_form(q: Quantity, spec: &PointerSpec, cfg: &MeasurementConfig, phi: f64) -> (C64, Option<C64>) {
    assert_eq!(q.pointer(), spec.kind, "{q} does not apply to a {} pointer", spec.kind);
    let re = |x: f64| C64::new(x, 0.0);
    let co = CoherentForms::new(spec.r, spec.vartheta, cfg);
    let sq = SqueezedForms::new(spec.eta, spec.delta, cfg);
    let ca = || CatForms::new(spec.r, spec.delta, spec.omega, cfg);
    match q {
        Quantity::CohNorm => (re(co.norm_inv()), None),
        Quantity::CohMeanN => (re(co.mean_n_literal()), Some(re(co.mean_n()))),
        Quantity::CohA2A2 => (re(co.a2a2_literal()), Some(re(co.a2a2()))),
        Quantity::CohXphi => (re(co.xphi_literal(phi)), Some(re(co.xphi(phi)))),
        Quantity::CohA2 => (co.a2_literal(), Some(co.a2())),
        Quantity::SqNorm => {
            // κ itself, then squared back
            let kappa = std::f64::consts::SQRT_2 / (2.0 * sq.norm_inv()).sqrt();
            (re(1.0 / (kappa * kappa)), None)
        }
        Quantity::SqAmp => (sq.amplitude_literal(AMPLITUDE_N, spec.r), Some(sq.amplitude(AMPLITUDE_N))),
        Quantity::SqMeanN => (re(sq.mean_n_literal()), Some(re(sq.mean_n()))),
        Quantity::SqXphi => (re(sq.xphi_literal(phi)), Some(re(sq.xphi(phi)))),
        Quantity::SqX2 => (re(sq.x2_literal(phi)), Some(re(sq.x2(phi)))),
        Quantity::SqInitG2 => (re(initial::sq_g2(spec.eta)), None),
        Quantity::SqInitQ => (re(initial::sq_q(spec.eta)), None),
        Quantity::SqInitSphi => (re(initial::sq_sphi(spec.eta, spec.delta, phi)), None),
        Quantity::CatNorm => (re(ca().norm_inv()), None),
        Quantity::CatMeanN => (re(ca().mean_n()), None),
        Quantity::CatA2A2 => (ca().a2a2_literal(), Some(re(ca().a2a2()))),
        Quantity::CatAmean => (ca().amean_literal(), Some(ca().amean())),
        Quantity::CatA2 => (ca().a2_literal(), Some(ca().a2())),
        Quantity::CatInitQ => (re(initial::cat_q(spec.r, spec.omega)), None),
        Quantity::CatInitG2 => (re(initial::cat_g2(spec.r, spec.omega)), None),
        Quantity::CatInitSphi => (
            re(initial::cat_sphi_literal(spec.r, spec.omega, phi)),
            Some(re(initial::cat_sphi(spec.r, spec.delta, spec.omega, phi))),
        ),
    }
}
