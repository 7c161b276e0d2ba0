//! Weak values and the postselected measurement transform.
//!
//! The system starts in `cos(θ/2)|↑⟩ + e^{iφ} sin(θ/2)|↓⟩`, couples to the
//! pointer through `exp(−i s σ_x ⊗ P)`, and is postselected onto `|↑⟩`. With
//! `σ_x² = 1` the evolution splits into `D(±s/2)` branches, so the pointer
//! ends up in `c₊ D(s/2)|ψ⟩ + c₋ D(−s/2)|ψ⟩` with
//! `c± = ½(cos(θ/2) ± e^{iφ} sin(θ/2))`.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::{displace, normalize, FockVector};
use crate::states::PointerSpec;
use crate::tol;

/// Coupling strength `s` and preselection angles `(θ, φ)`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct MeasurementConfig {
    pub s: f64,
    pub theta: f64,
    pub phi_sys: f64,
}

impl MeasurementConfig {
    pub fn new(s: f64, theta: f64, phi_sys: f64) -> Result<Self> {
        let cfg = Self { s, theta, phi_sys };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        match name {
            "s" => Some(self.s),
            "theta" => Some(self.theta),
            "phi_sys" => Some(self.phi_sys),
            _ => None,
        }
    }

    pub fn set(&mut self, name: &str, value: f64) -> bool {
        let slot = match name {
            "s" => &mut self.s,
            "theta" => &mut self.theta,
            "phi_sys" => &mut self.phi_sys,
            _ => return false,
        };
        *slot = value;
        true
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.s.is_finite() && self.s >= 0.0) {
            return Err(Error::invalid("s", "must be finite and non-negative"));
        }
        if !(self.theta.is_finite() && self.theta >= 0.0) {
            return Err(Error::invalid("theta", "must lie in [0, π)"));
        }
        if self.theta >= PI - tol::THETA_POLE {
            return Err(Error::DivergentWeakValue(self.theta));
        }
        if !(self.phi_sys.is_finite() && (-1e-12..=2.0 * PI + 1e-12).contains(&self.phi_sys)) {
            return Err(Error::invalid("phi_sys", "must lie in [0, 2π)"));
        }
        Ok(())
    }

    /// `(c₊, c₋)` including the overlap `⟨↑|ψ_i⟩ = cos(θ/2)`.
    pub fn branch_coefficients(&self) -> (C64, C64) {
        let (sin, cos) = (0.5 * self.theta).sin_cos();
        let tilt = C64::from_polar(sin, self.phi_sys);
        (0.5 * (cos + tilt), 0.5 * (cos - tilt))
    }
}

/// Weak value `⟨σ_x⟩_w`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct WeakValue {
    pub value: C64,
}

impl WeakValue {
    pub fn new(value: C64) -> Self {
        Self { value }
    }
}

/// `⟨σ_x⟩_w = e^{iφ} tan(θ/2)`.
pub fn weak_value(cfg: &MeasurementConfig) -> Result<WeakValue> {
    cfg.validate()?;
    Ok(WeakValue::new(C64::from_polar((0.5 * cfg.theta).tan(), cfg.phi_sys)))
}

/// `cos²(θ/2)`, the success probability with the coupling switched off.
pub fn postselection_success_naive(cfg: &MeasurementConfig) -> f64 {
    (0.5 * cfg.theta).cos().powi(2)
}

fn superpose(plus: C64, minus: C64, s: f64, pointer: &FockVector) -> Result<FockVector> {
    let half = C64::new(0.5 * s, 0.0);
    let up = displace(half, pointer)?;
    let down = displace(-half, pointer)?;
    FockVector::linear_combination(&[(plus, &up), (minus, &down)])
}

fn finish(raw: FockVector) -> Result<(FockVector, f64)> {
    let weight = raw.norm_sqr();
    if !(weight >= tol::DESTRUCTIVE_INTERFERENCE) {
        return Err(Error::ZeroVector);
    }
    let (state, _) = normalize(&raw)?;
    Ok((state, weight))
}

/// Un-normalized final pointer `c₊ D(s/2)|ψ⟩ + c₋ D(−s/2)|ψ⟩`.
pub fn postselected_unnormalized(cfg: &MeasurementConfig, pointer: &FockVector) -> Result<FockVector> {
    cfg.validate()?;
    let (plus, minus) = cfg.branch_coefficients();
    superpose(plus, minus, cfg.s, pointer)
}

/// Normalized final pointer and the exact success probability `‖Φ̃‖²`.
pub fn apply_postselected_measurement(
    cfg: &MeasurementConfig,
    pointer: &FockVector,
) -> Result<(FockVector, f64)> {
    finish(postselected_unnormalized(cfg, pointer)?)
}

/// Same transform with coefficients `½(1 ± aw)` and no overlap factor.
/// The returned weight is relative to that convention.
pub fn apply_with_explicit_weak_value(
    aw: WeakValue,
    s: f64,
    pointer: &FockVector,
) -> Result<(FockVector, f64)> {
    if !(s.is_finite() && s >= 0.0) {
        return Err(Error::invalid("s", "must be finite and non-negative"));
    }
    if !(aw.value.re.is_finite() && aw.value.im.is_finite()) {
        return Err(Error::invalid("weak_value", "must be finite"));
    }
    let one = C64::new(1.0, 0.0);
    finish(superpose(0.5 * (one + aw.value), 0.5 * (one - aw.value), s, pointer)?)
}

/// Truncation used when a caller does not pick one: `POSTSEL_DIM` or 128.
pub fn default_dim() -> usize {
    std::env::var("POSTSEL_DIM")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&d| d >= 4)
        .unwrap_or(tol::DEFAULT_DIM)
}

/// Initial and final pointer of one measurement on a basis large enough for
/// both.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub dim: usize,
    pub initial: FockVector,
    pub final_state: FockVector,
    pub success_prob: f64,
}

fn attempt(spec: &PointerSpec, cfg: &MeasurementConfig, dim: usize) -> Result<Outcome> {
    let initial = spec.build(dim)?;
    let half = C64::new(0.5 * cfg.s, 0.0);
    let up = displace(half, &initial)?;
    let down = displace(-half, &initial)?;
    let tail = up.tail_mass().max(down.tail_mass());
    if tail >= tol::WELL_TRUNCATED {
        return Err(Error::TruncationOverflow { dim, tail_mass: tail });
    }
    let (plus, minus) = cfg.branch_coefficients();
    let raw = FockVector::linear_combination(&[(plus, &up), (minus, &down)])?;
    let (final_state, success_prob) = finish(raw)?;
    // a small success probability magnifies the relative tail
    if !final_state.is_well_truncated() {
        return Err(Error::TruncationOverflow { dim, tail_mass: final_state.tail_mass() });
    }
    Ok(Outcome { dim, initial, final_state, success_prob })
}

/// Build the pointer and apply the measurement, doubling the basis from
/// `base_dim` up to 1024 until the pointer, both displaced branches and the
/// final pointer are well truncated.
pub fn evaluate(spec: &PointerSpec, cfg: &MeasurementConfig, base_dim: usize) -> Result<Outcome> {
    spec.validate()?;
    cfg.validate()?;
    let mut dim = base_dim.clamp(4, tol::MAX_DIM);
    loop {
        match attempt(spec, cfg, dim) {
            Err(Error::TruncationOverflow { .. }) if dim < tol::MAX_DIM => {
                dim = (dim * 2).min(tol::MAX_DIM);
            }
            other => return other,
        }
    }
}

/// Pointer alone on an adequately sized basis.
pub fn build_pointer(spec: &PointerSpec, base_dim: usize) -> Result<FockVector> {
    let mut dim = base_dim.clamp(4, tol::MAX_DIM);
    loop {
        match spec.build(dim) {
            Err(Error::TruncationOverflow { .. }) if dim < tol::MAX_DIM => {
                dim = (dim * 2).min(tol::MAX_DIM);
            }
            other => return other,
        }
    }
}
