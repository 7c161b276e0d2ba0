//! Photon statistics and quadrature squeezing from Fock-basis sums.
//!
//! Quadratures follow `X_φ = (a e^{−iφ} + a† e^{iφ})/√2`, so the vacuum has
//! `Var X_φ = ½` and the squeezing parameter `S_φ = Var X_φ − ½` is bounded
//! below by `−½`.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::tol;

/// `P(n) = |⟨n|v⟩|²`.
pub fn photon_distribution(v: &FockVector) -> Vec<f64> {
    v.amps().iter().map(|z| z.norm_sqr()).collect()
}

/// `(Σ P, Σ n P, Σ n(n−1) P)`.
fn number_sums(v: &FockVector) -> (f64, f64, f64) {
    let mut total = 0.0;
    let mut first = 0.0;
    let mut second = 0.0;
    for (n, z) in v.amps().iter().enumerate() {
        let p = z.norm_sqr();
        let n = n as f64;
        total += p;
        first += n * p;
        second += n * (n - 1.0) * p;
    }
    (total, first, second)
}

/// `⟨a†a⟩`.
pub fn mean_n(v: &FockVector) -> f64 {
    let (total, first, _) = number_sums(v);
    if total == 0.0 {
        return 0.0;
    }
    first / total
}

/// `⟨a†²a²⟩`.
pub fn factorial_moment2(v: &FockVector) -> f64 {
    let (total, _, second) = number_sums(v);
    if total == 0.0 {
        return 0.0;
    }
    second / total
}

/// `g²(0) = ⟨a†²a²⟩/⟨a†a⟩²`; undefined for the vacuum.
pub fn g2(v: &FockVector) -> Result<f64> {
    let mean = mean_n(v);
    if mean < tol::VACUUM_MEAN {
        return Err(Error::VacuumUndefined(mean));
    }
    Ok(factorial_moment2(v) / (mean * mean))
}

/// `Q = (⟨a†²a²⟩ − ⟨n⟩²)/⟨n⟩`, which is `⟨n⟩(g² − 1)`; 0 for the vacuum.
pub fn mandel_q(v: &FockVector) -> f64 {
    let mean = mean_n(v);
    if mean == 0.0 {
        return 0.0;
    }
    (factorial_moment2(v) - mean * mean) / mean
}

/// `⟨a⟩`.
pub fn mean_a(v: &FockVector) -> C64 {
    let a = v.amps();
    let total = v.norm_sqr();
    let sum: C64 = (0..a.len().saturating_sub(1))
        .map(|n| a[n].conj() * a[n + 1] * ((n + 1) as f64).sqrt())
        .sum();
    if total == 0.0 { sum } else { sum / total }
}

/// `⟨a²⟩`.
pub fn mean_a2(v: &FockVector) -> C64 {
    let a = v.amps();
    let total = v.norm_sqr();
    let sum: C64 = (0..a.len().saturating_sub(2))
        .map(|n| a[n].conj() * a[n + 2] * (((n + 1) * (n + 2)) as f64).sqrt())
        .sum();
    if total == 0.0 { sum } else { sum / total }
}

fn require_headroom(v: &FockVector) -> Result<()> {
    if !v.is_well_truncated() {
        return Err(Error::TruncationOverflow { dim: v.dim(), tail_mass: v.tail_mass() });
    }
    Ok(())
}

/// `(⟨X_φ⟩, ⟨X_φ²⟩)`.
pub fn quadrature_moments(v: &FockVector, phi_quad: f64) -> Result<(f64, f64)> {
    require_headroom(v)?;
    let rot = C64::from_polar(1.0, -phi_quad);
    let x = std::f64::consts::SQRT_2 * (mean_a(v) * rot).re;
    let x2 = 0.5 * (2.0 * (mean_a2(v) * rot * rot).re + 2.0 * mean_n(v) + 1.0);
    Ok((x, x2))
}

/// `S_φ = Var X_φ − ½`.
pub fn squeezing_parameter(v: &FockVector, phi_quad: f64) -> Result<f64> {
    let (x, x2) = quadrature_moments(v, phi_quad)?;
    Ok(x2 - x * x - 0.5)
}

/// `count` uniform angles on `[0, π)`.
pub fn phi_grid(count: usize) -> Vec<f64> {
    (0..count).map(|k| PI * k as f64 / count as f64).collect()
}

pub fn default_phi_grid() -> Vec<f64> {
    phi_grid(64)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObservableReport {
    pub photon_dist: Vec<f64>,
    pub mean_n: f64,
    /// `None` for the vacuum.
    pub g2: Option<f64>,
    pub mandel_q: f64,
    pub s_phi: Vec<(f64, f64)>,
    pub success_prob: Option<f64>,
}

impl ObservableReport {
    pub fn s_at(&self, phi_quad: f64) -> Option<f64> {
        self.s_phi.iter().find(|(p, _)| (p - phi_quad).abs() < 1e-12).map(|&(_, s)| s)
    }

    fn check(&self) -> Result<()> {
        let total: f64 = self.photon_dist.iter().sum();
        if (total - 1.0).abs() > tol::REPORT_NORM {
            return Err(Error::InvariantViolation { quantity: "photon_dist", value: total });
        }
        if self.mandel_q < -1.0 - tol::REPORT_INVARIANT {
            return Err(Error::InvariantViolation { quantity: "mandel_q", value: self.mandel_q });
        }
        if let Some(&(_, s)) = self.s_phi.iter().find(|(_, s)| *s < -0.5 - tol::REPORT_INVARIANT) {
            return Err(Error::InvariantViolation { quantity: "s_phi", value: s });
        }
        if let Some(g2) = self.g2 {
            let gap = self.mandel_q - self.mean_n * (g2 - 1.0);
            if gap.abs() > tol::REPORT_INVARIANT {
                return Err(Error::InvariantViolation { quantity: "g2", value: gap });
            }
        }
        Ok(())
    }
}

/// All observables of a normalized state, with the report invariants enforced.
pub fn full_report(v: &FockVector, phi_grid: &[f64]) -> Result<ObservableReport> {
    let g2 = match g2(v) {
        Ok(g) => Some(g),
        Err(Error::VacuumUndefined(_)) => None,
        Err(e) => return Err(e),
    };
    let s_phi = phi_grid
        .iter()
        .map(|&phi| squeezing_parameter(v, phi).map(|s| (phi, s)))
        .collect::<Result<Vec<_>>>()?;
    let report = ObservableReport {
        photon_dist: photon_distribution(v),
        mean_n: mean_n(v),
        g2,
        mandel_q: mandel_q(v),
        s_phi,
        success_prob: None,
    };
    report.check()?;
    Ok(report)
}
