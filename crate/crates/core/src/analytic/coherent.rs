//! Coherent pointer `|α⟩`, `α = r e^{iϑ}`.
//!
//! The final pointer is
//! `λ/√2 [(1+w) e^{−i(s/2)Im α}|α + s/2⟩ + (1−w) e^{i(s/2)Im α}|α − s/2⟩]`
//! with `w` the weak value. Moments below use `β = s/2`, `L = λ²` and the
//! interference factor `C = (1 + w*)(1 − w) e^{−s²/2} e^{2is Im α}`.

use std::f64::consts::SQRT_2;

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::fock::FockVector;
use crate::postselect::MeasurementConfig;
use crate::states::coherent;

#[derive(Copy, Clone, Debug)]
pub struct CoherentForms {
    pub r: f64,
    pub vartheta: f64,
    pub s: f64,
    pub theta: f64,
    pub phi_sys: f64,
    alpha: C64,
    w: C64,
}

impl CoherentForms {
    pub fn new(r: f64, vartheta: f64, cfg: &MeasurementConfig) -> Self {
        let w = C64::from_polar((0.5 * cfg.theta).tan(), cfg.phi_sys);
        Self {
            r,
            vartheta,
            s: cfg.s,
            theta: cfg.theta,
            phi_sys: cfg.phi_sys,
            alpha: C64::from_polar(r, vartheta),
            w,
        }
    }

    fn beta(&self) -> f64 {
        0.5 * self.s
    }

    fn plus(&self) -> C64 {
        self.alpha + self.beta()
    }

    fn minus(&self) -> C64 {
        self.alpha - self.beta()
    }

    fn wp(&self) -> f64 {
        (1.0 + self.w).norm_sqr()
    }

    fn wm(&self) -> f64 {
        (1.0 - self.w).norm_sqr()
    }

    fn cross(&self) -> C64 {
        let one = C64::new(1.0, 0.0);
        let phase = C64::from_polar((-0.5 * self.s * self.s).exp(), 2.0 * self.s * self.alpha.im);
        (one + self.w.conj()) * (one - self.w) * phase
    }

    /// `λ⁻² = 1 + |w|² + e^{−s²/2} Re[(1 + w)(1 − w*) e^{−2is Im α}]`.
    pub fn norm_inv(&self) -> f64 {
        1.0 + self.w.norm_sqr() + self.cross().re
    }

    fn lambda2(&self) -> f64 {
        1.0 / self.norm_inv()
    }

    /// `⟨a†a⟩ = (L/2)[|1+w|²|α+β|² + |1−w|²|α−β|² + 2 Re(C (α+β)*(α−β))]`.
    pub fn mean_n(&self) -> f64 {
        let (p, m) = (self.plus(), self.minus());
        0.5 * self.lambda2()
            * (self.wp() * p.norm_sqr() + self.wm() * m.norm_sqr() + 2.0 * (self.cross() * p.conj() * m).re)
    }

    /// Literal form, with prefactor `L/4`.
    pub fn mean_n_literal(&self) -> f64 {
        let (p, m) = (self.plus(), self.minus());
        let w = self.w;
        let phase = C64::from_polar(1.0, 2.0 * self.s * self.alpha.im);
        let factor = C64::new(1.0 - w.norm_sqr(), -2.0 * w.im);
        let cross = 2.0 * (-0.5 * self.s * self.s).exp() * (phase * factor * p.conj() * m).re;
        0.25 * self.lambda2() * (self.wp() * p.norm_sqr() + self.wm() * m.norm_sqr() + cross)
    }

    /// `⟨a†²a²⟩ = (L/2)[|1+w|²|α+β|⁴ + |1−w|²|α−β|⁴ + 2 Re(C (α+β)*²(α−β)²)]`.
    pub fn a2a2(&self) -> f64 {
        let (p, m) = (self.plus(), self.minus());
        let cross = 2.0 * (self.cross() * p.conj().powi(2) * m.powi(2)).re;
        0.5 * self.lambda2() * (self.wp() * p.norm_sqr().powi(2) + self.wm() * m.norm_sqr().powi(2) + cross)
    }

    /// Literal form: prefactor `L/4` and phase `e^{2is|α| sin φ}`.
    pub fn a2a2_literal(&self) -> f64 {
        let (p, m) = (self.plus(), self.minus());
        let one = C64::new(1.0, 0.0);
        let phase = C64::from_polar(1.0, 2.0 * self.s * self.r * self.phi_sys.sin());
        let cross = 2.0
            * (-0.5 * self.s * self.s).exp()
            * (phase * (one + self.w.conj()) * (one - self.w) * p.conj().powi(2) * m.powi(2)).re;
        0.25 * self.lambda2() * (self.wp() * p.norm_sqr().powi(2) + self.wm() * m.norm_sqr().powi(2) + cross)
    }

    /// `⟨X_φ⟩ = (L/√2)[2(1+|w|²) r cos(ϑ−φ) + 2s cos φ Re w + 2r cos(ϑ−φ) Re C − s sin φ Im C]`.
    pub fn xphi(&self, phi: f64) -> f64 {
        let c = self.cross();
        let proj = self.r * (self.vartheta - phi).cos();
        self.lambda2() / SQRT_2
            * (2.0 * (1.0 + self.w.norm_sqr()) * proj + 2.0 * self.s * phi.cos() * self.w.re + 2.0 * proj * c.re
                - self.s * phi.sin() * c.im)
    }

    /// Literal form: half the above, with `cos(φ − θ)` on the direct term.
    pub fn xphi_literal(&self, phi: f64) -> f64 {
        let one = C64::new(1.0, 0.0);
        let phase = C64::from_polar(1.0, 2.0 * self.s * self.alpha.im);
        let tail = C64::new(2.0 * self.r * (self.vartheta - phi).cos(), self.s * phi.sin());
        let cross = 0.5
            * (-0.5 * self.s * self.s).exp()
            * (phase * (one - self.w) * (one + self.w.conj()) * tail).re;
        self.lambda2() / SQRT_2
            * ((1.0 + self.w.norm_sqr()) * self.r * (phi - self.theta).cos() + self.s * phi.cos() * self.w.re + cross)
    }

    /// `⟨a²⟩ = (L/2)[|1+w|²(α+β)² + |1−w|²(α−β)² + C(α−β)² + C*(α+β)²]`.
    pub fn a2(&self) -> C64 {
        self.a2_scaled(0.5)
    }

    /// Literal form, with prefactor `L/4`.
    pub fn a2_literal(&self) -> C64 {
        self.a2_scaled(0.25)
    }

    fn a2_scaled(&self, k: f64) -> C64 {
        let (p, m) = (self.plus(), self.minus());
        let c = self.cross();
        k * self.lambda2() * (self.wp() * p * p + self.wm() * m * m + c * m * m + c.conj() * p * p)
    }

    /// `⟨X_φ²⟩ = ½[2 Re(⟨a²⟩ e^{−2iφ}) + 2⟨n⟩ + 1]`.
    pub fn x2(&self, phi: f64) -> f64 {
        0.5 * (2.0 * (self.a2() * C64::from_polar(1.0, -2.0 * phi)).re + 2.0 * self.mean_n() + 1.0)
    }

    /// The normalized two-coherent-state superposition on `dim` levels.
    pub fn final_state(&self, dim: usize) -> Result<FockVector> {
        let up = coherent(self.plus().norm(), self.plus().arg(), dim)?;
        let down = coherent(self.minus().norm(), self.minus().arg(), dim)?;
        let k = (0.5 * self.lambda2()).sqrt();
        let half = 0.5 * self.s * self.alpha.im;
        let cu = k * (1.0 + self.w) * C64::from_polar(1.0, -half);
        let cd = k * (1.0 - self.w) * C64::from_polar(1.0, half);
        FockVector::linear_combination(&[(cu, &up), (cd, &down)])
    }
}
