//! Squeezed-vacuum pointer `S(ξ)|0⟩`, `ξ = η e^{iδ}`.
//!
//! The final pointer is `κ/2 [(1+w)|ξ, s/2⟩ + (1−w)|ξ, −s/2⟩]` with
//! `|ξ, β⟩ = D(β)S(ξ)|0⟩`. Moments below use `μ = cosh η`,
//! `ν = e^{iδ} sinh η`, and the branch overlap
//! `E = exp(−½s²|cosh η + e^{iδ} sinh η|²)`.

use std::f64::consts::SQRT_2;

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::fock::FockVector;
use crate::postselect::MeasurementConfig;
use crate::states::{hermite, squeezed_coherent_amplitudes};

#[derive(Copy, Clone, Debug)]
pub struct SqueezedForms {
    pub eta: f64,
    pub delta: f64,
    pub s: f64,
    pub theta: f64,
    pub phi_sys: f64,
    w: C64,
}

impl SqueezedForms {
    pub fn new(eta: f64, delta: f64, cfg: &MeasurementConfig) -> Self {
        let w = C64::from_polar((0.5 * cfg.theta).tan(), cfg.phi_sys);
        Self { eta, delta, s: cfg.s, theta: cfg.theta, phi_sys: cfg.phi_sys, w }
    }

    fn mu(&self) -> f64 {
        self.eta.cosh()
    }

    fn nu(&self) -> C64 {
        C64::from_polar(self.eta.sinh(), self.delta)
    }

    fn overlap(&self) -> f64 {
        (-0.5 * self.s * self.s * (self.mu() + self.nu()).norm_sqr()).exp()
    }

    fn w2(&self) -> f64 {
        self.w.norm_sqr()
    }

    /// `κ⁻² = ½[1 + |w|² + (1 − |w|²) E]`.
    pub fn norm_inv(&self) -> f64 {
        0.5 * (1.0 + self.w2() + (1.0 - self.w2()) * self.overlap())
    }

    fn kappa2(&self) -> f64 {
        1.0 / self.norm_inv()
    }

    /// `⟨n|D(s/2)S(ξ)|0⟩`.
    pub fn amplitude(&self, n: usize) -> C64 {
        squeezed_coherent_amplitudes(C64::new(0.5 * self.s, 0.0), self.eta, self.delta, n + 1)[n]
    }

    /// Literal amplitude: Hermite argument `χ (e^{iδ} sinh 2r)^{−1/2}` with
    /// `r` the coherent modulus, which is 0 for this pointer.
    pub fn amplitude_literal(&self, n: usize, r: f64) -> C64 {
        let beta = 0.5 * self.s;
        let rot = C64::from_polar(1.0, self.delta);
        let th = self.eta.tanh();
        let chi = beta * self.eta.cosh() + beta * rot * self.eta.sinh();
        let arg = chi * (rot * (2.0 * r).sinh()).powf(-0.5);
        let pref = (-0.5 * beta * beta - 0.5 * beta * beta * rot * th).exp() / self.eta.cosh().sqrt();
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        pref * (0.5 * rot * th).powf(0.5 * n as f64) / fact.sqrt() * hermite(n, arg)
    }

    /// Real interference term of `⟨a†a⟩`:
    /// `E[sinh²η − s² sinh²η (cosh 2η + sinh 2η cos δ) − s²(½ sinh 2η cos δ + sinh²η) − s²/4]`.
    fn mean_cross(&self) -> f64 {
        let (sh2, s2) = (self.eta.sinh().powi(2), self.s * self.s);
        let (c2, s2e, cd) = ((2.0 * self.eta).cosh(), (2.0 * self.eta).sinh(), self.delta.cos());
        self.overlap() * (sh2 - s2 * sh2 * (c2 + s2e * cd) - s2 * (0.5 * s2e * cd + sh2) - 0.25 * s2)
    }

    /// `⟨a†a⟩ = (κ²/4)[2(1+|w|²)(s²/4 + sinh²η) + 2(1−|w|²) X]`.
    pub fn mean_n(&self) -> f64 {
        let direct = 0.25 * self.s * self.s + self.eta.sinh().powi(2);
        0.25 * self.kappa2() * (2.0 * (1.0 + self.w2()) * direct + 2.0 * (1.0 - self.w2()) * self.mean_cross())
    }

    /// Literal form with
    /// `I = E(sinh²η + s²/4 − (s²/2)(1 + i sin δ sinh 2η))` entering as
    /// `2 Re[(1 − w)(1 + w)* I]`.
    pub fn mean_n_literal(&self) -> f64 {
        let s2 = self.s * self.s;
        let i_term = self.overlap()
            * C64::new(
                self.eta.sinh().powi(2) + 0.25 * s2 - 0.5 * s2,
                -0.5 * s2 * self.delta.sin() * (2.0 * self.eta).sinh(),
            );
        let one = C64::new(1.0, 0.0);
        let direct = 0.25 * s2 + self.eta.sinh().powi(2);
        let cross = 2.0 * ((one - self.w) * (one + self.w).conj() * i_term).re;
        0.25 * self.kappa2() * (2.0 * (1.0 + self.w2()) * direct + cross)
    }

    fn f_term(&self) -> C64 {
        let eta = self.eta;
        eta.cosh().powi(2) + 0.5 * C64::from_polar((2.0 * eta).sinh(), self.delta) - 0.5
    }

    /// `⟨X_φ⟩ = κ²s/(4√2) [4 Re w cos φ + 2E Re(F P e^{−iφ}) − 2E Re(F Q e^{−iφ})]`
    /// with `F = cosh²η + ½ e^{iδ} sinh 2η − ½`, `P = (1+w)(1−w)*`,
    /// `Q = (1+w)*(1−w)`.
    pub fn xphi(&self, phi: f64) -> f64 {
        let one = C64::new(1.0, 0.0);
        let (e, f) = (self.overlap(), self.f_term());
        let p = (one + self.w) * (one - self.w).conj();
        let q = (one + self.w).conj() * (one - self.w);
        let rot = C64::from_polar(1.0, -phi);
        self.kappa2() * self.s / (4.0 * SQRT_2)
            * (4.0 * self.w.re * phi.cos() + 2.0 * e * (f * p * rot).re - 2.0 * e * (f * q * rot).re)
    }

    /// Literal form: `cos φ |1+w|² − cos φ |1+w|²` in the direct part and
    /// `e^{∓iθ}` on the interference terms, `θ` the preselection angle.
    pub fn xphi_literal(&self, phi: f64) -> f64 {
        let one = C64::new(1.0, 0.0);
        let (e, f) = (self.overlap(), self.f_term());
        let direct = phi.cos() * (one + self.w).norm_sqr() - phi.cos() * (one + self.w).norm_sqr();
        let first = (C64::from_polar(1.0, -self.theta) * (one + self.w) * (one - self.w).conj() * f).re;
        let second = (C64::from_polar(1.0, self.theta) * (one + self.w).conj() * (one - self.w) * f).re;
        self.kappa2() * self.s / (4.0 * SQRT_2) * (direct + 2.0 * e * first - 2.0 * e * second)
    }

    /// `⟨a²⟩ = (κ²/4)[2(1+|w|²)(s²/4 − μν) + 2(1−|w|²) Y]` with
    /// `Y = E[s²/4 − μν + s²(μν + sinh²η) + s²ν²(μ + ν*)²]`.
    pub fn a2(&self) -> C64 {
        let (mu, nu, s2) = (self.mu(), self.nu(), self.s * self.s);
        let y = self.overlap()
            * (0.25 * s2 - mu * nu + s2 * (mu * nu + self.eta.sinh().powi(2)) + s2 * nu * nu * (mu + nu.conj()).powi(2));
        0.25 * self.kappa2() * (2.0 * (1.0 + self.w2()) * (0.25 * s2 - mu * nu) + 2.0 * (1.0 - self.w2()) * y)
    }

    /// Literal `II` with its `III`, which use `e^{−iδ}` and enter as
    /// `(1 − |w|²) III`.
    pub fn a2_literal(&self) -> C64 {
        let (eta, s2) = (self.eta, self.s * self.s);
        let one = C64::new(1.0, 0.0);
        let back = C64::from_polar(1.0, -self.delta);
        let half_sh2 = 0.5 * (2.0 * eta).sinh();
        let sh2 = eta.sinh().powi(2);
        let head = 0.25 * s2 - half_sh2 * back;
        let iii = (0.25 * s2
            + s2 * (half_sh2 * back + sh2)
            + s2 * (eta.cosh() + C64::from_polar(eta.sinh(), self.delta)).powi(2) * back * back * sh2
            - back * half_sh2)
            * self.overlap();
        0.25 * self.kappa2()
            * (head * (one + self.w).norm_sqr() + head * (one - self.w).norm_sqr() + (1.0 - self.w2()) * iii)
    }

    /// `⟨X_φ²⟩ = ½[2 Re(⟨a²⟩ e^{−2iφ}) + 2⟨a†a⟩ + 1]`.
    pub fn x2(&self, phi: f64) -> f64 {
        let rot = C64::from_polar(1.0, -2.0 * phi);
        0.5 * (2.0 * (self.a2() * rot).re + 2.0 * self.mean_n() + 1.0)
    }

    pub fn x2_literal(&self, phi: f64) -> f64 {
        let rot = C64::from_polar(1.0, -2.0 * phi);
        0.5 * (2.0 * (self.a2_literal() * rot).re + 2.0 * self.mean_n_literal() + 1.0)
    }

    /// The normalized two-branch squeezed coherent superposition.
    pub fn final_state(&self, dim: usize) -> Result<FockVector> {
        let half = C64::new(0.5 * self.s, 0.0);
        let up = squeezed_coherent_amplitudes(half, self.eta, self.delta, dim);
        let down = squeezed_coherent_amplitudes(-half, self.eta, self.delta, dim);
        let k = 0.5 * self.kappa2().sqrt();
        let (cu, cd) = (k * (1.0 + self.w), k * (1.0 - self.w));
        FockVector::from_amps(up.iter().zip(&down).map(|(u, d)| cu * u + cd * d).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::fidelity;
    use crate::observables as obs;
    use crate::postselect::{apply_postselected_measurement, postselection_success_naive};
    use crate::states::squeezed_vacuum;
    use std::f64::consts::PI;

    fn check(eta: f64, delta: f64, s: f64, theta: f64, phi_sys: f64) {
        let cfg = MeasurementConfig::new(s, theta, phi_sys).unwrap();
        let f = SqueezedForms::new(eta, delta, &cfg);
        let ptr = squeezed_vacuum(eta, delta, 160).unwrap();
        let (out, p) = apply_postselected_measurement(&cfg, &ptr).unwrap();
        assert!((f.norm_inv() - p / postselection_success_naive(&cfg)).abs() < 1e-10);
        assert!((f.mean_n() - obs::mean_n(&out)).abs() < 1e-10);
        assert!((f.a2() - obs::mean_a2(&out)).norm() < 1e-10);
        for phi in [0.0, 0.4, 1.3, 2.9] {
            let (x, x2) = obs::quadrature_moments(&out, phi).unwrap();
            assert!((f.xphi(phi) - x).abs() < 1e-10, "phi = {phi}");
            assert!((f.x2(phi) - x2).abs() < 1e-10, "phi = {phi}");
        }
        let closed = f.final_state(160).unwrap();
        assert!(fidelity(&closed, &out).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn matches_fock_pipeline() {
        check(0.5, PI / 3.0, 1.0, 7.0 * PI / 9.0, PI / 3.0);
        check(0.2, 2.5, 2.0, PI / 9.0, 1.0);
        check(1.0, 0.0, 0.4, 1.2, 5.0);
    }

    #[test]
    fn zero_coupling_limits() {
        let cfg = MeasurementConfig::new(0.0, 1.0, 0.5).unwrap();
        let f = SqueezedForms::new(0.6, 1.1, &cfg);
        assert!((f.norm_inv() - 1.0).abs() < 1e-15);
        assert!((f.mean_n() - 0.6f64.sinh().powi(2)).abs() < 1e-14);
        assert!(f.xphi(0.3).abs() < 1e-15);
    }

    #[test]
    fn literal_amplitude_is_singular() {
        let cfg = MeasurementConfig::new(1.0, 1.0, 0.5).unwrap();
        let f = SqueezedForms::new(0.5, PI / 3.0, &cfg);
        let lit = f.amplitude_literal(2, 0.0);
        assert!(!(lit.re.is_finite() && lit.im.is_finite()));
        // with sinh 2η in place of sinh 2r the literal form is exact
        let fixed = f.amplitude_literal(2, 0.5);
        assert!((fixed - C64::new(0.057061771565151, -0.09081220502755)).norm() < 1e-9);
        assert!((fixed - f.amplitude(2)).norm() < 1e-13);
    }

    #[test]
    fn literal_quadrature_loses_direct_term() {
        // w = 0: both forms vanish
        let cfg = MeasurementConfig::new(1.0, 0.0, 0.0).unwrap();
        let f = SqueezedForms::new(0.5, 0.7, &cfg);
        assert!(f.xphi(0.4).abs() < 1e-15 && f.xphi_literal(0.4).abs() < 1e-15);
        // real w, θ = π/2: only the direct term survives in the corrected form
        let cfg = MeasurementConfig::new(1.0, PI / 2.0, 0.0).unwrap();
        let f = SqueezedForms::new(0.5, 0.7, &cfg);
        let direct = f.kappa2() * 4.0 / (4.0 * SQRT_2);
        assert!((f.xphi(0.0) - direct).abs() < 1e-14);
        assert!(f.xphi_literal(0.0).abs() < 1e-14);
    }
}
