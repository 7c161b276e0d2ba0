//! Pointer states: coherent, squeezed vacuum, and Schrödinger cat.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::tol;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointerKind {
    Coherent,
    SqueezedVacuum,
    Cat,
}

impl PointerKind {
    pub fn name(self) -> &'static str {
        match self {
            PointerKind::Coherent => "coherent",
            PointerKind::SqueezedVacuum => "squeezed",
            PointerKind::Cat => "cat",
        }
    }

    /// Parameters this kind reads. Everything else must stay zero.
    pub fn relevant(self) -> &'static [&'static str] {
        match self {
            PointerKind::Coherent => &["r", "vartheta"],
            PointerKind::SqueezedVacuum => &["eta", "delta"],
            PointerKind::Cat => &["r", "delta", "omega"],
        }
    }
}

impl fmt::Display for PointerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PointerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "coherent" => Ok(PointerKind::Coherent),
            "squeezed" | "squeezed_vacuum" | "squeezedvacuum" => Ok(PointerKind::SqueezedVacuum),
            "cat" => Ok(PointerKind::Cat),
            other => Err(Error::invalid("pointer", format!("unknown pointer kind `{other}`"))),
        }
    }
}

/// Initial pointer choice with its parameters.
///
/// Coherent: `α = r e^{iϑ}`. Squeezed vacuum: `ξ = η e^{iδ}`. Cat:
/// `α = r e^{iδ}` with superposition phase `ω`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct PointerSpec {
    pub kind: PointerKind,
    pub r: f64,
    pub vartheta: f64,
    pub eta: f64,
    pub delta: f64,
    pub omega: f64,
}

impl PointerSpec {
    pub fn coherent(r: f64, vartheta: f64) -> Self {
        Self { kind: PointerKind::Coherent, r, vartheta, eta: 0.0, delta: 0.0, omega: 0.0 }
    }

    pub fn squeezed(eta: f64, delta: f64) -> Self {
        Self { kind: PointerKind::SqueezedVacuum, r: 0.0, vartheta: 0.0, eta, delta, omega: 0.0 }
    }

    pub fn cat(r: f64, delta: f64, omega: f64) -> Self {
        Self { kind: PointerKind::Cat, r, vartheta: 0.0, eta: 0.0, delta, omega }
    }

    /// All parameter slots by name.
    pub fn get(&self, name: &str) -> Option<f64> {
        match name {
            "r" => Some(self.r),
            "vartheta" => Some(self.vartheta),
            "eta" => Some(self.eta),
            "delta" => Some(self.delta),
            "omega" => Some(self.omega),
            _ => None,
        }
    }

    /// Set a parameter slot by name; returns `false` for unknown names.
    pub fn set(&mut self, name: &str, value: f64) -> bool {
        let slot = match name {
            "r" => &mut self.r,
            "vartheta" => &mut self.vartheta,
            "eta" => &mut self.eta,
            "delta" => &mut self.delta,
            "omega" => &mut self.omega,
            _ => return false,
        };
        *slot = value;
        true
    }

    /// Coherent amplitude `α` for the kinds that have one.
    pub fn alpha(&self) -> C64 {
        match self.kind {
            PointerKind::Coherent => C64::from_polar(self.r, self.vartheta),
            PointerKind::Cat => C64::from_polar(self.r, self.delta),
            PointerKind::SqueezedVacuum => C64::new(0.0, 0.0),
        }
    }

    pub fn validate(&self) -> Result<()> {
        const NAMES: [&str; 5] = ["r", "vartheta", "eta", "delta", "omega"];
        for name in NAMES {
            let value = self.get(name).unwrap_or(0.0);
            if !value.is_finite() {
                return Err(Error::invalid(static_name(name), "must be finite"));
            }
            if !self.kind.relevant().contains(&name) && value != 0.0 {
                return Err(Error::invalid(
                    static_name(name),
                    format!("not used by a {} pointer and must be 0", self.kind),
                ));
            }
        }
        if self.r < 0.0 {
            return Err(Error::invalid("r", "must be non-negative"));
        }
        if !(0.0..=tol::ETA_MAX).contains(&self.eta) {
            return Err(Error::invalid("eta", format!("must lie in [0, {}]", tol::ETA_MAX)));
        }
        let two_pi = 2.0 * PI + 1e-12;
        if !(-1e-12..=two_pi).contains(&self.delta) {
            return Err(Error::invalid("delta", "must lie in [0, 2π]"));
        }
        if !(-1e-12..=two_pi).contains(&self.omega) {
            return Err(Error::invalid("omega", "must lie in [0, 2π]"));
        }
        Ok(())
    }

    /// The normalized pointer on a basis of size `dim`.
    pub fn build(&self, dim: usize) -> Result<FockVector> {
        self.validate()?;
        match self.kind {
            PointerKind::Coherent => coherent(self.r, self.vartheta, dim),
            PointerKind::SqueezedVacuum => squeezed_vacuum(self.eta, self.delta, dim),
            PointerKind::Cat => cat(self.r, self.delta, self.omega, dim),
        }
    }
}

fn static_name(name: &str) -> &'static str {
    match name {
        "r" => "r",
        "vartheta" => "vartheta",
        "eta" => "eta",
        "delta" => "delta",
        _ => "omega",
    }
}

fn checked(amps: Vec<C64>) -> Result<FockVector> {
    let v = FockVector::from_amps(amps)?;
    // an underflowed or truncated series shows up as lost norm
    if !v.is_well_truncated() || (v.norm_sqr() - 1.0).abs() > 1e-10 {
        return Err(Error::TruncationOverflow { dim: v.dim(), tail_mass: v.tail_mass().max(1.0 - v.norm_sqr()) });
    }
    Ok(v)
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::invalid("dim", "must be at least 1"));
    }
    Ok(())
}

/// `|α⟩`, `α = r e^{iϑ}`: amplitudes `e^{−r²/2} αⁿ/√n!`.
pub fn coherent(r: f64, vartheta: f64, dim: usize) -> Result<FockVector> {
    check_dim(dim)?;
    if !(r >= 0.0 && r.is_finite() && vartheta.is_finite()) {
        return Err(Error::invalid("r", "must be finite and non-negative"));
    }
    let alpha = C64::from_polar(r, vartheta);
    let mut amps = Vec::with_capacity(dim);
    let mut cur = C64::new((-0.5 * r * r).exp(), 0.0);
    for n in 0..dim {
        if n > 0 {
            cur = cur * alpha / (n as f64).sqrt();
        }
        amps.push(cur);
    }
    checked(amps)
}

/// `S(ξ)|0⟩` with `S(ξ) = exp(½ξ* a² − ½ξ a†²)`, `ξ = η e^{iδ}`, from its
/// even-number series.
pub fn squeezed_vacuum(eta: f64, delta: f64, dim: usize) -> Result<FockVector> {
    check_dim(dim)?;
    if !(0.0..=tol::ETA_MAX).contains(&eta) || !delta.is_finite() {
        return Err(Error::invalid("eta", format!("must lie in [0, {}]", tol::ETA_MAX)));
    }
    let ratio = -C64::from_polar(eta.tanh(), delta);
    let mut amps = vec![C64::new(0.0, 0.0); dim];
    let mut cur = C64::new(1.0 / eta.cosh().sqrt(), 0.0);
    for m in 0..dim.div_ceil(2) {
        if m > 0 {
            let m = m as f64;
            cur = cur * ratio * ((2.0 * m - 1.0) / (2.0 * m)).sqrt();
        }
        amps[2 * m] = cur;
    }
    checked(amps)
}

/// `K⁻² = 2 + 2 e^{−2r²} cos ω`, written to stay accurate as `r → 0`.
pub fn cat_norm_weight(r: f64, omega: f64) -> f64 {
    let c = omega.cos();
    2.0 * (1.0 + c) + 2.0 * c * (-2.0 * r * r).exp_m1()
}

/// `K(|α⟩ + e^{iω}|−α⟩)`, `α = r e^{iδ}`.
pub fn cat(r: f64, delta: f64, omega: f64, dim: usize) -> Result<FockVector> {
    check_dim(dim)?;
    if !(r >= 0.0 && r.is_finite() && delta.is_finite() && omega.is_finite()) {
        return Err(Error::invalid("r", "must be finite and non-negative"));
    }
    let weight = cat_norm_weight(r, omega);
    if weight < tol::DEGENERATE_CAT {
        return Err(Error::DegenerateCat(weight));
    }
    let k = 1.0 / weight.sqrt();
    let alpha = C64::from_polar(r, delta);
    let phase = C64::new(omega.cos(), omega.sin());
    let mut amps = Vec::with_capacity(dim);
    let mut coh = C64::new((-0.5 * r * r).exp(), 0.0);
    for n in 0..dim {
        if n > 0 {
            coh = coh * alpha / (n as f64).sqrt();
        }
        let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
        amps.push(coh * k * (1.0 + phase * parity));
    }
    checked(amps)
}

/// Physicists' Hermite polynomial `H_n(z)` for complex `z`.
pub fn hermite(n: usize, z: C64) -> C64 {
    let mut prev = C64::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `⟨n|D(β)S(ξ)|0⟩` for `n = 0 … len−1`.
///
/// This is the Hermite-polynomial amplitude of the squeezed coherent state
/// with `H_n` evaluated at `γ (e^{iδ} sinh 2η)^{−1/2}`,
/// `γ = β cosh η + β* e^{iδ} sinh η`. The recurrence is carried on
/// `(½ e^{iδ} tanh η)^{n/2} H_n / √n!`, which obeys
///
/// `g_{n+1} √(n+1) = (γ / cosh η) g_n − √n e^{iδ} tanh η g_{n−1}`
///
/// and stays finite for every `n` and for `η → 0`.
pub fn squeezed_coherent_amplitudes(beta: C64, eta: f64, delta: f64, len: usize) -> Vec<C64> {
    let (ch, sh, th) = (eta.cosh(), eta.sinh(), eta.tanh());
    let rot = C64::from_polar(1.0, delta);
    let gamma = beta * ch + beta.conj() * rot * sh;
    let lead = gamma / ch;
    let damp = rot * th;
    let pref = (-0.5 * beta.norm_sqr() - 0.5 * beta.conj() * beta.conj() * rot * th).exp() / ch.sqrt();

    let mut out = Vec::with_capacity(len);
    let mut prev = C64::new(0.0, 0.0);
    let mut cur = C64::new(1.0, 0.0);
    for n in 0..len {
        out.push(pref * cur);
        let next = (lead * cur - damp * (n as f64).sqrt() * prev) / ((n + 1) as f64).sqrt();
        prev = cur;
        cur = next;
    }
    out
}

/// Single amplitude `⟨n|D(β)S(ξ)|0⟩` with real displacement `β = ±s/2`.
pub fn squeezed_coherent_amplitude(n: usize, beta: f64, eta: f64, delta: f64) -> C64 {
    squeezed_coherent_amplitudes(C64::new(beta, 0.0), eta, delta, n + 1)[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{displace, inner};
    use crate::observables;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn zero_parameters_give_vacuum() {
        let vac = FockVector::vacuum(32).unwrap();
        assert_eq!(coherent(0.0, 1.0, 32).unwrap(), vac);
        assert_eq!(squeezed_vacuum(0.0, 1.0, 32).unwrap(), vac);
    }

    #[test]
    fn coherent_is_poisson() {
        let v = coherent(1.0, PI / 3.0, 64).unwrap();
        let p = observables::photon_distribution(&v);
        assert!((p[0] - (-1f64).exp()).abs() < 1e-12);
        assert!((p[2] - 0.5 * (-1f64).exp()).abs() < 1e-12);
        assert!((observables::g2(&coherent(1.7, 0.0, 96).unwrap()).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn squeezed_vacuum_moments() {
        let v = squeezed_vacuum(0.5, PI / 3.0, 128).unwrap();
        // sinh²(0.5) and 3 + 1/sinh²(0.5), mpmath
        assert!((observables::mean_n(&v) - 0.271540317407621889).abs() < 1e-10);
        let g2 = observables::g2(&squeezed_vacuum(0.5, 0.0, 128).unwrap()).unwrap();
        assert!((g2 - 6.68269437683116927).abs() < 1e-8);
        assert!(v.amps().iter().skip(1).step_by(2).all(|z| *z == c(0.0, 0.0)));
    }

    #[test]
    fn cat_parity_and_degeneracy() {
        let even = cat(0.3, 0.0, 0.0, 64).unwrap();
        assert!(even.amps().iter().skip(1).step_by(2).all(|z| z.norm() <= 1e-14));
        let odd = cat(0.3, 0.0, PI, 64).unwrap();
        assert!(odd.amps().iter().step_by(2).all(|z| z.norm() <= 1e-14));
        assert!(matches!(cat(0.0, 0.0, PI, 16), Err(Error::DegenerateCat(_))));
        assert!((odd.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cat_statistics() {
        let v = cat(0.5, PI / 3.0, PI / 2.0, 64).unwrap();
        assert!(observables::mandel_q(&v).abs() < 1e-9);
        // odd cat r = 0.3: g2 = 1 − 4e^{−0.18}/(1 + e^{−0.18})², mpmath
        let odd = cat(0.3, 0.0, PI, 64).unwrap();
        let g2 = observables::g2(&odd).unwrap();
        assert!((g2 - 0.00805645992271752714).abs() < 1e-9);
        assert!(g2 < 1.0);
    }

    #[test]
    fn hermite_small_orders() {
        let z = c(0.3, -0.7);
        assert_eq!(hermite(0, z), c(1.0, 0.0));
        assert!((hermite(1, z) - 2.0 * z).norm() < 1e-15);
        assert!((hermite(2, z) - (4.0 * z * z - 2.0)).norm() < 1e-14);
        let h3 = 8.0 * z * z * z - 12.0 * z;
        assert!((hermite(3, z) - h3).norm() < 1e-14);
        let h4 = 16.0 * z.powi(4) - 48.0 * z * z + 12.0;
        assert!((hermite(4, z) - h4).norm() < 1e-13);
    }

    #[test]
    fn scaled_recurrence_matches_plain_hermite() {
        let (beta, eta, delta) = (c(0.6, 0.0), 0.7f64, 1.1);
        let rot = C64::from_polar(1.0, delta);
        let gamma = beta * eta.cosh() + beta.conj() * rot * eta.sinh();
        let arg = gamma / (rot * (2.0 * eta).sinh()).sqrt();
        let root = (0.5 * rot * eta.tanh()).sqrt();
        let pref = (-0.5 * beta.norm_sqr() - 0.5 * beta.conj() * beta.conj() * rot * eta.tanh()).exp()
            / eta.cosh().sqrt();
        let amps = squeezed_coherent_amplitudes(beta, eta, delta, 12);
        let mut fact = 1.0;
        for (n, amp) in amps.iter().enumerate() {
            if n > 0 {
                fact *= n as f64;
            }
            let direct = pref * root.powi(n as i32) * hermite(n, arg) / fact.sqrt();
            assert!((amp - direct).norm() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn squeezed_coherent_amplitude_limits() {
        let eta = 0.8;
        assert!((squeezed_coherent_amplitude(0, 0.0, eta, 0.4) - c(1.0 / eta.cosh().sqrt(), 0.0)).norm() < 1e-15);
        for n in [1, 3, 7, 21] {
            assert!(squeezed_coherent_amplitude(n, 0.0, eta, 0.4).norm() < 1e-14);
        }
        // η = 0 is a coherent state
        let coh = coherent(0.5, 0.0, 16).unwrap();
        let amps = squeezed_coherent_amplitudes(c(0.5, 0.0), 0.0, 0.0, 16);
        for (a, b) in amps.iter().zip(coh.amps()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn squeezed_coherent_matches_displaced_squeezed_vacuum() {
        // ⟨n|D(½)S(ξ)|0⟩, ξ = ½ e^{iπ/3}, from scipy expm on a 160-level basis
        let expected = [
            c(0.806387098341104, -0.040373723433329),
            c(0.504433764539185, 0.136508944770012),
            c(0.057061771565151, -0.09081220502755),
            c(-0.019789377757145, -0.216265642561952),
            c(-0.027345429562868, -0.070144031108261),
        ];
        let sq = squeezed_vacuum(0.5, PI / 3.0, 128).unwrap();
        let fock = displace(c(0.5, 0.0), &sq).unwrap();
        for (n, e) in expected.iter().enumerate() {
            let formula = squeezed_coherent_amplitude(n, 0.5, 0.5, PI / 3.0);
            assert!((formula - e).norm() < 1e-9, "formula n = {n}");
            assert!((fock.amp(n) - e).norm() < 1e-9, "fock n = {n}");
        }
        let amps = squeezed_coherent_amplitudes(c(0.5, 0.0), 0.5, PI / 3.0, 128);
        let formula = FockVector::from_amps(amps).unwrap();
        assert!((inner(&formula, &fock).unwrap().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spec_validation() {
        assert!(PointerSpec::coherent(1.0, 0.3).validate().is_ok());
        let mut bad = PointerSpec::coherent(1.0, 0.3);
        bad.eta = 0.2;
        assert!(matches!(bad.validate(), Err(Error::InvalidParameter { name: "eta", .. })));
        assert!(PointerSpec::squeezed(4.5, 0.0).validate().is_err());
        assert!(PointerSpec::cat(-0.1, 0.0, 0.0).validate().is_err());
        assert_eq!("squeezed".parse::<PointerKind>().unwrap(), PointerKind::SqueezedVacuum);
        assert!("thermal".parse::<PointerKind>().is_err());
    }
}
