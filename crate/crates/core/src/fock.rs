//! Truncated Fock-basis state vectors and exact operator actions.
//!
//! A [`FockVector`] holds amplitudes on `|0⟩ … |dim−1⟩` together with an
//! estimate of the probability weight that would lie beyond the cutoff.
//! Operator actions are computed from their matrix elements in the number
//! basis; nothing here builds a dense operator matrix.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::tol;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Pure state of one bosonic mode on a truncated number basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector {
    amps: Vec<C64>,
    tail_mass: f64,
}

impl FockVector {
    /// Wrap raw amplitudes. Fails on an empty array or non-finite entries.
    pub fn from_amps(amps: Vec<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::invalid("dim", "must be at least 1"));
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid("amps", "non-finite amplitude"));
        }
        let tail_mass = estimate_tail(&amps);
        Ok(Self { amps, tail_mass })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::from_amps(vec![ZERO; dim])
    }

    /// Number state `|n⟩`.
    pub fn number(n: usize, dim: usize) -> Result<Self> {
        if n >= dim {
            return Err(Error::invalid("n", format!("{n} outside basis of size {dim}")));
        }
        let mut amps = vec![ZERO; dim];
        amps[n] = ONE;
        Self::from_amps(amps)
    }

    pub fn vacuum(dim: usize) -> Result<Self> {
        Self::number(0, dim)
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn amp(&self, n: usize) -> C64 {
        self.amps.get(n).copied().unwrap_or(ZERO)
    }

    /// Estimated probability weight beyond the cutoff, relative to the norm.
    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    pub fn is_well_truncated(&self) -> bool {
        self.tail_mass < tol::WELL_TRUNCATED
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scaled(&self, c: C64) -> FockVector {
        let amps: Vec<C64> = self.amps.iter().map(|z| z * c).collect();
        FockVector { amps, tail_mass: self.tail_mass }
    }

    /// `Σ c_k v_k` over vectors of equal dimension.
    pub fn linear_combination(terms: &[(C64, &FockVector)]) -> Result<FockVector> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::invalid("terms", "empty linear combination"));
        };
        let dim = first.dim();
        let mut amps = vec![ZERO; dim];
        for (c, v) in terms {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch(dim, v.dim()));
            }
            for (acc, z) in amps.iter_mut().zip(&v.amps) {
                *acc += c * z;
            }
        }
        FockVector::from_amps(amps)
    }

    /// Copy into a larger (or equal) basis, padding with zeros.
    pub fn embed(&self, dim: usize) -> Result<FockVector> {
        if dim < self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), dim));
        }
        let mut amps = self.amps.clone();
        amps.resize(dim, ZERO);
        FockVector::from_amps(amps)
    }

    fn overflow(&self) -> Error {
        Error::TruncationOverflow { dim: self.dim(), tail_mass: self.tail_mass }
    }
}

/// Sum of the last four basis probabilities plus a geometric extrapolation of
/// what lies beyond, as a fraction of the total weight.
///
/// Probabilities are paired two by two so that states supported on a single
/// parity (squeezed vacuum, even/odd cats) get a sensible ratio.
fn estimate_tail(amps: &[C64]) -> f64 {
    let total: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
    if total == 0.0 {
        return 0.0;
    }
    let dim = amps.len();
    let p = |i: usize| amps[i].norm_sqr();
    let last = dim.min(4);
    let edge: f64 = (dim - last..dim).map(p).sum();
    if dim < 4 {
        return (edge / total).min(1.0);
    }
    let rel = edge / total;
    // below any tolerance in use; ratios of such numbers are rounding noise
    if rel < 1e-28 {
        return rel;
    }
    let hi = p(dim - 2) + p(dim - 1);
    let lo = p(dim - 4) + p(dim - 3);
    let beyond = if hi == 0.0 {
        0.0
    } else if hi < lo {
        let q = hi / lo;
        hi * q / (1.0 - q)
    } else {
        // no decay to extrapolate: assume the edge level could persist for
        // another `dim` states
        return (rel * dim as f64).min(1.0);
    };
    ((edge + beyond) / total).min(1.0)
}

/// `a v`, with `out[dim−1] = 0`.
pub fn apply_annihilate(v: &FockVector) -> FockVector {
    let d = v.dim();
    let mut amps = vec![ZERO; d];
    for n in 0..d.saturating_sub(1) {
        amps[n] = v.amps[n + 1] * ((n + 1) as f64).sqrt();
    }
    let tail_mass = estimate_tail(&amps);
    FockVector { amps, tail_mass }
}

/// `a† v`. The top amplitude would be pushed out of the basis, so it must be
/// negligible.
pub fn apply_create(v: &FockVector) -> Result<FockVector> {
    let d = v.dim();
    if v.amps[d - 1].norm() >= tol::CREATE_HEADROOM {
        return Err(v.overflow());
    }
    let mut amps = vec![ZERO; d];
    for n in 0..d - 1 {
        amps[n + 1] = v.amps[n] * ((n + 1) as f64).sqrt();
    }
    let tail_mass = estimate_tail(&amps);
    Ok(FockVector { amps, tail_mass })
}

/// `D(β) v` from exact matrix elements.
///
/// With `x = |β|²`, `⟨n+k|D(β)|n⟩ = e^{ik arg β} f_n` where
/// `f_n = √(n!/(n+k)!) x^{k/2} e^{−x/2} L_n^{(k)}(x)`, and
/// `⟨n|D(β)|n+k⟩ = (−e^{−i arg β})^k f_n`. Each diagonal runs the forward
/// Laguerre recurrence with a floating log scale, so nothing cancels
/// catastrophically and deep tails underflow to zero instead of noise.
pub fn displace(beta: C64, v: &FockVector) -> Result<FockVector> {
    if beta == ZERO {
        return Ok(v.clone());
    }
    if v.tail_mass >= tol::DISPLACE_TAIL {
        return Err(v.overflow());
    }
    let d = v.dim();
    let src = &v.amps;
    let x = beta.norm_sqr();
    let (ln_x, arg) = (x.ln(), beta.arg());
    let mut ln_fact = 0.0;
    let mut out = vec![ZERO; d];
    for k in 0..d {
        if k > 0 {
            ln_fact += (k as f64).ln();
        }
        let kf = k as f64;
        let down = C64::from_polar(1.0, kf * arg);
        let up = C64::from_polar(1.0, kf * (PI - arg));
        let mut ln_scale = 0.5 * (kf * ln_x - x - ln_fact);
        let mut scale = ln_scale.exp();
        let (mut prev, mut cur) = (0.0f64, 1.0f64);
        for n in 0..d - k {
            let f = cur * scale;
            if f != 0.0 {
                out[n + k] += down * f * src[n];
                if k > 0 {
                    out[n] += up * f * src[n + k];
                }
            }
            let nf = n as f64;
            let next = ((2.0 * nf + 1.0 + kf - x) * cur - (nf * (nf + kf)).sqrt() * prev)
                / ((nf + 1.0) * (nf + 1.0 + kf)).sqrt();
            prev = cur;
            cur = next;
            let mag = cur.abs();
            if mag > 1e100 || (mag < 1e-100 && prev.abs() < 1e-100 && mag > 0.0) {
                prev /= mag;
                cur /= mag;
                ln_scale += mag.ln();
                scale = ln_scale.exp();
            }
        }
    }

    let res = FockVector::from_amps(out)?;
    if res.tail_mass >= tol::DISPLACE_TAIL {
        return Err(res.overflow());
    }
    Ok(res)
}

/// `⟨u|v⟩`.
pub fn inner(u: &FockVector, v: &FockVector) -> Result<C64> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    Ok(u.amps.iter().zip(&v.amps).map(|(a, b)| a.conj() * b).sum())
}

/// Unit vector along `v` and the original norm.
pub fn normalize(v: &FockVector) -> Result<(FockVector, f64)> {
    let norm = v.norm();
    if !(norm > tol::ZERO_NORM) {
        return Err(Error::ZeroVector);
    }
    Ok((v.scaled(C64::new(1.0 / norm, 0.0)), norm))
}

/// `|⟨u|v⟩|² / (‖u‖² ‖v‖²)`.
pub fn fidelity(u: &FockVector, v: &FockVector) -> Result<f64> {
    let uu = u.norm_sqr();
    let vv = v.norm_sqr();
    if !(uu > 0.0 && vv > 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(inner(u, v)?.norm_sqr() / (uu * vv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn max_diff(u: &FockVector, v: &FockVector) -> f64 {
        u.amps().iter().zip(v.amps()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn annihilate_vacuum_and_one() {
        let vac = FockVector::vacuum(8).unwrap();
        assert_eq!(apply_annihilate(&vac).norm_sqr(), 0.0);
        let one = FockVector::number(1, 8).unwrap();
        let out = apply_annihilate(&one);
        assert_eq!(out.amp(0), ONE);
        assert_eq!(out.norm_sqr(), 1.0);
    }

    #[test]
    fn coherent_is_annihilation_eigenvector() {
        let alpha = states::coherent(0.5, 0.0, 64).unwrap();
        let out = apply_annihilate(&alpha);
        assert!(max_diff(&out, &alpha.scaled(c(0.5, 0.0))) < 1e-12);
    }

    #[test]
    fn create_on_low_states() {
        let vac = FockVector::vacuum(8).unwrap();
        assert_eq!(apply_create(&vac).unwrap().amp(1), ONE);
        let one = FockVector::number(1, 8).unwrap();
        let two = apply_create(&one).unwrap();
        assert!((two.amp(2) - c(2f64.sqrt(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn create_rejects_top_weight() {
        let top = FockVector::number(7, 8).unwrap();
        assert!(matches!(apply_create(&top), Err(Error::TruncationOverflow { .. })));
    }

    #[test]
    fn number_expectation_via_ladders() {
        let alpha = C64::from_polar(1.2, PI / 3.0);
        let v = states::coherent(alpha.norm(), alpha.arg(), 96).unwrap();
        let av = apply_annihilate(&v);
        let n = inner(&av, &av).unwrap();
        assert!((n.re - 1.44).abs() < 1e-10);
        // ⟨a†a⟩ via a† applied on the ket
        let ada = apply_create(&av).unwrap();
        assert!((inner(&v, &ada).unwrap() - c(1.44, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn displaced_vacuum_is_coherent() {
        let vac = FockVector::vacuum(64).unwrap();
        let out = displace(c(0.7, 0.0), &vac).unwrap();
        let mut expect = (-0.245f64).exp();
        for n in 0..20 {
            if n > 0 {
                expect *= 0.7 / (n as f64).sqrt();
            }
            assert!((out.amp(n) - c(expect, 0.0)).norm() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn zero_displacement_is_identity() {
        let v = states::squeezed_vacuum(0.4, 1.0, 64).unwrap();
        assert_eq!(displace(ZERO, &v).unwrap(), v);
    }

    #[test]
    fn displacement_composes_with_phase() {
        // D(s/2)|α⟩ = e^{−i(s/2) Im α} |α + s/2⟩
        let alpha = C64::from_polar(1.0, PI / 3.0);
        let v = states::coherent(1.0, PI / 3.0, 96).unwrap();
        let out = displace(c(1.0, 0.0), &v).unwrap();
        let target_alpha = alpha + 1.0;
        let target = states::coherent(target_alpha.norm(), target_alpha.arg(), 96).unwrap();
        let phase = C64::from_polar(1.0, -alpha.im);
        assert!(max_diff(&out, &target.scaled(phase)) < 1e-12);
        assert!((fidelity(&out, &target).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn coherent_overlaps() {
        let a = states::coherent(0.3, 0.0, 64).unwrap();
        let b = states::coherent(0.8, 0.0, 64).unwrap();
        let ov = inner(&a, &b).unwrap();
        assert!((ov - c((-0.125f64).exp(), 0.0)).norm() < 1e-10);
        let b = states::coherent(1.3, 0.0, 64).unwrap();
        let ov = inner(&a, &b).unwrap();
        assert!((ov - c((-0.5f64).exp(), 0.0)).norm() < 1e-10);
    }

    #[test]
    fn inner_basics() {
        let z = FockVector::vacuum(4).unwrap();
        let o = FockVector::number(1, 4).unwrap();
        assert_eq!(inner(&z, &z).unwrap(), ONE);
        assert_eq!(inner(&z, &o).unwrap(), ZERO);
        let big = FockVector::vacuum(5).unwrap();
        assert_eq!(inner(&z, &big), Err(Error::DimensionMismatch(4, 5)));
    }

    #[test]
    fn normalize_cases() {
        let v = FockVector::vacuum(4).unwrap().scaled(c(2.0, 0.0));
        let (u, norm) = normalize(&v).unwrap();
        assert_eq!(norm, 2.0);
        assert_eq!(u, FockVector::vacuum(4).unwrap());
        assert_eq!(normalize(&FockVector::zeros(4).unwrap()), Err(Error::ZeroVector));
    }

    #[test]
    fn tail_estimate_flags_top_weight() {
        assert_eq!(FockVector::number(9, 10).unwrap().tail_mass(), 1.0);
        assert_eq!(FockVector::vacuum(10).unwrap().tail_mass(), 0.0);
        assert!(states::coherent(2.0, 0.0, 128).unwrap().is_well_truncated());
        assert!(!states::coherent(2.0, 0.0, 12).map(|v| v.is_well_truncated()).unwrap_or(false));
    }

    #[test]
    fn displacement_overflow_is_reported() {
        let v = states::coherent(1.0, 0.0, 24).unwrap();
        assert!(matches!(displace(c(3.0, 0.0), &v), Err(Error::TruncationOverflow { .. })));
    }

    #[test]
    fn non_finite_amplitudes_rejected() {
        assert!(FockVector::from_amps(vec![c(f64::NAN, 0.0)]).is_err());
        assert!(FockVector::from_amps(vec![]).is_err());
    }
}
