//! Cat pointer `K(|α⟩ + e^{iω}|−α⟩)`, `α = r e^{iδ}`.
//!
//! The final pointer is `κ/2 [(1+w) D(s/2) + (1−w) D(−s/2)]` applied to the
//! cat. Moments below use `β = s/2`, `c = κ²K²/4`, `Z = (1 − w)(1 + w)*`,
//! `e₂ = e^{−2r²}` and `E± = e^{−½|2α ± s|²}`.

use num_complex::Complex64 as C64;

use crate::postselect::MeasurementConfig;
use crate::states::cat_norm_weight;

#[derive(Copy, Clone, Debug)]
pub struct CatForms {
    pub r: f64,
    pub delta: f64,
    pub omega: f64,
    pub s: f64,
    pub theta: f64,
    pub phi_sys: f64,
    alpha: C64,
    w: C64,
    k2: f64,
}

impl CatForms {
    pub fn new(r: f64, delta: f64, omega: f64, cfg: &MeasurementConfig) -> Self {
        Self {
            r,
            delta,
            omega,
            s: cfg.s,
            theta: cfg.theta,
            phi_sys: cfg.phi_sys,
            alpha: C64::from_polar(r, delta),
            w: C64::from_polar((0.5 * cfg.theta).tan(), cfg.phi_sys),
            k2: 1.0 / cat_norm_weight(r, omega),
        }
    }

    fn beta(&self) -> f64 {
        0.5 * self.s
    }

    fn wp(&self) -> f64 {
        (1.0 + self.w).norm_sqr()
    }

    fn wm(&self) -> f64 {
        (1.0 - self.w).norm_sqr()
    }

    fn z(&self) -> C64 {
        (1.0 - self.w) * (1.0 + self.w).conj()
    }

    fn e2(&self) -> f64 {
        (-2.0 * self.r * self.r).exp()
    }

    fn gauss(&self) -> f64 {
        (-0.5 * self.s * self.s).exp()
    }

    /// `(E₊, E₋)`.
    fn e_pm(&self) -> (f64, f64) {
        let two_a = 2.0 * self.alpha;
        ((-0.5 * (two_a + self.s).norm_sqr()).exp(), (-0.5 * (two_a - self.s).norm_sqr()).exp())
    }

    /// `e^{2is Im α}`.
    fn spin(&self) -> C64 {
        C64::from_polar(1.0, 2.0 * self.s * self.alpha.im)
    }

    fn c(&self) -> f64 {
        0.25 * self.k2 / self.norm_inv()
    }

    /// `κ⁻² = ½(1+|w|²) + K²(1−|w|²) cos(2s Im α) e^{−s²/2} + (K²/2) Re[Z(e^{iω}E₊ + e^{−iω}E₋)]`.
    pub fn norm_inv(&self) -> f64 {
        let (ep, em) = self.e_pm();
        let eo = C64::from_polar(1.0, self.omega);
        0.5 * (1.0 + self.w.norm_sqr())
            + self.k2 * (1.0 - self.w.norm_sqr()) * (2.0 * self.s * self.alpha.im).cos() * self.gauss()
            + 0.5 * self.k2 * (self.z() * (eo * ep + eo.conj() * em)).re
    }

    /// `⟨a†a⟩`.
    pub fn mean_n(&self) -> f64 {
        let (a, b, e2) = (self.alpha, self.beta(), self.e2());
        let eo = C64::from_polar(1.0, self.omega);
        let (p, m) = (a + b, -a + b);
        let first = p.norm_sqr() + m.norm_sqr() + (eo * p.conj() * m * e2).re * 2.0;
        let (q, t) = (a - b, a + b);
        let second = q.norm_sqr() + t.norm_sqr() - 2.0 * (eo * q.conj() * t * e2).re;
        let inner = eo * t.norm_sqr() * (-2.0 * t.norm_sqr()).exp()
            + eo.conj() * (-2.0 * q.norm_sqr()).exp() * q.norm_sqr()
            - 2.0 * self.gauss() * (self.spin() * t.conj() * q).re;
        self.c() * (self.wp() * first + self.wm() * second - 2.0 * (inner * self.z()).re)
    }

    fn a2a2_with(&self, square_last: bool) -> C64 {
        let (a, b, e2) = (self.alpha, self.beta(), self.e2());
        let eo = C64::from_polar(1.0, self.omega);
        let sq = |z: C64| z * z;
        let ac = a.conj();
        let first = (a + b).norm_sqr().powi(2)
            + (-a + b).norm_sqr().powi(2)
            + eo * sq(ac + b) * sq(-a + b) * e2
            + eo.conj() * sq(-ac + b) * sq(a + b) * e2;
        let last = if square_last { sq(ac + b) } else { ac + b };
        let second = (a - b).norm_sqr().powi(2)
            + (a + b).norm_sqr().powi(2)
            + eo * e2 * sq(ac - b) * sq(a + b)
            + eo.conj() * e2 * last * sq(a - b);
        let (t, q) = ((a + b).norm_sqr(), (a - b).norm_sqr());
        let inner = eo * t * t * (-2.0 * t).exp()
            + eo.conj() * q * q * (-2.0 * q).exp()
            + 2.0 * self.gauss() * (self.spin() * sq(ac + b) * sq(a - b)).re;
        self.c() * (self.wp() * first + self.wm() * second + 2.0 * (inner * self.z()).re)
    }

    /// `⟨a†²a²⟩`.
    pub fn a2a2(&self) -> f64 {
        self.a2a2_with(true).re
    }

    /// Literal form: `(α* + s/2)` unsquared in the `e^{−iω}` term of the
    /// `|1 − w|²` bracket.
    pub fn a2a2_literal(&self) -> C64 {
        self.a2a2_with(false)
    }

    fn amean_with(&self, phase: f64) -> C64 {
        let (a, b, e2, s) = (self.alpha, self.beta(), self.e2(), self.s);
        let eo = C64::from_polar(1.0, phase);
        let (ep, em) = self.e_pm();
        let arg = 2.0 * s * a.im;
        let (sn, cs) = arg.sin_cos();
        let i = C64::new(0.0, 1.0);
        let z = self.z();
        let first = s + eo * (-a + b) * e2 + eo.conj() * (a + b) * e2;
        let second = -s - eo * (a + b) * e2 + eo.conj() * (a - b) * e2;
        let third = (2.0 * i * a * sn - s * cs) * self.gauss() - eo * (a + b) * ep + eo.conj() * (a - b) * em;
        let fourth = (-2.0 * i * a * sn + s * cs) * self.gauss() + eo * (-a + b) * em + eo.conj() * (a + b) * ep;
        self.c() * (self.wp() * first + self.wm() * second + z * third + z.conj() * fourth)
    }

    /// `⟨a⟩`.
    pub fn amean(&self) -> C64 {
        self.amean_with(self.omega)
    }

    /// Literal form: `e^{±iφ}` in place of `e^{±iω}`, read with the system
    /// azimuth.
    pub fn amean_literal(&self) -> C64 {
        self.amean_with(self.phi_sys)
    }

    fn a2_with(&self, gauss_den: f64) -> C64 {
        let (a, b, e2, s) = (self.alpha, self.beta(), self.e2(), self.s);
        let eo = C64::from_polar(1.0, self.omega);
        let sq = |z: C64| z * z;
        let arg = 2.0 * s * a.im;
        let (sn, cs) = arg.sin_cos();
        let i = C64::new(0.0, 1.0);
        let z = self.z();
        let base = 2.0 * (sq(a) + b * b);
        let first = base + eo * e2 * sq(-a + b) + eo.conj() * e2 * sq(a + b);
        let second = base + eo * e2 * sq(a + b) + eo.conj() * e2 * sq(a - b);
        let g = 2.0 * (-s * s / gauss_den).exp() * (cs * (sq(a) + b * b) - i * s * a * sn);
        let (t, q) = ((-2.0 * (a + b).norm_sqr()).exp(), (-2.0 * (a - b).norm_sqr()).exp());
        let third = g + eo.conj() * sq(a - b) * q + eo * sq(a + b) * t;
        let fourth = g + eo * sq(a - b) * q + eo.conj() * sq(a + b) * t;
        self.c() * (self.wp() * first + self.wm() * second + z * third + z.conj() * fourth)
    }

    /// `⟨a²⟩`.
    pub fn a2(&self) -> C64 {
        self.a2_with(2.0)
    }

    /// Literal form: `2e^{−s²/4}` in place of `2e^{−s²/2}`.
    pub fn a2_literal(&self) -> C64 {
        self.a2_with(4.0)
    }
}
