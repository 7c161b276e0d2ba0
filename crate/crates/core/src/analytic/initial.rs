//! Statistics of the pointers before the measurement.

/// `g²(0) = 3 + 1/sinh²η` of the squeezed vacuum.
pub fn sq_g2(eta: f64) -> f64 {
    3.0 + 1.0 / eta.sinh().powi(2)
}

/// `Q = 1 + 2 sinh²η` of the squeezed vacuum.
pub fn sq_q(eta: f64) -> f64 {
    1.0 + 2.0 * eta.sinh().powi(2)
}

/// `S_φ = ½[cosh²η − sinh 2η cos(2φ − δ) + sinh²η] − ½` of the squeezed vacuum.
pub fn sq_sphi(eta: f64, delta: f64, phi: f64) -> f64 {
    let (ch, sh) = (eta.cosh(), eta.sinh());
    0.5 * (ch * ch - (2.0 * eta).sinh() * (2.0 * phi - delta).cos() + sh * sh) - 0.5
}

/// `(1 − x, 1 + x, 1 − x²)` for `x = e^{−2r²} cos ω`, free of cancellation
/// as `r → 0`.
fn cat_factors(r: f64, omega: f64) -> (f64, f64, f64) {
    let c = omega.cos();
    let m2 = (-2.0 * r * r).exp_m1();
    let m4 = (-4.0 * r * r).exp_m1();
    ((1.0 - c) - c * m2, (1.0 + c) + c * m2, (1.0 - c * c) - c * c * m4)
}

/// `Q = 4r²x/(1 − x²)`, `x = e^{−2r²} cos ω`.
pub fn cat_q(r: f64, omega: f64) -> f64 {
    let x = (-2.0 * r * r).exp() * omega.cos();
    let (_, _, one_minus_x2) = cat_factors(r, omega);
    4.0 * r * r * x / one_minus_x2
}

/// `g²(0) = 1 + 4x/(1 − x)²`.
pub fn cat_g2(r: f64, omega: f64) -> f64 {
    let x = (-2.0 * r * r).exp() * omega.cos();
    let (one_minus_x, _, _) = cat_factors(r, omega);
    1.0 + 4.0 * x / (one_minus_x * one_minus_x)
}

/// `S_φ` of `K(|α⟩ + e^{iω}|−α⟩)`, `α = r e^{iδ}`:
///
/// `r² e^{−4r²}/(1 + x)² · [e^{4r²} + cos 2(φ−δ) (e^{2r²} + cos ω)² + sin²ω cos 2(φ−δ) − 1]`.
pub fn cat_sphi(r: f64, delta: f64, omega: f64, phi: f64) -> f64 {
    let r2 = r * r;
    let (_, one_plus_x, _) = cat_factors(r, omega);
    let c2 = (2.0 * (phi - delta)).cos();
    let bracket = (4.0 * r2).exp_m1()
        + c2 * ((2.0 * r2).exp() + omega.cos()).powi(2)
        + omega.sin().powi(2) * c2;
    r2 * (-4.0 * r2).exp() / (one_plus_x * one_plus_x) * bracket
}

/// Literal transcription of the cat squeezing parameter:
/// `r² e^{−4r²}/(1 + x)² · [1 + (cos 2φ (e^{2r²} + cos ω)² + sin²ω cos²φ − 1)]`.
pub fn cat_sphi_literal(r: f64, omega: f64, phi: f64) -> f64 {
    let r2 = r * r;
    let x = (-2.0 * r2).exp() * omega.cos();
    let inner = (2.0 * phi).cos() * ((2.0 * r2).exp() + omega.cos()).powi(2)
        + omega.sin().powi(2) * phi.cos().powi(2)
        - 1.0;
    r2 * (-4.0 * r2).exp() / (1.0 + x).powi(2) * (1.0 + inner)
}
