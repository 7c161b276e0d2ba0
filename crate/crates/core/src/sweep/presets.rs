//! Figure presets `fig1a` … `fig9d`: one CSV series per curve.
//!
//! Output columns are `curve,<x>,<y>,warning`. Curve families without fixed
//! values use the sets below.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::postselect::{default_dim, MeasurementConfig};
use crate::states::PointerSpec;

use super::config::{Output, RunConfig};
use super::engine::evaluate_all;
use super::table::{fmt_num, CsvTable};

pub const PRESET_IDS: [&str; 30] = [
    "fig1a", "fig1b", "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b",
    "fig5a", "fig5b", "fig5c", "fig5d", "fig6a", "fig6b", "fig6c", "fig6d", "fig7a", "fig7b", "fig8a", "fig8b",
    "fig8c", "fig8d", "fig9a", "fig9b", "fig9c", "fig9d",
];

/// Preselection angles for weak-value curve families.
pub const THETA_CURVES: [(&str, f64); 4] =
    [("theta=pi/9", PI / 9.0), ("theta=pi/3", PI / 3.0), ("theta=5pi/9", 5.0 * PI / 9.0), ("theta=7pi/9", 7.0 * PI / 9.0)];

/// Couplings for coupling-strength curve families.
pub const S_CURVES: [(&str, f64); 4] = [("s=0.2", 0.2), ("s=0.5", 0.5), ("s=1", 1.0), ("s=2", 2.0)];

/// Amplitudes for amplitude curve families.
pub const R_CURVES: [(&str, f64); 4] = [("r=0.5", 0.5), ("r=1", 1.0), ("r=1.5", 1.5), ("r=2", 2.0)];

/// Largest photon number in distribution panels.
pub const PN_MAX: usize = 20;

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum XAxis {
    Param { name: &'static str, start: f64, stop: f64, count: usize },
    /// `|⟨A⟩_w| = tan(θ/2)` on a linear grid, mapped back to `θ`.
    WeakValue { start: f64, stop: f64, count: usize },
    PhotonNumber,
}

impl XAxis {
    pub fn name(&self) -> &'static str {
        match self {
            XAxis::Param { name, .. } => name,
            XAxis::WeakValue { .. } => "weak_value",
            XAxis::PhotonNumber => "n",
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match *self {
            XAxis::Param { start, stop, count, .. } | XAxis::WeakValue { start, stop, count } => {
                let last = (count - 1) as f64;
                (0..count).map(|k| if k + 1 == count { stop } else { start + (stop - start) * k as f64 / last }).collect()
            }
            XAxis::PhotonNumber => (0..=PN_MAX).map(|n| n as f64).collect(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum YQuantity {
    Pn,
    G2,
    MandelQ,
    SPhi,
}

impl YQuantity {
    pub fn name(self) -> &'static str {
        match self {
            YQuantity::Pn => "p_n",
            YQuantity::G2 => "g2",
            YQuantity::MandelQ => "mandel_q",
            YQuantity::SPhi => "s_phi",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub label: String,
    pub set: Vec<(&'static str, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Preset {
    pub id: &'static str,
    pub pointer: PointerSpec,
    pub cfg: MeasurementConfig,
    pub phi_quad: f64,
    pub x: XAxis,
    pub y: YQuantity,
    pub curves: Vec<Curve>,
}

fn vary(name: &'static str, set: &[(&str, f64)]) -> Vec<Curve> {
    set.iter().map(|&(label, v)| Curve { label: label.into(), set: vec![(name, v)] }).collect()
}

/// The undisturbed pointer.
fn initial() -> Curve {
    Curve { label: "initial".into(), set: vec![("s", 0.0)] }
}

fn with_initial(mut curves: Vec<Curve>) -> Vec<Curve> {
    curves.insert(0, initial());
    curves
}

fn param(name: &'static str, start: f64, stop: f64, count: usize) -> XAxis {
    XAxis::Param { name, start, stop, count }
}

fn cfg(s: f64, theta: f64, phi_sys: f64) -> MeasurementConfig {
    MeasurementConfig { s, theta, phi_sys }
}

pub fn preset(id: &str) -> Result<Preset> {
    use YQuantity::*;
    let (p9, p3, p7) = (PI / 9.0, PI / 3.0, 7.0 * PI / 9.0);
    let p4 = PI / 2.0;
    let s_axis = param("s", 0.0, 3.0, 31);
    let r_axis = param("r", 0.05, 2.0, 40);
    let eta_axis = param("eta", 0.05, 1.5, 30);
    let quad_axis = param("phi_quad", 0.0, PI, 37);
    let omega_axis = param("omega", 0.0, 2.0 * PI, 37);
    let wv_axis = XAxis::WeakValue { start: 0.0, stop: 5.0, count: 51 };

    // fig1-fig3: coherent pointer
    let coh1 = PointerSpec::coherent(1.0, PI / 3.0);
    let coh = |r| PointerSpec::coherent(r, PI / 3.0);
    let f2 = 4.0 * PI / 5.0;
    // fig4-fig6: squeezed vacuum
    let sq = |eta, delta| PointerSpec::squeezed(eta, delta);
    // fig7-fig9: cat
    let cat = |r, delta, omega| PointerSpec::cat(r, delta, omega);

    let (pointer, cfg, phi_quad, x, y, curves) = match id {
        "fig1a" => (coh1, cfg(2.0, 0.0, PI / 4.0), 0.0, XAxis::PhotonNumber, Pn, with_initial(vary("theta", &THETA_CURVES))),
        "fig1b" => (coh1, cfg(0.0, p7, PI / 4.0), 0.0, XAxis::PhotonNumber, Pn, with_initial(vary("s", &S_CURVES))),
        "fig2a" => (coh(0.0), cfg(0.0, p3, f2), 0.0, r_axis, G2, with_initial(vary("s", &S_CURVES))),
        "fig2b" => (coh(0.0), cfg(0.0, p7, f2), 0.0, r_axis, G2, with_initial(vary("s", &S_CURVES))),
        "fig2c" => (coh(0.0), cfg(0.2, 0.0, f2), 0.0, wv_axis, MandelQ, vary("r", &R_CURVES)),
        "fig2d" => (coh(0.0), cfg(2.0, 0.0, f2), 0.0, wv_axis, MandelQ, vary("r", &R_CURVES)),
        "fig3a" => (coh(0.0), cfg(0.0, p9, f2), p4, s_axis, SPhi, vary("r", &R_CURVES)),
        "fig3b" => (coh(0.0), cfg(0.0, p7, f2), p4, s_axis, SPhi, vary("r", &R_CURVES)),
        "fig3c" => (coh(0.0), cfg(0.0, p9, f2), 0.0, s_axis, SPhi, vary("r", &R_CURVES)),
        "fig3d" => (coh(0.0), cfg(2.0, 0.0, f2), p4, r_axis, SPhi, vary("theta", &THETA_CURVES)),
        "fig4a" => (sq(0.5, p3), cfg(1.0, 0.0, p3), 0.0, XAxis::PhotonNumber, Pn, with_initial(vary("theta", &THETA_CURVES))),
        "fig4b" => (sq(0.5, p3), cfg(0.0, p7, p3), 0.0, XAxis::PhotonNumber, Pn, with_initial(vary("s", &S_CURVES))),
        "fig5a" => (sq(0.2, p3), cfg(0.0, 0.0, p3), 0.0, s_axis, G2, vary("theta", &THETA_CURVES)),
        "fig5b" => (sq(0.0, p3), cfg(0.0, p7, p3), 0.0, eta_axis, G2, vary("s", &S_CURVES)),
        "fig5c" => (sq(0.2, p3), cfg(0.0, 0.0, p3), 0.0, s_axis, MandelQ, vary("theta", &THETA_CURVES)),
        "fig5d" => (sq(0.0, p3), cfg(0.0, p7, p3), 0.0, eta_axis, MandelQ, vary("s", &S_CURVES)),
        "fig6a" => (sq(0.0, 0.0), cfg(0.0, p9, p3), 0.0, eta_axis, SPhi, with_initial(vary("s", &S_CURVES))),
        "fig6b" => (sq(0.5, p3), cfg(0.0, p9, p3), 0.0, quad_axis, SPhi, with_initial(vary("s", &S_CURVES))),
        "fig6c" => (sq(0.5, 0.0), cfg(0.0, 0.0, p3), 0.0, s_axis, SPhi, vary("theta", &THETA_CURVES)),
        "fig6d" => (sq(0.5, 0.0), cfg(0.0, 0.0, p3), p4, s_axis, SPhi, vary("theta", &THETA_CURVES)),
        "fig7a" => (cat(0.5, p3, 0.0), cfg(1.0, 0.0, p3), 0.0, XAxis::PhotonNumber, Pn, with_initial(vary("theta", &THETA_CURVES))),
        "fig7b" => (cat(0.5, p3, 0.0), cfg(0.0, p7, p3), 0.0, XAxis::PhotonNumber, Pn, with_initial(vary("s", &S_CURVES))),
        "fig8a" => (cat(0.3, 0.0, 0.0), cfg(0.0, p9, 0.0), 0.0, omega_axis, G2, vary("s", &S_CURVES)),
        "fig8b" => (cat(0.0, 0.0, PI), cfg(0.5, 0.0, 0.0), 0.0, r_axis, G2, vary("theta", &THETA_CURVES)),
        "fig8c" => (cat(0.3, 0.0, 0.0), cfg(0.0, p9, 0.0), 0.0, omega_axis, MandelQ, vary("s", &S_CURVES)),
        "fig8d" => (cat(0.0, 0.0, PI), cfg(0.5, 0.0, 0.0), 0.0, r_axis, MandelQ, vary("theta", &THETA_CURVES)),
        "fig9a" => (cat(0.3, 0.0, 0.0), cfg(0.0, p9, 0.0), 0.0, quad_axis, SPhi, with_initial(vary("s", &S_CURVES))),
        "fig9b" => (cat(0.3, 0.0, 0.0), cfg(0.5, 0.0, 0.0), 0.0, quad_axis, SPhi, with_initial(vary("theta", &THETA_CURVES))),
        "fig9c" => (cat(0.3, 0.0, 0.0), cfg(0.5, 0.0, 0.0), p4, omega_axis, SPhi, vary("theta", &THETA_CURVES)),
        "fig9d" => (cat(0.3, 0.0, PI), cfg(0.0, p9, 0.0), 0.0, quad_axis, SPhi, with_initial(vary("s", &S_CURVES))),
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    let id = PRESET_IDS.iter().copied().find(|&p| p == id).expect("listed preset");
    Ok(Preset { id, pointer, cfg, phi_quad, x, y, curves })
}

impl Preset {
    fn base(&self, dim: usize) -> RunConfig {
        RunConfig { pointer: self.pointer, cfg: self.cfg, phi_quad: self.phi_quad, dim, ..RunConfig::default() }
    }

    fn output(&self) -> Output {
        match self.y {
            YQuantity::Pn => Output::Pn(0),
            YQuantity::G2 => Output::G2,
            YQuantity::MandelQ => Output::MandelQ,
            YQuantity::SPhi => Output::SPhi,
        }
    }

    /// Evaluate every curve on a basis starting at `dim`.
    pub fn run(&self, dim: usize) -> CsvTable {
        let mut table = CsvTable::new(["curve", self.x.name(), self.y.name(), "warning"]);
        let xs = self.x.values();
        let curve_base = |c: &Curve| {
            let mut rc = self.base(dim);
            for &(name, v) in &c.set {
                rc.set_param(name, v);
            }
            rc
        };
        if self.x == XAxis::PhotonNumber {
            let outputs: Vec<Output> = (0..=PN_MAX).map(Output::Pn).collect();
            let points: Vec<RunConfig> = self.curves.iter().map(curve_base).collect();
            for (c, pv) in self.curves.iter().zip(evaluate_all(&points, &outputs)) {
                for (&x, v) in xs.iter().zip(&pv.values) {
                    table.push(vec![c.label.clone(), fmt_num(x), v.map(fmt_num).unwrap_or_default(), pv.warning.clone()]);
                }
            }
            return table;
        }
        let mut points = Vec::new();
        for c in &self.curves {
            for &x in &xs {
                let mut rc = curve_base(c);
                match self.x {
                    XAxis::Param { name, .. } => rc.set_param(name, x),
                    XAxis::WeakValue { .. } => rc.set_param("theta", 2.0 * x.atan()),
                    XAxis::PhotonNumber => unreachable!(),
                }
                points.push(rc);
            }
        }
        let results = evaluate_all(&points, &[self.output()]);
        let labels = self.curves.iter().flat_map(|c| std::iter::repeat_n(&c.label, xs.len()));
        let xcol = xs.iter().cycle();
        for ((label, &x), pv) in labels.zip(xcol).zip(results) {
            table.push(vec![label.clone(), fmt_num(x), pv.values[0].map(fmt_num).unwrap_or_default(), pv.warning]);
        }
        table
    }
}

pub fn cmd_figure(id: &str) -> Result<CsvTable> {
    Ok(preset(id)?.run(default_dim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// (id, pointer, r, vartheta, eta, delta, omega, s, theta, phi_sys, phi_quad);
    /// swept slots hold their base value.
    #[rustfmt::skip]
    const FROZEN: [(&str, &str, [f64; 9]); 30] = [
        ("fig1a", "coherent", [1.0, 1.0471975511965976, 0.0, 0.0, 0.0, 2.0, 0.0, 0.7853981633974483, 0.0]),
        ("fig1b", "coherent", [1.0, 1.0471975511965976, 0.0, 0.0, 0.0, 0.0, 2.443460952792061, 0.7853981633974483, 0.0]),
        ("fig2a", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 0.0, 1.0471975511965976, 2.5132741228718345, 0.0]),
        ("fig2b", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 0.0, 2.443460952792061, 2.5132741228718345, 0.0]),
        ("fig2c", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 0.2, 0.0, 2.5132741228718345, 0.0]),
        ("fig2d", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 2.0, 0.0, 2.5132741228718345, 0.0]),
        ("fig3a", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 0.0, 0.3490658503988659, 2.5132741228718345, 1.5707963267948966]),
        ("fig3b", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 0.0, 2.443460952792061, 2.5132741228718345, 1.5707963267948966]),
        ("fig3c", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 0.0, 0.3490658503988659, 2.5132741228718345, 0.0]),
        ("fig3d", "coherent", [0.0, 1.0471975511965976, 0.0, 0.0, 0.0, 2.0, 0.0, 2.5132741228718345, 1.5707963267948966]),
        ("fig4a", "squeezed", [0.0, 0.0, 0.5, 1.0471975511965976, 0.0, 1.0, 0.0, 1.0471975511965976, 0.0]),
        ("fig4b", "squeezed", [0.0, 0.0, 0.5, 1.0471975511965976, 0.0, 0.0, 2.443460952792061, 1.0471975511965976, 0.0]),
        ("fig5a", "squeezed", [0.0, 0.0, 0.2, 1.0471975511965976, 0.0, 0.0, 0.0, 1.0471975511965976, 0.0]),
        ("fig5b", "squeezed", [0.0, 0.0, 0.0, 1.0471975511965976, 0.0, 0.0, 2.443460952792061, 1.0471975511965976, 0.0]),
        ("fig5c", "squeezed", [0.0, 0.0, 0.2, 1.0471975511965976, 0.0, 0.0, 0.0, 1.0471975511965976, 0.0]),
        ("fig5d", "squeezed", [0.0, 0.0, 0.0, 1.0471975511965976, 0.0, 0.0, 2.443460952792061, 1.0471975511965976, 0.0]),
        ("fig6a", "squeezed", [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3490658503988659, 1.0471975511965976, 0.0]),
        ("fig6b", "squeezed", [0.0, 0.0, 0.5, 1.0471975511965976, 0.0, 0.0, 0.3490658503988659, 1.0471975511965976, 0.0]),
        ("fig6c", "squeezed", [0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 1.0471975511965976, 0.0]),
        ("fig6d", "squeezed", [0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 1.0471975511965976, 1.5707963267948966]),
        ("fig7a", "cat", [0.5, 0.0, 0.0, 1.0471975511965976, 0.0, 1.0, 0.0, 1.0471975511965976, 0.0]),
        ("fig7b", "cat", [0.5, 0.0, 0.0, 1.0471975511965976, 0.0, 0.0, 2.443460952792061, 1.0471975511965976, 0.0]),
        ("fig8a", "cat", [0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3490658503988659, 0.0, 0.0]),
        ("fig8b", "cat", [0.0, 0.0, 0.0, 0.0, 3.141592653589793, 0.5, 0.0, 0.0, 0.0]),
        ("fig8c", "cat", [0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3490658503988659, 0.0, 0.0]),
        ("fig8d", "cat", [0.0, 0.0, 0.0, 0.0, 3.141592653589793, 0.5, 0.0, 0.0, 0.0]),
        ("fig9a", "cat", [0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3490658503988659, 0.0, 0.0]),
        ("fig9b", "cat", [0.3, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0]),
        ("fig9c", "cat", [0.3, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 1.5707963267948966]),
        ("fig9d", "cat", [0.3, 0.0, 0.0, 0.0, 3.141592653589793, 0.0, 0.3490658503988659, 0.0, 0.0]),
    ];

    #[test]
    fn preset_constants_are_frozen() {
        for (id, kind, vals) in FROZEN {
            let p = preset(id).unwrap();
            let rc = p.base(16);
            assert_eq!(p.pointer.kind.name(), kind, "{id}");
            for (name, want) in super::super::engine::PARAM_COLUMNS.iter().zip(vals) {
                assert_eq!(rc.param(name).unwrap(), want, "{id} {name}");
            }
        }
    }

    #[test]
    fn swept_and_curve_parameters() {
        let axis = |id: &str| preset(id).unwrap().x.name();
        assert_eq!(axis("fig2a"), "r");
        assert_eq!(axis("fig2c"), "weak_value");
        assert_eq!(axis("fig3c"), "s");
        assert_eq!(axis("fig5b"), "eta");
        assert_eq!(axis("fig6b"), "phi_quad");
        assert_eq!(axis("fig9c"), "omega");
        let fig1a = preset("fig1a").unwrap();
        assert_eq!(fig1a.curves[0].label, "initial");
        assert_eq!(fig1a.curves[4].set, vec![("theta", 7.0 * PI / 9.0)]);
        assert_eq!(preset("fig4b").unwrap().curves[4].set, vec![("s", 2.0)]);
    }

    #[test]
    fn every_listed_preset_exists() {
        for id in PRESET_IDS {
            let p = preset(id).unwrap();
            assert_eq!(p.id, id);
            p.pointer.validate().unwrap();
            p.cfg.validate().unwrap();
        }
        assert!(matches!(preset("fig10a"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn distribution_preset_shape() {
        let t = preset("fig7b").unwrap().run(64);
        assert_eq!(t.header, ["curve", "n", "p_n", "warning"]);
        assert_eq!(t.rows.len(), 5 * (PN_MAX + 1));
        assert_eq!(t.rows[0][0], "initial");
        assert!(t.rows.iter().all(|r| r[3].is_empty()));
    }

    #[test]
    fn odd_cat_preset_has_no_gaps() {
        let t = preset("fig9d").unwrap().run(64);
        assert_eq!(t.rows.len(), 5 * 37);
        assert!(t.rows.iter().all(|r| !r[2].is_empty()));
    }
}
