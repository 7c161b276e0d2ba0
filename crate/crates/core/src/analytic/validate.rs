//! Closed forms against the Fock-space oracle over parameter grids.

use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use super::{closed_form, within_tolerance, ClosedFormReport, Quantity, Status, AMPLITUDE_N};
use crate::error::{Error, Result};
use crate::fock::displace;
use crate::observables as obs;
use crate::postselect::{default_dim, evaluate, postselection_success_naive, MeasurementConfig, Outcome};
use crate::states::{PointerKind, PointerSpec};

/// A pointer and a measurement setting.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct GridPoint {
    pub spec: PointerSpec,
    pub cfg: MeasurementConfig,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GridSize {
    Small,
    Full,
}

impl FromStr for GridSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "small" | "default" => Ok(GridSize::Small),
            "full" => Ok(GridSize::Full),
            other => Err(Error::invalid("grid", format!("expected small or full, got `{other}`"))),
        }
    }
}

/// Grid points plus the quadrature angles used for angle-dependent forms.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationGrid {
    pub points: Vec<GridPoint>,
    pub phi_quads: Vec<f64>,
}

fn cfg(s: f64, theta: f64, phi_sys: f64) -> MeasurementConfig {
    MeasurementConfig { s, theta, phi_sys }
}

impl ValidationGrid {
    pub fn new(size: GridSize) -> Self {
        match size {
            GridSize::Small => Self::small(),
            GridSize::Full => Self::full(),
        }
    }

    /// Three values each of the pointer size, `s` and `θ` for every pointer;
    /// the cat adds `ω ∈ {0, π/2, π}`.
    pub fn small() -> Self {
        let s_vals = [0.3, 1.0, 2.0];
        let theta_vals = [0.0, PI / 3.0, 7.0 * PI / 9.0];
        let mut points = Vec::new();
        for r in [0.3, 1.0, 1.5] {
            for &s in &s_vals {
                for &t in &theta_vals {
                    points.push(GridPoint { spec: PointerSpec::coherent(r, PI / 3.0), cfg: cfg(s, t, 4.0 * PI / 5.0) });
                }
            }
        }
        for eta in [0.2, 0.5, 1.0] {
            for &s in &s_vals {
                for &t in &theta_vals {
                    points.push(GridPoint { spec: PointerSpec::squeezed(eta, PI / 3.0), cfg: cfg(s, t, PI / 3.0) });
                }
            }
        }
        for r in [0.3, 0.8, 1.2] {
            for omega in [0.0, PI / 2.0, PI] {
                for &s in &s_vals {
                    for &t in &theta_vals {
                        points.push(GridPoint { spec: PointerSpec::cat(r, 0.4, omega), cfg: cfg(s, t, PI / 4.0) });
                    }
                }
            }
        }
        Self { points, phi_quads: vec![0.4, PI / 2.0] }
    }

    /// Five values per size and coupling, four angles, and two choices of
    /// every secondary phase.
    pub fn full() -> Self {
        let s_vals = [0.1, 0.5, 1.0, 2.0, 3.0];
        let theta_vals = [0.0, PI / 9.0, PI / 3.0, PI / 2.0, 7.0 * PI / 9.0];
        let phi_sys_vals = [PI / 4.0, 4.0 * PI / 5.0];
        let mut points = Vec::new();
        for r in [0.1, 0.5, 1.0, 1.5, 2.0] {
            for vartheta in [PI / 3.0, 2.2] {
                for &s in &s_vals {
                    for &t in &theta_vals {
                        for &p in &phi_sys_vals {
                            points.push(GridPoint { spec: PointerSpec::coherent(r, vartheta), cfg: cfg(s, t, p) });
                        }
                    }
                }
            }
        }
        for eta in [0.1, 0.25, 0.5, 1.0, 1.5] {
            for delta in [0.0, PI / 3.0] {
                for &s in &s_vals {
                    for &t in &theta_vals {
                        for &p in &phi_sys_vals {
                            points.push(GridPoint { spec: PointerSpec::squeezed(eta, delta), cfg: cfg(s, t, p) });
                        }
                    }
                }
            }
        }
        for r in [0.3, 0.5, 0.8, 1.2, 2.0] {
            for omega in [0.0, PI / 2.0, PI, 4.0] {
                for delta in [0.0, 0.4] {
                    for &s in &s_vals {
                        for &t in &theta_vals {
                            points.push(GridPoint { spec: PointerSpec::cat(r, delta, omega), cfg: cfg(s, t, PI / 4.0) });
                        }
                    }
                }
            }
        }
        Self { points, phi_quads: vec![0.0, 0.4, PI / 2.0, 2.6] }
    }

    pub fn for_pointer(&self, kind: PointerKind) -> Self {
        Self {
            points: self.points.iter().copied().filter(|p| p.spec.kind == kind).collect(),
            phi_quads: self.phi_quads.clone(),
        }
    }
}

/// Counts by status.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub matched: usize,
    pub typo_suspected: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(reports: &[ClosedFormReport]) -> Self {
        let mut out = Self::default();
        for r in reports {
            match r.status {
                Status::Match => out.matched += 1,
                Status::TypoSuspected => out.typo_suspected += 1,
                Status::Fail => out.failed += 1,
            }
        }
        out
    }

    pub fn total(&self) -> usize {
        self.matched + self.typo_suspected + self.failed
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn oracle(q: Quantity, out: &Outcome, cfg: &MeasurementConfig, phi: f64) -> Result<C64> {
    let re = |x: f64| C64::new(x, 0.0);
    let fin = &out.final_state;
    let init = &out.initial;
    Ok(match q {
        Quantity::CohNorm => re(2.0 * out.success_prob / postselection_success_naive(cfg)),
        Quantity::SqNorm | Quantity::CatNorm => re(out.success_prob / postselection_success_naive(cfg)),
        Quantity::CohMeanN | Quantity::SqMeanN | Quantity::CatMeanN => re(obs::mean_n(fin)),
        Quantity::CohA2A2 | Quantity::CatA2A2 => re(obs::factorial_moment2(fin)),
        Quantity::CohXphi | Quantity::SqXphi => re(obs::quadrature_moments(fin, phi)?.0),
        Quantity::SqX2 => re(obs::quadrature_moments(fin, phi)?.1),
        Quantity::CohA2 | Quantity::CatA2 => obs::mean_a2(fin),
        Quantity::CatAmean => obs::mean_a(fin),
        Quantity::SqAmp => displace(C64::new(0.5 * cfg.s, 0.0), init)?.amp(AMPLITUDE_N),
        Quantity::SqInitG2 | Quantity::CatInitG2 => re(obs::g2(init)?),
        Quantity::SqInitQ | Quantity::CatInitQ => re(obs::mandel_q(init)),
        Quantity::SqInitSphi | Quantity::CatInitSphi => re(obs::squeezing_parameter(init, phi)?),
    })
}

/// Deliberately wrong constant, for exercising the failure path.
fn perturb(v: C64) -> C64 {
    v * 1.001 + 1e-3
}

fn judge(
    q: Quantity,
    point: &GridPoint,
    phi_quad: Option<f64>,
    oracle_value: Result<C64>,
    fault: Option<Quantity>,
) -> ClosedFormReport {
    let (mut literal, mut corrected) = closed_form(q, &point.spec, &point.cfg, phi_quad.unwrap_or(0.0));
    if fault == Some(q) {
        literal = perturb(literal);
        corrected = corrected.map(perturb);
    }
    let oracle_value = oracle_value.unwrap_or(C64::new(f64::NAN, f64::NAN));
    let abs_err = (literal - oracle_value).norm();
    let corrected_err = corrected.map(|c| (c - oracle_value).norm());
    let status = if within_tolerance(literal, oracle_value) {
        Status::Match
    } else if corrected.is_some_and(|c| within_tolerance(c, oracle_value)) {
        Status::TypoSuspected
    } else {
        Status::Fail
    };
    ClosedFormReport {
        quantity: q,
        point: *point,
        phi_quad,
        analytic_value: literal,
        oracle_value,
        abs_err,
        status,
        corrected_value: corrected,
        corrected_err,
    }
}

fn point_reports(point: &GridPoint, phi_quads: &[f64], fault: Option<Quantity>) -> Vec<ClosedFormReport> {
    let outcome = evaluate(&point.spec, &point.cfg, default_dim());
    let mut out = Vec::new();
    for q in Quantity::for_pointer(point.spec.kind) {
        let phis: Vec<Option<f64>> = if q.needs_phi() { phi_quads.iter().map(|&p| Some(p)).collect() } else { vec![None] };
        for phi in phis {
            let value = match &outcome {
                Ok(o) => oracle(q, o, &point.cfg, phi.unwrap_or(0.0)),
                Err(e) => Err(e.clone()),
            };
            out.push(judge(q, point, phi, value, fault));
        }
    }
    out
}

/// Every closed form at every grid point, in grid order. `fault` perturbs
/// one quantity's closed forms.
pub fn validate_all(grid: &ValidationGrid, fault: Option<Quantity>) -> (Vec<ClosedFormReport>, Summary) {
    let reports: Vec<ClosedFormReport> = grid
        .points
        .par_iter()
        .map(|p| point_reports(p, &grid.phi_quads, fault))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let summary = Summary::of(&reports);
    (reports, summary)
}

fn single(spec: PointerSpec, cfg: &MeasurementConfig, phi_quads: &[f64]) -> Result<Vec<ClosedFormReport>> {
    spec.validate()?;
    cfg.validate()?;
    Ok(point_reports(&GridPoint { spec, cfg: *cfg }, phi_quads, None))
}

pub fn coherent_closed_forms(
    r: f64,
    vartheta: f64,
    cfg: &MeasurementConfig,
    phi_quads: &[f64],
) -> Result<Vec<ClosedFormReport>> {
    single(PointerSpec::coherent(r, vartheta), cfg, phi_quads)
}

pub fn squeezed_closed_forms(
    eta: f64,
    delta: f64,
    cfg: &MeasurementConfig,
    phi_quads: &[f64],
) -> Result<Vec<ClosedFormReport>> {
    single(PointerSpec::squeezed(eta, delta), cfg, phi_quads)
}

pub fn cat_closed_forms(
    r: f64,
    delta: f64,
    omega: f64,
    cfg: &MeasurementConfig,
    phi_quads: &[f64],
) -> Result<Vec<ClosedFormReport>> {
    single(PointerSpec::cat(r, delta, omega), cfg, phi_quads)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn statuses(reports: &[ClosedFormReport], q: Quantity) -> Vec<Status> {
        reports.iter().filter(|r| r.quantity == q).map(|r| r.status).collect()
    }

    #[test]
    fn grid_shapes() {
        let g = ValidationGrid::small();
        assert_eq!(g.for_pointer(PointerKind::Coherent).points.len(), 27);
        assert_eq!(g.for_pointer(PointerKind::SqueezedVacuum).points.len(), 27);
        assert_eq!(g.for_pointer(PointerKind::Cat).points.len(), 81);
        assert!(g.points.iter().all(|p| p.spec.validate().is_ok() && p.cfg.validate().is_ok()));
        let f = ValidationGrid::full();
        assert!(f.points.iter().all(|p| p.spec.validate().is_ok() && p.cfg.validate().is_ok()));
        assert_eq!("full".parse::<GridSize>().unwrap(), GridSize::Full);
        assert!("huge".parse::<GridSize>().is_err());
    }

    #[test]
    fn coherent_example_point() {
        let c = MeasurementConfig::new(2.0, 7.0 * PI / 9.0, 4.0 * PI / 5.0).unwrap();
        let reports = coherent_closed_forms(1.0, PI / 3.0, &c, &[0.7]).unwrap();
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert_ne!(r.status, Status::Fail, "{r:?}");
            let best = if r.status == Status::Match { r.abs_err } else { r.corrected_err.unwrap() };
            assert!(best < 1e-8 * r.oracle_value.norm().max(1.0));
        }
        assert_eq!(statuses(&reports, Quantity::CohNorm), [Status::Match]);
        assert_eq!(statuses(&reports, Quantity::CohMeanN), [Status::TypoSuspected]);
    }

    #[test]
    fn squeezed_example_point() {
        let c = MeasurementConfig::new(1.0, 7.0 * PI / 9.0, PI / 3.0).unwrap();
        let reports = squeezed_closed_forms(0.2, PI / 3.0, &c, &[0.4]).unwrap();
        assert!(reports.iter().all(|r| r.status != Status::Fail), "{reports:?}");
        assert_eq!(statuses(&reports, Quantity::SqXphi), [Status::TypoSuspected]);
        assert_eq!(statuses(&reports, Quantity::SqAmp), [Status::TypoSuspected]);
        assert_eq!(statuses(&reports, Quantity::SqInitG2), [Status::Match]);
    }

    #[test]
    fn cat_example_point() {
        let c = MeasurementConfig::new(0.5, 7.0 * PI / 9.0, 0.0).unwrap();
        let reports = cat_closed_forms(0.3, 0.0, PI, &c, &[PI / 2.0]).unwrap();
        assert!(reports.iter().all(|r| r.status != Status::Fail), "{reports:?}");
        assert_eq!(statuses(&reports, Quantity::CatMeanN), [Status::Match]);
    }

    #[test]
    fn injected_fault_fails() {
        let grid = ValidationGrid {
            points: vec![GridPoint { spec: PointerSpec::coherent(0.5, 0.2), cfg: cfg(1.0, 1.0, 0.5) }],
            phi_quads: vec![0.3],
        };
        let (reports, summary) = validate_all(&grid, Some(Quantity::CohA2));
        assert_eq!(summary.failed, 1);
        assert!(!summary.passed());
        let failed: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
        assert_eq!(failed[0].quantity, Quantity::CohA2);
    }
}
