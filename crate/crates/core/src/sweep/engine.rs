//! Point and grid evaluation. Points run in parallel and merge in grid order.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::observables::{self as obs, full_report, phi_grid};
use crate::postselect::{evaluate, postselection_success_naive, Outcome};

use super::config::{Output, RunConfig};
use super::table::{fmt_num, fmt_opt, CsvTable};

/// Pointer and measurement parameters, in column order.
pub const PARAM_COLUMNS: [&str; 9] = ["r", "vartheta", "eta", "delta", "omega", "s", "theta", "phi_sys", "phi_quad"];

fn output_value(o: Output, out: &Outcome, rc: &RunConfig) -> Result<f64> {
    let v = &out.final_state;
    match o {
        Output::MeanN => Ok(obs::mean_n(v)),
        Output::G2 => obs::g2(v),
        Output::MandelQ => Ok(obs::mandel_q(v)),
        Output::SPhi => obs::squeezing_parameter(v, rc.phi_quad),
        Output::SPhiAt(a) => obs::squeezing_parameter(v, a),
        Output::Pn(n) => Ok(if n < v.dim() { v.amp(n).norm_sqr() / v.norm_sqr() } else { 0.0 }),
        Output::Success => Ok(out.success_prob),
        Output::SuccessNaive => Ok(postselection_success_naive(&rc.cfg)),
    }
}

/// One evaluated grid point: output cells, basis size, and warnings.
#[derive(Clone, Debug, PartialEq)]
pub struct PointValues {
    pub values: Vec<Option<f64>>,
    pub dim: Option<usize>,
    pub warning: String,
}

/// Evaluate `outputs` at one point. Failures become empty cells plus a
/// warning instead of an error.
pub fn point_values(rc: &RunConfig, outputs: &[Output]) -> PointValues {
    match evaluate(&rc.pointer, &rc.cfg, rc.dim) {
        Err(e) => PointValues { values: vec![None; outputs.len()], dim: None, warning: e.to_string() },
        Ok(out) => {
            let mut warnings = Vec::new();
            let values = outputs
                .iter()
                .map(|&o| match output_value(o, &out, rc) {
                    Ok(x) => Some(x),
                    Err(e) => {
                        warnings.push(format!("{}: {e}", o.column()));
                        None
                    }
                })
                .collect();
            PointValues { values, dim: Some(out.dim), warning: warnings.join("; ") }
        }
    }
}

/// Evaluate many configurations concurrently; results keep input order.
pub fn evaluate_all(points: &[RunConfig], outputs: &[Output]) -> Vec<PointValues> {
    points.par_iter().map(|rc| point_values(rc, outputs)).collect()
}

/// Grid over `axis1` (and `axis2`), rows axis1-major.
pub fn cmd_sweep(rc: &RunConfig) -> Result<CsvTable> {
    let axis1 = rc.axis1.as_ref().ok_or_else(|| Error::config("axis1", "a sweep needs axis1"))?;
    let axes: Vec<_> = std::iter::once(axis1).chain(rc.axis2.as_ref()).collect();
    if axes.len() == 2 && axes[0].name == axes[1].name {
        return Err(Error::config("axis2", "must differ from axis1"));
    }
    let mut points = Vec::new();
    let mut coords = Vec::new();
    for &x in &axis1.values() {
        let ys = rc.axis2.as_ref().map(|a| a.values().into_iter().map(Some).collect()).unwrap_or_else(|| vec![None]);
        for y in ys {
            let mut p = rc.clone();
            p.set_param(axis1.name, x);
            let mut c = vec![x];
            if let (Some(a2), Some(y)) = (rc.axis2.as_ref(), y) {
                p.set_param(a2.name, y);
                c.push(y);
            }
            points.push(p);
            coords.push(c);
        }
    }
    let results = evaluate_all(&points, &rc.outputs);
    let header = axes
        .iter()
        .map(|a| a.name.to_string())
        .chain(rc.outputs.iter().map(Output::column))
        .chain(["dim".to_string(), "warning".to_string()]);
    let mut table = CsvTable::new(header);
    for (c, pv) in coords.iter().zip(results) {
        let mut row: Vec<String> = c.iter().map(|&x| fmt_num(x)).collect();
        row.extend(pv.values.iter().map(|&v| fmt_opt(v)));
        row.push(pv.dim.map(|d| d.to_string()).unwrap_or_default());
        row.push(pv.warning);
        table.push(row);
    }
    Ok(table)
}

/// One row with the full observable report. Measurement failures and
/// invariant violations are errors; an undefined g2 is a warning.
pub fn cmd_point(rc: &RunConfig) -> Result<CsvTable> {
    let out = evaluate(&rc.pointer, &rc.cfg, rc.dim)?;
    let angles = phi_grid(rc.phi_count);
    let report = full_report(&out.final_state, &angles)?;
    let s_here = obs::squeezing_parameter(&out.final_state, rc.phi_quad)?;

    let mut header: Vec<String> = vec!["pointer".into()];
    header.extend(PARAM_COLUMNS.iter().map(|s| s.to_string()));
    header.extend(
        ["dim", "success", "success_naive", "mean_n", "g2", "mandel_q", "s_phi"].iter().map(|s| s.to_string()),
    );
    header.extend(angles.iter().map(|&a| format!("s_phi@{}", fmt_num(a))));
    header.extend((0..=rc.pn_max).map(|n| format!("p{n}")));
    header.push("warning".into());

    let mut row = vec![rc.pointer.kind.name().to_string()];
    row.extend(PARAM_COLUMNS.iter().map(|p| fmt_num(rc.param(p).unwrap_or(0.0))));
    row.push(out.dim.to_string());
    row.push(fmt_num(out.success_prob));
    row.push(fmt_num(postselection_success_naive(&rc.cfg)));
    row.push(fmt_num(report.mean_n));
    row.push(fmt_opt(report.g2));
    row.push(fmt_num(report.mandel_q));
    row.push(fmt_num(s_here));
    row.extend(report.s_phi.iter().map(|&(_, s)| fmt_num(s)));
    row.extend((0..=rc.pn_max).map(|n| fmt_num(report.photon_dist.get(n).copied().unwrap_or(0.0))));
    row.push(if report.g2.is_none() { "g2: undefined for the vacuum".into() } else { String::new() });

    let mut table = CsvTable::new(header);
    table.push(row);
    Ok(table)
}
