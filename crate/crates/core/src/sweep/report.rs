//! Validation report and misprint table as CSV.

use std::path::{Path, PathBuf};

use crate::analytic::{typo_evidence, validate_all, ClosedFormReport, GridSize, Quantity, Summary, ValidationGrid};

use super::engine::PARAM_COLUMNS;
use super::table::{fmt_num, fmt_opt, CsvTable};

pub const REPORT_FILE: &str = "validation_report.csv";
pub const TYPO_FILE: &str = "typo_table.csv";

pub fn report_table(reports: &[ClosedFormReport]) -> CsvTable {
    let mut header = vec!["quantity", "pointer"];
    header.extend(PARAM_COLUMNS);
    header.extend([
        "analytic_re",
        "analytic_im",
        "oracle_re",
        "oracle_im",
        "abs_err",
        "status",
        "corrected_re",
        "corrected_im",
        "corrected_err",
    ]);
    let mut t = CsvTable::new(header);
    for r in reports {
        let (spec, cfg) = (&r.point.spec, &r.point.cfg);
        let mut row = vec![r.quantity.name().to_string(), spec.kind.name().to_string()];
        row.extend([spec.r, spec.vartheta, spec.eta, spec.delta, spec.omega, cfg.s, cfg.theta, cfg.phi_sys].map(fmt_num));
        row.push(fmt_opt(r.phi_quad));
        row.extend([r.analytic_value.re, r.analytic_value.im, r.oracle_value.re, r.oracle_value.im, r.abs_err].map(fmt_num));
        row.push(r.status.name().to_string());
        row.push(fmt_opt(r.corrected_value.map(|c| c.re)));
        row.push(fmt_opt(r.corrected_value.map(|c| c.im)));
        row.push(fmt_opt(r.corrected_err));
        t.push(row);
    }
    t
}

pub fn typo_table(reports: &[ClosedFormReport]) -> CsvTable {
    let mut t = CsvTable::new([
        "quantity",
        "literal",
        "corrected",
        "points",
        "literal_matches",
        "typo_suspected",
        "failed",
        "max_literal_err",
        "max_corrected_err",
    ]);
    for ev in typo_evidence(reports) {
        t.push(vec![
            ev.entry.quantity.name().to_string(),
            ev.entry.literal.to_string(),
            ev.entry.corrected.to_string(),
            ev.points.to_string(),
            ev.literal_matches.to_string(),
            ev.typo_suspected.to_string(),
            ev.failed.to_string(),
            fmt_num(ev.max_literal_err),
            fmt_num(ev.max_corrected_err),
        ]);
    }
    t
}

/// Run the grid, write both tables into `dir`, and return the summary and
/// the written paths.
pub fn cmd_validate(size: GridSize, dir: &Path, fault: Option<Quantity>) -> std::io::Result<(Summary, [PathBuf; 2])> {
    let (reports, summary) = validate_all(&ValidationGrid::new(size), fault);
    std::fs::create_dir_all(dir)?;
    let report = dir.join(REPORT_FILE);
    let typos = dir.join(TYPO_FILE);
    std::fs::write(&report, report_table(&reports).to_csv_string())?;
    std::fs::write(&typos, typo_table(&reports).to_csv_string())?;
    Ok((summary, [report, typos]))
}
