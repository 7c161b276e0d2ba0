use std::path::Path;
use std::process::{Command, Output};

fn postsel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postsel")).args(args).output().unwrap()
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn table(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let header = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows = rdr.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn point_for_the_vacuum() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "vac.cfg", "pointer = coherent\nr = 0\ns = 0\n");
    let out = postsel(&["point", "--config", &cfg]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let (h, rows) = table(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][col(&h, "mean_n")], "0");
    assert_eq!(rows[0][col(&h, "mandel_q")], "0");
    assert_eq!(rows[0][col(&h, "g2")], "");
}

#[test]
fn point_reports_photon_distribution() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "fig1.cfg",
        "pointer = coherent\nr = 1\nvartheta = pi/3\nphi_sys = pi/4\ntheta = 7pi/9\ns = 1\n",
    );
    let out = postsel(&["point", "--config", &cfg]);
    assert!(out.status.success());
    let (h, rows) = table(&out);
    let p: Vec<f64> = (0..=20).map(|n| rows[0][col(&h, &format!("p{n}"))].parse().unwrap()).collect();
    assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-8);
    assert!(!h.contains(&"p21".to_string()));
}

#[test]
fn overrides_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "c.cfg", "pointer = cat\nr = 0.3\nomega = pi\n");
    let target = dir.path().join("out.csv");
    let out = postsel(&["point", "--config", &cfg, "--set", "s=0.5", "--set", "theta=pi/9", "--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&target).unwrap();
    assert!(text.starts_with("pointer,r,"));
    assert!(text.lines().nth(1).unwrap().starts_with("cat,0.3,0,0,0,3.14159265359,0.5,0.349065850399,"));
    assert!(!text.contains('\r'));
}

#[test]
fn config_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "bad.cfg", "pointer = coherent\nsigma = 2\n");
    let out = postsel(&["point", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`sigma`"));

    let cfg = write_config(dir.path(), "axis.cfg", "axis1 = s:0:3:1\n");
    let out = postsel(&["sweep", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));

    // a parameter the pointer does not use
    let cfg = write_config(dir.path(), "sq.cfg", "pointer = squeezed\nr = 1\n");
    let out = postsel(&["point", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`r`"));

    let out = postsel(&["point", "--config", "/nonexistent/x.cfg"]);
    assert_eq!(out.status.code(), Some(1));
    let out = postsel(&["figure", "--preset", "fig10a"]);
    assert_eq!(out.status.code(), Some(1));
    let out = postsel(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compute_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "pole.cfg", "pointer = coherent\nr = 1\ntheta = pi\n");
    let out = postsel(&["point", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_records_point_failures() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "s.cfg",
        "pointer = coherent\nr = 1\nvartheta = pi/3\nphi_sys = 4pi/5\ntheta = 7pi/9\naxis1 = s:0:3:31\noutputs = g2\n",
    );
    let out = postsel(&["sweep", "--config", &cfg]);
    assert!(out.status.success());
    let (h, rows) = table(&out);
    assert_eq!(h, ["s", "g2", "dim", "warning"]);
    assert_eq!(rows.len(), 31);
    assert!(rows.iter().all(|r| r[1].parse::<f64>().unwrap() >= 0.0));

    // theta sweep hitting the pole keeps going
    let out = postsel(&["sweep", "--config", &cfg, "--set", "axis1=theta:0:pi:5"]);
    assert!(out.status.success());
    let (_, rows) = table(&out);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4][1], "");
    assert!(!rows[4][3].is_empty());
    assert!(!rows[3][1].is_empty());
}

#[test]
fn squeezed_two_axis_sweep_finds_sub_poissonian_region() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "q.cfg",
        "pointer = squeezed\neta = 0.2\ndelta = pi/3\nphi_sys = pi/3\naxis1 = s:0:3:21\naxis2 = theta:0:8pi/9:21\noutputs = mandel_q\n",
    );
    let out = postsel(&["sweep", "--config", &cfg]);
    assert!(out.status.success());
    let (_, rows) = table(&out);
    assert_eq!(rows.len(), 441);
    let negative = rows
        .iter()
        .filter(|r| {
            let (s, theta, q): (f64, f64, f64) = (r[0].parse().unwrap(), r[1].parse().unwrap(), r[2].parse().unwrap());
            s >= 0.5 && theta >= 2.0 && q < 0.0
        })
        .count();
    assert!(negative > 0);
}

#[test]
fn figure_writes_long_format() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("fig6d.csv");
    let out = postsel(&["figure", "--preset", "fig6d", "--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&target).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "curve,s,s_phi,warning");
    assert_eq!(lines.count(), 4 * 31);
}

#[test]
fn validate_small_grid_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = postsel(&["validate", "--grid", "small", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = std::fs::read_to_string(dir.path().join("validation_report.csv")).unwrap();
    assert!(!report.contains(",fail,"));
    assert!(report.contains(",typo_suspected,"));
    let typos = std::fs::read_to_string(dir.path().join("typo_table.csv")).unwrap();
    assert_eq!(typos.lines().count(), 1 + postsel::analytic::TYPOS.len());
}

#[test]
fn validate_with_injected_fault_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = postsel(&["validate", "--grid", "small", "--out", dir.path().to_str().unwrap(), "--inject-fault", "cat_mean_n"]);
    assert_eq!(out.status.code(), Some(3));
    let report = std::fs::read_to_string(dir.path().join("validation_report.csv")).unwrap();
    let failing: Vec<&str> = report.lines().filter(|l| l.contains(",fail,")).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|l| l.starts_with("cat_mean_n,")));
}
