//! Flat `key = value` run configuration.
//!
//! ```text
//! # coherent pointer, Fig.-style sweep
//! pointer = coherent
//! r = 1
//! vartheta = pi/3
//! theta = 7pi/9
//! phi_sys = pi/4
//! axis1 = s:0:3:31
//! outputs = g2, mandel_q, s_phi@pi/2
//! ```
//!
//! Reals accept `pi` multiples such as `7pi/9`, `-pi/2` or `2*pi`.

use crate::error::{Error, Result};
use crate::postselect::{default_dim, MeasurementConfig};
use crate::states::{PointerKind, PointerSpec};
use crate::tol;

use super::table::fmt_num;

/// Parameters an axis may sweep.
pub const AXIS_PARAMS: [&str; 9] = ["s", "theta", "phi_sys", "r", "vartheta", "eta", "delta", "omega", "phi_quad"];

const KEYS: [&str; 16] = [
    "pointer", "r", "vartheta", "eta", "delta", "omega", "s", "theta", "phi_sys", "phi_quad", "dim", "phi_count",
    "pn_max", "axis1", "axis2", "outputs",
];

/// Parse a real, allowing `pi` multiples: `1.5`, `pi`, `-pi/2`, `7pi/9`, `2*pi/3`.
pub fn parse_real(text: &str) -> Option<f64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
    if t.is_empty() {
        return None;
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t.as_str(), None),
    };
    let num = if let Some(coef) = num.strip_suffix("pi").or_else(|| num.strip_suffix("π")) {
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let c = match coef {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().ok()?,
        };
        c * std::f64::consts::PI
    } else {
        num.parse::<f64>().ok()?
    };
    let value = match den {
        Some(d) => num / d.parse::<f64>().ok()?,
        None => num,
    };
    value.is_finite().then_some(value)
}

fn real(field: &str, text: &str) -> Result<f64> {
    parse_real(text).ok_or_else(|| Error::config(field, format!("`{text}` is not a real number")))
}

fn count(field: &str, text: &str) -> Result<usize> {
    text.trim().parse::<usize>().map_err(|_| Error::config(field, format!("`{text}` is not a non-negative integer")))
}

/// `name:start:stop:count`, evaluated as an inclusive linear grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub name: &'static str,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(name: &str, start: f64, stop: f64, count: usize) -> Result<Self> {
        let name = *AXIS_PARAMS
            .iter()
            .find(|&&p| p == name)
            .ok_or_else(|| Error::config("axis", format!("`{name}` cannot be swept")))?;
        if count < 2 {
            return Err(Error::config("axis", format!("count must be at least 2, got {count}")));
        }
        Ok(Self { name, start, stop, count })
    }

    pub fn parse(field: &str, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').map(str::trim).collect();
        let [name, start, stop, n] = parts[..] else {
            return Err(Error::config(field, format!("expected name:start:stop:count, got `{text}`")));
        };
        Self::new(name, real(field, start)?, real(field, stop)?, count(field, n)?)
            .map_err(|e| match e {
                Error::ConfigParse { reason, .. } => Error::config(field, reason),
                other => other,
            })
    }

    /// Inclusive grid; endpoints are exact.
    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|k| if k + 1 == self.count { self.stop } else { self.start + (self.stop - self.start) * k as f64 / last })
            .collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Output {
    MeanN,
    G2,
    MandelQ,
    /// At the configured quadrature angle.
    SPhi,
    SPhiAt(f64),
    Pn(usize),
    Success,
    SuccessNaive,
}

impl Output {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some(angle) = t.strip_prefix("s_phi@") {
            return Ok(Output::SPhiAt(real("outputs", angle)?));
        }
        if let Some(n) = t.strip_prefix("pn@") {
            return Ok(Output::Pn(count("outputs", n)?));
        }
        match t {
            "mean_n" => Ok(Output::MeanN),
            "g2" => Ok(Output::G2),
            "mandel_q" | "q" => Ok(Output::MandelQ),
            "s_phi" => Ok(Output::SPhi),
            "success" => Ok(Output::Success),
            "success_naive" => Ok(Output::SuccessNaive),
            other => Err(Error::config("outputs", format!("unknown output `{other}`"))),
        }
    }

    pub fn column(&self) -> String {
        match self {
            Output::MeanN => "mean_n".into(),
            Output::G2 => "g2".into(),
            Output::MandelQ => "mandel_q".into(),
            Output::SPhi => "s_phi".into(),
            Output::SPhiAt(a) => format!("s_phi@{}", fmt_num(*a)),
            Output::Pn(n) => format!("p{n}"),
            Output::Success => "success".into(),
            Output::SuccessNaive => "success_naive".into(),
        }
    }
}

pub const DEFAULT_OUTPUTS: [Output; 5] = [Output::MeanN, Output::G2, Output::MandelQ, Output::SPhi, Output::Success];

/// Everything `point` and `sweep` need.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub pointer: PointerSpec,
    pub cfg: MeasurementConfig,
    pub phi_quad: f64,
    pub dim: usize,
    /// Quadrature angles reported by `point`.
    pub phi_count: usize,
    /// Highest photon number reported by `point`.
    pub pn_max: usize,
    pub axis1: Option<Axis>,
    pub axis2: Option<Axis>,
    pub outputs: Vec<Output>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            pointer: PointerSpec::coherent(0.0, 0.0),
            cfg: MeasurementConfig { s: 0.0, theta: 0.0, phi_sys: 0.0 },
            phi_quad: 0.0,
            dim: default_dim(),
            phi_count: 64,
            pn_max: 20,
            axis1: None,
            axis2: None,
            outputs: DEFAULT_OUTPUTS.to_vec(),
        }
    }
}

impl RunConfig {
    /// Parse config text. `pointer` is applied first wherever it appears.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::config(format!("line {}", lineno + 1), format!("expected key = value, got `{line}`")))?;
            pairs.push((key.trim().to_string(), value.trim().to_string()));
        }
        let mut rc = RunConfig::default();
        rc.apply_all(pairs.iter().map(|(k, v)| (k.as_str(), v.as_str())))?;
        Ok(rc)
    }

    /// Apply `key=value` overrides.
    pub fn apply_overrides<S: AsRef<str>>(&mut self, overrides: &[S]) -> Result<()> {
        let pairs = overrides
            .iter()
            .map(|o| {
                let o = o.as_ref();
                o.split_once('=')
                    .map(|(k, v)| (k.trim(), v.trim()))
                    .ok_or_else(|| Error::config(o, "expected key=value"))
            })
            .collect::<Result<Vec<_>>>()?;
        self.apply_all(pairs.into_iter())
    }

    fn apply_all<'a>(&mut self, pairs: impl Iterator<Item = (&'a str, &'a str)> + Clone) -> Result<()> {
        for (k, v) in pairs.clone().filter(|(k, _)| *k == "pointer") {
            self.set(k, v)?;
        }
        for (k, v) in pairs.filter(|(k, _)| *k != "pointer") {
            self.set(k, v)?;
        }
        Ok(())
    }

    /// Set one key. A pointer change resets the pointer parameters.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "pointer" => {
                let kind: PointerKind = value.parse().map_err(|_| Error::config(key, format!("unknown pointer `{value}`")))?;
                if kind != self.pointer.kind {
                    self.pointer = PointerSpec { kind, r: 0.0, vartheta: 0.0, eta: 0.0, delta: 0.0, omega: 0.0 };
                }
            }
            "r" | "vartheta" | "eta" | "delta" | "omega" => {
                self.pointer.set(key, real(key, value)?);
            }
            "s" | "theta" | "phi_sys" => {
                self.cfg.set(key, real(key, value)?);
            }
            "phi_quad" => self.phi_quad = real(key, value)?,
            "dim" => {
                let d = count(key, value)?;
                if !(4..=tol::MAX_DIM).contains(&d) {
                    return Err(Error::config(key, format!("must lie in [4, {}]", tol::MAX_DIM)));
                }
                self.dim = d;
            }
            "phi_count" => {
                self.phi_count = count(key, value)?;
                if self.phi_count == 0 {
                    return Err(Error::config(key, "must be positive"));
                }
            }
            "pn_max" => self.pn_max = count(key, value)?,
            "axis1" => self.axis1 = Some(Axis::parse(key, value)?),
            "axis2" => self.axis2 = Some(Axis::parse(key, value)?),
            "outputs" => {
                self.outputs = value.split(',').filter(|o| !o.trim().is_empty()).map(Output::parse).collect::<Result<_>>()?;
                if self.outputs.is_empty() {
                    return Err(Error::config(key, "no outputs listed"));
                }
            }
            _ => {
                return Err(Error::config(key, format!("unknown key; expected one of {}", KEYS.join(", "))));
            }
        }
        Ok(())
    }

    /// Set a swept parameter by name.
    pub fn set_param(&mut self, name: &str, value: f64) {
        if name == "phi_quad" {
            self.phi_quad = value;
        } else if !self.cfg.set(name, value) {
            self.pointer.set(name, value);
        }
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        match name {
            "phi_quad" => Some(self.phi_quad),
            n => self.cfg.get(n).or_else(|| self.pointer.get(n)),
        }
    }
}
