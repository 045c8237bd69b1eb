use std::f64::consts::FRAC_PI_2;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::DEFAULT_TAIL_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// QCR bound against squeezing.
    #[serde(rename = "qcr_vs_S")]
    QcrVsS,
    /// QCR gain over the SMSV probe against squeezing.
    #[serde(rename = "gain_vs_S")]
    GainVsS,
    /// Intensity-difference uncertainty against squeezing.
    #[serde(rename = "intensity_dphi_vs_S")]
    IntensityDphiVsS,
    #[serde(rename = "single_point")]
    SinglePoint,
    /// `S₂` for every `(n, α, t)`; the `s_db` grid gives the search range.
    #[serde(rename = "crossing_s2")]
    CrossingS2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::config("format", format!("expected csv or json, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepConfig {
    pub mode: Mode,
    pub s_db: Vec<f64>,
    pub n: Vec<usize>,
    pub alpha: Vec<f64>,
    pub t: Vec<f64>,
    pub phi: f64,
    pub tail_tol: f64,
    pub output: Option<PathBuf>,
    pub format: Format,
}

/// A grid entry: a single number, a list, or a `"start:step:stop"` range.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Grid {
    One(f64),
    List(Vec<f64>),
    Range(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    mode: Mode,
    #[serde(alias = "S_dB")]
    s_db: Grid,
    n: Grid,
    alpha: Grid,
    t: Grid,
    phi: Option<f64>,
    tail_tol: Option<f64>,
    output: Option<PathBuf>,
    format: Option<String>,
}

/// `start, start + step, ..., stop`, rounded to 12 decimals so that 0.1 steps
/// print as 0.3 rather than 0.30000000000000004.
pub(crate) fn step_range(start: f64, step: f64, stop: f64) -> Vec<f64> {
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    (0..=count).map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12).collect()
}

fn expand(field: &str, grid: Grid) -> Result<Vec<f64>> {
    let values = match grid {
        Grid::One(v) => vec![v],
        Grid::List(v) => v,
        Grid::Range(spec) => {
            let parts: Vec<&str> = spec.split(':').map(str::trim).collect();
            let nums: std::result::Result<Vec<f64>, _> = parts.iter().map(|p| p.parse::<f64>()).collect();
            let nums = match nums {
                Ok(v) if v.len() == 3 => v,
                _ => return Err(Error::config(field, format!("range must be `start:step:stop`, got `{spec}`"))),
            };
            let (start, step, stop) = (nums[0], nums[1], nums[2]);
            if !(step > 0.0) || !(stop >= start) {
                return Err(Error::config(field, format!("range `{spec}` needs step > 0 and stop >= start")));
            }
            step_range(start, step, stop)
        }
    };
    if values.is_empty() {
        return Err(Error::config(field, "grid is empty"));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::config(field, format!("non-finite value {v}")));
    }
    Ok(values)
}

impl SweepConfig {
    fn from_raw(raw: RawConfig) -> Result<Self> {
        let n = expand("n", raw.n)?
            .into_iter()
            .map(|v| {
                if v >= 0.0 && v.fract() == 0.0 {
                    Ok(v as usize)
                } else {
                    Err(Error::config("n", format!("photon numbers must be nonnegative integers, got {v}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let format = raw.format.as_deref().map(Format::parse).transpose()?;
        let config = SweepConfig {
            mode: raw.mode,
            s_db: expand("s_db", raw.s_db)?,
            n,
            alpha: expand("alpha", raw.alpha)?,
            t: expand("t", raw.t)?,
            phi: raw.phi.unwrap_or(FRAC_PI_2),
            tail_tol: raw.tail_tol.unwrap_or(DEFAULT_TAIL_TOL),
            format: format
                .or_else(|| raw.output.as_deref().and_then(Format::from_path))
                .unwrap_or_default(),
            output: raw.output,
        };
        config.validate()?;
        Ok(config)
    }

    /// Flat key-value file, TOML syntax.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::config("config", e.message().to_string()))?;
        Self::from_raw(raw)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawConfig = serde_json::from_str(text).map_err(|e| Error::config("config", e.to_string()))?;
        Self::from_raw(raw)
    }

    /// Loads JSON for `.json` paths and the key-value format otherwise.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Self::from_json_str(&text),
            _ => Self::from_toml_str(&text),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, len) in [("s_db", self.s_db.len()), ("n", self.n.len()), ("alpha", self.alpha.len()), ("t", self.t.len())] {
            if len == 0 {
                return Err(Error::config(name, "grid is empty"));
            }
        }
        if let Some(s) = self.s_db.iter().find(|s| !(**s >= 0.0)) {
            return Err(Error::config("s_db", format!("squeezing must be >= 0 dB, got {s}")));
        }
        if let Some(t) = self.t.iter().find(|t| !(**t > 0.0 && **t <= 1.0)) {
            return Err(Error::config("t", format!("transmissivity must be in (0, 1], got {t}")));
        }
        if let Some(a) = self.alpha.iter().find(|a| !(**a > 0.0)) {
            return Err(Error::config("alpha", format!("coherent amplitude must be > 0, got {a}")));
        }
        if !self.phi.is_finite() {
            return Err(Error::config("phi", "must be finite"));
        }
        if !(self.tail_tol > 0.0 && self.tail_tol < 1.0) {
            return Err(Error::config("tail_tol", format!("must be in (0, 1), got {}", self.tail_tol)));
        }
        match self.mode {
            Mode::SinglePoint => {
                for (name, len) in [("s_db", self.s_db.len()), ("n", self.n.len()), ("alpha", self.alpha.len()), ("t", self.t.len())] {
                    if len != 1 {
                        return Err(Error::config(name, "single_point takes exactly one value"));
                    }
                }
            }
            Mode::CrossingS2 => {
                let (lo, hi) = self.s_range();
                if !(hi > lo) {
                    return Err(Error::config("s_db", "crossing_s2 needs a range with at least two distinct values"));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// `(min, max)` of the squeezing grid.
    pub fn s_range(&self) -> (f64, f64) {
        let lo = self.s_db.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = self.s_db.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    }
}

impl Format {
    /// Format implied by a `.csv` or `.json` extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Some(Format::Json),
            Some("csv") => Some(Format::Csv),
            _ => None,
        }
    }
}
