use std::cmp::Ordering;

use rayon::prelude::*;
use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::config::{Mode, SweepConfig};
use crate::error::{Error, Result};
use crate::fock::CutoffPolicy;
use crate::metrology::{evaluate_baseline, evaluate_point, find_crossing_s2, Baseline};
use crate::states::{SqueezingSpec, SubtractionSpec, DB_PER_S};

/// One grid point. Field names are the CSV column names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct SweepRow {
    /// Squeezing of the input SMSV, dB.
    #[serde(rename = "S_dB")]
    pub s_db: f64,
    pub s: f64,
    pub y: f64,
    pub n: usize,
    pub t: f64,
    pub y1: f64,
    pub alpha: f64,
    /// Interferometer phase, radians.
    pub phi: f64,
    pub mean_n_cv: Option<f64>,
    pub success_prob: Option<f64>,
    #[serde(rename = "F_numeric")]
    pub f_numeric: Option<f64>,
    /// Closed-form QFI in `y1`, `n`, `⟨n⟩`. Diagnostic only.
    #[serde(rename = "F_eq6")]
    pub f_closed: Option<f64>,
    #[serde(rename = "eq6_rel_dev")]
    pub closed_rel_dev: Option<f64>,
    /// Radians.
    pub dphi_qcr: Option<f64>,
    /// Radians.
    pub dphi_intensity: Option<f64>,
    /// dB.
    pub g_qcr_db: Option<f64>,
    /// dB.
    pub g_intensity_db: Option<f64>,
    pub hl: Option<f64>,
    pub sql: Option<f64>,
    pub error_note: Option<String>,
}

impl SweepRow {
    fn inputs(s_db: f64, n: usize, t: f64, alpha: f64, phi: f64) -> Self {
        let s = s_db / DB_PER_S;
        let y = 0.5 * s.tanh();
        SweepRow {
            s_db,
            s,
            y,
            n,
            t,
            y1: y * t * t,
            alpha,
            phi,
            mean_n_cv: None,
            success_prob: None,
            f_numeric: None,
            f_closed: None,
            closed_rel_dev: None,
            dphi_qcr: None,
            dphi_intensity: None,
            g_qcr_db: None,
            g_intensity_db: None,
            hl: None,
            sql: None,
            error_note: None,
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.push_note(note);
        self
    }

    fn push_note(&mut self, note: String) {
        self.error_note = Some(match self.error_note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
    }

    /// Any non-finite output is dropped and recorded in `error_note`.
    fn sanitize(mut self) -> Self {
        let mut bad = Vec::new();
        for (name, slot) in [
            ("mean_n_cv", &mut self.mean_n_cv),
            ("success_prob", &mut self.success_prob),
            ("F_numeric", &mut self.f_numeric),
            ("F_eq6", &mut self.f_closed),
            ("eq6_rel_dev", &mut self.closed_rel_dev),
            ("dphi_qcr", &mut self.dphi_qcr),
            ("dphi_intensity", &mut self.dphi_intensity),
            ("g_qcr_db", &mut self.g_qcr_db),
            ("g_intensity_db", &mut self.g_intensity_db),
            ("hl", &mut self.hl),
            ("sql", &mut self.sql),
        ] {
            if let Some(v) = *slot {
                if !v.is_finite() {
                    bad.push(format!("{name} = {v}"));
                    *slot = None;
                }
            }
        }
        if !bad.is_empty() {
            self.push_note(format!("non-finite: {}", bad.join(", ")));
        }
        self
    }

    fn sort_key(&self, other: &Self) -> Ordering {
        self.s_db
            .total_cmp(&other.s_db)
            .then(self.n.cmp(&other.n))
            .then(self.t.total_cmp(&other.t))
            .then(self.alpha.total_cmp(&other.alpha))
    }

    /// Baseline rows are the plain SMSV probe (`n = 0`, `t = 1`).
    pub fn is_baseline(&self) -> bool {
        self.n == 0 && self.t == 1.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, JsonSchema)]
pub struct CrossingRow {
    pub n: usize,
    pub t: f64,
    pub alpha: f64,
    #[serde(rename = "S2_dB")]
    pub s2_db: Option<f64>,
    pub error_note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepTable {
    Points(Vec<SweepRow>),
    Crossings(Vec<CrossingRow>),
}

impl SweepTable {
    pub fn len(&self) -> usize {
        match self {
            SweepTable::Points(r) => r.len(),
            SweepTable::Crossings(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rows carrying an `error_note`.
    pub fn annotated(&self) -> usize {
        match self {
            SweepTable::Points(r) => r.iter().filter(|r| r.error_note.is_some()).count(),
            SweepTable::Crossings(r) => r.iter().filter(|r| r.error_note.is_some()).count(),
        }
    }

    pub fn points(&self) -> Option<&[SweepRow]> {
        match self {
            SweepTable::Points(r) => Some(r),
            SweepTable::Crossings(_) => None,
        }
    }
}

fn baseline_row(b: &Baseline) -> SweepRow {
    let mut row = SweepRow::inputs(b.squeezing.s_db(), 0, 1.0, b.alpha, b.phi);
    let (hl, sql) = crate::metrology::hl_sql(b.mean_n, b.alpha).unwrap_or((f64::NAN, f64::NAN));
    let f_closed = crate::metrology::qfi_closed_subtracted(b.squeezing.y(), 0, b.mean_n, b.alpha);
    row.mean_n_cv = Some(b.mean_n);
    row.success_prob = Some(1.0);
    row.f_numeric = Some(b.fisher);
    row.f_closed = Some(f_closed);
    row.closed_rel_dev = Some((f_closed - b.fisher).abs() / b.fisher);
    row.dphi_qcr = Some(b.dphi_qcr);
    row.dphi_intensity = b.dphi_intensity;
    row.g_qcr_db = Some(0.0);
    row.g_intensity_db = b.dphi_intensity.map(|_| 0.0);
    row.hl = Some(hl);
    row.sql = Some(sql);
    if let Some(note) = &b.intensity_note {
        row.push_note(note.clone());
    }
    row.sanitize()
}

fn point_row(s_db: f64, n: usize, t: f64, alpha: f64, phi: f64, baseline: &Baseline, policy: CutoffPolicy) -> SweepRow {
    let row = SweepRow::inputs(s_db, n, t, alpha, phi);
    let sub = match SubtractionSpec::new(n, t) {
        Ok(sub) => sub,
        Err(e) => return row.with_note(e.to_string()),
    };
    match evaluate_point(&sub, baseline, policy) {
        Ok(p) => {
            let mut row = row;
            row.mean_n_cv = Some(p.mean_n_cv);
            row.success_prob = Some(p.success_probability);
            row.f_numeric = Some(p.report.fisher);
            row.f_closed = Some(p.fisher_closed);
            row.closed_rel_dev = Some(p.closed_rel_dev);
            row.dphi_qcr = Some(p.report.dphi_qcr);
            row.dphi_intensity = p.report.dphi_intensity;
            row.g_qcr_db = Some(p.report.g_qcr_db);
            row.g_intensity_db = p.report.g_intensity_db;
            row.hl = Some(p.report.hl);
            row.sql = Some(p.report.sql);
            for note in p.notes {
                row.push_note(note);
            }
            row.sanitize()
        }
        Err(e) => row.with_note(e.to_string()),
    }
}

fn run_points(config: &SweepConfig, policy: CutoffPolicy) -> Vec<SweepRow> {
    let pairs: Vec<(f64, f64)> =
        config.s_db.iter().flat_map(|&s| config.alpha.iter().map(move |&a| (s, a))).collect();
    let baselines: Vec<(f64, f64, std::result::Result<Baseline, String>)> = pairs
        .par_iter()
        .map(|&(s_db, alpha)| {
            let b = SqueezingSpec::from_db(s_db)
                .and_then(|sq| evaluate_baseline(&sq, alpha, config.phi, policy))
                .map_err(|e| format!("baseline: {e}"));
            (s_db, alpha, b)
        })
        .collect();

    let mut jobs = Vec::new();
    for (s_db, alpha, b) in &baselines {
        for &n in &config.n {
            for &t in &config.t {
                if n == 0 && t == 1.0 {
                    continue;
                }
                jobs.push((*s_db, n, t, *alpha, b));
            }
        }
    }

    let mut rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|&(s_db, n, t, alpha, b)| match b {
            Ok(b) => point_row(s_db, n, t, alpha, config.phi, b, policy),
            Err(note) => SweepRow::inputs(s_db, n, t, alpha, config.phi).with_note(note.clone()),
        })
        .collect();
    rows.extend(baselines.iter().map(|(s_db, alpha, b)| match b {
        Ok(b) => baseline_row(b),
        Err(note) => SweepRow::inputs(*s_db, 0, 1.0, *alpha, config.phi).with_note(note.clone()),
    }));
    rows.sort_by(|a, b| a.sort_key(b));
    rows
}

fn run_crossings(config: &SweepConfig, policy: CutoffPolicy) -> Vec<CrossingRow> {
    let (lo, hi) = config.s_range();
    let mut jobs = Vec::new();
    for &n in &config.n {
        for &t in &config.t {
            for &alpha in &config.alpha {
                jobs.push((n, t, alpha));
            }
        }
    }
    jobs.par_iter()
        .map(|&(n, t, alpha)| match find_crossing_s2(n, alpha, t, lo, hi, policy) {
            Ok(s2) => CrossingRow { n, t, alpha, s2_db: Some(s2), error_note: None },
            Err(e) => CrossingRow { n, t, alpha, s2_db: None, error_note: Some(e.to_string()) },
        })
        .collect()
}

/// Evaluate every grid point of `config` on the current rayon pool.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepTable> {
    config.validate()?;
    let policy = CutoffPolicy::auto(config.tail_tol);
    Ok(match config.mode {
        Mode::CrossingS2 => SweepTable::Crossings(run_crossings(config, policy)),
        _ => SweepTable::Points(run_points(config, policy)),
    })
}

/// [`run_sweep`] on a dedicated pool of `threads` workers (`None`: rayon default).
pub fn run_sweep_with_threads(config: &SweepConfig, threads: Option<usize>) -> Result<SweepTable> {
    match threads {
        None => run_sweep(config),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            pool.install(|| run_sweep(config))
        }
    }
}
