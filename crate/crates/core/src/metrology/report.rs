use serde::Serialize;

use super::bounds::{gain_db, hl_sql, qcr_bound, qfi_closed_subtracted, qfi_product};
use super::intensity::phase_uncertainty_intensity;
use super::schwinger::ProbeSpec;
use crate::error::Result;
use crate::fock::CutoffPolicy;
use crate::states::{make_smsv, subtracted_closed_form, CoherentSpec, SqueezingSpec, SubtractionSpec};

/// Sensitivity figures for one probe against the SMSV baseline at the same `S` and `α`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SensitivityReport {
    pub fisher: f64,
    pub dphi_qcr: f64,
    pub dphi_intensity: Option<f64>,
    pub g_qcr_db: f64,
    pub g_intensity_db: Option<f64>,
    pub hl: f64,
    pub sql: f64,
    pub n_total: f64,
    pub phi: f64,
}

/// The unsubtracted SMSV ⊗ `|iα⟩` reference point.
#[derive(Debug, Clone, PartialEq)]
pub struct Baseline {
    pub squeezing: SqueezingSpec,
    pub alpha: f64,
    pub phi: f64,
    pub mean_n: f64,
    pub fisher: f64,
    pub dphi_qcr: f64,
    pub dphi_intensity: Option<f64>,
    pub intensity_note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointReport {
    pub squeezing: SqueezingSpec,
    pub subtraction: SubtractionSpec,
    pub alpha: f64,
    pub y1: f64,
    pub mean_n_cv: f64,
    pub success_probability: f64,
    pub fisher_closed: f64,
    pub closed_rel_dev: f64,
    pub report: SensitivityReport,
    /// Non-fatal problems, e.g. a blind intensity working point.
    pub notes: Vec<String>,
}

pub fn evaluate_baseline(sq: &SqueezingSpec, alpha: f64, phi: f64, policy: CutoffPolicy) -> Result<Baseline> {
    let cv = make_smsv(sq, policy)?;
    let mean_n = cv.mean_photon();
    let probe = ProbeSpec::new(cv, CoherentSpec::new(alpha));
    let fisher = qfi_product(&probe);
    let dphi_qcr = qcr_bound(fisher)?;
    let (dphi_intensity, intensity_note) = match phase_uncertainty_intensity(&probe, phi) {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(format!("baseline: {e}"))),
    };
    Ok(Baseline { squeezing: *sq, alpha, phi, mean_n, fisher, dphi_qcr, dphi_intensity, intensity_note })
}

/// Evaluate the subtracted probe `sub` applied to the SMSV of `baseline`.
pub fn evaluate_point(sub: &SubtractionSpec, baseline: &Baseline, policy: CutoffPolicy) -> Result<PointReport> {
    let sq = baseline.squeezing;
    let alpha = baseline.alpha;
    let phi = baseline.phi;
    let conditioned = subtracted_closed_form(&sq, sub, policy)?;
    let mean_n_cv = conditioned.state.mean_photon();
    let probe = ProbeSpec::new(conditioned.state, CoherentSpec::new(alpha));
    let fisher = qfi_product(&probe);
    let dphi_qcr = qcr_bound(fisher)?;
    let g_qcr_db = gain_db(dphi_qcr, baseline.dphi_qcr)?;
    let (hl, sql) = hl_sql(mean_n_cv, alpha)?;

    let mut notes = Vec::new();
    let dphi_intensity = match phase_uncertainty_intensity(&probe, phi) {
        Ok(v) => Some(v),
        Err(e) => {
            notes.push(format!("probe: {e}"));
            None
        }
    };
    if let Some(note) = &baseline.intensity_note {
        notes.push(note.clone());
    }
    let g_intensity_db = match (dphi_intensity, baseline.dphi_intensity) {
        (Some(p), Some(b)) => Some(gain_db(p, b)?),
        _ => None,
    };

    let y1 = sub.y1(&sq);
    let fisher_closed = qfi_closed_subtracted(y1, sub.n, mean_n_cv, alpha);
    Ok(PointReport {
        squeezing: sq,
        subtraction: *sub,
        alpha,
        y1,
        mean_n_cv,
        success_probability: conditioned.success_probability,
        fisher_closed,
        closed_rel_dev: (fisher_closed - fisher).abs() / fisher,
        report: SensitivityReport {
            fisher,
            dphi_qcr,
            dphi_intensity,
            g_qcr_db,
            g_intensity_db,
            hl,
            sql,
            n_total: mean_n_cv + alpha * alpha,
            phi,
        },
        notes,
    })
}
