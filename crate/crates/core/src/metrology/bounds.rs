use super::schwinger::{schwinger_moments, Axis, ProbeSpec};
use crate::error::{Error, Result};

/// Quantum Fisher information of the pure product probe, `4 Var(J_y)`.
pub fn qfi_product(probe: &ProbeSpec) -> f64 {
    (4.0 * schwinger_moments(probe).var(Axis::Y)).max(0.0)
}

/// Cramér–Rao bound `1/√F`.
pub fn qcr_bound(fisher: f64) -> Result<f64> {
    if !(fisher > 0.0) {
        return Err(Error::NoInformation(fisher));
    }
    Ok(fisher.sqrt().recip())
}

/// The printed closed form `2(1+2y1)⟨n⟩α² + (1+4y1(n+1))α² + ⟨n⟩`.
///
/// Reported next to [`qfi_product`], never substituted for it. For the
/// subtracted family `⟨a²⟩ = 2y1(⟨n⟩ + n + 1)`, so this agrees with
/// `α²(1 + 2⟨n⟩ + 2⟨a²⟩) + ⟨n⟩` and, at `n = 0`, `t = 1`, with
/// `α²e^{2s} + sinh²s`.
pub fn qfi_closed_subtracted(y1: f64, n: usize, mean_n: f64, alpha: f64) -> f64 {
    let a2 = alpha * alpha;
    2.0 * (1.0 + 2.0 * y1) * mean_n * a2 + (1.0 + 4.0 * y1 * (n as f64 + 1.0)) * a2 + mean_n
}

/// `−10 log10(Δφ_probe / Δφ_baseline)` in dB; positive when the probe is better.
pub fn gain_db(dphi_probe: f64, dphi_baseline: f64) -> Result<f64> {
    if !(dphi_probe > 0.0 && dphi_baseline > 0.0) || !dphi_probe.is_finite() || !dphi_baseline.is_finite() {
        return Err(Error::Domain(format!(
            "gain needs positive finite uncertainties, got {dphi_probe} and {dphi_baseline}"
        )));
    }
    // `+ 0.0` turns a -0 into +0 for equal inputs.
    Ok(-10.0 * (dphi_probe / dphi_baseline).log10() + 0.0)
}

/// Heisenberg and standard quantum limits `(1/N, 1/√N)` for `N = ⟨n⟩ + α²`.
pub fn hl_sql(mean_n_cv: f64, alpha: f64) -> Result<(f64, f64)> {
    let total = mean_n_cv + alpha * alpha;
    if !(mean_n_cv >= 0.0) || !(total > 0.0) {
        return Err(Error::Domain(format!("total photon number must be positive, got {total}")));
    }
    Ok((total.recip(), total.sqrt().recip()))
}
