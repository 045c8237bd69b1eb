use super::bounds::{gain_db, qcr_bound, qfi_product};
use super::schwinger::ProbeSpec;
use crate::error::{Error, Result};
use crate::fock::CutoffPolicy;
use crate::states::{make_smsv, subtracted_closed_form, CoherentSpec, SqueezingSpec, SubtractionSpec};

/// Coarse scan spacing used to bracket a sign change before bisecting.
pub const CROSSING_SCAN_STEP_DB: f64 = 0.25;
pub const CROSSING_TOL_DB: f64 = 1e-4;

/// QCR gain of the `n`-subtracted probe over the SMSV probe at squeezing `s_db`.
pub fn qcr_gain_db_at(s_db: f64, n: usize, alpha: f64, t: f64, policy: CutoffPolicy) -> Result<f64> {
    let sq = SqueezingSpec::from_db(s_db)?;
    let sub = SubtractionSpec::new(n, t)?;
    let coh = CoherentSpec::new(alpha);
    let base = qfi_product(&ProbeSpec::new(make_smsv(&sq, policy)?, coh));
    let probe = qfi_product(&ProbeSpec::new(subtracted_closed_form(&sq, &sub, policy)?.state, coh));
    gain_db(qcr_bound(probe)?, qcr_bound(base)?)
}

/// Squeezing `S₂` (dB) in `[lo, hi]` where the subtracted and SMSV QCR bounds
/// cross. The first sign change of the gain on a coarse scan is refined by
/// bisection to [`CROSSING_TOL_DB`].
pub fn find_crossing_s2(n: usize, alpha: f64, t: f64, lo: f64, hi: f64, policy: CutoffPolicy) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::InvalidParameter(format!("empty squeezing range [{lo}, {hi}]")));
    }
    let gain = |s: f64| qcr_gain_db_at(s, n, alpha, t, policy);
    let steps = ((hi - lo) / CROSSING_SCAN_STEP_DB).ceil() as usize;
    let mut a = lo;
    let mut ga = gain(a)?;
    for i in 1..=steps {
        let b = (lo + i as f64 * CROSSING_SCAN_STEP_DB).min(hi);
        let gb = gain(b)?;
        if ga == 0.0 {
            return Ok(a);
        }
        if ga.signum() != gb.signum() {
            return bisect(gain, a, b, ga);
        }
        a = b;
        ga = gb;
    }
    Err(Error::NoCrossing { lo, hi })
}

fn bisect(f: impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, mut fa: f64) -> Result<f64> {
    while b - a > CROSSING_TOL_DB {
        let mid = 0.5 * (a + b);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
