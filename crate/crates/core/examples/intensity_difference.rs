//! Intensity-difference readout at phi = pi/2 and the low-squeezing gains at alpha = 100.

use std::f64::consts::FRAC_PI_2;

use mzgain::prelude::*;

fn main() -> mzgain::Result<()> {
    let alpha = 100.0;
    for (n, s_db) in [(4, 1.53), (6, 1.02)] {
        let sq = SqueezingSpec::from_db(s_db)?;
        let base = evaluate_baseline(&sq, alpha, FRAC_PI_2, CutoffPolicy::default())?;
        for t in [0.9, 0.99] {
            let p = evaluate_point(&SubtractionSpec::new(n, t)?, &base, CutoffPolicy::default())?;
            println!(
                "n = {n}, S = {s_db} dB, t = {t}: dphi = {:.6e} vs {:.6e}, g = {:.3} dB",
                p.report.dphi_intensity.unwrap_or(f64::NAN),
                base.dphi_intensity.unwrap_or(f64::NAN),
                p.report.g_intensity_db.unwrap_or(f64::NAN)
            );
        }
    }

    // Phase dependence of the readout for one probe.
    let sq = SqueezingSpec::from_db(3.0)?;
    let state = subtracted_closed_form(&sq, &SubtractionSpec::new(2, 0.9)?, CutoffPolicy::default())?.state;
    let probe = ProbeSpec::new(state, CoherentSpec::new(2.0));
    println!("\nphi      <J_z>      Var J_z    dphi");
    for k in 1..=8 {
        let phi = k as f64 * FRAC_PI_2 / 4.0;
        let (m, v) = mz_jz_stats(&probe, phi);
        let d = phase_uncertainty_intensity(&probe, phi).map_or("blind".to_string(), |d| format!("{d:.5}"));
        println!("{phi:.4}  {m:>9.5}  {v:>9.5}  {d}");
    }
    Ok(())
}
