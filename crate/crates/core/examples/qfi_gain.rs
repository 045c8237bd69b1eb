//! Quantum Fisher information and QCR gain of subtracted probes over the SMSV.

use std::f64::consts::FRAC_PI_2;

use mzgain::prelude::*;

fn main() -> mzgain::Result<()> {
    let (alpha, t) = (1.0, 0.9);
    let ns = [2, 10, 40, 100];
    print!("S_dB ");
    for n in ns {
        print!("  g_{n:<4}");
    }
    println!("  dphi_smsv  hl(n=100)");
    for i in 1..=12 {
        let s_db = i as f64;
        let sq = SqueezingSpec::from_db(s_db)?;
        let base = evaluate_baseline(&sq, alpha, FRAC_PI_2, CutoffPolicy::default())?;
        print!("{s_db:>4} ");
        let mut hl = 0.0;
        for n in ns {
            let p = evaluate_point(&SubtractionSpec::new(n, t)?, &base, CutoffPolicy::default())?;
            print!("  {:>6.3}", p.report.g_qcr_db);
            hl = p.report.hl;
        }
        println!("  {:.4e}  {:.4e}", base.dphi_qcr, hl);
    }
    Ok(())
}
