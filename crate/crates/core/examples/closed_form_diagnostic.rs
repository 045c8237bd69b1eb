//! Relative deviation of the closed-form QFI expression from the computed QFI.

use std::f64::consts::FRAC_PI_2;

use mzgain::prelude::*;

fn main() -> mzgain::Result<()> {
    let alpha = 1.0;
    println!("   y     t     n   F_numeric     F_closed      rel dev");
    for y in [0.05, 0.2, 0.4] {
        let sq = SqueezingSpec::from_y(y)?;
        let base = evaluate_baseline(&sq, alpha, FRAC_PI_2, CutoffPolicy::default())?;
        for t in [0.5, 0.9, 0.99] {
            for n in [0, 1, 2, 4] {
                let p = evaluate_point(&SubtractionSpec::new(n, t)?, &base, CutoffPolicy::default())?;
                println!(
                    "{y:>5} {t:>5} {n:>4}   {:.6e}  {:.6e}  {:.3e}",
                    p.report.fisher, p.fisher_closed, p.closed_rel_dev
                );
            }
        }
    }
    Ok(())
}
