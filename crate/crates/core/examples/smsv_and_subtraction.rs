//! Squeezed vacuum through a beam splitter with photon-number-resolved tapping.
//!
//! Compares the closed-form conditioned state with the explicit beam-splitter
//! computation and prints the detection statistics.

use mzgain::prelude::*;

fn main() -> mzgain::Result<()> {
    let sq = SqueezingSpec::from_db(6.0)?;
    let t = 0.9;
    let smsv = make_smsv(&sq, CutoffPolicy::default())?;
    println!("SMSV at {} dB: s = {:.4}, <n> = {:.4} (sinh^2 s = {:.4})", sq.s_db(), sq.s(), smsv.mean_photon(), sq.mean_photon());

    let input = make_smsv(&sq, CutoffPolicy::Fixed(choose_cutoff(&sq, 8, 1e-14)?))?;
    let dist = detection_distribution(&input, t)?;
    println!("\n n   P(n)          <n>_cond   1 - fidelity(closed, beam splitter)");
    for (n, p) in dist.iter().enumerate().take(9) {
        let sub = SubtractionSpec::new(n, t)?;
        let closed = subtracted_closed_form(&sq, &sub, CutoffPolicy::default())?;
        let oracle = bs_split_condition(&input, t, n)?;
        println!(
            "{n:>2}   {:.6e}  {:>8.4}   {:.1e}",
            p,
            closed.state.mean_photon(),
            1.0 - closed.state.fidelity(&oracle.state)
        );
    }

    let near_unity = bs_split_condition(&input, 0.9999, 2)?;
    let ideal = pure_annihilation(&input, 2)?;
    println!("\nt = 0.9999, n = 2: fidelity with a^2|SMSV> = {:.8}", near_unity.state.fidelity(&ideal));
    Ok(())
}
