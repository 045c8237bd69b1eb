//! Truncated Fock states: moments, parity and cutoff selection.

use mzgain::prelude::*;
use num_complex::Complex64;

fn main() -> mzgain::Result<()> {
    let cat = FockState::from_real(&[1.0, 0.0, 1.0])?;
    println!("(|0> + |2>)/sqrt2: <n> = {:.3}, Var n = {:.3}, parity {:?}", cat.mean_photon(), cat.photon_variance(), cat.parity(1e-10));
    println!("<a^2> = {:.6}", cat.mode_moment(0, 2));

    let beta = Complex64::new(0.0, 1.5);
    let coherent = FockState::coherent(beta, 1e-14)?;
    println!("|1.5i>: cutoff {}, <a> = {:.6}, <n> = {:.6}", coherent.cutoff(), coherent.mode_moment(0, 1), coherent.mean_photon());

    for s_db in [3.0, 10.0, 20.0] {
        let sq = SqueezingSpec::from_db(s_db)?;
        let m0 = choose_cutoff(&sq, 0, DEFAULT_TAIL_TOL)?;
        let m10 = choose_cutoff(&sq, 10, DEFAULT_TAIL_TOL)?;
        println!("S = {s_db:>4} dB: cutoff {m0} for the SMSV, {m10} when 10 photons are subtracted");
    }
    Ok(())
}
