//! Squeezing S2 above which subtraction stops paying off.

use mzgain::prelude::*;

fn main() -> mzgain::Result<()> {
    for (t, hi) in [(0.9, 30.0), (0.99, 40.0)] {
        for n in [1, 2, 3, 4, 6, 8, 10] {
            match find_crossing_s2(n, 100.0, t, 5.0, hi, CutoffPolicy::default()) {
                Ok(s2) => println!("t = {t}, n = {n:>2}: S2 = {s2:.3} dB"),
                Err(e) => println!("t = {t}, n = {n:>2}: {e}"),
            }
        }
    }
    Ok(())
}
