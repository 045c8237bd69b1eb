use std::f64::consts::FRAC_PI_2;

use super::config::{step_range as range, Format, Mode, SweepConfig};
use crate::fock::DEFAULT_TAIL_TOL;

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub config: SweepConfig,
}


fn config(mode: Mode, s_db: Vec<f64>, n: &[usize], alpha: &[f64], t: &[f64]) -> SweepConfig {
    SweepConfig {
        mode,
        s_db,
        n: n.to_vec(),
        alpha: alpha.to_vec(),
        t: t.to_vec(),
        phi: FRAC_PI_2,
        tail_tol: DEFAULT_TAIL_TOL,
        output: None,
        format: Format::Csv,
    }
}

/// Photon numbers for the QCR figures; `n = 80` carries the HL/SQL reference curves.
const FIG2_N: [usize; 9] = [1, 2, 3, 4, 6, 10, 20, 40, 80];
const FIG3_N: [usize; 10] = [1, 2, 4, 6, 10, 20, 40, 80, 100, 120];
const FIG4_N: [usize; 4] = [2, 3, 4, 6];

pub fn presets() -> Vec<Preset> {
    let s_fig = || range(0.0, 0.1, 20.0);
    let mut out = Vec::new();
    for (name, t, alpha, description) in [
        ("fig2a", 0.9, 1.0, "QCR bound vs S, t = 0.9, alpha = 1"),
        ("fig2b", 0.99, 1.0, "QCR bound vs S, t = 0.99, alpha = 1"),
        ("fig2c", 0.9, 100.0, "QCR bound vs S, t = 0.9, alpha = 100"),
        ("fig2d", 0.99, 100.0, "QCR bound vs S, t = 0.99, alpha = 100"),
    ] {
        out.push(Preset { name, description, config: config(Mode::QcrVsS, s_fig(), &FIG2_N, &[alpha], &[t]) });
    }
    for (name, t, alpha, description) in [
        ("fig3-t0.9-alpha1", 0.9, 1.0, "QCR gain vs S, t = 0.9, alpha = 1"),
        ("fig3-t0.99-alpha1", 0.99, 1.0, "QCR gain vs S, t = 0.99, alpha = 1"),
        ("fig3-t0.9-alpha100", 0.9, 100.0, "QCR gain vs S, t = 0.9, alpha = 100"),
        ("fig3-t0.99-alpha100", 0.99, 100.0, "QCR gain vs S, t = 0.99, alpha = 100"),
    ] {
        out.push(Preset { name, description, config: config(Mode::GainVsS, s_fig(), &FIG3_N, &[alpha], &[t]) });
    }
    out.push(Preset {
        name: "fig4",
        description: "intensity-difference uncertainty at phi = pi/2, alpha in {1, 100}, t in {0.9, 0.99}",
        config: config(Mode::IntensityDphiVsS, range(0.0, 0.05, 20.0), &FIG4_N, &[1.0, 100.0], &[0.9, 0.99]),
    });
    out.push(Preset {
        name: "headline",
        description: "intensity-difference gains at (n = 4, S = 1.53 dB) and (n = 6, S = 1.02 dB), alpha = 100",
        config: config(Mode::IntensityDphiVsS, vec![1.02, 1.53], &[4, 6], &[100.0], &[0.9, 0.99]),
    });
    out.push(Preset {
        name: "s2-crossing",
        description: "squeezing S2 where subtracted and SMSV QCR bounds cross",
        config: config(Mode::CrossingS2, vec![5.0, 40.0], &[2, 3, 4, 6, 8, 10], &[1.0, 100.0], &[0.9, 0.99]),
    });
    out.push(Preset {
        name: "single-point",
        description: "coherent light only: S = 0, n = 0, alpha = 1",
        config: config(Mode::SinglePoint, vec![0.0], &[0], &[1.0], &[1.0]),
    });
    out
}

pub fn preset(name: &str) -> Option<SweepConfig> {
    presets().into_iter().find(|p| p.name == name).map(|p| p.config)
}
