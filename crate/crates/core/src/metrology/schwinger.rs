use std::collections::HashMap;

use num_complex::Complex64;

use super::algebra::NormalPoly;
use crate::fock::FockState;
use crate::states::{coherent_moment, CoherentSpec};

/// `cv_state` in mode 1, `|iα⟩` in mode 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeSpec {
    pub cv_state: FockState,
    pub coherent: CoherentSpec,
}

impl ProbeSpec {
    pub fn new(cv_state: FockState, coherent: CoherentSpec) -> Self {
        ProbeSpec { cv_state, coherent }
    }

    /// `⟨n₁⟩ + α²`.
    pub fn total_mean_photon(&self) -> f64 {
        self.cv_state.mean_photon() + self.coherent.mean_photon()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

/// First moments and symmetrized second moments `⟨{J_i, J_j}⟩/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwingerMoments {
    pub mean: [f64; 3],
    pub second: [[f64; 3]; 3],
    /// Largest imaginary part discarded when storing the moments.
    pub imag_residue: f64,
}

impl SchwingerMoments {
    pub fn mean(&self, i: Axis) -> f64 {
        self.mean[i as usize]
    }

    pub fn var(&self, i: Axis) -> f64 {
        self.cov(i, i)
    }

    /// Symmetrized covariance `⟨{J_i, J_j}⟩/2 − ⟨J_i⟩⟨J_j⟩`.
    pub fn cov(&self, i: Axis, j: Axis) -> f64 {
        self.second[i as usize][j as usize] - self.mean(i) * self.mean(j)
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn generators() -> [NormalPoly; 3] {
    // keys: [a† power, a power, b† power, b power]
    let adag_b = [1, 0, 0, 1];
    let a_bdag = [0, 1, 1, 0];
    let jx = NormalPoly::monomial(c(0.5, 0.0), adag_b) + NormalPoly::monomial(c(0.5, 0.0), a_bdag);
    let jy = NormalPoly::monomial(c(0.0, -0.5), adag_b) + NormalPoly::monomial(c(0.0, 0.5), a_bdag);
    let jz = NormalPoly::monomial(c(0.5, 0.0), [1, 1, 0, 0]) + NormalPoly::monomial(c(-0.5, 0.0), [0, 0, 1, 1]);
    [jx, jy, jz]
}

pub fn schwinger_moments(probe: &ProbeSpec) -> SchwingerMoments {
    let mut cache: HashMap<(usize, usize), Complex64> = HashMap::new();
    let mut mode_a = |p: usize, q: usize| *cache.entry((p, q)).or_insert_with(|| probe.cv_state.mode_moment(p, q));
    let coherent = probe.coherent;
    let mode_b = |p: usize, q: usize| coherent_moment(&coherent, p, q);

    let gens = generators();
    let mut imag_residue: f64 = 0.0;
    let mut real = |z: Complex64| {
        imag_residue = imag_residue.max(z.im.abs());
        z.re
    };

    let mut mean = [0.0; 3];
    for (i, g) in gens.iter().enumerate() {
        mean[i] = real(g.expect(&mut mode_a, mode_b));
    }
    let mut second = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in i..3 {
            let sym = (&gens[i] * &gens[j] + &gens[j] * &gens[i]).scale(c(0.5, 0.0));
            let v = real(sym.expect(&mut mode_a, mode_b));
            second[i][j] = v;
            second[j][i] = v;
        }
    }
    SchwingerMoments { mean, second, imag_residue }
}
