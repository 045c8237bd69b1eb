//! Joint two-mode reference computations.
//!
//! The product state `|ψ⟩ ⊗ |β⟩` is laid out in blocks of fixed total photon
//! number `N`, where the Schwinger operators act exactly. Nothing here goes
//! through normal ordering or single-mode moments.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;

use mzgain::fock::FockState;

pub struct JointState {
    /// `blocks[N][k]` is the amplitude of `|k⟩₁|N−k⟩₂`.
    blocks: Vec<Vec<Complex64>>,
}

pub struct BlockOps {
    pub jx: DMatrix<Complex64>,
    pub jy: DMatrix<Complex64>,
    pub jz: DMatrix<Complex64>,
}

fn block_ops(total: usize) -> BlockOps {
    let dim = total + 1;
    let mut raise = DMatrix::<Complex64>::zeros(dim, dim); // a†b
    for k in 0..total {
        let v = (((k + 1) * (total - k)) as f64).sqrt();
        raise[(k + 1, k)] = Complex64::new(v, 0.0);
    }
    let lower = raise.adjoint(); // ab†
    let half = Complex64::new(0.5, 0.0);
    let jx = (&raise + &lower) * half;
    let jy = (&raise - &lower) * Complex64::new(0.0, -0.5);
    let jz = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            Complex64::new(i as f64 - (total - i) as f64, 0.0) * half
        } else {
            Complex64::default()
        }
    });
    BlockOps { jx, jy, jz }
}

impl JointState {
    pub fn product(cv: &FockState, coherent: &FockState) -> Self {
        let (m1, m2) = (cv.cutoff(), coherent.cutoff());
        let blocks = (0..=m1 + m2)
            .map(|total| (0..=total).map(|k| cv.amplitude(k) * coherent.amplitude(total - k)).collect())
            .collect();
        JointState { blocks }
    }

    fn vectors(&self) -> impl Iterator<Item = (usize, nalgebra::DVector<Complex64>)> + '_ {
        self.blocks.iter().enumerate().map(|(n, b)| (n, nalgebra::DVector::from_column_slice(b)))
    }

    /// `(⟨O⟩, ⟨O²⟩)` for `O` picked from each block's operators.
    pub fn moments(&self, pick: impl Fn(&BlockOps) -> &DMatrix<Complex64>) -> (f64, f64) {
        let (mut first, mut second) = (0.0, 0.0);
        for (total, v) in self.vectors() {
            let ops = block_ops(total);
            let ov = pick(&ops) * &v;
            first += v.dotc(&ov).re;
            second += ov.dotc(&ov).re;
        }
        (first, second)
    }

    /// Mean and variance of `J_z` after the interferometer `exp(−iφ J_y)`.
    pub fn mz_output_jz(&self, phi: f64) -> (f64, f64) {
        let (mut first, mut second) = (0.0, 0.0);
        for (total, v) in self.vectors() {
            let ops = block_ops(total);
            let u = (&ops.jy * Complex64::new(0.0, -phi)).exp();
            let out = u * &v;
            let zv = &ops.jz * &out;
            first += out.dotc(&zv).re;
            second += zv.dotc(&zv).re;
        }
        (first, second - first * first)
    }

    pub fn qfi(&self) -> f64 {
        let (m, s) = self.moments(|o| &o.jy);
        4.0 * (s - m * m)
    }
}

/// Truncated `|iα⟩`.
pub fn coherent_fock(alpha: f64) -> FockState {
    FockState::coherent(Complex64::new(0.0, alpha), 1e-16).unwrap()
}
