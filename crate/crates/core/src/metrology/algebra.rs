//! Normal-ordered two-mode polynomials.
//!
//! A monomial `a†^p1 a^q1 b†^p2 b^q2` is keyed by `[p1, q1, p2, q2]`. The
//! modes commute, so products reorder each mode independently with
//! `a^q a†^p = Σ_k C(q,k) C(p,k) k! a†^(p-k) a^(q-k)`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

pub(crate) type Key = [usize; 4];

#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct NormalPoly {
    terms: BTreeMap<Key, Complex64>,
}

impl NormalPoly {
    pub fn monomial(coef: Complex64, key: Key) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, coef);
        NormalPoly { terms }
    }

    pub fn scale(mut self, k: Complex64) -> Self {
        for v in self.terms.values_mut() {
            *v *= k;
        }
        self
    }

    fn add_term(&mut self, key: Key, coef: Complex64) {
        let entry = self.terms.entry(key).or_default();
        *entry += coef;
        if *entry == Complex64::default() {
            self.terms.remove(&key);
        }
    }

    /// Expectation value given per-mode moment functions `⟨a†^p a^q⟩`, `⟨b†^p b^q⟩`.
    pub fn expect(
        &self,
        mut mode_a: impl FnMut(usize, usize) -> Complex64,
        mut mode_b: impl FnMut(usize, usize) -> Complex64,
    ) -> Complex64 {
        self.terms
            .iter()
            .map(|(&[p1, q1, p2, q2], &c)| c * mode_a(p1, q1) * mode_b(p2, q2))
            .sum()
    }
}

/// `(a†^p1 a^q1)(a†^p2 a^q2)` as `(coefficient, p, q)` terms.
fn single_mode_product(p1: usize, q1: usize, p2: usize, q2: usize) -> Vec<(f64, usize, usize)> {
    (0..=q1.min(p2))
        .map(|k| {
            let coef = binomial(q1, k) * binomial(p2, k) * factorial(k);
            (coef, p1 + p2 - k, q1 + q2 - k)
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

impl Add for NormalPoly {
    type Output = NormalPoly;
    fn add(mut self, rhs: NormalPoly) -> NormalPoly {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
        self
    }
}

impl Sub for NormalPoly {
    type Output = NormalPoly;
    fn sub(self, rhs: NormalPoly) -> NormalPoly {
        self + rhs.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &NormalPoly {
    type Output = NormalPoly;
    fn mul(self, rhs: &NormalPoly) -> NormalPoly {
        let mut out = NormalPoly::default();
        for (&[ap1, aq1, bp1, bq1], &c1) in &self.terms {
            for (&[ap2, aq2, bp2, bq2], &c2) in &rhs.terms {
                for (ca, p, q) in single_mode_product(ap1, aq1, ap2, aq2) {
                    for (cb, r, s) in single_mode_product(bp1, bq1, bp2, bq2) {
                        out.add_term([p, q, r, s], c1 * c2 * (ca * cb));
                    }
                }
            }
        }
        out
    }
}
