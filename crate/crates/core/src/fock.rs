//! Truncated single-mode Fock states.
//!
//! A [`FockState`] holds amplitudes `c_0..c_M` over the photon-number basis and
//! is always normalized: the only way to build one is through [`normalize`]
//! (or a constructor that calls it). Everything downstream relies on that.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{ln_factorial, log_add_exp};
use crate::states::SqueezingSpec;

/// Default tail-mass tolerance for cutoff selection.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;
/// Default threshold for [`FockState::parity`].
pub const DEFAULT_PARITY_TOL: f64 = 1e-10;
/// Extra levels added on top of the computed tail threshold.
pub const CUTOFF_MARGIN: usize = 8;

const MAX_CUTOFF: usize = 50_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FockState {
    amps: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// Scale `amps` to unit norm by a single positive real factor.
pub fn normalize(amps: &[Complex64]) -> Result<FockState> {
    let norm_sqr: f64 = amps.iter().map(|c| c.norm_sqr()).sum();
    if !(norm_sqr > 0.0) || !norm_sqr.is_finite() {
        return Err(Error::ZeroState);
    }
    let scale = norm_sqr.sqrt().recip();
    Ok(FockState { amps: amps.iter().map(|c| c * scale).collect() })
}

impl FockState {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        normalize(&amps)
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        let amps: Vec<Complex64> = amps.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        normalize(&amps)
    }

    /// Number state `|n⟩` with cutoff `n`.
    pub fn number(n: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); n + 1];
        amps[n] = Complex64::new(1.0, 0.0);
        FockState { amps }
    }

    pub fn vacuum() -> Self {
        Self::number(0)
    }

    /// Coherent state `|β⟩` truncated once the remaining Poisson mass is below `tail_tol`.
    pub fn coherent(beta: Complex64, tail_tol: f64) -> Result<Self> {
        let mean = beta.norm_sqr();
        if mean == 0.0 {
            return Ok(Self::vacuum());
        }
        let ln_abs = beta.norm().ln();
        let phase = beta / beta.norm();
        let mut amps = Vec::new();
        let mut m: u64 = 0;
        loop {
            let ln_mag = -0.5 * mean + m as f64 * ln_abs - 0.5 * ln_factorial(m);
            let mag = ln_mag.exp();
            amps.push(phase.powu(m as u32) * mag);
            // Past the mean the Poisson ratio mean/(m+1) < 1 keeps shrinking, so
            // the remaining mass is below a geometric series.
            let ratio = mean / (m + 1) as f64;
            if ratio < 1.0 && mag * mag * ratio / (1.0 - ratio) < tail_tol {
                break;
            }
            m += 1;
            if m as usize > MAX_CUTOFF {
                return Err(Error::InvalidParameter(format!("coherent amplitude {beta} too large")));
            }
        }
        normalize(&amps)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Amplitude of `|m⟩`, zero beyond the cutoff.
    pub fn amplitude(&self, m: usize) -> Complex64 {
        self.amps.get(m).copied().unwrap_or_default()
    }

    /// Highest represented photon number `M`.
    pub fn cutoff(&self) -> usize {
        self.amps.len() - 1
    }

    /// Same state on a different cutoff: zero-padded, or truncated and renormalized.
    pub fn with_cutoff(&self, cutoff: usize) -> Result<Self> {
        let mut amps = self.amps.clone();
        amps.resize(cutoff + 1, Complex64::default());
        normalize(&amps)
    }

    /// `⟨a†^p a^q⟩`.
    ///
    /// Terms whose target level `m - q + p` exceeds the cutoff are dropped. The
    /// ladder factors `√(m!/(m-q)!)` are accumulated as sums of logs so nothing
    /// overflows for large `m`.
    pub fn mode_moment(&self, p: usize, q: usize) -> Complex64 {
        let cutoff = self.cutoff();
        let mut acc = Complex64::default();
        for m in q..=cutoff {
            let base = m - q;
            let target = base + p;
            if target > cutoff {
                break;
            }
            let c_m = self.amps[m];
            let c_t = self.amps[target];
            if c_m == Complex64::default() || c_t == Complex64::default() {
                continue;
            }
            let ln_factor = 0.5 * (ln_falling(m, q) + ln_falling(target, p));
            acc += c_t.conj() * c_m * ln_factor.exp();
        }
        acc
    }

    pub fn mean_photon(&self) -> f64 {
        self.mode_moment(1, 1).re
    }

    /// `⟨n²⟩ - ⟨n⟩²`, computed as `⟨a†²a²⟩ + ⟨n⟩ - ⟨n⟩²`.
    pub fn photon_variance(&self) -> f64 {
        let mean = self.mean_photon();
        self.mode_moment(2, 2).re + mean - mean * mean
    }

    pub fn parity(&self, tolerance: f64) -> Parity {
        let (even, odd) = self.amps.iter().enumerate().fold((0.0, 0.0), |(e, o), (m, c)| {
            if m % 2 == 0 {
                (e + c.norm_sqr(), o)
            } else {
                (e, o + c.norm_sqr())
            }
        });
        if odd < tolerance {
            Parity::Even
        } else if even < tolerance {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    /// `|⟨self|other⟩|²`, treating missing levels as zero.
    pub fn fidelity(&self, other: &FockState) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            .norm_sqr()
    }

    /// Debug dump as a JSON array of `[re, im]` pairs.
    pub fn to_json(&self) -> String {
        let pairs: Vec<[f64; 2]> = self.amps.iter().map(|c| [c.re, c.im]).collect();
        serde_json::to_string(&pairs).expect("finite amplitudes serialize")
    }
}

/// `ln(m!/(m-k)!)` as a sum of `ln` terms.
fn ln_falling(m: usize, k: usize) -> f64 {
    ((m - k + 1)..=m).map(|i| (i as f64).ln()).sum()
}

/// Truncation rule shared by every state builder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CutoffPolicy {
    /// Pick the cutoff from the tail bound.
    Auto { tail_tol: f64 },
    /// Use exactly this cutoff.
    Fixed(usize),
}

impl Default for CutoffPolicy {
    fn default() -> Self {
        CutoffPolicy::Auto { tail_tol: DEFAULT_TAIL_TOL }
    }
}

impl CutoffPolicy {
    pub fn auto(tail_tol: f64) -> Self {
        CutoffPolicy::Auto { tail_tol }
    }

    /// Cutoff for an SMSV that will later have `n_subtract` photons removed.
    pub fn resolve(&self, spec: &SqueezingSpec, n_subtract: usize) -> Result<usize> {
        match *self {
            CutoffPolicy::Auto { tail_tol } => choose_cutoff(spec, n_subtract, tail_tol),
            CutoffPolicy::Fixed(m) => {
                spec.check_finite()?;
                Ok(m)
            }
        }
    }
}

/// Even cutoff `M` such that the SMSV tail and the tail of any state
/// conditioned on `n_subtract` detected photons (for any transmissivity) both
/// stay below `tail_tol`.
///
/// The bound is on the `(m+1)²`-weighted tail, which also caps truncation
/// error in first and second photon-number moments.
pub fn choose_cutoff(spec: &SqueezingSpec, n_subtract: usize, tail_tol: f64) -> Result<usize> {
    spec.check_finite()?;
    if !(tail_tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tail_tol must be positive, got {tail_tol}")));
    }
    let smsv = tail_threshold(spec.y(), 0, tail_tol)?;
    // t = 1 has the heaviest conditioned tail; output level m needs input m + n.
    let conditioned = tail_threshold(spec.y(), n_subtract, tail_tol)? + n_subtract;
    let m = smsv.max(conditioned) + CUTOFF_MARGIN;
    Ok(m + m % 2)
}

/// Log of the unnormalized amplitude of level `m` in the photon-subtracted
/// family: `y1^{m/2} (m+n)! / (((m+n)/2)! √(m! n!))`, for `m ≡ n (mod 2)`.
/// `n = 0` is the SMSV itself (up to `1/√cosh s`).
pub(crate) fn ln_family_amplitude(y1: f64, n: usize, m: usize) -> f64 {
    debug_assert_eq!((m + n) % 2, 0);
    let (m64, n64) = (m as u64, n as u64);
    let half = (m64 + n64) / 2;
    let y_term = if m == 0 { 0.0 } else { 0.5 * m as f64 * y1.ln() };
    y_term + ln_factorial(m64 + n64) - ln_factorial(half) - 0.5 * (ln_factorial(m64) + ln_factorial(n64))
}

/// Smallest level `m ≡ n (mod 2)` after which the `(m+1)²`-weighted tail of the
/// normalized family state with parameter `y1` is below `tol`.
///
/// Consecutive squared-amplitude ratios are `4y1² (m+n+1)²/((m+1)(m+2))`,
/// monotone in `m` (decreasing for `n ≥ 1`, increasing to 1 for `n = 0`),
/// so once the weighted ratio drops below one the remainder is bounded by a
/// geometric series.
pub(crate) fn tail_threshold(y1: f64, n: usize, tol: f64) -> Result<usize> {
    let start = n % 2;
    if y1 == 0.0 {
        return Ok(start);
    }
    let q = 4.0 * y1 * y1;
    let mut ln_total = f64::NEG_INFINITY;
    let mut m = start;
    loop {
        let ln_term = 2.0 * ln_family_amplitude(y1, n, m) + 2.0 * ((m + 1) as f64).ln();
        ln_total = log_add_exp(ln_total, ln_term);
        let ratio_poly = ((m + n + 1) as f64).powi(2) / (((m + 1) * (m + 2)) as f64);
        let weight = ((m + 3) as f64 / (m + 1) as f64).powi(2);
        let rho = q * ratio_poly.max(1.0) * weight;
        if rho < 1.0 {
            let ln_tail = ln_term + rho.ln() - (1.0 - rho).ln() - ln_total;
            if ln_tail < tol.ln() {
                return Ok(m);
            }
        }
        m += 2;
        if m > MAX_CUTOFF {
            return Err(Error::InvalidParameter(format!(
                "cutoff exceeds {MAX_CUTOFF} levels (y1 = {y1}, n = {n})"
            )));
        }
    }
}
