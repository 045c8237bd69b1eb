//! Input states of the interferometer.
//!
//! The SMSV is expanded as
//! `c_{2k} = y^k √((2k)!) / (k! √cosh s)` with `y = tanh(s)/2`. Photon
//! subtraction sends it through a beam splitter of amplitude transmissivity
//! `t` and keeps the branch where a number-resolving detector on the
//! reflected arm clicks `n` times. Two routes are provided:
//!
//! - [`bs_split_condition`] scatters an arbitrary [`FockState`] through the
//!   two-mode beam-splitter map and projects the reflected mode. It is slow
//!   and generic, and serves as the oracle.
//! - [`subtracted_closed_form`] writes the conditioned state directly in terms
//!   of `y1 = y·t²`:
//!   `c_m ∝ y1^{m/2} (m+n)! / (((m+n)/2)! √(m! n!))`, `m ≡ n (mod 2)`.
//!
//! The beam splitter maps `|k⟩|0⟩ → Σ_j √C(k,j) t^{k-j} (-r)^j |k-j⟩|j⟩`.
//! The sign on the reflected branch only moves a global phase.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{ln_family_amplitude, normalize, tail_threshold, CutoffPolicy, FockState, CUTOFF_MARGIN};
use crate::special::{ln_binomial, ln_factorial, log_sum_exp};

/// dB per neper of amplitude squeezing: `S = 20 s / ln 10`.
pub const DB_PER_S: f64 = 20.0 / std::f64::consts::LN_10;

/// Probability below which a conditioning outcome is treated as impossible.
pub const NEGLIGIBLE_PROBABILITY: f64 = 1e-300;

/// The squeezing amplitude `s`, its dB value and the series parameter `y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezingSpec {
    s: f64,
    s_db: f64,
    y: f64,
}

impl SqueezingSpec {
    pub fn from_s(s: f64) -> Result<Self> {
        if !(s >= 0.0) {
            return Err(Error::InvalidParameter(format!("squeezing amplitude must be >= 0, got {s}")));
        }
        let y = 0.5 * s.tanh();
        if y >= 0.5 {
            return Err(Error::DivergentSqueezing(y));
        }
        Ok(SqueezingSpec { s, s_db: s * DB_PER_S, y })
    }

    pub fn from_db(s_db: f64) -> Result<Self> {
        if !(s_db >= 0.0) {
            return Err(Error::InvalidParameter(format!("squeezing in dB must be >= 0, got {s_db}")));
        }
        let mut spec = Self::from_s(s_db / DB_PER_S)?;
        spec.s_db = s_db;
        Ok(spec)
    }

    pub fn from_y(y: f64) -> Result<Self> {
        if y >= 0.5 {
            return Err(Error::DivergentSqueezing(y));
        }
        if !(y >= 0.0) {
            return Err(Error::InvalidParameter(format!("y must be in [0, 0.5), got {y}")));
        }
        let s = (2.0 * y).atanh();
        Ok(SqueezingSpec { s, s_db: s * DB_PER_S, y })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn s_db(&self) -> f64 {
        self.s_db
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// `⟨n⟩ = sinh² s`.
    pub fn mean_photon(&self) -> f64 {
        self.s.sinh().powi(2)
    }

    pub(crate) fn check_finite(&self) -> Result<()> {
        if self.y >= 0.5 {
            Err(Error::DivergentSqueezing(self.y))
        } else {
            Ok(())
        }
    }
}

/// Coherent state `|iα⟩` with real `α ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherentSpec {
    pub alpha: f64,
}

impl CoherentSpec {
    pub fn new(alpha: f64) -> Self {
        CoherentSpec { alpha }
    }

    /// The eigenvalue `iα` of the annihilation operator.
    pub fn amplitude(&self) -> Complex64 {
        Complex64::new(0.0, self.alpha)
    }

    pub fn mean_photon(&self) -> f64 {
        self.alpha * self.alpha
    }
}

/// `⟨a†^p a^q⟩ = conj(iα)^p (iα)^q`, exact.
pub fn coherent_moment(spec: &CoherentSpec, p: usize, q: usize) -> Complex64 {
    let beta = spec.amplitude();
    beta.conj().powu(p as u32) * beta.powu(q as u32)
}

/// Number of detected photons and the beam splitter's amplitude transmissivity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubtractionSpec {
    pub n: usize,
    pub t: f64,
}

impl SubtractionSpec {
    pub fn new(n: usize, t: f64) -> Result<Self> {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::InvalidParameter(format!("transmissivity must be in (0, 1], got {t}")));
        }
        Ok(SubtractionSpec { n, t })
    }

    /// Reflectivity `√(1 - t²)`.
    pub fn r(&self) -> f64 {
        (1.0 - self.t * self.t).max(0.0).sqrt()
    }

    pub fn y1(&self, sq: &SqueezingSpec) -> f64 {
        sq.y() * self.t * self.t
    }
}

/// A state conditioned on a detector outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct SubtractedState {
    pub state: FockState,
    pub success_probability: f64,
    pub subtraction: SubtractionSpec,
    /// Present when the input was an SMSV built from this spec.
    pub squeezing: Option<SqueezingSpec>,
}

pub fn make_smsv(spec: &SqueezingSpec, policy: CutoffPolicy) -> Result<FockState> {
    let cutoff = policy.resolve(spec, 0)?;
    let mut amps = vec![Complex64::default(); cutoff + 1];
    if spec.y() == 0.0 {
        amps[0] = Complex64::new(1.0, 0.0);
        return normalize(&amps);
    }
    let ln_pref = -0.5 * spec.s().cosh().ln();
    let ln_y = spec.y().ln();
    for k in 0..=cutoff / 2 {
        let k64 = k as u64;
        let ln_c = ln_pref + k as f64 * ln_y + 0.5 * ln_factorial(2 * k64) - ln_factorial(k64);
        amps[2 * k] = Complex64::new(ln_c.exp(), 0.0);
    }
    normalize(&amps)
}

/// Full two-mode output of the beam splitter for `input ⊗ |0⟩`.
///
/// Entry `[j][m]` is the amplitude of `|m⟩₁|j⟩₂`.
pub fn beam_split(input: &FockState, t: f64) -> Result<Vec<Vec<Complex64>>> {
    let sub = SubtractionSpec::new(0, t)?;
    let r = sub.r();
    let cutoff = input.cutoff();
    let mut out = vec![vec![Complex64::default(); cutoff + 1]; cutoff + 1];
    for (k, &c_k) in input.amplitudes().iter().enumerate() {
        if c_k == Complex64::default() {
            continue;
        }
        for j in 0..=k {
            let transmitted = k - j;
            let ln_mag = if j == 0 {
                transmitted as f64 * t.ln()
            } else if r == 0.0 {
                continue;
            } else {
                0.5 * ln_binomial(k as u64, j as u64) + transmitted as f64 * t.ln() + j as f64 * r.ln()
            };
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            out[j][transmitted] += c_k * (sign * ln_mag.exp());
        }
    }
    Ok(out)
}

/// Outcome probabilities `P(n)` of the detector on the reflected arm, `n = 0..=cutoff`.
pub fn detection_distribution(input: &FockState, t: f64) -> Result<Vec<f64>> {
    Ok(beam_split(input, t)?
        .iter()
        .map(|row| row.iter().map(|c| c.norm_sqr()).sum())
        .collect())
}

/// Beam-splitter scattering followed by projection of the reflected mode on `|n_detect⟩`.
pub fn bs_split_condition(input: &FockState, t: f64, n_detect: usize) -> Result<SubtractedState> {
    let subtraction = SubtractionSpec::new(n_detect, t)?;
    if n_detect > input.cutoff() {
        return Err(Error::NegligibleBranch(0.0));
    }
    let mut split = beam_split(input, t)?;
    let branch = split.swap_remove(n_detect);
    let probability: f64 = branch.iter().map(|c| c.norm_sqr()).sum();
    if !(probability >= NEGLIGIBLE_PROBABILITY) {
        return Err(Error::NegligibleBranch(probability));
    }
    Ok(SubtractedState { state: normalize(&branch)?, success_probability: probability, subtraction, squeezing: None })
}

/// Photon-subtracted SMSV from the closed form in `y1 = y·t²`.
///
/// With [`CutoffPolicy::Auto`] the cutoff follows the conditioned state's own
/// tail. When `y = 0` (or `t = 1` with `n ≥ 1`) the outcome has zero
/// probability and the returned state is the `y1 → 0` limit `|n mod 2⟩`.
pub fn subtracted_closed_form(
    sq: &SqueezingSpec,
    sub: &SubtractionSpec,
    policy: CutoffPolicy,
) -> Result<SubtractedState> {
    sq.check_finite()?;
    let n = sub.n;
    let y1 = sub.y1(sq);
    let cutoff = match policy {
        CutoffPolicy::Auto { tail_tol } => {
            let m = tail_threshold(y1, n, tail_tol)? + CUTOFF_MARGIN;
            m + m % 2
        }
        CutoffPolicy::Fixed(m) => m,
    };
    let parity = n % 2;
    if cutoff < parity {
        return Err(Error::ZeroState);
    }
    let mut amps = vec![Complex64::default(); cutoff + 1];
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let ln_probability;
    if y1 == 0.0 {
        amps[parity] = Complex64::new(sign, 0.0);
        ln_probability = if n == 0 { 0.0 } else { f64::NEG_INFINITY };
    } else {
        let ln_u: Vec<f64> = (parity..=cutoff).step_by(2).map(|m| ln_family_amplitude(y1, n, m)).collect();
        let peak = ln_u.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        for (i, &l) in ln_u.iter().enumerate() {
            amps[parity + 2 * i] = Complex64::new(sign * (l - peak).exp(), 0.0);
        }
        let ln_norm = log_sum_exp(ln_u.iter().map(|l| 2.0 * l));
        let ln_pref = if n == 0 {
            0.0
        } else {
            let r = sub.r();
            if r == 0.0 {
                f64::NEG_INFINITY
            } else {
                n as f64 * (2.0 * r.ln() + sq.y().ln())
            }
        };
        ln_probability = ln_pref - sq.s().cosh().ln() + ln_norm;
    }
    Ok(SubtractedState {
        state: normalize(&amps)?,
        success_probability: ln_probability.exp().min(1.0),
        subtraction: *sub,
        squeezing: Some(*sq),
    })
}

/// `aⁿ|ψ⟩`, renormalized.
pub fn pure_annihilation(input: &FockState, n: usize) -> Result<FockState> {
    let cutoff = input.cutoff();
    if n > cutoff {
        return Err(Error::ZeroState);
    }
    let amps: Vec<Complex64> = (0..=cutoff - n)
        .map(|m| {
            let ln_factor = 0.5 * (ln_factorial((m + n) as u64) - ln_factorial(m as u64));
            input.amplitude(m + n) * ln_factor.exp()
        })
        .collect();
    normalize(&amps)
}
