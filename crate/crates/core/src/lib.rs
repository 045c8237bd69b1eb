//! # mzgain
//!
//! Phase-sensitivity numerics for a Mach-Zehnder interferometer probed by a
//! single-mode squeezed vacuum (SMSV), optionally with `n` photons removed by
//! a beam splitter and a photon-number-resolving detector, in one port and a
//! coherent state `|iα⟩` in the other.
//!
//! The crate is layered bottom-up:
//!
//! - [`fock`]: truncated single-mode Fock states, moments `⟨a†^p a^q⟩`,
//!   parity and the cutoff policy.
//! - [`states`]: squeezing parameters, the SMSV, coherent eigen-moments and
//!   the photon-subtracted states (exact beam-splitter oracle plus a closed
//!   form parameterized by `y1 = y·t²`).
//! - [`metrology`]: Schwinger-operator moments of the product probe, quantum
//!   Fisher information, Cramér–Rao bounds, gain in dB, HL/SQL references,
//!   intensity-difference error propagation and the `S₂` crossing finder.
//! - [`sweep`]: run configurations, presets, parallel grid evaluation and
//!   CSV/JSON emission. The `mzgain` binary is a thin front end over it.
//!
//! ```
//! use mzgain::prelude::*;
//!
//! let sq = SqueezingSpec::from_db(1.53).unwrap();
//! let coh = CoherentSpec::new(100.0);
//! let sub = SubtractionSpec::new(4, 0.99).unwrap();
//! let policy = CutoffPolicy::default();
//!
//! let base = ProbeSpec::new(make_smsv(&sq, policy).unwrap(), coh);
//! let probe = ProbeSpec::new(subtracted_closed_form(&sq, &sub, policy).unwrap().state, coh);
//! let phi = std::f64::consts::FRAC_PI_2;
//! let g = gain_db(
//!     phase_uncertainty_intensity(&probe, phi).unwrap(),
//!     phase_uncertainty_intensity(&base, phi).unwrap(),
//! ).unwrap();
//! assert!((g - 1.35).abs() < 0.15);
//! ```

#![forbid(unsafe_code)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fock;
pub mod metrology;
pub mod special;
pub mod states;
pub mod sweep;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::fock::{choose_cutoff, normalize, CutoffPolicy, FockState, Parity, DEFAULT_TAIL_TOL};
    pub use crate::metrology::{
        evaluate_baseline, evaluate_point, find_crossing_s2, gain_db, hl_sql, mz_jz_stats, phase_uncertainty_intensity,
        qcr_bound, qfi_closed_subtracted, qfi_product, schwinger_moments, ProbeSpec,
        SchwingerMoments, SensitivityReport,
    };
    pub use crate::states::{
        bs_split_condition, coherent_moment, detection_distribution, make_smsv, pure_annihilation,
        subtracted_closed_form, CoherentSpec, SqueezingSpec, SubtractedState, SubtractionSpec,
    };
}
