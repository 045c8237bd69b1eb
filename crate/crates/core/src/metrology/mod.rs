//! Phase sensitivity of the product probe `|ψ⟩₁ ⊗ |iα⟩₂`.
//!
//! Every two-mode expectation is reduced, by normal ordering, to products of
//! single-mode moments: `⟨a†^p a^q⟩` from the truncated Fock state and the
//! exact coherent eigen-moments for mode 2. No joint state is ever built, so
//! `α = 100` costs the same as `α = 1`.
//!
//! The interferometer is `50:50 · phase φ · 50:50`, which acts on the
//! Schwinger operators as `J_z → cos φ J_z − sin φ J_x`. With the coherent
//! input at phase `i`, the quadrature read out at `φ = π/2` is the squeezed
//! one.

mod algebra;
mod bounds;
mod crossing;
mod intensity;
mod report;
mod schwinger;

pub use bounds::{gain_db, hl_sql, qcr_bound, qfi_closed_subtracted, qfi_product};
pub use crossing::{find_crossing_s2, qcr_gain_db_at, CROSSING_SCAN_STEP_DB, CROSSING_TOL_DB};
pub use intensity::{mz_jz_stats, phase_uncertainty_intensity, SLOPE_EPS};
pub use report::{evaluate_baseline, evaluate_point, Baseline, PointReport, SensitivityReport};
pub use schwinger::{schwinger_moments, Axis, ProbeSpec, SchwingerMoments};
