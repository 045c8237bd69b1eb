use super::schwinger::{schwinger_moments, Axis, ProbeSpec, SchwingerMoments};
use crate::error::{Error, Result};

/// Slopes `|sin φ ⟨J_z⟩|` below this are a blind working point.
pub const SLOPE_EPS: f64 = 1e-12;

fn output_stats(m: &SchwingerMoments, phi: f64) -> (f64, f64) {
    let (s, c) = phi.sin_cos();
    let mean = c * m.mean(Axis::Z) - s * m.mean(Axis::X);
    let var = c * c * m.var(Axis::Z) + s * s * m.var(Axis::X) - 2.0 * s * c * m.cov(Axis::Z, Axis::X);
    (mean, var)
}

/// Mean and variance of `J_z` at the interferometer output.
pub fn mz_jz_stats(probe: &ProbeSpec, phi: f64) -> (f64, f64) {
    output_stats(&schwinger_moments(probe), phi)
}

/// Error-propagation uncertainty of an intensity-difference measurement,
/// `ΔJ_z^out / (|sin φ| |⟨J_z⟩|)` with the input-state `⟨J_z⟩`.
pub fn phase_uncertainty_intensity(probe: &ProbeSpec, phi: f64) -> Result<f64> {
    let m = schwinger_moments(probe);
    let slope = phi.sin().abs() * m.mean(Axis::Z).abs();
    if !(slope >= SLOPE_EPS) {
        return Err(Error::UndefinedSlope(slope));
    }
    let (_, var) = output_stats(&m, phi);
    Ok(var.max(0.0).sqrt() / slope)
}
