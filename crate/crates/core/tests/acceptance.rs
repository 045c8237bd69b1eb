//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

mod common;

use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;

use mzgain::fock::{choose_cutoff, CutoffPolicy, FockState, Parity};
use mzgain::metrology::{
    evaluate_baseline, evaluate_point, find_crossing_s2, mz_jz_stats, phase_uncertainty_intensity, qcr_bound,
    qfi_product, Baseline, ProbeSpec,
};
use mzgain::states::{
    bs_split_condition, make_smsv, subtracted_closed_form, CoherentSpec, SqueezingSpec, SubtractionSpec,
};
use mzgain::sweep::{preset, run_sweep_with_threads, to_csv, to_json};

use common::{coherent_fock, JointState};

const BASELINE_QFI_REL_TOL: f64 = 1e-9;
const ORACLE_FIDELITY_TOL: f64 = 1e-10;
const ORACLE_PROB_REL_TOL: f64 = 1e-10;
const COMPLETENESS_TOL: f64 = 1e-9;
const HEADLINE_TOL_DB: f64 = 0.15;
const HEADLINE_G4: (f64, f64) = (1.53, 1.35);
const HEADLINE_G6: (f64, f64) = (1.02, 1.49);
const MAX_GAIN_FLOOR_DB: f64 = 10.0;
const MAX_GAIN_S_DB: f64 = 5.0;
const MAX_GAIN_S_TOL_DB: f64 = 1.0;
const S2_FLOOR_DB: f64 = 15.0;
const INTENSITY_REL_TOL: f64 = 1e-9;
const JOINT_ORACLE_TOL: f64 = 1e-8;
const JOINT_ORACLE_CUTOFF: usize = 40;
const DOUBLING_REL_TOL: f64 = 1e-9;
const SLOPE_REL_TOL: f64 = 1e-6;
const HERMITICITY_TOL: f64 = 1e-12;

const ORACLE_Y: [f64; 3] = [0.05, 0.2, 0.4];
const ORACLE_T: [f64; 3] = [0.5, 0.9, 0.99];
const ORACLE_N_MAX: usize = 10;
const HEADLINE_T: [f64; 2] = [0.9, 0.99];

fn auto() -> CutoffPolicy {
    CutoffPolicy::default()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn s_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(|i| ((lo + i as f64 * step) * 1e9).round() / 1e9).collect()
}

fn intensity_gain(s_db: f64, n: usize, alpha: f64, t: f64) -> Option<f64> {
    let sq = SqueezingSpec::from_db(s_db).ok()?;
    let base = evaluate_baseline(&sq, alpha, FRAC_PI_2, auto()).ok()?;
    let sub = SubtractionSpec::new(n, t).ok()?;
    evaluate_point(&sub, &base, auto()).ok()?.report.g_intensity_db
}

fn qcr_gain(base: &Baseline, n: usize, t: f64) -> f64 {
    let sub = SubtractionSpec::new(n, t).unwrap();
    evaluate_point(&sub, base, auto()).unwrap().report.g_qcr_db
}

fn criterion_1() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in [0.0, 0.5, 1.0, 2.0] {
        let sq = SqueezingSpec::from_s(s).unwrap();
        let cv = make_smsv(&sq, auto()).unwrap();
        for alpha in [1.0, 10.0, 100.0] {
            let probe = ProbeSpec::new(cv.clone(), CoherentSpec::new(alpha));
            let exact = alpha * alpha * (2.0 * s).exp() + s.sinh().powi(2);
            worst = worst.max(rel(qfi_product(&probe), exact));
        }
    }
    Outcome::new(worst <= BASELINE_QFI_REL_TOL, format!("max rel err {worst:.2e} (tol {BASELINE_QFI_REL_TOL:e})"))
}

fn oracle_input(sq: &SqueezingSpec) -> FockState {
    let m = choose_cutoff(sq, ORACLE_N_MAX, 1e-14).unwrap();
    make_smsv(sq, CutoffPolicy::Fixed(m)).unwrap()
}

fn criterion_2() -> Outcome {
    let (mut worst_fid, mut worst_prob, mut worst_n0): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for y in ORACLE_Y {
        let sq = SqueezingSpec::from_y(y).unwrap();
        let input = oracle_input(&sq);
        for t in ORACLE_T {
            for n in 0..=ORACLE_N_MAX {
                let sub = SubtractionSpec::new(n, t).unwrap();
                let closed = subtracted_closed_form(&sq, &sub, auto()).unwrap();
                let oracle = bs_split_condition(&input, t, n).unwrap();
                worst_fid = worst_fid.max(1.0 - closed.state.fidelity(&oracle.state));
                worst_prob = worst_prob.max(rel(closed.success_probability, oracle.success_probability));
            }
            let law = SqueezingSpec::from_y(y * t * t).unwrap();
            let target = make_smsv(&law, auto()).unwrap();
            let n0 = subtracted_closed_form(&sq, &SubtractionSpec::new(0, t).unwrap(), auto()).unwrap();
            let oracle = bs_split_condition(&input, t, 0).unwrap();
            worst_n0 = worst_n0.max(1.0 - target.fidelity(&n0.state)).max(1.0 - target.fidelity(&oracle.state));
        }
    }
    let pass = worst_fid <= ORACLE_FIDELITY_TOL && worst_prob <= ORACLE_PROB_REL_TOL && worst_n0 <= ORACLE_FIDELITY_TOL;
    Outcome::new(
        pass,
        format!("max infidelity {worst_fid:.2e}, max prob rel err {worst_prob:.2e}, n=0 law infidelity {worst_n0:.2e}"),
    )
}

fn criterion_3() -> Outcome {
    let mut worst_sum: f64 = 0.0;
    let mut parity_failures = Vec::new();
    for y in ORACLE_Y {
        let sq = SqueezingSpec::from_y(y).unwrap();
        let input = oracle_input(&sq);
        for t in ORACLE_T {
            let total: f64 = (0..=input.cutoff())
                .map(|n| {
                    let sub = SubtractionSpec::new(n, t).unwrap();
                    subtracted_closed_form(&sq, &sub, auto()).unwrap().success_probability
                })
                .sum();
            worst_sum = worst_sum.max((total - 1.0).abs());
            for n in 0..=ORACLE_N_MAX {
                let want = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
                let sub = SubtractionSpec::new(n, t).unwrap();
                let closed = subtracted_closed_form(&sq, &sub, auto()).unwrap().state.parity(1e-10);
                let oracle = bs_split_condition(&input, t, n).unwrap().state.parity(1e-10);
                if closed != want || oracle != want {
                    parity_failures.push((y, t, n));
                }
            }
        }
    }
    Outcome::new(
        worst_sum <= COMPLETENESS_TOL && parity_failures.is_empty(),
        format!("max |sum P - 1| {worst_sum:.2e}, parity mismatches {parity_failures:?}"),
    )
}

fn criterion_4() -> Outcome {
    let mut matching = Vec::new();
    let mut parts = Vec::new();
    for t in HEADLINE_T {
        let g4 = intensity_gain(HEADLINE_G4.0, 4, 100.0, t).unwrap_or(f64::NAN);
        let g6 = intensity_gain(HEADLINE_G6.0, 6, 100.0, t).unwrap_or(f64::NAN);
        let ok = (g4 - HEADLINE_G4.1).abs() <= HEADLINE_TOL_DB && (g6 - HEADLINE_G6.1).abs() <= HEADLINE_TOL_DB;
        if ok {
            matching.push(t);
        }
        parts.push(format!("t={t}: g4={g4:.4} g6={g6:.4}"));
    }
    Outcome::new(!matching.is_empty(), format!("{}; matching t {matching:?}", parts.join(", ")))
}

fn criterion_5() -> Outcome {
    let t = 0.9;
    let grid = s_grid(0.1, 15.0, 0.1);
    let cases = [(100, 1.0), (120, 1.0), (160, 1.0), (120, 100.0)];
    let mut found = Vec::new();
    let mut parts = Vec::new();
    let baselines: Vec<Vec<Baseline>> = [1.0, 100.0]
        .iter()
        .map(|&a| {
            grid.iter()
                .map(|&s| evaluate_baseline(&SqueezingSpec::from_db(s).unwrap(), a, FRAC_PI_2, auto()).unwrap())
                .collect()
        })
        .collect();
    for (n, alpha) in cases {
        let bases = &baselines[if alpha == 1.0 { 0 } else { 1 }];
        let (s_max, g_max) = grid
            .iter()
            .zip(bases)
            .map(|(&s, b)| (s, qcr_gain(b, n, t)))
            .fold((f64::NAN, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        if g_max > MAX_GAIN_FLOOR_DB && s_max < 10.0 && (s_max - MAX_GAIN_S_DB).abs() <= MAX_GAIN_S_TOL_DB {
            found.push((n, alpha));
        }
        parts.push(format!("n={n} alpha={alpha}: max {g_max:.3} dB at S={s_max:.1}"));
    }
    Outcome::new(!found.is_empty(), format!("{}; satisfying {found:?}", parts.join(", ")))
}

fn criterion_6() -> Outcome {
    let sets: [(f64, &[usize], f64, f64); 2] = [(0.9, &[2, 3, 4, 6], 5.0, 30.0), (0.99, &[2, 3, 4], 10.0, 35.0)];
    let mut pass = true;
    let mut parts = Vec::new();
    for alpha in [1.0, 100.0] {
        for (t, ns, lo, hi) in sets {
            let mut prev = f64::NEG_INFINITY;
            let mut row = Vec::new();
            for &n in ns {
                match find_crossing_s2(n, alpha, t, lo, hi, auto()) {
                    Ok(s2) => {
                        pass &= s2 > S2_FLOOR_DB && s2 >= prev;
                        prev = s2;
                        row.push(format!("n{n}={s2:.2}"));
                    }
                    Err(e) => {
                        pass = false;
                        row.push(format!("n{n}: {e}"));
                    }
                }
            }
            parts.push(format!("alpha={alpha} t={t}: {}", row.join(" ")));
        }
    }
    Outcome::new(pass, parts.join("; "))
}

fn criterion_7() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in [0.1, 0.5, 1.0, 2.0] {
        let sq = SqueezingSpec::from_s(s).unwrap();
        let cv = make_smsv(&sq, auto()).unwrap();
        for alpha in [1.0, 2.0, 10.0, 100.0] {
            let a2 = alpha * alpha;
            let sh2 = s.sinh().powi(2);
            let exact = (a2 * (-2.0 * s).exp() + sh2).sqrt() / (a2 - sh2).abs();
            let probe = ProbeSpec::new(cv.clone(), CoherentSpec::new(alpha));
            worst = worst.max(rel(phase_uncertainty_intensity(&probe, FRAC_PI_2).unwrap(), exact));
        }
    }
    let mut worst_joint: f64 = 0.0;
    for s in [0.2, 0.5] {
        let sq = SqueezingSpec::from_s(s).unwrap();
        let cv = make_smsv(&sq, CutoffPolicy::Fixed(JOINT_ORACLE_CUTOFF)).unwrap();
        for alpha in [0.5, 1.0, 2.0] {
            let joint = JointState::product(&cv, &coherent_fock(alpha));
            let probe = ProbeSpec::new(cv.clone(), CoherentSpec::new(alpha));
            for phi in [0.3, FRAC_PI_2, 2.0] {
                let (m, v) = mz_jz_stats(&probe, phi);
                let (mo, vo) = joint.mz_output_jz(phi);
                worst_joint = worst_joint.max((m - mo).abs()).max((v - vo).abs());
            }
        }
    }
    Outcome::new(
        worst <= INTENSITY_REL_TOL && worst_joint <= JOINT_ORACLE_TOL,
        format!("closed form max rel err {worst:.2e}, joint-state oracle max abs err {worst_joint:.2e}"),
    )
}

/// Maximal sub-intervals of `grid` where `ok` fails, as `(first, last)`.
fn failing_runs(grid: &[f64], ok: impl Fn(f64) -> bool) -> Vec<(f64, f64)> {
    let mut runs: Vec<(f64, f64)> = Vec::new();
    let mut open = false;
    for &s in grid {
        if ok(s) {
            open = false;
        } else if open {
            runs.last_mut().unwrap().1 = s;
        } else {
            runs.push((s, s));
            open = true;
        }
    }
    runs
}

fn criterion_8() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let low = s_grid(0.05, 2.95, 0.05);
    for t in HEADLINE_T {
        for n in [2, 4, 6] {
            let runs = failing_runs(&low, |s| intensity_gain(s, n, 100.0, t).is_some_and(|g| g > 0.0));
            pass &= runs.is_empty();
            if !runs.is_empty() {
                parts.push(format!("alpha=100 t={t} n={n} g<=0 on {runs:?}"));
            }
        }
    }
    let wide = s_grid(0.05, 19.95, 0.05);
    for t in HEADLINE_T {
        for n in [2, 4, 6] {
            let runs = failing_runs(&wide, |s| intensity_gain(s, n, 1.0, t).is_some_and(|g| g > 0.0));
            pass &= runs.is_empty();
            if !runs.is_empty() {
                parts.push(format!("alpha=1 t={t} n={n} g<=0 on {runs:?}"));
            }
        }
    }
    if parts.is_empty() {
        parts.push("g>0 on every grid point".into());
    }
    Outcome::new(pass, parts.join("; "))
}

fn criterion_9() -> Outcome {
    for t in HEADLINE_T {
        for n in [1, 2, 4, 10] {
            for s_db in s_grid(0.5, 20.0, 0.5) {
                let sq = SqueezingSpec::from_db(s_db).unwrap();
                let base = evaluate_baseline(&sq, 1.0, FRAC_PI_2, auto()).unwrap();
                let point = evaluate_point(&SubtractionSpec::new(n, t).unwrap(), &base, auto()).unwrap();
                if point.report.dphi_qcr < point.report.hl {
                    return Outcome::new(
                        true,
                        format!(
                            "t={t} n={n} S={s_db} dB: dphi_qcr {:.4} < hl {:.4}",
                            point.report.dphi_qcr, point.report.hl
                        ),
                    );
                }
            }
        }
    }
    Outcome::new(false, "no grid point below the Heisenberg limit")
}

fn probes() -> Vec<(String, ProbeSpec)> {
    let mut out = Vec::new();
    for s_db in [1.0, 5.0, 10.0] {
        let sq = SqueezingSpec::from_db(s_db).unwrap();
        for (n, t) in [(0, 1.0), (2, 0.9), (3, 0.99), (6, 0.9)] {
            let state = subtracted_closed_form(&sq, &SubtractionSpec::new(n, t).unwrap(), auto()).unwrap().state;
            for alpha in [1.0, 100.0] {
                out.push((format!("S={s_db} n={n} t={t} alpha={alpha}"), ProbeSpec::new(state.clone(), CoherentSpec::new(alpha))));
            }
        }
    }
    out
}

fn criterion_10() -> Outcome {
    let mut failures = Vec::new();

    for (label, probe) in probes() {
        let cv = &probe.cv_state;
        let herm = (0..=4)
            .flat_map(|p| (0..=4).map(move |q| (p, q)))
            .map(|(p, q)| (cv.mode_moment(p, q) - cv.mode_moment(q, p).conj()).norm())
            .fold(0.0, f64::max);
        if herm > HERMITICITY_TOL {
            failures.push(format!("hermiticity {label}: {herm:.1e}"));
        }

        let doubled = ProbeSpec::new(cv.with_cutoff(2 * cv.cutoff()).unwrap(), probe.coherent);
        let pairs = [
            (cv.mean_photon(), doubled.cv_state.mean_photon()),
            (cv.photon_variance(), doubled.cv_state.photon_variance()),
            (qfi_product(&probe), qfi_product(&doubled)),
            (mz_jz_stats(&probe, FRAC_PI_2).1, mz_jz_stats(&doubled, FRAC_PI_2).1),
        ];
        let drift = pairs.iter().map(|&(a, b)| rel(b, a)).fold(0.0, f64::max);
        if drift > DOUBLING_REL_TOL {
            failures.push(format!("cutoff doubling {label}: {drift:.1e}"));
        }

        let (mean_in, _) = mz_jz_stats(&probe, 0.0);
        let h = 1e-5;
        let slope = (mz_jz_stats(&probe, FRAC_PI_2 + h).0 - mz_jz_stats(&probe, FRAC_PI_2 - h).0) / (2.0 * h);
        let err = (slope + mean_in).abs() / mean_in.abs().max(1.0);
        if err > SLOPE_REL_TOL {
            failures.push(format!("slope {label}: {err:.1e}"));
        }
        if qcr_bound(qfi_product(&probe)).is_err() {
            failures.push(format!("qfi {label} not positive"));
        }
    }

    for y in ORACLE_Y {
        let sq = SqueezingSpec::from_y(y).unwrap();
        for t in ORACLE_T {
            let reference = make_smsv(&SqueezingSpec::from_y(y * t * t).unwrap(), auto()).unwrap().mean_photon();
            for n in 1..=ORACLE_N_MAX {
                let m = subtracted_closed_form(&sq, &SubtractionSpec::new(n, t).unwrap(), auto())
                    .unwrap()
                    .state
                    .mean_photon();
                if m <= reference {
                    failures.push(format!("brightness y={y} t={t} n={n}"));
                }
            }
        }
    }

    let config = preset("fig2b").expect("fig2b preset");
    let one = run_sweep_with_threads(&config, Some(1)).unwrap();
    let many = run_sweep_with_threads(&config, Some(4)).unwrap();
    if to_csv(&one).unwrap() != to_csv(&many).unwrap() || to_json(&one).unwrap() != to_json(&many).unwrap() {
        failures.push("fig2b output depends on thread count".into());
    }
    if to_csv(&one).unwrap() != to_csv(&run_sweep_with_threads(&config, Some(1)).unwrap()).unwrap() {
        failures.push("fig2b rerun differs".into());
    }

    let detail = if failures.is_empty() { "all invariants hold".to_string() } else { failures.join("; ") };
    Outcome::new(failures.is_empty(), detail)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("baseline QFI exactness", criterion_1),
        ("oracle equivalence", criterion_2),
        ("probability completeness and parity", criterion_3),
        ("headline gains", criterion_4),
        ("QCR gain above 10 dB", criterion_5),
        ("S2 crossing", criterion_6),
        ("intensity baseline", criterion_7),
        ("superiority window", criterion_8),
        ("sub-Heisenberg point", criterion_9),
        ("property suite", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag}: {name}: {}", i + 1, outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
