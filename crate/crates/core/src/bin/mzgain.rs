//! Command-line front end: `mzgain sweep | point | presets`.
//!
//! Exit codes: 0 success, 2 config error, 3 partial (some rows annotated),
//! 4 I/O error, 1 anything else.

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mzgain::fock::{CutoffPolicy, DEFAULT_TAIL_TOL};
use mzgain::metrology::{evaluate_baseline, evaluate_point};
use mzgain::states::{SqueezingSpec, SubtractionSpec};
use mzgain::sweep::{self, Format, SweepConfig};
use mzgain::Error;

#[derive(Parser)]
#[command(name = "mzgain", version, about = "Mach-Zehnder phase sensitivity with photon-subtracted squeezed light")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a parameter sweep and write a table.
    Sweep {
        /// Run configuration (key-value/TOML, or JSON for `.json`).
        #[arg(long)]
        config: Option<PathBuf>,
        /// Named preset; see `mzgain presets`.
        #[arg(long)]
        preset: Option<String>,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        tail_tol: Option<f64>,
    },
    /// Evaluate one parameter point and print its sensitivity report.
    Point {
        #[arg(long)]
        s_db: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = FRAC_PI_2)]
        phi: f64,
        #[arg(long, default_value_t = DEFAULT_TAIL_TOL)]
        tail_tol: f64,
    },
    /// List the built-in presets.
    Presets,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config { .. } => 2,
        Error::Io { .. } => 4,
        _ => 1,
    }
}

fn threads_from_env() -> Result<Option<usize>, Error> {
    match std::env::var("MZGAIN_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::Config { field: "MZGAIN_THREADS".into(), message: format!("not a thread count: `{v}`") }),
        Err(_) => Ok(None),
    }
}

fn sweep_cmd(
    config: Option<PathBuf>,
    preset: Option<String>,
    out: Option<PathBuf>,
    format: Option<String>,
    tail_tol: Option<f64>,
) -> Result<u8, Error> {
    let mut cfg: SweepConfig = match (config, preset) {
        (Some(path), None) => SweepConfig::load(&path)?,
        (None, Some(name)) => sweep::preset(&name)
            .ok_or_else(|| Error::Config { field: "preset".into(), message: format!("unknown preset `{name}`") })?,
        (Some(_), Some(_)) => {
            return Err(Error::Config { field: "preset".into(), message: "give either --config or --preset".into() })
        }
        (None, None) => {
            return Err(Error::Config { field: "config".into(), message: "--config or --preset is required".into() })
        }
    };
    if let Some(out) = out {
        cfg.output = Some(out);
    }
    if let Some(f) = format {
        cfg.format = Format::parse(&f)?;
    } else if let Some(f) = cfg.output.as_deref().and_then(Format::from_path) {
        cfg.format = f;
    }
    if let Some(tol) = tail_tol {
        cfg.tail_tol = tol;
    }
    cfg.validate()?;

    let table = sweep::run_sweep_with_threads(&cfg, threads_from_env()?)?;
    match &cfg.output {
        Some(path) => {
            sweep::write_table(&table, path, cfg.format)?;
            eprintln!("wrote {} rows to {}", table.len(), path.display());
        }
        None => {
            let text = match cfg.format {
                Format::Csv => sweep::to_csv(&table)?,
                Format::Json => sweep::to_json(&table)?,
            };
            print!("{text}");
        }
    }
    let annotated = table.annotated();
    if annotated > 0 {
        eprintln!("{annotated} of {} rows carry an error_note", table.len());
        Ok(3)
    } else {
        Ok(0)
    }
}

fn point_cmd(s_db: f64, n: usize, alpha: f64, t: f64, phi: f64, tail_tol: f64) -> Result<u8, Error> {
    let bad = |field: &str, e: Error| Error::Config { field: field.into(), message: e.to_string() };
    let sq = SqueezingSpec::from_db(s_db).map_err(|e| bad("s_db", e))?;
    let sub = SubtractionSpec::new(n, t).map_err(|e| bad("t", e))?;
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::Config { field: "alpha".into(), message: format!("must be > 0, got {alpha}") });
    }
    let policy = CutoffPolicy::auto(tail_tol);
    let baseline = evaluate_baseline(&sq, alpha, phi, policy)?;
    let p = evaluate_point(&sub, &baseline, policy)?;
    let r = &p.report;
    let show = |v: Option<f64>| v.map(|v| format!("{v:.12e}")).unwrap_or_else(|| "undefined".into());
    println!("S_dB            {:.6}", sq.s_db());
    println!("s, y, y1        {:.12e}  {:.12e}  {:.12e}", sq.s(), sq.y(), p.y1);
    println!("n, t, alpha     {}  {}  {}", n, t, alpha);
    println!("phi [rad]       {:.12e}", phi);
    println!("mean_n_cv       {:.12e}", p.mean_n_cv);
    println!("success_prob    {:.12e}", p.success_probability);
    println!("F               {:.12e}", r.fisher);
    println!("F_closed_form   {:.12e}  (rel. dev. {:.3e})", p.fisher_closed, p.closed_rel_dev);
    println!("dphi_qcr [rad]  {:.12e}", r.dphi_qcr);
    println!("dphi_int [rad]  {}", show(r.dphi_intensity));
    println!("g_qcr [dB]      {:.12e}", r.g_qcr_db);
    println!("g_int [dB]      {}", show(r.g_intensity_db));
    println!("HL, SQL [rad]   {:.12e}  {:.12e}", r.hl, r.sql);
    println!("n_total         {:.12e}", r.n_total);
    for note in &p.notes {
        println!("note            {note}");
    }
    Ok(if p.notes.is_empty() { 0 } else { 3 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep { config, preset, out, format, tail_tol } => sweep_cmd(config, preset, out, format, tail_tol),
        Command::Point { s_db, n, alpha, t, phi, tail_tol } => point_cmd(s_db, n, alpha, t, phi, tail_tol),
        Command::Presets => {
            for p in sweep::presets() {
                println!("{:<22} {}", p.name, p.description);
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
