//! Run a named preset and write its table.
//!
//! `cargo run --example sweep_preset -- fig2b /tmp/fig2b.csv`

use mzgain::sweep::{preset, presets, run_sweep, write_table, Format};

fn main() -> mzgain::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "headline".into());
    let Some(config) = preset(&name) else {
        eprintln!("unknown preset `{name}`; known:");
        for p in presets() {
            eprintln!("  {:<20} {}", p.name, p.description);
        }
        std::process::exit(2);
    };
    let table = run_sweep(&config)?;
    match args.next() {
        Some(path) => {
            let path = std::path::PathBuf::from(path);
            let format = Format::from_path(&path).unwrap_or_default();
            write_table(&table, &path, format)?;
            println!("{} rows -> {}", table.len(), path.display());
        }
        None => print!("{}", mzgain::sweep::to_csv(&table)?),
    }
    Ok(())
}
