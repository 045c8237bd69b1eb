//! Batch evaluation over `(S, n, α, t)` grids and figure-ready tables.
//!
//! A sweep is described by a [`SweepConfig`], read from a flat key-value
//! (TOML) file, JSON, or taken from [`presets`]. [`run_sweep`] evaluates every
//! grid point in parallel and returns rows sorted by `(S_dB, n, t, alpha)`,
//! so output never depends on scheduling. Each `(S, α)` also gets a baseline
//! row (`n = 0`, `t = 1`): the plain SMSV probe the gains are measured against.
//!
//! Numeric failures at a single grid point (a blind intensity working point,
//! say) land in the row's `error_note` column instead of aborting the sweep.

mod config;
mod emit;
mod presets;
mod run;

pub use config::{Format, Mode, SweepConfig};
pub use emit::{
    parse_csv, sweep_row_schema, to_csv, to_json, write_table, CROSSING_COLUMNS, POINT_COLUMNS,
};
pub use presets::{preset, presets, Preset};
pub use run::{run_sweep, run_sweep_with_threads, CrossingRow, SweepRow, SweepTable};
