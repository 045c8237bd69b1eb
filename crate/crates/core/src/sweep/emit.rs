use std::io::Write;
use std::path::Path;

use super::config::Format;
use super::run::{CrossingRow, SweepRow, SweepTable};
use crate::error::{Error, Result};

pub const POINT_COLUMNS: [&str; 20] = [
    "S_dB", "s", "y", "n", "t", "y1", "alpha", "phi", "mean_n_cv", "success_prob", "F_numeric", "F_eq6",
    "eq6_rel_dev", "dphi_qcr", "dphi_intensity", "g_qcr_db", "g_intensity_db", "hl", "sql", "error_note",
];

pub const CROSSING_COLUMNS: [&str; 5] = ["n", "t", "alpha", "S2_dB", "error_note"];

const POINT_UNITS: &str = "# units: S_dB, g_qcr_db, g_intensity_db [dB]; phi, dphi_qcr, dphi_intensity, hl, sql [rad]; \
     s, y, y1, t, alpha, F_numeric, F_eq6 dimensionless; mean_n_cv [photons]";
const CROSSING_UNITS: &str = "# units: S2_dB [dB]; t, alpha dimensionless";

fn num(v: f64) -> String {
    format!("{v:.12e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn csv_err(e: csv::Error) -> Error {
    Error::Serialization(e.to_string())
}

pub fn to_csv(table: &SweepTable) -> Result<String> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    let mut buf: Vec<u8> = Vec::new();
    let units = match table {
        SweepTable::Points(_) => POINT_UNITS,
        SweepTable::Crossings(_) => CROSSING_UNITS,
    };
    writeln!(buf, "{units}").expect("write to Vec");
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        match table {
            SweepTable::Points(rows) => {
                w.write_record(POINT_COLUMNS).map_err(csv_err)?;
                for r in rows {
                    w.write_record(point_record(r)).map_err(csv_err)?;
                }
            }
            SweepTable::Crossings(rows) => {
                w.write_record(CROSSING_COLUMNS).map_err(csv_err)?;
                for r in rows {
                    w.write_record(crossing_record(r)).map_err(csv_err)?;
                }
            }
        }
        w.flush().map_err(|e| Error::Serialization(e.to_string()))?;
    }
    String::from_utf8(buf).map_err(|e| Error::Serialization(e.to_string()))
}

fn point_record(r: &SweepRow) -> [String; 20] {
    [
        num(r.s_db),
        num(r.s),
        num(r.y),
        r.n.to_string(),
        num(r.t),
        num(r.y1),
        num(r.alpha),
        num(r.phi),
        opt(r.mean_n_cv),
        opt(r.success_prob),
        opt(r.f_numeric),
        opt(r.f_closed),
        opt(r.closed_rel_dev),
        opt(r.dphi_qcr),
        opt(r.dphi_intensity),
        opt(r.g_qcr_db),
        opt(r.g_intensity_db),
        opt(r.hl),
        opt(r.sql),
        r.error_note.clone().unwrap_or_default(),
    ]
}

fn crossing_record(r: &CrossingRow) -> [String; 5] {
    [r.n.to_string(), num(r.t), num(r.alpha), opt(r.s2_db), r.error_note.clone().unwrap_or_default()]
}

pub fn to_json(table: &SweepTable) -> Result<String> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    let text = match table {
        SweepTable::Points(rows) => serde_json::to_string_pretty(rows),
        SweepTable::Crossings(rows) => serde_json::to_string_pretty(rows),
    }
    .map_err(|e| Error::Serialization(e.to_string()))?;
    Ok(text + "\n")
}

/// Reads a point table written by [`to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    rdr.deserialize().map(|r| r.map_err(csv_err)).collect()
}

/// JSON schema of a point table (an array of [`SweepRow`]).
pub fn sweep_row_schema() -> serde_json::Value {
    serde_json::to_value(schemars::schema_for!(Vec<SweepRow>)).expect("schema serializes")
}

/// Writes the table to `path` atomically: a sibling temp file is renamed into place.
pub fn write_table(table: &SweepTable, path: &Path, format: Format) -> Result<()> {
    let text = match format {
        Format::Csv => to_csv(table)?,
        Format::Json => to_json(table)?,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, std::io::Error::from(e.kind())))?;
    tmp.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}
