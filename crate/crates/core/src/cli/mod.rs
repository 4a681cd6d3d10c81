//! Experiment harness behind the `fivevalued` binary: grid execution with
//! on-disk artifacts, standalone function analysis and plot-data export.
//!
//! Layout written by [`run_experiment`]:
//!
//! ```text
//! <out>/results.csv                       aggregate table, one row per cell
//! <out>/n07_gp_f1/summary.json            config echo, per-run results, stats
//! <out>/n07_gp_f1/run_00.csv ...          convergence traces
//! ```
//!
//! Every CSV starts with `#`-prefixed comment lines carrying the JSON config
//! echo, so each file is reproducible on its own.

mod analyze;
mod experiment;
mod export;

pub use analyze::{analyze, Analysis};
pub use experiment::{
    cell_name, parse_list, parse_n_range, run_experiment, CellSummary, ExperimentReport,
    ExperimentSpec, ASSUMED_PARAMETERS,
};
pub use export::{export_plot_data, ExportReport};

use std::io::Write;
use std::path::Path;

use crate::engine::TracePoint;
use crate::error::{Error, Result};

pub(crate) const TRACE_HEADER: [&str; 4] =
    ["evaluations", "best_fitness", "best_nl", "five_valued"];

pub(crate) fn write_comment_header(out: &mut Vec<u8>, lines: &[String]) {
    for line in lines {
        for l in line.lines() {
            out.extend_from_slice(b"# ");
            out.extend_from_slice(l.as_bytes());
            out.push(b'\n');
        }
    }
}

pub(crate) fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut f = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    f.write_all(bytes).map_err(|e| Error::io(path, e))
}

pub(crate) fn csv_reader(bytes: &[u8]) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(bytes)
}

pub(crate) fn read_trace(path: &Path) -> Result<Vec<TracePoint>> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let mut rdr = csv_reader(&bytes);
    let headers = rdr.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != TRACE_HEADER {
        return Err(Error::Results(vec![path.to_path_buf()]));
    }
    let mut out = Vec::new();
    for row in rdr.deserialize() {
        out.push(row?);
    }
    Ok(out)
}
