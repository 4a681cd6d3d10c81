use std::path::{Path, PathBuf};

use super::experiment::SummaryFileOwned;
use super::{read_trace, write_comment_header, write_file};
use crate::engine::TracePoint;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExportReport {
    pub cells: Vec<String>,
    pub files: Vec<PathBuf>,
}

struct Cell {
    name: String,
    summary: SummaryFileOwned,
    traces: Vec<Vec<TracePoint>>,
}

fn load_cell(dir: &Path, bad: &mut Vec<PathBuf>) -> Option<Cell> {
    let summary_path = dir.join("summary.json");
    let summary: SummaryFileOwned = match std::fs::read(&summary_path)
        .ok()
        .and_then(|b| serde_json::from_slice(&b).ok())
    {
        Some(s) => s,
        None => {
            bad.push(summary_path);
            return None;
        }
    };
    let mut traces = Vec::with_capacity(summary.runs.len());
    let before = bad.len();
    for i in 0..summary.runs.len() {
        let path = dir.join(format!("run_{i:02}.csv"));
        match read_trace(&path) {
            Ok(t) if !t.is_empty() => traces.push(t),
            _ => bad.push(path),
        }
    }
    (bad.len() == before).then(|| Cell {
        name: summary.cell.clone(),
        summary,
        traces,
    })
}

/// Best fitness of a step-function trace at `evals`.
fn value_at(trace: &[TracePoint], evals: u64) -> f64 {
    let k = trace.partition_point(|p| p.evaluations <= evals);
    if k == 0 {
        f64::NAN
    } else {
        trace[k - 1].best_fitness
    }
}

fn distribution_csv(cell: &Cell) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    write_comment_header(
        &mut buf,
        &[format!(
            "config: {}",
            serde_json::to_string(&cell.summary.config)?
        )],
    );
    let mut w = csv::Writer::from_writer(buf);
    w.write_record(["run", "seed", "final_fitness", "best_nl", "five_valued"])?;
    for (i, r) in cell.summary.runs.iter().enumerate() {
        w.write_record([
            i.to_string(),
            r.seed.to_string(),
            r.best_fitness.to_string(),
            r.best_nonlinearity.to_string(),
            r.five_valued().to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| Error::Config(e.to_string()))
}

fn convergence_csv(cell: &Cell) -> Result<Vec<u8>> {
    let mut grid: Vec<u64> = cell
        .traces
        .iter()
        .flat_map(|t| t.iter().map(|p| p.evaluations))
        .collect();
    grid.sort_unstable();
    grid.dedup();

    let mut buf = Vec::new();
    write_comment_header(
        &mut buf,
        &[format!(
            "config: {}",
            serde_json::to_string(&cell.summary.config)?
        )],
    );
    let mut w = csv::Writer::from_writer(buf);
    w.write_record([
        "evaluations",
        "mean_best_fitness",
        "min_best_fitness",
        "max_best_fitness",
        "runs",
    ])?;
    for e in grid {
        let vals: Vec<f64> = cell
            .traces
            .iter()
            .map(|t| value_at(t, e))
            .filter(|v| !v.is_nan())
            .collect();
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
        let max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        w.write_record([
            e.to_string(),
            mean.to_string(),
            min.to_string(),
            max.to_string(),
            vals.len().to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| Error::Config(e.to_string()))
}

/// Writes `<results>/plots/<cell>_final.csv` (violin-plot input) and
/// `<results>/plots/<cell>_convergence.csv` (mean best fitness against
/// evaluations) for every cell directory under `results_dir`.
pub fn export_plot_data(results_dir: &Path) -> Result<ExportReport> {
    let entries = std::fs::read_dir(results_dir).map_err(|e| Error::io(results_dir, e))?;
    let mut dirs: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_dir() && p.file_name().is_some_and(|n| n != "plots"))
        .collect();
    dirs.sort();

    let mut bad = Vec::new();
    let cells: Vec<Cell> = dirs.iter().filter_map(|d| load_cell(d, &mut bad)).collect();
    if !bad.is_empty() {
        return Err(Error::Results(bad));
    }
    if cells.is_empty() {
        return Err(Error::Results(vec![results_dir.join("*/summary.json")]));
    }

    let plots = results_dir.join("plots");
    std::fs::create_dir_all(&plots).map_err(|e| Error::io(&plots, e))?;
    let mut files = Vec::new();
    for cell in &cells {
        let path = plots.join(format!("{}_final.csv", cell.name));
        write_file(&path, &distribution_csv(cell)?)?;
        files.push(path);
        let path = plots.join(format!("{}_convergence.csv", cell.name));
        write_file(&path, &convergence_csv(cell)?)?;
        files.push(path);
    }
    Ok(ExportReport {
        cells: cells.into_iter().map(|c| c.name).collect(),
        files,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(evaluations: u64, best_fitness: f64) -> TracePoint {
        TracePoint {
            evaluations,
            best_fitness,
            best_nl: 0,
            five_valued: false,
        }
    }

    #[test]
    fn step_lookup() {
        let t = vec![p(1, 0.1), p(5, 0.5), p(9, 2.0)];
        assert!(value_at(&t, 0).is_nan());
        assert_eq!(value_at(&t, 1), 0.1);
        assert_eq!(value_at(&t, 8), 0.5);
        assert_eq!(value_at(&t, 100), 2.0);
    }

    #[test]
    fn missing_directory() {
        let err = export_plot_data(Path::new("/nonexistent/results")).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }
}
