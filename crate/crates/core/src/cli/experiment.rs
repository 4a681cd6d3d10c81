use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{write_comment_header, write_file, TRACE_HEADER};
use crate::encodings::EncodingKind;
use crate::engine::{run_batch, BatchResult, EaConfig, RunResult, Summary, TracePoint};
use crate::error::{Error, Result};
use crate::fitness::FitnessKind;

/// Parameters that have no published value and use this crate's defaults.
pub const ASSUMED_PARAMETERS: [&str; 5] = [
    "population_size",
    "init_depth",
    "max_depth",
    "mutation_depth",
    "checkpoint_interval",
];

/// A grid of (n, encoding, fitness) cells sharing the remaining parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub ns: Vec<u32>,
    pub encodings: Vec<EncodingKind>,
    pub fitnesses: Vec<FitnessKind>,
    /// Template for every cell; its `n`, `encoding` and `fitness` are
    /// overwritten per cell.
    pub base: EaConfig,
    pub out: PathBuf,
    /// Worker threads for parallel repetitions; 0 uses all cores.
    pub jobs: usize,
}

impl ExperimentSpec {
    pub fn cells(&self) -> Vec<EaConfig> {
        let mut out = Vec::new();
        for &n in &self.ns {
            for &encoding in &self.encodings {
                for &fitness in &self.fitnesses {
                    out.push(EaConfig {
                        n,
                        encoding,
                        fitness,
                        ..self.base.clone()
                    });
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        if self.ns.is_empty() || self.encodings.is_empty() || self.fitnesses.is_empty() {
            return Err(Error::Config("experiment grid is empty".into()));
        }
        for cell in self.cells() {
            cell.validate()?;
        }
        Ok(())
    }
}

/// One row of `results.csv`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub size: u32,
    pub encoding: EncodingKind,
    pub fitness: FitnessKind,
    pub avg: f64,
    pub stdev: f64,
    pub max: f64,
    pub best_nl: u32,
    pub five_valued_rate: f64,
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub cells: Vec<CellSummary>,
    pub files: Vec<PathBuf>,
}

/// `n07_gp_f1`
pub fn cell_name(cfg: &EaConfig) -> String {
    format!("n{:02}_{}_{}", cfg.n, cfg.encoding, cfg.fitness)
}

/// Parses `5`, `5,7,9`, `5-8` or `5..8` (inclusive).
pub fn parse_n_range(s: &str) -> Result<Vec<u32>> {
    let bad = || Error::Config(format!("bad variable-count list `{s}`"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let range = part.split_once("..").or_else(|| part.split_once('-'));
        match range {
            Some((a, b)) => {
                let a: u32 = a.trim().parse().map_err(|_| bad())?;
                let b: u32 = b
                    .trim_start_matches('=')
                    .trim()
                    .parse()
                    .map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    out.dedup();
    Ok(out)
}

/// Comma-separated list of `FromStr` values.
pub fn parse_list<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Serialize)]
struct SummaryFile<'a> {
    cell: &'a str,
    assumed_parameters: &'a [&'a str],
    config: &'a EaConfig,
    summary: &'a Summary,
    runs: &'a [RunResult],
}

/// Deserialised `summary.json`.
#[derive(Deserialize)]
pub(crate) struct SummaryFileOwned {
    pub cell: String,
    pub config: EaConfig,
    pub runs: Vec<RunResult>,
}

/// Improvements and checkpoints merged by evaluation count.
pub(crate) fn merged_trace(run: &RunResult) -> Vec<TracePoint> {
    let mut points: Vec<TracePoint> = run.trace.iter().chain(&run.checkpoints).copied().collect();
    points.sort_by_key(|p| p.evaluations);
    points.dedup_by_key(|p| p.evaluations);
    points
}

fn config_echo(cfg: &EaConfig) -> Result<Vec<String>> {
    Ok(vec![
        format!("config: {}", serde_json::to_string(cfg)?),
        format!("assumed_parameters: {}", ASSUMED_PARAMETERS.join(",")),
    ])
}

fn trace_csv(run: &RunResult) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    let mut header = config_echo(&run.config)?;
    header.push(format!("seed: {}", run.seed));
    write_comment_header(&mut buf, &header);
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(buf);
    w.write_record(TRACE_HEADER)?;
    for p in merged_trace(run) {
        w.serialize(p)?;
    }
    w.into_inner().map_err(|e| Error::Config(e.to_string()))
}

fn write_cell(dir: &Path, name: &str, batch: &BatchResult, files: &mut Vec<PathBuf>) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    for (i, run) in batch.runs.iter().enumerate() {
        let path = dir.join(format!("run_{i:02}.csv"));
        write_file(&path, &trace_csv(run)?)?;
        files.push(path);
    }
    let summary = SummaryFile {
        cell: name,
        assumed_parameters: &ASSUMED_PARAMETERS,
        config: &batch.config,
        summary: &batch.summary,
        runs: &batch.runs,
    };
    let path = dir.join("summary.json");
    let mut json = serde_json::to_vec_pretty(&summary)?;
    json.push(b'\n');
    write_file(&path, &json)?;
    files.push(path);
    Ok(())
}

/// Runs every cell of the grid and writes its artifacts. Runs inside a cell
/// execute on a pool of `spec.jobs` threads.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    spec.validate()?;
    std::fs::create_dir_all(&spec.out).map_err(|e| Error::io(&spec.out, e))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;

    let mut files = Vec::new();
    let mut cells = Vec::new();
    for cfg in spec.cells() {
        let name = cell_name(&cfg);
        let batch = pool.install(|| run_batch(&cfg))?;
        write_cell(&spec.out.join(&name), &name, &batch, &mut files)?;
        cells.push(CellSummary {
            size: cfg.n,
            encoding: cfg.encoding,
            fitness: cfg.fitness,
            avg: batch.summary.fitness.avg,
            stdev: batch.summary.fitness.stdev,
            max: batch.summary.fitness.max,
            best_nl: batch.summary.best_nonlinearity,
            five_valued_rate: batch.summary.five_valued_rate,
        });
    }

    let mut buf = Vec::new();
    write_comment_header(&mut buf, &config_echo(&spec.base)?);
    let mut w = csv::Writer::from_writer(buf);
    for c in &cells {
        w.serialize(c)?;
    }
    let path = spec.out.join("results.csv");
    write_file(
        &path,
        &w.into_inner().map_err(|e| Error::Config(e.to_string()))?,
    )?;
    files.push(path);

    Ok(ExperimentReport { cells, files })
}
