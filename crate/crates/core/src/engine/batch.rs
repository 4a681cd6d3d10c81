use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{EaConfig, Engine, RunResult};
use crate::error::Result;

/// Seed of repetition `index`: SplitMix64 applied to the master seed offset
/// by `index + 1` golden-ratio increments.
pub fn derive_seed(master: u64, index: usize) -> u64 {
    let mut z = master.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub avg: f64,
    /// Sample standard deviation; 0 for a single value.
    pub stdev: f64,
    pub min: f64,
    pub max: f64,
}

impl Stats {
    pub fn from_values(values: &[f64]) -> Stats {
        let count = values.len();
        if count == 0 {
            return Stats {
                avg: 0.0,
                stdev: 0.0,
                min: 0.0,
                max: 0.0,
            };
        }
        let avg = values.iter().sum::<f64>() / count as f64;
        let stdev = if count > 1 {
            (values.iter().map(|v| (v - avg).powi(2)).sum::<f64>() / (count - 1) as f64).sqrt()
        } else {
            0.0
        };
        Stats {
            avg,
            stdev,
            min: values.iter().copied().fold(f64::INFINITY, f64::min),
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub repetitions: usize,
    pub fitness: Stats,
    pub nonlinearity: Stats,
    pub best_nonlinearity: u32,
    /// Highest nonlinearity among runs whose best individual is five-valued.
    pub best_five_valued_nonlinearity: Option<u32>,
    pub five_valued_runs: usize,
    pub five_valued_rate: f64,
}

impl Summary {
    pub fn of(runs: &[RunResult]) -> Summary {
        let fitness: Vec<f64> = runs.iter().map(|r| r.best_fitness).collect();
        let nl: Vec<f64> = runs
            .iter()
            .map(|r| f64::from(r.best_nonlinearity))
            .collect();
        let five: Vec<&RunResult> = runs.iter().filter(|r| r.five_valued()).collect();
        Summary {
            repetitions: runs.len(),
            fitness: Stats::from_values(&fitness),
            nonlinearity: Stats::from_values(&nl),
            best_nonlinearity: runs.iter().map(|r| r.best_nonlinearity).max().unwrap_or(0),
            best_five_valued_nonlinearity: five.iter().map(|r| r.best_nonlinearity).max(),
            five_valued_runs: five.len(),
            five_valued_rate: if runs.is_empty() {
                0.0
            } else {
                five.len() as f64 / runs.len() as f64
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchResult {
    pub config: EaConfig,
    pub runs: Vec<RunResult>,
    pub summary: Summary,
}

/// Runs `config.repetitions` independent runs on the current rayon pool.
/// Results come back in repetition order regardless of scheduling.
pub fn run_batch(config: &EaConfig) -> Result<BatchResult> {
    let engine = Engine::new(config.clone())?;
    let runs = (0..config.repetitions)
        .into_par_iter()
        .map(|i| engine.run(derive_seed(config.master_seed, i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BatchResult {
        config: config.clone(),
        summary: Summary::of(&runs),
        runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::EncodingKind;
    use crate::fitness::FitnessKind;

    fn cfg(reps: usize) -> EaConfig {
        EaConfig {
            population_size: 30,
            evaluation_budget: 600,
            repetitions: reps,
            master_seed: 9,
            ..EaConfig::new(5, EncodingKind::Gp, FitnessKind::F1)
        }
    }

    #[test]
    fn single_repetition_summary() {
        let b = run_batch(&cfg(1)).unwrap();
        assert_eq!(b.runs.len(), 1);
        assert_eq!(b.summary.fitness.stdev, 0.0);
        assert_eq!(b.summary.fitness.avg, b.runs[0].best_fitness);
        assert_eq!(b.summary.fitness.max, b.runs[0].best_fitness);
    }

    #[test]
    fn summary_max_and_seeds() {
        let b = run_batch(&cfg(4)).unwrap();
        let max = b
            .runs
            .iter()
            .map(|r| r.best_fitness)
            .fold(f64::MIN, f64::max);
        assert_eq!(b.summary.fitness.max, max);
        let seeds: std::collections::HashSet<u64> = b.runs.iter().map(|r| r.seed).collect();
        assert_eq!(seeds.len(), 4);
        assert_eq!(b.runs[2].seed, derive_seed(9, 2));
        assert_eq!(run_batch(&cfg(4)).unwrap(), b);
    }

    #[test]
    fn stats_values() {
        let s = Stats::from_values(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.avg, 2.5);
        assert!((s.stdev - (5.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert_eq!((s.min, s.max), (1.0, 4.0));
    }

    #[test]
    fn seeds_differ_from_master_and_each_other() {
        assert_ne!(derive_seed(0, 0), derive_seed(0, 1));
        assert_ne!(derive_seed(0, 0), derive_seed(1, 0));
    }
}
