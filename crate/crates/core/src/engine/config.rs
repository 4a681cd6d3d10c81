use serde::{Deserialize, Serialize};

use crate::encodings::{DepthLimits, EncodingKind};
use crate::error::{Error, Result};
use crate::fitness::FitnessKind;
use crate::variation::{OperatorSuite, TreeParams};

/// Tournament size of the steady-state scheme; not configurable.
pub const TOURNAMENT_SIZE: usize = 3;

/// Parameters of one evolutionary run (and of a batch of repetitions).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EaConfig {
    pub n: u32,
    pub encoding: EncodingKind,
    pub fitness: FitnessKind,
    pub population_size: usize,
    /// Total fitness evaluations, initial population included.
    pub evaluation_budget: u64,
    /// Probability that a child is mutated (once) after crossover.
    pub mutation_probability: f64,
    pub tournament_size: usize,
    /// Depth range of the initial GP population.
    pub init_depth: DepthLimits,
    /// Hard depth limit for GP offspring.
    pub max_depth: u32,
    /// Depth range of subtrees grown by subtree mutation.
    pub mutation_depth: DepthLimits,
    /// Crossover operator names; empty means every operator of the encoding.
    pub crossovers: Vec<String>,
    pub mutations: Vec<String>,
    pub master_seed: u64,
    pub repetitions: usize,
    /// Best-so-far snapshot period, in evaluations.
    pub checkpoint_interval: u64,
}

impl Default for EaConfig {
    fn default() -> Self {
        EaConfig {
            n: 5,
            encoding: EncodingKind::Gp,
            fitness: FitnessKind::F1,
            population_size: 500,
            evaluation_budget: 1_000_000,
            mutation_probability: 0.5,
            tournament_size: TOURNAMENT_SIZE,
            init_depth: DepthLimits::default(),
            max_depth: 8,
            mutation_depth: DepthLimits { min: 1, max: 4 },
            crossovers: Vec::new(),
            mutations: Vec::new(),
            master_seed: 0,
            repetitions: 30,
            checkpoint_interval: 10_000,
        }
    }
}

impl EaConfig {
    pub fn new(n: u32, encoding: EncodingKind, fitness: FitnessKind) -> Self {
        EaConfig {
            n,
            encoding,
            fitness,
            ..EaConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if !(2..=crate::boolean::MAX_VARS).contains(&self.n) {
            return fail(format!(
                "n={} outside 2..={}",
                self.n,
                crate::boolean::MAX_VARS
            ));
        }
        if self.population_size < TOURNAMENT_SIZE {
            return fail(format!(
                "population_size {} < {TOURNAMENT_SIZE}",
                self.population_size
            ));
        }
        if self.evaluation_budget < self.population_size as u64 {
            return fail(format!(
                "evaluation_budget {} < population_size {}",
                self.evaluation_budget, self.population_size
            ));
        }
        if !(0.0..=1.0).contains(&self.mutation_probability) {
            return fail(format!(
                "mutation_probability {} outside [0, 1]",
                self.mutation_probability
            ));
        }
        if self.tournament_size != TOURNAMENT_SIZE {
            return fail(format!("tournament_size must be {TOURNAMENT_SIZE}"));
        }
        if self.init_depth.min > self.init_depth.max || self.init_depth.max > self.max_depth {
            return fail(format!(
                "init depth {}..={} must be ordered and within max_depth {}",
                self.init_depth.min, self.init_depth.max, self.max_depth
            ));
        }
        if self.mutation_depth.min > self.mutation_depth.max {
            return fail("mutation depth limits out of order".into());
        }
        if self.repetitions == 0 {
            return fail("repetitions must be >= 1".into());
        }
        if self.checkpoint_interval == 0 {
            return fail("checkpoint_interval must be >= 1".into());
        }
        self.suite()?.validate()
    }

    pub fn tree_params(&self) -> TreeParams {
        TreeParams {
            n: self.n,
            max_depth: self.max_depth,
            mutation_depth: self.mutation_depth,
        }
    }

    pub fn suite(&self) -> Result<OperatorSuite> {
        OperatorSuite::from_names(
            self.encoding,
            &self.crossovers,
            &self.mutations,
            self.tree_params(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let c = EaConfig::default();
        c.validate().unwrap();
        assert_eq!(c.evaluation_budget, 1_000_000);
        assert_eq!(c.mutation_probability, 0.5);
        assert_eq!(c.repetitions, 30);
        assert_eq!(c.population_size, 500);
    }

    #[test]
    fn invalid_configs() {
        let base = EaConfig::default();
        let cases = [
            EaConfig {
                population_size: 2,
                ..base.clone()
            },
            EaConfig {
                evaluation_budget: 10,
                ..base.clone()
            },
            EaConfig {
                mutation_probability: 1.5,
                ..base.clone()
            },
            EaConfig {
                tournament_size: 4,
                ..base.clone()
            },
            EaConfig {
                n: 1,
                ..base.clone()
            },
            EaConfig {
                repetitions: 0,
                ..base.clone()
            },
            EaConfig {
                crossovers: vec!["bogus".into()],
                ..base.clone()
            },
            EaConfig {
                max_depth: 3,
                ..base.clone()
            },
        ];
        for c in cases {
            assert!(c.validate().is_err(), "{c:?}");
        }
    }

    #[test]
    fn json_round_trip_fills_defaults() {
        let c: EaConfig = serde_json::from_str(r#"{"n": 7, "encoding": "tt"}"#).unwrap();
        assert_eq!(c.n, 7);
        assert_eq!(c.encoding, EncodingKind::Tt);
        assert_eq!(c.population_size, 500);
        let back: EaConfig = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
