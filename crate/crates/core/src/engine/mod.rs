//! Steady-state evolutionary algorithm with 3-tournament elimination.
//!
//! Each step samples three distinct individuals, removes the worst, crosses
//! the other two and, with the configured probability, mutates the child,
//! which then takes the eliminated individual's slot. Every step costs one
//! fitness evaluation and the initial population counts against the budget.

mod batch;
mod config;

pub use batch::{derive_seed, run_batch, BatchResult, Stats, Summary};
pub use config::{EaConfig, TOURNAMENT_SIZE};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boolean::{
    algebraic_degree, classify_spectrum, nonlinearity, walsh_transform, SpectrumProfile,
    TruthTable, WalshSpectrum,
};
use crate::encodings::{random_bitstring, random_tree, BitMode, EncodingKind, Genotype};
use crate::error::Result;
use crate::fitness::{Breakdown, FitnessValue};
use crate::variation::OperatorSuite;

#[derive(Clone, Debug)]
pub struct Individual {
    pub genotype: Genotype,
    pub fitness: FitnessValue,
}

/// The working population of a run plus its evaluation counter.
#[derive(Clone, Debug)]
pub struct Population {
    pub individuals: Vec<Individual>,
    pub evaluations: u64,
}

impl Population {
    pub fn len(&self) -> usize {
        self.individuals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.individuals.is_empty()
    }

    pub fn best(&self) -> Option<&Individual> {
        self.individuals
            .iter()
            .max_by(|a, b| a.fitness.cmp_value(&b.fitness))
    }
}

/// Best-so-far snapshot; one CSV row of a convergence trace.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub evaluations: u64,
    pub best_fitness: f64,
    pub best_nl: u32,
    pub five_valued: bool,
}

/// Everything a run reports; all best-* fields re-derive from `best_genotype`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub seed: u64,
    pub best_genotype: String,
    pub best_truth_table: String,
    pub profile: SpectrumProfile,
    pub best_fitness: f64,
    pub breakdown: Breakdown,
    pub best_nonlinearity: u32,
    pub balanced: bool,
    pub algebraic_degree: u32,
    pub evaluations: u64,
    /// Strict improvements of the best-ever fitness.
    pub trace: Vec<TracePoint>,
    /// Best-so-far every `checkpoint_interval` evaluations and at the end.
    pub checkpoints: Vec<TracePoint>,
    pub config: EaConfig,
}

impl RunResult {
    pub fn five_valued(&self) -> bool {
        self.profile.is_five_valued()
    }
}

/// A validated configuration with its operator suite, ready to run.
#[derive(Clone, Debug)]
pub struct Engine {
    config: EaConfig,
    suite: OperatorSuite,
}

struct Evaluated {
    fitness: FitnessValue,
    tt: TruthTable,
    spectrum: WalshSpectrum,
}

struct BestEver {
    genotype: Genotype,
    eval: Evaluated,
    point: TracePoint,
}

impl Engine {
    pub fn new(config: EaConfig) -> Result<Self> {
        config.validate()?;
        let suite = config.suite()?;
        Ok(Engine { config, suite })
    }

    pub fn config(&self) -> &EaConfig {
        &self.config
    }

    pub fn suite(&self) -> &OperatorSuite {
        &self.suite
    }

    fn evaluate_full(&self, g: &Genotype) -> Result<Evaluated> {
        let tt = g.decode(self.config.n)?;
        let spectrum = walsh_transform(&tt);
        let fitness = self.config.fitness.evaluate(&tt, &spectrum);
        Ok(Evaluated {
            fitness,
            tt,
            spectrum,
        })
    }

    /// Fitness of a genotype under this configuration.
    pub fn evaluate(&self, g: &Genotype) -> Result<FitnessValue> {
        Ok(self.evaluate_full(g)?.fitness)
    }

    pub fn random_genotype<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Genotype> {
        let n = self.config.n;
        Ok(match self.config.encoding {
            EncodingKind::Tt => Genotype::Bits(random_bitstring(n, BitMode::Tt, rng)?),
            EncodingKind::Anf => Genotype::Bits(random_bitstring(n, BitMode::Anf, rng)?),
            EncodingKind::Gp => Genotype::Tree(random_tree(n, self.config.init_depth, rng)),
        })
    }

    /// Builds a population from given genotypes; each costs one evaluation.
    pub fn population_from(&self, genotypes: Vec<Genotype>) -> Result<Population> {
        let individuals = genotypes
            .into_iter()
            .map(|genotype| {
                let fitness = self.evaluate(&genotype)?;
                Ok(Individual { genotype, fitness })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Population {
            evaluations: individuals.len() as u64,
            individuals,
        })
    }

    fn step_inner<R: Rng + ?Sized>(
        &self,
        pop: &mut Population,
        rng: &mut R,
    ) -> Result<(usize, Evaluated)> {
        debug_assert!(pop.len() >= TOURNAMENT_SIZE);
        let picked = sample(rng, pop.len(), TOURNAMENT_SIZE).into_vec();
        let worst_value = picked
            .iter()
            .map(|&i| pop.individuals[i].fitness)
            .min_by(|a, b| a.cmp_value(b))
            .expect("three candidates");
        let tied: Vec<usize> = (0..TOURNAMENT_SIZE)
            .filter(|&k| pop.individuals[picked[k]].fitness.value == worst_value.value)
            .collect();
        let loser = tied[rng.gen_range(0..tied.len())];
        let mut parents = picked
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != loser)
            .map(|(_, &i)| i);
        let (pa, pb) = (parents.next().unwrap(), parents.next().unwrap());

        let mutate = rng.gen_bool(self.config.mutation_probability);
        let child = self.suite.pick_and_apply(
            &pop.individuals[pa].genotype,
            &pop.individuals[pb].genotype,
            mutate,
            rng,
        )?;
        let eval = self.evaluate_full(&child)?;
        let slot = picked[loser];
        pop.individuals[slot] = Individual {
            genotype: child,
            fitness: eval.fitness,
        };
        pop.evaluations += 1;
        Ok((slot, eval))
    }

    /// One steady-state step; returns the slot that received the child.
    pub fn sst_step<R: Rng + ?Sized>(&self, pop: &mut Population, rng: &mut R) -> Result<usize> {
        self.step_inner(pop, rng).map(|(slot, _)| slot)
    }

    fn snapshot(&self, evaluations: u64, eval: &Evaluated) -> TracePoint {
        TracePoint {
            evaluations,
            best_fitness: eval.fitness.value,
            best_nl: nonlinearity(&eval.spectrum),
            five_valued: classify_spectrum(&eval.spectrum).is_five_valued(),
        }
    }

    /// Complete run: random initial population, then steps until the budget
    /// is spent. Deterministic in `seed`.
    pub fn run(&self, seed: u64) -> Result<RunResult> {
        let cfg = &self.config;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best: Option<BestEver> = None;
        let mut trace = Vec::new();
        let mut checkpoints = Vec::new();

        let consider = |evaluations: u64,
                        g: &Genotype,
                        eval: Evaluated,
                        best: &mut Option<BestEver>,
                        trace: &mut Vec<TracePoint>| {
            let improved = best
                .as_ref()
                .is_none_or(|b| eval.fitness.value > b.eval.fitness.value);
            if improved {
                let point = self.snapshot(evaluations, &eval);
                trace.push(point);
                *best = Some(BestEver {
                    genotype: g.clone(),
                    eval,
                    point,
                });
            }
        };
        let checkpoint =
            |evaluations: u64, best: &Option<BestEver>, checkpoints: &mut Vec<TracePoint>| {
                if let Some(b) = best {
                    checkpoints.push(TracePoint {
                        evaluations,
                        ..b.point
                    });
                }
            };

        let mut pop = Population {
            individuals: Vec::with_capacity(cfg.population_size),
            evaluations: 0,
        };
        for _ in 0..cfg.population_size {
            let genotype = self.random_genotype(&mut rng)?;
            let eval = self.evaluate_full(&genotype)?;
            pop.evaluations += 1;
            pop.individuals.push(Individual {
                genotype: genotype.clone(),
                fitness: eval.fitness,
            });
            consider(pop.evaluations, &genotype, eval, &mut best, &mut trace);
            if pop.evaluations.is_multiple_of(cfg.checkpoint_interval) {
                checkpoint(pop.evaluations, &best, &mut checkpoints);
            }
        }

        while pop.evaluations < cfg.evaluation_budget {
            let (slot, eval) = self.step_inner(&mut pop, &mut rng)?;
            if best
                .as_ref()
                .is_none_or(|b| eval.fitness.value > b.eval.fitness.value)
            {
                let g = pop.individuals[slot].genotype.clone();
                consider(pop.evaluations, &g, eval, &mut best, &mut trace);
            }
            if pop.evaluations.is_multiple_of(cfg.checkpoint_interval) {
                checkpoint(pop.evaluations, &best, &mut checkpoints);
            }
        }
        if checkpoints.last().map(|c| c.evaluations) != Some(pop.evaluations) {
            checkpoint(pop.evaluations, &best, &mut checkpoints);
        }

        let best = best.expect("population is non-empty");
        let anf = best.eval.tt.to_anf();
        Ok(RunResult {
            seed,
            best_genotype: best.genotype.to_string(),
            best_truth_table: best.eval.tt.to_hex(),
            profile: classify_spectrum(&best.eval.spectrum),
            best_fitness: best.eval.fitness.value,
            breakdown: best.eval.fitness.breakdown,
            best_nonlinearity: nonlinearity(&best.eval.spectrum),
            balanced: best.eval.tt.is_balanced(),
            algebraic_degree: algebraic_degree(&anf),
            evaluations: pop.evaluations,
            trace,
            checkpoints,
            config: cfg.clone(),
        })
    }
}

/// Convenience wrapper: validate `config` and run once with `seed`.
pub fn run(config: &EaConfig, seed: u64) -> Result<RunResult> {
    Engine::new(config.clone())?.run(seed)
}
