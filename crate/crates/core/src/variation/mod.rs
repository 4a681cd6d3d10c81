//! Crossover and mutation for bitstring and tree genotypes.
//!
//! Each invocation picks one operator uniformly at random from the suite.

mod bitstring;
mod tree;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

pub use bitstring::{
    bit_flip_at, bit_flip_mutation, one_point_at, one_point_crossover, shuffle_mutation,
    shuffle_range, uniform_crossover,
};
pub use tree::{
    subtree_mutation, subtree_mutation_at, swap_at, tree_crossover, TreeCrossover, TreeParams,
};

use crate::encodings::{EncodingKind, Genotype};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BitCrossover {
    OnePoint,
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BitMutation {
    BitFlip,
    Shuffle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeMutation {
    Subtree,
}

impl BitCrossover {
    pub const ALL: [BitCrossover; 2] = [BitCrossover::OnePoint, BitCrossover::Uniform];

    pub fn name(self) -> &'static str {
        match self {
            BitCrossover::OnePoint => "onepoint",
            BitCrossover::Uniform => "uniform",
        }
    }
}

impl BitMutation {
    pub const ALL: [BitMutation; 2] = [BitMutation::BitFlip, BitMutation::Shuffle];

    pub fn name(self) -> &'static str {
        match self {
            BitMutation::BitFlip => "bitflip",
            BitMutation::Shuffle => "shuffle",
        }
    }
}

impl TreeMutation {
    pub fn name(self) -> &'static str {
        "subtree"
    }
}

fn op_key(s: &str) -> String {
    s.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_ascii_lowercase()
}

impl FromStr for BitCrossover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BitCrossover::ALL
            .into_iter()
            .find(|op| op.name() == op_key(s))
            .ok_or_else(|| Error::UnknownOperator(s.to_string()))
    }
}

impl FromStr for BitMutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match op_key(s).as_str() {
            "bitflip" | "bit" | "simple" => Ok(BitMutation::BitFlip),
            "shuffle" => Ok(BitMutation::Shuffle),
            _ => Err(Error::UnknownOperator(s.to_string())),
        }
    }
}

impl FromStr for TreeMutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match op_key(s).as_str() {
            "subtree" => Ok(TreeMutation::Subtree),
            _ => Err(Error::UnknownOperator(s.to_string())),
        }
    }
}

/// Operators available to one encoding.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorSuite {
    Bitstring {
        crossovers: Vec<BitCrossover>,
        mutations: Vec<BitMutation>,
    },
    Tree {
        crossovers: Vec<TreeCrossover>,
        mutations: Vec<TreeMutation>,
        params: TreeParams,
    },
}

impl OperatorSuite {
    /// Every bitstring operator: one-point and uniform crossover, bit-flip and
    /// shuffle mutation.
    pub fn bitstring() -> Self {
        OperatorSuite::Bitstring {
            crossovers: BitCrossover::ALL.to_vec(),
            mutations: BitMutation::ALL.to_vec(),
        }
    }

    /// All five tree crossovers and subtree mutation.
    pub fn tree(params: TreeParams) -> Self {
        OperatorSuite::Tree {
            crossovers: TreeCrossover::ALL.to_vec(),
            mutations: vec![TreeMutation::Subtree],
            params,
        }
    }

    pub fn default_for(encoding: EncodingKind, params: TreeParams) -> Self {
        if encoding.is_bitstring() {
            OperatorSuite::bitstring()
        } else {
            OperatorSuite::tree(params)
        }
    }

    /// Builds a suite from operator names; empty lists fall back to the
    /// full default set.
    pub fn from_names(
        encoding: EncodingKind,
        crossovers: &[String],
        mutations: &[String],
        params: TreeParams,
    ) -> Result<Self> {
        fn parse_or<T: FromStr<Err = Error>>(names: &[String], default: Vec<T>) -> Result<Vec<T>> {
            if names.is_empty() {
                Ok(default)
            } else {
                names.iter().map(|s| s.parse()).collect()
            }
        }
        let suite = if encoding.is_bitstring() {
            OperatorSuite::Bitstring {
                crossovers: parse_or(crossovers, BitCrossover::ALL.to_vec())?,
                mutations: parse_or(mutations, BitMutation::ALL.to_vec())?,
            }
        } else {
            OperatorSuite::Tree {
                crossovers: parse_or(crossovers, TreeCrossover::ALL.to_vec())?,
                mutations: parse_or(mutations, vec![TreeMutation::Subtree])?,
                params,
            }
        };
        Ok(suite)
    }

    pub fn crossover_count(&self) -> usize {
        match self {
            OperatorSuite::Bitstring { crossovers, .. } => crossovers.len(),
            OperatorSuite::Tree { crossovers, .. } => crossovers.len(),
        }
    }

    pub fn mutation_count(&self) -> usize {
        match self {
            OperatorSuite::Bitstring { mutations, .. } => mutations.len(),
            OperatorSuite::Tree { mutations, .. } => mutations.len(),
        }
    }

    pub fn crossover_names(&self) -> Vec<&'static str> {
        match self {
            OperatorSuite::Bitstring { crossovers, .. } => {
                crossovers.iter().map(|c| c.name()).collect()
            }
            OperatorSuite::Tree { crossovers, .. } => crossovers.iter().map(|c| c.name()).collect(),
        }
    }

    pub fn mutation_names(&self) -> Vec<&'static str> {
        match self {
            OperatorSuite::Bitstring { mutations, .. } => {
                mutations.iter().map(|m| m.name()).collect()
            }
            OperatorSuite::Tree { mutations, .. } => mutations.iter().map(|m| m.name()).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.crossover_count() == 0 || self.mutation_count() == 0 {
            return Err(Error::Config(
                "operator suite needs at least one crossover and one mutation".into(),
            ));
        }
        Ok(())
    }

    pub fn accepts(&self, encoding: EncodingKind) -> bool {
        match self {
            OperatorSuite::Bitstring { .. } => encoding.is_bitstring(),
            OperatorSuite::Tree { .. } => !encoding.is_bitstring(),
        }
    }

    fn check(&self, g: &Genotype) -> Result<()> {
        if self.accepts(g.kind()) {
            Ok(())
        } else {
            Err(Error::OperatorMismatch {
                op: if matches!(self, OperatorSuite::Tree { .. }) {
                    "tree suite"
                } else {
                    "bitstring suite"
                }
                .into(),
                encoding: g.kind().to_string(),
            })
        }
    }

    pub fn pick_crossover<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        rng.gen_range(0..self.crossover_count())
    }

    pub fn pick_mutation<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        rng.gen_range(0..self.mutation_count())
    }

    /// Applies one uniformly chosen crossover.
    pub fn crossover<R: Rng + ?Sized>(
        &self,
        a: &Genotype,
        b: &Genotype,
        rng: &mut R,
    ) -> Result<Genotype> {
        self.check(a)?;
        self.check(b)?;
        let k = self.pick_crossover(rng);
        match (self, a, b) {
            (OperatorSuite::Bitstring { crossovers, .. }, Genotype::Bits(a), Genotype::Bits(b)) => {
                let child = match crossovers[k] {
                    BitCrossover::OnePoint => one_point_crossover(a, b, rng)?,
                    BitCrossover::Uniform => uniform_crossover(a, b, rng)?,
                };
                Ok(Genotype::Bits(child))
            }
            (
                OperatorSuite::Tree {
                    crossovers, params, ..
                },
                Genotype::Tree(a),
                Genotype::Tree(b),
            ) => Ok(Genotype::Tree(tree_crossover(
                a,
                b,
                crossovers[k],
                params,
                rng,
            ))),
            _ => unreachable!("checked above"),
        }
    }

    /// Applies one uniformly chosen mutation.
    pub fn mutate<R: Rng + ?Sized>(&self, g: &Genotype, rng: &mut R) -> Result<Genotype> {
        self.check(g)?;
        let k = self.pick_mutation(rng);
        match (self, g) {
            (OperatorSuite::Bitstring { mutations, .. }, Genotype::Bits(g)) => {
                let child = match mutations[k] {
                    BitMutation::BitFlip => bit_flip_mutation(g, rng),
                    BitMutation::Shuffle => shuffle_mutation(g, rng),
                };
                Ok(Genotype::Bits(child))
            }
            (
                OperatorSuite::Tree {
                    mutations, params, ..
                },
                Genotype::Tree(t),
            ) => match mutations[k] {
                TreeMutation::Subtree => Ok(Genotype::Tree(subtree_mutation(t, params, rng))),
            },
            _ => unreachable!("checked above"),
        }
    }

    /// Crossover of the two parents, followed by one mutation when `mutate`.
    pub fn pick_and_apply<R: Rng + ?Sized>(
        &self,
        a: &Genotype,
        b: &Genotype,
        mutate: bool,
        rng: &mut R,
    ) -> Result<Genotype> {
        let child = self.crossover(a, b, rng)?;
        if mutate {
            self.mutate(&child, rng)
        } else {
            Ok(child)
        }
    }
}

impl fmt::Display for OperatorSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "crossover[{}] mutation[{}]",
            self.crossover_names().join(","),
            self.mutation_names().join(",")
        )
    }
}
