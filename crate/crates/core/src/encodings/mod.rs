//! Genotype representations and their decoding to truth tables.

mod bitstring;
mod init;
mod tree;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bitstring::{decode, random_bitstring, BitMode, BitstringGenotype};
pub use init::{random_tree, DepthLimits, InitMethod};
pub use tree::{evaluate_tree, GpTree, Node, Op};

use crate::boolean::{Bits, TruthTable};
use crate::error::{Error, Result};

/// The three encodings under comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingKind {
    Tt,
    Anf,
    Gp,
}

impl EncodingKind {
    pub const ALL: [EncodingKind; 3] = [EncodingKind::Tt, EncodingKind::Anf, EncodingKind::Gp];

    pub fn name(self) -> &'static str {
        match self {
            EncodingKind::Tt => "tt",
            EncodingKind::Anf => "anf",
            EncodingKind::Gp => "gp",
        }
    }

    pub fn is_bitstring(self) -> bool {
        !matches!(self, EncodingKind::Gp)
    }
}

impl fmt::Display for EncodingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EncodingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "tt" => Ok(EncodingKind::Tt),
            "anf" => Ok(EncodingKind::Anf),
            "gp" | "tree" => Ok(EncodingKind::Gp),
            other => Err(Error::Config(format!("unknown encoding `{other}`"))),
        }
    }
}

/// Either genotype kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Genotype {
    Bits(BitstringGenotype),
    Tree(GpTree),
}

impl Genotype {
    pub fn kind(&self) -> EncodingKind {
        match self {
            Genotype::Bits(g) => match g.mode {
                BitMode::Tt => EncodingKind::Tt,
                BitMode::Anf => EncodingKind::Anf,
            },
            Genotype::Tree(_) => EncodingKind::Gp,
        }
    }

    /// Phenotype over `n` variables. Bitstring genotypes carry their own `n`.
    pub fn decode(&self, n: u32) -> Result<TruthTable> {
        match self {
            Genotype::Bits(g) => {
                if g.bits.n() != n {
                    return Err(Error::MalformedGenotype(format!(
                        "bitstring for n={} decoded at n={n}",
                        g.bits.n()
                    )));
                }
                Ok(decode(g))
            }
            Genotype::Tree(t) => evaluate_tree(t, n),
        }
    }

    /// Inverse of the `Display` form: `tt:<hex>`, `anf:<hex>` or `gp:<prefix>`.
    pub fn parse(s: &str) -> Result<Self> {
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| Error::MalformedGenotype(format!("missing encoding tag in `{s}`")))?;
        match tag.parse::<EncodingKind>()? {
            EncodingKind::Tt => Ok(Genotype::Bits(BitstringGenotype::new(
                BitMode::Tt,
                Bits::from_hex(body)?,
            ))),
            EncodingKind::Anf => Ok(Genotype::Bits(BitstringGenotype::new(
                BitMode::Anf,
                Bits::from_hex(body)?,
            ))),
            EncodingKind::Gp => Ok(Genotype::Tree(body.parse()?)),
        }
    }
}

impl fmt::Display for Genotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Genotype::Bits(g) => write!(f, "{}:{}", self.kind(), g.bits.to_hex()),
            Genotype::Tree(t) => write!(f, "gp:{t}"),
        }
    }
}
