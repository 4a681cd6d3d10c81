//! Evolutionary search for balanced Boolean functions whose Walsh-Hadamard
//! spectrum takes exactly five values `{0, ±2^a, ±2^b}`.
//!
//! The crate is layered bottom-up:
//!
//! * [`boolean`]: packed truth tables, the fast Walsh-Hadamard and Möbius
//!   transforms, nonlinearity, degree and spectrum classification, plus a
//!   brute-force nonlinearity oracle.
//! * [`encodings`]: truth-table, ANF and GP-tree genotypes and their decoding.
//! * [`variation`]: crossover and mutation operators for both genotype kinds.
//! * [`fitness`]: the two five-valuedness objectives.
//! * [`engine`]: the steady-state 3-tournament evolutionary algorithm.
//! * [`cli`]: experiment grids, result artifacts and plot-data export.

pub mod boolean;
pub mod cli;
pub mod encodings;
pub mod engine;
mod error;
pub mod fitness;
pub mod variation;

pub use boolean::{
    algebraic_degree, balancedness_deficit, brute_force_nonlinearity, classify_spectrum,
    mobius_transform, nonlinearity, walsh_transform, AnfVector, Bits, SpectrumKind,
    SpectrumProfile, TruthTable, WalshSpectrum,
};
pub use error::{Error, Result};
