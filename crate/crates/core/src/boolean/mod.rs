//! Exact spectral analysis of Boolean functions.
//!
//! Every representation indexes inputs the same way: the input vector
//! `(x1, ..., xn)` maps to index `sum(xi * 2^(n-i))`, so `x1` is the most
//! significant index bit.

pub(crate) mod bits;
mod profile;
mod properties;
mod transform;

pub use bits::{AnfVector, Bits, TruthTable, MAX_VARS};
pub use profile::{classify_spectrum, SpectrumKind, SpectrumProfile};
pub use properties::{
    algebraic_degree, balancedness_deficit, brute_force_nonlinearity, nonlinearity,
    BRUTE_FORCE_MAX_VARS,
};
pub use transform::{mobius_transform, mobius_transform_slice, walsh_transform, WalshSpectrum};
