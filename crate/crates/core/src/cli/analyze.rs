use std::fmt;

use serde::Serialize;

use crate::boolean::{
    algebraic_degree, balancedness_deficit, classify_spectrum, nonlinearity, walsh_transform,
    SpectrumProfile, TruthTable,
};
use crate::error::{Error, Result};
use crate::fitness::{fitness1, fitness2, pen};

/// Cryptographic profile of one function.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Analysis {
    pub n: u32,
    pub truth_table: String,
    pub weight: u32,
    pub balanced: bool,
    pub deficit: u32,
    pub nonlinearity: u32,
    pub algebraic_degree: u32,
    pub max_abs_walsh: u32,
    pub max_abs_count: usize,
    pub pen: usize,
    pub fitness1: f64,
    pub fitness2: f64,
    pub profile: SpectrumProfile,
}

/// Parses a hex truth table (see [`TruthTable::to_hex`]) and reports its
/// properties. When `n` is given the string length must match it.
pub fn analyze(hex: &str, n: Option<u32>) -> Result<Analysis> {
    let tt = TruthTable::from_hex(hex)?;
    if let Some(n) = n {
        if n < 2 {
            return Err(Error::Hex(format!("n={n}: hex tables need n >= 2")));
        }
        if tt.n() != n {
            return Err(Error::Hex(format!(
                "{} hex digits encode n={}, expected {} digits for n={n}",
                hex.trim().len(),
                tt.n(),
                1usize << (n - 2)
            )));
        }
    }
    let w = walsh_transform(&tt);
    Ok(Analysis {
        n: tt.n(),
        truth_table: tt.to_hex(),
        weight: tt.weight(),
        balanced: tt.is_balanced(),
        deficit: balancedness_deficit(&tt),
        nonlinearity: nonlinearity(&w),
        algebraic_degree: algebraic_degree(&tt.to_anf()),
        max_abs_walsh: w.max_abs(),
        max_abs_count: w.max_abs_count(),
        pen: pen(&w),
        fitness1: fitness1(&tt, &w).value,
        fitness2: fitness2(&tt, &w).value,
        profile: classify_spectrum(&w),
    })
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n                 {}", self.n)?;
        writeln!(f, "truth table       {}", self.truth_table)?;
        writeln!(f, "weight            {}", self.weight)?;
        if self.balanced {
            writeln!(f, "balanced          yes")?;
        } else {
            writeln!(f, "balanced          no (deficit {})", self.deficit)?;
        }
        writeln!(f, "nonlinearity      {}", self.nonlinearity)?;
        writeln!(f, "algebraic degree  {}", self.algebraic_degree)?;
        writeln!(
            f,
            "max |W|           {} (x{})",
            self.max_abs_walsh, self.max_abs_count
        )?;
        writeln!(f, "distinct values   {:?}", self.profile.distinct_values)?;
        writeln!(f, "profile           {}", self.profile.kind)?;
        writeln!(f, "pen               {}", self.pen)?;
        writeln!(f, "fitness1          {}", self.fitness1)?;
        writeln!(f, "fitness2          {}", self.fitness2)
    }
}
