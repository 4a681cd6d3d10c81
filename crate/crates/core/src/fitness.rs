//! Five-valuedness objectives.
//!
//! Both objectives score an unbalanced function with minus the number of
//! truth-table bits that must change to balance it. Balanced functions are
//! then scored from their spectrum:
//!
//! * `F1`: `1 / (1 + |#values - 5|)` while the spectrum does not have exactly
//!   five distinct values, otherwise `nl + (2^n - #max) / 2^n` where `#max`
//!   counts coefficients of maximal magnitude.
//! * `F2`: `nl / (1 + pen)` where `pen` counts coefficients outside the
//!   allowed five values for the given parity of `n`.
//!
//! Only the ordering of scores matters to the engine.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolean::{balancedness_deficit, nonlinearity, TruthTable, WalshSpectrum};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FitnessKind {
    F1,
    F2,
}

impl FitnessKind {
    pub const ALL: [FitnessKind; 2] = [FitnessKind::F1, FitnessKind::F2];

    pub fn name(self) -> &'static str {
        match self {
            FitnessKind::F1 => "f1",
            FitnessKind::F2 => "f2",
        }
    }

    pub fn evaluate(self, tt: &TruthTable, spectrum: &WalshSpectrum) -> FitnessValue {
        match self {
            FitnessKind::F1 => fitness1(tt, spectrum),
            FitnessKind::F2 => fitness2(tt, spectrum),
        }
    }
}

impl fmt::Display for FitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FitnessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f1" | "1" | "fitness1" => Ok(FitnessKind::F1),
            "f2" | "2" | "fitness2" => Ok(FitnessKind::F2),
            other => Err(Error::Config(format!("unknown fitness `{other}`"))),
        }
    }
}

/// The terms that went into a score. Spectrum terms are absent for
/// unbalanced functions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakdown {
    pub deficit: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonlinearity: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pen: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitnessValue {
    pub value: f64,
    pub breakdown: Breakdown,
}

impl FitnessValue {
    /// Total order on `value`.
    pub fn cmp_value(&self, other: &FitnessValue) -> Ordering {
        self.value.total_cmp(&other.value)
    }
}

fn unbalanced(tt: &TruthTable, spectrum: &WalshSpectrum) -> Option<FitnessValue> {
    debug_assert_eq!(tt.len(), spectrum.coeffs().len());
    debug_assert_eq!(
        i64::from(spectrum.coeffs()[0]),
        tt.len() as i64 - 2 * i64::from(tt.weight()),
        "spectrum does not belong to this truth table"
    );
    let deficit = balancedness_deficit(tt);
    (deficit > 0).then(|| FitnessValue {
        value: -f64::from(deficit),
        breakdown: Breakdown {
            deficit,
            ..Breakdown::default()
        },
    })
}

pub fn fitness1(tt: &TruthTable, spectrum: &WalshSpectrum) -> FitnessValue {
    if let Some(f) = unbalanced(tt, spectrum) {
        return f;
    }
    let distinct = spectrum.distinct_count();
    if distinct != 5 {
        return FitnessValue {
            value: 1.0 / (1.0 + distinct.abs_diff(5) as f64),
            breakdown: Breakdown {
                distinct: Some(distinct),
                ..Breakdown::default()
            },
        };
    }
    let nl = nonlinearity(spectrum);
    let len = spectrum.coeffs().len();
    let max_count = spectrum.max_abs_count();
    FitnessValue {
        value: f64::from(nl) + (len - max_count) as f64 / len as f64,
        breakdown: Breakdown {
            deficit: 0,
            distinct: Some(distinct),
            nonlinearity: Some(nl),
            max_count: Some(max_count),
            pen: None,
        },
    }
}

/// Magnitudes allowed by `pen`: `2^((n-1)/2), 2^((n+1)/2)` for odd `n`,
/// `2^(n/2), 2^(n/2+1)` for even `n`.
pub fn allowed_magnitudes(n: u32) -> (u32, u32) {
    let low = if n % 2 == 1 { (n - 1) / 2 } else { n / 2 };
    (1 << low, 1 << (low + 1))
}

/// Number of coefficients outside `{0, ±low, ±high}`.
pub fn pen(spectrum: &WalshSpectrum) -> usize {
    let (low, high) = allowed_magnitudes(spectrum.n());
    spectrum
        .coeffs()
        .iter()
        .filter(|c| {
            let m = c.unsigned_abs();
            m != 0 && m != low && m != high
        })
        .count()
}

fn f2_score(nl: u32, pen: usize) -> f64 {
    f64::from(nl) / (1.0 + pen as f64)
}

pub fn fitness2(tt: &TruthTable, spectrum: &WalshSpectrum) -> FitnessValue {
    if let Some(f) = unbalanced(tt, spectrum) {
        return f;
    }
    let nl = nonlinearity(spectrum);
    let pen = pen(spectrum);
    FitnessValue {
        value: f2_score(nl, pen),
        breakdown: Breakdown {
            deficit: 0,
            distinct: None,
            nonlinearity: Some(nl),
            max_count: None,
            pen: Some(pen),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{classify_spectrum, walsh_transform};

    // Balanced n = 5 function found by random search: spectrum {0, ±4, ±8},
    // nl 12, twelve coefficients of magnitude 8.
    const N5_FIVE_VALUED: &str = "65e03759";

    fn spectrum_of(hex: &str) -> (TruthTable, WalshSpectrum) {
        let tt = TruthTable::from_hex(hex).unwrap();
        let w = walsh_transform(&tt);
        (tt, w)
    }

    #[test]
    fn unbalanced_penalty() {
        let tt = TruthTable::zeros(3).unwrap();
        let w = walsh_transform(&tt);
        assert_eq!(fitness1(&tt, &w).value, -4.0);
        assert_eq!(fitness2(&tt, &w).value, -4.0);
        assert_eq!(fitness1(&tt, &w).breakdown.deficit, 4);
    }

    #[test]
    fn three_valued_scores_one_third() {
        // near-bent n = 5: x1x2 ^ x3x4 ^ x5 has spectrum {0, ±8}
        let tt = TruthTable::from_fn(5, |x| {
            let v = |i| TruthTable::var(5, i, x);
            (v(1) & v(2)) ^ (v(3) & v(4)) ^ v(5)
        })
        .unwrap();
        let w = walsh_transform(&tt);
        assert_eq!(w.distinct_values(), vec![-8, 0, 8]);
        assert_eq!(fitness1(&tt, &w).value, 1.0 / 3.0);
        // 0 and ±8 are all allowed at n = 5, so F2 reduces to nl
        assert_eq!(fitness2(&tt, &w).value, 12.0);
    }

    #[test]
    fn five_valued_n5() {
        let (tt, w) = spectrum_of(N5_FIVE_VALUED);
        assert!(tt.is_balanced());
        assert_eq!(w.distinct_values(), vec![-8, -4, 0, 4, 8]);
        assert!(classify_spectrum(&w).is_five_valued());
        let f = fitness1(&tt, &w);
        assert_eq!(f.breakdown.max_count, Some(12));
        assert_eq!(f.value, 12.625);
        assert_eq!(fitness2(&tt, &w).value, 12.0);
        assert_eq!(pen(&w), 0);
    }

    #[test]
    fn pen_examples() {
        let mk = |n: u32, vals: &[i32]| {
            let len = 1usize << n;
            WalshSpectrum::new((0..len).map(|i| vals[i % vals.len()]).collect()).unwrap()
        };
        assert_eq!(pen(&mk(5, &[0, 4, -4, 8, -8])), 0);
        let mut c = mk(5, &[0, 4, -4, 8, -8]).coeffs().to_vec();
        c[3] = 16;
        assert_eq!(pen(&WalshSpectrum::new(c).unwrap()), 1);
        assert_eq!(pen(&mk(6, &[8, -8])), 0);
        assert_eq!(allowed_magnitudes(6), (8, 16));
        assert_eq!(allowed_magnitudes(7), (8, 16));
    }

    #[test]
    fn f2_formula() {
        assert_eq!(f2_score(8, 3), 2.0);
        assert_eq!(f2_score(12, 0), 12.0);
    }

    #[test]
    fn parse_kind() {
        assert_eq!("F1".parse::<FitnessKind>().unwrap(), FitnessKind::F1);
        assert_eq!("fitness2".parse::<FitnessKind>().unwrap(), FitnessKind::F2);
        assert!("f3".parse::<FitnessKind>().is_err());
    }
}
