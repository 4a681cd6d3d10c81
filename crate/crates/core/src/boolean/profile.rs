use std::fmt;

use serde::{Deserialize, Serialize};

use super::transform::WalshSpectrum;

/// Shape of a Walsh-Hadamard spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpectrumKind {
    /// All coefficients `±2^(n/2)`, `n` even.
    Bent,
    /// Values within `{0, ±2^lambda}`; `2^lambda` is the amplitude.
    Plateaued {
        lambda: u32,
    },
    /// Exactly `{0, ±2^lambda1, ±2^lambda2}` with `lambda1 < lambda2`.
    /// The exponents are reported as found, with no range restriction.
    FiveValued {
        lambda1: u32,
        lambda2: u32,
    },
    Other {
        distinct: usize,
    },
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpectrumKind::Bent => f.write_str("bent"),
            SpectrumKind::Plateaued { lambda } => write!(f, "plateaued (amplitude 2^{lambda})"),
            SpectrumKind::FiveValued { lambda1, lambda2 } => {
                write!(f, "five-valued (0, ±2^{lambda1}, ±2^{lambda2})")
            }
            SpectrumKind::Other { distinct } => write!(f, "other ({distinct} distinct values)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumProfile {
    #[serde(flatten)]
    pub kind: SpectrumKind,
    pub distinct_values: Vec<i32>,
}

impl SpectrumProfile {
    pub fn is_five_valued(&self) -> bool {
        matches!(self.kind, SpectrumKind::FiveValued { .. })
    }
}

fn log2_exact(v: u32) -> Option<u32> {
    v.is_power_of_two().then(|| v.trailing_zeros())
}

pub fn classify_spectrum(spectrum: &WalshSpectrum) -> SpectrumProfile {
    let distinct = spectrum.distinct_values();
    let n = spectrum.n();

    let mut mags: Vec<u32> = distinct
        .iter()
        .filter(|&&v| v != 0)
        .map(|v| v.unsigned_abs())
        .collect();
    mags.sort_unstable();
    mags.dedup();

    let kind = if n.is_multiple_of(2)
        && !distinct.is_empty()
        && distinct.iter().all(|v| v.unsigned_abs() == 1 << (n / 2))
    {
        SpectrumKind::Bent
    } else if mags.len() == 1 && log2_exact(mags[0]).is_some() {
        SpectrumKind::Plateaued {
            lambda: mags[0].trailing_zeros(),
        }
    } else if distinct.len() == 5
        && distinct.contains(&0)
        && mags.len() == 2
        && mags.iter().all(|&m| log2_exact(m).is_some())
    {
        // five values, zero and two magnitudes force both signs of each
        SpectrumKind::FiveValued {
            lambda1: mags[0].trailing_zeros(),
            lambda2: mags[1].trailing_zeros(),
        }
    } else {
        SpectrumKind::Other {
            distinct: distinct.len(),
        }
    };

    SpectrumProfile {
        kind,
        distinct_values: distinct,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A length-2^n vector realising the given values (not a real spectrum).
    fn synthetic(n: u32, values: &[i32]) -> WalshSpectrum {
        let len = 1usize << n;
        let coeffs = (0..len).map(|i| values[i % values.len()]).collect();
        WalshSpectrum::new(coeffs).unwrap()
    }

    #[test]
    fn bent() {
        let p = classify_spectrum(&synthetic(4, &[4, -4]));
        assert_eq!(p.kind, SpectrumKind::Bent);
        assert_eq!(p.distinct_values, vec![-4, 4]);
    }

    #[test]
    fn plateaued() {
        let p = classify_spectrum(&synthetic(5, &[0, 8, -8]));
        assert_eq!(p.kind, SpectrumKind::Plateaued { lambda: 3 });
        // constant function: {0, 2^n}
        let p = classify_spectrum(&synthetic(3, &[8, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(p.kind, SpectrumKind::Plateaued { lambda: 3 });
    }

    #[test]
    fn five_valued() {
        let p = classify_spectrum(&synthetic(5, &[0, 4, -4, 8, -8]));
        assert_eq!(
            p.kind,
            SpectrumKind::FiveValued {
                lambda1: 2,
                lambda2: 3
            }
        );
        assert!(p.is_five_valued());
    }

    #[test]
    fn five_values_of_wrong_shape_are_other() {
        // magnitude 12 is not a power of two
        let p = classify_spectrum(&synthetic(5, &[0, 4, -4, 12, -12]));
        assert_eq!(p.kind, SpectrumKind::Other { distinct: 5 });
        // no zero
        let p = classify_spectrum(&synthetic(5, &[4, -4, 8, -8, 16]));
        assert_eq!(p.kind, SpectrumKind::Other { distinct: 5 });
        // asymmetric signs
        let p = classify_spectrum(&synthetic(5, &[0, 4, -4, 8, 16]));
        assert_eq!(p.kind, SpectrumKind::Other { distinct: 5 });
        let p = classify_spectrum(&synthetic(5, &[0, 4, -4, 8]));
        assert_eq!(p.kind, SpectrumKind::Other { distinct: 4 });
    }

    #[test]
    fn odd_n_flat_spectrum_is_not_bent() {
        let p = classify_spectrum(&synthetic(3, &[4, -4]));
        assert_eq!(p.kind, SpectrumKind::Plateaued { lambda: 2 });
    }
}
