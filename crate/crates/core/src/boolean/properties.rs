use super::bits::{AnfVector, TruthTable};
use super::transform::WalshSpectrum;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`brute_force_nonlinearity`].
pub const BRUTE_FORCE_MAX_VARS: u32 = 12;

/// `2^(n-1) - max|W_f| / 2`.
pub fn nonlinearity(spectrum: &WalshSpectrum) -> u32 {
    let half = 1u32 << (spectrum.n() - 1);
    half - spectrum.max_abs() / 2
}

/// Number of truth-table bits that must change to make `tt` balanced.
pub fn balancedness_deficit(tt: &TruthTable) -> u32 {
    let half = (tt.len() / 2) as u32;
    tt.weight().abs_diff(half)
}

/// Maximum monomial weight with a nonzero ANF coefficient; 0 for the zero
/// function.
pub fn algebraic_degree(anf: &AnfVector) -> u32 {
    let mut degree = 0;
    for (j, &w) in anf.words().iter().enumerate() {
        let mut rest = w;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            degree = degree.max(((j << 6) | b).count_ones());
        }
    }
    degree
}

/// Minimum Hamming distance from `tt` to every affine function `a.x ^ b`,
/// computed literally over all `2^(n+1)` candidates.
pub fn brute_force_nonlinearity(tt: &TruthTable) -> Result<u32> {
    let n = tt.n();
    if n > BRUTE_FORCE_MAX_VARS {
        return Err(Error::OracleTooLarge {
            n,
            max: BRUTE_FORCE_MAX_VARS,
        });
    }
    let len = tt.len();
    let mut best = u32::MAX;
    for a in 0..len {
        let mut dist = 0u32;
        for x in 0..len {
            let linear = (a & x).count_ones() & 1 == 1;
            dist += (tt.get(x) != linear) as u32;
        }
        // b = 0 and b = 1
        best = best.min(dist).min(len as u32 - dist);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::walsh_transform;

    #[test]
    fn nonlinearity_examples() {
        assert_eq!(
            nonlinearity(&WalshSpectrum::new(vec![4, 0, 0, 0]).unwrap()),
            0
        );
        assert_eq!(
            nonlinearity(&WalshSpectrum::new(vec![2, 2, 2, -2]).unwrap()),
            1
        );
        let bent =
            WalshSpectrum::new(vec![4, 4, 4, -4, 4, 4, 4, -4, 4, 4, 4, -4, -4, -4, -4, 4]).unwrap();
        assert_eq!(nonlinearity(&bent), 6);
    }

    #[test]
    fn deficit_examples() {
        assert_eq!(balancedness_deficit(&TruthTable::zeros(3).unwrap()), 4);
        assert_eq!(
            balancedness_deficit(&TruthTable::from_binary(&[1, 1, 1, 0]).unwrap()),
            1
        );
        assert_eq!(
            balancedness_deficit(&TruthTable::from_binary(&[0, 1, 1, 0]).unwrap()),
            0
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(algebraic_degree(&AnfVector::zeros(3).unwrap()), 0);
        assert_eq!(
            algebraic_degree(&AnfVector::from_binary(&[0, 0, 0, 1]).unwrap()),
            2
        );
        assert_eq!(
            algebraic_degree(&AnfVector::from_binary(&[1, 0, 0, 0]).unwrap()),
            0
        );
        let mut top = AnfVector::zeros(9).unwrap().into_bits();
        top.set(511, true);
        assert_eq!(algebraic_degree(&AnfVector::new(top)), 9);
    }

    #[test]
    fn brute_force_examples() {
        let and = TruthTable::from_binary(&[0, 0, 0, 1]).unwrap();
        assert_eq!(brute_force_nonlinearity(&and).unwrap(), 1);
        let bent = TruthTable::from_hex("111e").unwrap();
        assert_eq!(brute_force_nonlinearity(&bent).unwrap(), 6);
        // x1 ^ x3 ^ 1 at n = 3
        let affine = TruthTable::from_fn(3, |x| {
            !(TruthTable::var(3, 1, x) ^ TruthTable::var(3, 3, x))
        })
        .unwrap();
        assert_eq!(brute_force_nonlinearity(&affine).unwrap(), 0);
        assert_eq!(nonlinearity(&walsh_transform(&affine)), 0);
    }

    #[test]
    fn brute_force_rejects_large_n() {
        let big = TruthTable::zeros(13).unwrap();
        assert!(matches!(
            brute_force_nonlinearity(&big),
            Err(Error::OracleTooLarge { n: 13, .. })
        ));
    }
}
