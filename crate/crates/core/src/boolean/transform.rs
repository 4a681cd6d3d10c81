use super::bits::{word_count, AnfVector, Bits, TruthTable, PATTERN};
use crate::error::{Error, Result};

/// Walsh-Hadamard spectrum `W_f(a)` for every mask `a`, in table index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    coeffs: Vec<i32>,
}

impl WalshSpectrum {
    /// Wraps raw coefficients. Only the length is checked, so this also
    /// accepts vectors that are not the spectrum of any Boolean function.
    pub fn new(coeffs: Vec<i32>) -> Result<Self> {
        let len = coeffs.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        Ok(WalshSpectrum {
            n: len.trailing_zeros(),
            coeffs,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn max_abs(&self) -> u32 {
        self.coeffs
            .iter()
            .map(|c| c.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Number of masks attaining the maximal absolute coefficient.
    pub fn max_abs_count(&self) -> usize {
        let m = self.max_abs();
        self.coeffs.iter().filter(|c| c.unsigned_abs() == m).count()
    }

    /// Sorted distinct signed coefficient values.
    pub fn distinct_values(&self) -> Vec<i32> {
        let mut v = self.coeffs.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn distinct_count(&self) -> usize {
        let (Some(&lo), Some(&hi)) = (self.coeffs.iter().min(), self.coeffs.iter().max()) else {
            return 0;
        };
        let span = (i64::from(hi) - i64::from(lo)) as usize + 1;
        if span > 4 * self.coeffs.len() + 64 {
            return self.distinct_values().len();
        }
        let mut seen = vec![0u64; span.div_ceil(64)];
        let mut count = 0;
        for &c in &self.coeffs {
            let k = (i64::from(c) - i64::from(lo)) as usize;
            let bit = 1u64 << (k % 64);
            if seen[k / 64] & bit == 0 {
                seen[k / 64] |= bit;
                count += 1;
            }
        }
        count
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|&c| i64::from(c) * i64::from(c))
            .sum()
    }
}

/// Fast Walsh-Hadamard transform, `O(n 2^n)`.
pub fn walsh_transform(tt: &TruthTable) -> WalshSpectrum {
    let len = tt.len();
    let mut c: Vec<i32> = Vec::with_capacity(len);
    for &w in tt.words() {
        let take = len.min(64);
        c.extend((0..take).map(|b| 1 - 2 * ((w >> b) & 1) as i32));
    }
    let mut h = 1;
    while h < len {
        for block in c.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h <<= 1;
    }
    WalshSpectrum {
        n: tt.n(),
        coeffs: c,
    }
}

fn mobius_in_place(bits: &mut Bits) {
    let n = bits.n();
    let words = bits.words_mut();
    for (k, pattern) in PATTERN.iter().enumerate().take(n.min(6) as usize) {
        let shift = 1u32 << k;
        let low = !pattern;
        for w in words.iter_mut() {
            *w ^= (*w & low) << shift;
        }
    }
    for k in 6..n {
        let step = 1usize << (k - 6);
        for j in 0..word_count(n) {
            if j & step != 0 {
                words[j] ^= words[j ^ step];
            }
        }
    }
}

/// Binary Möbius transform `g(a) = XOR_{x covered by a} v(x)`. It is an
/// involution and maps truth tables to ANF coefficients and back.
pub fn mobius_transform(v: &Bits) -> Bits {
    let mut out = v.clone();
    mobius_in_place(&mut out);
    out
}

/// Möbius transform on an unpacked vector; rejects lengths that are not a
/// power of two.
pub fn mobius_transform_slice(v: &[bool]) -> Result<Vec<bool>> {
    let bits = Bits::from_bools(v)?;
    Ok(mobius_transform(&bits).to_bools())
}

impl TruthTable {
    pub fn to_anf(&self) -> AnfVector {
        AnfVector::new(mobius_transform(self.as_bits()))
    }
}

impl AnfVector {
    pub fn to_truth_table(&self) -> TruthTable {
        TruthTable::new(mobius_transform(self.as_bits()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(bits: &[u8]) -> TruthTable {
        TruthTable::from_binary(bits).unwrap()
    }

    #[test]
    fn walsh_of_constant_zero() {
        assert_eq!(walsh_transform(&tt(&[0, 0, 0, 0])).coeffs(), &[4, 0, 0, 0]);
    }

    #[test]
    fn walsh_of_and() {
        // f = x1 x2; hand-evaluated definitional sums
        assert_eq!(walsh_transform(&tt(&[0, 0, 0, 1])).coeffs(), &[2, 2, 2, -2]);
    }

    #[test]
    fn walsh_of_bent_is_flat() {
        let f = TruthTable::from_hex("111e").unwrap();
        let w = walsh_transform(&f);
        assert!(w.coeffs().iter().all(|&c| c == 4 || c == -4));
        assert_eq!(w.sum_of_squares(), 256);
    }

    #[test]
    fn distinct_count_matches_sorted_values() {
        let wide = WalshSpectrum::new(vec![-1000, 3, 3, 1000]).unwrap();
        assert_eq!(wide.distinct_count(), 3);
        let narrow = WalshSpectrum::new(vec![4, -4, 0, 4, 4, 0, -4, 12]).unwrap();
        assert_eq!(narrow.distinct_count(), narrow.distinct_values().len());
        assert_eq!(narrow.distinct_count(), 4);
    }

    #[test]
    fn walsh_multiword() {
        // n = 7 spans two words; constant one gives W(0) = -128
        let f = TruthTable::from_fn(7, |_| true).unwrap();
        let w = walsh_transform(&f);
        assert_eq!(w.coeffs()[0], -128);
        assert!(w.coeffs()[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn mobius_examples() {
        let zero = Bits::zeros(3).unwrap();
        assert_eq!(mobius_transform(&zero), zero);
        let one = Bits::from_binary(&[1, 0, 0, 0]).unwrap();
        assert_eq!(mobius_transform(&one).to_bools(), vec![true; 4]);
    }

    #[test]
    fn mobius_rejects_bad_length() {
        assert!(matches!(
            mobius_transform_slice(&[true; 6]),
            Err(Error::NotPowerOfTwo(6))
        ));
    }

    #[test]
    fn mobius_multiword_single_monomial() {
        // h(a) = 1 only at a = all-ones: f is the AND of all eight variables
        let mut anf = Bits::zeros(8).unwrap();
        anf.set(255, true);
        let f = mobius_transform(&anf);
        assert_eq!(f.weight(), 1);
        assert!(f.get(255));
    }

    #[test]
    fn spectrum_rejects_bad_length() {
        assert!(WalshSpectrum::new(vec![0; 3]).is_err());
        assert_eq!(WalshSpectrum::new(vec![0; 8]).unwrap().n(), 3);
    }
}
