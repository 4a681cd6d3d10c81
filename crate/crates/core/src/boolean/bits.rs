use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Largest supported variable count.
pub const MAX_VARS: u32 = 20;

/// Index-bit patterns inside one 64-bit word: `PATTERN[k]` has bit `p` set
/// iff bit `k` of `p` is set.
pub(crate) const PATTERN: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// A packed vector of `2^n` bits, 64 entries per word, entry `i` stored in
/// bit `i % 64` of word `i / 64`. Bits past `2^n` in the last word are zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    n: u32,
    words: Vec<u64>,
}

pub(crate) fn word_count(n: u32) -> usize {
    if n < 6 {
        1
    } else {
        1usize << (n - 6)
    }
}

pub(crate) fn tail_mask(n: u32) -> u64 {
    if n < 6 {
        (1u64 << (1u32 << n)) - 1
    } else {
        !0
    }
}

fn check_vars(n: u32) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount(n))
    }
}

impl Bits {
    pub fn zeros(n: u32) -> Result<Self> {
        check_vars(n)?;
        Ok(Bits {
            n,
            words: vec![0; word_count(n)],
        })
    }

    /// Builds from packed words, clearing any bits past `2^n`.
    pub fn from_words(n: u32, mut words: Vec<u64>) -> Result<Self> {
        check_vars(n)?;
        if words.len() != word_count(n) {
            return Err(Error::LengthMismatch {
                left: words.len(),
                right: word_count(n),
            });
        }
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(n);
        }
        Ok(Bits { n, words })
    }

    /// Builds from one value per entry; the length must be a power of two.
    pub fn from_bools(values: &[bool]) -> Result<Self> {
        let len = values.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let mut bits = Bits::zeros(len.trailing_zeros())?;
        for (i, &v) in values.iter().enumerate() {
            if v {
                bits.words[i >> 6] |= 1 << (i & 63);
            }
        }
        Ok(bits)
    }

    /// Same as [`Bits::from_bools`] for 0/1 bytes; any other byte is rejected.
    pub fn from_binary(values: &[u8]) -> Result<Self> {
        let bools = values
            .iter()
            .map(|&v| match v {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::MalformedGenotype(format!(
                    "non-binary entry {other}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Bits::from_bools(&bools)
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len());
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len());
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.iter().collect()
    }

    /// Hex string, most significant nibble first: the string read left to
    /// right lists entries `0, 1, 2, ...`, with entry `4j` the high bit of
    /// nibble `j`. Requires `n >= 2`.
    pub fn to_hex(&self) -> String {
        debug_assert!(self.n >= 2);
        let nibbles = self.len() / 4;
        let mut out = String::with_capacity(nibbles);
        for j in 0..nibbles {
            let mut v = 0u32;
            for b in 0..4 {
                v = (v << 1) | self.get(4 * j + b) as u32;
            }
            out.push(char::from_digit(v, 16).expect("nibble < 16"));
        }
        out
    }

    /// Inverse of [`Bits::to_hex`]. The variable count is taken from the
    /// string length, which must be `2^(n-2)` for some `n >= 2`.
    pub fn from_hex(hex: &str) -> Result<Self> {
        let hex = hex.trim();
        let hex = hex
            .strip_prefix("0x")
            .or_else(|| hex.strip_prefix("0X"))
            .unwrap_or(hex);
        let len = hex.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::Hex(format!("length {len} is not a power of two")));
        }
        let n = len.trailing_zeros() + 2;
        let mut bits = Bits::zeros(n).map_err(|_| Error::Hex(format!("n={n} too large")))?;
        for (j, c) in hex.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::Hex(format!("non-hex character `{c}`")))?;
            for b in 0..4 {
                if (v >> (3 - b)) & 1 == 1 {
                    bits.set(4 * j + b, true);
                }
            }
        }
        Ok(bits)
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits(n={}, ", self.n)?;
        if self.n >= 2 {
            write!(f, "{})", self.to_hex())
        } else {
            write!(f, "{:?})", self.to_bools())
        }
    }
}

/// Truth table of an n-variable Boolean function.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruthTable(Bits);

/// Algebraic normal form coefficients `h(a)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AnfVector(Bits);

macro_rules! bit_newtype {
    ($name:ident) => {
        impl $name {
            pub fn new(bits: Bits) -> Self {
                $name(bits)
            }

            pub fn zeros(n: u32) -> Result<Self> {
                Bits::zeros(n).map($name)
            }

            pub fn from_bools(values: &[bool]) -> Result<Self> {
                Bits::from_bools(values).map($name)
            }

            pub fn from_binary(values: &[u8]) -> Result<Self> {
                Bits::from_binary(values).map($name)
            }

            pub fn from_hex(hex: &str) -> Result<Self> {
                Bits::from_hex(hex).map($name)
            }

            pub fn as_bits(&self) -> &Bits {
                &self.0
            }

            pub fn into_bits(self) -> Bits {
                self.0
            }
        }

        impl Deref for $name {
            type Target = Bits;

            fn deref(&self) -> &Bits {
                &self.0
            }
        }

        impl From<Bits> for $name {
            fn from(bits: Bits) -> Self {
                $name(bits)
            }
        }
    };
}

bit_newtype!(TruthTable);
bit_newtype!(AnfVector);

impl TruthTable {
    /// Builds the table by evaluating `f` on every input index.
    pub fn from_fn(n: u32, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut bits = Bits::zeros(n)?;
        for x in 0..bits.len() {
            if f(x) {
                bits.set(x, true);
            }
        }
        Ok(TruthTable(bits))
    }

    /// Value of variable `x_i` (1-based) at input index `x`.
    #[inline]
    pub fn var(n: u32, i: u32, x: usize) -> bool {
        debug_assert!(1 <= i && i <= n);
        (x >> (n - i)) & 1 == 1
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() as usize == self.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_bits_are_cleared() {
        let b = Bits::from_words(3, vec![!0]).unwrap();
        assert_eq!(b.weight(), 8);
        assert_eq!(b.words()[0], 0xFF);
    }

    #[test]
    fn hex_layout() {
        // x1x2 ^ x3x4 under the x1-most-significant order
        let tt = TruthTable::from_fn(4, |x| {
            let v = |i| TruthTable::var(4, i, x);
            (v(1) & v(2)) ^ (v(3) & v(4))
        })
        .unwrap();
        assert_eq!(tt.to_hex(), "111e");
        assert_eq!(TruthTable::from_hex("111E").unwrap(), tt);
        assert_eq!(TruthTable::from_hex("00").unwrap().n(), 3);
    }

    #[test]
    fn hex_rejects_garbage() {
        assert!(matches!(Bits::from_hex("abc"), Err(Error::Hex(_))));
        assert!(matches!(Bits::from_hex("0g"), Err(Error::Hex(_))));
        assert!(matches!(Bits::from_hex(""), Err(Error::Hex(_))));
    }

    #[test]
    fn from_bools_requires_power_of_two() {
        assert!(matches!(
            Bits::from_bools(&[true, false, true]),
            Err(Error::NotPowerOfTwo(3))
        ));
        assert!(Bits::from_binary(&[0, 2]).is_err());
        assert_eq!(Bits::from_binary(&[0, 1]).unwrap().n(), 1);
    }

    #[test]
    fn variable_count_bounds() {
        assert!(Bits::zeros(0).is_err());
        assert!(Bits::zeros(21).is_err());
        assert_eq!(Bits::zeros(20).unwrap().words().len(), 1 << 14);
    }

    #[test]
    fn var_projection_order() {
        // x1 is the most significant index bit
        let x1: Vec<bool> = (0..4).map(|x| TruthTable::var(2, 1, x)).collect();
        assert_eq!(x1, vec![false, false, true, true]);
    }
}
