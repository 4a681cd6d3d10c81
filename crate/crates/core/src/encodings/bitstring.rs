use rand::Rng;

use crate::boolean::{mobius_transform, Bits, TruthTable};
use crate::error::Result;

/// Whether a bitstring is read as a truth table or as ANF coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BitMode {
    Tt,
    Anf,
}

/// Fixed-length `2^n` bitstring genotype shared by the TT and ANF encodings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitstringGenotype {
    pub mode: BitMode,
    pub bits: Bits,
}

impl BitstringGenotype {
    pub fn new(mode: BitMode, bits: Bits) -> Self {
        BitstringGenotype { mode, bits }
    }

    pub fn n(&self) -> u32 {
        self.bits.n()
    }
}

/// TT genotypes are the table itself; ANF genotypes go through the Möbius
/// transform.
pub fn decode(g: &BitstringGenotype) -> TruthTable {
    match g.mode {
        BitMode::Tt => TruthTable::new(g.bits.clone()),
        BitMode::Anf => TruthTable::new(mobius_transform(&g.bits)),
    }
}

/// Every bit independently uniform.
pub fn random_bitstring<R: Rng + ?Sized>(
    n: u32,
    mode: BitMode,
    rng: &mut R,
) -> Result<BitstringGenotype> {
    let mut bits = Bits::zeros(n)?;
    for w in bits.words_mut() {
        *w = rng.gen();
    }
    let words = bits.words().to_vec();
    Ok(BitstringGenotype::new(mode, Bits::from_words(n, words)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn decode_examples() {
        let tt = Bits::from_binary(&[0, 1, 1, 0]).unwrap();
        let g = BitstringGenotype::new(BitMode::Tt, tt.clone());
        assert_eq!(decode(&g).as_bits(), &tt);

        let anf = Bits::from_binary(&[1, 0, 0, 0]).unwrap();
        let g = BitstringGenotype::new(BitMode::Anf, anf);
        assert_eq!(decode(&g).to_bools(), vec![true; 4]);

        let g = BitstringGenotype::new(BitMode::Anf, Bits::zeros(5).unwrap());
        assert_eq!(decode(&g).weight(), 0);
    }

    #[test]
    fn random_bitstring_is_reproducible() {
        let a = random_bitstring(6, BitMode::Tt, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = random_bitstring(6, BitMode::Tt, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        let one = random_bitstring(1, BitMode::Anf, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(one.bits.len(), 2);
        assert!(one.bits.words()[0] < 4);
    }

    #[test]
    fn random_bitstring_weight_is_near_half() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let draws = 2000;
        let total: u64 = (0..draws)
            .map(|_| {
                random_bitstring(6, BitMode::Tt, &mut rng)
                    .unwrap()
                    .bits
                    .weight() as u64
            })
            .sum();
        let mean = total as f64 / draws as f64;
        // sd of the mean is 4 / sqrt(2000) ~ 0.09
        assert!((mean - 32.0).abs() < 0.5, "mean weight {mean}");
    }
}
