use rand::seq::SliceRandom;
use rand::Rng;

use crate::boolean::Bits;
use crate::encodings::BitstringGenotype;
use crate::error::{Error, Result};

/// Inverts the bit at `pos`.
pub fn bit_flip_at(g: &BitstringGenotype, pos: usize) -> BitstringGenotype {
    let mut out = g.clone();
    out.bits.flip(pos);
    out
}

/// Inverts one uniformly chosen bit.
pub fn bit_flip_mutation<R: Rng + ?Sized>(g: &BitstringGenotype, rng: &mut R) -> BitstringGenotype {
    bit_flip_at(g, rng.gen_range(0..g.bits.len()))
}

/// Uniformly permutes positions `lo..=hi`.
pub fn shuffle_range<R: Rng + ?Sized>(
    g: &BitstringGenotype,
    lo: usize,
    hi: usize,
    rng: &mut R,
) -> BitstringGenotype {
    debug_assert!(lo <= hi && hi < g.bits.len());
    let mut segment: Vec<bool> = (lo..=hi).map(|i| g.bits.get(i)).collect();
    segment.shuffle(rng);
    let mut out = g.clone();
    for (k, v) in segment.into_iter().enumerate() {
        out.bits.set(lo + k, v);
    }
    out
}

/// Shuffles the substring between two uniformly drawn positions.
pub fn shuffle_mutation<R: Rng + ?Sized>(g: &BitstringGenotype, rng: &mut R) -> BitstringGenotype {
    let len = g.bits.len();
    let i = rng.gen_range(0..len);
    let j = rng.gen_range(0..len);
    shuffle_range(g, i.min(j), i.max(j), rng)
}

fn check_lengths(a: &BitstringGenotype, b: &BitstringGenotype) -> Result<()> {
    if a.bits.len() != b.bits.len() {
        return Err(Error::LengthMismatch {
            left: a.bits.len(),
            right: b.bits.len(),
        });
    }
    Ok(())
}

/// `a[..cut] ++ b[cut..]`.
pub fn one_point_at(
    a: &BitstringGenotype,
    b: &BitstringGenotype,
    cut: usize,
) -> Result<BitstringGenotype> {
    check_lengths(a, b)?;
    let words = a
        .bits
        .words()
        .iter()
        .zip(b.bits.words())
        .enumerate()
        .map(|(j, (&wa, &wb))| {
            let start = 64 * j;
            if start + 64 <= cut {
                wa
            } else if start >= cut {
                wb
            } else {
                let mask = (1u64 << (cut - start)) - 1;
                (wa & mask) | (wb & !mask)
            }
        })
        .collect();
    Ok(BitstringGenotype::new(
        a.mode,
        Bits::from_words(a.n(), words)?,
    ))
}

/// One-point crossover with the cut uniform in `[1, len-1]`.
pub fn one_point_crossover<R: Rng + ?Sized>(
    a: &BitstringGenotype,
    b: &BitstringGenotype,
    rng: &mut R,
) -> Result<BitstringGenotype> {
    check_lengths(a, b)?;
    let cut = rng.gen_range(1..a.bits.len());
    one_point_at(a, b, cut)
}

/// Each child bit copied from either parent with probability one half.
pub fn uniform_crossover<R: Rng + ?Sized>(
    a: &BitstringGenotype,
    b: &BitstringGenotype,
    rng: &mut R,
) -> Result<BitstringGenotype> {
    check_lengths(a, b)?;
    let words = a
        .bits
        .words()
        .iter()
        .zip(b.bits.words())
        .map(|(&wa, &wb)| {
            let pick: u64 = rng.gen();
            (wa & pick) | (wb & !pick)
        })
        .collect();
    Ok(BitstringGenotype::new(
        a.mode,
        Bits::from_words(a.n(), words)?,
    ))
}
