//! Reference implementations written straight from the definitions. They
//! share no code with the library and are slow on purpose.
#![allow(dead_code)]

use fivevalued::encodings::{GpTree, Node, Op};
use rand::Rng;

pub fn dot(a: usize, x: usize) -> bool {
    (a & x).count_ones() % 2 == 1
}

/// `W(a) = sum_x (-1)^(f(x) + a.x)`
pub fn naive_walsh(f: &[bool]) -> Vec<i64> {
    (0..f.len())
        .map(|a| {
            (0..f.len())
                .map(|x| if f[x] ^ dot(a, x) { -1 } else { 1 })
                .sum()
        })
        .collect()
}

/// ANF coefficient of monomial `u` is the XOR of `f(x)` over `x` covered by `u`.
pub fn naive_mobius(f: &[bool]) -> Vec<bool> {
    (0..f.len())
        .map(|u| {
            (0..f.len())
                .filter(|&x| x & !u == 0)
                .fold(false, |acc, x| acc ^ f[x])
        })
        .collect()
}

/// Minimum Hamming distance to the `2^(n+1)` affine functions.
pub fn naive_nonlinearity(f: &[bool]) -> u32 {
    let mut best = u32::MAX;
    for a in 0..f.len() {
        for c in [false, true] {
            let d = (0..f.len()).filter(|&x| f[x] != (dot(a, x) ^ c)).count() as u32;
            best = best.min(d);
        }
    }
    best
}

pub fn weight(f: &[bool]) -> usize {
    f.iter().filter(|&&b| b).count()
}

pub fn distinct(w: &[i64]) -> Vec<i64> {
    let mut v = w.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Number of coefficients whose magnitude is not 0 or one of the two
/// allowed magnitudes for `n`.
pub fn naive_pen(w: &[i64], n: u32) -> usize {
    let allowed: [i64; 2] = if n % 2 == 1 {
        [1 << (n / 2), 1 << n.div_ceil(2)]
    } else {
        [1 << (n / 2), 1 << (n / 2 + 1)]
    };
    w.iter()
        .filter(|&&c| c != 0 && !allowed.contains(&c.abs()))
        .count()
}

/// `x_i` is the `i`-th most significant of the `n` index bits.
pub fn var_value(n: u32, i: u8, x: usize) -> bool {
    (x >> (n - i as u32)) & 1 == 1
}

/// One input at a time, recursing over the tree.
pub fn scalar_eval(tree: &GpTree, n: u32) -> Vec<bool> {
    fn at(nodes: &[Node], pos: &mut usize, n: u32, x: usize) -> bool {
        let node = nodes[*pos];
        *pos += 1;
        match node {
            Node::Var(i) => var_value(n, i, x),
            Node::Op(op) => {
                let args: Vec<bool> = (0..op.arity()).map(|_| at(nodes, pos, n, x)).collect();
                match op {
                    Op::Or => args[0] || args[1],
                    Op::Xor => args[0] != args[1],
                    Op::And => args[0] && args[1],
                    Op::And2 => args[0] && !args[1],
                    Op::Xnor => args[0] == args[1],
                    Op::If => {
                        if args[0] {
                            args[1]
                        } else {
                            args[2]
                        }
                    }
                    Op::Not => !args[0],
                }
            }
        }
    }
    (0..1usize << n)
        .map(|x| {
            let mut pos = 0;
            at(tree.nodes(), &mut pos, n, x)
        })
        .collect()
}

pub fn random_table<R: Rng>(n: u32, rng: &mut R) -> Vec<bool> {
    (0..1usize << n).map(|_| rng.gen()).collect()
}

pub fn random_balanced<R: Rng>(n: u32, rng: &mut R) -> Vec<bool> {
    use rand::seq::SliceRandom;
    let len = 1usize << n;
    let mut f: Vec<bool> = (0..len).map(|x| x < len / 2).collect();
    f.shuffle(rng);
    f
}

/// Random function of algebraic degree at most two.
pub fn random_quadratic<R: Rng>(n: u32, rng: &mut R) -> Vec<bool> {
    let len = 1usize << n;
    let anf: Vec<bool> = (0..len).map(|u| u.count_ones() <= 2 && rng.gen()).collect();
    // the Mobius transform is its own inverse
    naive_mobius(&anf)
}

/// `x_1 ? g : h` for random quadratics `g`, `h` on the remaining variables.
/// Such concatenations often have a spectrum with two nonzero magnitudes.
pub fn random_quadratic_pair<R: Rng>(n: u32, rng: &mut R) -> Vec<bool> {
    let mut f = random_quadratic(n - 1, rng);
    f.extend(random_quadratic(n - 1, rng));
    f
}
