use rand::Rng;
use serde::{Deserialize, Serialize};

use super::tree::{GpTree, Node, Op};
use crate::error::{Error, Result};

/// Inclusive tree-depth range for random generation (root at depth 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthLimits {
    pub min: u32,
    pub max: u32,
}

impl DepthLimits {
    pub fn new(min: u32, max: u32) -> Result<Self> {
        if min > max {
            return Err(Error::Config(format!("depth limits {min} > {max}")));
        }
        Ok(DepthLimits { min, max })
    }
}

impl Default for DepthLimits {
    fn default() -> Self {
        DepthLimits { min: 2, max: 5 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InitMethod {
    Full,
    Grow,
}

fn random_var<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Node {
    Node::Var(rng.gen_range(1..=n) as u8)
}

fn random_op<R: Rng + ?Sized>(rng: &mut R) -> Node {
    Node::Op(Op::ALL[rng.gen_range(0..Op::ALL.len())])
}

fn build<R: Rng + ?Sized>(
    n: u32,
    method: InitMethod,
    min_depth: u32,
    depth_limit: u32,
    depth: u32,
    rng: &mut R,
    out: &mut Vec<Node>,
) {
    let node = if depth >= depth_limit {
        random_var(n, rng)
    } else if depth < min_depth || method == InitMethod::Full {
        random_op(rng)
    } else {
        // grow: uniform over terminals and operators together
        let k = rng.gen_range(0..n as usize + Op::ALL.len());
        if k < n as usize {
            Node::Var(k as u8 + 1)
        } else {
            Node::Op(Op::ALL[k - n as usize])
        }
    };
    out.push(node);
    for _ in 0..node.arity() {
        build(n, method, min_depth, depth_limit, depth + 1, rng, out);
    }
}

/// Tree built by one method to a target depth. Grow trees still contain an
/// operator at every level above `min_depth`, so their depth lies in
/// `[min_depth, depth]`; full trees have depth exactly `depth`.
pub fn generate_tree<R: Rng + ?Sized>(
    n: u32,
    method: InitMethod,
    min_depth: u32,
    depth: u32,
    rng: &mut R,
) -> GpTree {
    debug_assert!(n >= 1 && n <= u8::MAX as u32);
    let mut nodes = Vec::new();
    build(n, method, min_depth.min(depth), depth, 0, rng, &mut nodes);
    GpTree::from_nodes_unchecked(nodes)
}

/// Ramped half-and-half: target depth uniform in the limits, full or grow
/// with equal probability.
pub fn random_tree<R: Rng + ?Sized>(n: u32, limits: DepthLimits, rng: &mut R) -> GpTree {
    let depth = rng.gen_range(limits.min..=limits.max);
    let method = if rng.gen_bool(0.5) {
        InitMethod::Full
    } else {
        InitMethod::Grow
    };
    generate_tree(n, method, limits.min, depth, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::evaluate_tree;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_depth_is_a_leaf() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let t = random_tree(4, DepthLimits::new(0, 0).unwrap(), &mut rng);
            assert_eq!(t.len(), 1);
            assert!(matches!(t.nodes()[0], Node::Var(1..=4)));
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_tree(
            6,
            DepthLimits::default(),
            &mut ChaCha8Rng::seed_from_u64(42),
        );
        let b = random_tree(
            6,
            DepthLimits::default(),
            &mut ChaCha8Rng::seed_from_u64(42),
        );
        assert_eq!(a, b);
    }

    #[test]
    fn depths_stay_within_limits() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let limits = DepthLimits::new(2, 5).unwrap();
        let mut seen = [false; 6];
        for _ in 0..1000 {
            let t = random_tree(7, limits, &mut rng);
            let d = t.depth();
            assert!((2..=5).contains(&d), "depth {d}");
            seen[d as usize] = true;
            assert!(t.max_var() as u32 <= 7);
            evaluate_tree(&t, 7).unwrap();
        }
        assert!(seen[2..=5].iter().all(|&s| s));
    }

    #[test]
    fn full_trees_have_exact_depth() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for d in 0..5 {
            let t = generate_tree(5, InitMethod::Full, 0, d, &mut rng);
            assert_eq!(t.depth(), d);
            assert!(t
                .node_depths()
                .iter()
                .zip(t.nodes())
                .all(|(&nd, node)| (node.arity() == 0) == (nd == d)));
        }
    }

    #[test]
    fn inverted_limits_rejected() {
        assert!(DepthLimits::new(3, 2).is_err());
    }
}
