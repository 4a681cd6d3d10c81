use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::encodings::{random_tree, DepthLimits, GpTree, Node};
use crate::error::{Error, Result};

/// Tree shape limits used by the GP operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeParams {
    pub n: u32,
    /// Offspring deeper than this are discarded in favour of the first parent.
    pub max_depth: u32,
    /// Depth range of the fresh subtree grown by subtree mutation, further
    /// capped by the room left below the mutation point.
    pub mutation_depth: DepthLimits,
}

impl TreeParams {
    pub fn new(n: u32) -> Self {
        TreeParams {
            n,
            max_depth: 8,
            mutation_depth: DepthLimits { min: 1, max: 4 },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeCrossover {
    /// Swap uniformly chosen subtrees.
    Simple,
    /// Node-wise mixing over the common region.
    Uniform,
    /// Second point chosen so the expected size change is zero.
    SizeFair,
    /// Shared point inside the arity-matched common region.
    OnePoint,
    /// Shared point at any coordinate present in both parents.
    ContextPreserving,
}

impl TreeCrossover {
    pub const ALL: [TreeCrossover; 5] = [
        TreeCrossover::Simple,
        TreeCrossover::Uniform,
        TreeCrossover::SizeFair,
        TreeCrossover::OnePoint,
        TreeCrossover::ContextPreserving,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TreeCrossover::Simple => "simple",
            TreeCrossover::Uniform => "uniform",
            TreeCrossover::SizeFair => "sizefair",
            TreeCrossover::OnePoint => "onepoint",
            TreeCrossover::ContextPreserving => "context",
        }
    }
}

impl fmt::Display for TreeCrossover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeCrossover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "simple" => Ok(TreeCrossover::Simple),
            "uniform" => Ok(TreeCrossover::Uniform),
            "sizefair" => Ok(TreeCrossover::SizeFair),
            "onepoint" => Ok(TreeCrossover::OnePoint),
            "context" | "contextpreserving" => Ok(TreeCrossover::ContextPreserving),
            _ => Err(Error::UnknownOperator(s.to_string())),
        }
    }
}

fn within_depth(child: GpTree, fallback: &GpTree, max_depth: u32) -> GpTree {
    if child.depth() <= max_depth {
        child
    } else {
        fallback.clone()
    }
}

/// Replaces the subtree at `i` with a freshly grown one.
pub fn subtree_mutation_at<R: Rng + ?Sized>(
    t: &GpTree,
    i: usize,
    params: &TreeParams,
    rng: &mut R,
) -> GpTree {
    let node_depth = t.node_depths()[i];
    let room = params.max_depth.saturating_sub(node_depth);
    let max = params.mutation_depth.max.min(room);
    let limits = DepthLimits {
        min: params.mutation_depth.min.min(max),
        max,
    };
    let fresh = random_tree(params.n, limits, rng);
    within_depth(t.replace_subtree(i, fresh.nodes()), t, params.max_depth)
}

pub fn subtree_mutation<R: Rng + ?Sized>(t: &GpTree, params: &TreeParams, rng: &mut R) -> GpTree {
    let i = rng.gen_range(0..t.len());
    subtree_mutation_at(t, i, params, rng)
}

/// Child of `a` with its subtree at `ia` replaced by `b`'s subtree at `ib`.
pub fn swap_at(a: &GpTree, ia: usize, b: &GpTree, ib: usize) -> GpTree {
    a.replace_subtree(ia, b.subtree(ib))
}

/// Pairs of positions sharing a coordinate; with `match_arity` the walk only
/// descends through nodes of equal arity (the one-point common region).
fn shared_points(a: &GpTree, b: &GpTree, match_arity: bool) -> Vec<(usize, usize)> {
    let (ea, eb) = (a.subtree_ends(), b.subtree_ends());
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0usize)];
    while let Some((ia, ib)) = stack.pop() {
        out.push((ia, ib));
        let (ra, rb) = (a.nodes()[ia].arity(), b.nodes()[ib].arity());
        if match_arity && ra != rb {
            continue;
        }
        let first = stack.len();
        stack.extend(child_starts(&ea, ia, ra).zip(child_starts(&eb, ib, rb)));
        stack[first..].reverse();
    }
    out
}

fn child_starts(ends: &[usize], i: usize, arity: usize) -> impl Iterator<Item = usize> + '_ {
    std::iter::successors(Some(i + 1), |&c| Some(ends[c])).take(arity)
}

struct Parents<'t> {
    a: &'t GpTree,
    ends_a: Vec<usize>,
    b: &'t GpTree,
    ends_b: Vec<usize>,
}

fn uniform_walk<R: Rng + ?Sized>(
    p: &Parents<'_>,
    ia: usize,
    ib: usize,
    rng: &mut R,
    out: &mut Vec<Node>,
) {
    let (na, nb) = (p.a.nodes()[ia], p.b.nodes()[ib]);
    if na.arity() == nb.arity() {
        out.push(if rng.gen_bool(0.5) { na } else { nb });
        let arity = na.arity();
        for (ca, cb) in child_starts(&p.ends_a, ia, arity).zip(child_starts(&p.ends_b, ib, arity)) {
            uniform_walk(p, ca, cb, rng, out);
        }
    } else if rng.gen_bool(0.5) {
        out.extend_from_slice(&p.a.nodes()[ia..p.ends_a[ia]]);
    } else {
        out.extend_from_slice(&p.b.nodes()[ib..p.ends_b[ib]]);
    }
}

fn size_fair_point<R: Rng + ?Sized>(b: &GpTree, size: usize, rng: &mut R) -> usize {
    let limit = 1 + 2 * size;
    let mut smaller = Vec::new();
    let mut equal = Vec::new();
    let mut larger = Vec::new();
    for (j, end) in b.subtree_ends().into_iter().enumerate() {
        let s = end - j;
        match s.cmp(&size) {
            std::cmp::Ordering::Less => smaller.push((j, size - s)),
            std::cmp::Ordering::Equal => equal.push(j),
            std::cmp::Ordering::Greater if s <= limit => larger.push((j, s - size)),
            std::cmp::Ordering::Greater => {}
        }
    }
    let pick = |v: &[usize], rng: &mut R| v[rng.gen_range(0..v.len())];
    let pick_pair = |v: &[(usize, usize)], rng: &mut R| v[rng.gen_range(0..v.len())].0;

    if smaller.is_empty() || larger.is_empty() {
        if !equal.is_empty() {
            return pick(&equal, rng);
        }
        // only one side exists; no zero-mean choice is possible
        return if smaller.is_empty() {
            pick_pair(&larger, rng)
        } else {
            pick_pair(&smaller, rng)
        };
    }

    let mean = |v: &[(usize, usize)]| v.iter().map(|p| p.1 as f64).sum::<f64>() / v.len() as f64;
    let (mu_minus, mu_plus) = (mean(&smaller), mean(&larger));
    let p_same = if equal.is_empty() {
        0.0
    } else {
        1.0 / size as f64
    };
    // class weights give zero expected size change
    let p_smaller = (1.0 - p_same) * mu_plus / (mu_plus + mu_minus);
    let r: f64 = rng.gen();
    if r < p_same {
        pick(&equal, rng)
    } else if r < p_same + p_smaller {
        pick_pair(&smaller, rng)
    } else {
        pick_pair(&larger, rng)
    }
}

/// One child of the given crossover variant; offspring over the depth limit
/// are replaced by a copy of `a`.
pub fn tree_crossover<R: Rng + ?Sized>(
    a: &GpTree,
    b: &GpTree,
    variant: TreeCrossover,
    params: &TreeParams,
    rng: &mut R,
) -> GpTree {
    let child = match variant {
        TreeCrossover::Simple => {
            let ia = rng.gen_range(0..a.len());
            let ib = rng.gen_range(0..b.len());
            swap_at(a, ia, b, ib)
        }
        TreeCrossover::Uniform => {
            let mut nodes = Vec::with_capacity(a.len().max(b.len()));
            let parents = Parents {
                a,
                ends_a: a.subtree_ends(),
                b,
                ends_b: b.subtree_ends(),
            };
            uniform_walk(&parents, 0, 0, rng, &mut nodes);
            GpTree::from_nodes_unchecked(nodes)
        }
        TreeCrossover::SizeFair => {
            let ia = rng.gen_range(0..a.len());
            let ib = size_fair_point(b, a.subtree_size(ia), rng);
            swap_at(a, ia, b, ib)
        }
        TreeCrossover::OnePoint | TreeCrossover::ContextPreserving => {
            let points = shared_points(a, b, variant == TreeCrossover::OnePoint);
            let (ia, ib) = points[rng.gen_range(0..points.len())];
            swap_at(a, ia, b, ib)
        }
    };
    within_depth(child, a, params.max_depth)
}
