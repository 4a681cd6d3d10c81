use std::fmt;
use std::str::FromStr;

use crate::boolean::bits::{tail_mask, word_count, PATTERN};
use crate::boolean::{Bits, TruthTable};
use crate::error::{Error, Result};

/// GP function set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Or,
    Xor,
    And,
    /// `a AND NOT b`
    And2,
    Xnor,
    /// `IF(a, b, c)` is `b` where `a` holds, `c` elsewhere.
    If,
    Not,
}

impl Op {
    pub const ALL: [Op; 7] = [
        Op::Or,
        Op::Xor,
        Op::And,
        Op::And2,
        Op::Xnor,
        Op::If,
        Op::Not,
    ];

    pub fn arity(self) -> usize {
        match self {
            Op::Not => 1,
            Op::If => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Op::Or => "OR",
            Op::Xor => "XOR",
            Op::And => "AND",
            Op::And2 => "AND2",
            Op::Xnor => "XNOR",
            Op::If => "IF",
            Op::Not => "NOT",
        }
    }

    pub fn from_name(name: &str) -> Option<Op> {
        Op::ALL
            .into_iter()
            .find(|op| op.name().eq_ignore_ascii_case(name))
    }

    /// Word-level semantics; `args` in child order.
    #[inline]
    pub fn apply(self, args: &[u64]) -> u64 {
        match self {
            Op::Or => args[0] | args[1],
            Op::Xor => args[0] ^ args[1],
            Op::And => args[0] & args[1],
            Op::And2 => args[0] & !args[1],
            Op::Xnor => !(args[0] ^ args[1]),
            Op::If => (args[0] & args[1]) | (!args[0] & args[2]),
            Op::Not => !args[0],
        }
    }
}

/// A tree node: an operator or an input variable `x_i`, `i >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Op(Op),
    Var(u8),
}

impl Node {
    #[inline]
    pub fn arity(self) -> usize {
        match self {
            Node::Op(op) => op.arity(),
            Node::Var(_) => 0,
        }
    }
}

/// A syntax tree stored in prefix order. Trees are never modified in place;
/// variation operators build new ones.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GpTree {
    nodes: Vec<Node>,
}

impl GpTree {
    /// Checks that `nodes` is exactly one well-formed prefix expression.
    pub fn from_nodes(nodes: Vec<Node>) -> Result<Self> {
        let mut open = 1usize;
        for (i, node) in nodes.iter().enumerate() {
            if open == 0 {
                return Err(Error::MalformedGenotype(format!(
                    "trailing nodes after position {i}"
                )));
            }
            if let Node::Var(0) = node {
                return Err(Error::MalformedGenotype("variable index 0".into()));
            }
            open = open - 1 + node.arity();
        }
        if open != 0 {
            return Err(Error::MalformedGenotype(format!(
                "{open} missing operand(s)"
            )));
        }
        Ok(GpTree { nodes })
    }

    pub(crate) fn from_nodes_unchecked(nodes: Vec<Node>) -> Self {
        debug_assert!(GpTree::from_nodes(nodes.clone()).is_ok());
        GpTree { nodes }
    }

    pub fn leaf(var: u8) -> Self {
        GpTree::from_nodes_unchecked(vec![Node::Var(var)])
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Exclusive end of the subtree rooted at `i`.
    pub fn subtree_end(&self, i: usize) -> usize {
        let mut open = 1usize;
        let mut j = i;
        while open > 0 {
            open = open - 1 + self.nodes[j].arity();
            j += 1;
        }
        j
    }

    pub fn subtree(&self, i: usize) -> &[Node] {
        &self.nodes[i..self.subtree_end(i)]
    }

    pub fn subtree_size(&self, i: usize) -> usize {
        self.subtree_end(i) - i
    }

    /// `subtree_end` of every position, computed in one pass.
    pub fn subtree_ends(&self) -> Vec<usize> {
        let mut ends = vec![0; self.nodes.len()];
        // ends of the complete subtrees to the right, nearest on top
        let mut stack: Vec<usize> = Vec::new();
        for (i, node) in self.nodes.iter().enumerate().rev() {
            let end = match node.arity() {
                0 => i + 1,
                a => {
                    let last = stack.len() - a;
                    let e = stack[last];
                    stack.truncate(last);
                    e
                }
            };
            ends[i] = end;
            stack.push(end);
        }
        ends
    }

    /// Start positions of the children of node `i`.
    pub fn children(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes[i].arity());
        let mut j = i + 1;
        for _ in 0..self.nodes[i].arity() {
            out.push(j);
            j = self.subtree_end(j);
        }
        out
    }

    /// Depth of every node; the root sits at depth 0.
    pub fn node_depths(&self) -> Vec<u32> {
        let mut depths = Vec::with_capacity(self.nodes.len());
        self.walk_depths(|d| depths.push(d));
        depths
    }

    fn walk_depths(&self, mut visit: impl FnMut(u32)) {
        // remaining child slots per open ancestor, with that ancestor's depth
        let mut stack: Vec<(usize, u32)> = Vec::with_capacity(16);
        for node in &self.nodes {
            let d = match stack.last_mut() {
                Some((slots, depth)) => {
                    *slots -= 1;
                    *depth + 1
                }
                None => 0,
            };
            while matches!(stack.last(), Some((0, _))) {
                stack.pop();
            }
            visit(d);
            if node.arity() > 0 {
                stack.push((node.arity(), d));
            }
        }
    }

    /// Longest root-to-leaf edge count; a bare leaf has depth 0.
    pub fn depth(&self) -> u32 {
        let mut max = 0;
        self.walk_depths(|d| max = max.max(d));
        max
    }

    pub fn max_var(&self) -> u8 {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Var(v) => Some(*v),
                Node::Op(_) => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// New tree with the subtree at `i` replaced by `replacement`, which must
    /// itself be a complete prefix expression.
    pub fn replace_subtree(&self, i: usize, replacement: &[Node]) -> GpTree {
        let end = self.subtree_end(i);
        let mut nodes = Vec::with_capacity(self.nodes.len() - (end - i) + replacement.len());
        nodes.extend_from_slice(&self.nodes[..i]);
        nodes.extend_from_slice(replacement);
        nodes.extend_from_slice(&self.nodes[end..]);
        GpTree::from_nodes_unchecked(nodes)
    }

    fn fmt_at(&self, i: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.nodes[i] {
            Node::Var(v) => write!(f, "x{v}"),
            Node::Op(op) => {
                write!(f, "{}(", op.name())?;
                for (k, c) in self.children(i).into_iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    self.fmt_at(c, f)?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for GpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(0, f)
    }
}

impl fmt::Debug for GpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GpTree({self})")
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    nodes: Vec<Node>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::MalformedGenotype(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<()> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected operator or variable"));
        }
        let word = &rest[..len];
        self.pos += len;
        if let Some(op) = Op::from_name(word) {
            self.nodes.push(Node::Op(op));
            self.expect('(')?;
            for k in 0..op.arity() {
                if k > 0 {
                    self.expect(',')?;
                }
                self.expr()?;
            }
            self.expect(')')
        } else if let Some(idx) = word.strip_prefix(['x', 'X']) {
            match idx.parse::<u8>() {
                Ok(v) if v >= 1 => {
                    self.nodes.push(Node::Var(v));
                    Ok(())
                }
                _ => Err(self.err(&format!("bad variable `{word}`"))),
            }
        } else {
            Err(Error::UnknownOperator(word.to_string()))
        }
    }
}

impl FromStr for GpTree {
    type Err = Error;

    /// Parses prefix notation such as `XOR(AND(x1,x2),x3)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s,
            pos: 0,
            nodes: Vec::new(),
        };
        p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        GpTree::from_nodes(p.nodes)
    }
}

#[inline]
fn projection_word(n: u32, var: u8, word: usize) -> u64 {
    let k = n - var as u32;
    if k < 6 {
        PATTERN[k as usize]
    } else if (word >> (k - 6)) & 1 == 1 {
        !0
    } else {
        0
    }
}

/// Bitsliced evaluation: each node produces all `2^n` outputs at once, so the
/// tree is walked a single time.
pub fn evaluate_tree(tree: &GpTree, n: u32) -> Result<TruthTable> {
    let max_var = tree.max_var();
    if max_var as u32 > n {
        return Err(Error::VariableOutOfRange {
            index: max_var as u32,
            n,
        });
    }
    let words = word_count(n);
    let mut out = Vec::with_capacity(words);

    if words == 1 {
        let mut stack: Vec<u64> = Vec::with_capacity(tree.len());
        for node in tree.nodes.iter().rev() {
            match *node {
                Node::Var(v) => stack.push(projection_word(n, v, 0)),
                Node::Op(op) => {
                    let a = op.arity();
                    let base = stack.len() - a;
                    let mut args = [0u64; 3];
                    for (k, slot) in args.iter_mut().take(a).enumerate() {
                        // last pushed is the first child
                        *slot = stack[stack.len() - 1 - k];
                    }
                    let v = op.apply(&args[..a]);
                    stack.truncate(base);
                    stack.push(v);
                }
            }
        }
        out.push(stack[0]);
    } else {
        // flat stack of `words`-sized slots
        let mut stack: Vec<u64> = Vec::with_capacity(words * 8);
        let mut top = 0usize;
        for node in tree.nodes.iter().rev() {
            match *node {
                Node::Var(v) => {
                    stack.extend((0..words).map(|j| projection_word(n, v, j)));
                    top += 1;
                }
                Node::Op(op) => {
                    let a = op.arity();
                    let dst = (top - a) * words;
                    let mut args = [0u64; 3];
                    for j in 0..words {
                        for (k, slot) in args.iter_mut().take(a).enumerate() {
                            *slot = stack[(top - 1 - k) * words + j];
                        }
                        stack[dst + j] = op.apply(&args[..a]);
                    }
                    top = top - a + 1;
                    stack.truncate(top * words);
                }
            }
        }
        out.extend_from_slice(&stack[..words]);
    }

    if let Some(last) = out.last_mut() {
        *last &= tail_mask(n);
    }
    Ok(TruthTable::new(Bits::from_words(n, out)?))
}
