//! Rooted ribbon trees (planar trees with ordered leaves and every vertex of
//! arity at least two), their strata in the associahedron, edge collapse,
//! metric trees, and the term schemas of the A∞-relations.
//!
//! Internal edges are named by their lower vertex: edge `e` joins the `e`-th
//! non-root vertex in preorder to its parent.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::ainfty::{AInfAlgebra, Label};
use crate::F2Sum;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("need at least {min} leaves, got {got}")]
    TooFewLeaves { min: usize, got: usize },
    #[error("tree has {edges} internal edges, no edge {index}")]
    NoSuchEdge { index: usize, edges: usize },
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
    #[error("invalid metric: {0}")]
    Metric(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Vec<Tree>),
}

impl Tree {
    /// One vertex with `n` leaves.
    pub fn corolla(n: usize) -> Tree {
        Tree::Node(vec![Tree::Leaf; n])
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(c) => c.iter().map(Tree::leaves).sum(),
        }
    }

    pub fn vertices(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(c) => 1 + c.iter().map(Tree::vertices).sum::<usize>(),
        }
    }

    pub fn internal_edges(&self) -> usize {
        self.vertices().saturating_sub(1)
    }

    /// Arities of the vertices in preorder.
    pub fn arities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn walk(t: &Tree, out: &mut Vec<usize>) {
            if let Tree::Node(c) = t {
                out.push(c.len());
                c.iter().for_each(|s| walk(s, out));
            }
        }
        walk(self, &mut out);
        out
    }

    /// Every vertex has at least two inputs.
    pub fn is_valid(&self) -> bool {
        match self {
            Tree::Leaf => true,
            Tree::Node(c) => c.len() >= 2 && c.iter().all(Tree::is_valid),
        }
    }

    /// `Σ (val(v) - 3)` with `val(v) = arity + 1`.
    pub fn codim(&self) -> usize {
        self.arities().iter().map(|a| a.saturating_sub(2)).sum()
    }

    pub fn is_trivalent(&self) -> bool {
        self.arities().iter().all(|&a| a == 2)
    }

    /// Collapses internal edge `e`, splicing the children of its lower vertex
    /// into the parent at the vertex's position.
    pub fn collapse(&self, e: usize) -> Result<Tree, TreeError> {
        let edges = self.internal_edges();
        if e >= edges {
            return Err(TreeError::NoSuchEdge { index: e, edges });
        }
        // Preorder index of the vertex to merge, counting the root as 0.
        let mut counter = 0usize;
        fn go(t: &Tree, target: usize, counter: &mut usize) -> Tree {
            match t {
                Tree::Leaf => Tree::Leaf,
                Tree::Node(children) => {
                    *counter += 1;
                    let mut out = Vec::with_capacity(children.len());
                    for c in children {
                        let is_target = matches!(c, Tree::Node(_)) && *counter == target;
                        if is_target {
                            *counter += 1;
                            let Tree::Node(grand) = c else { unreachable!() };
                            for g in grand {
                                out.push(go(g, target, counter));
                            }
                        } else {
                            out.push(go(c, target, counter));
                        }
                    }
                    Tree::Node(out)
                }
            }
        }
        Ok(go(self, e + 1, &mut counter))
    }

    /// Nested bracketing with leaves numbered from 1, e.g. `((1,2),3)`.
    pub fn to_bracketing(&self) -> String {
        let mut next = 1;
        let mut s = String::new();
        fn walk(t: &Tree, next: &mut usize, s: &mut String) {
            match t {
                Tree::Leaf => {
                    s.push_str(&next.to_string());
                    *next += 1;
                }
                Tree::Node(c) => {
                    s.push('(');
                    for (i, x) in c.iter().enumerate() {
                        if i > 0 {
                            s.push(',');
                        }
                        walk(x, next, s);
                    }
                    s.push(')');
                }
            }
        }
        walk(self, &mut next, &mut s);
        s
    }

    /// Parses a bracketing. Leaves must be numbered `1, 2, …` left to right.
    pub fn parse(s: &str) -> Result<Tree, TreeError> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut next_leaf = 1usize;
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        fn err(at: usize, msg: &str) -> TreeError {
            TreeError::Parse { at, msg: msg.into() }
        }
        fn node(
            bytes: &[u8],
            pos: &mut usize,
            next_leaf: &mut usize,
            skip: &dyn Fn(&mut usize),
        ) -> Result<Tree, TreeError> {
            skip(pos);
            match bytes.get(*pos) {
                Some(b'(') => {
                    *pos += 1;
                    let mut children = vec![node(bytes, pos, next_leaf, skip)?];
                    loop {
                        skip(pos);
                        match bytes.get(*pos) {
                            Some(b',') => {
                                *pos += 1;
                                children.push(node(bytes, pos, next_leaf, skip)?);
                            }
                            Some(b')') => {
                                *pos += 1;
                                break;
                            }
                            _ => return Err(err(*pos, "expected `,` or `)`")),
                        }
                    }
                    if children.len() < 2 {
                        return Err(err(*pos, "a vertex needs at least two inputs"));
                    }
                    Ok(Tree::Node(children))
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = *pos;
                    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                        *pos += 1;
                    }
                    let n: usize = std::str::from_utf8(&bytes[start..*pos])
                        .ok()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(start, "bad leaf number"))?;
                    if n != *next_leaf {
                        return Err(err(start, &format!("expected leaf {}", *next_leaf)));
                    }
                    *next_leaf += 1;
                    Ok(Tree::Leaf)
                }
                _ => Err(err(*pos, "expected `(` or a leaf number")),
            }
        }
        let t = node(bytes, &mut pos, &mut next_leaf, &skip)?;
        skip(&mut pos);
        if pos != bytes.len() {
            return Err(err(pos, "trailing input"));
        }
        Ok(t)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bracketing())
    }
}

fn trees_with(n: usize, memo: &mut BTreeMap<usize, Vec<Tree>>) -> Vec<Tree> {
    if let Some(v) = memo.get(&n) {
        return v.clone();
    }
    let out = if n == 1 {
        vec![Tree::Leaf]
    } else {
        // Sequences of at least two subtrees whose leaves add up to n.
        let mut out = Vec::new();
        let mut stack: Vec<(Vec<Tree>, usize)> = vec![(Vec::new(), n)];
        while let Some((prefix, rest)) = stack.pop() {
            if rest == 0 {
                if prefix.len() >= 2 {
                    out.push(Tree::Node(prefix));
                }
                continue;
            }
            for first in 1..=rest {
                if first == n {
                    continue;
                }
                for t in trees_with(first, memo) {
                    let mut p = prefix.clone();
                    p.push(t);
                    stack.push((p, rest - first));
                }
            }
        }
        out
    };
    memo.insert(n, out.clone());
    out
}

/// All trees with `n ≥ 2` leaves, ordered by codimension and then structurally.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>, TreeError> {
    if n < 2 {
        return Err(TreeError::TooFewLeaves { min: 2, got: n });
    }
    let mut v = trees_with(n, &mut BTreeMap::new());
    v.sort_by(|a, b| a.codim().cmp(&b.codim()).then_with(|| a.cmp(b)));
    Ok(v)
}

/// Number of trees with `n` leaves in each codimension.
pub fn count_by_codim(n: usize) -> Result<BTreeMap<usize, usize>, TreeError> {
    let mut m = BTreeMap::new();
    for t in enumerate_trees(n)? {
        *m.entry(t.codim()).or_insert(0) += 1;
    }
    Ok(m)
}

/// A tree with nonnegative rational lengths on its internal edges, listed
/// in edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricTree {
    tree: Tree,
    lengths: Vec<Ratio<i64>>,
}

impl MetricTree {
    pub fn new(tree: Tree, lengths: Vec<Ratio<i64>>) -> Result<Self, TreeError> {
        if lengths.len() != tree.internal_edges() {
            return Err(TreeError::Metric(format!(
                "{} lengths for {} internal edges",
                lengths.len(),
                tree.internal_edges()
            )));
        }
        if lengths.iter().any(|l| *l < Ratio::from_integer(0)) {
            return Err(TreeError::Metric("negative length".into()));
        }
        Ok(MetricTree { tree, lengths })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn lengths(&self) -> &[Ratio<i64>] {
        &self.lengths
    }

    pub fn is_irreducible(&self) -> bool {
        self.lengths.iter().all(|l| *l > Ratio::from_integer(0))
    }

    /// Collapses every edge of length zero. The result lies in the open
    /// stratum of its tree.
    pub fn reduce(&self) -> MetricTree {
        let mut tree = self.tree.clone();
        let mut lengths = self.lengths.clone();
        while let Some(e) = lengths.iter().position(|l| *l == Ratio::from_integer(0)) {
            tree = tree.collapse(e).expect("edge index in range");
            lengths.remove(e);
        }
        MetricTree { tree, lengths }
    }
}

/// A codimension-one tree together with the chambers (indices into the
/// trivalent trees) that collapse onto it.
#[derive(Clone, Debug, Serialize)]
pub struct Wall {
    pub wall: String,
    pub chambers: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChamberGraph {
    pub chambers: Vec<String>,
    pub walls: Vec<Wall>,
}

impl ChamberGraph {
    /// Whether chambers joined by walls form a single cycle through all chambers.
    pub fn is_single_cycle(&self) -> bool {
        let n = self.chambers.len();
        if n < 3 || self.walls.len() != n || self.walls.iter().any(|w| w.chambers.len() != 2) {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for w in &self.walls {
            adj[w.chambers[0]].push(w.chambers[1]);
            adj[w.chambers[1]].push(w.chambers[0]);
        }
        if adj.iter().any(|a| a.len() != 2) {
            return false;
        }
        let (mut prev, mut cur, mut seen) = (0, adj[0][0], 1);
        while cur != 0 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            seen += 1;
            if seen > n {
                return false;
            }
        }
        seen == n
    }

    /// Number of walls bordering each chamber.
    pub fn chamber_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.chambers.len()];
        for w in &self.walls {
            for &c in &w.chambers {
                d[c] += 1;
            }
        }
        d
    }
}

/// For each codimension-one tree with `n` leaves, the trivalent trees having
/// an edge whose collapse yields it.
pub fn wall_adjacency(n: usize) -> Result<ChamberGraph, TreeError> {
    if n < 3 {
        return Err(TreeError::TooFewLeaves { min: 3, got: n });
    }
    let all = enumerate_trees(n)?;
    let chambers: Vec<&Tree> = all.iter().filter(|t| t.codim() == 0).collect();
    let walls: Vec<&Tree> = all.iter().filter(|t| t.codim() == 1).collect();
    let mut adj: BTreeMap<&Tree, Vec<usize>> = walls.iter().map(|&w| (w, Vec::new())).collect();
    for (i, c) in chambers.iter().enumerate() {
        for e in 0..c.internal_edges() {
            let w = c.collapse(e)?;
            if let Some(list) = adj.get_mut(&w) {
                if !list.contains(&i) {
                    list.push(i);
                }
            }
        }
    }
    Ok(ChamberGraph {
        chambers: chambers.iter().map(|t| t.to_bracketing()).collect(),
        walls: walls
            .iter()
            .map(|w| Wall {
                wall: w.to_bracketing(),
                chambers: adj[w].clone(),
            })
            .collect(),
    })
}

/// One term `μ^{k1}(a_1,…,a_{i-1}, μ^{k2}(a_i,…), …)` of the relation on
/// `k = k1 + k2 - 1` inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TermSchema {
    pub k1: usize,
    pub i: usize,
    pub k2: usize,
}

impl TermSchema {
    /// The two-vertex tree of the schema, when both arities are at least two.
    pub fn tree(&self) -> Option<Tree> {
        if self.k1 < 2 || self.k2 < 2 {
            return None;
        }
        let mut children = vec![Tree::Leaf; self.k1];
        children[self.i - 1] = Tree::corolla(self.k2);
        Some(Tree::Node(children))
    }
}

/// All schemas on `k ≥ 1` inputs, those whose arities are both at least two first.
pub fn ainf_terms(k: usize) -> Vec<TermSchema> {
    let mut v: Vec<TermSchema> = (1..=k)
        .flat_map(|k2| {
            let k1 = k + 1 - k2;
            (1..=k1).map(move |i| TermSchema { k1, i, k2 })
        })
        .collect();
    v.sort_by_key(|s| (s.k1 < 2 || s.k2 < 2, *s));
    v
}

/// The A∞-relation on `inputs`, summed schema by schema.
pub fn schema_residual(a: &AInfAlgebra, inputs: &[Label]) -> F2Sum<Label> {
    let mut acc = F2Sum::new();
    for s in ainf_terms(inputs.len()) {
        let start = s.i - 1;
        let Some(inner) = a.mu(&inputs[start..start + s.k2]) else { continue };
        for &o in inner {
            let mut outer = inputs[..start].to_vec();
            outer.push(o);
            outer.extend_from_slice(&inputs[start + s.k2..]);
            if let Some(out) = a.mu(&outer) {
                acc.add_all(out);
            }
        }
    }
    acc
}
