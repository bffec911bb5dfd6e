//! Unlabeled trees: canonical codes, enumeration of all trees on `n`
//! vertices, and the generalized tree shift.
//!
//! # Canonical code
//!
//! A tree is rooted at its center (or at each of its two centers, keeping the
//! smaller result). A rooted tree is encoded as `(` + the sorted codes of the
//! root's subtrees + `)`, so `Path_3` is `(()())` and a single vertex is `()`.
//! Codes compare as ASCII strings, where `(` sorts before `)`. The canonical
//! labeling numbers vertices in preorder of the code, so equal codes give
//! identical graphs.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, Multigraph, VertexId};

pub const DEFAULT_MAX_N: usize = 12;
pub const MAX_N_ENV: &str = "CONETUTTE_MAX_N";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("n = {n} is outside 1..={max}")]
    OutOfBounds { n: usize, max: usize },
    #[error("invalid shift site {v1}-{vk}: {reason}")]
    InvalidSite { v1: VertexId, vk: VertexId, reason: &'static str },
    #[error("malformed tree code {0:?}")]
    BadCode(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Enumeration bound: `CONETUTTE_MAX_N` if set to an integer, else 12.
pub fn enumeration_bound() -> usize {
    std::env::var(MAX_N_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MAX_N)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct TreeCode(String);

impl TreeCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn parse(s: &str) -> Result<Self, TreeError> {
        let mut depth = 0i64;
        for (i, ch) in s.chars().enumerate() {
            depth += match ch {
                '(' => 1,
                ')' => -1,
                _ => return Err(TreeError::BadCode(s.to_string())),
            };
            if depth < 0 || (depth == 0 && i + 1 != s.len()) {
                return Err(TreeError::BadCode(s.to_string()));
            }
        }
        if depth != 0 || s.is_empty() {
            return Err(TreeError::BadCode(s.to_string()));
        }
        Ok(Self(s.to_string()))
    }

    /// Rebuild the canonically labeled tree (preorder ids, root 0).
    pub fn to_graph(&self) -> Multigraph {
        let mut g = Multigraph::empty(0);
        let mut stack: Vec<VertexId> = Vec::new();
        for ch in self.0.chars() {
            if ch == '(' {
                g = Multigraph::from_edges(g.vertex_count() + 1, g.edges()).expect("grown");
                let v = g.vertex_count() - 1;
                if let Some(&parent) = stack.last() {
                    g.add_edge(parent, v).expect("ids in range");
                }
                stack.push(v);
            } else {
                stack.pop();
            }
        }
        g
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A tree up to isomorphism, stored in its canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalTree {
    graph: Multigraph,
    code: TreeCode,
}

impl PartialOrd for CanonicalTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.code.cmp(&other.code)
    }
}

impl CanonicalTree {
    pub fn new(tree: &Multigraph) -> Result<Self, TreeError> {
        Ok(Self::from_code(canonical_code(tree)?))
    }

    pub fn from_code(code: TreeCode) -> Self {
        Self { graph: code.to_graph(), code }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn code(&self) -> &TreeCode {
        &self.code
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn leaf_count(&self) -> usize {
        self.graph.leaves().len()
    }

    pub fn is_path(&self) -> bool {
        self.vertex_count() <= 2 || self.leaf_count() == 2
    }

    pub fn is_star(&self) -> bool {
        self.vertex_count() <= 2 || self.leaf_count() == self.vertex_count() - 1
    }
}

/// Center-rooted canonical code of a tree.
pub fn canonical_code(tree: &Multigraph) -> Result<TreeCode, TreeError> {
    if !tree.is_tree() {
        return Err(TreeError::NotATree);
    }
    let adj = neighbors(tree);
    let code = centers(&adj).into_iter().map(|c| rooted_code(&adj, c, usize::MAX)).min().expect("a tree has a center");
    Ok(TreeCode(code))
}

fn neighbors(g: &Multigraph) -> Vec<Vec<VertexId>> {
    g.incidence().into_iter().map(|inc| inc.into_iter().map(|(w, _)| w).collect()).collect()
}

/// One or two centers, by repeated leaf stripping.
fn centers(adj: &[Vec<VertexId>]) -> Vec<VertexId> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(adj: &[Vec<VertexId>], v: VertexId, parent: VertexId) -> String {
    let mut children: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    children.sort_unstable();
    let mut out = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    out.push('(');
    children.iter().for_each(|c| out.push_str(c));
    out.push(')');
    out
}

/// All trees on `n` vertices up to isomorphism, sorted by code.
///
/// Grows every tree on `n - 1` vertices by one leaf at each vertex and
/// deduplicates by canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<CanonicalTree>, TreeError> {
    let max = enumeration_bound();
    if n == 0 || n > max {
        return Err(TreeError::OutOfBounds { n, max });
    }
    let mut level: BTreeSet<TreeCode> = BTreeSet::from([TreeCode("()".into())]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = code.to_graph();
            for v in 0..g.vertex_count() {
                let mut grown = Multigraph::from_edges(g.vertex_count() + 1, g.edges()).expect("grown");
                grown.add_edge(v, g.vertex_count()).expect("ids in range");
                next.insert(canonical_code(&grown).expect("still a tree"));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(CanonicalTree::from_code).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShiftSite {
    pub v1: VertexId,
    pub vk: VertexId,
}

impl ShiftSite {
    pub fn new(v1: VertexId, vk: VertexId) -> Self {
        Self { v1, vk }
    }

    pub fn reversed(self) -> Self {
        Self { v1: self.vk, vk: self.v1 }
    }
}

/// The pieces a shift site cuts a tree into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftDecomposition {
    pub h1: Multigraph,
    pub h1_root: VertexId,
    pub h2: Multigraph,
    pub h2_root: VertexId,
    /// Number of vertices on the path, at least 2.
    pub k: usize,
    /// Fresh path `0 - 1 - ... - k-1`; vertex 0 plays `v_1`, vertex `k-1` plays `v_k`.
    pub pk: Multigraph,
    /// The path in the original labeling, from `v1` to `vk`.
    pub path: Vec<VertexId>,
}

/// Unique tree path from `a` to `b`, inclusive.
fn tree_path(adj: &[Vec<VertexId>], a: VertexId, b: VertexId) -> Vec<VertexId> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

fn checked_path(tree: &Multigraph, site: ShiftSite) -> Result<Vec<VertexId>, TreeError> {
    if !tree.is_tree() {
        return Err(TreeError::NotATree);
    }
    let ShiftSite { v1, vk } = site;
    tree.check_vertex(v1)?;
    tree.check_vertex(vk)?;
    if v1 == vk {
        return Err(TreeError::InvalidSite { v1, vk, reason: "endpoints coincide" });
    }
    let adj = neighbors(tree);
    let path = tree_path(&adj, v1, vk);
    if path[1..path.len() - 1].iter().any(|&w| adj[w].len() != 2) {
        return Err(TreeError::InvalidSite { v1, vk, reason: "an interior vertex has degree other than 2" });
    }
    Ok(path)
}

/// Every unordered pair `{a, b}` (reported with `a < b`) whose connecting path
/// has only degree-2 interior vertices.
pub fn shift_sites(tree: &Multigraph) -> Vec<ShiftSite> {
    let n = tree.vertex_count();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| ShiftSite::new(a, b)))
        .filter(|&site| checked_path(tree, site).is_ok())
        .collect()
}

pub fn decompose(tree: &Multigraph, site: ShiftSite) -> Result<ShiftDecomposition, TreeError> {
    let path = checked_path(tree, site)?;
    let k = path.len();
    let interior: Vec<VertexId> = path[1..k - 1].to_vec();
    let on_path = |u: VertexId, v: VertexId| path.windows(2).any(|w| (w[0], w[1]) == (u, v) || (w[1], w[0]) == (u, v));
    let kept: Vec<(VertexId, VertexId)> = tree
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !on_path(u, v) && !interior.contains(&u) && !interior.contains(&v))
        .collect();
    let forest = Multigraph::from_edges(tree.vertex_count(), &kept)?;
    let labels = forest.component_labels();
    let piece = |root: VertexId| -> (Multigraph, VertexId) {
        let members: Vec<VertexId> = (0..tree.vertex_count()).filter(|&w| labels[w] == labels[root]).collect();
        let index = |w: VertexId| members.binary_search(&w).expect("member");
        let edges: Vec<_> =
            kept.iter().filter(|&&(u, _)| labels[u] == labels[root]).map(|&(u, v)| (index(u), index(v))).collect();
        (Multigraph::from_edges(members.len(), &edges).expect("in range"), index(root))
    };
    let (h1, h1_root) = piece(site.v1);
    let (h2, h2_root) = piece(site.vk);
    Ok(ShiftDecomposition { h1, h1_root, h2, h2_root, k, pk: Multigraph::path(k), path })
}

impl ShiftDecomposition {
    /// `(H1 : H2) : P_k`, with `P_k` attached by its `v_k` end.
    pub fn reassemble(&self) -> Multigraph {
        let (glued, at) = self.h1.one_sum(self.h1_root, &self.h2, self.h2_root).expect("roots valid");
        glued.one_sum(at, &self.pk, self.k - 1).expect("roots valid").0
    }
}

/// The generalized tree shift of `tree` at `site`, canonicalized.
pub fn apply_shift(tree: &Multigraph, site: ShiftSite) -> Result<CanonicalTree, TreeError> {
    CanonicalTree::new(&decompose(tree, site)?.reassemble())
}
