//! Undirected multigraphs with loops and parallel edges.
//!
//! Vertices are `0..vertex_count`, edges are indexed `0..edge_count` in
//! insertion order. Every structural operation returns a fresh graph with a
//! fixed renumbering so that results (and memo keys) are reproducible:
//!
//! * [`Multigraph::delete_edge`] keeps all vertex ids and compacts edge ids,
//!   preserving order.
//! * [`Multigraph::contract_edge`] merges the endpoints into the smaller id;
//!   ids above the larger endpoint shift down by one.
//! * [`Multigraph::one_sum`] keeps the first graph's ids and appends the
//!   second graph's remaining vertices in order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge id {0} out of range")]
    InvalidEdge(EdgeId),
    #[error("vertex id {0} out of range")]
    InvalidVertex(VertexId),
    #[error("edge {0} is a loop and cannot be contracted")]
    LoopContraction(EdgeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Loop,
    Bridge,
    Ordinary,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

/// JSON shape `{"n": vertex_count, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

/// Output of [`Multigraph::cone`].
#[derive(Debug, Clone)]
pub struct Cone {
    pub graph: Multigraph,
    pub apex: VertexId,
    /// `spokes[v]` is the edge joining `v` to the apex.
    pub spokes: Vec<EdgeId>,
}

impl Multigraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self { vertex_count: n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn path(k: usize) -> Self {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self { vertex_count: k, edges }
    }

    /// Star on `n` vertices with center 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Self { vertex_count: n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self { vertex_count: n, edges }
    }

    /// Spider: paths of the given edge lengths sharing the center vertex 0.
    pub fn spider(legs: &[usize]) -> Self {
        let mut g = Self::empty(1);
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                g.vertex_count += 1;
                let next = g.vertex_count - 1;
                g.edges.push((prev, next));
                prev = next;
            }
        }
        g
    }

    /// Parse the edge-list text format: one `u v` pair per line, `#` starts a
    /// comment line, and an optional `n N` line declares at least `N`
    /// vertices (needed for isolated vertices).
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut declared = 0usize;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let parse_id = |tok: &str| -> Result<VertexId, GraphError> {
                if tok.starts_with('-') && tok[1..].chars().all(|c| c.is_ascii_digit()) && tok.len() > 1 {
                    return Err(GraphError::Parse { line: line_no, msg: format!("negative vertex id {tok}") });
                }
                tok.parse().map_err(|_| GraphError::Parse { line: line_no, msg: format!("malformed token {tok:?}") })
            };
            match tokens.as_slice() {
                ["n", count] => declared = declared.max(parse_id(count)?),
                [u, v] => edges.push((parse_id(u)?, parse_id(v)?)),
                _ => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("expected two vertex ids, got {line:?}"),
                    })
                }
            }
        }
        let seen = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Ok(Self { vertex_count: declared.max(seen), edges })
    }

    /// Inverse of [`Multigraph::from_edge_list`]; always writes the `n` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.vertex_count, edges: self.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self, GraphError> {
        let edges: Vec<_> = json.edges.iter().map(|&[u, v]| (u, v)).collect();
        Self::from_edges(json.n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<(VertexId, VertexId), GraphError> {
        self.edges.get(e).copied().ok_or(GraphError::InvalidEdge(e))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v))
        }
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Self { vertex_count: self.vertex_count, edges })
    }

    pub fn contract_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        let (a, b) = self.edge(e)?;
        if a == b {
            return Err(GraphError::LoopContraction(e));
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let remap = |w: VertexId| match w.cmp(&gone) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => w - 1,
        };
        let edges =
            self.edges.iter().enumerate().filter(|&(id, _)| id != e).map(|(_, &(u, v))| (remap(u), remap(v))).collect();
        Ok(Self { vertex_count: self.vertex_count - 1, edges })
    }

    /// Classify by deleting the edge and comparing component counts.
    pub fn classify_edge(&self, e: EdgeId) -> Result<EdgeClass, GraphError> {
        let (u, v) = self.edge(e)?;
        if u == v {
            return Ok(EdgeClass::Loop);
        }
        let without = self.delete_edge(e)?;
        Ok(if without.component_labels()[u] != without.component_labels()[v] {
            EdgeClass::Bridge
        } else {
            EdgeClass::Ordinary
        })
    }

    /// Bridge flags for all edges at once (lowlink DFS keyed by edge id, so
    /// parallel edges are handled correctly).
    pub fn bridges(&self) -> Vec<bool> {
        let n = self.vertex_count;
        let adj = self.incidence();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_bridge = vec![false; self.edges.len()];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next incidence index)
            let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
                if let Some(&(w, e)) = adj[v].get(*next) {
                    *next += 1;
                    if Some(e) == parent_edge || w == v {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(parent, _, _))) = (parent_edge, stack.last()) {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            is_bridge[e] = true;
                        }
                    }
                }
            }
        }
        is_bridge
    }

    /// `incidence()[v]` lists `(other endpoint, edge id)`; a loop appears twice.
    pub fn incidence(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    pub fn cone(&self) -> Cone {
        let apex = self.vertex_count;
        let mut graph = Self { vertex_count: apex + 1, edges: self.edges.clone() };
        let spokes = (0..apex)
            .map(|v| {
                graph.edges.push((v, apex));
                graph.edges.len() - 1
            })
            .collect();
        Cone { graph, apex, spokes }
    }

    /// Glue `v1` of `self` to `v2` of `other`; returns the glued vertex id.
    pub fn one_sum(&self, v1: VertexId, other: &Self, v2: VertexId) -> Result<(Self, VertexId), GraphError> {
        self.check_vertex(v1)?;
        other.check_vertex(v2)?;
        let offset = self.vertex_count;
        let remap = |w: VertexId| match w.cmp(&v2) {
            std::cmp::Ordering::Less => offset + w,
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Greater => offset + w - 1,
        };
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (remap(u), remap(v))));
        Ok((Self { vertex_count: offset + other.vertex_count - 1, edges }, v1))
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Vertices of degree one, ascending.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.degrees().iter().enumerate().filter(|&(_, &d)| d == 1).map(|(v, _)| v).collect()
    }

    /// Whether `v` has a non-loop edge to another vertex.
    pub fn has_other_neighbor(&self, v: VertexId) -> Result<bool, GraphError> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().any(|&(a, b)| a != b && (a == v || b == v)))
    }

    /// Component index per vertex, numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut labels = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = find(&mut parent, v);
            if labels[r] == usize::MAX {
                labels[r] = next;
                next += 1;
            }
            labels[v] = labels[r];
        }
        labels
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().iter().max().map_or(0, |&m| m + 1)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `|E| - |V| + components`.
    pub fn nullity(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count >= 1
            && self.edges.len() + 1 == self.vertex_count
            && self.edges.iter().all(|&(u, v)| u != v)
            && self.is_connected()
    }

    /// Rename vertex `v` to `perm[v]`; edge order is kept.
    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        assert_eq!(perm.len(), self.vertex_count, "permutation length mismatch");
        Self { vertex_count: self.vertex_count, edges: self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect() }
    }

    pub fn with_edge_order_reversed(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.reverse();
        Self { vertex_count: self.vertex_count, edges }
    }

    /// Multiplicity matrix; loops are counted once on the diagonal.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count;
        let mut m = vec![vec![0u32; n]; n];
        for &(u, v) in &self.edges {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    }
}
