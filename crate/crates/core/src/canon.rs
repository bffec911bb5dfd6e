//! Canonical keys for small multigraphs.
//!
//! Colour refinement on (loop count, degree) followed by an
//! individualize-and-refine search; each search leaf yields the multiplicity
//! matrix under the induced labeling and the lexicographically smallest one is
//! the canonical form. The search is capped, and graphs that exceed the cap get
//! a labeled key instead, which is still a sound cache key because the two
//! kinds carry different tags.

use crate::graph::Multigraph;

/// Search leaves explored before falling back to a labeled key.
const LEAF_BUDGET: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKey {
    Canonical(Vec<u32>),
    Labeled(Vec<u32>),
}

pub fn graph_key(g: &Multigraph) -> GraphKey {
    match canonical_form(g) {
        Some(code) => GraphKey::Canonical(code),
        None => GraphKey::Labeled(encode(&g.multiplicity_matrix(), &identity(g.vertex_count()))),
    }
}

/// Canonical encoding, or `None` when the search budget is exhausted.
pub fn canonical_form(g: &Multigraph) -> Option<Vec<u32>> {
    let m = g.multiplicity_matrix();
    let n = g.vertex_count();
    let deg = g.degrees();
    let initial: Vec<(u32, u32)> = (0..n).map(|v| (m[v][v], deg[v] as u32)).collect();
    let colors = rank(&initial);
    let mut search = Search { m: &m, best: None, leaves: 0 };
    search.descend(refine(&m, colors)).then_some(())?;
    search.best
}

struct Search<'a> {
    m: &'a [Vec<u32>],
    best: Option<Vec<u32>>,
    leaves: usize,
}

impl Search<'_> {
    /// Returns false once the leaf budget is exceeded.
    fn descend(&mut self, colors: Vec<usize>) -> bool {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaves += 1;
            if self.leaves > LEAF_BUDGET {
                return false;
            }
            let code = encode(self.m, &colors);
            if self.best.as_ref().is_none_or(|b| code < *b) {
                self.best = Some(code);
            }
            return true;
        };
        for v in (0..n).filter(|&v| colors[v] == target) {
            let split: Vec<(usize, bool)> = (0..n).map(|w| (colors[w], w != v)).collect();
            if !self.descend(refine(self.m, rank(&split))) {
                return false;
            }
        }
        true
    }
}

/// Dense ranks of the given keys, preserving their order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

/// Iterated neighbourhood refinement until the partition stabilizes.
fn refine(m: &[Vec<u32>], mut colors: Vec<usize>) -> Vec<usize> {
    let n = colors.len();
    let mut classes = colors.iter().max().map_or(0, |&c| c + 1);
    loop {
        let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> =
                    (0..n).filter(|&w| w != v && m[v][w] > 0).map(|w| (colors[w], m[v][w])).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let next_classes = next.iter().max().map_or(0, |&c| c + 1);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Upper triangle (with diagonal) of the multiplicity matrix under `label`.
fn encode(m: &[Vec<u32>], label: &[usize]) -> Vec<u32> {
    let n = label.len();
    let mut inv = vec![0; n];
    for (v, &l) in label.iter().enumerate() {
        inv[l] = v;
    }
    let mut code = Vec::with_capacity(1 + n * (n + 1) / 2);
    code.push(n as u32);
    for i in 0..n {
        for j in i..n {
            code.push(m[inv[i]][inv[j]]);
        }
    }
    code
}
