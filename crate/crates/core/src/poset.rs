//! The poset on `n`-vertex trees generated by generalized tree shifts.
//!
//! A non-trivial shift always adds exactly one leaf, so no shift relation is
//! implied by a longer chain and the shift edges are exactly the cover
//! relations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::VertexId;
use crate::trees::{apply_shift, enumerate_trees, shift_sites, CanonicalTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("node index {0} out of range")]
    InvalidIndex(usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone)]
pub struct HasseDiagram {
    n: usize,
    nodes: Vec<CanonicalTree>,
    /// `(low, high)`: `high` is one non-trivial shift of `low`.
    covers: BTreeSet<(usize, usize)>,
    /// `above[i]` = every node reachable from `i`, including `i`.
    above: Vec<BTreeSet<usize>>,
}

#[derive(Debug, Serialize)]
pub struct PosetJson {
    pub n: usize,
    pub trees: Vec<Vec<[VertexId; 2]>>,
    pub covers: Vec<[usize; 2]>,
}

/// Shift images of one tree (non-isomorphic ones only), as node indices.
fn shift_targets(tree: &CanonicalTree, index: &BTreeMap<&CanonicalTree, usize>) -> Vec<usize> {
    shift_sites(tree.graph())
        .into_iter()
        .map(|site| apply_shift(tree.graph(), site).expect("sites are valid"))
        .filter(|image| image != tree)
        .map(|image| index[&image])
        .collect()
}

pub fn build_poset(n: usize) -> Result<HasseDiagram, PosetError> {
    let nodes = enumerate_trees(n)?;
    let index: BTreeMap<&CanonicalTree, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();

    #[cfg(feature = "parallel")]
    let targets: Vec<Vec<usize>> = {
        use rayon::prelude::*;
        nodes.par_iter().map(|t| shift_targets(t, &index)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let targets: Vec<Vec<usize>> = nodes.iter().map(|t| shift_targets(t, &index)).collect();

    let covers: BTreeSet<(usize, usize)> =
        targets.iter().enumerate().flat_map(|(lo, his)| his.iter().map(move |&hi| (lo, hi))).collect();
    let above = reachability(nodes.len(), &covers);
    Ok(HasseDiagram { n, nodes, covers, above })
}

fn reachability(count: usize, covers: &BTreeSet<(usize, usize)>) -> Vec<BTreeSet<usize>> {
    let mut succ = vec![Vec::new(); count];
    for &(lo, hi) in covers {
        succ[lo].push(hi);
    }
    (0..count)
        .map(|start| {
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &succ[v] {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen
        })
        .collect()
}

impl HasseDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[CanonicalTree] {
        &self.nodes
    }

    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers.iter().copied()
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    pub fn index_of(&self, tree: &CanonicalTree) -> Option<usize> {
        self.nodes.binary_search(tree).ok()
    }

    fn check(&self, i: usize) -> Result<(), PosetError> {
        if i < self.nodes.len() {
            Ok(())
        } else {
            Err(PosetError::InvalidIndex(i))
        }
    }

    /// `a <= b`: `b` is reachable from `a` by shifts (reflexive).
    pub fn leq(&self, a: usize, b: usize) -> Result<bool, PosetError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.above[a].contains(&b))
    }

    /// Every pair `(a, b)` with `a < b`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        self.above
            .iter()
            .enumerate()
            .flat_map(|(a, ups)| ups.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
            .collect()
    }

    /// `(minimal elements, maximal elements)`.
    pub fn extremes(&self) -> (Vec<usize>, Vec<usize>) {
        let has_in: BTreeSet<usize> = self.covers.iter().map(|&(_, hi)| hi).collect();
        let has_out: BTreeSet<usize> = self.covers.iter().map(|&(lo, _)| lo).collect();
        let all = 0..self.nodes.len();
        (all.clone().filter(|i| !has_in.contains(i)).collect(), all.filter(|i| !has_out.contains(i)).collect())
    }

    /// Whether some cover is also implied by a chain of length >= 2.
    pub fn has_redundant_cover(&self) -> bool {
        self.covers
            .iter()
            .any(|&(lo, hi)| self.covers.iter().any(|&(a, mid)| a == lo && mid != hi && self.above[mid].contains(&hi)))
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph shift_poset_{} {{\n  rankdir=BT;\n", self.n);
        for (i, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  t{i} [label=\"{}\\nleaves={}\"];", t.code(), t.leaf_count());
        }
        for &(lo, hi) in &self.covers {
            let _ = writeln!(out, "  t{lo} -> t{hi};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            trees: self.nodes.iter().map(|t| t.graph().to_json().edges).collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn idx(d: &HasseDiagram, g: &Multigraph) -> usize {
        d.index_of(&CanonicalTree::new(g).unwrap()).unwrap()
    }

    #[test]
    fn tiny_posets() {
        let d3 = build_poset(3).unwrap();
        assert_eq!((d3.nodes().len(), d3.cover_count()), (1, 0));
        assert_eq!(d3.extremes(), (vec![0], vec![0]));
        let d4 = build_poset(4).unwrap();
        let (p, s) = (idx(&d4, &Multigraph::path(4)), idx(&d4, &Multigraph::star(4)));
        assert_eq!(d4.extremes(), (vec![p], vec![s]));
        assert_eq!(d4.covers().collect::<Vec<_>>(), vec![(p, s)]);
    }

    #[test]
    fn seven_vertex_poset() {
        let d = build_poset(7).unwrap();
        assert_eq!(d.nodes().len(), 11);
        let path = idx(&d, &Multigraph::path(7));
        let star = idx(&d, &Multigraph::star(7));
        let t2 = idx(&d, &Multigraph::spider(&[4, 1, 1]));
        let t8 = idx(&d, &Multigraph::spider(&[2, 2, 1, 1]));
        assert!(d.leq(t2, t8).unwrap());
        assert!(!d.leq(t8, t2).unwrap());
        assert!(d.leq(path, star).unwrap());
        assert!(!d.leq(star, path).unwrap());
        for i in 0..11 {
            assert!(d.leq(i, i).unwrap());
            assert!(d.leq(path, i).unwrap());
            assert!(d.leq(i, star).unwrap());
        }
        assert_eq!(d.extremes(), (vec![path], vec![star]));
        assert_eq!(d.leq(0, 11), Err(PosetError::InvalidIndex(11)));
    }

    #[test]
    fn covers_are_graded_by_leaves_and_irredundant() {
        for n in 3..=9 {
            let d = build_poset(n).unwrap();
            for (lo, hi) in d.covers() {
                assert_eq!(d.nodes()[hi].leaf_count(), d.nodes()[lo].leaf_count() + 1);
            }
            assert!(!d.has_redundant_cover());
            let (mins, maxs) = d.extremes();
            assert_eq!(mins.len(), 1);
            assert_eq!(maxs.len(), 1);
            assert!(d.nodes()[mins[0]].is_path());
            assert!(d.nodes()[maxs[0]].is_star());
        }
    }

    #[test]
    fn dot_output() {
        let d3 = build_poset(3).unwrap();
        let dot = d3.to_dot();
        assert_eq!(dot.matches("[label=").count(), 1);
        assert!(!dot.contains("->"));
        let d7 = build_poset(7).unwrap();
        assert_eq!(d7.to_dot().matches("[label=").count(), 11);
        assert_eq!(d7.to_dot(), build_poset(7).unwrap().to_dot());
        let json = serde_json::to_value(d7.to_json()).unwrap();
        assert_eq!(json["trees"].as_array().unwrap().len(), 11);
    }
}
