//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use conetutte::trees::{canonical_code, TreeCode};
use conetutte::Multigraph;

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into a labeled tree.
pub fn prufer_decode(seq: &[usize]) -> Multigraph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Multigraph::empty(n);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        g.add_edge(leaf, v).unwrap();
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// Isomorphism classes of labeled trees on `n` vertices, found by decoding
/// every Prüfer sequence and deduplicating canonical codes.
pub fn prufer_tree_classes(n: usize) -> BTreeSet<TreeCode> {
    match n {
        0 => return BTreeSet::new(),
        1 => return [canonical_code(&Multigraph::empty(1)).unwrap()].into(),
        2 => return [canonical_code(&Multigraph::path(2)).unwrap()].into(),
        _ => {}
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut classes = BTreeSet::new();
    loop {
        classes.insert(canonical_code(&prufer_decode(&seq)).unwrap());
        let mut i = 0;
        while i < len && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            return classes;
        }
        seq[i] += 1;
    }
}
