//! Test corpora of multigraphs: exhaustive small connected multigraphs (up to
//! isomorphism) and seeded random ones.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::canon::{graph_key, GraphKey};
use crate::graph::Multigraph;

pub const DEFAULT_SEED: u64 = 1729;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One representative per isomorphism class of connected multigraphs (loops
/// and parallel edges allowed) with `1..=max_vertices` vertices and at most
/// `max_edges` edges, in a deterministic order.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut classes: BTreeMap<GraphKey, Multigraph> = BTreeMap::new();
    for n in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let mut chosen = Vec::new();
        extend_multisets(&slots, 0, max_edges, &mut chosen, &mut |edges| {
            if edges.len() + 1 < n {
                return;
            }
            let g = Multigraph::from_edges(n, edges).expect("slots are in range");
            if g.is_connected() {
                classes.entry(graph_key(&g)).or_insert(g);
            }
        });
    }
    classes.into_values().collect()
}

fn extend_multisets(
    slots: &[(usize, usize)],
    from: usize,
    budget: usize,
    chosen: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    visit(chosen);
    if budget == 0 {
        return;
    }
    for i in from..slots.len() {
        chosen.push(slots[i]);
        extend_multisets(slots, i, budget - 1, chosen, visit);
        chosen.pop();
    }
}

/// Random multigraph on `1..=max_vertices` vertices with `0..=max_edges`
/// uniformly chosen edges (loops and repeats allowed); may be disconnected.
pub fn random_multigraph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<_> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Multigraph::from_edges(n, &edges).expect("in range")
}

/// Random connected multigraph: a random spanning tree plus extra random
/// edges, at most `max_edges` edges in total.
pub fn random_connected_multigraph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices.min(max_edges + 1));
    let mut g = Multigraph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("in range");
    }
    let extra = rng.gen_range(0..=max_edges - (n - 1));
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        g.add_edge(u, v).expect("in range");
    }
    // Shuffle labels so vertex 0 is not always the tree root.
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.relabel(&perm)
}
