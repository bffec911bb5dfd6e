//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every exported function returns a JSON string; failures are reported as
//! `{"error": "..."}` so the same functions run (and are tested) natively.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use conetutte::poset::build_poset;
use conetutte::trees::{decompose, shift_sites, ShiftSite};
use conetutte::tutte::{spanning_tree_count, tutte_at_x1};
use conetutte::verify::{check_factorization, Side};
use conetutte::{cone, IntPolynomial, Multigraph};

/// Trees above this size make the page sluggish.
pub const MAX_DEMO_N: usize = 10;

#[derive(Serialize)]
struct PolyView {
    coeffs: IntPolynomial,
    text: String,
}

impl From<IntPolynomial> for PolyView {
    fn from(p: IntPolynomial) -> Self {
        Self { text: p.to_string(), coeffs: p }
    }
}

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

/// Hasse diagram of the shift poset on `n`-vertex trees, with `f(T)` and an
/// edge list for each node.
#[wasm_bindgen]
pub fn poset_view(n: usize) -> String {
    if n == 0 || n > MAX_DEMO_N {
        return error(format!("n must be in 1..={MAX_DEMO_N}"));
    }
    let poset = match build_poset(n) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    let nodes: Vec<_> = poset
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            json!({
                "index": i,
                "code": t.code(),
                "leaves": t.leaf_count(),
                "edges": t.graph().to_json().edges,
                "f": PolyView::from(cone::f(t.graph())),
            })
        })
        .collect();
    let covers: Vec<[usize; 2]> = poset.covers().map(|(a, b)| [a, b]).collect();
    let (mins, maxs) = poset.extremes();
    json!({ "n": n, "nodes": nodes, "covers": covers, "minimal": mins, "maximal": maxs }).to_string()
}

/// `T(1,y)`, `f`, `g_v` and `h_v` for a graph given in edge-list text.
#[wasm_bindgen]
pub fn cone_polynomials(edge_list: &str, vertex: usize) -> String {
    let g = match Multigraph::from_edge_list(edge_list) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    if g.edge_count() > 24 || g.vertex_count() > 14 {
        return error("graph too large for the demo (max 14 vertices, 24 edges)");
    }
    let (gv, hv) = match (cone::g(&g, vertex), cone::h(&g, vertex)) {
        (Ok(gv), Ok(hv)) => (gv, hv),
        (Err(e), _) | (_, Err(e)) => return error(e),
    };
    let fv = cone::f(&g);
    let cone_trees = spanning_tree_count(&g.cone().graph).ok();
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "tutte": PolyView::from(tutte_at_x1(&g)),
        "f": PolyView::from(fv.clone()),
        "g": PolyView::from(gv.clone()),
        "h": PolyView::from(hv.clone()),
        "f_equals_g_plus_h": fv == &gv + &hv,
        "cone_spanning_trees": cone_trees.map(|c| c.to_string()),
    })
    .to_string()
}

/// Every shift site of node `index` in the `n`-vertex poset, with the image
/// tree and both sides of the factorization of `f(T) - f(T')`.
#[wasm_bindgen]
pub fn shift_sites_view(n: usize, index: usize) -> String {
    if n == 0 || n > MAX_DEMO_N {
        return error(format!("n must be in 1..={MAX_DEMO_N}"));
    }
    let poset = match build_poset(n) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    let Some(tree) = poset.nodes().get(index) else {
        return error(format!("no tree with index {index}"));
    };
    let sites: Vec<_> = shift_sites(tree.graph())
        .into_iter()
        .map(|site: ShiftSite| {
            let d = decompose(tree.graph(), site).expect("enumerated sites are valid");
            let image = conetutte::trees::apply_shift(tree.graph(), site).expect("valid");
            let report = check_factorization(tree.graph(), site);
            let side = |s: &Side| match s {
                Side::Poly(p) => p.to_string(),
                Side::Int(i) => i.to_string(),
                Side::Text(t) => t.clone(),
            };
            json!({
                "v1": site.v1,
                "vk": site.vk,
                "k": d.k,
                "path": d.path,
                "h1_vertices": d.h1.vertex_count(),
                "h2_vertices": d.h2.vertex_count(),
                "image": poset.index_of(&image),
                "trivial": image == *tree,
                "difference": side(&report.lhs),
                "product": side(&report.rhs),
                "holds": report.pass,
            })
        })
        .collect();
    json!({ "n": n, "index": index, "code": tree.code(), "edges": tree.graph().to_json().edges, "sites": sites })
        .to_string()
}
