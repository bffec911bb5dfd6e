//! The cone functions `f(G) = T_{Cone(G)}(1, y)`, `g_v(G)` (spoke at `v`
//! deleted) and `h_v(G)` (spoke at `v` contracted).

use serde::Serialize;

use crate::graph::{GraphError, Multigraph, VertexId};
use crate::poly::IntPolynomial;
use crate::tutte::tutte_at_x1;

/// `f`, `g_v`, `h_v` for one graph and vertex; `f == g + h` always.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeTriple {
    pub vertex: VertexId,
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub h: IntPolynomial,
}

pub fn f(graph: &Multigraph) -> IntPolynomial {
    tutte_at_x1(&graph.cone().graph)
}

/// Zero when `v` has no non-loop edge to another vertex; otherwise the cone
/// with the spoke at `v` deleted.
pub fn g(graph: &Multigraph, v: VertexId) -> Result<IntPolynomial, GraphError> {
    if !graph.has_other_neighbor(v)? {
        return Ok(IntPolynomial::zero());
    }
    let cone = graph.cone();
    Ok(tutte_at_x1(&cone.graph.delete_edge(cone.spokes[v])?))
}

pub fn h(graph: &Multigraph, v: VertexId) -> Result<IntPolynomial, GraphError> {
    graph.check_vertex(v)?;
    let cone = graph.cone();
    Ok(tutte_at_x1(&cone.graph.contract_edge(cone.spokes[v])?))
}

pub fn triple(graph: &Multigraph, v: VertexId) -> Result<ConeTriple, GraphError> {
    Ok(ConeTriple { vertex: v, f: f(graph), g: g(graph, v)?, h: h(graph, v)? })
}
