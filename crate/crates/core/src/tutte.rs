//! `T_G(1, y)` by deletion-contraction, and two independent oracles: the
//! corank-nullity subset expansion of the full `T_G(x, y)` and the
//! matrix-tree spanning tree count.

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use crate::canon::{graph_key, GraphKey};
use crate::graph::{GraphError, Multigraph};
use crate::poly::{BivarPolynomial, Coeff, IntPolynomial, PolyError};

/// Largest edge count accepted by [`tutte_subset_oracle`].
pub const SUBSET_ORACLE_MAX_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TutteError {
    #[error("subset expansion needs at most {SUBSET_ORACLE_MAX_EDGES} edges, got {0}")]
    TooManyEdges(usize),
    #[error("matrix-tree count needs a connected graph")]
    Disconnected,
    #[error("integer overflow")]
    Overflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Deletion-contraction evaluator for `T_G(1, y)` with an optional memo table
/// keyed on canonical forms of the reduced (loopless, bridgeless) graphs.
#[derive(Debug, Default)]
pub struct TutteEvaluator {
    cache: Option<HashMap<GraphKey, IntPolynomial>>,
}

impl TutteEvaluator {
    pub fn memoized() -> Self {
        Self { cache: Some(HashMap::new()) }
    }

    pub fn without_memo() -> Self {
        Self { cache: None }
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, HashMap::len)
    }

    pub fn eval(&mut self, g: &Multigraph) -> IntPolynomial {
        // Loops factor out as y each; bridges contribute x = 1.
        let loops = g.edges().iter().filter(|&&(u, v)| u == v).count();
        let core = reduce(g);
        self.eval_reduced(&core).shift(loops)
    }

    /// `core` has no loops and no bridges.
    fn eval_reduced(&mut self, core: &Multigraph) -> IntPolynomial {
        if core.edge_count() == 0 {
            return IntPolynomial::one();
        }
        let key = self.cache.as_ref().map(|_| graph_key(core));
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(hit) = cache.get(key) {
                return hit.clone();
            }
        }
        // Every remaining edge is ordinary; pivot on the lowest id.
        let deleted = core.delete_edge(0).expect("edge 0 exists");
        let contracted = core.contract_edge(0).expect("edge 0 is not a loop");
        let value = &self.eval(&deleted) + &self.eval(&contracted);
        if let (Some(cache), Some(key)) = (&mut self.cache, key) {
            cache.insert(key, value.clone());
        }
        value
    }
}

/// Remove loops, contract every bridge and drop isolated vertices.
fn reduce(g: &Multigraph) -> Multigraph {
    let no_loops: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, v)| u != v).collect();
    let loopless = Multigraph::from_edges(g.vertex_count(), &no_loops).expect("same vertex set");
    let bridges = loopless.bridges();
    // Union the endpoints of every bridge, then keep the remaining edges.
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, &(u, v)) in no_loops.iter().enumerate() {
        if bridges[e] {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru.max(rv)] = ru.min(rv);
        }
    }
    let kept: Vec<(usize, usize)> = no_loops
        .iter()
        .enumerate()
        .filter(|&(e, _)| !bridges[e])
        .map(|(_, &(u, v))| (find(&mut parent, u), find(&mut parent, v)))
        .collect();
    let mut index = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for &(u, v) in &kept {
        for w in [u, v] {
            if index[w] == usize::MAX {
                index[w] = next;
                next += 1;
            }
        }
    }
    let edges: Vec<_> = kept.iter().map(|&(u, v)| (index[u], index[v])).collect();
    Multigraph::from_edges(next, &edges).expect("compacted ids are in range")
}

thread_local! {
    static EVALUATOR: RefCell<TutteEvaluator> = RefCell::new(if cfg!(feature = "memo") {
        TutteEvaluator::memoized()
    } else {
        TutteEvaluator::without_memo()
    });
}

/// `T_G(1, y)` using a per-thread evaluator (memoized when the `memo`
/// feature is on).
pub fn tutte_at_x1(g: &Multigraph) -> IntPolynomial {
    EVALUATOR.with(|ev| ev.borrow_mut().eval(g))
}

/// Full `T_G(x, y)` as `sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`.
pub fn tutte_subset_oracle(g: &Multigraph) -> Result<BivarPolynomial, TutteError> {
    let m = g.edge_count();
    if m > SUBSET_ORACLE_MAX_EDGES {
        return Err(TutteError::TooManyEdges(m));
    }
    let n = g.vertex_count();
    let rank_of = |mask: u32| -> usize {
        let mut parent: Vec<usize> = (0..n).collect();
        let mut rank = 0;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> e & 1 == 0 {
                continue;
            }
            let (mut a, mut b) = (u, v);
            while parent[a] != a {
                a = parent[a];
            }
            while parent[b] != b {
                b = parent[b];
            }
            if a != b {
                parent[a] = b;
                rank += 1;
            }
        }
        rank
    };
    let full_rank = rank_of(((1u64 << m) - 1) as u32);
    // counts[(corank, nullity)] = number of subsets
    let mut counts: HashMap<(u32, u32), Coeff> = HashMap::new();
    for mask in 0..(1u64 << m) as u32 {
        let r = rank_of(mask);
        let size = mask.count_ones() as usize;
        *counts.entry(((full_rank - r) as u32, (size - r) as u32)).or_insert(0) += 1;
    }
    let x_minus_1 = shifted_binomial(true);
    let y_minus_1 = shifted_binomial(false);
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort_unstable();
    let mut total = BivarPolynomial::zero();
    for ((a, b), count) in keys {
        let term = x_minus_1(a)?.try_mul(&y_minus_1(b)?)?;
        total = total.try_add(&term.try_mul(&BivarPolynomial::monomial(0, 0, count))?)?;
    }
    Ok(total)
}

/// `(x-1)^k` or `(y-1)^k` expanded.
fn shifted_binomial(in_x: bool) -> impl Fn(u32) -> Result<BivarPolynomial, PolyError> {
    move |k| {
        let mut p = BivarPolynomial::zero();
        let mut binom: Coeff = 1;
        for i in 0..=k {
            let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
            let (a, b) = if in_x { (i, 0) } else { (0, i) };
            p.add_term(a, b, sign * binom)?;
            binom = binom * Coeff::from(k - i) / Coeff::from(i + 1);
        }
        Ok(p)
    }
}

/// Number of spanning trees via a fraction-free (Bareiss) determinant of the
/// reduced Laplacian. Loops are ignored.
pub fn spanning_tree_count(g: &Multigraph) -> Result<Coeff, TutteError> {
    if !g.is_connected() {
        return Err(TutteError::Disconnected);
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(1);
    }
    let mut lap = vec![vec![0 as Coeff; n]; n];
    for &(u, v) in g.edges() {
        if u == v {
            continue;
        }
        lap[u][u] += 1;
        lap[v][v] += 1;
        lap[u][v] -= 1;
        lap[v][u] -= 1;
    }
    let mut a: Vec<Vec<Coeff>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    bareiss_det(&mut a)
}

fn bareiss_det(a: &mut [Vec<Coeff>]) -> Result<Coeff, TutteError> {
    let k = a.len();
    let mut sign = 1;
    let mut prev: Coeff = 1;
    for i in 0..k {
        if a[i][i] == 0 {
            let Some(p) = (i + 1..k).find(|&r| a[r][i] != 0) else {
                return Ok(0);
            };
            a.swap(i, p);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let num = a[r][c]
                    .checked_mul(a[i][i])
                    .and_then(|x| a[r][i].checked_mul(a[i][c]).and_then(|y| x.checked_sub(y)))
                    .ok_or(TutteError::Overflow)?;
                a[r][c] = num / prev;
            }
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    Ok(sign * a[k - 1][k - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[Coeff]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.to_vec())
    }

    #[test]
    fn base_cases() {
        assert_eq!(tutte_at_x1(&Multigraph::empty(0)), IntPolynomial::one());
        assert_eq!(tutte_at_x1(&Multigraph::empty(3)), IntPolynomial::one());
        assert_eq!(tutte_at_x1(&Multigraph::from_edges(1, &[(0, 0)]).unwrap()), p(&[0, 1]));
        assert_eq!(tutte_at_x1(&Multigraph::spider(&[3, 1, 2])), IntPolynomial::one());
    }

    #[test]
    fn small_cycles_and_parallel_edges() {
        assert_eq!(tutte_at_x1(&Multigraph::cycle(3)), p(&[2, 1]));
        assert_eq!(tutte_at_x1(&Multigraph::cycle(4)), p(&[3, 1]));
        let par = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(tutte_at_x1(&par), p(&[1, 1]));
        assert_eq!(tutte_subset_oracle(&par).unwrap().at_x1().unwrap(), p(&[1, 1]));
    }

    #[test]
    fn subset_oracle_examples() {
        assert_eq!(tutte_subset_oracle(&Multigraph::cycle(3)).unwrap().to_string(), "x^2+x+y");
        assert_eq!(tutte_subset_oracle(&Multigraph::path(2)).unwrap().to_string(), "x");
        let looped = Multigraph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(tutte_subset_oracle(&looped).unwrap().to_string(), "y");
        let big = Multigraph::cycle(21);
        assert_eq!(tutte_subset_oracle(&big), Err(TutteError::TooManyEdges(21)));
    }

    #[test]
    fn matrix_tree_examples() {
        assert_eq!(spanning_tree_count(&Multigraph::cycle(3)).unwrap(), 3);
        assert_eq!(spanning_tree_count(&Multigraph::star(7).cone().graph).unwrap(), 256);
        assert_eq!(spanning_tree_count(&Multigraph::path(7).cone().graph).unwrap(), 377);
        assert_eq!(spanning_tree_count(&Multigraph::empty(2)), Err(TutteError::Disconnected));
        // K5 has 125 spanning trees
        let mut k5 = Multigraph::empty(5);
        for u in 0..5 {
            for v in u + 1..5 {
                k5.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(spanning_tree_count(&k5).unwrap(), 125);
    }

    #[test]
    fn memo_and_plain_agree() {
        let mut memo = TutteEvaluator::memoized();
        let mut plain = TutteEvaluator::without_memo();
        for n in 1..=8 {
            for g in [Multigraph::path(n).cone().graph, Multigraph::star(n).cone().graph, Multigraph::cycle(n)] {
                assert_eq!(memo.eval(&g), plain.eval(&g));
            }
        }
        assert!(memo.cache_len() > 0);
        assert_eq!(plain.cache_len(), 0);
    }

    #[test]
    fn degree_is_nullity() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1)]).unwrap();
        assert_eq!(tutte_at_x1(&g).degree(), Some(g.nullity()));
    }
}
