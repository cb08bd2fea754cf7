//! Exact maximum average degree.
//!
//! `mad(G) = max_S 2|E(S)|/|V(S)|`. The densest subgraph is found by
//! parametric max-flow: for a trial density `p/q` the closure network
//!
//! ```text
//! source --q--> edge node --inf--> endpoint vertex nodes --p--> sink
//! ```
//!
//! has `max_S (q|E(S)| - p|V(S)|) = q|E| - maxflow`, and the vertex nodes on
//! the source side of the minimum cut form a maximiser. Starting from the
//! density of the whole graph, each round either proves the current density
//! optimal or returns a strictly denser vertex set, whose density becomes
//! the next trial value. Capacities stay integral, so no rounding is involved.

use num_bigint::BigInt;

use super::flow::FlowNetwork;
use crate::graph::Graph;
use crate::rational::Rational;

/// Exact `mad(G)` together with a vertex set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mad {
    pub value: Rational,
    /// Sorted vertex set whose induced subgraph has average degree `value`.
    pub witness: Vec<usize>,
}

/// Computes `mad(g)`. Panics on the null graph.
pub fn mad_exact(g: &Graph) -> Mad {
    assert!(g.n() > 0, "mad is undefined on the null graph");
    if g.m() == 0 {
        return Mad { value: Rational::from_integer(0.into()), witness: vec![0] };
    }
    let mut witness: Vec<usize> = g.vertices().collect();
    let (mut e, mut v) = (g.m() as i64, g.n() as i64);
    while let Some(denser) = denser_than(g, e, v) {
        let e2 = induced_edges(g, &denser) as i64;
        let v2 = denser.len() as i64;
        debug_assert!(e2 * v > e * v2);
        witness = denser;
        e = e2;
        v = v2;
    }
    Mad { value: Rational::new(BigInt::from(2 * e), BigInt::from(v)), witness }
}

/// Average degree `2|E(S)|/|V(S)|` of the subgraph induced by `set`.
pub fn average_degree(g: &Graph, set: &[usize]) -> Rational {
    assert!(!set.is_empty());
    Rational::new(BigInt::from(2 * induced_edges(g, set)), BigInt::from(set.len()))
}

pub(crate) fn induced_edges(g: &Graph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    set.iter().map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count()).sum::<usize>() / 2
}

/// Some vertex set of density strictly greater than `p/q`, if one exists.
fn denser_than(g: &Graph, p: i64, q: i64) -> Option<Vec<usize>> {
    let edges: Vec<_> = g.edges().collect();
    let m = edges.len();
    let (source, sink) = (0, 1);
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + m + v;
    let infinite = q * m as i64 + 1;

    let mut net = FlowNetwork::new(2 + m + g.n());
    for (i, &(a, b)) in edges.iter().enumerate() {
        net.add_edge(source, edge_node(i), q);
        net.add_edge(edge_node(i), vertex_node(a), infinite);
        net.add_edge(edge_node(i), vertex_node(b), infinite);
    }
    for v in g.vertices() {
        net.add_edge(vertex_node(v), sink, p);
    }
    let flow = net.max_flow(source, sink);
    if q * m as i64 - flow <= 0 {
        return None;
    }
    let side = net.source_side(source);
    let set: Vec<usize> = g.vertices().filter(|&v| side[vertex_node(v)]).collect();
    (!set.is_empty()).then_some(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::rational::{int, ratio};

    #[test]
    fn small_values() {
        assert_eq!(mad_exact(&cycle(6)).value, int(2));
        assert_eq!(mad_exact(&path(3)).value, ratio(4, 3));
        assert_eq!(mad_exact(&complete(4)).value, int(3));
        assert_eq!(mad_exact(&Graph::empty(1)).value, int(0));
        assert_eq!(mad_exact(&petersen()).value, int(3));
    }

    #[test]
    fn dense_part_is_found() {
        // K4 plus a long pendant path: the K4 wins
        let mut edges: Vec<_> = complete(4).edges().collect();
        edges.extend([(3, 4), (4, 5), (5, 6), (6, 7)]);
        let g = Graph::from_edges_unchecked(8, edges);
        let mad = mad_exact(&g);
        assert_eq!(mad.value, int(3));
        assert_eq!(mad.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn witness_attains_value() {
        let g = k4_with_subdivided_edge(3);
        let mad = mad_exact(&g);
        assert_eq!(average_degree(&g, &mad.witness), mad.value);
    }
}
