//! Deterministic constructions and seeded generators.

mod corpus;
mod random;

pub use corpus::{sparse_params as corpus_sparse_params, Corpus, CorpusError, Instance};
pub use random::{random_planar_girth, random_sparse, GenerateError, PlanarBase, SparseParams};

use thiserror::Error;

use crate::graph::Graph;
use crate::structure::PlaneEmbedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactoryError {
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("graph is Class 1 (chromatic index {index} = maximum degree)")]
    NotClassTwo { index: usize },
    #[error("edge colouring search aborted")]
    Aborted,
}

/// Replaces every edge by a path with `k` interior vertices.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    subdivide_counts(g, &vec![k; g.m()], None).0
}

/// Subdivides edge `i` of [`Graph::edges`] `counts[i]` times, carrying the
/// embedding along. Interior vertices are numbered after the original ones,
/// edge by edge, each path listed from its smaller end.
pub fn subdivide_counts(g: &Graph, counts: &[usize], emb: Option<&PlaneEmbedding>) -> (Graph, Option<PlaneEmbedding>) {
    assert_eq!(counts.len(), g.m());
    let total: usize = counts.iter().sum();
    let n = g.n();
    let mut edges = Vec::with_capacity(g.m() + total);
    // first_step[u] holds (v, first vertex on the path from u toward v)
    let mut first_step: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut interior_rot = Vec::with_capacity(total);
    let mut next = n;
    for (i, (u, v)) in g.edges().enumerate() {
        let k = counts[i];
        if k == 0 {
            edges.push((u, v));
            continue;
        }
        let path: Vec<usize> = (next..next + k).collect();
        next += k;
        edges.push((u, path[0]));
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((path[k - 1], v));
        first_step[u].push((v, path[0]));
        first_step[v].push((u, path[k - 1]));
        for j in 0..k {
            let prev = if j == 0 { u } else { path[j - 1] };
            let after = if j + 1 == k { v } else { path[j + 1] };
            interior_rot.push(vec![prev, after]);
        }
    }
    let sub = Graph::from_edges_unchecked(next, edges);
    let emb = emb.map(|e| {
        let mut rotation: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                e.rotation(u)
                    .iter()
                    .map(|&w| first_step[u].iter().find(|&&(t, _)| t == w).map_or(w, |&(_, s)| s))
                    .collect()
            })
            .collect();
        rotation.extend(interior_rot);
        PlaneEmbedding::new(sub.clone(), rotation).expect("subdivision preserves the embedding")
    });
    (sub, emb)
}

/// Replaces edge `u-v` by a path `u-x-v` through the new vertex `x = n`.
pub fn insert_vertex(g: &Graph, u: usize, v: usize) -> Result<Graph, FactoryError> {
    if !g.has_edge(u, v) {
        return Err(FactoryError::MissingEdge(u, v));
    }
    let x = g.n();
    let mut edges: Vec<_> = g.edges().filter(|&e| e != (u.min(v), u.max(v))).collect();
    edges.extend([(u, x), (x, v)]);
    Ok(Graph::from_edges_unchecked(x + 1, edges))
}

/// Subdivides a Class 2 graph once. A `Δ`-injective colouring of the result
/// would colour the edges of `g` with `Δ` colours, so the result has
/// injective chromatic number above `Δ(g)`.
pub fn class2_counterexample(g: &Graph, budget: u64) -> Result<Graph, FactoryError> {
    use crate::exact::{chromatic_index, EdgeClass, Outcome};
    match chromatic_index(g, budget) {
        Outcome::Done(r) if r.class == EdgeClass::Class2 => Ok(subdivide(g, 1)),
        Outcome::Done(r) => Err(FactoryError::NotClassTwo { index: r.index }),
        Outcome::Aborted(_) => Err(FactoryError::Aborted),
    }
}

/// Straight-line drawing of [`crate::families::dodecahedron`]: rings at
/// radius 4, 3, 2, 1, the inner two turned by a tenth of a turn.
pub(crate) fn dodecahedron_coordinates() -> Vec<(f64, f64)> {
    let mut coords = Vec::with_capacity(20);
    for (radius, turn) in [(4.0, 0.0), (3.0, 0.0), (2.0, 0.5), (1.0, 0.5)] {
        coords.extend((0..5).map(|i| {
            let t = std::f64::consts::TAU * (i as f64 + turn) / 5.0;
            (radius * t.cos(), radius * t.sin())
        }));
    }
    coords
}

pub fn embedded_dodecahedron() -> (Graph, PlaneEmbedding) {
    let g = crate::families::dodecahedron();
    let emb = PlaneEmbedding::from_coordinates(g.clone(), &dodecahedron_coordinates(), None).expect("dodecahedron drawing");
    (g, emb)
}

/// `Q_3` with a vertex inserted into edge `0-1`, embedded in the plane.
pub fn cube_with_inserted_vertex() -> (Graph, PlaneEmbedding) {
    let g = insert_vertex(&crate::families::cube(), 0, 1).expect("cube edge");
    // inner square 0,1,3,2 and outer square 4,5,7,6; vertex 8 on edge 0-1
    let coords = [
        (-1.0, -1.0),
        (1.0, -1.0),
        (-1.0, 1.0),
        (1.0, 1.0),
        (-3.0, -3.0),
        (3.0, -3.0),
        (-3.0, 3.0),
        (3.0, 3.0),
        (0.0, -1.0),
    ];
    let emb = PlaneEmbedding::from_coordinates(g.clone(), &coords, None).expect("cube drawing is planar");
    (g, emb)
}
