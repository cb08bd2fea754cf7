//! Named graphs used as fixtures, bases and counterexample seeds.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `0-1-...-(n-1)-0`; `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges_unchecked(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges_unchecked(k + 1, (1..=k).map(|i| (0, i)))
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_unchecked(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges_unchecked(10, edges)
}

/// The 3-cube `Q_3`; vertices are 3-bit strings, adjacent when they differ in
/// one bit.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_unchecked(8, edges)
}

/// Octahedron `K_{2,2,2}`: antipodal pairs `(0,5)`, `(1,3)`, `(2,4)`.
/// Dodecahedron as four 5-rings: `5r + i` is position `i` of ring `r`.
/// Rings 0 and 3 are pentagons; ring 1 joins ring 0 to ring 2 in a zigzag.
pub fn dodecahedron() -> Graph {
    let at = |r: usize, i: usize| 5 * r + i % 5;
    let edges = (0..5).flat_map(|i| {
        [
            (at(0, i), at(0, i + 1)),
            (at(0, i), at(1, i)),
            (at(1, i), at(2, i)),
            (at(1, i + 1), at(2, i)),
            (at(2, i), at(3, i)),
            (at(3, i), at(3, i + 1)),
        ]
    });
    Graph::from_edges_unchecked(20, edges)
}

pub fn octahedron() -> Graph {
    let g = complete(6);
    let mut edges: Vec<_> = g.edges().collect();
    edges.retain(|&e| e != (0, 5) && e != (1, 3) && e != (2, 4));
    Graph::from_edges_unchecked(6, edges)
}

/// Wheel with hub 0 and rim `1..=k` in cyclic order.
pub fn wheel(k: usize) -> Graph {
    let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    edges.extend((1..=k).map(|i| (i, i % k + 1)));
    Graph::from_edges_unchecked(k + 1, edges)
}

/// `K_4` with one edge replaced by a path carrying `k` new vertices.
pub fn k4_with_subdivided_edge(k: usize) -> Graph {
    let mut edges = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut prev = 0;
    for i in 0..k {
        edges.push((prev, 4 + i));
        prev = 4 + i;
    }
    edges.push((prev, 1));
    Graph::from_edges_unchecked(4 + k, edges)
}
