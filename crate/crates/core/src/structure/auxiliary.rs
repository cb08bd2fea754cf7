//! Derived graphs for the `Δ = 3` arguments: the 2–3 edge subgraph and the
//! auxiliary graph on 3-vertices built from 2- and 3-threads.

use serde::Serialize;
use thiserror::Error;

use super::threads::{thread_decomposition, ThreadDecomposition};
use crate::graph::Graph;

/// Subgraph formed by the edges joining a 2-vertex to a 3-vertex.
#[derive(Clone, Debug)]
pub struct G23 {
    pub graph: Graph,
    /// Vertices incident to no such edge.
    pub isolated: Vec<usize>,
}

pub fn build_g23(g: &Graph) -> G23 {
    let edges = g.edges().filter(|&(u, v)| {
        let (a, b) = (g.degree(u), g.degree(v));
        (a == 2 && b == 3) || (a == 3 && b == 2)
    });
    let graph = Graph::from_edges_unchecked(g.n(), edges);
    let isolated = graph.vertices().filter(|&v| graph.degree(v) == 0).collect();
    G23 { graph, isolated }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuxiliaryError {
    #[error("maximum degree is {0}, expected 3")]
    MaxDegree(usize),
    #[error("vertex {0} has degree 1")]
    OneVertex(usize),
    #[error("thread {ends:?} has {length} interior vertices")]
    LongThread { ends: (usize, usize), length: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AuxRule {
    /// Ends of a 3-thread.
    ThreeThread,
    /// Ends of a 2-thread where an end sees a 3-thread and a 2- or 3-thread
    /// among its other two threads.
    TwoThread,
}

/// One thread that produces an edge of the auxiliary graph. Parallel links
/// between the same pair are kept here even though [`AuxiliaryGraph::graph`]
/// is simple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuxLink {
    pub thread: usize,
    /// Ends as indices into `host_three_vertices`.
    pub ends: (usize, usize),
    pub rule: AuxRule,
    /// Which ends satisfy the 2-thread condition (both `true` for 3-threads).
    pub end_condition: (bool, bool),
}

/// Which ends must satisfy the 2-thread condition for an edge to be added.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwoThreadReading {
    Either,
    Both,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuxiliaryGraph {
    /// Host vertex of each auxiliary vertex.
    pub host_three_vertices: Vec<usize>,
    /// Simple graph on `0..host_three_vertices.len()` (either-end reading).
    #[serde(skip)]
    pub graph: Graph,
    pub links: Vec<AuxLink>,
    /// Nearby 2-vertex count of each auxiliary vertex.
    pub nearby: Vec<usize>,
    pub a_counts: [usize; 10],
    pub a_hat_counts: [usize; 10],
    pub n_h: usize,
    pub n_hat: usize,
    #[serde(skip)]
    pub threads: ThreadDecomposition,
}

impl AuxiliaryGraph {
    /// Simple edge set under the given reading of the 2-thread rule.
    pub fn edges_under(&self, reading: TwoThreadReading) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .links
            .iter()
            .filter(|l| l.ends.0 != l.ends.1)
            .filter(|l| match reading {
                TwoThreadReading::Either => true,
                TwoThreadReading::Both => l.end_condition.0 && l.end_condition.1,
            })
            .map(|l| (l.ends.0.min(l.ends.1), l.ends.0.max(l.ends.1)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Index of host vertex `v` in the auxiliary graph.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.host_three_vertices.binary_search(&v).ok()
    }

    /// Auxiliary graph minus its isolated vertices, as indices.
    pub fn non_isolated(&self) -> Vec<usize> {
        self.graph.vertices().filter(|&i| self.graph.degree(i) > 0).collect()
    }
}

/// Does end `v` of thread `t` see a 3-thread and a 2- or 3-thread among its
/// other two thread incidences?
fn two_thread_condition(td: &ThreadDecomposition, v: usize, t: usize, skip_second: bool) -> bool {
    // for a thread with both ends at v, skip exactly the incidence we came from
    let mut skipped = 0;
    let target = if skip_second { 2 } else { 1 };
    let others: Vec<usize> = td
        .incidences(v)
        .iter()
        .filter(|i| {
            if i.thread == t {
                skipped += 1;
                skipped != target
            } else {
                true
            }
        })
        .map(|i| i.length)
        .collect();
    if others.len() != 2 {
        return false;
    }
    let (a, b) = (others[0], others[1]);
    (a == 3 && (b == 2 || b == 3)) || (b == 3 && (a == 2 || a == 3))
}

pub fn build_auxiliary(g: &Graph) -> Result<AuxiliaryGraph, AuxiliaryError> {
    if g.max_degree() != 3 {
        return Err(AuxiliaryError::MaxDegree(g.max_degree()));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 1) {
        return Err(AuxiliaryError::OneVertex(v));
    }
    let td = thread_decomposition(g);
    if let Some(t) = td.threads.iter().find(|t| t.len() >= 4) {
        return Err(AuxiliaryError::LongThread { ends: t.ends, length: t.len() });
    }

    let host: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let index = |v: usize| host.binary_search(&v).expect("thread ends are 3-vertices");

    let mut links = Vec::new();
    for (id, t) in td.threads.iter().enumerate() {
        let (u, v) = t.ends;
        let ends = (index(u), index(v));
        match t.len() {
            3 => links.push(AuxLink { thread: id, ends, rule: AuxRule::ThreeThread, end_condition: (true, true) }),
            2 => {
                let cu = two_thread_condition(&td, u, id, false);
                let cv = two_thread_condition(&td, v, id, u == v);
                if cu || cv {
                    links.push(AuxLink { thread: id, ends, rule: AuxRule::TwoThread, end_condition: (cu, cv) });
                }
            }
            _ => {}
        }
    }

    let mut graph = Graph::empty(host.len());
    for l in &links {
        if l.ends.0 != l.ends.1 {
            graph.insert_edge(l.ends.0, l.ends.1);
        }
    }

    let nearby: Vec<usize> = host.iter().map(|&v| td.nearby_count(v)).collect();
    let mut a_counts = [0; 10];
    let mut a_hat_counts = [0; 10];
    for (i, &k) in nearby.iter().enumerate() {
        a_counts[k] += 1;
        if graph.degree(i) > 0 {
            a_hat_counts[k] += 1;
        }
    }
    let n_h = host.len();
    let n_hat = graph.vertices().filter(|&i| graph.degree(i) > 0).count();
    Ok(AuxiliaryGraph { host_three_vertices: host, graph, links, nearby, a_counts, a_hat_counts, n_h, n_hat, threads: td })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    /// Two 3-vertices joined by three threads of the given lengths.
    pub(crate) fn theta(lengths: [usize; 3]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for len in lengths {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edges_unchecked(next, edges)
    }

    #[test]
    fn g23_cases() {
        let g = petersen();
        assert_eq!(build_g23(&g).graph.m(), 0);
        assert_eq!(build_g23(&path(4)).graph.m(), 0);
        let sub = crate::factory::subdivide(&complete(4), 1);
        let g23 = build_g23(&sub);
        assert_eq!(g23.graph.m(), 12);
        assert!(g23.isolated.is_empty());
    }

    #[test]
    fn parallel_three_threads_collapse_to_one_edge() {
        let aux = build_auxiliary(&theta([3, 3, 3])).unwrap();
        assert_eq!(aux.graph.m(), 1);
        assert_eq!(aux.links.len(), 3);
        assert_eq!(aux.nearby, vec![9, 9]);
        assert_eq!(aux.a_counts[9], 2);
        assert_eq!(aux.n_hat, 2);
        // mixed: the 2-thread qualifies from both ends (a 3-thread and a 3-thread)
        let aux = build_auxiliary(&theta([3, 3, 2])).unwrap();
        assert_eq!(aux.links.len(), 3);
        assert!(aux.links.iter().all(|l| l.end_condition == (true, true)));
    }

    #[test]
    fn short_threads_give_no_edges() {
        let aux = build_auxiliary(&theta([1, 1, 0])).unwrap();
        assert_eq!(aux.graph.m(), 0);
        assert_eq!(aux.n_hat, 0);
        assert_eq!(aux.a_counts[2], 2);
    }

    #[test]
    fn preconditions() {
        assert_eq!(build_auxiliary(&complete(5)).unwrap_err(), AuxiliaryError::MaxDegree(4));
        assert!(matches!(build_auxiliary(&theta([4, 1, 1])), Err(AuxiliaryError::LongThread { length: 4, .. })));
    }
}
