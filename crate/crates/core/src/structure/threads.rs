//! Threads: maximal paths whose interior vertices have degree 2 and whose
//! ends have degree at least 3.
//!
//! A `k`-thread has `k` interior vertices; `0`-threads are plain edges between
//! `3+`-vertices. The ends of a thread are *pseudo-adjacent*, and the interior
//! vertices of a thread are *nearby* to each end. Runs of 2-vertices that do
//! not sit between two `3+`-vertices (cycles made only of 2-vertices, and
//! chains ending at a 1-vertex) are reported as [`NonThread`]s.

use std::collections::HashSet;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thread {
    /// End vertices; equal for a thread that leaves and re-enters one vertex.
    pub ends: (usize, usize),
    /// Interior 2-vertices ordered from `ends.0` to `ends.1`.
    pub interior: Vec<usize>,
}

impl Thread {
    pub fn len(&self) -> usize {
        self.interior.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interior.is_empty()
    }

    /// Interior vertices ordered starting from the end `from`.
    pub fn interior_from(&self, from: usize) -> Vec<usize> {
        if from == self.ends.0 {
            self.interior.clone()
        } else {
            self.interior.iter().rev().copied().collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NonThread {
    /// A component that is a cycle of 2-vertices, in walk order.
    Cycle(Vec<usize>),
    /// A run of 2-vertices (possibly empty) ending in a 1-vertex. `ends.0`
    /// is the `3+`-vertex it hangs from, or the other 1-vertex when the whole
    /// component is a path.
    Pendant { ends: (usize, usize), interior: Vec<usize> },
}

impl NonThread {
    pub fn two_vertices(&self) -> &[usize] {
        match self {
            NonThread::Cycle(c) => c,
            NonThread::Pendant { interior, .. } => interior,
        }
    }
}

/// One end of a thread seen from that end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Incidence {
    pub thread: usize,
    /// Neighbour of the end along the thread (the far end for a 0-thread).
    pub first: usize,
    pub far: usize,
    pub length: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ThreadDecomposition {
    pub threads: Vec<Thread>,
    pub non_threads: Vec<NonThread>,
    incidences: Vec<Vec<Incidence>>,
}

impl ThreadDecomposition {
    /// Thread ends at `v`, one per incident edge that starts a thread. A thread
    /// with both ends at `v` contributes two incidences.
    pub fn incidences(&self, v: usize) -> &[Incidence] {
        &self.incidences[v]
    }

    /// Thread lengths at `v`, sorted descending.
    pub fn profile(&self, v: usize) -> Vec<usize> {
        let mut p: Vec<_> = self.incidences[v].iter().map(|i| i.length).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// Sorted, deduplicated set of vertices pseudo-adjacent to `v`.
    pub fn pseudo_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<_> = self.incidences[v].iter().map(|i| i.far).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn pseudo_adjacent(&self, u: usize, v: usize) -> bool {
        self.incidences[u].iter().any(|i| i.far == v)
    }

    /// Nearby 2-vertices of `v` in walk order from `v`, one entry per
    /// (thread, end) incidence; a
    /// vertex reachable along two incidences of `v` is listed twice.
    pub fn nearby(&self, v: usize) -> Vec<usize> {
        self.incidences[v]
            .iter()
            .flat_map(|i| {
                let t = &self.threads[i.thread].interior;
                let forward = t.first() == Some(&i.first);
                let seq: Vec<usize> = if forward { t.clone() } else { t.iter().rev().copied().collect() };
                seq
            })
            .collect()
    }

    pub fn nearby_count(&self, v: usize) -> usize {
        self.incidences[v].iter().map(|i| i.length).sum()
    }

    /// The thread containing the 2-vertex `x` in its interior, if any.
    pub fn thread_of(&self, x: usize) -> Option<usize> {
        self.threads.iter().position(|t| t.interior.contains(&x))
    }

    /// Longest thread length (0 if there are none).
    pub fn longest(&self) -> usize {
        self.threads.iter().map(Thread::len).max().unwrap_or(0)
    }

    /// Count of threads by length: `histogram[k]` = number of `k`-threads.
    pub fn length_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.longest() + 1];
        for t in &self.threads {
            h[t.len()] += 1;
        }
        h
    }
}

pub fn thread_decomposition(g: &Graph) -> ThreadDecomposition {
    let n = g.n();
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut threads = Vec::new();
    let mut non_threads = Vec::new();
    let mut incidences = vec![Vec::new(); n];
    let mut covered = vec![false; n];

    // walk from `start` into `first` until a vertex of degree != 2
    let walk = |start: usize, first: usize| -> (Vec<usize>, usize, usize) {
        let (mut prev, mut cur) = (start, first);
        let mut interior = Vec::new();
        while g.degree(cur) == 2 {
            interior.push(cur);
            let ns = g.neighbors(cur);
            let next = if ns[0] == prev { ns[1] } else { ns[0] };
            prev = cur;
            cur = next;
        }
        (interior, prev, cur)
    };

    for v in g.vertices().filter(|&v| g.degree(v) >= 3) {
        for &a in g.neighbors(v) {
            if used.contains(&(v, a)) {
                continue;
            }
            let (interior, last, end) = walk(v, a);
            used.insert((v, a));
            used.insert((end, last));
            for &x in &interior {
                covered[x] = true;
            }
            if g.degree(end) >= 3 {
                let id = threads.len();
                let length = interior.len();
                incidences[v].push(Incidence { thread: id, first: a, far: end, length });
                incidences[end].push(Incidence { thread: id, first: last, far: v, length });
                threads.push(Thread { ends: (v, end), interior });
            } else {
                non_threads.push(NonThread::Pendant { ends: (v, end), interior });
            }
        }
    }

    // leftover 2-vertices live in components of maximum degree 2
    for s in g.vertices() {
        if g.degree(s) != 2 || covered[s] {
            continue;
        }
        // slide to a 1-vertex end if there is one
        let (mut prev, mut cur) = (g.neighbors(s)[0], s);
        let mut steps = 0;
        while g.degree(cur) == 2 && steps <= n {
            let ns = g.neighbors(cur);
            let next = if ns[0] == prev { ns[1] } else { ns[0] };
            prev = cur;
            cur = next;
            steps += 1;
            if cur == s {
                break;
            }
        }
        if g.degree(cur) == 2 {
            // pure cycle: list it starting at its smallest vertex
            let mut cyc = vec![s];
            let (mut p, mut c) = (s, g.neighbors(s)[0]);
            while c != s {
                cyc.push(c);
                let ns = g.neighbors(c);
                let next = if ns[0] == p { ns[1] } else { ns[0] };
                p = c;
                c = next;
            }
            for &x in &cyc {
                covered[x] = true;
            }
            non_threads.push(NonThread::Cycle(cyc));
        } else {
            let tip = cur;
            let (interior, _, other) = walk(tip, g.neighbors(tip)[0]);
            for &x in &interior {
                covered[x] = true;
            }
            let (ends, interior) = if tip <= other {
                ((tip, other), interior)
            } else {
                ((other, tip), interior.into_iter().rev().collect())
            };
            non_threads.push(NonThread::Pendant { ends, interior });
        }
    }

    ThreadDecomposition { threads, non_threads, incidences }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn two_vertex_count(g: &Graph) -> usize {
        g.vertices().filter(|&v| g.degree(v) == 2).count()
    }

    fn check_cover(g: &Graph, td: &ThreadDecomposition) {
        let in_threads: usize = td.threads.iter().map(Thread::len).sum();
        let outside: usize = td.non_threads.iter().map(|t| t.two_vertices().len()).sum();
        assert_eq!(in_threads + outside, two_vertex_count(g));
    }

    #[test]
    fn k4_with_one_long_edge() {
        let g = k4_with_subdivided_edge(2);
        let td = thread_decomposition(&g);
        check_cover(&g, &td);
        let long: Vec<_> = td.threads.iter().filter(|t| t.len() > 0).collect();
        assert_eq!(long.len(), 1);
        assert_eq!(long[0].len(), 2);
        assert_eq!(long[0].ends, (0, 1));
        assert_eq!(td.threads.len(), 6);
        assert!(td.non_threads.is_empty());
    }

    #[test]
    fn five_cycle_is_not_a_thread() {
        let g = cycle(5);
        let td = thread_decomposition(&g);
        assert!(td.threads.is_empty());
        assert_eq!(td.non_threads, vec![NonThread::Cycle(vec![0, 1, 2, 3, 4])]);
        check_cover(&g, &td);
    }

    #[test]
    fn pendant_chain_is_reported() {
        // K4 plus a path 3-4-5-6 hanging off vertex 3
        let mut edges: Vec<_> = complete(4).edges().collect();
        edges.extend([(3, 4), (4, 5), (5, 6)]);
        let g = Graph::from_edges_unchecked(7, edges);
        let td = thread_decomposition(&g);
        check_cover(&g, &td);
        assert_eq!(td.non_threads, vec![NonThread::Pendant { ends: (3, 6), interior: vec![4, 5] }]);
        // a bare path is one pendant chain between its two ends
        let td = thread_decomposition(&path(4));
        assert_eq!(td.non_threads, vec![NonThread::Pendant { ends: (0, 3), interior: vec![1, 2] }]);
    }

    #[test]
    fn nearby_counts_per_incidence() {
        let g = k4_with_subdivided_edge(2);
        let td = thread_decomposition(&g);
        assert_eq!(td.nearby_count(0), 2);
        assert_eq!(td.nearby(1), vec![5, 4]);
        assert_eq!(td.profile(0), vec![2, 0, 0]);
        assert!(td.pseudo_adjacent(0, 1));
        assert_eq!(td.pseudo_neighbors(0), vec![1, 2, 3]);
    }
}
