//! Simple undirected graphs on vertices `0..n`.
//!
//! [`Graph`] is the input object for every other module. Adjacency lists are
//! kept sorted, so iteration order (and therefore every tie-break built on
//! top of it) is deterministic.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised while reading or building a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Line numbers in errors are 1-based edge indices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (i, (u, v)) in edges.into_iter().enumerate() {
            let line = i + 1;
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { line, vertex: u });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::Duplicate { line, u, v });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but panics on invalid input. For literals.
    pub fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(n, edges).expect("invalid edge list")
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
        }
        if let Err(pos) = self.adj[v].binary_search(&u) {
            self.adj[v].insert(pos, u);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Number of vertices of each degree, indexed by degree.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_degree() + 1];
        for v in self.vertices() {
            hist[self.degree(v)] += 1;
        }
        hist
    }

    /// Subgraph induced by `keep`, relabelled so that `keep[i]` becomes `i`.
    /// `keep` must be strictly increasing.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Graph on the same vertices where `u ~ v` iff `u` and `v` share a
    /// neighbour. An injective colouring of `self` is exactly a proper
    /// colouring of this graph.
    pub fn neighboring_graph(&self) -> Graph {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for w in self.vertices() {
            let ns = &self.adj[w];
            for (i, &a) in ns.iter().enumerate() {
                for &b in &ns[i + 1..] {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let edges: Vec<_> = self.edges().collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut lg = Graph::empty(edges.len());
        for list in &incident {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    lg.insert_edge(a, b);
                }
            }
        }
        (lg, edges)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// Edge-list document: header `n m`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list document format: first line `n m`, then `m` lines
/// `u v`. LF and CRLF line endings are accepted; blank lines and lines
/// starting with `#` are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (hline, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        reason: "missing header".into(),
    })?;
    let (n, m) = parse_pair(header, hline + 1)?;

    let mut g = Graph::empty(n);
    let mut found = 0;
    for (i, line) in lines {
        let line_no = i + 1;
        let (u, v) = parse_pair(line, line_no)?;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { line: line_no, vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop { line: line_no, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(GraphError::Duplicate { line: line_no, u, v });
        }
        g.insert_edge(u, v);
        found += 1;
    }
    if found != m {
        return Err(GraphError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), GraphError> {
    let malformed = |reason: &str| GraphError::Malformed {
        line: line_no,
        reason: reason.to_string(),
    };
    let mut parts = line.split_whitespace();
    let a = parts.next().ok_or_else(|| malformed("expected two integers"))?;
    let b = parts.next().ok_or_else(|| malformed("expected two integers"))?;
    if parts.next().is_some() {
        return Err(malformed("trailing tokens"));
    }
    let a = a.parse().map_err(|_| malformed("not a nonnegative integer"))?;
    let b = b.parse().map_err(|_| malformed("not a nonnegative integer"))?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_single_vertex_and_crlf() {
        let g = parse_graph("1 0").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        let g = parse_graph("2 1\r\n0 1\r\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_graph("2 1\n0 0"), Err(GraphError::Loop { vertex: 0, .. })));
        assert!(matches!(parse_graph("2 2\n0 1\n1 0"), Err(GraphError::Duplicate { .. })));
        assert!(matches!(parse_graph("2 1\n0 2"), Err(GraphError::OutOfRange { vertex: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 x"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(GraphError::EdgeCount { .. })));
        assert!(matches!(parse_graph(""), Err(GraphError::Malformed { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges_unchecked(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn neighboring_graph_of_small_cases() {
        let c4 = Graph::from_edges_unchecked(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let sq = c4.neighboring_graph();
        assert_eq!(sq.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);

        let star = Graph::from_edges_unchecked(4, [(0, 1), (0, 2), (0, 3)]);
        let sq = star.neighboring_graph();
        assert_eq!(sq.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(sq.degree(0), 0);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::from_edges_unchecked(4, [(0, 1), (1, 2), (2, 3)]);
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
