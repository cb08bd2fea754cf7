//! Constructive colouring from lists whose sizes match vertex degrees.
//!
//! Two degree-list facts drive the extensions used by the colouring engine:
//!
//! * a connected graph is colourable from lists with `|L(v)| >= d(v)` as soon
//!   as one vertex has surplus, by colouring in decreasing distance from it;
//! * with no surplus anywhere, colouring fails only on Gallai trees (every
//!   block a clique or an odd cycle) with suitably chosen lists.
//!
//! The surplus case is fully constructive. The no-surplus case is handled
//! constructively when a non-cut vertex has a colour its neighbour lacks, or
//! when the graph is an even cycle with equal lists; anything else falls back
//! to the exact oracle and is flagged.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{list_color_exact, ListAssignment, ListOutcome, Outcome};
use crate::graph::Graph;

/// Node budget for the exact fallback.
pub const FALLBACK_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted; bridges are 2-vertex blocks and
    /// isolated vertices are 1-vertex blocks.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// `(block, cut vertex)` incidences of the block-cut forest.
    pub block_tree: Vec<(usize, usize)>,
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut is_cut = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph,
        u: usize,
        parent: usize,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<usize>>,
        is_cut: &mut [bool],
    ) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        let mut children = 0;
        for &w in g.neighbors(u) {
            if disc[w] == usize::MAX {
                children += 1;
                stack.push((u, w));
                dfs(g, w, u, disc, low, time, stack, out, is_cut);
                low[u] = low[u].min(low[w]);
                if low[w] >= disc[u] {
                    if parent != usize::MAX || children > 1 {
                        is_cut[u] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    out.push(block);
                }
            } else if w != parent && disc[w] < disc[u] {
                stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        }
    }

    for s in g.vertices() {
        if disc[s] != usize::MAX {
            continue;
        }
        if g.degree(s) == 0 {
            disc[s] = time;
            time += 1;
            out.push(vec![s]);
            continue;
        }
        dfs(g, s, usize::MAX, &mut disc, &mut low, &mut time, &mut stack, &mut out, &mut is_cut);
    }
    out.sort();
    let cut_vertices: Vec<usize> = g.vertices().filter(|&v| is_cut[v]).collect();
    let mut block_tree = Vec::new();
    for (i, b) in out.iter().enumerate() {
        for &c in &cut_vertices {
            if b.binary_search(&c).is_ok() {
                block_tree.push((i, c));
            }
        }
    }
    BlockDecomposition { blocks: out, cut_vertices, block_tree }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockShape {
    Clique,
    OddCycle,
    Other,
}

/// Shape of the subgraph induced by `block`.
pub fn block_shape(g: &Graph, block: &[usize]) -> BlockShape {
    let k = block.len();
    let h = g.induced(block);
    if h.m() == k * (k - 1) / 2 {
        BlockShape::Clique
    } else if k % 2 == 1 && h.vertices().all(|v| h.degree(v) == 2) {
        BlockShape::OddCycle
    } else {
        BlockShape::Other
    }
}

/// Whether a connected graph is degree-choosable, with a witness block that
/// is neither a clique nor an odd cycle when it is.
pub fn is_degree_choosable(g: &Graph) -> (bool, Option<Vec<usize>>) {
    let bd = blocks(g);
    match bd.blocks.into_iter().find(|b| block_shape(g, b) == BlockShape::Other) {
        Some(b) => (true, Some(b)),
        None => (false, None),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum ListColorError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} has {size} colours for degree {degree}")]
    ListTooShort { vertex: usize, size: usize, degree: usize },
    #[error("vertex {vertex} has no surplus")]
    NoSurplus { vertex: usize },
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("all lists are identical")]
    IdenticalLists,
    #[error("every block is a clique or an odd cycle")]
    GallaiTree,
    #[error("no colouring from these lists exists")]
    Unsat,
    #[error("exact fallback ran out of budget")]
    Aborted,
}

/// Which construction produced a colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    /// Decreasing distance from a surplus vertex.
    Surplus,
    /// Precolour a non-cut vertex with a colour its neighbour lacks, then
    /// the surplus route from that neighbour.
    Split,
    /// Even cycle with equal 2-lists, coloured alternately.
    EvenCycle,
    /// Exact search.
    Fallback,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListColoring {
    pub colors: Vec<usize>,
    pub route: Route,
    /// Vertices in colouring order with the number of distinct colours
    /// forbidden by already coloured neighbours at that moment.
    pub trace: Vec<(usize, usize)>,
    /// Set when the exact oracle had to be used.
    pub internal_fallback: bool,
}

fn check_sizes(g: &Graph, lists: &ListAssignment) -> Result<(), ListColorError> {
    for v in g.vertices() {
        if lists[v].len() < g.degree(v) {
            return Err(ListColorError::ListTooShort { vertex: v, size: lists[v].len(), degree: g.degree(v) });
        }
    }
    Ok(())
}

const NONE: usize = usize::MAX;

/// Colours `order` greedily, taking the smallest free list colour.
fn greedy(g: &Graph, lists: &ListAssignment, order: &[usize], colors: &mut [usize], trace: &mut Vec<(usize, usize)>) -> bool {
    for &v in order {
        let mut forbidden: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).filter(|&c| c != NONE).collect();
        forbidden.sort_unstable();
        forbidden.dedup();
        trace.push((v, forbidden.len()));
        match lists[v].iter().copied().filter(|c| forbidden.binary_search(c).is_err()).min() {
            Some(c) => colors[v] = c,
            None => return false,
        }
    }
    true
}

/// Vertices of the component of `y` ordered by decreasing BFS distance from
/// `y` (ties by increasing id), `y` last.
fn surplus_order(g: &Graph, y: usize, skip: &[bool]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[y] = 0;
    let mut queue = VecDeque::from([y]);
    let mut seen = vec![y];
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !skip[w] && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                seen.push(w);
                queue.push_back(w);
            }
        }
    }
    seen.sort_by_key(|&v| (std::cmp::Reverse(dist[v]), v));
    seen
}

/// Surplus construction on a connected graph: `|L(v)| >= d(v)` everywhere
/// and `|L(y)| > d(y)`.
pub fn color_theorem_a_surplus(g: &Graph, lists: &ListAssignment, y: usize) -> Result<ListColoring, ListColorError> {
    if !g.is_connected() {
        return Err(ListColorError::Disconnected);
    }
    check_sizes(g, lists)?;
    if lists[y].len() <= g.degree(y) {
        return Err(ListColorError::NoSurplus { vertex: y });
    }
    let order = surplus_order(g, y, &vec![false; g.n()]);
    let mut colors = vec![NONE; g.n()];
    let mut trace = Vec::new();
    let ok = greedy(g, lists, &order, &mut colors, &mut trace);
    debug_assert!(ok, "surplus order always leaves a free colour");
    if !ok {
        return Err(ListColorError::Unsat);
    }
    Ok(ListColoring { colors, route: Route::Surplus, trace, internal_fallback: false })
}

/// Non-cut vertex `a`, neighbour `b` and colour `α ∈ L(a) \ L(b)`, smallest
/// triple first.
fn split_edge(g: &Graph, lists: &ListAssignment, cut: &[bool]) -> Option<(usize, usize, usize)> {
    for a in g.vertices().filter(|&a| !cut[a]) {
        for &b in g.neighbors(a) {
            if let Some(&alpha) = lists[a].iter().filter(|c| !lists[b].contains(c)).min() {
                return Some((a, b, alpha));
            }
        }
    }
    None
}

/// Colours `a` with `alpha`, then the rest by decreasing distance from `b`,
/// which has surplus in `g - a`.
fn split_route(g: &Graph, lists: &ListAssignment, a: usize, b: usize, alpha: usize) -> ListColoring {
    let mut colors = vec![NONE; g.n()];
    colors[a] = alpha;
    let mut trace = vec![(a, 0)];
    let mut skip = vec![false; g.n()];
    skip[a] = true;
    let order = surplus_order(g, b, &skip);
    let ok = greedy(g, lists, &order, &mut colors, &mut trace);
    debug_assert!(ok, "split route leaves a free colour everywhere");
    ListColoring { colors, route: Route::Split, trace, internal_fallback: false }
}

/// Non-uniform construction on a 2-connected graph with `|L(v)| >= d(v)` and
/// lists that are not all equal.
pub fn color_theorem_a_nonuniform(g: &Graph, lists: &ListAssignment) -> Result<ListColoring, ListColorError> {
    if g.n() < 2 || !g.is_connected() || blocks(g).blocks.len() != 1 {
        return Err(ListColorError::NotTwoConnected);
    }
    check_sizes(g, lists)?;
    let mut sorted: Vec<Vec<usize>> = lists.iter().map(|l| {
        let mut l = l.clone();
        l.sort_unstable();
        l.dedup();
        l
    }).collect();
    sorted.dedup();
    if sorted.len() == 1 {
        return Err(ListColorError::IdenticalLists);
    }
    // in a connected graph some edge has distinct lists, so one side has a
    // colour the other lacks; no vertex of a 2-connected graph is a cut vertex
    let (a, b, alpha) = split_edge(g, lists, &vec![false; g.n()]).expect("lists differ across some edge");
    Ok(split_route(g, lists, a, b, alpha))
}

fn exact_fallback(g: &Graph, lists: &ListAssignment) -> Result<ListColoring, ListColorError> {
    match list_color_exact(g, lists, FALLBACK_BUDGET) {
        Outcome::Done(ListOutcome::Colorable(c)) => {
            Ok(ListColoring { colors: c.assignment, route: Route::Fallback, trace: Vec::new(), internal_fallback: true })
        }
        Outcome::Done(ListOutcome::Unsat { .. }) => Err(ListColorError::Unsat),
        Outcome::Aborted(_) => Err(ListColorError::Aborted),
    }
}

/// Degree-list construction on a connected degree-choosable graph.
pub fn color_degree_lists(g: &Graph, lists: &ListAssignment) -> Result<ListColoring, ListColorError> {
    if !g.is_connected() {
        return Err(ListColorError::Disconnected);
    }
    check_sizes(g, lists)?;
    if !is_degree_choosable(g).0 {
        return Err(ListColorError::GallaiTree);
    }
    color_connected(g, lists)
}

/// Tries the constructive routes in order, then the exact oracle.
fn color_connected(g: &Graph, lists: &ListAssignment) -> Result<ListColoring, ListColorError> {
    if let Some(y) = g.vertices().find(|&v| lists[v].len() > g.degree(v)) {
        return color_theorem_a_surplus(g, lists, y);
    }
    let bd = blocks(g);
    let mut cut = vec![false; g.n()];
    for &c in &bd.cut_vertices {
        cut[c] = true;
    }
    if let Some((a, b, alpha)) = split_edge(g, lists, &cut) {
        return Ok(split_route(g, lists, a, b, alpha));
    }
    let even_cycle = g.n() % 2 == 0 && g.n() >= 4 && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2);
    if even_cycle && lists.iter().all(|l| l.len() == 2 && *l == lists[0]) {
        return Ok(alternate_cycle(g, &lists[0]));
    }
    exact_fallback(g, lists)
}

fn alternate_cycle(g: &Graph, pair: &[usize]) -> ListColoring {
    let mut colors = vec![NONE; g.n()];
    let mut trace = Vec::new();
    let (mut prev, mut cur) = (NONE, 0);
    for i in 0..g.n() {
        let mut seen: Vec<usize> = g.neighbors(cur).iter().map(|&w| colors[w]).filter(|&c| c != NONE).collect();
        seen.dedup();
        trace.push((cur, seen.len()));
        colors[cur] = pair[i % 2];
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev && colors[w] == NONE);
        prev = cur;
        match next {
            Some(w) => cur = w,
            None => break,
        }
    }
    ListColoring { colors, route: Route::EvenCycle, trace, internal_fallback: false }
}

/// Colours every component of `g` independently with the routes of
/// [`color_degree_lists`], without requiring degree-sized lists; components
/// that no construction covers go to the exact oracle.
pub fn color_lists_auto(g: &Graph, lists: &ListAssignment) -> Result<ListColoring, ListColorError> {
    let mut colors = vec![NONE; g.n()];
    let mut trace = Vec::new();
    let mut fallback = false;
    let mut routes = Vec::new();
    for comp in g.components() {
        let h = g.induced(&comp);
        let sub_lists: ListAssignment = comp.iter().map(|&v| lists[v].clone()).collect();
        let sized = h.vertices().all(|v| sub_lists[v].len() >= h.degree(v));
        let r = if sized { color_connected(&h, &sub_lists)? } else { exact_fallback(&h, &sub_lists)? };
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = r.colors[i];
        }
        trace.extend(r.trace.iter().map(|&(v, f)| (comp[v], f)));
        fallback |= r.internal_fallback;
        routes.push(r.route);
    }
    let route = if fallback {
        Route::Fallback
    } else if routes.contains(&Route::Split) {
        Route::Split
    } else if routes.contains(&Route::EvenCycle) {
        Route::EvenCycle
    } else {
        Route::Surplus
    };
    Ok(ListColoring { colors, route, trace, internal_fallback: fallback })
}

/// Whether `colors` is a proper colouring of `g` from `lists`.
pub fn is_list_coloring(g: &Graph, lists: &ListAssignment, colors: &[usize]) -> bool {
    colors.len() == g.n()
        && g.vertices().all(|v| lists[v].contains(&colors[v]))
        && g.edges().all(|(u, v)| colors[u] != colors[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn block_examples() {
        let bowtie = Graph::from_edges_unchecked(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        let bd = blocks(&bowtie);
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices, vec![2]);
        assert_eq!(blocks(&path(5)).blocks.len(), 4);
        assert_eq!(blocks(&star(4)).blocks.len(), 4);
        assert_eq!(blocks(&cycle(6)).blocks.len(), 1);
    }

    #[test]
    fn surplus_examples() {
        let p3 = path(3);
        let lists = vec![vec![1, 2], vec![1, 2], vec![7]];
        // y = 0 is the far end with a 2-list
        let r = color_theorem_a_surplus(&p3, &lists, 0).unwrap();
        assert!(is_list_coloring(&p3, &lists, &r.colors));
        let c4 = cycle(4);
        let lists = vec![vec![1, 2, 3], vec![1, 2], vec![1, 2], vec![1, 2]];
        let r = color_theorem_a_surplus(&c4, &lists, 0).unwrap();
        assert!(is_list_coloring(&c4, &lists, &r.colors));
        assert_eq!(r.trace.last().unwrap().0, 0);
        let s = star(4);
        let lists = vec![vec![0, 1, 2, 3, 4], vec![9], vec![9], vec![9], vec![9]];
        assert!(color_theorem_a_surplus(&s, &lists, 0).is_ok());
        assert_eq!(color_theorem_a_surplus(&s, &lists, 1), Err(ListColorError::NoSurplus { vertex: 1 }));
    }

    #[test]
    fn nonuniform_examples() {
        let c6 = cycle(6);
        let mut lists = vec![vec![1, 2]; 6];
        lists[3] = vec![1, 3];
        let r = color_theorem_a_nonuniform(&c6, &lists).unwrap();
        assert!(is_list_coloring(&c6, &lists, &r.colors));
        assert_eq!(color_theorem_a_nonuniform(&cycle(4), &vec![vec![1, 2]; 4]), Err(ListColorError::IdenticalLists));
        let mut lists = vec![vec![1, 2]; 8];
        lists[1] = vec![1, 2, 3];
        lists[7] = vec![1, 2, 4];
        let c8 = cycle(8);
        assert!(is_list_coloring(&c8, &lists, &color_theorem_a_nonuniform(&c8, &lists).unwrap().colors));
    }

    #[test]
    fn degree_choosability() {
        assert!(!is_degree_choosable(&cycle(5)).0);
        assert!(is_degree_choosable(&cycle(6)).0);
        assert!(!is_degree_choosable(&complete(4)).0);
        let r = color_degree_lists(&cycle(6), &vec![vec![4, 5]; 6]).unwrap();
        assert_eq!(r.route, Route::EvenCycle);
        assert!(is_list_coloring(&cycle(6), &vec![vec![4, 5]; 6], &r.colors));
        assert_eq!(color_degree_lists(&complete(3), &vec![vec![1, 2]; 3]), Err(ListColorError::GallaiTree));
        // C6 plus a chord, degree-sized lists
        let g = Graph::from_edges_unchecked(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]);
        let lists: ListAssignment = g.vertices().map(|v| (0..g.degree(v)).collect()).collect();
        let r = color_degree_lists(&g, &lists).unwrap();
        assert!(is_list_coloring(&g, &lists, &r.colors));
    }
}
