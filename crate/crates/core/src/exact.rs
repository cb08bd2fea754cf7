//! Exact colouring oracles: chromatic number, list colouring, injective
//! chromatic number and chromatic index.
//!
//! Every search counts nodes (colour assignments tried) against an explicit
//! budget. Exhausting the budget yields [`Outcome::Aborted`], never a guess.
//! All tie-breaks go to the lowest vertex id, so results are reproducible.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// A total colouring; colour ids are small non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let mut used = assignment.clone();
        used.sort_unstable();
        used.dedup();
        Coloring { palette_size: used.len(), assignment }
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// Per-vertex colour lists.
pub type ListAssignment = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Aborted {
    pub nodes: u64,
    /// Best bounds known when the search stopped.
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome<T> {
    Done(T),
    Aborted(Aborted),
}

impl<T> Outcome<T> {
    pub fn done(self) -> Option<T> {
        match self {
            Outcome::Done(t) => Some(t),
            Outcome::Aborted(_) => None,
        }
    }

    pub fn is_aborted(&self) -> bool {
        matches!(self, Outcome::Aborted(_))
    }
}

/// Certificate for `χ(g) = value`: a colouring with `value` colours, a
/// clique, and the exhaustive refutation of `value - 1` colours when the
/// clique alone does not prove optimality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chromatic {
    pub value: usize,
    pub coloring: Coloring,
    pub clique: Vec<usize>,
    /// `Some(k)` when `k = value - 1` colours were refuted by search.
    pub refuted: Option<usize>,
    pub nodes: u64,
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

/// Greedy clique: extend from each vertex in decreasing-degree order and keep
/// the largest found.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    for &s in &order {
        let mut clique = vec![s];
        for &v in &order {
            if v != s && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// DSATUR greedy colouring.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == NONE)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("uncoloured vertex");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).expect("free colour");
        color[v] = c;
        for &w in g.neighbors(v) {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    Coloring::new(color)
}

/// Backtracking `k`-colouring decision with DSATUR branching. The vertices of
/// `clique` are fixed to colours `0..clique.len()`.
struct KColor<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    count: Vec<Vec<u32>>,
    sat: Vec<usize>,
    max_used: usize,
}

const UNCOLORED: usize = usize::MAX;

impl<'a> KColor<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        KColor { g, k, color: vec![UNCOLORED; g.n()], count: vec![vec![0; k]; g.n()], sat: vec![0; g.n()], max_used: 0 }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            self.count[w][c] += 1;
            if self.count[w][c] == 1 {
                self.sat[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = UNCOLORED;
        for &w in self.g.neighbors(v) {
            self.count[w][c] -= 1;
            if self.count[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        self.g
            .vertices()
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    /// `Some(true)` coloured, `Some(false)` refuted, `None` out of budget.
    fn search(&mut self, budget: &mut Budget) -> Option<bool> {
        let Some(v) = self.pick() else { return Some(true) };
        if self.sat[v] >= self.k {
            return Some(false);
        }
        // colours above max_used are interchangeable: try only the first
        let top = (self.max_used + 1).min(self.k - 1);
        for c in 0..=top {
            if self.count[v][c] > 0 {
                continue;
            }
            if !budget.tick() {
                return None;
            }
            let saved = self.max_used;
            self.max_used = self.max_used.max(c);
            self.assign(v, c);
            let r = self.search(budget);
            self.unassign(v);
            self.max_used = saved;
            match r {
                Some(false) => {}
                other => {
                    if other == Some(true) {
                        self.assign(v, c);
                    }
                    return other;
                }
            }
        }
        Some(false)
    }
}

fn decide_k(g: &Graph, k: usize, clique: &[usize], budget: &mut Budget) -> Option<Option<Coloring>> {
    if g.n() == 0 {
        return Some(Some(Coloring::new(Vec::new())));
    }
    if k == 0 || clique.len() > k {
        return Some(None);
    }
    let mut s = KColor::new(g, k);
    for (i, &v) in clique.iter().enumerate() {
        if (0..i).any(|j| !g.has_edge(clique[j], v)) {
            unreachable!("clique vertices are pairwise adjacent");
        }
        s.assign(v, i);
    }
    s.max_used = clique.len().saturating_sub(1);
    match s.search(budget)? {
        true => Some(Some(Coloring::new(s.color))),
        false => Some(None),
    }
}

/// Exact chromatic number by branch and bound: clique lower bound, DSATUR
/// upper bound, then exact `k`-colourability for each `k` in between.
pub fn chromatic_number(g: &Graph, budget: u64) -> Outcome<Chromatic> {
    if g.n() == 0 {
        return Outcome::Done(Chromatic { value: 0, coloring: Coloring::new(Vec::new()), clique: Vec::new(), refuted: None, nodes: 0 });
    }
    let clique = greedy_clique(g);
    let mut best = dsatur_greedy(g);
    let mut budget = Budget { used: 0, limit: budget };
    let lower = clique.len();
    // search downward from the greedy bound: each success lowers `best`
    let mut refuted = None;
    let mut k = best.palette_size;
    while k > lower {
        match decide_k(g, k - 1, &clique, &mut budget) {
            None => return Outcome::Aborted(Aborted { nodes: budget.used, lower, upper: best.palette_size }),
            Some(Some(c)) => {
                best = c;
                k = best.palette_size;
            }
            Some(None) => {
                refuted = Some(k - 1);
                break;
            }
        }
    }
    Outcome::Done(Chromatic { value: best.palette_size, coloring: best, clique, refuted, nodes: budget.used.min(budget.limit) })
}

/// `χ(G⁽²⁾)`: the least number of colours in an injective colouring.
pub fn injective_chromatic_number(g: &Graph, budget: u64) -> Outcome<Chromatic> {
    chromatic_number(&g.neighboring_graph(), budget)
}

/// Decides whether `g` has an injective colouring with at most `k` colours.
pub fn injective_k_colorable(g: &Graph, k: usize, budget: u64) -> Outcome<Option<Coloring>> {
    let g2 = g.neighboring_graph();
    let clique = greedy_clique(&g2);
    let mut budget = Budget { used: 0, limit: budget };
    match decide_k(&g2, k, &clique, &mut budget) {
        Some(r) => Outcome::Done(r),
        None => Outcome::Aborted(Aborted { nodes: budget.used, lower: clique.len(), upper: g2.n() }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ListOutcome {
    Colorable(Coloring),
    Unsat { nodes: u64 },
}

/// Exact list colouring by backtracking on the vertex with the fewest
/// remaining options.
pub fn list_color_exact(g: &Graph, lists: &ListAssignment, budget: u64) -> Outcome<ListOutcome> {
    assert_eq!(lists.len(), g.n(), "one list per vertex");
    let mut color = vec![UNCOLORED; g.n()];
    let mut budget = Budget { used: 0, limit: budget };
    match list_search(g, lists, &mut color, &mut budget) {
        None => Outcome::Aborted(Aborted { nodes: budget.used, lower: 0, upper: 0 }),
        Some(true) => Outcome::Done(ListOutcome::Colorable(Coloring::new(color))),
        Some(false) => Outcome::Done(ListOutcome::Unsat { nodes: budget.used }),
    }
}

fn options(g: &Graph, lists: &ListAssignment, color: &[usize], v: usize) -> Vec<usize> {
    lists[v].iter().copied().filter(|&c| g.neighbors(v).iter().all(|&w| color[w] != c)).collect()
}

fn list_search(g: &Graph, lists: &ListAssignment, color: &mut [usize], budget: &mut Budget) -> Option<bool> {
    let mut pick: Option<(usize, Vec<usize>)> = None;
    for v in g.vertices().filter(|&v| color[v] == UNCOLORED) {
        let opts = options(g, lists, color, v);
        if pick.as_ref().is_none_or(|(_, o)| opts.len() < o.len()) {
            let empty = opts.is_empty();
            pick = Some((v, opts));
            if empty {
                break;
            }
        }
    }
    let Some((v, opts)) = pick else { return Some(true) };
    for c in opts {
        if !budget.tick() {
            return None;
        }
        color[v] = c;
        match list_search(g, lists, color, budget) {
            Some(false) => color[v] = UNCOLORED,
            other => {
                if other.is_none() {
                    color[v] = UNCOLORED;
                }
                return other;
            }
        }
    }
    Some(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    Class1,
    Class2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticIndex {
    pub index: usize,
    pub class: EdgeClass,
    /// Colour of each edge of [`Graph::edges`], in order.
    pub edge_colors: Vec<((usize, usize), usize)>,
    pub certificate: Chromatic,
}

/// Chromatic index via the vertex solver on the line graph.
pub fn chromatic_index(g: &Graph, budget: u64) -> Outcome<ChromaticIndex> {
    assert!(g.max_degree() >= 1, "chromatic index needs an edge");
    let (lg, edges) = g.line_graph();
    match chromatic_number(&lg, budget) {
        Outcome::Aborted(a) => Outcome::Aborted(a),
        Outcome::Done(c) => {
            let class = if c.value == g.max_degree() { EdgeClass::Class1 } else { EdgeClass::Class2 };
            let edge_colors = edges.iter().copied().zip(c.coloring.assignment.iter().copied()).collect();
            Outcome::Done(ChromaticIndex { index: c.value, class, edge_colors, certificate: c })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum Violation {
    #[error("colouring has {found} entries for {expected} vertices")]
    Partial { expected: usize, found: usize },
    #[error("vertices {u} and {v} share neighbour {common} and colour {color}")]
    Conflict { u: usize, v: usize, common: usize, color: usize },
}

/// Checks that no two vertices with a common neighbour share a colour.
/// Reports the conflict with the smallest `(u, v, common)`.
pub fn validate_injective(g: &Graph, colors: &[usize]) -> Result<(), Violation> {
    if colors.len() != g.n() {
        return Err(Violation::Partial { expected: g.n(), found: colors.len() });
    }
    let mut worst: Option<(usize, usize, usize)> = None;
    for w in g.vertices() {
        let ns = g.neighbors(w);
        for (i, &u) in ns.iter().enumerate() {
            for &v in &ns[i + 1..] {
                if colors[u] == colors[v] && worst.is_none_or(|b| (u, v, w) < b) {
                    worst = Some((u, v, w));
                }
            }
        }
    }
    match worst {
        Some((u, v, common)) => Err(Violation::Conflict { u, v, common, color: colors[u] }),
        None => Ok(()),
    }
}

/// Checks that adjacent vertices get distinct colours.
pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|(u, v)| colors[u] != colors[v])
}
