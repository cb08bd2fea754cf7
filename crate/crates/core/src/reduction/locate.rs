//! Configuration finders. Each finder lists every occurrence of its kind in
//! a deterministic order (by anchor ids); the engine takes the first
//! occurrence of the first kind, in class priority order, that is present.

use std::collections::VecDeque;

use super::{Reduction, ReductionKind, TheoremClass};
use crate::graph::Graph;
use crate::structure::{build_auxiliary, build_g23, thread_decomposition, PlaneEmbedding, ThreadDecomposition};

use ReductionKind::*;

/// A graph prepared for configuration search with a fixed palette.
pub struct Context<'a> {
    pub graph: &'a Graph,
    pub embedding: Option<&'a PlaneEmbedding>,
    pub threads: ThreadDecomposition,
    pub palette: usize,
}

impl<'a> Context<'a> {
    pub fn new(graph: &'a Graph, embedding: Option<&'a PlaneEmbedding>, palette: usize) -> Self {
        Context { graph, embedding, threads: thread_decomposition(graph), palette }
    }

    fn deg(&self, v: usize) -> usize {
        self.graph.degree(v)
    }
}

/// Kinds searched for `class`, in priority order, at current maximum
/// degree `delta_cur` with palette `k`.
///
/// Besides the class's own configurations, two families stay reducible once
/// deletions have pushed the maximum degree below the palette: two adjacent
/// 2-vertices (needs `k >= delta_cur + 1`) and the cycle argument on the 2-3
/// edge subgraph (needs `delta_cur <= 3`, `k >= 4`).
pub fn kinds_for(class: TheoremClass, k: usize, delta_cur: usize) -> Vec<ReductionKind> {
    let mut out = vec![OneVertex, CycleComponent];
    out.extend_from_slice(match class {
        TheoremClass::Mad52D4 => &[TwoThread, L6Config][..],
        TheoremClass::Mad52D3 => &[TwoThread],
        TheoremClass::Mad94D4 => &[FourThread, ThreeThread3End],
        TheoremClass::Mad4219D3 => &[FourThread, AuxHCycle],
        TheoremClass::PlanarG9 => &[TwoThread, H5AConfig, Case2D],
        TheoremClass::PlanarG13 => &[FourThread, ThreeThread3End, Rc4, Rc5, Rc6],
    });
    if k > delta_cur && !out.contains(&TwoThread) {
        out.push(TwoThread);
    }
    if delta_cur <= 3 && k >= 4 {
        out.extend([G23Cycle, G23Even]);
    }
    out
}

/// First configuration in priority order, or `None` if the graph is
/// irreducible for the class.
pub fn find_reduction(ctx: &Context<'_>, class: TheoremClass) -> Option<Reduction> {
    kinds_for(class, ctx.palette, ctx.graph.max_degree()).into_iter().find_map(|kind| find_kind(ctx, kind, true).into_iter().next())
}

/// Every occurrence of every kind searched for `class`.
pub fn locate_configurations(ctx: &Context<'_>, class: TheoremClass) -> Vec<Reduction> {
    kinds_for(class, ctx.palette, ctx.graph.max_degree()).into_iter().flat_map(|kind| find_kind(ctx, kind, false)).collect()
}

/// Occurrences of `kind`; with `first` only the first one is produced.
pub(crate) fn find_kind(ctx: &Context<'_>, kind: ReductionKind, first: bool) -> Vec<Reduction> {
    let mut out = match kind {
        OneVertex => one_vertex(ctx),
        CycleComponent => cycle_component(ctx),
        TwoThread => two_thread(ctx),
        FourThread => four_thread(ctx),
        ThreeThread3End => three_thread_3end(ctx),
        L6Config => l6(ctx),
        H5AConfig => h5a(ctx),
        Case2D => case_2d(ctx),
        Rc4 => rc4(ctx),
        Rc5 => rc5(ctx),
        Rc6 => rc6(ctx),
        G23Cycle => g23_cycle(ctx, first),
        G23Even => g23_even(ctx),
        AuxHCycle => auxh_cycle(ctx, first),
    };
    if first {
        out.truncate(1);
    }
    out
}

fn one_vertex(ctx: &Context<'_>) -> Vec<Reduction> {
    let g = ctx.graph;
    g.vertices()
        .filter(|&v| g.degree(v) <= 1)
        .map(|v| Reduction::local(OneVertex, vec![v], vec![], &[("v", v)]))
        .collect()
}

/// Cycle components are coloured along the cycles of their square, so each
/// vertex sees at most two coloured conflicts.
fn cycle_component(ctx: &Context<'_>) -> Vec<Reduction> {
    let mut out: Vec<Reduction> = ctx
        .threads
        .non_threads
        .iter()
        .filter_map(|nt| match nt {
            crate::structure::NonThread::Cycle(c) => Some(c),
            _ => None,
        })
        .filter(|_| ctx.palette >= 3)
        .map(|c| {
            let start = (0..c.len()).min_by_key(|&i| c[i]).expect("non-empty cycle");
            let walk: Vec<usize> = (0..c.len()).map(|i| c[(start + i) % c.len()]).collect();
            let order: Vec<usize> =
                walk.iter().step_by(2).chain(walk.iter().skip(1).step_by(2)).copied().collect();
            let mut r = Reduction::local(CycleComponent, order, vec![], &[("start", walk[0])]);
            r.cycle = walk;
            r
        })
        .collect();
    out.sort_by_key(|r| r.cycle[0]);
    out
}

/// `u - a - b - x` with `d(a) = d(b) = 2`; `a < b`.
fn two_thread(ctx: &Context<'_>) -> Vec<Reduction> {
    let g = ctx.graph;
    if ctx.palette <= g.max_degree() {
        return Vec::new();
    }
    g.edges()
        .filter(|&(a, b)| g.degree(a) == 2 && g.degree(b) == 2)
        .map(|(a, b)| {
            let u = other(g, a, b);
            let x = other(g, b, a);
            Reduction::local(TwoThread, vec![a, b], vec![], &[("u", u), ("a", a), ("b", b), ("x", x)])
        })
        .collect()
}

fn other(g: &Graph, v: usize, not: usize) -> usize {
    *g.neighbors(v).iter().find(|&&w| w != not).expect("2-vertex")
}

/// Threads by id, with their interior read from each end that qualifies.
fn oriented_threads<'c>(
    ctx: &'c Context<'_>,
    pred: impl Fn(usize, usize, usize) -> bool + 'c,
) -> impl Iterator<Item = (usize, Vec<usize>, usize)> + 'c {
    ctx.threads.threads.iter().flat_map(move |t| {
        let (u, v) = t.ends;
        let mut found = Vec::new();
        if pred(u, t.len(), v) {
            found.push((u, t.interior_from(u), v));
        }
        if u != v && pred(v, t.len(), u) {
            found.push((v, t.interior_from(v), u));
        }
        found.truncate(1);
        found
    })
}

/// First four interior vertices `a, b, c, d` of a long thread from end `u`;
/// extension order `a, d, b, c`.
fn four_thread(ctx: &Context<'_>) -> Vec<Reduction> {
    if ctx.palette < 3 {
        return Vec::new();
    }
    let mut out: Vec<Reduction> = oriented_threads(ctx, |_, len, _| len >= 4)
        .map(|(u, i, _)| {
            let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
            Reduction::local(FourThread, vec![a, d, b, c], vec![], &[("u", u), ("a", a), ("b", b), ("c", c), ("d", d)])
        })
        .collect();
    out.sort_by(|x, y| x.deletion_set.cmp(&y.deletion_set));
    out
}

/// 3-thread `u - a - b - c - v` with `d(u) = 3`; extension order `c, b, a`.
fn three_thread_3end(ctx: &Context<'_>) -> Vec<Reduction> {
    if ctx.palette < 4 {
        return Vec::new();
    }
    let mut out: Vec<Reduction> = oriented_threads(ctx, |u, len, _| len == 3 && ctx.deg(u) == 3)
        .map(|(u, i, v)| {
            let (a, b, c) = (i[0], i[1], i[2]);
            Reduction::local(ThreeThread3End, vec![c, b, a], vec![], &[("u", u), ("a", a), ("b", b), ("c", c), ("v", v)])
        })
        .collect();
    out.sort_by(|x, y| x.deletion_set.cmp(&y.deletion_set));
    out
}

/// 3-vertex `v` with 2-neighbours `p, q, u` where the other neighbour of
/// `u` is a 3-vertex; `D = {v, p, q, u}` in order `v, p, q, u`.
fn l6(ctx: &Context<'_>) -> Vec<Reduction> {
    let g = ctx.graph;
    if ctx.palette < 5 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 3) {
        let ns = g.neighbors(v);
        if ns.iter().any(|&w| g.degree(w) != 2) {
            continue;
        }
        let Some(&u) = ns.iter().find(|&&w| g.degree(other(g, w, v)) == 3) else { continue };
        let rest: Vec<usize> = ns.iter().copied().filter(|&w| w != u).collect();
        let (p, q) = (rest[0], rest[1]);
        out.push(Reduction::local(L6Config, vec![v, p, q, u], vec![], &[("v", v), ("p", p), ("q", q), ("u", u)]));
    }
    out
}

/// Consecutive windows of `len` distinct vertices along each face walk, in
/// both directions.
fn face_windows(emb: &PlaneEmbedding, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for f in emb.faces() {
        let n = f.len();
        if n < len {
            continue;
        }
        for dir in [false, true] {
            for s in 0..n {
                let w: Vec<usize> =
                    (0..len).map(|i| if dir { f[(s + n - i) % n] } else { f[(s + i) % n] }).collect();
                let mut sorted = w.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() == len {
                    out.push(w);
                }
            }
        }
    }
    out
}

fn off_neighbor(g: &Graph, v: usize, a: usize, b: usize) -> Option<usize> {
    g.neighbors(v).iter().copied().find(|&w| w != a && w != b)
}

/// Face path `u1 .. u5` with degrees `2,3,2,3,2` and the off-face neighbour
/// of `u2` of degree at most 3. Deletes `u3`, recolours the rest.
fn h5a(ctx: &Context<'_>) -> Vec<Reduction> {
    let (g, Some(emb)) = (ctx.graph, ctx.embedding) else { return Vec::new() };
    if ctx.palette < 5 {
        return Vec::new();
    }
    let mut out: Vec<Reduction> = face_windows(emb, 5)
        .into_iter()
        .filter(|w| w.iter().map(|&v| g.degree(v)).eq([2, 3, 2, 3, 2]))
        .filter_map(|w| {
            let y = off_neighbor(g, w[1], w[0], w[2])?;
            (g.degree(y) <= 3).then(|| {
                let (u1, u2, u3, u4, u5) = (w[0], w[1], w[2], w[3], w[4]);
                Reduction::local(
                    H5AConfig,
                    vec![u2, u4, u1, u5, u3],
                    vec![u1, u2, u4, u5],
                    &[("u1", u1), ("u2", u2), ("u3", u3), ("u4", u4), ("u5", u5), ("y", y)],
                )
            })
        })
        .collect();
    out.sort_by(|x, y| (&x.deletion_set, &x.extension_order).cmp(&(&y.deletion_set, &y.extension_order)));
    out.dedup();
    out
}

/// 9-face `v1 w1 v2 w2 v3 w3 v4 w4 v5` with degrees `3,2,3,2,4+,2,3,2,3`.
/// If the off-face neighbour `u1` of `v1` has degree at most 3, delete
/// `w1, v2, w2` and recolour `v1, w4`; otherwise if that of `v2` does,
/// delete `w1, v2, w2` only.
fn case_2d(ctx: &Context<'_>) -> Vec<Reduction> {
    let (g, Some(emb)) = (ctx.graph, ctx.embedding) else { return Vec::new() };
    if ctx.palette < 5 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for f in emb.faces().iter().filter(|f| f.len() == 9) {
        for w in face_windows_of(f) {
            let d: Vec<usize> = w.iter().map(|&v| g.degree(v)).collect();
            let pattern = [3, 2, 3, 2, 0, 2, 3, 2, 3];
            if !(0..9).all(|i| if i == 4 { d[i] >= 4 } else { d[i] == pattern[i] }) {
                continue;
            }
            let (v1, w1, v2, w2, v3, w4, v5) = (w[0], w[1], w[2], w[3], w[4], w[7], w[8]);
            let (Some(u1), Some(u2)) = (off_neighbor(g, v1, v5, w1), off_neighbor(g, v2, w1, w2)) else { continue };
            let anchors = [("v1", v1), ("w1", w1), ("v2", v2), ("w2", w2), ("v3", v3), ("w4", w4), ("u1", u1), ("u2", u2)];
            if g.degree(u1) < 4 {
                out.push(Reduction::local(Case2D, vec![w1, w2, v2, v1, w4], vec![v1, w4], &anchors));
            } else if g.degree(u2) < 4 {
                out.push(Reduction::local(Case2D, vec![w1, w2, v2], vec![], &anchors));
            }
        }
    }
    out.sort_by(|x, y| (&x.deletion_set, &x.extension_order).cmp(&(&y.deletion_set, &y.extension_order)));
    out.dedup();
    out
}

fn face_windows_of(f: &[usize]) -> Vec<Vec<usize>> {
    let n = f.len();
    let mut out = Vec::new();
    for dir in [false, true] {
        for s in 0..n {
            out.push((0..n).map(|i| if dir { f[(s + n - i) % n] } else { f[(s + i) % n] }).collect::<Vec<_>>());
        }
    }
    out.retain(|w| {
        let mut s = w.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == n
    });
    out
}

/// 2-thread `u - a - b - v` with `d(u) = d(v) = 3`.
fn rc4(ctx: &Context<'_>) -> Vec<Reduction> {
    if ctx.palette < 4 {
        return Vec::new();
    }
    oriented_threads(ctx, |u, len, v| len == 2 && ctx.deg(u) == 3 && ctx.deg(v) == 3)
        .map(|(u, i, v)| Reduction::local(Rc4, vec![i[0], i[1]], vec![], &[("u", u), ("a", i[0]), ("b", i[1]), ("v", v)]))
        .collect()
}

/// 3-vertices whose three incidences are on distinct threads, with the
/// incidences sorted by (length, first vertex).
fn three_vertex_profiles(ctx: &Context<'_>) -> Vec<(usize, Vec<crate::structure::Incidence>)> {
    let g = ctx.graph;
    g.vertices()
        .filter(|&v| g.degree(v) == 3)
        .filter_map(|v| {
            let mut inc = ctx.threads.incidences(v).to_vec();
            let mut ids: Vec<usize> = inc.iter().map(|i| i.thread).collect();
            ids.sort_unstable();
            ids.dedup();
            if inc.len() != 3 || ids.len() != 3 {
                return None;
            }
            inc.sort_by_key(|i| (i.length, i.first));
            Some((v, inc))
        })
        .collect()
}

/// 3-vertex `v` on a 1-thread `v - p - x` and 2-threads `v - a_i - b_i - y_i`;
/// order `p, b1, b2, v, a1, a2`.
fn rc5(ctx: &Context<'_>) -> Vec<Reduction> {
    if ctx.palette < 4 {
        return Vec::new();
    }
    three_vertex_profiles(ctx)
        .into_iter()
        .filter(|(_, inc)| inc.iter().map(|i| i.length).eq([1, 2, 2]))
        .map(|(v, inc)| {
            let td = &ctx.threads;
            let p = inc[0].first;
            let t1 = td.threads[inc[1].thread].interior_from(v);
            let t2 = td.threads[inc[2].thread].interior_from(v);
            let (a1, b1, a2, b2) = (t1[0], t1[1], t2[0], t2[1]);
            Reduction::local(
                Rc5,
                vec![p, b1, b2, v, a1, a2],
                vec![],
                &[("v", v), ("p", p), ("x", inc[0].far), ("a1", a1), ("b1", b1), ("a2", a2), ("b2", b2)],
            )
        })
        .collect()
}

/// 3-vertex `v` on a 2-thread `v - a - b - y` and 1-threads `v - p - x`,
/// `v - q - z` with `d(x) = 3`; order `q, b, v, p, a`.
fn rc6(ctx: &Context<'_>) -> Vec<Reduction> {
    if ctx.palette < 4 {
        return Vec::new();
    }
    three_vertex_profiles(ctx)
        .into_iter()
        .filter(|(_, inc)| inc.iter().map(|i| i.length).eq([1, 1, 2]))
        .filter_map(|(v, inc)| {
            let (pi, qi) = if ctx.deg(inc[0].far) == 3 {
                (inc[0], inc[1])
            } else if ctx.deg(inc[1].far) == 3 {
                (inc[1], inc[0])
            } else {
                return None;
            };
            let t = ctx.threads.threads[inc[2].thread].interior_from(v);
            let (p, q, a, b) = (pi.first, qi.first, t[0], t[1]);
            Some(Reduction::local(
                Rc6,
                vec![q, b, v, p, a],
                vec![],
                &[("v", v), ("p", p), ("x", pi.far), ("q", q), ("z", qi.far), ("a", a), ("b", b)],
            ))
        })
        .collect()
}

/// Shortest path from `s` to `t` in `g` avoiding `blocked`, ties broken
/// towards smaller ids.
fn bfs_path(g: &Graph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == t {
            let mut path = vec![t];
            let mut c = t;
            while c != s {
                c = parent[c];
                path.push(c);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Cycle of the 2-3 edge subgraph through a 3-vertex `u` whose neighbours
/// are all 2-vertices. `J = V(C) ∪ N(u)` is deleted and coloured from the
/// lists its square leaves. Preconditions: no 1-vertex, no two adjacent
/// 2-vertices, maximum degree at most 3.
fn g23_cycle(ctx: &Context<'_>, first: bool) -> Vec<Reduction> {
    let g = ctx.graph;
    if g.max_degree() > 3 || ctx.palette < 4 || !lemma7_preconditions(g) {
        return Vec::new();
    }
    let h = build_g23(g).graph;
    let mut out = Vec::new();
    for u in g.vertices().filter(|&u| h.degree(u) == 3) {
        let ns = h.neighbors(u);
        let mut best: Option<Vec<usize>> = None;
        let mut blocked = vec![false; g.n()];
        blocked[u] = true;
        for i in 0..3 {
            for j in i + 1..3 {
                if let Some(p) = bfs_path(&h, ns[i], ns[j], &blocked) {
                    if best.as_ref().is_none_or(|b| p.len() + 1 < b.len()) {
                        let mut c = vec![u];
                        c.extend(p);
                        best = Some(c);
                    }
                }
            }
        }
        let Some(cycle) = best else { continue };
        let t = *ns.iter().find(|w| !cycle.contains(w)).expect("third neighbour off the cycle");
        let mut deletion_set: Vec<usize> = cycle.iter().copied().chain([t]).collect();
        deletion_set.sort_unstable();
        out.push(Reduction {
            kind: G23Cycle,
            deletion_set,
            recolor: vec![],
            extension_order: vec![],
            anchors: [("u".to_string(), u), ("t".to_string(), t)].into_iter().collect(),
            cycle,
        });
        if first {
            break;
        }
    }
    out
}

fn lemma7_preconditions(g: &Graph) -> bool {
    g.vertices().all(|v| g.degree(v) >= 2) && !g.edges().any(|(a, b)| g.degree(a) == 2 && g.degree(b) == 2)
}

/// Last resort of the 2-3 argument: the whole graph is coloured at once from
/// full palettes on its square.
fn g23_even(ctx: &Context<'_>) -> Vec<Reduction> {
    let g = ctx.graph;
    if g.max_degree() > 3 || ctx.palette < 4 || !lemma7_preconditions(g) || g.n() == 0 {
        return Vec::new();
    }
    vec![Reduction {
        kind: G23Even,
        deletion_set: g.vertices().collect(),
        recolor: vec![],
        extension_order: vec![],
        anchors: Default::default(),
        cycle: vec![],
    }]
}

/// Cycle `C` of the auxiliary multigraph through an auxiliary vertex `v` of
/// degree 3 (loops count twice). `J` is the host cycle `C'` plus the first
/// vertex `w` of the third thread at `v`.
fn auxh_cycle(ctx: &Context<'_>, first: bool) -> Vec<Reduction> {
    let g = ctx.graph;
    let Ok(aux) = build_auxiliary(g) else { return Vec::new() };
    let td = &aux.threads;
    let nh = aux.host_three_vertices.len();
    // incidences per auxiliary vertex: (link index, other end)
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nh];
    for (li, l) in aux.links.iter().enumerate() {
        inc[l.ends.0].push((li, l.ends.1));
        inc[l.ends.1].push((li, l.ends.0));
    }
    let mut out = Vec::new();
    for a in (0..nh).filter(|&a| inc[a].len() == 3) {
        let v = aux.host_three_vertices[a];
        // best = (host cycle length, links along the cycle with their start)
        let mut best: Option<(usize, Vec<(usize, usize)>, [usize; 2])> = None;
        for i in 0..3 {
            for j in i + 1..3 {
                let ((li, bi), (lj, bj)) = (inc[a][i], inc[a][j]);
                let path: Vec<(usize, usize)> = if li == lj {
                    vec![(li, a)]
                } else if bi == a || bj == a {
                    continue;
                } else {
                    let Some(p) = aux_path(&inc, a, bi, bj, li, lj) else { continue };
                    let mut links = vec![(li, a)];
                    links.extend(p);
                    links.push((lj, bj));
                    links
                };
                let len: usize = path.iter().map(|&(l, _)| td.threads[aux.links[l].thread].len() + 1).sum();
                if best.as_ref().is_none_or(|(b, _, _)| len < *b) {
                    best = Some((len, path, [i, j]));
                }
            }
        }
        let Some((_, links, used)) = best else { continue };
        let mut cycle = Vec::new();
        for &(l, from) in &links {
            let host_from = aux.host_three_vertices[from];
            cycle.push(host_from);
            cycle.extend(td.threads[aux.links[l].thread].interior_from(host_from));
        }
        let third = (0..3).find(|x| !used.contains(x)).expect("three incidences");
        let (l3, _) = inc[a][third];
        let t3 = &td.threads[aux.links[l3].thread];
        let w = if t3.ends.0 == v { t3.interior[0] } else { *t3.interior.last().expect("link thread has interior") };
        let w = if t3.ends.0 == t3.ends.1 { t3.interior[0] } else { w };
        let mut deletion_set: Vec<usize> = cycle.iter().copied().chain([w]).collect();
        deletion_set.sort_unstable();
        deletion_set.dedup();
        out.push(Reduction {
            kind: AuxHCycle,
            deletion_set,
            recolor: vec![],
            extension_order: vec![],
            anchors: [("v".to_string(), v), ("w".to_string(), w)].into_iter().collect(),
            cycle,
        });
        if first {
            break;
        }
    }
    out
}

/// Shortest link path from `s` to `t` avoiding auxiliary vertex `avoid` and
/// links `x`, `y`; returns `(link, start vertex)` pairs.
fn aux_path(inc: &[Vec<(usize, usize)>], avoid: usize, s: usize, t: usize, x: usize, y: usize) -> Option<Vec<(usize, usize)>> {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; inc.len()];
    let mut seen = vec![false; inc.len()];
    seen[s] = true;
    seen[avoid] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(c) = queue.pop_front() {
        if c == t {
            let mut path = Vec::new();
            let mut cur = t;
            while cur != s {
                let (l, prev) = parent[cur].expect("tree edge");
                path.push((l, prev));
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for &(l, d) in &inc[c] {
            if l != x && l != y && !seen[d] {
                seen[d] = true;
                parent[d] = Some((l, c));
                queue.push_back(d);
            }
        }
    }
    None
}
