//! Seeded generators for sparse and planar high-girth instances.
//!
//! Sparse graphs are grown constructively and every step is re-checked with
//! the exact `mad`, since the target density regions are far too thin for
//! rejection sampling from uniform models.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::subdivide_counts;
use crate::families;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::structure::{mad_exact, shortest_cycle, PlaneEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("no graph found after {attempts} attempts")]
    Exhausted { attempts: usize },
    #[error("no planar base has maximum degree in [{min}, {max}]")]
    NoBase { min: usize, max: usize },
}

/// Target region for [`random_sparse`].
#[derive(Clone, Debug)]
pub struct SparseParams {
    /// Vertex budget; the result has at most this many vertices.
    pub n: usize,
    pub mad_bound: Rational,
    /// `mad < bound` when set, `mad <= bound` otherwise.
    pub strict: bool,
    pub delta_min: usize,
    pub delta_max: usize,
}

impl SparseParams {
    fn admits(&self, g: &Graph) -> bool {
        if g.max_degree() > self.delta_max {
            return false;
        }
        let mad = mad_exact(g).value;
        if self.strict {
            mad < self.mad_bound
        } else {
            mad <= self.mad_bound
        }
    }

    /// Thread lengths that keep the density reachable.
    fn thread_range(&self) -> (usize, usize) {
        let twice = &self.mad_bound * Rational::from_integer(2.into());
        if twice >= Rational::from_integer(5.into()) {
            (0, 3)
        } else if self.mad_bound >= crate::rational::ratio(9, 4) {
            (1, 4)
        } else {
            (2, 4)
        }
    }
}

const ATTEMPTS: usize = 200;

/// Connected graph with `delta_min <= Δ <= delta_max` in the requested `mad`
/// region, built either by grafting threads onto a seed cycle or tree, or by
/// subdividing a random multigraph skeleton. The style is drawn from the seed.
pub fn random_sparse(params: &SparseParams, seed: u64) -> Result<Graph, GenerateError> {
    if params.n == 1 {
        return Ok(Graph::empty(1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let candidate = if rng.gen_bool(0.5) { grow(params, &mut rng) } else { skeleton(params, &mut rng) };
        if let Some(g) = candidate {
            if g.is_connected() && g.max_degree() >= params.delta_min && params.admits(&g) {
                return Ok(g);
            }
        }
    }
    Err(GenerateError::Exhausted { attempts: ATTEMPTS })
}

fn add_path(edges: &mut Vec<(usize, usize)>, n: &mut usize, u: usize, v: Option<usize>, len: usize) {
    let mut prev = u;
    for _ in 0..len {
        edges.push((prev, *n));
        prev = *n;
        *n += 1;
    }
    if let Some(v) = v {
        edges.push((prev, v));
    }
}

/// Seed cycle or tree plus grafted threads, chords and pendant paths; each
/// step is kept only if the graph stays in the target region.
fn grow(p: &SparseParams, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let (tmin, tmax) = p.thread_range();
    let mut n;
    let mut edges = Vec::new();
    if rng.gen_bool(0.5) {
        n = rng.gen_range(3..=p.n.clamp(3, 12));
        edges.extend((0..n).map(|i| (i, (i + 1) % n)));
    } else {
        n = rng.gen_range(2..=p.n.clamp(2, 6));
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    let mut g = Graph::from_edges_unchecked(n, edges.iter().copied());
    if n > p.n {
        return None;
    }
    let mut failures = 0;
    while failures < 40 && g.n() < p.n {
        let mut trial_edges = edges.clone();
        let mut trial_n = n;
        // bias endpoints toward high degree until Δ reaches delta_min
        let pick = |rng: &mut ChaCha8Rng, g: &Graph| -> usize {
            if g.max_degree() < p.delta_min && rng.gen_bool(0.6) {
                let top = g.max_degree();
                let hubs: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == top).collect();
                *hubs.choose(rng).expect("non-empty")
            } else {
                rng.gen_range(0..g.n())
            }
        };
        let u = pick(rng, &g);
        match rng.gen_range(0..10) {
            0 => {
                let len = rng.gen_range(1..=tmax.max(1));
                add_path(&mut trial_edges, &mut trial_n, u, None, len);
            }
            1 | 2 if tmin == 0 => {
                let v = pick(rng, &g);
                if v == u || g.has_edge(u, v) {
                    failures += 1;
                    continue;
                }
                trial_edges.push((u.min(v), u.max(v)));
            }
            _ => {
                let v = pick(rng, &g);
                let len = rng.gen_range(tmin..=tmax);
                let len = if v == u { len.max(2) } else if len == 0 && g.has_edge(u, v) { 1 } else { len };
                add_path(&mut trial_edges, &mut trial_n, u, Some(v), len);
            }
        }
        if trial_n > p.n {
            failures += 1;
            continue;
        }
        let trial = Graph::from_edges_unchecked(trial_n, trial_edges.iter().copied());
        if p.admits(&trial) {
            edges = trial_edges;
            n = trial_n;
            g = trial;
            failures = 0;
        } else {
            failures += 1;
        }
    }
    Some(g)
}

/// Random multigraph skeleton (configuration model, degrees in
/// `[3, delta_max]`), subdivided so that every loop and parallel edge
/// becomes a simple path.
fn skeleton(p: &SparseParams, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let (tmin, tmax) = p.thread_range();
    let dmax = p.delta_max.min(6);
    let k = rng.gen_range(2..=(p.n / 4).clamp(2, 10));
    let mut stubs = Vec::new();
    for v in 0..k {
        let d = if v == 0 { rng.gen_range(p.delta_min.max(3)..=dmax.max(3)) } else { rng.gen_range(3..=dmax.max(3)) };
        stubs.extend(std::iter::repeat_n(v, d));
    }
    if stubs.len() % 2 == 1 {
        stubs.push(rng.gen_range(1..k));
    }
    stubs.shuffle(rng);
    let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
    let mut n = k;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in &pairs {
        let mut len = rng.gen_range(tmin..=tmax);
        if u == v {
            len = len.max(2);
        } else if !seen.insert((u, v)) {
            len = len.max(1);
        }
        if len == 0 {
            edges.push((u, v));
        } else {
            add_path(&mut edges, &mut n, u, Some(v), len);
        }
    }
    let g = Graph::from_edges_unchecked(n, edges);
    (g.n() <= p.n).then_some(g)
}

/// Embedded planar seeds for [`random_planar_girth`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PlanarBase {
    /// Double pyramid over a `k`-gon (`k = 4` is the octahedron).
    Bipyramid(usize),
    /// Wheel with `k` rim vertices.
    Wheel(usize),
    /// `K_{2,m}`.
    TwoByM(usize),
    /// Dodecahedron with a hub joined to the `k` first vertices of one
    /// pentagon (`k <= 5`).
    HubDodecahedron(usize),
}

impl PlanarBase {
    pub const ALL: [PlanarBase; 12] = [
        PlanarBase::Bipyramid(4),
        PlanarBase::Bipyramid(5),
        PlanarBase::Bipyramid(6),
        PlanarBase::Wheel(5),
        PlanarBase::Wheel(6),
        PlanarBase::Wheel(7),
        PlanarBase::Wheel(8),
        PlanarBase::TwoByM(4),
        PlanarBase::TwoByM(5),
        PlanarBase::TwoByM(6),
        PlanarBase::HubDodecahedron(4),
        PlanarBase::HubDodecahedron(5),
    ];

    pub fn max_degree(self) -> usize {
        match self {
            PlanarBase::Bipyramid(k) => k,
            PlanarBase::Wheel(k) => k,
            PlanarBase::TwoByM(m) => m,
            PlanarBase::HubDodecahedron(k) => k.max(4),
        }
    }

    pub fn build(self) -> (Graph, PlaneEmbedding) {
        let ring = |k: usize| -> Vec<(f64, f64)> {
            (0..k)
                .map(|i| {
                    let t = std::f64::consts::TAU * i as f64 / k as f64;
                    (t.cos(), t.sin())
                })
                .collect()
        };
        match self {
            PlanarBase::Bipyramid(k) => {
                // apex 0 inside, ring 1..=k, apex k+1 at infinity
                let mut edges: Vec<_> = (1..=k).flat_map(|i| [(0, i), (i, k + 1), (i, i % k + 1)]).collect();
                edges.sort_unstable();
                let g = Graph::from_edges_unchecked(k + 2, edges);
                let mut coords = vec![(0.0, 0.0)];
                coords.extend(ring(k));
                coords.push((0.0, 0.0));
                let emb = PlaneEmbedding::from_coordinates(g.clone(), &coords, Some(k + 1)).expect("bipyramid");
                (g, emb)
            }
            PlanarBase::Wheel(k) => {
                let g = families::wheel(k);
                let mut coords = vec![(0.0, 0.0)];
                coords.extend(ring(k));
                let emb = PlaneEmbedding::from_coordinates(g.clone(), &coords, None).expect("wheel");
                (g, emb)
            }
            PlanarBase::TwoByM(m) => {
                let g = families::complete_bipartite(2, m);
                let mut coords = vec![(0.0, 0.0), (0.0, 0.0)];
                coords.extend(ring(m));
                let emb = PlaneEmbedding::from_coordinates(g.clone(), &coords, Some(1)).expect("K2m");
                (g, emb)
            }
            PlanarBase::HubDodecahedron(k) => {
                // the hub, vertex 20, sits inside the inner pentagon 15..20
                let mut edges: Vec<_> = families::dodecahedron().edges().collect();
                edges.extend((0..k.min(5)).map(|i| (15 + i, 20)));
                let g = Graph::from_edges_unchecked(21, edges);
                let mut coords = super::dodecahedron_coordinates();
                coords.push((0.0, 0.0));
                let emb = PlaneEmbedding::from_coordinates(g.clone(), &coords, None).expect("dodecahedron drawing");
                (g, emb)
            }
        }
    }
}

/// Planar embedded graph with girth at least `girth_min` and
/// `delta_min <= Δ <= delta_max`: a base from [`PlanarBase::ALL`] with random
/// per-edge subdivision counts, raised along shortest cycles until the girth
/// bound holds, then padded with extra subdivisions up to `n_target`.
pub fn random_planar_girth(
    n_target: usize,
    girth_min: usize,
    delta_min: usize,
    delta_max: usize,
    seed: u64,
) -> Result<(Graph, PlaneEmbedding), GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases: Vec<PlanarBase> =
        PlanarBase::ALL.iter().copied().filter(|b| (delta_min..=delta_max).contains(&b.max_degree())).collect();
    let base = *bases.choose(&mut rng).ok_or(GenerateError::NoBase { min: delta_min, max: delta_max })?;
    let (g, emb) = base.build();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).expect("base edge");
    let mut counts: Vec<usize> = (0..g.m()).map(|_| rng.gen_range(0..=1)).collect();
    if girth_min <= 3 && rng.gen_bool(0.5) {
        counts.fill(0);
    }
    loop {
        let (sub, _) = subdivide_counts(&g, &counts, None);
        let Some(cycle) = shortest_cycle(&sub) else { break };
        if cycle.len() >= girth_min {
            break;
        }
        // the base edges along this cycle; raise one of them
        let on_base: Vec<usize> = cycle.iter().copied().filter(|&v| v < g.n()).collect();
        let mut candidates = Vec::new();
        for i in 0..on_base.len() {
            let (a, b) = (on_base[i], on_base[(i + 1) % on_base.len()]);
            if g.has_edge(a, b) {
                candidates.push(index(a, b));
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let e = *candidates.choose(&mut rng).expect("cycle uses a base edge");
        counts[e] += 1;
    }
    let mut n = g.n() + counts.iter().sum::<usize>();
    while n < n_target && rng.gen_bool(0.7) {
        counts[rng.gen_range(0..g.m())] += 1;
        n += 1;
    }
    let (sub, semb) = subdivide_counts(&g, &counts, Some(&emb));
    Ok((sub, semb.expect("embedding carried")))
}
