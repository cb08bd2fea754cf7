//! Combinatorial plane embeddings given as rotation systems.
//!
//! `rotation[v]` lists the neighbours of `v` in counter-clockwise order.
//! Faces are traced on darts: from dart `u -> v` the walk continues with
//! `v -> succ_v(u)`, where `succ_v(u)` follows `u` in `rotation[v]`. The angle
//! at `v` between `u` and `succ_v(u)` belongs to that face.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation has {found} rows, graph has {expected} vertices")]
    RowCount { expected: usize, found: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its neighbours")]
    NotPermutation { vertex: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("component containing {root}: V - E + F = {v} - {e} + {f} != 2")]
    Euler { root: usize, v: usize, e: usize, f: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneEmbedding {
    #[serde(skip)]
    host: Graph,
    rotation: Vec<Vec<usize>>,
    /// Vertex walk of each face: `faces[f][i] -> faces[f][i+1]` are its darts.
    faces: Vec<Vec<usize>>,
    /// `dart_face[v][i]` is the face of dart `v -> rotation[v][i]`.
    #[serde(skip)]
    dart_face: Vec<Vec<usize>>,
}

impl PlaneEmbedding {
    /// Validates `rotation` against `host`, traces faces and checks Euler's
    /// formula on every component with at least one edge.
    pub fn new(host: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != host.n() {
            return Err(EmbeddingError::RowCount { expected: host.n(), found: rotation.len() });
        }
        for (v, row) in rotation.iter().enumerate() {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            if sorted != host.neighbors(v) {
                return Err(EmbeddingError::NotPermutation { vertex: v });
            }
        }
        let mut emb = PlaneEmbedding { host, rotation, faces: Vec::new(), dart_face: Vec::new() };
        emb.trace_faces();
        emb.check_euler()?;
        Ok(emb)
    }

    fn position(&self, v: usize, w: usize) -> usize {
        self.rotation[v].iter().position(|&x| x == w).expect("dart exists")
    }

    fn trace_faces(&mut self) {
        const UNSET: usize = usize::MAX;
        let n = self.host.n();
        let mut dart_face: Vec<Vec<usize>> = (0..n).map(|v| vec![UNSET; self.rotation[v].len()]).collect();
        let mut faces = Vec::new();
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if dart_face[v][i] != UNSET {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut a, mut ai) = (v, i);
                while dart_face[a][ai] == UNSET {
                    dart_face[a][ai] = id;
                    walk.push(a);
                    let b = self.rotation[a][ai];
                    let back = self.position(b, a);
                    let next = (back + 1) % self.rotation[b].len();
                    a = b;
                    ai = next;
                }
                faces.push(walk);
            }
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    fn check_euler(&self) -> Result<(), EmbeddingError> {
        let comp_of = {
            let mut c = vec![0; self.host.n()];
            for (i, comp) in self.host.components().iter().enumerate() {
                for &v in comp {
                    c[v] = i;
                }
            }
            c
        };
        for comp in self.host.components() {
            let cid = comp_of[comp[0]];
            let e: usize = comp.iter().map(|&v| self.host.degree(v)).sum::<usize>() / 2;
            if e == 0 {
                continue;
            }
            let f = self.faces.iter().filter(|w| comp_of[w[0]] == cid).count();
            if comp.len() + f != e + 2 {
                return Err(EmbeddingError::Euler { root: comp[0], v: comp.len(), e, f });
            }
        }
        Ok(())
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Face containing dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> usize {
        self.dart_face[u][self.position(u, v)]
    }

    /// Neighbour following `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        r[(self.position(v, u) + 1) % r.len()]
    }

    /// Angles at `v` as `(a, b, face)`: `b` follows `a` in the rotation and
    /// the angle between them lies in `face`.
    pub fn angles(&self, v: usize) -> Vec<(usize, usize, usize)> {
        let r = &self.rotation[v];
        (0..r.len())
            .map(|i| {
                let (a, b) = (r[i], r[(i + 1) % r.len()]);
                (a, b, self.face_of_dart(v, b))
            })
            .collect()
    }

    /// Embedding of the subgraph induced by the sorted set `keep`, relabelled
    /// to `0..keep.len()` in order. Deleting vertices preserves planarity.
    pub fn restrict(&self, keep: &[usize]) -> PlaneEmbedding {
        let mut label = vec![usize::MAX; self.host.n()];
        for (i, &v) in keep.iter().enumerate() {
            label[v] = i;
        }
        let rotation = keep
            .iter()
            .map(|&v| self.rotation[v].iter().filter(|&&w| label[w] != usize::MAX).map(|&w| label[w]).collect())
            .collect();
        PlaneEmbedding::new(self.host.induced(keep), rotation).expect("restriction of a plane embedding")
    }

    /// Rotation system in the text format: line `v` lists `rotation[v]`.
    pub fn format_rotation(&self) -> String {
        let mut out = String::new();
        for row in &self.rotation {
            let line: Vec<String> = row.iter().map(|w| w.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn rotation_system(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Rotation system from straight-line coordinates. Vertex `at_infinity`,
    /// if given, sits outside every drawn face: edges to it leave their other
    /// endpoint radially outward from the origin.
    pub fn from_coordinates(host: Graph, coords: &[(f64, f64)], at_infinity: Option<usize>) -> Result<Self, EmbeddingError> {
        let direction = |v: usize, w: usize| -> f64 {
            let (x, y) = coords[v];
            if Some(w) == at_infinity {
                y.atan2(x)
            } else {
                let (a, b) = coords[w];
                (b - y).atan2(a - x)
            }
        };
        let rotation = host
            .vertices()
            .map(|v| {
                let mut row: Vec<usize> = host.neighbors(v).to_vec();
                if Some(v) == at_infinity {
                    // seen from infinity the cyclic order is reversed
                    row.sort_by(|&a, &b| coords[b].1.atan2(coords[b].0).total_cmp(&coords[a].1.atan2(coords[a].0)));
                } else {
                    row.sort_by(|&a, &b| direction(v, a).total_cmp(&direction(v, b)));
                }
                row
            })
            .collect();
        PlaneEmbedding::new(host, rotation)
    }
}

/// Parses the rotation format against `host`.
pub fn parse_rotation(host: Graph, text: &str) -> Result<PlaneEmbedding, EmbeddingError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if rows.len() == host.n() && line.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let row = row.map_err(|e| EmbeddingError::Malformed { line: i + 1, reason: e.to_string() })?;
        rows.push(row);
    }
    PlaneEmbedding::new(host, rows)
}
