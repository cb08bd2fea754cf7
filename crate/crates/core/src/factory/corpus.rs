//! Seeded corpora per theorem class, and their on-disk manifest.
//!
//! Manifest lines are tab-separated:
//! `edges_path <TAB> rotation_path_or_- <TAB> provenance <TAB> class`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::random::{random_planar_girth, random_sparse, GenerateError, SparseParams};
use crate::graph::{parse_graph, Graph, GraphError};
use crate::reduction::TheoremClass;
use crate::structure::{parse_rotation, EmbeddingError, PlaneEmbedding};

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub embedding: Option<PlaneEmbedding>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Corpus {
    pub seed: u64,
    pub class: TheoremClass,
    pub instances: Vec<Instance>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("{path}: {source}")]
    Graph { path: String, source: GraphError },
    #[error("{path}: {source}")]
    Embedding { path: String, source: EmbeddingError },
    #[error("manifest line {line}: {reason}")]
    Manifest { line: usize, reason: String },
    #[error("instance {index}: {source}")]
    Generate { index: usize, source: GenerateError },
}

/// Generator parameters used for `class` at vertex budget `size`.
pub fn sparse_params(class: TheoremClass, size: usize) -> Option<SparseParams> {
    let (delta_min, delta_max) = if class.max_degree_three() { (3, 3) } else { (4, 6) };
    (!class.is_planar()).then(|| SparseParams {
        n: size,
        mad_bound: class.mad_bound().expect("mad class").0,
        strict: class.mad_bound().expect("mad class").1,
        delta_min,
        delta_max,
    })
}

impl Corpus {
    /// `count` instances for `class`; instance `i` uses the `i`-th draw of a
    /// ChaCha stream seeded with `seed`.
    pub fn generate(class: TheoremClass, seed: u64, count: usize, size: usize) -> Result<Corpus, CorpusError> {
        match sparse_params(class, size) {
            Some(p) => Self::generate_sparse(class, &p, seed, count),
            None => {
                let mut seeds = ChaCha8Rng::seed_from_u64(seed);
                let girth_min = class.girth_min().expect("planar class");
                let instances = (0..count)
                    .map(|index| {
                        let s: u64 = seeds.gen();
                        let (graph, emb) = random_planar_girth(size, girth_min, 4, 8, s)
                            .map_err(|source| CorpusError::Generate { index, source })?;
                        let provenance = format!("random_planar_girth(n={size},girth={girth_min},seed={s})");
                        Ok(Instance { graph, embedding: Some(emb), provenance })
                    })
                    .collect::<Result<_, CorpusError>>()?;
                Ok(Corpus { seed, class, instances })
            }
        }
    }

    /// Like [`Corpus::generate`] but with explicit sparse parameters.
    pub fn generate_sparse(class: TheoremClass, p: &SparseParams, seed: u64, count: usize) -> Result<Corpus, CorpusError> {
        let mut seeds = ChaCha8Rng::seed_from_u64(seed);
        let instances = (0..count)
            .map(|index| {
                let s: u64 = seeds.gen();
                let graph = random_sparse(p, s).map_err(|source| CorpusError::Generate { index, source })?;
                let provenance = format!(
                    "random_sparse(n={},bound={}{},delta={}..{},seed={s})",
                    p.n,
                    if p.strict { "<" } else { "<=" },
                    crate::rational::render(&p.mad_bound),
                    p.delta_min,
                    p.delta_max
                );
                Ok(Instance { graph, embedding: None, provenance })
            })
            .collect::<Result<_, CorpusError>>()?;
        Ok(Corpus { seed, class, instances })
    }

    /// Writes one edge-list (and rotation) file per instance plus
    /// `manifest.tsv`; returns the manifest path.
    pub fn write(&self, dir: &Path) -> Result<PathBuf, CorpusError> {
        fs::create_dir_all(dir)?;
        let mut manifest = String::new();
        for (i, inst) in self.instances.iter().enumerate() {
            let edges = format!("instance_{i:04}.edges");
            fs::write(dir.join(&edges), inst.graph.to_edge_list())?;
            let rot = match &inst.embedding {
                Some(e) => {
                    let name = format!("instance_{i:04}.rot");
                    fs::write(dir.join(&name), e.format_rotation())?;
                    name
                }
                None => "-".to_string(),
            };
            manifest.push_str(&format!("{edges}\t{rot}\t{}\t{}\n", inst.provenance, self.class.tag()));
        }
        let path = dir.join("manifest.tsv");
        fs::write(&path, manifest)?;
        Ok(path)
    }

    /// Reads instances back from a manifest; paths are relative to it.
    pub fn read_manifest(path: &Path) -> Result<Vec<(Instance, TheoremClass)>, CorpusError> {
        let dir = path.parent().unwrap_or(Path::new("."));
        let text = fs::read_to_string(path)?;
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let fields: Vec<&str> = line.split('\t').collect();
            let bad = |reason: &str| CorpusError::Manifest { line: i + 1, reason: reason.into() };
            if fields.len() != 4 {
                return Err(bad("expected 4 tab-separated fields"));
            }
            let class = TheoremClass::parse(fields[3]).ok_or_else(|| bad("unknown class"))?;
            let epath = dir.join(fields[0]);
            let graph = parse_graph(&fs::read_to_string(&epath)?)
                .map_err(|source| CorpusError::Graph { path: epath.display().to_string(), source })?;
            let embedding = if fields[1] == "-" {
                None
            } else {
                let rpath = dir.join(fields[1]);
                Some(
                    parse_rotation(graph.clone(), &fs::read_to_string(&rpath)?)
                        .map_err(|source| CorpusError::Embedding { path: rpath.display().to_string(), source })?,
                )
            };
            out.push((Instance { graph, embedding, provenance: fields[2].to_string() }, class));
        }
        Ok(out)
    }
}
