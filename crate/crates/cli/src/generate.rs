//! Writes constructed or generated instances to disk.

use std::path::{Path, PathBuf};

use injcolor::factory::{
    class2_counterexample, corpus_sparse_params, random_planar_girth, random_sparse, subdivide_counts, Corpus,
    FactoryError,
};
use injcolor::reduction::TheoremClass;
use injcolor::{Graph, PlaneEmbedding};
use serde::Serialize;

use crate::{input_error, load, CmdOutput, InputError, EXIT_OK, SCHEMA_VERSION};

#[derive(Clone, Debug)]
pub enum Construction {
    /// Every edge replaced by a path with `k` interior vertices.
    Subdivide { input: PathBuf, embedding: Option<PathBuf>, k: usize },
    /// Edge `u-v` replaced by `u-x-v`, `x` the new last vertex.
    InsertVertex { input: PathBuf, embedding: Option<PathBuf>, u: usize, v: usize },
    /// One subdivision of a Class 2 graph.
    Class2 { input: PathBuf, budget: u64 },
    RandomSparse { class: TheoremClass, seed: u64, size: usize },
    RandomPlanar { girth: usize, seed: u64, size: usize, delta_min: usize, delta_max: usize },
    /// A whole seeded corpus with its manifest; `out` is a directory.
    Corpus { class: TheoremClass, seed: u64, count: usize, size: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerateReport {
    pub schema_version: u32,
    pub construction: String,
    pub files: Vec<String>,
    pub instances: usize,
}

fn write_instance(out: &Path, g: &Graph, emb: Option<&PlaneEmbedding>) -> Result<Vec<String>, InputError> {
    let io = |p: &Path, e: std::io::Error| input_error(format!("{}: {e}", p.display()));
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    }
    std::fs::write(out, g.to_edge_list()).map_err(|e| io(out, e))?;
    let mut files = vec![out.display().to_string()];
    if let Some(e) = emb {
        let rot = out.with_extension("rot");
        std::fs::write(&rot, e.format_rotation()).map_err(|err| io(&rot, err))?;
        files.push(rot.display().to_string());
    }
    Ok(files)
}

fn factory_error(e: FactoryError) -> InputError {
    input_error(e.to_string())
}

pub fn cmd_generate(c: &Construction, out: &Path) -> Result<CmdOutput, InputError> {
    let (name, files, instances) = match c {
        Construction::Subdivide { input, embedding, k } => {
            let (g, emb) = load(input, embedding.as_ref())?;
            let (sub, sub_emb) = subdivide_counts(&g, &vec![*k; g.m()], emb.as_ref());
            ("subdivide", write_instance(out, &sub, sub_emb.as_ref())?, 1)
        }
        Construction::InsertVertex { input, embedding, u, v } => {
            let (g, emb) = load(input, embedding.as_ref())?;
            let key = ((*u).min(*v), (*u).max(*v));
            let i = g.edges().position(|e| e == key).ok_or_else(|| factory_error(FactoryError::MissingEdge(*u, *v)))?;
            let mut counts = vec![0; g.m()];
            counts[i] = 1;
            let (h, h_emb) = subdivide_counts(&g, &counts, emb.as_ref());
            ("insert_vertex", write_instance(out, &h, h_emb.as_ref())?, 1)
        }
        Construction::Class2 { input, budget } => {
            let (g, _) = load(input, None)?;
            let h = class2_counterexample(&g, *budget).map_err(factory_error)?;
            ("class2_counterexample", write_instance(out, &h, None)?, 1)
        }
        Construction::RandomSparse { class, seed, size } => {
            let p = corpus_sparse_params(*class, *size)
                .ok_or_else(|| input_error(format!("{class} is planar; use random-planar")))?;
            let g = random_sparse(&p, *seed).map_err(|e| input_error(e.to_string()))?;
            ("random_sparse", write_instance(out, &g, None)?, 1)
        }
        Construction::RandomPlanar { girth, seed, size, delta_min, delta_max } => {
            let (g, emb) = random_planar_girth(*size, *girth, *delta_min, *delta_max, *seed)
                .map_err(|e| input_error(e.to_string()))?;
            ("random_planar_girth", write_instance(out, &g, Some(&emb))?, 1)
        }
        Construction::Corpus { class, seed, count, size } => {
            let corpus = Corpus::generate(*class, *seed, *count, *size).map_err(|e| input_error(e.to_string()))?;
            let manifest = corpus.write(out).map_err(|e| input_error(e.to_string()))?;
            ("corpus", vec![manifest.display().to_string()], corpus.instances.len())
        }
    };
    let report = GenerateReport { schema_version: SCHEMA_VERSION, construction: name.into(), files, instances };
    Ok(CmdOutput::new(&report, EXIT_OK))
}
