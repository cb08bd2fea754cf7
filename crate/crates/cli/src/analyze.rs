//! Structural summary of one graph.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use injcolor::rational::render;
use injcolor::reduction::{check_hypotheses, TheoremClass};
use injcolor::structure::{build_auxiliary, build_g23, girth, mad_exact, thread_decomposition, Girth, NonThread, TwoThreadReading};
use injcolor::{Graph, PlaneEmbedding};
use serde::Serialize;

use crate::{load, CmdOutput, InputError, EXIT_OK, SCHEMA_VERSION};

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub min_degree: usize,
    pub degree_histogram: Vec<usize>,
    pub girth: Girth,
    pub mad: String,
    pub mad_witness: Vec<usize>,
    pub components: usize,
    pub threads: ThreadSummary,
    pub g23: G23Summary,
    pub auxiliary: AuxSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingSummary>,
    /// Classes whose hypotheses hold (planar ones only with an embedding).
    pub classes: Vec<TheoremClass>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreadSummary {
    /// `length_histogram[k]` counts `k`-threads.
    pub length_histogram: Vec<usize>,
    pub longest: usize,
    pub cycle_components: usize,
    pub pendant_runs: usize,
    /// Sorted thread-length profiles of 3⁺-vertices, with multiplicity.
    pub profiles: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct G23Summary {
    pub edges: usize,
    pub isolated: usize,
    pub max_degree: usize,
    pub cyclic_components: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum AuxSummary {
    Built {
        n_h: usize,
        n_hat: usize,
        links: usize,
        edges_either: usize,
        edges_both: usize,
        a_counts: [usize; 10],
        a_hat_counts: [usize; 10],
    },
    Unavailable {
        unavailable: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingSummary {
    pub faces: usize,
    /// `face_degree_histogram[d]` counts faces of length `d`.
    pub face_degree_histogram: Vec<usize>,
}

pub fn analyze_graph(g: &Graph, emb: Option<&PlaneEmbedding>) -> AnalyzeReport {
    let mad = if g.n() == 0 { None } else { Some(mad_exact(g)) };
    let td = thread_decomposition(g);
    let mut profiles = BTreeMap::new();
    for v in g.vertices().filter(|&v| g.degree(v) >= 3) {
        *profiles.entry(format!("{:?}", td.profile(v))).or_insert(0) += 1;
    }
    let cycle_components = td.non_threads.iter().filter(|t| matches!(t, NonThread::Cycle(_))).count();
    let g23 = build_g23(g);
    let cyclic_components = g23
        .graph
        .components()
        .iter()
        .filter(|c| c.len() > 1 && g23.graph.induced(c).m() >= c.len())
        .count();
    let auxiliary = match build_auxiliary(g) {
        Ok(h) => AuxSummary::Built {
            n_h: h.n_h,
            n_hat: h.n_hat,
            links: h.links.len(),
            edges_either: h.edges_under(TwoThreadReading::Either).len(),
            edges_both: h.edges_under(TwoThreadReading::Both).len(),
            a_counts: h.a_counts,
            a_hat_counts: h.a_hat_counts,
        },
        Err(e) => AuxSummary::Unavailable { unavailable: e.to_string() },
    };
    let embedding = emb.map(|e| {
        let longest = (0..e.face_count()).map(|f| e.face_degree(f)).max().unwrap_or(0);
        let mut hist = vec![0; longest + 1];
        for f in 0..e.face_count() {
            hist[e.face_degree(f)] += 1;
        }
        EmbeddingSummary { faces: e.face_count(), face_degree_histogram: hist }
    });
    let classes = TheoremClass::ALL
        .into_iter()
        .filter(|&c| g.n() > 0 && (!c.is_planar() || emb.is_some()) && check_hypotheses(g, c, emb).is_ok())
        .collect();
    AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        delta: g.max_degree(),
        min_degree: g.min_degree(),
        degree_histogram: g.degree_histogram(),
        girth: girth(g),
        mad: mad.as_ref().map_or_else(|| "0/1".to_string(), |m| render(&m.value)),
        mad_witness: mad.map(|m| m.witness).unwrap_or_default(),
        components: g.components().len(),
        threads: ThreadSummary {
            length_histogram: td.length_histogram(),
            longest: td.longest(),
            cycle_components,
            pendant_runs: td.non_threads.len() - cycle_components,
            profiles,
        },
        g23: G23Summary {
            edges: g23.graph.m(),
            isolated: g23.isolated.len(),
            max_degree: g23.graph.max_degree(),
            cyclic_components,
        },
        auxiliary,
        embedding,
        classes,
    }
}

pub fn cmd_analyze(input: &Path, embedding: Option<&PathBuf>) -> Result<CmdOutput, InputError> {
    let (g, emb) = load(input, embedding)?;
    Ok(CmdOutput::new(&analyze_graph(&g, emb.as_ref()), EXIT_OK))
}
