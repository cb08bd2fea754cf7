use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use super::extend::{extend, ExtensionReport, NONE};
use super::locate::{find_kind, find_reduction, Context};
use super::{check_hypotheses, HypothesisViolation, Reduction, ReductionKind, TheoremClass};
use crate::exact::{validate_injective, Coloring};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::structure::{mad_exact, PlaneEmbedding};

/// One reduction as applied by the engine.
#[derive(Clone, Debug, Serialize)]
pub struct StepRecord {
    /// The configuration, in the labels of the graph it was found in.
    pub reduction: Reduction,
    /// `deletion_set` in input labels.
    pub deleted: Vec<usize>,
    /// `recolor` in input labels.
    pub recolored: Vec<usize>,
    /// Order and size of the graph the configuration was found in.
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub extension: Option<ExtensionReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub step: usize,
    pub kind: ReductionKind,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Constructive {
    pub coloring: Coloring,
    pub palette: usize,
    pub steps: Vec<StepRecord>,
    /// Size of the remainder coloured with distinct colours.
    pub base_size: usize,
    pub diagnostics: Vec<Diagnostic>,
}

impl Constructive {
    pub fn kind_counts(&self) -> std::collections::BTreeMap<&'static str, usize> {
        let mut out = std::collections::BTreeMap::new();
        for s in &self.steps {
            *out.entry(s.reduction.kind.label()).or_insert(0) += 1;
        }
        out
    }

    pub fn fallback_used(&self) -> bool {
        self.steps.iter().any(|s| s.extension.as_ref().is_some_and(|e| e.fallback))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationReason {
    /// No configuration of the class is present and the graph has more
    /// vertices than colours.
    Irreducible,
    /// A configuration could not be extended.
    ExtensionFailed { step: usize, kind: ReductionKind },
    /// The assembled colouring failed validation.
    InvalidColoring(String),
}

/// Evidence that the constructive argument broke down on an input that
/// satisfies the class hypotheses.
#[derive(Clone, Debug, Error)]
#[error("{class}: {reason:?} after {} steps", trace.len())]
pub struct TheoremViolation {
    pub class: TheoremClass,
    pub palette: usize,
    pub reason: ViolationReason,
    pub input: Graph,
    /// Graph in which the failure happened, and its vertices in input labels.
    pub graph: Graph,
    pub labels: Vec<usize>,
    /// Kind and input-labelled deletion set of every step taken.
    pub trace: Vec<(ReductionKind, Vec<usize>)>,
}

impl TheoremViolation {
    /// Edge list of the input preceded by `#` comment lines with the class,
    /// palette, reason and trace; readable by [`crate::parse_graph`].
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# class {} palette {}", self.class, self.palette);
        let _ = writeln!(s, "# reason {:?}", self.reason);
        let _ = writeln!(s, "# failing subgraph vertices {:?}", self.labels);
        for (i, (kind, del)) in self.trace.iter().enumerate() {
            let _ = writeln!(s, "# step {i} {} {:?}", kind.label(), del);
        }
        s.push_str(&self.input.to_edge_list());
        s
    }

    pub fn write_to(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.serialize())
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("hypothesis check failed: {0}")]
    Hypothesis(#[from] HypothesisViolation),
    #[error("theorem violation: {0}")]
    Violation(Box<TheoremViolation>),
}

/// A reduction stage: the graph before the step, its input labels, and
/// the configuration removed from it.
struct Stage {
    graph: Graph,
    labels: Vec<usize>,
    embedding: Option<PlaneEmbedding>,
    reduction: Reduction,
}

struct Reduced {
    stages: Vec<Stage>,
    remainder: Vec<usize>,
}

fn reduce(g: &Graph, class: TheoremClass, emb: Option<&PlaneEmbedding>, k: usize) -> Result<Reduced, Box<TheoremViolation>> {
    let mut graph = g.clone();
    let mut labels: Vec<usize> = g.vertices().collect();
    let mut embedding = emb.cloned();
    let mut stages: Vec<Stage> = Vec::new();
    while graph.n() > k {
        let found = {
            let ctx = Context::new(&graph, embedding.as_ref(), k);
            find_reduction(&ctx, class)
        };
        let Some(reduction) = found else {
            return Err(Box::new(TheoremViolation {
                class,
                palette: k,
                reason: ViolationReason::Irreducible,
                input: g.clone(),
                trace: trace_of(&stages),
                graph,
                labels,
            }));
        };
        let keep: Vec<usize> = graph.vertices().filter(|v| reduction.deletion_set.binary_search(v).is_err()).collect();
        let next_graph = graph.induced(&keep);
        let next_labels: Vec<usize> = keep.iter().map(|&v| labels[v]).collect();
        let next_emb = embedding.as_ref().map(|e| e.restrict(&keep));
        stages.push(Stage {
            graph: std::mem::replace(&mut graph, next_graph),
            labels: std::mem::replace(&mut labels, next_labels),
            embedding: std::mem::replace(&mut embedding, next_emb),
            reduction,
        });
    }
    Ok(Reduced { stages, remainder: labels })
}

fn trace_of(stages: &[Stage]) -> Vec<(ReductionKind, Vec<usize>)> {
    stages
        .iter()
        .map(|s| (s.reduction.kind, s.reduction.deletion_set.iter().map(|&v| s.labels[v]).collect()))
        .collect()
}

/// Checks the class hypotheses, then colours `g` with the class palette.
pub fn color_constructive(g: &Graph, class: TheoremClass, emb: Option<&PlaneEmbedding>) -> Result<Constructive, EngineError> {
    check_hypotheses(g, class, emb)?;
    color_with_palette(g, class, emb, class.palette(g.max_degree())).map_err(EngineError::Violation)
}

/// Runs the reductions of `class` with palette `k` without checking the
/// class hypotheses. The result is validated before it is returned.
pub fn color_with_palette(
    g: &Graph,
    class: TheoremClass,
    emb: Option<&PlaneEmbedding>,
    k: usize,
) -> Result<Constructive, Box<TheoremViolation>> {
    let reduced = reduce(g, class, emb, k)?;
    let mut colors = vec![NONE; g.n()];
    for (i, &v) in reduced.remainder.iter().enumerate() {
        colors[v] = i;
    }
    let mut reports: Vec<Option<ExtensionReport>> = vec![None; reduced.stages.len()];
    let mut diagnostics = Vec::new();
    for (idx, stage) in reduced.stages.iter().enumerate().rev() {
        let mut local: Vec<usize> = stage.labels.iter().map(|&v| colors[v]).collect();
        let kind = stage.reduction.kind;
        match extend(&stage.graph, &stage.reduction, &mut local, k) {
            Ok(report) => {
                diagnose(idx, &report, &mut diagnostics);
                reports[idx] = Some(report);
            }
            Err(_) => {
                return Err(Box::new(TheoremViolation {
                    class,
                    palette: k,
                    reason: ViolationReason::ExtensionFailed { step: idx, kind },
                    input: g.clone(),
                    graph: stage.graph.clone(),
                    labels: stage.labels.clone(),
                    trace: trace_of(&reduced.stages),
                }))
            }
        }
        for (i, &v) in stage.labels.iter().enumerate() {
            colors[v] = local[i];
        }
    }
    let bad = if colors.iter().any(|&c| c >= k) {
        Some(format!("colour outside 0..{k}"))
    } else {
        validate_injective(g, &colors).err().map(|e| format!("{e:?}"))
    };
    if let Some(msg) = bad {
        return Err(Box::new(TheoremViolation {
            class,
            palette: k,
            reason: ViolationReason::InvalidColoring(msg),
            input: g.clone(),
            graph: g.clone(),
            labels: g.vertices().collect(),
            trace: trace_of(&reduced.stages),
        }));
    }
    let steps = reduced
        .stages
        .iter()
        .zip(reports)
        .map(|(s, extension)| StepRecord {
            deleted: s.reduction.deletion_set.iter().map(|&v| s.labels[v]).collect(),
            recolored: s.reduction.recolor.iter().map(|&v| s.labels[v]).collect(),
            n: s.graph.n(),
            m: s.graph.m(),
            max_degree: s.graph.max_degree(),
            reduction: s.reduction.clone(),
            extension,
        })
        .collect();
    Ok(Constructive {
        coloring: Coloring { assignment: colors, palette_size: k },
        palette: k,
        steps,
        base_size: reduced.remainder.len(),
        diagnostics,
    })
}

fn diagnose(step: usize, r: &ExtensionReport, out: &mut Vec<Diagnostic>) {
    let mut note = |s: String| out.push(Diagnostic { step, kind: r.kind, note: s });
    if r.greedy_failed && r.kind.is_local() {
        note(format!("greedy order stuck; ordered search used with {} backtracks", r.backtracks));
    }
    if r.fallback {
        note("exact list colouring used".into());
    }
    if r.kind == ReductionKind::G23Cycle && r.square_components != Some(2) {
        note(format!("square of J has {:?} components, not 2", r.square_components));
    }
    if let Some(z) = r.freed {
        note(format!("vertex {z} uncoloured to free a colour"));
    }
}

/// One stage of a replayed reduction sequence.
#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub reduction: Reduction,
    #[serde(skip)]
    pub graph: Graph,
    /// Vertices of `graph` in input labels.
    pub labels: Vec<usize>,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub mad: Rational,
    /// The configuration is found again by an exhaustive search of its kind.
    pub confirmed: bool,
}

/// Recomputes the reduction sequence, re-verifying every configuration and
/// recording the maximum average degree of each intermediate graph.
pub fn replay_trace(
    g: &Graph,
    class: TheoremClass,
    emb: Option<&PlaneEmbedding>,
    k: usize,
) -> Result<Vec<TraceStep>, Box<TheoremViolation>> {
    let reduced = reduce(g, class, emb, k)?;
    Ok(reduced
        .stages
        .into_iter()
        .map(|s| {
            let ctx = Context::new(&s.graph, s.embedding.as_ref(), k);
            let confirmed = find_kind(&ctx, s.reduction.kind, false).contains(&s.reduction);
            TraceStep { mad: mad_exact(&s.graph).value, confirmed, reduction: s.reduction, graph: s.graph, labels: s.labels }
        })
        .collect())
}
