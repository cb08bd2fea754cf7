//! Discharging arguments replayed as exact arithmetic on concrete graphs.
//!
//! Every audit assigns initial charges, applies its rules as recorded
//! transfers, and checks the resulting bounds. Instances that satisfy a
//! class hypothesis always contain reducible configurations (that is what
//! the colouring theorems say), so besides [`AuditMode::Strict`], which
//! rejects such inputs, audits run in [`AuditMode::Localized`]: every
//! located configuration excuses the vertices it touches (whole threads
//! included) and the faces through them, and
//! the bounds must hold everywhere else. Negative charge on an element that
//! no configuration excuses is a falsification candidate.

mod claim1;
mod ledger;
mod sparse;
mod planar;

pub use claim1::{claim1_match, Claim1Pattern, CLAIM1_PATTERNS};
pub use ledger::{ChargeLedger, Element, FaceStats, LedgerSummary, Transfer};
pub use planar::{audit_thm5a, audit_thm5b, Role};
pub use sparse::{audit_lemma6, audit_lemma8, audit_lemma9, lemma8_table_bound};

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::reduction::{locate_configurations, Context, TheoremClass};
use crate::structure::{thread_decomposition, NonThread, PlaneEmbedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AuditMode {
    /// Reject inputs that contain any configuration of the class.
    Strict,
    /// Excuse the vertices and faces touched by located configurations.
    Localized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub audit: &'static str,
    pub mode: AuditMode,
    pub assertions: Vec<Assertion>,
    pub excused_vertices: Vec<usize>,
    pub excused_faces: Vec<usize>,
    /// Elements whose bounds were actually checked.
    pub audited_elements: usize,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub ledger: ChargeLedger,
    pub ledger_summary: LedgerSummary,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| a.status == Status::Fail)
    }

    pub fn assertion(&self, name: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("precondition failed: {what} (witness {witness:?})")]
    Precondition { what: String, witness: Vec<usize> },
    #[error("embedding host differs from the graph")]
    EmbeddingMismatch,
}

fn precondition(what: impl Into<String>, witness: Vec<usize>) -> AuditError {
    AuditError::Precondition { what: what.into(), witness }
}

/// Collects named checks; each check passes or records its first witness.
#[derive(Default)]
pub(crate) struct Checks {
    list: Vec<Assertion>,
}

impl Checks {
    pub(crate) fn check(&mut self, name: &str, witness: Option<String>) {
        let status = if witness.is_none() { Status::Pass } else { Status::Fail };
        self.list.push(Assertion { name: name.to_string(), status, witness });
    }

    pub(crate) fn holds(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.check(name, (!ok).then(witness));
    }
}

/// The audit matching a class, if it has one.
pub fn audit_name(class: TheoremClass) -> Option<&'static str> {
    match class {
        TheoremClass::Mad52D4 => Some("lemma6"),
        TheoremClass::Mad94D4 => Some("lemma9"),
        TheoremClass::Mad4219D3 => Some("lemma8"),
        TheoremClass::PlanarG9 => Some("thm5a"),
        TheoremClass::PlanarG13 => Some("thm5b"),
        TheoremClass::Mad52D3 => None,
    }
}

/// Runs the audit matching `class`; `None` for classes without one.
pub fn audit_for_class(
    class: TheoremClass,
    g: &Graph,
    emb: Option<&PlaneEmbedding>,
    mode: AuditMode,
) -> Option<Result<AuditReport, AuditError>> {
    Some(match class {
        TheoremClass::Mad52D4 => audit_lemma6(g, mode),
        TheoremClass::Mad94D4 => audit_lemma9(g, mode),
        TheoremClass::Mad4219D3 => audit_lemma8(g, mode),
        TheoremClass::PlanarG9 => match emb {
            Some(e) => audit_thm5a(g, e, mode),
            None => Err(precondition("planar audit needs an embedding", vec![])),
        },
        TheoremClass::PlanarG13 => match emb {
            Some(e) => audit_thm5b(g, e, mode),
            None => Err(precondition("planar audit needs an embedding", vec![])),
        },
        TheoremClass::Mad52D3 => return None,
    })
}

/// Vertices excused by the configurations of `class` located in `g`; in
/// strict mode any configuration is a precondition failure.
pub(crate) fn excusals(
    g: &Graph,
    emb: Option<&PlaneEmbedding>,
    class: TheoremClass,
    mode: AuditMode,
) -> Result<BTreeSet<usize>, AuditError> {
    let k = class.palette(g.max_degree());
    let ctx = Context::new(g, emb, k);
    let found = locate_configurations(&ctx, class);
    if mode == AuditMode::Strict {
        if let Some(r) = found.first() {
            return Err(precondition(
                format!("configuration {} present", r.kind.label()),
                r.anchors.values().copied().collect(),
            ));
        }
        return Ok(BTreeSet::new());
    }
    let mut core: BTreeSet<usize> = BTreeSet::new();
    for r in &found {
        core.extend(r.deletion_set.iter().chain(&r.recolor).chain(r.anchors.values()).chain(&r.cycle));
    }
    Ok(close_excusal(g, core))
}

/// Extends a vertex set by the whole run of 2-vertices through each of its
/// 2-vertices, with the run's ends.
pub(crate) fn close_excusal(g: &Graph, core: BTreeSet<usize>) -> BTreeSet<usize> {
    let td = thread_decomposition(g);
    let mut run_of: Vec<Option<usize>> = vec![None; g.n()];
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for t in &td.threads {
        for &x in &t.interior {
            run_of[x] = Some(runs.len());
        }
        runs.push(t.interior.iter().copied().chain([t.ends.0, t.ends.1]).collect());
    }
    for nt in &td.non_threads {
        let mut run: Vec<usize> = nt.two_vertices().to_vec();
        if let NonThread::Pendant { ends, .. } = nt {
            run.extend([ends.0, ends.1]);
        }
        for &x in &run {
            if g.degree(x) <= 2 {
                run_of[x] = Some(runs.len());
            }
        }
        runs.push(run);
    }
    let mut out = core.clone();
    for &v in &core {
        if let Some(r) = run_of[v] {
            out.extend(runs[r].iter().copied());
        }
    }
    out
}

