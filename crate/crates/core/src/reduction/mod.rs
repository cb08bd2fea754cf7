//! Colouring by reducible configurations.
//!
//! For each [`TheoremClass`] the engine repeatedly locates a configuration,
//! deletes it, and finally colours the small remainder directly. The stored
//! steps are then undone in reverse, extending the colouring of each
//! remainder to the deleted vertices (and to any survivors that the
//! configuration uncolours). The palette is fixed once, from the maximum
//! degree of the input; every configuration is reducible for that palette,
//! even after deletions lower the maximum degree.

mod class;
mod engine;
mod extend;
mod locate;

pub use class::{check_hypotheses, HypothesisViolation, TheoremClass};
pub use engine::{
    color_constructive, color_with_palette, replay_trace, Constructive, Diagnostic, EngineError, StepRecord,
    TheoremViolation, TraceStep, ViolationReason,
};
pub use extend::{extend_coloring, ExtensionReport};
pub use locate::{find_reduction, kinds_for, locate_configurations, Context};
pub(crate) use locate::find_kind;

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReductionKind {
    /// A vertex of degree at most 1.
    OneVertex,
    /// A component that is a cycle of 2-vertices.
    CycleComponent,
    /// Two adjacent 2-vertices.
    TwoThread,
    /// A thread with at least four interior vertices.
    FourThread,
    /// A 3-thread with a 3-vertex end.
    #[serde(rename = "THREE_THREAD_3END")]
    ThreeThread3End,
    /// A 3-vertex with three 2-neighbours, one of which also touches another
    /// 3-vertex.
    #[serde(rename = "L6_CONFIG")]
    L6Config,
    /// Face path `u1..u5` with degrees `2,3,2,3,2` whose `u2` has an
    /// off-face neighbour of degree at most 3.
    #[serde(rename = "H5A_CONFIG")]
    H5AConfig,
    /// 9-face with degrees `3,2,3,2,4+,2,3,2,3` where `v1` or `v2` has an
    /// off-face neighbour of degree at most 3.
    #[serde(rename = "CASE_2D")]
    Case2D,
    /// 2-thread with both ends of degree 3.
    #[serde(rename = "RC4")]
    Rc4,
    /// 3-vertex on one 1-thread and two 2-threads.
    #[serde(rename = "RC5")]
    Rc5,
    /// 3-vertex on one 2-thread and two 1-threads, one of which ends at a
    /// 3-vertex.
    #[serde(rename = "RC6")]
    Rc6,
    /// Cycle of the 2-3 edge subgraph through a vertex all of whose
    /// neighbours are 2-vertices.
    #[serde(rename = "G23_CYCLE")]
    G23Cycle,
    /// Whole graph coloured at once from degree lists on its square.
    #[serde(rename = "G23_EVEN_CYCLES")]
    G23Even,
    /// Cycle of the auxiliary thread graph through a vertex of degree 3.
    #[serde(rename = "AUXH_CYCLE")]
    AuxHCycle,
}

impl ReductionKind {
    pub fn label(self) -> &'static str {
        match self {
            ReductionKind::OneVertex => "ONE_VERTEX",
            ReductionKind::CycleComponent => "CYCLE_COMPONENT",
            ReductionKind::TwoThread => "TWO_THREAD",
            ReductionKind::FourThread => "FOUR_THREAD",
            ReductionKind::ThreeThread3End => "THREE_THREAD_3END",
            ReductionKind::L6Config => "L6_CONFIG",
            ReductionKind::H5AConfig => "H5A_CONFIG",
            ReductionKind::Case2D => "CASE_2D",
            ReductionKind::Rc4 => "RC4",
            ReductionKind::Rc5 => "RC5",
            ReductionKind::Rc6 => "RC6",
            ReductionKind::G23Cycle => "G23_CYCLE",
            ReductionKind::G23Even => "G23_EVEN_CYCLES",
            ReductionKind::AuxHCycle => "AUXH_CYCLE",
        }
    }

    /// Local kinds are extended by search over a fixed small vertex set.
    pub fn is_local(self) -> bool {
        !matches!(self, ReductionKind::G23Cycle | ReductionKind::G23Even | ReductionKind::AuxHCycle)
    }
}

/// A located configuration. Vertex ids refer to the graph it was found in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub kind: ReductionKind,
    /// Vertices removed before recursing, sorted.
    pub deletion_set: Vec<usize>,
    /// Surviving vertices whose colours are discarded and chosen again.
    pub recolor: Vec<usize>,
    /// Colouring order for `deletion_set ∪ recolor` (empty for global kinds,
    /// whose order is decided during extension).
    pub extension_order: Vec<usize>,
    /// Named vertices of the configuration.
    pub anchors: BTreeMap<String, usize>,
    /// Cycle walked by global kinds.
    pub cycle: Vec<usize>,
}

impl Reduction {
    fn local(kind: ReductionKind, order: Vec<usize>, recolor: Vec<usize>, anchors: &[(&str, usize)]) -> Self {
        let mut deletion_set: Vec<usize> = order.iter().copied().filter(|v| !recolor.contains(v)).collect();
        deletion_set.sort_unstable();
        Reduction {
            kind,
            deletion_set,
            recolor,
            extension_order: order,
            anchors: anchors.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            cycle: Vec::new(),
        }
    }
}
