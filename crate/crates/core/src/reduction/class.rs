use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::rational::{ratio, render, Rational};
use crate::structure::{girth, mad_exact, Girth, PlaneEmbedding};

/// Hypothesis class of a colouring theorem, with its palette target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremClass {
    /// `mad <= 5/2`, `Δ >= 4`: `Δ + 1` colours.
    Mad52D4,
    /// `mad <= 5/2`, `Δ = 3`: 4 colours.
    Mad52D3,
    /// `mad <= 9/4`, `Δ >= 4`: `Δ` colours.
    Mad94D4,
    /// `mad < 42/19`, `Δ = 3`: 3 colours.
    Mad4219D3,
    /// Planar, girth `>= 9`, `Δ >= 4`: `Δ + 1` colours.
    PlanarG9,
    /// Planar, girth `>= 13`, `Δ >= 4`: `Δ` colours.
    PlanarG13,
}

impl TheoremClass {
    pub const ALL: [TheoremClass; 6] = [
        TheoremClass::Mad52D4,
        TheoremClass::Mad52D3,
        TheoremClass::Mad94D4,
        TheoremClass::Mad4219D3,
        TheoremClass::PlanarG9,
        TheoremClass::PlanarG13,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TheoremClass::Mad52D4 => "MAD52_D4",
            TheoremClass::Mad52D3 => "MAD52_D3",
            TheoremClass::Mad94D4 => "MAD94_D4",
            TheoremClass::Mad4219D3 => "MAD4219_D3",
            TheoremClass::PlanarG9 => "PLANAR_G9",
            TheoremClass::PlanarG13 => "PLANAR_G13",
        }
    }

    /// Case-insensitive inverse of [`TheoremClass::tag`].
    pub fn parse(s: &str) -> Option<TheoremClass> {
        Self::ALL.into_iter().find(|c| c.tag().eq_ignore_ascii_case(s.trim()))
    }

    /// Whether the target is `Δ + 1` rather than `Δ`.
    pub fn plus_one(self) -> bool {
        matches!(self, TheoremClass::Mad52D4 | TheoremClass::Mad52D3 | TheoremClass::PlanarG9)
    }

    pub fn palette(self, delta: usize) -> usize {
        if self.plus_one() {
            delta + 1
        } else {
            delta
        }
    }

    pub fn is_planar(self) -> bool {
        matches!(self, TheoremClass::PlanarG9 | TheoremClass::PlanarG13)
    }

    pub fn max_degree_three(self) -> bool {
        matches!(self, TheoremClass::Mad52D3 | TheoremClass::Mad4219D3)
    }

    /// `(bound, strict)`: the class requires `mad < bound` when `strict`,
    /// `mad <= bound` otherwise.
    pub fn mad_bound(self) -> Option<(Rational, bool)> {
        match self {
            TheoremClass::Mad52D4 | TheoremClass::Mad52D3 => Some((ratio(5, 2), false)),
            TheoremClass::Mad94D4 => Some((ratio(9, 4), false)),
            TheoremClass::Mad4219D3 => Some((ratio(42, 19), true)),
            _ => None,
        }
    }

    pub fn girth_min(self) -> Option<usize> {
        match self {
            TheoremClass::PlanarG9 => Some(9),
            TheoremClass::PlanarG13 => Some(13),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for TheoremClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// A failed hypothesis, with exact values on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HypothesisViolation {
    #[error("maximum degree {found} but the class needs {need}")]
    MaxDegree { found: usize, need: &'static str },
    #[error("mad = {} exceeds bound {}{}", render(found), if *strict { "< " } else { "<= " }, render(bound))]
    Mad { found: Rational, bound: Rational, strict: bool, witness: Vec<usize> },
    #[error("girth {found} below {need}")]
    Girth { found: Girth, need: usize },
    #[error("planar class needs an embedding")]
    MissingEmbedding,
    #[error("embedding host differs from the graph")]
    EmbeddingMismatch,
}

/// Checks the class hypotheses exactly.
pub fn check_hypotheses(g: &Graph, class: TheoremClass, emb: Option<&PlaneEmbedding>) -> Result<(), HypothesisViolation> {
    let delta = g.max_degree();
    let ok = if class.max_degree_three() { delta == 3 } else { delta >= 4 };
    if !ok {
        let need = if class.max_degree_three() { "exactly 3" } else { "at least 4" };
        return Err(HypothesisViolation::MaxDegree { found: delta, need });
    }
    if let Some((bound, strict)) = class.mad_bound() {
        let mad = mad_exact(g);
        let fine = if strict { mad.value < bound } else { mad.value <= bound };
        if !fine {
            return Err(HypothesisViolation::Mad { found: mad.value, bound, strict, witness: mad.witness });
        }
    }
    if let Some(need) = class.girth_min() {
        let emb = emb.ok_or(HypothesisViolation::MissingEmbedding)?;
        if emb.host() != g {
            return Err(HypothesisViolation::EmbeddingMismatch);
        }
        let found = girth(g);
        if !found.at_least(need) {
            return Err(HypothesisViolation::Girth { found, need });
        }
    }
    Ok(())
}
