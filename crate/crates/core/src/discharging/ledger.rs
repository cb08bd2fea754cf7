use std::collections::BTreeMap;

use serde::Serialize;

use crate::rational::{render, zero, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub amount: Rational,
    pub rule: &'static str,
    /// 1 or 2; single-phase arguments use phase 1 only.
    pub phase: u8,
}

/// Per-face counts taken along the face walk (a vertex met twice counts
/// twice).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FaceStats {
    pub face: usize,
    pub length: usize,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
    pub t4: usize,
    /// 3-vertex incidences with no special role.
    pub t3_prime: usize,
    pub weak: usize,
    pub slim: usize,
    pub strong: usize,
    pub fat: usize,
}

/// Charges of vertices and faces through the discharging phases, with every
/// transfer recorded.
#[derive(Clone, Debug, Default)]
pub struct ChargeLedger {
    pub initial: BTreeMap<Element, Rational>,
    pub transfers: Vec<Transfer>,
    pub face_stats: Vec<FaceStats>,
}

impl ChargeLedger {
    pub fn new(initial: BTreeMap<Element, Rational>) -> Self {
        ChargeLedger { initial, transfers: Vec::new(), face_stats: Vec::new() }
    }

    pub(crate) fn send(&mut self, from: Element, to: Element, amount: Rational, rule: &'static str, phase: u8) {
        self.transfers.push(Transfer { from, to, amount, rule, phase });
    }

    /// Charges after all transfers of phase `<= phase`.
    pub fn after(&self, phase: u8) -> BTreeMap<Element, Rational> {
        let mut out = self.initial.clone();
        for t in self.transfers.iter().filter(|t| t.phase <= phase) {
            *out.entry(t.from).or_insert_with(zero) -= &t.amount;
            *out.entry(t.to).or_insert_with(zero) += &t.amount;
        }
        out
    }

    pub fn after_phase1(&self) -> BTreeMap<Element, Rational> {
        self.after(1)
    }

    pub fn final_charges(&self) -> BTreeMap<Element, Rational> {
        self.after(u8::MAX)
    }

    pub fn total_initial(&self) -> Rational {
        self.initial.values().fold(zero(), |a, b| a + b)
    }

    pub fn total_final(&self) -> Rational {
        self.final_charges().values().fold(zero(), |a, b| a + b)
    }

    pub fn summary(&self) -> LedgerSummary {
        let fin = self.final_charges();
        let min = fin.iter().min_by(|a, b| a.1.cmp(b.1));
        LedgerSummary {
            elements: self.initial.len(),
            transfers: self.transfers.len(),
            total_initial: render(&self.total_initial()),
            total_final: render(&self.total_final()),
            min_final: min.map(|(e, c)| (*e, render(c))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerSummary {
    pub elements: usize,
    pub transfers: usize,
    pub total_initial: String,
    pub total_final: String,
    pub min_final: Option<(Element, String)>,
}
