//! Extending a colouring of `G - D` back to `G`.
//!
//! Local kinds are coloured in their prescribed order, first greedily and
//! then, if greedy gets stuck, by exhaustive search over the same order.
//! Global kinds build lists from the colours already fixed on the square and
//! use the constructive list colouring routes.

use serde::Serialize;

use super::{Reduction, ReductionKind};
use crate::exact::{list_color_exact, ListAssignment, ListOutcome, Outcome};
use crate::graph::Graph;
use crate::listcolor::{color_lists_auto, Route, FALLBACK_BUDGET};

pub(crate) const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub kind: ReductionKind,
    /// Plain greedy in the prescribed order was not enough.
    pub greedy_failed: bool,
    /// Dead ends met by the ordered search.
    pub backtracks: u64,
    /// Route used for the list-coloured part of a global kind.
    pub route: Option<Route>,
    /// Set when an exact oracle supplied (part of) the colouring.
    pub fallback: bool,
    /// Vertex outside `J` that was uncoloured to free a colour.
    pub freed: Option<usize>,
    /// Components of the square restricted to `J`.
    pub square_components: Option<usize>,
}

impl ExtensionReport {
    fn new(kind: ReductionKind) -> Self {
        ExtensionReport {
            kind,
            greedy_failed: false,
            backtracks: 0,
            route: None,
            fallback: false,
            freed: None,
            square_components: None,
        }
    }
}

/// The configuration could not be extended from the given colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ExtendFailure {
    pub report: ExtensionReport,
}

/// Extends a colouring of `g - D` to `g`, where `D` is the deletion set of
/// `red` (those entries must be `None`). Entries of `red.recolor` are
/// discarded and chosen again. On failure `colors` is left partially
/// coloured and the report says how far the attempt got.
pub fn extend_coloring(
    g: &Graph,
    red: &Reduction,
    colors: &mut [Option<usize>],
    k: usize,
) -> Result<ExtensionReport, ExtensionReport> {
    let mut raw: Vec<usize> = colors.iter().map(|c| c.unwrap_or(NONE)).collect();
    let out = extend(g, red, &mut raw, k).map_err(|f| f.report);
    for (c, r) in colors.iter_mut().zip(raw) {
        *c = (r != NONE).then_some(r);
    }
    out
}

/// Colours in `0..k` unused by the coloured vertices sharing a neighbour
/// with `v`.
pub(crate) fn available(g: &Graph, colors: &[usize], v: usize, k: usize) -> Vec<usize> {
    let mut used = vec![false; k];
    for &w in g.neighbors(v) {
        for &x in g.neighbors(w) {
            if x != v && colors[x] != NONE && colors[x] < k {
                used[colors[x]] = true;
            }
        }
    }
    (0..k).filter(|&c| !used[c]).collect()
}

/// Extends `colors` (indexed by the vertices of `g`; deleted vertices hold
/// [`NONE`]) to all of `g` with palette `k`.
pub(crate) fn extend(g: &Graph, red: &Reduction, colors: &mut [usize], k: usize) -> Result<ExtensionReport, ExtendFailure> {
    for &v in &red.recolor {
        colors[v] = NONE;
    }
    match red.kind {
        ReductionKind::G23Cycle | ReductionKind::G23Even => extend_lists(g, red, colors, k),
        ReductionKind::AuxHCycle => extend_auxh(g, red, colors, k),
        _ => extend_ordered(g, red.kind, &red.extension_order, colors, k),
    }
}

fn extend_ordered(
    g: &Graph,
    kind: ReductionKind,
    order: &[usize],
    colors: &mut [usize],
    k: usize,
) -> Result<ExtensionReport, ExtendFailure> {
    let mut report = ExtensionReport::new(kind);
    if greedy(g, order, colors, k) {
        return Ok(report);
    }
    report.greedy_failed = true;
    for &v in order {
        colors[v] = NONE;
    }
    if search(g, order, colors, k, &mut report.backtracks) {
        Ok(report)
    } else {
        Err(ExtendFailure { report })
    }
}

fn greedy(g: &Graph, order: &[usize], colors: &mut [usize], k: usize) -> bool {
    for &v in order {
        match available(g, colors, v, k).first() {
            Some(&c) => colors[v] = c,
            None => return false,
        }
    }
    true
}

fn search(g: &Graph, order: &[usize], colors: &mut [usize], k: usize, backtracks: &mut u64) -> bool {
    let Some((&v, rest)) = order.split_first() else { return true };
    for c in available(g, colors, v, k) {
        colors[v] = c;
        if search(g, rest, colors, k, backtracks) {
            return true;
        }
        *backtracks += 1;
    }
    colors[v] = NONE;
    false
}

/// Colours the uncoloured set `j` of the square `sq` from the lists left by
/// the coloured vertices.
fn color_set(g: &Graph, sq: &Graph, j: &[usize], colors: &mut [usize], k: usize) -> Result<Route, ()> {
    let lists: ListAssignment = j.iter().map(|&v| available(g, colors, v, k)).collect();
    let h = sq.induced(j);
    match color_lists_auto(&h, &lists) {
        Ok(r) => {
            for (i, &v) in j.iter().enumerate() {
                colors[v] = r.colors[i];
            }
            Ok(r.route)
        }
        Err(_) => Err(()),
    }
}

fn extend_lists(g: &Graph, red: &Reduction, colors: &mut [usize], k: usize) -> Result<ExtensionReport, ExtendFailure> {
    let mut report = ExtensionReport::new(red.kind);
    let sq = g.neighboring_graph();
    report.square_components = Some(sq.induced(&red.deletion_set).components().len());
    match color_set(g, &sq, &red.deletion_set, colors, k) {
        Ok(route) => {
            report.fallback = route == Route::Fallback;
            report.route = Some(route);
            Ok(report)
        }
        Err(()) => Err(ExtendFailure { report }),
    }
}

/// `J` minus the vertices of square-degree 2 or 4 is list coloured first;
/// the degree-4 vertices follow, then the degree-2 ones. If that fails, a
/// square-degree-2 vertex `z` outside `J` next to `v` in the square is
/// uncoloured and the attempt repeated, `z` being coloured last.
fn extend_auxh(g: &Graph, red: &Reduction, colors: &mut [usize], k: usize) -> Result<ExtensionReport, ExtendFailure> {
    let mut report = ExtensionReport::new(red.kind);
    let sq = g.neighboring_graph();
    let j = &red.deletion_set;
    report.square_components = Some(sq.induced(j).components().len());
    let attempt = |colors: &mut [usize], report: &mut ExtensionReport| -> bool {
        let core: Vec<usize> = j.iter().copied().filter(|&x| !matches!(sq.degree(x), 2 | 4)).collect();
        let mut tail: Vec<usize> = j.iter().copied().filter(|&x| sq.degree(x) == 4).collect();
        tail.extend(j.iter().copied().filter(|&x| sq.degree(x) == 2));
        match color_set(g, &sq, &core, colors, k) {
            Ok(route) => {
                report.route = Some(route);
                report.fallback |= route == Route::Fallback;
            }
            Err(()) => return false,
        }
        greedy(g, &tail, colors, k)
    };
    if attempt(colors, &mut report) {
        return Ok(report);
    }
    report.greedy_failed = true;
    for &x in j {
        colors[x] = NONE;
    }
    let v = red.anchors["v"];
    let z = sq.neighbors(v).iter().copied().find(|&z| colors[z] != NONE && sq.degree(z) == 2 && j.binary_search(&z).is_err());
    let mut uncolored = j.clone();
    if let Some(z) = z {
        report.freed = Some(z);
        let old = colors[z];
        colors[z] = NONE;
        if attempt(colors, &mut report) && greedy(g, &[z], colors, k) {
            return Ok(report);
        }
        for &x in j {
            colors[x] = NONE;
        }
        colors[z] = old;
    }
    // exact fallback over J
    report.fallback = true;
    uncolored.sort_unstable();
    let lists: ListAssignment = uncolored.iter().map(|&x| available(g, colors, x, k)).collect();
    match list_color_exact(&sq.induced(&uncolored), &lists, FALLBACK_BUDGET) {
        Outcome::Done(ListOutcome::Colorable(c)) => {
            for (i, &x) in uncolored.iter().enumerate() {
                colors[x] = c.color(i);
            }
            Ok(report)
        }
        _ => Err(ExtendFailure { report }),
    }
}
