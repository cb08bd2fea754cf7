//! Audits for the maximum-average-degree arguments. Charges live on
//! vertices only and start at `μ(v) = d(v)`.

use std::collections::{BTreeMap, BTreeSet};

use super::ledger::{ChargeLedger, Element};
use super::{excusals, precondition, AuditError, AuditMode, AuditReport, Checks};
use crate::graph::Graph;
use crate::rational::{int, ratio, render, zero, Rational};
use crate::reduction::{Context, ReductionKind, TheoremClass};
use crate::reduction::find_kind;
use crate::structure::{build_auxiliary, mad_exact, thread_decomposition};

fn degree_charges(g: &Graph) -> ChargeLedger {
    ChargeLedger::new(g.vertices().map(|v| (Element::Vertex(v), int(g.degree(v) as i64))).collect())
}

fn require_delta_at_least_four(g: &Graph) -> Result<(), AuditError> {
    if g.max_degree() < 4 {
        return Err(precondition(format!("maximum degree {} is below 4", g.max_degree()), vec![]));
    }
    Ok(())
}

/// Checks `bound(v) <= μ*(v)` on every non-excused vertex; returns the
/// number of vertices checked.
fn vertex_bounds(
    checks: &mut Checks,
    name: &str,
    g: &Graph,
    fin: &BTreeMap<Element, Rational>,
    excused: &BTreeSet<usize>,
    bound: impl Fn(usize) -> Option<Rational>,
) -> usize {
    let mut witness = None;
    let mut audited = 0;
    for v in g.vertices().filter(|v| !excused.contains(v)) {
        let Some(b) = bound(v) else { continue };
        audited += 1;
        let c = &fin[&Element::Vertex(v)];
        if *c < b && witness.is_none() {
            witness = Some(format!("vertex {v} (degree {}) ends with {} < {}", g.degree(v), render(c), render(&b)));
        }
    }
    checks.check(name, witness);
    audited
}

fn conservation(checks: &mut Checks, ledger: &ChargeLedger) {
    let (a, b) = (ledger.total_initial(), ledger.total_final());
    checks.holds("charge_conserved", a == b, || format!("{} before, {} after", render(&a), render(&b)));
}

fn report(
    audit: &'static str,
    mode: AuditMode,
    checks: Checks,
    excused: BTreeSet<usize>,
    audited: usize,
    notes: Vec<String>,
    ledger: ChargeLedger,
) -> AuditReport {
    AuditReport {
        audit,
        mode,
        assertions: checks.list,
        excused_vertices: excused.into_iter().collect(),
        excused_faces: Vec::new(),
        audited_elements: audited,
        notes,
        ledger_summary: ledger.summary(),
        ledger,
    }
}

/// `Δ ≥ 4`, `mad ≤ 5/2` argument. A 3-vertex splits `1/2` equally among its
/// adjacent 2-vertices and a `4+`-vertex sends `1/3` to each adjacent
/// 2-vertex; afterwards every vertex holds at least `5/2` and every
/// `4+`-vertex at least `8/3`.
pub fn audit_lemma6(g: &Graph, mode: AuditMode) -> Result<AuditReport, AuditError> {
    require_delta_at_least_four(g)?;
    let excused = excusals(g, None, TheoremClass::Mad52D4, mode)?;
    let mut ledger = degree_charges(g);
    for v in g.vertices() {
        let twos: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| g.degree(w) == 2).collect();
        let (amount, rule) = match g.degree(v) {
            3 if !twos.is_empty() => (ratio(1, 2 * twos.len() as i64), "R1"),
            d if d >= 4 => (ratio(1, 3), "R2"),
            _ => continue,
        };
        for &w in &twos {
            ledger.send(Element::Vertex(v), Element::Vertex(w), amount.clone(), rule, 1);
        }
    }
    let fin = ledger.final_charges();
    let mut checks = Checks::default();
    conservation(&mut checks, &ledger);
    let audited = vertex_bounds(&mut checks, "vertex_at_least_5/2", g, &fin, &excused, |_| Some(ratio(5, 2)));
    vertex_bounds(&mut checks, "big_vertex_at_least_8/3", g, &fin, &excused, |v| (g.degree(v) >= 4).then(|| ratio(8, 3)));
    Ok(report("lemma6", mode, checks, excused, audited, Vec::new(), ledger))
}

/// `Δ ≥ 4`, `mad < 9/4` argument. Every `3+`-vertex gives `1/8` to each
/// nearby 2-vertex (per thread end); afterwards every vertex holds at least
/// `9/4` and every `4+`-vertex at least `5/2`.
pub fn audit_lemma9(g: &Graph, mode: AuditMode) -> Result<AuditReport, AuditError> {
    require_delta_at_least_four(g)?;
    let excused = excusals(g, None, TheoremClass::Mad94D4, mode)?;
    let td = thread_decomposition(g);
    let mut ledger = degree_charges(g);
    for v in g.vertices().filter(|&v| g.degree(v) >= 3) {
        for w in td.nearby(v) {
            ledger.send(Element::Vertex(v), Element::Vertex(w), ratio(1, 8), "R1", 1);
        }
    }
    let fin = ledger.final_charges();
    let mut checks = Checks::default();
    conservation(&mut checks, &ledger);
    let audited = vertex_bounds(&mut checks, "vertex_at_least_9/4", g, &fin, &excused, |_| Some(ratio(9, 4)));
    vertex_bounds(&mut checks, "big_vertex_at_least_5/2", g, &fin, &excused, |v| (g.degree(v) >= 4).then(|| ratio(5, 2)));
    Ok(report("lemma9", mode, checks, excused, audited, Vec::new(), ledger))
}

/// Lower bound `2i/3 - 3` on the auxiliary degree of a vertex with `i`
/// nearby 2-vertices.
pub fn lemma8_table_bound(i: usize) -> Rational {
    ratio(2 * i as i64, 3) - int(3)
}

const CORE_KINDS: [ReductionKind; 3] = [ReductionKind::OneVertex, ReductionKind::CycleComponent, ReductionKind::FourThread];

/// Deletes 1-vertex, cycle-component and 4-thread configurations until none
/// is left. Returns the core and the number of deletions.
fn reduce_core(g: &Graph) -> (Graph, usize) {
    let mut cur = g.clone();
    let mut rounds = 0;
    loop {
        let ctx = Context::new(&cur, None, 3);
        let Some(red) = CORE_KINDS.iter().find_map(|&k| find_kind(&ctx, k, true).into_iter().next()) else {
            return (cur, rounds);
        };
        let keep: Vec<usize> = cur.vertices().filter(|v| red.deletion_set.binary_search(v).is_err()).collect();
        cur = cur.induced(&keep);
        rounds += 1;
    }
}

/// `Δ = 3`, `mad < 42/19` counting argument, run on the core left after
/// deleting 1-vertices, 2-vertex cycles and 4-threads. Checks the chain
/// `2V2/V3 > 15/2`, the weighted averages of nearby counts, the auxiliary
/// degree table and that the auxiliary graph has average degree above 2 and
/// a cycle through a vertex of degree 3.
pub fn audit_lemma8(g: &Graph, mode: AuditMode) -> Result<AuditReport, AuditError> {
    if g.max_degree() != 3 {
        return Err(precondition(format!("maximum degree {} is not 3", g.max_degree()), vec![]));
    }
    let mad = mad_exact(g);
    if mad.value >= ratio(42, 19) {
        return Err(precondition(format!("mad {} is not below 42/19", render(&mad.value)), mad.witness));
    }
    let (core, rounds) = reduce_core(g);
    if mode == AuditMode::Strict && rounds > 0 {
        let ctx = Context::new(g, None, 3);
        let red = CORE_KINDS.iter().find_map(|&k| find_kind(&ctx, k, true).into_iter().next()).expect("a deletion happened");
        return Err(precondition(format!("configuration {} present", red.kind.label()), red.anchors.values().copied().collect()));
    }
    let mut notes = vec![format!("core has {} of {} vertices after {rounds} deletions", core.n(), g.n())];
    let mut checks = Checks::default();
    let v2 = core.vertices().filter(|&v| core.degree(v) == 2).count();
    let v3 = core.vertices().filter(|&v| core.degree(v) == 3).count();
    notes.push(format!("V2 = {v2}, V3 = {v3}"));
    if v3 == 0 {
        notes.push("core has no 3-vertex; nothing to check".into());
        return Ok(report("lemma8", mode, checks, BTreeSet::new(), 0, notes, ChargeLedger::default()));
    }
    let aux = build_auxiliary(&core).expect("core meets the auxiliary graph preconditions");
    let ratio_v = ratio(2 * v2 as i64, v3 as i64);
    checks.holds("v2_v3_ratio_above_15/2", ratio_v > ratio(15, 2), || format!("2V2/V3 = {}", render(&ratio_v)));

    let weighted = |counts: &[usize; 10]| -> (usize, usize) { (counts.iter().enumerate().map(|(i, a)| i * a).sum(), counts.iter().sum()) };
    let (sum_a, n) = weighted(&aux.a_counts);
    let (sum_hat, n_hat) = weighted(&aux.a_hat_counts);
    checks.holds("nearby_sum_is_2V2", sum_a == 2 * v2, || format!("sum i*a_i = {sum_a}, 2V2 = {}", 2 * v2));
    let avg = ratio(sum_a as i64, n as i64);
    checks.holds("nearby_average_above_15/2", avg > ratio(15, 2), || format!("average {}", render(&avg)));
    checks.holds("hat_counts_agree_at_8_and_9", aux.a_counts[8..] == aux.a_hat_counts[8..], || {
        format!("a = {:?}, a_hat = {:?}", &aux.a_counts[8..], &aux.a_hat_counts[8..])
    });
    let avg_hat = if n_hat == 0 { zero() } else { ratio(sum_hat as i64, n_hat as i64) };
    checks.holds("hat_average_dominates", n_hat > 0 && avg_hat >= avg, || format!("{} < {}", render(&avg_hat), render(&avg)));

    // Degrees in the auxiliary multigraph: parallel links count separately
    // and a link from a 3-vertex to itself counts twice.
    let mut multi = vec![0usize; aux.n_h];
    for l in &aux.links {
        multi[l.ends.0] += 1;
        multi[l.ends.1] += 1;
    }
    let in_hat: Vec<usize> = (0..aux.n_h).filter(|&i| multi[i] > 0).collect();
    let table_witness = in_hat
        .iter()
        .find(|&&i| int(multi[i] as i64) < lemma8_table_bound(aux.nearby[i]))
        .map(|&i| format!("vertex {} has {} nearby and auxiliary degree {}", aux.host_three_vertices[i], aux.nearby[i], multi[i]));
    checks.check("table_bound", table_witness);
    let simple_short = in_hat.iter().filter(|&&i| int(aux.graph.degree(i) as i64) < lemma8_table_bound(aux.nearby[i])).count();
    if simple_short > 0 {
        notes.push(format!("{simple_short} vertices fall below the table bound when parallel links are merged"));
    }
    // same table under the reading where both ends must see the 2-thread
    // condition
    let mut both = vec![0usize; aux.n_h];
    for l in aux.links.iter().filter(|l| l.end_condition.0 && l.end_condition.1) {
        both[l.ends.0] += 1;
        both[l.ends.1] += 1;
    }
    let both_short = (0..aux.n_h).filter(|&i| both[i] > 0 && int(both[i] as i64) < lemma8_table_bound(aux.nearby[i])).count();
    let both_dropped = in_hat.iter().filter(|&&i| both[i] == 0).count();
    notes.push(format!(
        "both-ends reading: {both_dropped} vertices leave the auxiliary graph, {both_short} fall below the table bound"
    ));
    let ends: usize = in_hat.iter().map(|&i| multi[i]).sum();
    checks.holds("hat_average_degree_above_2", !in_hat.is_empty() && ends > 2 * in_hat.len(), || {
        format!("{ends} link ends on {} vertices", in_hat.len())
    });
    let ctx = Context::new(&core, None, 3);
    checks.holds("cycle_through_degree_3", !find_kind(&ctx, ReductionKind::AuxHCycle, true).is_empty(), || {
        "no auxiliary cycle through a vertex of degree 3".into()
    });
    Ok(report("lemma8", mode, checks, BTreeSet::new(), aux.n_h, notes, ChargeLedger::default()))
}
