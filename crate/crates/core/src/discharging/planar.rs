//! Audits for the plane girth arguments. Vertices start with `d(v) - 4`,
//! faces with their walk length minus 4, so the total is `-8` on every
//! connected plane graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::claim1::claim1_match;
use super::ledger::{ChargeLedger, Element, FaceStats};
use super::{excusals, precondition, AuditError, AuditMode, AuditReport, Checks};
use crate::graph::Graph;
use crate::rational::{int, ratio, render, zero, Rational};
use crate::reduction::TheoremClass;
use crate::structure::{girth, thread_decomposition, PlaneEmbedding};

/// Part a 3-vertex plays in one of its faces during the second phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Role {
    None,
    Weak,
    Strong,
    Slim,
    Fat,
}

struct Setup<'a> {
    g: &'a Graph,
    emb: &'a PlaneEmbedding,
    ledger: ChargeLedger,
    excused: BTreeSet<usize>,
    excused_faces: BTreeSet<usize>,
}

fn setup<'a>(
    g: &'a Graph,
    emb: &'a PlaneEmbedding,
    mode: AuditMode,
    class: TheoremClass,
    min_girth: usize,
) -> Result<Setup<'a>, AuditError> {
    if emb.host() != g {
        return Err(AuditError::EmbeddingMismatch);
    }
    if g.max_degree() < 4 {
        return Err(precondition(format!("maximum degree {} is below 4", g.max_degree()), vec![]));
    }
    if mode == AuditMode::Strict && !girth(g).at_least(min_girth) {
        return Err(precondition(format!("girth below {min_girth}"), vec![]));
    }
    let excused = excusals(g, Some(emb), class, mode)?;
    let excused_faces = emb
        .faces()
        .iter()
        .enumerate()
        .filter(|(_, w)| w.iter().any(|v| excused.contains(v)))
        .map(|(f, _)| f)
        .collect();
    let mut initial = BTreeMap::new();
    for v in g.vertices() {
        initial.insert(Element::Vertex(v), int(g.degree(v) as i64 - 4));
    }
    for (f, w) in emb.faces().iter().enumerate() {
        initial.insert(Element::Face(f), int(w.len() as i64 - 4));
    }
    Ok(Setup { g, emb, ledger: ChargeLedger::new(initial), excused, excused_faces })
}

/// Expected total initial charge: `-8` per component with an edge and `-4`
/// per isolated vertex.
fn euler_total(g: &Graph) -> Rational {
    let comps = g.components();
    let with_edges = comps.iter().filter(|c| g.degree(c[0]) > 0).count() as i64;
    int(-8 * with_edges - 4 * (comps.len() as i64 - with_edges))
}

/// Each face gives 1 to every 2-vertex and `1/3` to every 3-vertex on its
/// walk, once per occurrence.
fn phase_one(s: &mut Setup<'_>) {
    for (f, w) in s.emb.faces().iter().enumerate() {
        for &v in w {
            let amount = match s.g.degree(v) {
                2 => int(1),
                3 => ratio(1, 3),
                _ => continue,
            };
            s.ledger.send(Element::Face(f), Element::Vertex(v), amount, "R1", 1);
        }
    }
}

fn base_stats(g: &Graph, f: usize, w: &[usize]) -> FaceStats {
    let mut st = FaceStats { face: f, length: w.len(), ..FaceStats::default() };
    for &v in w {
        match g.degree(v) {
            1 => st.t1 += 1,
            2 => st.t2 += 1,
            3 => st.t3 += 1,
            _ => st.t4 += 1,
        }
    }
    st
}

fn common_checks(checks: &mut Checks, s: &Setup<'_>) {
    let (a, b) = (s.ledger.total_initial(), s.ledger.total_final());
    checks.holds("charge_conserved", a == b, || format!("{} before, {} after", render(&a), render(&b)));
    let expect = euler_total(s.g);
    checks.holds("euler_total", a == expect, || format!("total {} but expected {}", render(&a), render(&expect)));
}

/// First-phase face charge `t1 + 2/3 t3 + t4 - 4`.
fn phase_one_formula(st: &FaceStats) -> Rational {
    int(st.t1 as i64) + ratio(2 * st.t3 as i64, 3) + int(st.t4 as i64) - int(4)
}

fn check_phase_one_formula(checks: &mut Checks, s: &Setup<'_>, mid: &BTreeMap<Element, Rational>) {
    let witness = s.ledger.face_stats.iter().find_map(|st| {
        let c = &mid[&Element::Face(st.face)];
        let want = phase_one_formula(st);
        (*c != want).then(|| format!("face {} holds {} but counts give {}", st.face, render(c), render(&want)))
    });
    checks.check("phase1_face_formula", witness);
}

/// Non-negativity of non-excused vertices and faces; returns how many
/// elements were checked.
fn check_nonnegative(checks: &mut Checks, s: &Setup<'_>, fin: &BTreeMap<Element, Rational>) -> usize {
    let mut audited = 0;
    let mut vw = None;
    for v in s.g.vertices().filter(|v| !s.excused.contains(v)) {
        audited += 1;
        let c = &fin[&Element::Vertex(v)];
        if *c < zero() && vw.is_none() {
            vw = Some(format!("vertex {v} (degree {}) ends with {}", s.g.degree(v), render(c)));
        }
    }
    checks.check("vertices_nonnegative", vw);
    let mut fw = None;
    for f in (0..s.emb.face_count()).filter(|f| !s.excused_faces.contains(f)) {
        audited += 1;
        let c = &fin[&Element::Face(f)];
        if *c < zero() && fw.is_none() {
            fw = Some(format!("face {f} {:?} ends with {}", s.emb.faces()[f], render(c)));
        }
    }
    checks.check("faces_nonnegative", fw);
    audited
}

fn finish(audit: &'static str, mode: AuditMode, checks: Checks, s: Setup<'_>, audited: usize) -> AuditReport {
    AuditReport {
        audit,
        mode,
        assertions: checks.list,
        excused_vertices: s.excused.into_iter().collect(),
        excused_faces: s.excused_faces.into_iter().collect(),
        audited_elements: audited,
        notes: Vec::new(),
        ledger_summary: s.ledger.summary(),
        ledger: s.ledger,
    }
}

/// Girth-9 argument. After the first rule, a face on which a 2-vertex sits
/// between two 3-vertices whose other face neighbours are `4+`-vertices
/// passes `1/3` to the face across that 2-vertex. Every vertex and face must
/// end non-negative.
pub fn audit_thm5a(g: &Graph, emb: &PlaneEmbedding, mode: AuditMode) -> Result<AuditReport, AuditError> {
    let mut s = setup(g, emb, mode, TheoremClass::PlanarG9, 9)?;
    phase_one(&mut s);
    for (f, w) in emb.faces().iter().enumerate() {
        s.ledger.face_stats.push(base_stats(g, f, w));
        let l = w.len();
        if l < 5 {
            continue;
        }
        let d = |i: usize| g.degree(w[(i + l) % l]);
        for j in 0..l {
            if d(j) == 2 && d(j + l - 1) == 3 && d(j + 1) == 3 && d(j + l - 2) >= 4 && d(j + 2) >= 4 {
                let across = emb.face_of_dart(w[j], w[(j + l - 1) % l]);
                s.ledger.send(Element::Face(f), Element::Face(across), ratio(1, 3), "R2", 2);
            }
        }
    }
    let mid = s.ledger.after_phase1();
    let fin = s.ledger.final_charges();
    let mut checks = Checks::default();
    common_checks(&mut checks, &s);
    check_phase_one_formula(&mut checks, &s, &mid);
    let audited = check_nonnegative(&mut checks, &s, &fin);
    Ok(finish("thm5a", mode, checks, s, audited))
}

/// Roles of every 3-vertex, keyed by `(vertex, next vertex along the face
/// walk)`, which names one angle.
fn roles(g: &Graph, emb: &PlaneEmbedding) -> HashMap<(usize, usize), Role> {
    let td = thread_decomposition(g);
    let mut out = HashMap::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 3) {
        let inc = td.incidences(v);
        if inc.len() != 3 {
            continue;
        }
        let len_of = |x: usize| inc.iter().find(|i| i.first == x).map(|i| (i.length, g.degree(i.far)));
        let mut lengths: Vec<usize> = inc.iter().map(|i| i.length).collect();
        lengths.sort_unstable();
        let type1 = lengths == [1, 1, 2] && inc.iter().filter(|i| i.length == 1).all(|i| g.degree(i.far) >= 4);
        let zero_first = inc.iter().filter(|i| i.length == 0).map(|i| i.first).collect::<Vec<_>>();
        let type2 = zero_first.len() == 1 && {
            let rest: Vec<_> = inc.iter().filter(|i| i.length > 0).collect();
            rest.iter().any(|i| i.length == 2) && rest.iter().all(|i| g.degree(i.far) >= 4)
        };
        for (a, b, _) in emb.angles(v) {
            let role = if type1 {
                let ones = len_of(a).map(|x| x.0) == Some(1) && len_of(b).map(|x| x.0) == Some(1);
                if ones { Role::Weak } else { Role::Strong }
            } else if type2 {
                if a == zero_first[0] || b == zero_first[0] { Role::Slim } else { Role::Fat }
            } else {
                Role::None
            };
            out.insert((v, b), role);
        }
    }
    out
}

/// Net charge a face keeps from one vertex occurrence after both phases.
fn contribution(g: &Graph, v: usize, role: Role) -> Rational {
    match (g.degree(v), role) {
        (2, _) => zero(),
        (3, Role::None) => ratio(2, 3),
        (3, Role::Weak) => zero(),
        (3, Role::Slim) => ratio(1, 2),
        _ => int(1),
    }
}

/// Girth-13 argument in two phases. The first phase is the girth-9 first
/// rule; in the second a face gives `2/3` to each weak and `1/6` to each
/// slim 3-vertex and takes `1/3` from each strong and each fat one.
pub fn audit_thm5b(g: &Graph, emb: &PlaneEmbedding, mode: AuditMode) -> Result<AuditReport, AuditError> {
    let mut s = setup(g, emb, mode, TheoremClass::PlanarG13, 13)?;
    phase_one(&mut s);
    let role = roles(g, emb);
    // per face, the contribution of each walk position
    let mut contributions: Vec<Vec<Rational>> = Vec::new();
    for (f, w) in emb.faces().iter().enumerate() {
        let mut st = base_stats(g, f, w);
        let l = w.len();
        let mut contrib = Vec::with_capacity(l);
        for j in 0..l {
            let v = w[j];
            let r = role.get(&(v, w[(j + 1) % l])).copied().unwrap_or(Role::None);
            let (fv, vf) = (Element::Face(f), Element::Vertex(v));
            match r {
                Role::Weak => s.ledger.send(fv, vf, ratio(2, 3), "R2", 2),
                Role::Slim => s.ledger.send(fv, vf, ratio(1, 6), "R2", 2),
                Role::Strong | Role::Fat => s.ledger.send(vf, fv, ratio(1, 3), "R3", 2),
                Role::None => {}
            }
            if g.degree(v) == 3 {
                match r {
                    Role::None => st.t3_prime += 1,
                    Role::Weak => st.weak += 1,
                    Role::Slim => st.slim += 1,
                    Role::Strong => st.strong += 1,
                    Role::Fat => st.fat += 1,
                }
            }
            contrib.push(contribution(g, v, r));
        }
        s.ledger.face_stats.push(st);
        contributions.push(contrib);
    }
    let mid = s.ledger.after_phase1();
    let fin = s.ledger.final_charges();
    let mut checks = Checks::default();
    common_checks(&mut checks, &s);
    check_phase_one_formula(&mut checks, &s, &mid);

    let witness = s.ledger.face_stats.iter().find_map(|st| {
        let want = int(st.t1 as i64) + ratio(2 * st.t3_prime as i64, 3) + int(st.t4 as i64) - int(4)
            + ratio(st.slim as i64, 2)
            + int((st.strong + st.fat) as i64);
        let c = &fin[&Element::Face(st.face)];
        (*c != want).then(|| format!("face {} holds {} but roles give {}", st.face, render(c), render(&want)))
    });
    checks.check("phase2_face_formula", witness);

    let witness = g.vertices().find(|v| mid[&Element::Vertex(*v)] != fin[&Element::Vertex(*v)]).map(|v| format!("vertex {v}"));
    checks.check("phase2_keeps_vertex_charge", witness);

    let live = |st: &&FaceStats| !s.excused_faces.contains(&st.face);
    let witness = s.ledger.face_stats.iter().filter(live).find_map(|st| {
        let c = &mid[&Element::Face(st.face)];
        if *c >= zero() {
            return None;
        }
        let degrees: Vec<usize> = emb.faces()[st.face].iter().map(|&v| g.degree(v)).collect();
        (*c != ratio(-1, 3) || claim1_match(&degrees).is_none())
            .then(|| format!("face {} holds {} with degrees {degrees:?}", st.face, render(c)))
    });
    checks.check("claim1_negative_faces", witness);

    let witness = s.ledger.face_stats.iter().filter(live).find_map(|st| {
        let cap = 2 * st.t3 + 3 * st.t4;
        let ok = if st.t3 > 0 { st.t2 < cap } else { st.t2 <= cap };
        (!ok).then(|| format!("face {}: t2 = {}, t3 = {}, t4 = {}", st.face, st.t2, st.t3, st.t4))
    });
    checks.check("two_vertex_inequality", witness);

    let (four, eight) = segment_checks(&s, &role, &contributions);
    checks.check("segments_of_4_give_1", four);
    checks.check("segments_of_8_give_2", eight);

    let audited = check_nonnegative(&mut checks, &s, &fin);
    Ok(finish("thm5b", mode, checks, s, audited))
}

/// Subpaths `u..v` of non-excused face walks with `d(u), d(v) >= 3`: at
/// least 4 interior vertices must give the face at least 1, and at least 8
/// interior vertices at least 2 unless the path holds a slim vertex.
fn segment_checks(
    s: &Setup<'_>,
    role: &HashMap<(usize, usize), Role>,
    contributions: &[Vec<Rational>],
) -> (Option<String>, Option<String>) {
    let (g, emb) = (s.g, s.emb);
    let (mut four, mut eight) = (None, None);
    for (f, w) in emb.faces().iter().enumerate() {
        if s.excused_faces.contains(&f) {
            continue;
        }
        let l = w.len();
        for a in 0..l {
            if g.degree(w[a]) < 3 {
                continue;
            }
            let mut seen = BTreeSet::from([w[a]]);
            let mut sum = zero();
            let mut slim = role.get(&(w[a], w[(a + 1) % l])) == Some(&Role::Slim);
            for step in 1..l {
                let j = (a + step) % l;
                let v = w[j];
                if !seen.insert(v) {
                    break;
                }
                let r = role.get(&(v, w[(j + 1) % l])).copied().unwrap_or(Role::None);
                if g.degree(v) >= 3 {
                    let interior = step - 1;
                    if interior >= 4 && sum < int(1) && four.is_none() {
                        four = Some(format!("face {f}, path from position {a} to {j} gives {}", render(&sum)));
                    }
                    let slim_here = slim || r == Role::Slim;
                    if interior >= 8 && !slim_here && sum < int(2) && eight.is_none() {
                        eight = Some(format!("face {f}, path from position {a} to {j} gives {}", render(&sum)));
                    }
                }
                sum += &contributions[f][j];
                slim |= r == Role::Slim;
            }
        }
    }
    (four, eight)
}
