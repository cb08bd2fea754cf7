//! Discharging audits on hand-built graphs, generated corpora and an
//! exhaustive enumeration of face degree sequences.

use injcolor::discharging::{
    audit_for_class, audit_lemma6, audit_lemma8, audit_lemma9, audit_thm5b, claim1_match, AuditError, AuditMode,
    Element, CLAIM1_PATTERNS,
};
use injcolor::discharging::{audit_thm5a, Status};
use injcolor::factory::{random_planar_girth, subdivide, Corpus};
use injcolor::families::{complete, octahedron, petersen};
use injcolor::PlaneEmbedding;
use injcolor::rational::{int, ratio};
use injcolor::reduction::TheoremClass;
use injcolor::Graph;
use proptest::prelude::*;

/// Degree walks of faces made of `big` (3 or 4, meaning `4+`) vertices
/// separated by runs of 2-vertices, where runs never exceed 3, a run of 3
/// sits between two `4+`-vertices and a run of 2 touches a `4+`-vertex.
fn admissible_faces(max_big: usize, min_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=max_big {
        let total = 8usize.pow(k as u32);
        for code in 0..total {
            let mut c = code;
            let mut big = Vec::with_capacity(k);
            let mut gaps = Vec::with_capacity(k);
            for _ in 0..k {
                big.push(if c % 2 == 0 { 3 } else { 4 });
                gaps.push((c / 2) % 4);
                c /= 8;
            }
            let ok = (0..k).all(|i| {
                let (a, b) = (big[i], big[(i + 1) % k]);
                match gaps[i] {
                    3 => a == 4 && b == 4,
                    2 => a == 4 || b == 4,
                    _ => true,
                }
            });
            if !ok {
                continue;
            }
            let mut face = Vec::new();
            for i in 0..k {
                face.push(big[i]);
                face.extend(std::iter::repeat_n(2, gaps[i]));
            }
            if face.len() >= min_len {
                out.push(face);
            }
        }
    }
    out
}

#[test]
fn negative_faces_are_exactly_the_three_patterns() {
    // 2/3 t3 + t4 - 4 < 0 forces t3 + t4 <= 5
    let faces = admissible_faces(5, 13);
    let mut seen = std::collections::BTreeSet::new();
    for face in &faces {
        let t3 = face.iter().filter(|&&d| d == 3).count() as i64;
        let t4 = face.iter().filter(|&&d| d == 4).count() as i64;
        let charge = ratio(2 * t3, 3) + int(t4) - int(4);
        if charge < int(0) {
            assert_eq!(charge, ratio(-1, 3), "{face:?}");
            let label = claim1_match(face).unwrap_or_else(|| panic!("unlisted negative face {face:?}"));
            seen.insert(label);
        }
    }
    assert_eq!(seen.len(), CLAIM1_PATTERNS.len());
}

#[test]
fn three_vertex_with_one_three_neighbour_ends_at_five_halves() {
    // 0 is a 3-vertex adjacent to 2-vertices 1, 2 and to the 3-vertex 3;
    // everything else is attached to a K5 so no configuration appears
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    let k5: Vec<usize> = (4..9).collect();
    for (i, &a) in k5.iter().enumerate() {
        for &b in &k5[i + 1..] {
            edges.push((a, b));
        }
    }
    edges.extend([(1, 4), (2, 5), (3, 6), (3, 7)]);
    let g = Graph::from_edges(9, edges).unwrap();
    let r = audit_lemma6(&g, AuditMode::Strict).unwrap();
    assert!(r.passed(), "{:?}", r.assertions);
    assert_eq!(r.ledger.final_charges()[&Element::Vertex(0)], ratio(5, 2));
}

#[test]
fn subdivided_k5_is_configuration_free() {
    let g = subdivide(&complete(5), 1);
    let r = audit_lemma6(&g, AuditMode::Strict).unwrap();
    assert!(r.passed());
    let fin = r.ledger.final_charges();
    assert!(g.vertices().all(|v| fin[&Element::Vertex(v)] == ratio(8, 3)));
}

#[test]
fn three_vertex_with_three_two_threads_ends_at_nine_quarters() {
    // every K5 vertex also carries a 2-thread to one of two 3-vertex hubs
    let k5 = complete(5);
    let mut edges: Vec<(usize, usize)> = k5.edges().collect();
    let mut n = 7;
    for v in 0..5 {
        let hub = if v < 3 { 5 } else { 6 };
        edges.extend([(v, n), (n, n + 1), (n + 1, hub)]);
        n += 2;
    }
    // the second hub needs a third thread
    edges.extend([(6, n), (n, n + 1), (n + 1, 0)]);
    let g = Graph::from_edges(n + 2, edges).unwrap();
    let r = audit_lemma9(&g, AuditMode::Strict).unwrap();
    assert!(r.passed(), "{:?}", r.assertions);
    assert_eq!(r.ledger.final_charges()[&Element::Vertex(5)], ratio(9, 4));
    assert_eq!(r.ledger.final_charges()[&Element::Vertex(7)], ratio(9, 4));
}

#[test]
fn strict_mode_rejects_configurations() {
    let g = subdivide(&petersen(), 3);
    assert!(matches!(audit_lemma8(&g, AuditMode::Strict), Ok(_)));
    let mut with_leaf = g.clone();
    let n = with_leaf.n();
    let edges: Vec<(usize, usize)> = with_leaf.edges().chain([(0, n)]).collect();
    with_leaf = Graph::from_edges(n + 1, edges).unwrap();
    assert!(matches!(audit_lemma8(&with_leaf, AuditMode::Strict), Err(AuditError::Precondition { .. })));

    let corpus = Corpus::generate(TheoremClass::PlanarG13, 5, 1, 60).unwrap();
    let inst = &corpus.instances[0];
    let err = audit_thm5b(&inst.graph, inst.embedding.as_ref().unwrap(), AuditMode::Strict).unwrap_err();
    assert!(matches!(err, AuditError::Precondition { .. }));
}

#[test]
fn localized_audits_pass_on_generated_corpora() {
    for class in [
        TheoremClass::Mad52D4,
        TheoremClass::Mad94D4,
        TheoremClass::Mad4219D3,
        TheoremClass::PlanarG9,
        TheoremClass::PlanarG13,
    ] {
        let corpus = Corpus::generate(class, 11, 12, 60).unwrap();
        for inst in &corpus.instances {
            let r = audit_for_class(class, &inst.graph, inst.embedding.as_ref(), AuditMode::Localized)
                .expect("class has an audit")
                .unwrap_or_else(|e| panic!("{class:?} {}: {e}", inst.provenance));
            assert!(r.passed(), "{class:?} {}: {:?}", inst.provenance, r.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn unexcused_negative_faces_are_reported() {
    // triangles of the octahedron start at -1 and no configuration covers them
    let coords = [(0.0, 3.0), (-3.0, -2.0), (3.0, -2.0), (0.6, 0.3), (-0.6, 0.3), (0.0, -0.6)];
    let g = octahedron();
    let emb = PlaneEmbedding::from_coordinates(g.clone(), &coords, None).unwrap();
    let r = audit_thm5a(&g, &emb, AuditMode::Localized).unwrap();
    assert_eq!(r.assertion("faces_nonnegative").unwrap().status, Status::Fail);
    assert_eq!(r.assertion("euler_total").unwrap().status, Status::Pass);
    assert!(audit_thm5a(&g, &emb, AuditMode::Strict).is_err());
}

/// Random simple graph on `n` vertices with some subdivided edges.
fn random_graph(n: usize, edges: &[(usize, usize)], subdivide_mask: &[u8]) -> Graph {
    let mut set = std::collections::BTreeSet::new();
    for &(a, b) in edges {
        let (a, b) = (a % n, b % n);
        if a != b {
            set.insert((a.min(b), a.max(b)));
        }
    }
    let mut out = Vec::new();
    let mut next = n;
    for (i, (a, b)) in set.into_iter().enumerate() {
        let k = subdivide_mask.get(i).copied().unwrap_or(0) as usize % 4;
        let mut prev = a;
        for _ in 0..k {
            out.push((prev, next));
            prev = next;
            next += 1;
        }
        out.push((prev, b));
    }
    Graph::from_edges_unchecked(next, out)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sparse_bounds_hold_away_from_configurations(
        n in 5usize..12,
        edges in prop::collection::vec((0usize..12, 0usize..12), 8..30),
        mask in prop::collection::vec(any::<u8>(), 30),
    ) {
        let g = random_graph(n, &edges, &mask);
        prop_assume!(g.max_degree() >= 4);
        for r in [audit_lemma6(&g, AuditMode::Localized).unwrap(), audit_lemma9(&g, AuditMode::Localized).unwrap()] {
            prop_assert!(r.passed(), "{}: {:?}", r.audit, r.failures().collect::<Vec<_>>());
            prop_assert_eq!(r.ledger.total_initial(), r.ledger.total_final());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn planar_audits_pass_on_random_instances(seed in any::<u64>(), n in 30usize..70) {
        let (g, emb) = random_planar_girth(n, 9, 4, 8, seed).unwrap();
        let r = audit_thm5a(&g, &emb, AuditMode::Localized).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let (g, emb) = random_planar_girth(n, 13, 4, 8, seed).unwrap();
        let r = audit_thm5b(&g, &emb, AuditMode::Localized).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        prop_assert_eq!(r.ledger.total_initial(), int(-8));
    }
}
