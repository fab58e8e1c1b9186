//! Template anchors checked against lists written out by hand from the
//! formulas, one instance per case, plus the sweep properties.

use mhc_core::constructions::{build_g, build_h, valid_parameters, Family, LabeledGraph};
use mhc_core::formulas::{cases, dispatch, emit_path, template_anchors, verify_all_pairs, CaseId};
use mhc_core::verify_path;

fn at(lg: &LabeledGraph, name: &str) -> usize {
    lg.vertex_by_label(name).unwrap_or_else(|| panic!("no vertex {name}"))
}

fn check(lg: &LabeledGraph, minor: u8, u: &str, v: &str, expected: &[&str]) {
    let major = if lg.family == Family::CaseOdd { 1 } else { 2 };
    let case = CaseId { major, minor };
    let (a, b) = (at(lg, u), at(lg, v));
    assert_eq!(dispatch(lg, a, b).unwrap().case, case, "dispatch of ({u}, {v})");
    let anchors = template_anchors(lg, case, a, b).unwrap();
    let got: Vec<String> = anchors.iter().map(|&x| lg.label(x)).collect();
    assert_eq!(got, expected, "case {case}");

    let path = emit_path(lg, case, a, b).unwrap();
    assert!(path.verified && verify_path(&lg.graph, &path));
    assert_eq!(path.endpoints, (a, b));
    let mut rest = path.vertices.iter();
    for x in &anchors {
        assert!(rest.any(|y| y == x), "case {case}: anchor {} out of order", lg.label(*x));
    }
}

#[test]
fn odd_family_anchor_lists() {
    // k = 3, s = 6
    let g = build_g(16, 5).unwrap();
    check(&g, 1, "x2", "x3", &["x2", "y1", "x1", "z1", "z2", "y2", "z7", "x3"]);
    check(&g, 2, "x2", "y3", &["x2", "x3", "z7", "y4", "z4", "z3", "z1", "x1", "y1", "y3"]);
    check(&g, 3, "x2", "z3", &["x2", "x3", "z7", "z4", "y4", "y3", "y1", "x1", "z1", "z3"]);
    check(&g, 4, "x2", "z7", &["x2", "x3", "y1", "x1", "z1", "z2", "z7"]);
    check(&g, 5, "y2", "y5", &["y2", "y3", "y4", "z4", "z2", "z1", "x1", "x2", "x3", "z7", "z5", "y5"]);
    check(&g, 6, "y2", "z5", &["y2", "y3", "y4", "z4", "z2", "z1", "x1", "x2", "x3", "z7", "y5", "z5"]);
    check(
        &g,
        7,
        "y5",
        "z2",
        &["y5", "y4", "y2", "y1", "z1", "x1", "x2", "x3", "z7", "y6", "z6", "z5", "z2"],
    );
    check(&g, 8, "z2", "z5", &["z2", "z3", "z4", "y4", "y2", "y1", "z1", "x1", "x2", "x3", "z7", "z5"]);
}

#[test]
fn even_family_anchor_lists() {
    // k = 4, s = 5
    let h = build_h(17, 5).unwrap();
    check(&h, 1, "y1", "y3", &["y1", "y2", "x", "z1", "z0", "w1", "w6", "y4", "y3"]);
    check(&h, 2, "y2", "y4", &["y2", "y3", "x", "y1", "z0", "w6", "y4"]);
    check(&h, 3, "y1", "x", &["y1", "z0", "w6", "y4", "y2", "x"]);
    check(&h, 4, "y2", "x", &["y2", "y3", "y4", "w6", "z0", "y1", "x"]);
    check(&h, 5, "y2", "z2", &["y2", "y1", "x", "y3", "y4", "w6", "z3", "w3", "w2", "w1", "z0", "z2"]);
    check(&h, 6, "y4", "z0", &["y4", "y3", "y1", "x", "z1", "z5", "w6", "w1", "z0"]);
    check(&h, 7, "y4", "z2", &["y4", "y3", "y2", "x", "y1", "z0", "z1", "w1", "w2", "w6", "z5", "z2"]);
    check(&h, 8, "y1", "w3", &["y1", "z0", "w1", "w2", "z2", "z1", "x", "y2", "y4", "w6", "w3"]);
    check(&h, 9, "y2", "w3", &["y2", "y3", "y4", "x", "y1", "z0", "w2", "z2", "z3", "z5", "w6", "w3"]);
    check(&h, 10, "x", "z2", &["x", "y1", "y4", "w6", "z3", "w3", "w2", "w1", "z0", "z2"]);
    check(&h, 11, "x", "w3", &["x", "y4", "y1", "z0", "w2", "z2", "z3", "z5", "w6", "w3"]);
    check(
        &h,
        12,
        "z1",
        "z3",
        &["z1", "w1", "z0", "y1", "x", "y2", "y4", "w6", "z4", "w4", "w3", "w2", "z2", "z3"],
    );
    check(&h, 13, "z0", "w3", &["z0", "w1", "w2", "z2", "z1", "x", "y1", "y4", "w6", "w3"]);
    check(
        &h,
        14,
        "z2",
        "w4",
        &["z2", "z3", "w3", "w2", "w1", "z0", "y1", "x", "y2", "y4", "w6", "z4", "w4"],
    );
    check(
        &h,
        15,
        "z4",
        "w2",
        &["z4", "z3", "z2", "z1", "w1", "z0", "y1", "x", "y2", "y4", "w6", "z5", "w5", "w2"],
    );
    check(
        &h,
        16,
        "w2",
        "w4",
        &["w2", "w3", "z3", "z2", "z1", "w1", "z0", "y1", "x", "y2", "y4", "w6", "z4", "w4"],
    );
}

#[test]
fn reversed_pairs_keep_case_orientation() {
    let g = build_g(16, 5).unwrap();
    let (y2, z5) = (at(&g, "y2"), at(&g, "z5"));
    let m = dispatch(&g, z5, y2).unwrap();
    assert_eq!((m.start, m.end), (y2, z5));
    let p = emit_path(&g, m.case, z5, y2).unwrap();
    assert_eq!(p.endpoints, (y2, z5));
}

#[test]
fn sweep_small_orders() {
    for (n, delta) in valid_parameters(14).filter(|&(n, d)| d < n - 1) {
        let lg = mhc_core::construct(n, delta).unwrap();
        let report = verify_all_pairs(&lg).unwrap();
        assert_eq!(report.pairs(), n * (n - 1) / 2);
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "({n}, {delta}): {bad:?}");
        let mut seen = std::collections::BTreeSet::new();
        for r in &report.records {
            let p = r.path.as_ref().unwrap();
            let mut sorted = p.vertices.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..n).collect::<Vec<_>>());
            seen.insert(r.case.unwrap());
        }
        assert!(seen.iter().all(|c| cases(lg.family).contains(c)));
    }
}

#[test]
fn every_case_is_reached() {
    for (lg, total) in [(build_g(16, 5).unwrap(), 8), (build_h(17, 5).unwrap(), 16)] {
        let report = verify_all_pairs(&lg).unwrap();
        let seen: std::collections::BTreeSet<_> = report.records.iter().filter_map(|r| r.case).collect();
        assert_eq!(seen.len(), total);
    }
}
