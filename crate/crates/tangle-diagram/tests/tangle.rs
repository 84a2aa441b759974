use std::path::PathBuf;

use hopf_core::{exterior_algebra, HopfAutomorphism, TwistedAutomorphism};
use proptest::prelude::*;
use scalar_ring::FieldMatrix;
use tangle_diagram::{
    check_representation, parse_tangle, wirtinger, Letter, TangleDiagram, TangleError, TangleRepresentation,
    WirtingerPresentation,
};

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn corpus(name: &str) -> TangleDiagram {
    let text = std::fs::read_to_string(data(&format!("tangles/{name}.tng"))).unwrap();
    parse_tangle(&text).unwrap()
}

const CORPUS: &[&str] = &[
    "trivial",
    "trefoil",
    "trefoil2",
    "mirror",
    "fig8",
    "kink_pos_ccw",
    "kink_neg_ccw",
    "kink_pos_cw",
    "kink_neg_cw",
    "knot_5_1",
    "knot_5_2",
    "knot_6_1",
    "knot_6_2",
    "knot_6_3",
];

/// Relators as (generator, exponent) lists.
fn relator_table(p: &WirtingerPresentation) -> Vec<Vec<(usize, i64)>> {
    p.relators.iter().map(|r| r.letters.iter().map(|l| (l.generator, l.exponent())).collect()).collect()
}

#[test]
fn trefoil_counts() {
    let d = corpus("trefoil");
    assert_eq!(d.g(), 3);
    assert_eq!(d.writhe(), 3);
    assert_eq!(d.crossings().len(), 3);
    assert_eq!(d.arcs().len(), 4);
}

#[test]
fn trivial_tangle() {
    let d = parse_tangle("|").unwrap();
    assert_eq!((d.g(), d.writhe(), d.rotation()), (0, 0, 0));
    let p = wirtinger(&d);
    assert_eq!(p.generators, 1);
    assert!(p.relators.is_empty());
}

#[test]
fn figure_eight_writhe() {
    let d = corpus("fig8");
    assert_eq!(d.writhe(), 0);
    assert_eq!(d.g(), 4);
}

// Frozen from an independent strand-tracing script over the same corpus.
#[test]
fn corpus_writhe_rotation_and_last_crossing() {
    let expected: &[(&str, usize, i64, i64, bool)] = &[
        ("trivial", 0, 0, 0, true),
        ("trefoil", 3, 3, -1, true),
        ("trefoil2", 3, 3, 1, false),
        ("mirror", 3, -3, 1, true),
        ("fig8", 4, 0, -2, true),
        ("kink_pos_ccw", 1, 1, 1, false),
        ("kink_neg_ccw", 1, -1, 1, true),
        ("kink_pos_cw", 1, 1, -1, true),
        ("kink_neg_cw", 1, -1, -1, false),
        ("knot_5_1", 5, 5, -1, true),
        ("knot_5_2", 6, 4, -2, false),
        ("knot_6_1", 7, 1, -3, false),
        ("knot_6_2", 6, 2, -2, true),
        ("knot_6_3", 6, 0, -2, true),
    ];
    for &(name, g, w, rot, last_under) in expected {
        let d = corpus(name);
        assert_eq!((d.g(), d.writhe(), d.rotation(), d.last_is_under()), (g, w, rot, last_under), "{name}");
        assert_eq!(d.rotation_cw(), -rot);
    }
}

#[test]
fn trefoil_wirtinger_relators() {
    let p = wirtinger(&corpus("trefoil"));
    assert_eq!(p.generators, 3);
    assert_eq!(relator_table(&p), vec![vec![(2, 1), (0, 1), (2, -1), (1, -1)], vec![(0, 1), (1, 1), (0, -1), (2, -1)]]);
    assert_eq!(p.to_string(), "<b1, b2, b3 | b1 b3 b1^-1 b2^-1, b3 b2 b3^-1 b1^-1>");
}

#[test]
fn mirror_uses_negative_template() {
    let p = wirtinger(&corpus("mirror"));
    assert_eq!(relator_table(&p), vec![vec![(2, -1), (0, 1), (2, 1), (1, -1)], vec![(0, -1), (1, 1), (0, 1), (2, -1)]]);
}

#[test]
fn figure_eight_relators_mix_signs() {
    let p = wirtinger(&corpus("fig8"));
    assert_eq!(p.generators, 4);
    assert_eq!(
        relator_table(&p),
        vec![
            vec![(3, -1), (0, 1), (3, 1), (1, -1)],
            vec![(0, 1), (1, 1), (0, -1), (2, -1)],
            vec![(1, -1), (2, 1), (1, 1), (3, -1)],
        ]
    );
}

#[test]
fn top_arc_over_maps_to_meridian() {
    // In 5_2 the arc through the top endpoint passes over a crossing.
    let p = wirtinger(&corpus("knot_5_2"));
    assert_eq!(relator_table(&p)[4], vec![(0, -1), (4, 1), (0, 1), (5, -1)]);
}

#[test]
fn generator_names() {
    let d = corpus("trefoil");
    assert_eq!(d.generator_name(0), "b3");
    assert_eq!(d.generator_name(2), "b1");
    assert_eq!(d.generator_name(3), "b3");
    assert_eq!(d.generator_index("b2"), Some(1));
    assert_eq!(d.generator_index("b4"), None);
    assert_eq!(parse_tangle("|").unwrap().generator_name(0), "b1");
}

#[test]
fn kink_parity() {
    for name in ["kink_pos_ccw", "kink_neg_ccw", "kink_pos_cw", "kink_neg_cw"] {
        let d = corpus(name);
        assert_eq!(d.writhe().abs(), 1);
        assert_eq!(d.rotation().abs(), 1);
        assert_eq!((d.writhe() - d.rotation()) % 2, 0);
    }
}

#[test]
fn corpus_parity_and_round_trip() {
    for name in CORPUS {
        let d = corpus(name);
        assert_eq!((d.writhe() - d.rotation()).rem_euclid(2), 0, "{name}");
        assert_eq!(parse_tangle(&d.to_text()).unwrap(), d, "{name}");
    }
}

#[test]
fn comments_and_blank_lines() {
    let d = parse_tangle("# trefoil\n\n| u-   # cup\nx+ !\nx+ !\nx+ !\n| n-\n").unwrap();
    assert_eq!(d, corpus("trefoil"));
}

#[test]
fn unknown_token_position() {
    match parse_tangle("| u-\nx+ ?\n") {
        Err(TangleError::Token { line, column, token }) => assert_eq!((line, column, token.as_str()), (2, 4, "?")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn strand_count_errors() {
    assert!(matches!(parse_tangle("x+"), Err(TangleError::StrandCount { line: 1, column: 1, .. })));
    assert!(matches!(parse_tangle("| u-\n|"), Err(TangleError::StrandCount { line: 2, .. })));
    assert!(matches!(parse_tangle("| u-\n| | ! !"), Err(TangleError::StrandCount { line: 2, column: 7, .. })));
}

#[test]
fn orientation_errors() {
    assert!(matches!(parse_tangle("!"), Err(TangleError::Orientation { line: 1, column: 1, .. })));
    assert!(matches!(parse_tangle("| u-\n| n+"), Err(TangleError::Orientation { line: 2, column: 3, .. })));
}

#[test]
fn empty_and_boundary_errors() {
    assert!(matches!(parse_tangle(""), Err(TangleError::Empty)));
    assert!(matches!(parse_tangle("# nothing\n"), Err(TangleError::Empty)));
    assert!(matches!(parse_tangle("| u-"), Err(TangleError::Boundary { .. })));
}

#[test]
fn closed_extra_component_rejected() {
    // An unlinked circle next to the strand.
    assert!(matches!(parse_tangle("| u+\n| n+"), Err(TangleError::MultipleComponents)));
    // Two-component closure of the braid s1^2.
    assert!(matches!(parse_tangle("| u-\nx+ !\nx+ !\n| n-"), Err(TangleError::MultipleComponents)));
}

fn sl2_trefoil(h: &hopf_core::HopfAlgebraData, graded: bool) -> TangleRepresentation {
    let a = FieldMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
    let b = FieldMatrix::from_int_rows(&[&[1, 0], &[-1, 1]]);
    let c = FieldMatrix::from_int_rows(&[&[0, 1], &[-1, 2]]);
    TangleRepresentation::from_linear(h, vec![a, b, c], vec![0; 3], graded).unwrap()
}

#[test]
fn trivial_representation_holds() {
    let h = exterior_algebra(2).unwrap();
    for name in CORPUS {
        let d = corpus(name);
        for graded in [false, true] {
            let rho = TangleRepresentation::trivial(&h, d.generator_count(), graded);
            assert!(check_representation(&d, &rho, &h).unwrap(), "{name}");
        }
    }
}

#[test]
fn sl2_trefoil_representation() {
    let h = exterior_algebra(2).unwrap();
    let d = corpus("trefoil");
    for graded in [false, true] {
        assert!(check_representation(&d, &sl2_trefoil(&h, graded), &h).unwrap());
    }
    let rho = TangleRepresentation::load(data("reps/trefoil_sl2.json"), &h, &d).unwrap();
    assert_eq!(rho, sl2_trefoil(&h, false));
    assert!(rho.linear().is_some());
}

#[test]
fn broken_representation_detected() {
    let h = exterior_algebra(2).unwrap();
    let d = corpus("trefoil");
    let mut images = sl2_trefoil(&h, false).images().to_vec();
    images[2] = TwistedAutomorphism::identity(h.dim());
    assert!(!check_representation(&d, &TangleRepresentation::new(images, false), &h).unwrap());
}

#[test]
fn graded_requires_unit_shifts() {
    let h = exterior_algebra(1).unwrap();
    let d = corpus("trefoil");
    let id = TwistedAutomorphism::new(HopfAutomorphism::identity(2), 0);
    assert!(!check_representation(&d, &TangleRepresentation::new(vec![id; 3], true), &h).unwrap());
}

#[test]
fn non_automorphism_rejected() {
    let h = exterior_algebra(1).unwrap();
    let d = corpus("trivial");
    let m = FieldMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
    let rho = TangleRepresentation::new(vec![TwistedAutomorphism::new(HopfAutomorphism::from_matrix(m), 0)], false);
    assert!(!check_representation(&d, &rho, &h).unwrap());
}

#[test]
fn representation_file_errors() {
    let h = exterior_algebra(2).unwrap();
    let d = corpus("trefoil");
    let missing = r#"{"generators": {"b1": {}, "b2": {}}}"#;
    assert!(
        matches!(TangleRepresentation::from_json(missing, &h, &d), Err(TangleError::MissingGenerator(n)) if n == "b3")
    );
    let unknown = r#"{"generators": {"b7": {}, "*": {}}}"#;
    assert!(matches!(TangleRepresentation::from_json(unknown, &h, &d), Err(TangleError::Representation(_))));
    let count = TangleRepresentation::trivial(&h, 2, false);
    assert!(matches!(check_representation(&d, &count, &h), Err(TangleError::GeneratorCount { .. })));
}

#[test]
fn representation_file_defaults_and_grading() {
    let h = exterior_algebra(2).unwrap();
    let d = corpus("fig8");
    let text = std::fs::read_to_string(data("reps/trivial.json")).unwrap();
    let rho = TangleRepresentation::from_json(&text, &h, &d).unwrap();
    assert_eq!(rho.images().len(), 4);
    assert_eq!(rho.shifts(), vec![0; 4]);
    assert_eq!(rho.linear().map(|m| m.len()), Some(4));
    let graded = r#"{"graded": true, "generators": {"*": {"shift": 5}}}"#;
    let rho = TangleRepresentation::from_json(graded, &h, &d).unwrap();
    assert_eq!(rho.shifts(), vec![1; 4]);
    assert!(check_representation(&d, &rho, &h).unwrap());
}

#[test]
fn full_automorphism_images() {
    let h = hopf_core::taft_algebra(3).unwrap();
    let d = corpus("trefoil");
    let text = r#"{"cyclotomic_order": 3, "generators": {"*": {}}}"#;
    let rho = TangleRepresentation::from_json(text, &h, &d).unwrap();
    assert!(rho.linear().is_none());
    assert!(check_representation(&d, &rho, &h).unwrap());
}

#[test]
fn arc_labels_close_up() {
    let h = exterior_algebra(2).unwrap();
    let d = corpus("trefoil");
    let labels = sl2_trefoil(&h, true).arc_labels(&d).unwrap();
    assert_eq!(labels.len(), 4);
    assert_eq!(labels[3], labels[0]);
}

/// Closure of a braid word on k strands, leftmost strand left open.
fn braid_closure(word: &[i32], k: usize) -> String {
    let mut lines = Vec::new();
    for j in 1..k {
        let mut t = vec!["|"; j];
        t.push("u-");
        t.extend(vec!["!"; j - 1]);
        lines.push(t.join(" "));
    }
    for &s in word {
        let i = s.unsigned_abs() as usize;
        let mut t = vec!["|"; i - 1];
        t.push(if s > 0 { "x+" } else { "x-" });
        t.extend(vec!["|"; k - i - 1]);
        t.extend(vec!["!"; k - 1]);
        lines.push(t.join(" "));
    }
    for j in (1..k).rev() {
        let mut t = vec!["|"; j];
        t.push("n-");
        t.extend(vec!["!"; j - 1]);
        lines.push(t.join(" "));
    }
    lines.join("\n")
}

fn braid() -> impl Strategy<Value = (Vec<i32>, usize)> {
    (2usize..=4).prop_flat_map(|k| {
        let gen = (1..k as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        (prop::collection::vec(gen, 1..9), Just(k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braid_closures((word, k) in braid()) {
        let d = match parse_tangle(&braid_closure(&word, k)) {
            Ok(d) => d,
            Err(TangleError::MultipleComponents) => return Err(TestCaseError::reject("link")),
            Err(e) => panic!("{e}"),
        };
        prop_assert_eq!(d.writhe(), word.iter().map(|s| i64::from(s.signum())).sum::<i64>());
        prop_assert_eq!(d.g(), word.len());
        prop_assert_eq!((d.writhe() - d.rotation()).rem_euclid(2), 0);
        prop_assert_eq!(d.rotation(), -(k as i64 - 1));
        prop_assert_eq!(&parse_tangle(&d.to_text()).unwrap(), &d);
        let p = wirtinger(&d);
        prop_assert_eq!(p.relators.len(), d.generator_count().saturating_sub(1));
        for r in &p.relators {
            // Every meridian abelianizes to the same class.
            prop_assert_eq!(WirtingerPresentation::exponent_sums(r, p.generators).iter().sum::<i64>(), 0);
        }
        let h = exterior_algebra(1).unwrap();
        let rho = TangleRepresentation::trivial(&h, d.generator_count(), true);
        prop_assert!(check_representation(&d, &rho, &h).unwrap());
    }

    #[test]
    fn abelian_representation_holds((word, k) in braid(), a in 1i64..5, s in -2i64..3) {
        // Every meridian to the same scalar matrix: relators hold in any abelian image.
        let Ok(d) = parse_tangle(&braid_closure(&word, k)) else { return Err(TestCaseError::reject("link")) };
        let h = exterior_algebra(1).unwrap();
        let m = FieldMatrix::from_int_rows(&[&[a]]);
        let rho = TangleRepresentation::from_linear(&h, vec![m; d.generator_count()], vec![s; d.generator_count()], false).unwrap();
        prop_assert!(check_representation(&d, &rho, &h).unwrap());
        let w = rho.evaluate(&[Letter::new(0, false), Letter::new(0, true)]).unwrap();
        prop_assert!(w.is_identity());
    }
}
