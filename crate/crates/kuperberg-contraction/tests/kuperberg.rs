use std::path::PathBuf;
use std::sync::Arc;

use hopf_core::{
    exterior_algebra, integral_pair, taft_algebra, HopfAlgebraData, HopfAutomorphism, StructureTensors,
    TwistedAutomorphism,
};
use kuperberg_contraction::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use scalar_ring::{cyclotomic_field, FieldElement, FieldMatrix, LaurentScalar};
use tangle_diagram::{parse_tangle, Letter, TangleDiagram, TangleRepresentation};
use twisted_double::{RibbonData, TwistedDouble};

fn corpus(name: &str) -> TangleDiagram {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../data/tangles/{name}.tng"));
    parse_tangle(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn double(n: usize) -> TwistedDouble {
    TwistedDouble::new(Arc::new(exterior_algebra(n).unwrap()))
}

fn trivial(h: &HopfAlgebraData, d: &TangleDiagram, graded: bool) -> TangleRepresentation {
    TangleRepresentation::trivial(h, d.generator_count(), graded)
}

fn sl2_trefoil(h: &HopfAlgebraData, graded: bool) -> TangleRepresentation {
    let ms = [[[1, 1], [0, 1]], [[1, 0], [-1, 1]], [[0, 1], [-1, 2]]]
        .map(|m| FieldMatrix::from_int_rows(&[&m[0], &m[1]]))
        .to_vec();
    TangleRepresentation::from_linear(h, ms, vec![0; 3], graded).unwrap()
}

fn t_poly(coeffs: &[i64]) -> LaurentScalar {
    LaurentScalar::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (2 * i as i64, FieldElement::from_int(c))))
}

#[test]
fn main_identity_on_corpus() {
    for n in [1, 2] {
        let dbl = double(n);
        let rib = RibbonData::new(&dbl).unwrap();
        for name in
            ["trefoil", "mirror", "fig8", "knot_5_1", "knot_6_2", "knot_6_3", "kink_neg_ccw", "kink_pos_cw", "trivial"]
        {
            if n == 2 && name.starts_with("knot_6") {
                continue;
            }
            let d = corpus(name);
            for graded in [false, true] {
                let rho = trivial(dbl.hopf(), &d, graded);
                let r = compare_main_theorem(&rib, &d, &rho).unwrap();
                assert!(r.exact, "ext{n} {name} graded={graded}: {} vs {}·{}", r.counit, r.factor, r.kuperberg);
                assert!(r.up_to_unit.is_some());
            }
        }
    }
}

#[test]
fn main_identity_sl2() {
    let dbl = double(2);
    let rib = RibbonData::new(&dbl).unwrap();
    let d = corpus("trefoil");
    for graded in [false, true] {
        let r = compare_main_theorem(&rib, &d, &sl2_trefoil(dbl.hopf(), graded)).unwrap();
        assert!(r.exact, "graded={graded}: {} vs {}·{}", r.counit, r.factor, r.kuperberg);
    }
}

#[test]
fn trefoil_values() {
    let h = exterior_algebra(1).unwrap();
    let d = corpus("trefoil");
    assert!(kuperberg_contract(&h, &d, &trivial(&h, &d, false)).unwrap().is_one());
    let z = kuperberg_contract(&h, &d, &trivial(&h, &d, true)).unwrap();
    assert!(z.equal_up_to_unit(&t_poly(&[1, -1, 1]), 1).is_some(), "{z}");
    let u = trivial(&h, &corpus("trivial"), true);
    assert!(kuperberg_contract(&h, &corpus("trivial"), &u).unwrap().is_one());
}

#[test]
fn trefoil_heegaard_words() {
    let hd = heegaard_from_diagram(&corpus("trefoil"), AlphaOrientation::Standard).unwrap();
    assert_eq!((hd.alphas.len(), hd.betas.len()), (2, 2));
    for a in &hd.alphas {
        assert_eq!(a.crossing_sign, 1);
        let o = a.points[1].edge;
        let b = a.points[2].edge;
        let words: Vec<&[Letter]> = a.points.iter().map(|p| p.word.as_slice()).collect();
        // w = (1, b_π b′ b_π⁻¹, b_π, 1)
        assert_eq!(words[0], &[]);
        assert_eq!(words[1], &[Letter::new(o, false), Letter::new(b, false), Letter::new(o, true)]);
        assert_eq!(words[2], &[Letter::new(o, false)]);
        assert_eq!(words[3], &[]);
        assert_eq!(a.points.clone().map(|p| p.sign), [-1, -1, 1, 1]);
    }
    let matched = hd.matched_slots();
    let mut on_betas: Vec<Slot> = hd.betas.iter().flat_map(|b| b.slots.clone()).collect();
    on_betas.sort();
    let mut m = matched.clone();
    m.sort();
    assert_eq!(m, on_betas);
    for a in &hd.alphas {
        let closed = a.points.iter().filter(|p| p.target != BetaTarget::Arc).count();
        assert!((2..=4).contains(&closed));
    }
}

#[test]
fn mirror_heegaard_words() {
    let hd = heegaard_from_diagram(&corpus("mirror"), AlphaOrientation::Standard).unwrap();
    for a in &hd.alphas {
        assert_eq!(a.crossing_sign, -1);
        let o = a.points[1].edge;
        let b = a.points[2].edge;
        let oi = Letter::new(o, true);
        // w = (1, b_π⁻¹ b′, b_π⁻¹, b_π⁻¹)
        assert_eq!(a.points[0].word, vec![]);
        assert_eq!(a.points[1].word, vec![oi, Letter::new(b, false)]);
        assert_eq!(a.points[2].word, vec![oi]);
        assert_eq!(a.points[3].word, vec![oi]);
    }
}

#[test]
fn fig8_mixed_signs() {
    let d = corpus("fig8");
    let hd = heegaard_from_diagram(&d, AlphaOrientation::Standard).unwrap();
    let signs: Vec<i32> = hd.alphas.iter().map(|a| a.crossing_sign).collect();
    assert!(signs.contains(&1) && signs.contains(&-1));
    for a in &hd.alphas {
        assert_eq!(a.crossing_sign, d.crossings()[a.crossing].sign);
        let expected = if a.crossing_sign > 0 { [-1, -1, 1, 1] } else { [-1, 1, 1, -1] };
        assert_eq!(a.points.clone().map(|p| p.sign), expected);
    }
}

#[test]
fn orientations_agree_on_exterior_algebras() {
    // Λ(Kⁿ) is supercommutative, so the order of factors along a β-curve only
    // contributes the Koszul sign, which the global sign already accounts for.
    for n in [1, 2] {
        let h = exterior_algebra(n).unwrap();
        for name in ["trefoil", "fig8", "knot_5_1"] {
            let d = corpus(name);
            let rho = trivial(&h, &d, true);
            let a = kuperberg_contract_with(&h, &d, &rho, AlphaOrientation::Standard, None).unwrap();
            let b = kuperberg_contract_with(&h, &d, &rho, AlphaOrientation::Mirrored, None).unwrap();
            assert_eq!(a, b, "ext{n} {name}");
        }
    }
    let h = exterior_algebra(2).unwrap();
    let d = corpus("trefoil");
    let rho = sl2_trefoil(&h, true);
    assert_eq!(
        kuperberg_contract_with(&h, &d, &rho, AlphaOrientation::Standard, None).unwrap(),
        kuperberg_contract_with(&h, &d, &rho, AlphaOrientation::Mirrored, None).unwrap()
    );
}

const S3: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

fn s3_index(p: [usize; 3]) -> usize {
    S3.iter().position(|q| *q == p).unwrap()
}

fn s3_compose(a: [usize; 3], b: [usize; 3]) -> [usize; 3] {
    [a[b[0]], a[b[1]], a[b[2]]]
}

/// The group algebra ℚ[S_3]: involutory, not commutative.
fn group_algebra_s3() -> HopfAlgebraData {
    let one = FieldElement::one;
    let mut mult = vec![Vec::new(); 36];
    for i in 0..6 {
        for j in 0..6 {
            mult[i * 6 + j] = vec![(s3_index(s3_compose(S3[i], S3[j])), one())];
        }
    }
    let inverse = |a: [usize; 3]| {
        let mut r = [0; 3];
        for i in 0..3 {
            r[a[i]] = i;
        }
        r
    };
    HopfAlgebraData::new(StructureTensors {
        name: "QS3".into(),
        field: cyclotomic_field(1).unwrap(),
        labels: (0..6).map(|i| format!("g{i}")).collect(),
        degree: vec![0; 6],
        parity: vec![0; 6],
        mult,
        unit: vec![(0, one())],
        comult: (0..6).map(|i| vec![(i, i, one())]).collect(),
        counit: vec![one(); 6],
        antipode: (0..6).map(|i| vec![(s3_index(inverse(S3[i])), one())]).collect(),
    })
    .unwrap()
}

/// Conjugation by the transposition S3[k].
fn conjugation(k: usize) -> TwistedAutomorphism {
    let s = S3[k];
    let mut m = FieldMatrix::zeros(6, 6);
    for j in 0..6 {
        m[(s3_index(s3_compose(s3_compose(s, S3[j]), s)), j)] = FieldElement::one();
    }
    TwistedAutomorphism::new(HopfAutomorphism::from_matrix(m), 0)
}

#[test]
fn group_algebra_three_coloring() {
    // The trefoil's meridians go to conjugation by the three transpositions.
    let h = group_algebra_s3();
    let dbl = TwistedDouble::new(Arc::new(h.clone()));
    let rib = RibbonData::new(&dbl).unwrap();
    let d = corpus("trefoil");
    let rho = (0..27)
        .map(|code: usize| {
            TangleRepresentation::new(
                vec![conjugation(1 + code % 3), conjugation(1 + code / 3 % 3), conjugation(1 + code / 9)],
                false,
            )
        })
        .find(|r| {
            r.images().iter().any(|x| x != r.image(0)) && tangle_diagram::check_representation(&d, r, &h).unwrap()
        })
        .unwrap();
    let report = compare_main_theorem(&rib, &d, &rho).unwrap();
    assert!(report.exact, "{} vs {}", report.counit, report.kuperberg);
    assert_eq!(report.kuperberg, LaurentScalar::from_int(3));
    let mirrored = kuperberg_contract_with(&h, &d, &rho, AlphaOrientation::Mirrored, None).unwrap();
    assert_eq!(mirrored, report.kuperberg);
}

#[test]
fn last_crossing_must_be_under() {
    let h = exterior_algebra(1).unwrap();
    for name in ["trefoil2", "knot_5_2", "knot_6_1"] {
        let d = corpus(name);
        assert!(matches!(kuperberg_contract(&h, &d, &trivial(&h, &d, true)), Err(KuperbergError::LastCrossingOver)));
    }
}

#[test]
fn non_involutory_rejected() {
    let h = taft_algebra(3).unwrap();
    let d = corpus("trefoil");
    assert!(matches!(kuperberg_contract(&h, &d, &trivial(&h, &d, false)), Err(KuperbergError::NotInvolutory)));
}

#[test]
fn non_representation_rejected() {
    let h = exterior_algebra(2).unwrap();
    let d = corpus("trefoil");
    let mut ms = vec![FieldMatrix::identity(2); 3];
    ms[0] = FieldMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
    let rho = TangleRepresentation::from_linear(&h, ms, vec![0; 3], false).unwrap();
    assert!(matches!(kuperberg_contract(&h, &d, &rho), Err(KuperbergError::NotARepresentation)));
}

#[test]
fn bad_schedule() {
    let h = exterior_algebra(1).unwrap();
    let d = corpus("fig8");
    let rho = trivial(&h, &d, true);
    let r = kuperberg_contract_with(&h, &d, &rho, AlphaOrientation::Standard, Some(&[0, 0, 1]));
    assert!(matches!(r, Err(KuperbergError::Schedule)));
}

fn schedules_agree(h: &HopfAlgebraData, d: &TangleDiagram, rho: &TangleRepresentation, seed: u64) {
    let net = kuperberg_network(h, d, rho, AlphaOrientation::Standard).unwrap();
    let integrals = integral_pair(h).unwrap();
    let greedy = net.contract(h, &integrals, &net.greedy_schedule()).unwrap();
    let mut order: Vec<usize> = (0..net.alphas.len()).collect();
    let reference = net.contract(h, &integrals, &order).unwrap();
    order.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
    let shuffled = net.contract(h, &integrals, &order).unwrap();
    assert_eq!(greedy, reference);
    assert_eq!(shuffled, reference);
}

#[test]
fn sl2_schedules_agree() {
    let h = exterior_algebra(2).unwrap();
    for graded in [false, true] {
        schedules_agree(&h, &corpus("trefoil"), &sl2_trefoil(&h, graded), 7);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn contraction_order_independent(which in 0usize..5, n in 1usize..3, graded in any::<bool>(), seed in any::<u64>()) {
        let name = ["trefoil", "mirror", "fig8", "knot_5_1", "knot_6_3"][which];
        let h = exterior_algebra(n).unwrap();
        let d = corpus(name);
        schedules_agree(&h, &d, &trivial(&h, &d, graded), seed);
    }
}
