use hopf_core::*;
use proptest::prelude::*;
use scalar_ring::{FieldElement, FieldMatrix, LaurentScalar};

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn strs(v: &[FieldElement]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn matrix_of(h: &HopfAlgebraData, f: impl Fn(&[FieldElement]) -> Vec<FieldElement>) -> FieldMatrix {
    let d = h.dim();
    let mut m = FieldMatrix::zeros(d, d);
    for j in 0..d {
        let v = f(&h.basis_vec(j));
        for i in 0..d {
            m[(i, j)] = v[i].clone();
        }
    }
    m
}

#[test]
fn presets_satisfy_all_axioms() {
    for name in ["ext:1", "ext:2", "ext:3", "taft:2", "taft:3", "taft:4"] {
        let rep = preset(name).unwrap().verify_hopf_axioms();
        assert!(rep.all_pass(), "{name}: {rep}");
    }
}

#[test]
fn corrupted_multiplication_breaks_associativity() {
    let h = exterior_algebra(2).unwrap();
    let mut t = h.tensors();
    // e1 · 1 now lands on 2·e1.
    t.mult[4] = vec![(1, fe(2))];
    let bad = HopfAlgebraData::new(t).unwrap();
    let rep = bad.verify_hopf_axioms();
    assert_eq!(rep.get("associativity"), Some(false), "{rep}");
}

#[test]
fn exterior_structure() {
    let h = exterior_algebra(1).unwrap();
    assert_eq!(h.mul(&h.basis_vec(1), &h.basis_vec(1)), h.zero_vec());
    assert!(h.is_involutory());
    let h2 = exterior_algebra(2).unwrap();
    assert_eq!(h2.antipode(&h2.basis_vec(3)), h2.basis_vec(3));
    assert_eq!(h2.labels()[3], "e1e2");
}

#[test]
fn taft_antipode_is_not_involutory() {
    let h = taft_algebra(3).unwrap();
    let q = h.field().q();
    let (e, k2) = (h.basis_vec(1), h.basis_vec(6));
    // S(E) = -E K^{-1} = -E K^2.
    let want: Vec<FieldElement> = h.mul(&e, &k2).iter().map(|c| -c).collect();
    assert_eq!(h.antipode(&e), want);
    assert!(!h.is_involutory());
    // With KE = qEK the square of the antipode scales E by q.
    let s2e = h.antipode(&h.antipode(&e));
    assert_eq!(s2e, e.iter().map(|c| c * &q).collect::<Vec<_>>());
}

#[test]
fn exterior_integrals_are_top_wedges_and_two_sided() {
    for n in 1..=3 {
        let h = exterior_algebra(n).unwrap();
        let top = h.basis_vec(h.dim() - 1);
        let ip = integral_pair(&h).unwrap();
        assert_eq!(ip.left_cointegral, top);
        assert_eq!(ip.right_integral, top);
        assert!(pair(&ip.right_integral, &ip.left_cointegral).is_one());
        assert_eq!(right_cointegral(&h).unwrap(), left_cointegral(&h).unwrap());
        assert_eq!(left_integral(&h).unwrap(), right_integral(&h).unwrap());
        assert_eq!(ip.g, h.unit());
        assert!(ip.zeta.iter().enumerate().all(|(i, c)| c == h.counit_basis(i)));
    }
}

#[test]
fn taft_integrals_and_distinguished_grouplikes() {
    let h = taft_algebra(3).unwrap();
    let ip = integral_pair(&h).unwrap();
    // λ_r lives on the K^a E^2 stratum.
    assert!(ip.right_integral.iter().enumerate().all(|(i, c)| c.is_zero() || i % 3 == 2));
    assert!(is_grouplike(&h, &ip.g));
    assert_eq!(ip.g, h.basis_vec(3), "g = K");
    assert!(is_character(&h, &ip.zeta));
    assert!(ip.zeta.iter().enumerate().any(|(i, c)| c != h.counit_basis(i)), "zeta is nontrivial");
}

#[test]
fn distinguished_grouplikes_satisfy_defining_equations() {
    for name in ["ext:2", "taft:3", "taft:4"] {
        let h = preset(name).unwrap();
        let ip = integral_pair(&h).unwrap();
        let (g, zeta) = distinguished_grouplikes(&h, &ip.right_integral, &ip.left_cointegral).unwrap();
        assert!(is_grouplike(&h, &g) && is_character(&h, &zeta), "{name}");
        for k in 0..h.dim() {
            let e = h.basis_vec(k);
            let prod = h.mul(&ip.left_cointegral, &e);
            assert_eq!(prod, ip.left_cointegral.iter().map(|c| c * &zeta[k]).collect::<Vec<_>>());
        }
    }
}

#[test]
fn one_dimensional_algebra_has_trivial_grouplikes() {
    let t = StructureTensors {
        name: "K".into(),
        field: scalar_ring::cyclotomic_field(1).unwrap(),
        labels: vec!["1".into()],
        degree: vec![0],
        parity: vec![0],
        mult: vec![vec![(0, fe(1))]],
        unit: vec![(0, fe(1))],
        comult: vec![vec![(0, 0, fe(1))]],
        counit: vec![fe(1)],
        antipode: vec![vec![(0, fe(1))]],
    };
    let h = HopfAlgebraData::new(t).unwrap();
    let ip = integral_pair(&h).unwrap();
    assert_eq!(ip.g, vec![fe(1)]);
    assert_eq!(ip.zeta, vec![fe(1)]);
}

#[test]
fn radford_trace_is_a_signed_supertrace_on_exterior_algebras() {
    // The sign is (-1)^{|Λ|}: the odd cointegral of Λ(K) flips it.
    for n in 1..=3 {
        let sign = fe(if n % 2 == 0 { 1 } else { -1 });
        let h = exterior_algebra(n).unwrap();
        let ip = integral_pair(&h).unwrap();
        let id = FieldMatrix::identity(h.dim());
        assert_eq!(radford_trace(&h, &ip, &id).unwrap(), fe(0));
        assert_eq!(trace(&id), fe(1 << n));
        let a = FieldMatrix::from_int_rows(&[&[2, 1, 0][..n], &[0, 3, 1][..n], &[1, 0, 5][..n]][..n]);
        let f = gl_to_aut(&h, &a).unwrap();
        assert_eq!(radford_trace(&h, &ip, f.matrix()).unwrap(), &sign * &supertrace(&h, f.matrix()));
        assert_eq!(radford_trace(&h, &ip, &FieldMatrix::zeros(h.dim(), h.dim())).unwrap(), fe(0));
    }
}

#[test]
fn radford_trace_matches_trace_of_s_squared_on_taft() {
    for n in [3, 4] {
        let h = taft_algebra(n).unwrap();
        let ip = integral_pair(&h).unwrap();
        let s2 = matrix_of(&h, |x| h.antipode(&h.antipode(x)));
        assert_eq!(radford_trace(&h, &ip, &s2).unwrap(), trace(&s2));
        let id = FieldMatrix::identity(h.dim());
        assert_eq!(radford_trace(&h, &ip, &id).unwrap(), trace(&id));
    }
}

#[test]
fn automorphism_checks() {
    let h = exterior_algebra(2).unwrap();
    assert!(is_hopf_automorphism(&h, &HopfAutomorphism::identity(4)));
    let a = gl_to_aut(&h, &FieldMatrix::from_int_rows(&[&[1, 1], &[0, 1]])).unwrap();
    assert!(is_hopf_automorphism(&h, &a));
    assert_eq!(a.apply(&h.basis_vec(1)), h.basis_vec(1));
    assert_eq!(a.apply(&h.basis_vec(2)), vec![fe(0), fe(1), fe(1), fe(0)]);
    assert_eq!(a.apply(&h.basis_vec(3)), h.basis_vec(3));
    let diag = gl_to_aut(&h, &FieldMatrix::from_int_rows(&[&[2, 0], &[0, 3]])).unwrap();
    assert_eq!(diag.apply(&h.basis_vec(3)), vec![fe(0), fe(0), fe(0), fe(6)]);
    assert!(gl_to_aut(&h, &FieldMatrix::identity(2)).unwrap().is_identity());
    assert!(matches!(gl_to_aut(&h, &FieldMatrix::from_int_rows(&[&[1, 2], &[2, 4]])), Err(HopfError::SingularMatrix)));
    let h1 = exterior_algebra(1).unwrap();
    let swap = HopfAutomorphism::from_matrix(FieldMatrix::from_int_rows(&[&[0, 1], &[1, 0]]));
    assert!(!is_hopf_automorphism(&h1, &swap));
}

#[test]
fn r_of_graded_identity() {
    let h = exterior_algebra(2).unwrap();
    let ip = integral_pair(&h).unwrap();
    let id = TwistedAutomorphism::identity(4);
    assert!(r_of_aut(&h, &ip, &id).unwrap().is_one());
    let shifted = TwistedAutomorphism::new(HopfAutomorphism::identity(4), 1);
    assert_eq!(r_of_aut(&h, &ip, &shifted).unwrap(), LaurentScalar::t_pow(2));
}

#[test]
fn balancing_pairs() {
    let h = exterior_algebra(2).unwrap();
    let ip = integral_pair(&h).unwrap();
    assert!(verify_balancing(&h, &ip, &BalancingPair::trivial(&h)).is_some());
    let h1 = exterior_algebra(1).unwrap();
    let ip1 = integral_pair(&h1).unwrap();
    let bad = BalancingPair { b: vec![fe(-1), fe(0)], beta: BalancingPair::trivial(&h1).beta };
    assert_eq!(verify_balancing(&h1, &ip1, &bad), None);

    let t3 = taft_algebra(3).unwrap();
    let ip3 = integral_pair(&t3).unwrap();
    let pairs = find_balancing_pairs(&t3, &ip3);
    assert_eq!(pairs.len(), 1);
    let (bp, orientation) = &pairs[0];
    assert_eq!(bp.b, t3.basis_vec(6), "b = K^2");
    assert_eq!(bp.beta, convolve(&t3, &ip3.zeta, &ip3.zeta), "beta = zeta^2");
    assert_eq!(*orientation, BalancingOrientation::InverseFirst);
    assert_eq!(find_grouplikes(&t3).len(), 3);

    let t2 = taft_algebra(2).unwrap();
    assert!(find_balancing_pairs(&t2, &integral_pair(&t2).unwrap()).is_empty());
}

#[test]
fn json_round_trip() {
    for name in ["ext:2", "taft:3"] {
        let h = preset(name).unwrap();
        let back = from_json(&to_json(&h)).unwrap();
        assert_eq!(HopfDocument::from_algebra(&back), HopfDocument::from_algebra(&h));
        assert!(back.verify_hopf_axioms().all_pass());
    }
    assert!(matches!(load_algebra("nope:3"), Err(HopfError::Io(_))));
    assert!(matches!(preset("ext:x"), Err(HopfError::UnknownPreset(_))));
}

fn invertible(n: usize) -> impl Strategy<Value = FieldMatrix> {
    prop::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(n).collect();
            FieldMatrix::from_int_rows(&rows)
        })
        .prop_filter("invertible", |m| !m.det().unwrap().is_zero())
}

fn rank_and_matrix() -> impl Strategy<Value = (usize, FieldMatrix)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), invertible(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn r_of_gl_is_determinant((n, a) in rank_and_matrix()) {
        let h = exterior_algebra(n).unwrap();
        let ip = integral_pair(&h).unwrap();
        let alpha = gl_to_aut(&h, &a).unwrap();
        prop_assert!(is_hopf_automorphism(&h, &alpha));
        let r = r_of_aut(&h, &ip, &TwistedAutomorphism::new(alpha, 0)).unwrap();
        prop_assert_eq!(r, LaurentScalar::constant(a.det().unwrap()));
    }

    #[test]
    fn r_is_multiplicative(a in invertible(2), b in invertible(2), n in -2i64..=2, m in -2i64..=2) {
        let h = exterior_algebra(2).unwrap();
        let ip = integral_pair(&h).unwrap();
        let x = TwistedAutomorphism::new(gl_to_aut(&h, &a).unwrap(), n);
        let y = TwistedAutomorphism::new(gl_to_aut(&h, &b).unwrap(), m);
        let rx = r_of_aut(&h, &ip, &x).unwrap();
        let ry = r_of_aut(&h, &ip, &y).unwrap();
        prop_assert_eq!(r_of_aut(&h, &ip, &x.compose(&y)).unwrap(), &rx * &ry);
        prop_assert_eq!(rx.as_monomial().map(|(k, _)| k), Some(4 * n));
    }

    #[test]
    fn integral_scales_by_r(a in invertible(2)) {
        let h = exterior_algebra(2).unwrap();
        let ip = integral_pair(&h).unwrap();
        let alpha = gl_to_aut(&h, &a).unwrap();
        let r = r_of_aut(&h, &ip, &TwistedAutomorphism::new(alpha.clone(), 0)).unwrap().as_constant().unwrap();
        let composed = alpha.matrix().transpose().apply(&ip.right_integral);
        prop_assert_eq!(strs(&composed), strs(&ip.right_integral.iter().map(|c| c * &r).collect::<Vec<_>>()));
    }
}
