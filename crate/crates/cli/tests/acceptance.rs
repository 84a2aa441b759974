//! The acceptance suite: ten exact checks spanning every crate, each
//! reported as one PASS/FAIL line. Runs without the libtest harness so the
//! lines appear in `cargo test` output; the exit status is nonzero when any
//! check fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use fox_oracle::{wada_torsion, FoxImages, LaurentMatrix};
use hopf_core::{
    exterior_algebra, gl_to_aut, integral_pair, pair, preset, r_of_aut, HopfAlgebraData, TwistedAutomorphism,
};
use kuperberg_contraction::compare_main_theorem;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rt_invariant::{conjugated_invariant, counit_eval, normalized_polynomial, universal_invariant};
use scalar_ring::{FieldElement, FieldMatrix, LaurentScalar};
use tangle_diagram::{check_representation, parse_tangle, TangleDiagram, TangleRepresentation};
use twisted_double::{verify_double_axioms, BatteryConfig, RibbonData, TwistedDouble};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn corpus(name: &str) -> TangleDiagram {
    let path = data_dir().join(format!("tangles/{name}.tng"));
    parse_tangle(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn corpus_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(data_dir().join("tangles"))
        .unwrap()
        .filter_map(|e| e.ok()?.path().file_stem()?.to_str().map(str::to_string))
        .collect();
    names.sort();
    names
}

fn golden(file: &str) -> BTreeMap<String, String> {
    std::fs::read_to_string(data_dir().join("golden").join(file))
        .unwrap()
        .lines()
        .filter_map(|l| l.split_once(" = "))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

fn double(h: HopfAlgebraData) -> TwistedDouble {
    TwistedDouble::new(Arc::new(h))
}

fn mat(rows: &[&[i64]]) -> FieldMatrix {
    FieldMatrix::from_int_rows(rows)
}

fn trivial(h: &HopfAlgebraData, d: &TangleDiagram, graded: bool) -> TangleRepresentation {
    let n = hopf_core::exterior_rank(h).unwrap();
    TangleRepresentation::trivial_linear(h, n, d.generator_count(), graded).unwrap()
}

/// The SL(2,ℤ) representation of the trefoil stored in `data/reps`.
fn sl2_trefoil(h: &HopfAlgebraData, graded: bool) -> TangleRepresentation {
    let d = corpus("trefoil");
    let rho = TangleRepresentation::load(data_dir().join("reps/trefoil_sl2.json"), h, &d).unwrap();
    if graded {
        knotinv::graded(h, &rho).unwrap()
    } else {
        rho
    }
}

/// SL(2,ℤ) images on the arcs of another trefoil diagram, found by search.
fn sl2_on(h: &HopfAlgebraData, d: &TangleDiagram, graded: bool) -> TangleRepresentation {
    let pool = [mat(&[&[1, 1], &[0, 1]]), mat(&[&[1, 0], &[-1, 1]]), mat(&[&[0, 1], &[-1, 2]])];
    let n = d.generator_count();
    (0..3usize.pow(n as u32 - 1))
        .map(|code| {
            let ms = std::iter::once(pool[0].clone())
                .chain((1..n).map(|i| pool[code / 3usize.pow(i as u32 - 1) % 3].clone()))
                .collect();
            TangleRepresentation::from_linear(h, ms, vec![0; n], graded).unwrap()
        })
        .find(|r| check_representation(d, r, h).unwrap() && r.images().iter().any(|x| x != r.image(0)))
        .expect("an SL(2,Z) representation exists")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn criterion_1() -> Outcome {
    for name in ["ext:1", "ext:2", "ext:3", "taft:3"] {
        let h = preset(name).map_err(|e| e.to_string())?;
        let rep = h.verify_hopf_axioms();
        ensure(rep.all_pass(), || format!("{name}: {:?}", rep.failures()))?;
        let expect_involutory = name.starts_with("ext");
        ensure(h.is_involutory() == expect_involutory, || format!("{name}: S^2 detection"))?;
    }
    Ok("ext 1-3 and taft 3 satisfy the axioms; S^2 != id only for taft".into())
}

fn criterion_2() -> Outcome {
    for name in ["ext:1", "ext:2", "ext:3", "taft:3"] {
        let h = preset(name).unwrap();
        let ip = integral_pair(&h).map_err(|e| e.to_string())?;
        let d = h.dim();
        ensure(pair(&ip.right_integral, &ip.left_cointegral).is_one(), || format!("{name}: lambda(Lambda) != 1"))?;
        for k in 0..d {
            let x = h.basis_vec(k);
            // xΛ = ε(x)Λ
            let eps = h.counit(&x);
            let want: Vec<_> = ip.left_cointegral.iter().map(|c| c * &eps).collect();
            ensure(h.mul(&x, &ip.left_cointegral) == want, || format!("{name}: cointegral fails on basis {k}"))?;
            // (λ ⊗ id)Δ(x) = λ(x)·1
            let cx = h.comul(&x);
            let mut lhs = h.zero_vec();
            for i in 0..d {
                for j in 0..d {
                    lhs[j] += &ip.right_integral[i] * &cx[i * d + j];
                }
            }
            let lx = pair(&ip.right_integral, &x);
            let rhs: Vec<_> = h.unit().iter().map(|c| c * &lx).collect();
            ensure(lhs == rhs, || format!("{name}: integral fails on basis {k}"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(2);
    let mut tested = 0;
    while tested < 10 {
        let n = 1 + tested % 3;
        let entries: Vec<FieldElement> =
            (0..n * n).map(|_| FieldElement::from_frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect();
        let a = FieldMatrix::from_rows(entries.chunks(n).map(<[_]>::to_vec).collect()).unwrap();
        let det = a.det().unwrap();
        if det.is_zero() {
            continue;
        }
        let h = exterior_algebra(n).unwrap();
        let ip = integral_pair(&h).unwrap();
        let alpha = TwistedAutomorphism::new(gl_to_aut(&h, &a).map_err(|e| e.to_string())?, 0);
        let r = r_of_aut(&h, &ip, &alpha).map_err(|e| e.to_string())?;
        ensure(r == LaurentScalar::constant(det.clone()), || format!("r_H = {r} but det = {det}"))?;
        tested += 1;
    }
    Ok("integral equations on every basis element; r_H = det for 10 random rational matrices".into())
}

fn criterion_3() -> Outcome {
    let mut checks = 0;
    for n in [1, 2] {
        let h = exterior_algebra(n).unwrap();
        let gradings = knotinv::default_gradings(&h).map_err(|e| e.to_string())?;
        ensure(gradings.iter().any(|g| g.base() != TwistedAutomorphism::identity(h.dim()).base()), || {
            "grading set lacks a non-identity automorphism".into()
        })?;
        let dbl = double(h);
        let rep = verify_double_axioms(&dbl, &gradings, &BatteryConfig { max_tuples: 4096, seed: 3 })
            .map_err(|e| e.to_string())?;
        ensure(rep.axioms.all_pass(), || format!("ext{n}: {:?}", rep.axioms.failures()))?;
        checks += rep.axioms.entries().len();
    }
    Ok(format!("{checks} battery checks over gradings including a non-identity automorphism"))
}

fn criterion_4() -> Outcome {
    let mut samples = 0;
    let ext1 = double(exterior_algebra(1).unwrap());
    let ext2 = double(exterior_algebra(2).unwrap());
    let mut gammas = Vec::new();
    for (k, shift) in [(1, 0), (4, 0), (9, 1), (1, 2), (4, -1)] {
        gammas.push((&ext1, TwistedAutomorphism::new(gl_to_aut(ext1.hopf(), &mat(&[&[k]])).unwrap(), shift)));
    }
    for (a, shift) in [(mat(&[&[1, 1], &[0, 1]]), 1), (mat(&[&[2, 1], &[0, 2]]), 0), (mat(&[&[0, 1], &[-1, 0]]), 2)] {
        gammas.push((&ext2, TwistedAutomorphism::new(gl_to_aut(ext2.hopf(), &a).unwrap(), shift)));
    }
    for (dbl, g) in gammas {
        let rib = RibbonData::new(dbl).map_err(|e| e.to_string())?;
        let v = rib.ribbon(&g).map_err(|e| e.to_string())?;
        let factor = rib.sqrt_r(&g).map_err(|e| e.to_string())?.pow(-1).map_err(|e| e.to_string())?;
        for i in 0..dbl.dim() {
            let x = dbl.basis(&g, i);
            let lhs = dbl.counit(&dbl.mul(&v, &x).map_err(|e| e.to_string())?);
            let rhs = &factor * &dbl.counit(&x);
            ensure(lhs == rhs, || format!("gamma {g}, basis {i}: {lhs} vs {rhs}"))?;
        }
        samples += 1;
    }
    Ok(format!("eps(v_gamma x) = r_H(gamma)^(-1/2) eps(x) on all basis x for {samples} gradings"))
}

fn criterion_5() -> Outcome {
    for n in [1, 2] {
        let dbl = double(exterior_algebra(n).unwrap());
        let rib = RibbonData::new(&dbl).unwrap();
        for name in ["trefoil", "fig8"] {
            let d = corpus(name);
            let z = universal_invariant(&rib, &d, &trivial(dbl.hopf(), &d, false)).map_err(|e| e.to_string())?;
            let eps = counit_eval(&dbl, &z);
            ensure(eps.is_one(), || format!("ext{n} {name}: eps(Z) = {eps}"))?;
        }
    }
    Ok("eps(Z) = 1 for trefoil and fig8 over ext 1 and ext 2".into())
}

fn criterion_6() -> Outcome {
    let table = golden("alexander.txt");
    let h = exterior_algebra(1).unwrap();
    let dbl = double(h.clone());
    let rib = RibbonData::new(&dbl).unwrap();
    let mut shown = Vec::new();
    for name in ["trefoil", "fig8"] {
        let d = corpus(name);
        let rho = trivial(&h, &d, true);
        let p = normalized_polynomial(&rib, &d, &rho).map_err(|e| e.to_string())?;
        let w = wada_torsion(&d, &FoxImages::from_representation(&rho).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(p.equal_up_to_unit(&w.numerator, 2).is_some(), || format!("{name}: P = {p}, Fox = {}", w.numerator))?;
        let canon = p.canonical_unit_form().map_err(|e| e.to_string())?.to_string();
        let frozen = table.get(name).ok_or_else(|| format!("{name} missing from golden file"))?;
        ensure(&canon == frozen, || format!("{name}: {canon} vs golden {frozen}"))?;
        shown.push(format!("{name}: {canon}"));
    }
    Ok(shown.join("; "))
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for graded in [false, true] {
        for (n, name, sl2) in
            [(1, "trefoil", false), (1, "fig8", false), (2, "trefoil", false), (2, "fig8", false), (2, "trefoil", true)]
        {
            let h = exterior_algebra(n).unwrap();
            let dbl = double(h.clone());
            let rib = RibbonData::new(&dbl).unwrap();
            let d = corpus(name);
            let rho = if sl2 { sl2_trefoil(&h, graded) } else { trivial(&h, &d, graded) };
            let r = compare_main_theorem(&rib, &d, &rho).map_err(|e| e.to_string())?;
            ensure(r.exact, || {
                format!("ext{n} {name} sl2={sl2} graded={graded}: {} vs {}·{}", r.counit, r.factor, r.kuperberg)
            })?;
            cases += 1;
        }
    }
    Ok(format!("exact identity in all {cases} cases"))
}

fn criterion_8() -> Outcome {
    let h = exterior_algebra(2).unwrap();
    let dbl = double(h.clone());
    let rib = RibbonData::new(&dbl).unwrap();
    let d = corpus("trefoil");
    let rho = sl2_trefoil(&h, true);
    let eps = counit_eval(&dbl, &universal_invariant(&rib, &d, &rho).map_err(|e| e.to_string())?);
    let images = FoxImages::from_representation(&rho).map_err(|e| e.to_string())?;
    let w = wada_torsion(&d, &images).map_err(|e| e.to_string())?;
    let meridian = images.image(0).sub(&LaurentMatrix::identity(images.dim()));
    let det_m = meridian.det().map_err(|e| e.to_string())?;
    let lhs = &eps * &w.denominator;
    let step = 2;
    let corollary = lhs.equal_up_to_unit(&(&det_m * &w.numerator), step);
    let literal = lhs.equal_up_to_unit(&w.numerator, step);
    let witness =
        corollary.ok_or_else(|| format!("eps·den = {lhs}, det(t rho(m) - I)·num = {}", &det_m * &w.numerator))?;
    Ok(format!(
        "eps·den = ±t^(k/2)·det(t rho(m) - I)·num with sign {}, k = {}; det(t rho(m) - I) = {}; literal eps·den = ±num: {}",
        witness.sign,
        witness.k,
        det_m.canonical_unit_form().map_err(|e| e.to_string())?,
        if literal.is_some() { "holds" } else { "does not hold" }
    ))
}

fn criterion_9() -> Outcome {
    let mut checks = 0;
    let h = exterior_algebra(2).unwrap();
    let dbl = double(h.clone());
    let rib = RibbonData::new(&dbl).unwrap();
    let d = corpus("trefoil");
    for graded in [false, true] {
        let rho = sl2_trefoil(&h, graded);
        let shear = TwistedAutomorphism::new(gl_to_aut(&h, &mat(&[&[1, 0], &[3, 1]])).unwrap(), 1);
        for beta in [rho.image(1).clone(), rho.image(0).inverse().unwrap(), shear] {
            let (direct, mapped) = conjugated_invariant(&rib, &d, &rho, &beta).map_err(|e| e.to_string())?;
            ensure(direct == mapped, || format!("covariance fails for beta = {beta}"))?;
            checks += 1;
        }
    }
    let other = corpus("trefoil2");
    for n in [1, 2] {
        let h = exterior_algebra(n).unwrap();
        let dbl = double(h.clone());
        let rib = RibbonData::new(&dbl).unwrap();
        for graded in [false, true] {
            let mut pairs = vec![(trivial(&h, &d, graded), trivial(&h, &other, graded))];
            if n == 2 {
                pairs.push((sl2_trefoil(&h, graded), sl2_on(&h, &other, graded)));
            }
            for (ra, rb) in pairs {
                let a = counit_eval(&dbl, &universal_invariant(&rib, &d, &ra).map_err(|e| e.to_string())?);
                let b = counit_eval(&dbl, &universal_invariant(&rib, &other, &rb).map_err(|e| e.to_string())?);
                ensure(a == b, || format!("open points disagree over ext{n}: {a} vs {b}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} covariance and open-point comparisons agree"))
}

fn criterion_10() -> Outcome {
    let h = exterior_algebra(1).unwrap();
    let dbl = double(h.clone());
    let rib = RibbonData::new(&dbl).unwrap();
    let names = corpus_names();
    for name in &names {
        let d = corpus(name);
        ensure((d.writhe() - d.rotation()) % 2 == 0, || format!("{name}: writhe - rotation is odd"))?;
        let p = normalized_polynomial(&rib, &d, &trivial(&h, &d, true)).map_err(|e| format!("{name}: {e}"))?;
        ensure(p.has_integral_t_powers(), || format!("{name}: P = {p}"))?;
    }
    let h2 = exterior_algebra(2).unwrap();
    let dbl2 = double(h2.clone());
    let rib2 = RibbonData::new(&dbl2).unwrap();
    let p = normalized_polynomial(&rib2, &corpus("trefoil"), &sl2_trefoil(&h2, true)).map_err(|e| e.to_string())?;
    ensure(p.has_integral_t_powers(), || format!("SL2 trefoil: P = {p}"))?;
    Ok(format!("{} corpus diagrams plus the SL2 trefoil", names.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Hopf axioms and S^2 detection", criterion_1),
        ("integrals and r_H = det", criterion_2),
        ("twisted-double battery", criterion_3),
        ("counit of the ribbon element", criterion_4),
        ("trivial representation gives 1", criterion_5),
        ("classical Alexander recovery", criterion_6),
        ("RT invariant equals Kuperberg exactly", criterion_7),
        ("twisted Alexander corollary", criterion_8),
        ("covariance and open-point independence", criterion_9),
        ("writhe/rotation parity", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title} ({secs:.1} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title} ({secs:.1} s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
