//! Preset algebras: exterior algebras Λ(Kⁿ) and Taft algebras H_n.

use scalar_ring::{cyclotomic_field, FieldElement, FieldMatrix};

use crate::algebra::{SparseVec, StructureTensors};
use crate::automorphism::HopfAutomorphism;
use crate::{HopfAlgebraData, HopfError};

/// Sign of e_a · e_b for disjoint bitmask subsets: (−1)^{#{(i ∈ a, j ∈ b) : j < i}}.
fn wedge_sign(a: usize, b: usize) -> i64 {
    let mut inversions = 0;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        inversions += (b & ((1usize << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn wedge_label(mask: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..usize::BITS).filter(|i| mask >> i & 1 == 1).map(|i| format!("e{}", i + 1)).collect()
}

/// The exterior algebra Λ(Kⁿ) as a Hopf superalgebra.
///
/// Basis elements are wedge monomials indexed by bitmask, generators are odd
/// and primitive, and S(e_S) = (−1)^{|S|} e_S.
pub fn exterior_algebra(n: usize) -> Result<HopfAlgebraData, HopfError> {
    if n == 0 || n > 6 {
        return Err(HopfError::Shape(format!("exterior algebra rank must be in 1..=6, got {n}")));
    }
    let d = 1usize << n;
    let one = FieldElement::one;
    let mut mult = vec![Vec::new(); d * d];
    for a in 0..d {
        for b in 0..d {
            if a & b == 0 {
                mult[a * d + b] = vec![(a | b, FieldElement::from_int(wedge_sign(a, b)))];
            }
        }
    }
    let comult = (0..d)
        .map(|s| {
            // Subsets t of s, enumerated by the standard submask walk.
            let mut terms = Vec::new();
            let mut t = s;
            loop {
                terms.push((t, s & !t, FieldElement::from_int(wedge_sign(t, s & !t))));
                if t == 0 {
                    break;
                }
                t = (t - 1) & s;
            }
            terms.sort_by_key(|(a, b, _)| (*a, *b));
            terms
        })
        .collect();
    let sign = |m: usize| if m.count_ones() % 2 == 0 { 1 } else { -1 };
    HopfAlgebraData::new(StructureTensors {
        name: format!("ext:{n}"),
        field: cyclotomic_field(1)?,
        labels: (0..d).map(wedge_label).collect(),
        degree: (0..d).map(|m| m.count_ones() as i64).collect(),
        parity: (0..d).map(|m| (m.count_ones() % 2) as u8).collect(),
        mult,
        unit: vec![(0, one())],
        comult,
        counit: (0..d).map(|m| if m == 0 { one() } else { FieldElement::zero() }).collect(),
        antipode: (0..d).map(|m| vec![(m, FieldElement::from_int(sign(m)))]).collect(),
    })
}

/// Rank n of an exterior algebra preset, if `h` is one.
pub fn exterior_rank(h: &HopfAlgebraData) -> Option<usize> {
    let n: usize = h.name().strip_prefix("ext:")?.parse().ok()?;
    (h.dim() == 1 << n).then_some(n)
}

/// The Taft algebra H_n over ℚ(ζ_n): KE = qEK, Kⁿ = 1, Eⁿ = 0,
/// Δ(K) = K⊗K, Δ(E) = E⊗K + 1⊗E.
///
/// Basis K^a E^b has index a·n + b, degree b, and even parity.
pub fn taft_algebra(n: usize) -> Result<HopfAlgebraData, HopfError> {
    if !(2..=6).contains(&n) {
        return Err(HopfError::Shape(format!("Taft order must be in 2..=6, got {n}")));
    }
    let field = cyclotomic_field(n as u32)?;
    let q = field.q();
    let d = n * n;
    let idx = |a: usize, b: usize| (a % n) * n + b;
    // E^b K^c = q^{-bc} K^c E^b.
    let mut mult = vec![Vec::new(); d * d];
    for (a, b, c, e) in
        (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |e| (a, b, c, e)))))
    {
        if b + e < n {
            let coeff = q.pow(-((b * c) as i64))?;
            mult[idx(a, b) * d + idx(c, e)] = vec![(idx(a + c, b + e), coeff)];
        }
    }
    let labels = (0..d)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            let pow = |g: &str, k: usize| match k {
                0 => String::new(),
                1 => g.to_string(),
                _ => format!("{g}^{k}"),
            };
            let s = pow("K", a) + &pow("E", b);
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect();
    let degree = (0..d).map(|i| (i % n) as i64).collect();
    let partial = HopfAlgebraData::new(StructureTensors {
        name: format!("taft:{n}"),
        field: field.clone(),
        labels,
        degree,
        parity: vec![0; d],
        mult,
        unit: vec![(0, FieldElement::one())],
        comult: vec![Vec::new(); d],
        counit: vec![FieldElement::zero(); d],
        antipode: (0..d).map(|i| vec![(i, FieldElement::one())]).collect(),
    })?;
    let alg = |x: &[FieldElement], y: &[FieldElement]| partial.mul(x, y);
    let basis = |i: usize| partial.basis_vec(i);
    // Products in the (all even) tensor square, as dense d² vectors.
    let tensor_mul = |x: &[FieldElement], y: &[FieldElement]| {
        let mut out = vec![FieldElement::zero(); d * d];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let (i1, i2, j1, j2) = (i / d, i % d, j / d, j % d);
                for (k1, c1) in partial.mult_basis(i1, j1) {
                    for (k2, c2) in partial.mult_basis(i2, j2) {
                        out[k1 * d + k2] += &(a * b) * &(c1 * c2);
                    }
                }
            }
        }
        out
    };
    let mut delta_k = vec![FieldElement::zero(); d * d];
    delta_k[idx(1, 0) * d + idx(1, 0)] = FieldElement::one();
    let mut delta_e = vec![FieldElement::zero(); d * d];
    delta_e[idx(0, 1) * d + idx(1, 0)] = FieldElement::one();
    delta_e[idx(0, 0) * d + idx(0, 1)] = FieldElement::one();
    let mut one2 = vec![FieldElement::zero(); d * d];
    one2[0] = FieldElement::one();
    // S(K) = K^{n-1}, S(E) = -E K^{-1}.
    let s_k = basis(idx(n - 1, 0));
    let s_e: Vec<FieldElement> = alg(&basis(idx(0, 1)), &s_k).iter().map(|c| -c).collect();
    let mut comult = Vec::with_capacity(d);
    let mut antipode: Vec<SparseVec> = Vec::with_capacity(d);
    for i in 0..d {
        let (a, b) = (i / n, i % n);
        let mut delta = one2.clone();
        let mut s = basis(0);
        for _ in 0..a {
            delta = tensor_mul(&delta, &delta_k);
            s = alg(&s_k, &s);
        }
        for _ in 0..b {
            delta = tensor_mul(&delta, &delta_e);
            s = alg(&s_e, &s);
        }
        comult.push(
            delta.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k / d, k % d, c)).collect(),
        );
        antipode.push(s.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
    }
    let mut t = partial.tensors();
    t.comult = comult;
    t.antipode = antipode;
    t.counit = (0..d).map(|i| if i % n == 0 { FieldElement::one() } else { FieldElement::zero() }).collect();
    HopfAlgebraData::new(t)
}

/// Looks up a preset by name: `ext:n` or `taft:n`.
pub fn preset(name: &str) -> Result<HopfAlgebraData, HopfError> {
    let unknown = || HopfError::UnknownPreset(name.to_string());
    let (kind, n) = name.split_once(':').ok_or_else(unknown)?;
    let n: usize = n.parse().map_err(|_| unknown())?;
    match kind {
        "ext" => exterior_algebra(n),
        "taft" => taft_algebra(n),
        _ => Err(unknown()),
    }
}

/// The automorphism of Λ(Kⁿ) induced by A ∈ GL(n): e_S ↦ Σ_T det(A[T, S]) e_T.
pub fn gl_to_aut(h: &HopfAlgebraData, a: &FieldMatrix) -> Result<HopfAutomorphism, HopfError> {
    let n = exterior_rank(h).ok_or_else(|| HopfError::NotExterior(h.name().to_string()))?;
    if a.rows() != n || a.cols() != n {
        return Err(HopfError::Shape(format!("expected a {n}x{n} matrix")));
    }
    if a.det()?.is_zero() {
        return Err(HopfError::SingularMatrix);
    }
    let d = h.dim();
    let members = |m: usize| (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>();
    let mut m = FieldMatrix::zeros(d, d);
    for s in 0..d {
        for t in (0..d).filter(|t| t.count_ones() == s.count_ones()) {
            m[(t, s)] = if s == 0 { FieldElement::one() } else { a.submatrix(&members(t), &members(s)).det()? };
        }
    }
    Ok(HopfAutomorphism::from_matrix(m))
}
