//! Structure maps of the twisted double: product, coproduct, antipode,
//! crossing, counit and R-matrix.
//!
//! The dual H* carries the convolution product ⟨fg, x⟩ = ⟨f, x_(1)⟩⟨g, x_(2)⟩
//! with the Koszul sign of passing g over x_(1). Super signs in the double's
//! formulas come from [`permutation_sign`] applied to the strand order of
//! each formula's wiring diagram, never from hand-simplified exponents.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use hopf_core::koszul::{permutation_sign, swap_sign};
use hopf_core::{HopfAlgebraData, TwistedAutomorphism};
use scalar_ring::{FieldElement, LaurentScalar};

use crate::element::{DoubleElement, DoubleTensor};
use crate::DoubleError;

type SparseLaurent = Vec<(usize, LaurentScalar)>;

/// The family D(H)_α indexed by twisted automorphisms α.
///
/// Product tables and automorphism matrices are cached per grading; the cache
/// is behind a mutex so a double can be shared across threads.
#[derive(Debug)]
pub struct TwistedDouble {
    h: Arc<HopfAlgebraData>,
    cop3: Vec<Vec<(usize, usize, usize, FieldElement)>>,
    dual_mult: Vec<Vec<(usize, FieldElement)>>,
    dual_comult: Vec<Vec<(usize, usize, FieldElement)>>,
    parity: Vec<u8>,
    auts: Mutex<HashMap<TwistedAutomorphism, Arc<Vec<SparseLaurent>>>>,
    products: Mutex<HashMap<TwistedAutomorphism, Arc<Vec<SparseLaurent>>>>,
}

fn sign_fe(s: i8) -> FieldElement {
    FieldElement::from_int(s as i64)
}

impl TwistedDouble {
    pub fn new(h: Arc<HopfAlgebraData>) -> Self {
        let d = h.dim();
        let cop3 = (0..d)
            .map(|j| {
                let mut out = Vec::new();
                for (x, y, c) in h.comult_basis(j) {
                    for (y1, y2, c2) in h.comult_basis(*y) {
                        out.push((*x, *y1, *y2, c * c2));
                    }
                }
                out
            })
            .collect();
        let mut dual_mult = vec![Vec::new(); d * d];
        for c in 0..d {
            for (a, b, co) in h.comult_basis(c) {
                dual_mult[a * d + b].push((c, co * &sign_fe(swap_sign(h.parity(*a), h.parity(*b)))));
            }
        }
        let mut dual_comult = vec![Vec::new(); d];
        for a in 0..d {
            for b in 0..d {
                for (c, m) in h.mult_basis(a, b) {
                    dual_comult[*c].push((a, b, m * &sign_fe(swap_sign(h.parity(a), h.parity(b)))));
                }
            }
        }
        let parity = (0..d * d).map(|i| h.parity(i / d) ^ h.parity(i % d)).collect();
        Self {
            h,
            cop3,
            dual_mult,
            dual_comult,
            parity,
            auts: Mutex::new(HashMap::new()),
            products: Mutex::new(HashMap::new()),
        }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebraData> {
        &self.h
    }

    /// Dimension d of H.
    pub fn base_dim(&self) -> usize {
        self.h.dim()
    }

    /// Dimension d² of each D(H)_α.
    pub fn dim(&self) -> usize {
        self.h.dim() * self.h.dim()
    }

    /// Super parity of the basis element h^p ⊗ h_a with index p·d + a.
    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn identity_grading(&self) -> TwistedAutomorphism {
        TwistedAutomorphism::identity(self.base_dim())
    }

    /// Columns of α on H: entry j lists the coordinates of α(h_j).
    pub fn aut_columns(&self, alpha: &TwistedAutomorphism) -> Arc<Vec<SparseLaurent>> {
        if let Some(m) = self.auts.lock().unwrap().get(alpha) {
            return m.clone();
        }
        let m = Arc::new(alpha.laurent_columns(&self.h));
        self.auts.lock().unwrap().insert(alpha.clone(), m.clone());
        m
    }

    fn inverse_grading(&self, alpha: &TwistedAutomorphism) -> Result<TwistedAutomorphism, DoubleError> {
        Ok(alpha.inverse()?)
    }

    fn check(&self, x: &DoubleElement, want: &TwistedAutomorphism) -> Result<(), DoubleError> {
        if &x.grading != want {
            return Err(DoubleError::GradingMismatch { expected: want.to_string(), found: x.grading.to_string() });
        }
        Ok(())
    }

    /// ε ⊗ v as a D-element with the given H-coordinates v.
    fn eps_tensor(&self, grading: &TwistedAutomorphism, v: &[(usize, LaurentScalar)]) -> DoubleElement {
        let d = self.base_dim();
        let mut out = DoubleElement::zero(grading.clone(), self.dim());
        for p in (0..d).filter(|&p| !self.h.counit_basis(p).is_zero()) {
            for (a, c) in v {
                out.coeffs[p * d + a] += c.scale(self.h.counit_basis(p));
            }
        }
        out
    }

    /// f ⊗ 1 as a D-element with the given dual coordinates f.
    fn dual_tensor_one(&self, grading: &TwistedAutomorphism, f: &[(usize, LaurentScalar)]) -> DoubleElement {
        let d = self.base_dim();
        let mut out = DoubleElement::zero(grading.clone(), self.dim());
        for (a, u) in self.h.unit_sparse() {
            for (p, c) in f {
                out.coeffs[p * d + a] += c.scale(u);
            }
        }
        out
    }

    /// The unit ε ⊗ 1 of D(H)_α.
    pub fn one(&self, grading: &TwistedAutomorphism) -> DoubleElement {
        let unit: SparseLaurent =
            self.h.unit_sparse().iter().map(|(i, c)| (*i, LaurentScalar::constant(c.clone()))).collect();
        self.eps_tensor(grading, &unit)
    }

    /// The element f ⊗ x of D(H)_α for a covector f and a vector x over the base field.
    pub fn pure(&self, grading: &TwistedAutomorphism, f: &[FieldElement], x: &[FieldElement]) -> DoubleElement {
        let d = self.base_dim();
        let mut out = DoubleElement::zero(grading.clone(), self.dim());
        for (p, fp) in f.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out.coeffs[p * d + a] = LaurentScalar::constant(fp * xa);
            }
        }
        out
    }

    pub fn basis(&self, grading: &TwistedAutomorphism, i: usize) -> DoubleElement {
        DoubleElement::basis(grading.clone(), self.dim(), i)
    }

    /// Laurent vector α(v) for sparse v.
    fn apply_aut(&self, cols: &[SparseLaurent], v: &[(usize, LaurentScalar)]) -> Vec<LaurentScalar> {
        let mut out = vec![LaurentScalar::zero(); self.base_dim()];
        for (j, c) in v {
            for (i, m) in &cols[*j] {
                out[*i] += c * m;
            }
        }
        out
    }

    /// Product table of D(H)_α; entry x·d² + y lists the product of basis elements x and y.
    ///
    /// (p⊗a)·(q⊗b) = p·q′ ⊗ a_(2)b with q′(x) = q(α⁻¹S⁻¹(a_(3))·x·a_(1)).
    pub fn product_table(&self, alpha: &TwistedAutomorphism) -> Result<Arc<Vec<SparseLaurent>>, DoubleError> {
        if let Some(t) = self.products.lock().unwrap().get(alpha) {
            return Ok(t.clone());
        }
        let table = Arc::new(self.build_product_table(alpha)?);
        self.products.lock().unwrap().insert(alpha.clone(), table.clone());
        Ok(table)
    }

    fn build_product_table(&self, alpha: &TwistedAutomorphism) -> Result<Vec<SparseLaurent>, DoubleError> {
        let h = &self.h;
        let d = h.dim();
        let big = d * d;
        let ainv = self.aut_columns(&self.inverse_grading(alpha)?);
        // X_j = α⁻¹S⁻¹(h_j).
        let xs: Vec<Vec<LaurentScalar>> = (0..d)
            .map(|j| {
                let s: SparseLaurent =
                    h.antipode_inv_basis(j).iter().map(|(i, c)| (*i, LaurentScalar::constant(c.clone()))).collect();
                self.apply_aut(&ainv, &s)
            })
            .collect();
        // hole[(j3, j1)][m][b]: coefficient of h_b in X_{j3}·h_m·h_{j1}, times the sign of h_m passing h_{j1}.
        let mut holes: HashMap<(usize, usize), Vec<Vec<LaurentScalar>>> = HashMap::new();
        let mut table = vec![Vec::new(); big * big];
        for x in 0..big {
            let (a, j) = (x / d, x % d);
            for y in 0..big {
                let (b, k) = (y / d, y % d);
                let mut acc = vec![LaurentScalar::zero(); big];
                for (j1, j2, j3, c) in &self.cop3[j] {
                    let hole = holes.entry((*j3, *j1)).or_insert_with(|| {
                        (0..d)
                            .map(|m| {
                                let mut out = vec![LaurentScalar::zero(); d];
                                for (i, xi) in xs[*j3].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                                    for (k1, c1) in h.mult_basis(i, m) {
                                        for (k2, c2) in h.mult_basis(*k1, *j1) {
                                            out[*k2] += xi.scale(&(c1 * c2));
                                        }
                                    }
                                }
                                let s = sign_fe(swap_sign(h.parity(m), h.parity(*j1)));
                                out.iter().map(|v| v.scale(&s)).collect()
                            })
                            .collect()
                    });
                    // Strands p, a1, a2, a3, q, b are rewired to p, q, a3, a1, a2, b.
                    let par = [h.parity(a), h.parity(*j1), h.parity(*j2), h.parity(*j3), h.parity(b), h.parity(k)];
                    let sg = sign_fe(permutation_sign(&par, &[0, 4, 3, 1, 2, 5]));
                    let c = c * &sg;
                    let right = h.mult_basis(*j2, k);
                    for (m, row) in hole.iter().enumerate() {
                        let qm = &row[b];
                        if qm.is_zero() {
                            continue;
                        }
                        for (cc, pv) in &self.dual_mult[a * d + m] {
                            let pc = pv * &c;
                            for (kk, rv) in right {
                                acc[cc * d + kk] += qm.scale(&(&pc * rv));
                            }
                        }
                    }
                }
                table[x * big + y] = acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        Ok(table)
    }

    /// Product x·y in D(H)_α; both factors must carry grading α.
    pub fn mul(&self, x: &DoubleElement, y: &DoubleElement) -> Result<DoubleElement, DoubleError> {
        self.check(y, &x.grading)?;
        let table = self.product_table(&x.grading)?;
        let big = self.dim();
        let mut out = DoubleElement::zero(x.grading.clone(), big);
        for (i, cx) in x.terms() {
            for (j, cy) in y.terms() {
                let cxy = cx * cy;
                for (k, c) in &table[i * big + j] {
                    out.coeffs[*k] += &cxy * c;
                }
            }
        }
        Ok(out)
    }

    /// Product of basis elements, straight from the table.
    pub fn mul_basis(&self, alpha: &TwistedAutomorphism, x: usize, y: usize) -> Result<SparseLaurent, DoubleError> {
        Ok(self.product_table(alpha)?[x * self.dim() + y].clone())
    }

    /// Δ_{α,β}(p⊗a) = (p_(2)⊗a_(1)) ⊗ (p_(1)⊗α⁻¹(a_(2))), for x graded by αβ.
    pub fn coproduct(
        &self,
        alpha: &TwistedAutomorphism,
        beta: &TwistedAutomorphism,
        x: &DoubleElement,
    ) -> Result<DoubleTensor, DoubleError> {
        self.check(x, &alpha.compose(beta))?;
        let h = &self.h;
        let d = h.dim();
        let ainv = self.aut_columns(&self.inverse_grading(alpha)?);
        let mut out = DoubleTensor::zero(vec![alpha.clone(), beta.clone()]);
        for (i, cx) in x.terms() {
            let (p, a) = (i / d, i % d);
            for (p1, p2, cp) in &self.dual_comult[p] {
                for (a1, a2, ca) in h.comult_basis(a) {
                    // Strands p1, p2, a1, a2 are rewired to p2, a1, p1, a2.
                    let par = [h.parity(*p1), h.parity(*p2), h.parity(*a1), h.parity(*a2)];
                    let sg = sign_fe(permutation_sign(&par, &[1, 2, 0, 3]));
                    let c = cx.scale(&(&(cp * ca) * &sg));
                    for (k, ck) in &ainv[*a2] {
                        out.add_term(vec![p2 * d + a1, p1 * d + k], &c * ck);
                    }
                }
            }
        }
        Ok(out)
    }

    /// S_α(p⊗a) = (−1)^{|p||a|} (ε⊗α⁻¹S(a)) ·_{α⁻¹} (p∘S⁻¹⊗1); the result is graded by α⁻¹.
    pub fn antipode(&self, x: &DoubleElement) -> Result<DoubleElement, DoubleError> {
        let h = &self.h;
        let d = h.dim();
        let gi = self.inverse_grading(&x.grading)?;
        let ainv = self.aut_columns(&gi);
        let mut out = DoubleElement::zero(gi.clone(), self.dim());
        for (i, cx) in x.terms() {
            let (p, a) = (i / d, i % d);
            let s: SparseLaurent =
                h.antipode_basis(a).iter().map(|(k, c)| (*k, LaurentScalar::constant(c.clone()))).collect();
            let left: SparseLaurent =
                self.apply_aut(&ainv, &s).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            let left = self.eps_tensor(&gi, &left);
            let f: SparseLaurent = (0..d)
                .filter_map(|m| {
                    h.antipode_inv_basis(m)
                        .iter()
                        .find(|(k, _)| *k == p)
                        .map(|(_, c)| (m, LaurentScalar::constant(c.clone())))
                })
                .collect();
            let right = self.dual_tensor_one(&gi, &f);
            let sg = LaurentScalar::from_int(swap_sign(h.parity(p), h.parity(a)) as i64);
            let z = self.mul(&left, &right)?;
            out = out.add(&z.scale(&(cx * &sg)));
        }
        Ok(out)
    }

    /// The antipode of the untwisted double D(H)_id applied to coordinates, keeping x's grading tag.
    pub fn untwisted_antipode(&self, x: &DoubleElement) -> Result<DoubleElement, DoubleError> {
        let id = self.identity_grading();
        let as_id = DoubleElement { grading: id, coeffs: x.coeffs.clone() };
        let y = self.antipode(&as_id)?;
        Ok(DoubleElement { grading: x.grading.clone(), coeffs: y.coeffs })
    }

    /// φ_β(p⊗a) = p∘β⁻¹ ⊗ β(a), mapping D_γ to D_{βγβ⁻¹}.
    pub fn phi(&self, beta: &TwistedAutomorphism, x: &DoubleElement) -> Result<DoubleElement, DoubleError> {
        let d = self.base_dim();
        let m = self.aut_columns(beta);
        let minv = self.aut_columns(&self.inverse_grading(beta)?);
        let mut out = DoubleElement::zero(x.grading.conjugate_by(beta)?, self.dim());
        for (i, cx) in x.terms() {
            let (p, a) = (i / d, i % d);
            for (mm, col) in minv.iter().enumerate() {
                for (_, cm) in col.iter().filter(|(r, _)| *r == p) {
                    let c = cx * cm;
                    for (k, ck) in &m[a] {
                        out.coeffs[mm * d + k] += &c * ck;
                    }
                }
            }
        }
        Ok(out)
    }

    /// ε_D(p⊗a) = p(1)·ε(a).
    pub fn counit(&self, x: &DoubleElement) -> LaurentScalar {
        let d = self.base_dim();
        let unit = self.h.unit();
        let mut total = LaurentScalar::zero();
        for (i, c) in x.terms() {
            let (p, a) = (i / d, i % d);
            let w = &unit[p] * self.h.counit_basis(a);
            if !w.is_zero() {
                total += c.scale(&w);
            }
        }
        total
    }

    /// R_{α,β} = Σ_i (ε⊗α(h_i)) ⊗ (h^i⊗1).
    pub fn r_matrix(&self, alpha: &TwistedAutomorphism, beta: &TwistedAutomorphism) -> DoubleTensor {
        let d = self.base_dim();
        let cols = self.aut_columns(alpha);
        let mut out = DoubleTensor::zero(vec![alpha.clone(), beta.clone()]);
        for (i, col) in cols.iter().enumerate() {
            let left = self.eps_tensor(alpha, col);
            let right = self.dual_tensor_one(beta, &[(i, LaurentScalar::one())]);
            for (x, cx) in left.terms() {
                for (y, cy) in right.terms() {
                    out.add_term(vec![x, y], cx * cy);
                }
            }
        }
        debug_assert!(out.terms().all(|(k, _)| k.iter().all(|i| *i < d * d)));
        out
    }

    /// R̄_{α,β} = (S⊗id)(R_{α,β}) with the untwisted antipode on the first leg.
    pub fn r_matrix_inverse(
        &self,
        alpha: &TwistedAutomorphism,
        beta: &TwistedAutomorphism,
    ) -> Result<DoubleTensor, DoubleError> {
        let r = self.r_matrix(alpha, beta);
        self.map_leg(&r, 0, |x| self.untwisted_antipode(x))
    }

    /// Applies an even linear map to one leg of a tensor; the map sets the leg's new grading.
    pub fn map_leg(
        &self,
        t: &DoubleTensor,
        leg: usize,
        f: impl Fn(&DoubleElement) -> Result<DoubleElement, DoubleError>,
    ) -> Result<DoubleTensor, DoubleError> {
        let mut gradings = t.gradings.clone();
        let mut out: Option<DoubleTensor> = None;
        let mut cache: HashMap<usize, DoubleElement> = HashMap::new();
        for (key, c) in t.terms() {
            let img = match cache.get(&key[leg]) {
                Some(v) => v.clone(),
                None => {
                    let v = f(&self.basis(&t.gradings[leg], key[leg]))?;
                    cache.insert(key[leg], v.clone());
                    v
                }
            };
            gradings[leg] = img.grading.clone();
            let o = out.get_or_insert_with(|| DoubleTensor::zero(gradings.clone()));
            for (z, cz) in img.terms() {
                let mut k = key.clone();
                k[leg] = z;
                o.add_term(k, c * cz);
            }
        }
        Ok(out.unwrap_or_else(|| DoubleTensor::zero(gradings)))
    }

    /// Applies Δ_{α,β} to one leg, which must be graded αβ; the leg splits in two.
    pub fn coproduct_leg(
        &self,
        t: &DoubleTensor,
        leg: usize,
        alpha: &TwistedAutomorphism,
        beta: &TwistedAutomorphism,
    ) -> Result<DoubleTensor, DoubleError> {
        let mut gradings = t.gradings.clone();
        gradings.splice(leg..=leg, [alpha.clone(), beta.clone()]);
        let mut out = DoubleTensor::zero(gradings);
        let mut cache: HashMap<usize, DoubleTensor> = HashMap::new();
        for (key, c) in t.terms() {
            if let std::collections::hash_map::Entry::Vacant(slot) = cache.entry(key[leg]) {
                slot.insert(self.coproduct(alpha, beta, &self.basis(&t.gradings[leg], key[leg]))?);
            }
            for (pair, cz) in cache[&key[leg]].terms() {
                let mut k = key.clone();
                k.splice(leg..=leg, pair.iter().copied());
                out.add_term(k, c * cz);
            }
        }
        Ok(out)
    }

    /// Inserts the unit of D_γ as a new leg at position `pos`.
    pub fn insert_unit(&self, t: &DoubleTensor, pos: usize, grading: &TwistedAutomorphism) -> DoubleTensor {
        let one = self.one(grading);
        let mut gradings = t.gradings.clone();
        gradings.insert(pos, grading.clone());
        let mut out = DoubleTensor::zero(gradings);
        for (key, c) in t.terms() {
            for (u, cu) in one.terms() {
                let mut k = key.clone();
                k.insert(pos, u);
                out.add_term(k, c * cu);
            }
        }
        out
    }

    /// Componentwise product of two tensors with equal gradings, with the Koszul sign
    /// of moving each y_i past x_j for j > i.
    pub fn mul_tensor(&self, x: &DoubleTensor, y: &DoubleTensor) -> Result<DoubleTensor, DoubleError> {
        if x.gradings != y.gradings {
            return Err(DoubleError::GradingMismatch {
                expected: format!("{:?}", x.gradings.iter().map(|g| g.to_string()).collect::<Vec<_>>()),
                found: format!("{:?}", y.gradings.iter().map(|g| g.to_string()).collect::<Vec<_>>()),
            });
        }
        let tables = x.gradings.iter().map(|g| self.product_table(g)).collect::<Result<Vec<_>, _>>()?;
        let big = self.dim();
        let n = x.arity();
        let mut out = DoubleTensor::zero(x.gradings.clone());
        for (kx, cx) in x.terms() {
            for (ky, cy) in y.terms() {
                let mut odd = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        odd += (self.parity(kx[j]) & self.parity(ky[i])) as usize;
                    }
                }
                let mut partial: Vec<(Vec<usize>, LaurentScalar)> = vec![(Vec::new(), cx * cy)];
                for i in 0..n {
                    let prods = &tables[i][kx[i] * big + ky[i]];
                    partial = partial
                        .into_iter()
                        .flat_map(|(k, c)| {
                            prods.iter().map(move |(z, cz)| {
                                let mut k = k.clone();
                                k.push(*z);
                                (k, &c * cz)
                            })
                        })
                        .collect();
                }
                for (k, c) in partial {
                    out.add_term(k, if odd % 2 == 0 { c } else { -c });
                }
            }
        }
        Ok(out)
    }

    /// The super flip τ(x⊗y) = (−1)^{|x||y|} y⊗x on a two-tensor.
    pub fn flip(&self, t: &DoubleTensor) -> DoubleTensor {
        let mut out = DoubleTensor::zero(vec![t.gradings[1].clone(), t.gradings[0].clone()]);
        for (k, c) in t.terms() {
            let s = self.parity(k[0]) & self.parity(k[1]);
            out.add_term(vec![k[1], k[0]], if s == 1 { -c } else { c.clone() });
        }
        out
    }

    /// Multiplication m_α of a two-tensor whose legs are both graded α.
    pub fn multiply_legs(&self, t: &DoubleTensor) -> Result<DoubleElement, DoubleError> {
        if t.gradings[0] != t.gradings[1] {
            return Err(DoubleError::GradingMismatch {
                expected: t.gradings[0].to_string(),
                found: t.gradings[1].to_string(),
            });
        }
        let table = self.product_table(&t.gradings[0])?;
        let big = self.dim();
        let mut out = DoubleElement::zero(t.gradings[0].clone(), big);
        for (k, c) in t.terms() {
            for (z, cz) in &table[k[0] * big + k[1]] {
                out.coeffs[*z] += c * cz;
            }
        }
        Ok(out)
    }

    /// The tensor 1 ⊗ … ⊗ 1 in the given gradings.
    pub fn one_tensor(&self, gradings: &[TwistedAutomorphism]) -> DoubleTensor {
        let ones: Vec<DoubleElement> = gradings.iter().map(|g| self.one(g)).collect();
        DoubleTensor::from_elements(&ones.iter().collect::<Vec<_>>())
    }
}
