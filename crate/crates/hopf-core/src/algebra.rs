//! Hopf superalgebra structure tensors and the axiom report.

use std::fmt;
use std::sync::Arc;

use scalar_ring::{CyclotomicField, FieldElement, FieldMatrix};

use crate::koszul::swap_sign;
use crate::HopfError;

/// Sparse vector: (basis index, nonzero coefficient) pairs.
pub type SparseVec = Vec<(usize, FieldElement)>;

/// A finite-dimensional Hopf superalgebra over a cyclotomic coefficient field.
///
/// Elements are dense coordinate vectors in the chosen basis. Degrees give the
/// ℤ-grading used by twisted automorphisms; parities carry the super signs and
/// are independent data.
#[derive(Clone, Debug)]
pub struct HopfAlgebraData {
    name: String,
    field: Arc<CyclotomicField>,
    labels: Vec<String>,
    degree: Vec<i64>,
    parity: Vec<u8>,
    mult: Vec<SparseVec>,
    unit: SparseVec,
    comult: Vec<Vec<(usize, usize, FieldElement)>>,
    counit: Vec<FieldElement>,
    antipode: Vec<SparseVec>,
    antipode_inv: Vec<SparseVec>,
}

/// Raw structure tensors accepted by [`HopfAlgebraData::new`].
#[derive(Clone, Debug)]
pub struct StructureTensors {
    pub name: String,
    pub field: Arc<CyclotomicField>,
    pub labels: Vec<String>,
    pub degree: Vec<i64>,
    pub parity: Vec<u8>,
    /// `mult[i * d + j]` is the product of basis elements i and j.
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    /// `comult[k]` lists (i, j, c) with Δ(e_k) = Σ c e_i ⊗ e_j.
    pub comult: Vec<Vec<(usize, usize, FieldElement)>>,
    pub counit: Vec<FieldElement>,
    /// `antipode[j]` is S(e_j).
    pub antipode: Vec<SparseVec>,
}

fn sparse(v: &[FieldElement]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

impl HopfAlgebraData {
    /// Validates shapes and builds the algebra; the antipode must be invertible.
    pub fn new(t: StructureTensors) -> Result<Self, HopfError> {
        let d = t.labels.len();
        let shape = |what: &str, got: usize, want: usize| {
            if got == want {
                Ok(())
            } else {
                Err(HopfError::Shape(format!("{what}: expected {want} entries, got {got}")))
            }
        };
        shape("degrees", t.degree.len(), d)?;
        shape("parities", t.parity.len(), d)?;
        shape("mult", t.mult.len(), d * d)?;
        shape("comult", t.comult.len(), d)?;
        shape("counit", t.counit.len(), d)?;
        shape("antipode", t.antipode.len(), d)?;
        let in_range = t.mult.iter().chain([&t.unit]).chain(&t.antipode).flatten().all(|(i, _)| *i < d)
            && t.comult.iter().flatten().all(|(i, j, _)| *i < d && *j < d);
        if !in_range || d == 0 {
            return Err(HopfError::Shape("basis index out of range".into()));
        }
        let mut s = FieldMatrix::zeros(d, d);
        for (j, col) in t.antipode.iter().enumerate() {
            for (i, c) in col {
                s[(*i, j)] = c.clone();
            }
        }
        let s_inv = s.inverse()?.ok_or(HopfError::SingularAntipode)?;
        let antipode_inv = (0..d).map(|j| sparse(&(0..d).map(|i| s_inv[(i, j)].clone()).collect::<Vec<_>>())).collect();
        Ok(Self {
            name: t.name,
            field: t.field,
            labels: t.labels,
            degree: t.degree,
            parity: t.parity.iter().map(|p| p & 1).collect(),
            mult: t.mult,
            unit: t.unit,
            comult: t.comult,
            counit: t.counit,
            antipode: t.antipode,
            antipode_inv,
        })
    }

    /// Returns the raw tensors, e.g. to corrupt one entry in a test.
    pub fn tensors(&self) -> StructureTensors {
        StructureTensors {
            name: self.name.clone(),
            field: self.field.clone(),
            labels: self.labels.clone(),
            degree: self.degree.clone(),
            parity: self.parity.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degree[i]
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    /// Product of two basis elements.
    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, FieldElement)] {
        &self.mult[i * self.dim() + j]
    }

    /// Coproduct of a basis element as (i, j, c) triples.
    pub fn comult_basis(&self, k: usize) -> &[(usize, usize, FieldElement)] {
        &self.comult[k]
    }

    pub fn unit_sparse(&self) -> &[(usize, FieldElement)] {
        &self.unit
    }

    pub fn counit_basis(&self, k: usize) -> &FieldElement {
        &self.counit[k]
    }

    pub fn antipode_basis(&self, j: usize) -> &[(usize, FieldElement)] {
        &self.antipode[j]
    }

    pub fn antipode_inv_basis(&self, j: usize) -> &[(usize, FieldElement)] {
        &self.antipode_inv[j]
    }

    /// Basis vector e_i.
    pub fn basis_vec(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(); self.dim()];
        v[i] = FieldElement::one();
        v
    }

    pub fn zero_vec(&self) -> Vec<FieldElement> {
        vec![FieldElement::zero(); self.dim()]
    }

    pub fn unit(&self) -> Vec<FieldElement> {
        let mut v = self.zero_vec();
        for (i, c) in &self.unit {
            v[*i] = c.clone();
        }
        v
    }

    /// Product of two elements.
    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = self.zero_vec();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.mult_basis(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Coproduct as a dense d² vector indexed by i·d + j.
    pub fn comul(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        let d = self.dim();
        let mut out = vec![FieldElement::zero(); d * d];
        for (k, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (i, j, c) in &self.comult[k] {
                out[i * d + j] += a * c;
            }
        }
        out
    }

    pub fn counit(&self, x: &[FieldElement]) -> FieldElement {
        x.iter().zip(&self.counit).fold(FieldElement::zero(), |acc, (a, b)| acc + a * b)
    }

    fn apply_cols(&self, cols: &[SparseVec], x: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = self.zero_vec();
        for (j, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (i, c) in &cols[j] {
                out[*i] += a * c;
            }
        }
        out
    }

    pub fn antipode(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        self.apply_cols(&self.antipode, x)
    }

    pub fn antipode_inv(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        self.apply_cols(&self.antipode_inv, x)
    }

    /// Whether S² is the identity.
    pub fn is_involutory(&self) -> bool {
        (0..self.dim()).all(|j| {
            let e = self.basis_vec(j);
            self.antipode(&self.antipode(&e)) == e
        })
    }

    /// Parity of a homogeneous vector, or `None` for zero or mixed vectors.
    pub fn parity_of(&self, x: &[FieldElement]) -> Option<u8> {
        let mut ps = x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| self.parity[i]);
        let p = ps.next()?;
        ps.all(|q| q == p).then_some(p)
    }

    /// Runs every Hopf superalgebra axiom exactly on all basis tuples.
    pub fn verify_hopf_axioms(&self) -> AxiomReport {
        let d = self.dim();
        let mut rep = AxiomReport::default();
        let basis: Vec<Vec<FieldElement>> = (0..d).map(|i| self.basis_vec(i)).collect();
        let one = self.unit();

        let graded = (0..d).all(|i| {
            (0..d).all(|j| {
                self.mult_basis(i, j).iter().all(|(k, _)| {
                    self.degree[*k] == self.degree[i] + self.degree[j]
                        && self.parity[*k] == self.parity[i] ^ self.parity[j]
                })
            }) && self.comult[i].iter().all(|(a, b, _)| {
                self.degree[*a] + self.degree[*b] == self.degree[i]
                    && self.parity[*a] ^ self.parity[*b] == self.parity[i]
            })
        }) && self.unit.iter().all(|(i, _)| self.degree[*i] == 0 && self.parity[*i] == 0)
            && (0..d).all(|i| self.counit[i].is_zero() || (self.degree[i] == 0 && self.parity[i] == 0));
        rep.push("grading", graded);

        let assoc = (0..d).all(|i| {
            (0..d).all(|j| {
                let xy = self.mul(&basis[i], &basis[j]);
                (0..d).all(|k| self.mul(&xy, &basis[k]) == self.mul(&basis[i], &self.mul(&basis[j], &basis[k])))
            })
        });
        rep.push("associativity", assoc);
        rep.push("unitality", basis.iter().all(|x| self.mul(&one, x) == *x && self.mul(x, &one) == *x));

        let coassoc = (0..d).all(|k| {
            let mut left = vec![FieldElement::zero(); d * d * d];
            let mut right = left.clone();
            for (a, b, c) in &self.comult[k] {
                for (a1, a2, c1) in &self.comult[*a] {
                    left[(a1 * d + a2) * d + b] += c * c1;
                }
                for (b1, b2, c2) in &self.comult[*b] {
                    right[(a * d + b1) * d + b2] += c * c2;
                }
            }
            left == right
        });
        rep.push("coassociativity", coassoc);

        let counital = (0..d).all(|k| {
            let mut l = self.zero_vec();
            let mut r = self.zero_vec();
            for (a, b, c) in &self.comult[k] {
                l[*b] += &self.counit[*a] * c;
                r[*a] += &self.counit[*b] * c;
            }
            l == basis[k] && r == basis[k]
        });
        rep.push("counitality", counital);

        let bialg = (0..d).all(|i| {
            (0..d).all(|j| {
                let lhs = self.comul(&self.mul(&basis[i], &basis[j]));
                let mut rhs = vec![FieldElement::zero(); d * d];
                for (x1, x2, cx) in &self.comult[i] {
                    for (y1, y2, cy) in &self.comult[j] {
                        let sign = swap_sign(self.parity[*x2], self.parity[*y1]);
                        let c = FieldElement::from_int(sign as i64) * cx * cy;
                        for (p, cp) in self.mult_basis(*x1, *y1) {
                            for (q, cq) in self.mult_basis(*x2, *y2) {
                                rhs[p * d + q] += &c * &(cp * cq);
                            }
                        }
                    }
                }
                lhs == rhs && self.counit(&self.mul(&basis[i], &basis[j])) == &self.counit[i] * &self.counit[j]
            })
        }) && {
            let mut oo = vec![FieldElement::zero(); d * d];
            for (i, a) in &self.unit {
                for (j, b) in &self.unit {
                    oo[i * d + j] = a * b;
                }
            }
            self.comul(&one) == oo && self.counit(&one).is_one()
        };
        rep.push("bialgebra compatibility", bialg);

        let antipode = (0..d).all(|k| {
            let mut l = self.zero_vec();
            let mut r = self.zero_vec();
            for (a, b, c) in &self.comult[k] {
                let sa = self.antipode(&basis[*a]);
                let sb = self.antipode(&basis[*b]);
                for (i, x) in self.mul(&sa, &basis[*b]).into_iter().enumerate() {
                    l[i] += c * &x;
                }
                for (i, x) in self.mul(&basis[*a], &sb).into_iter().enumerate() {
                    r[i] += c * &x;
                }
            }
            let want: Vec<FieldElement> = one.iter().map(|u| u * &self.counit[k]).collect();
            l == want && r == want
        });
        rep.push("antipode", antipode);
        rep
    }
}

/// Named pass/fail results of an exact axiom battery.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    entries: Vec<(String, bool)>,
}

impl AxiomReport {
    /// Records a check; repeated names are combined with logical and.
    pub fn push(&mut self, name: &str, ok: bool) {
        match self.entries.iter_mut().find(|(n, _)| n == name) {
            Some((_, v)) => *v &= ok,
            None => self.entries.push((name.to_string(), ok)),
        }
    }

    pub fn entries(&self) -> &[(String, bool)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, v)| *v)
    }

    /// Names of failed checks.
    pub fn failures(&self) -> Vec<&str> {
        self.entries.iter().filter(|(_, v)| !v).map(|(n, _)| n.as_str()).collect()
    }

    pub fn merge(&mut self, other: &AxiomReport) {
        for (n, v) in &other.entries {
            self.push(n, *v);
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in &self.entries {
            writeln!(f, "{:<40} {}", name, if *ok { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}
