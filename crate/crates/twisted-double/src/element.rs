//! Graded elements of D(H)_α and of tensor products of such components.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use hopf_core::TwistedAutomorphism;
use scalar_ring::LaurentScalar;

/// An element of D(H)_α = H*⊗H with Laurent coefficients.
///
/// Coordinate `p·d + a` is the coefficient of h^p ⊗ h_a, where h^p is the
/// coordinate dual of the basis element h_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleElement {
    pub grading: TwistedAutomorphism,
    pub coeffs: Vec<LaurentScalar>,
}

impl DoubleElement {
    pub fn zero(grading: TwistedAutomorphism, dim: usize) -> Self {
        Self { grading, coeffs: vec![LaurentScalar::zero(); dim] }
    }

    pub fn basis(grading: TwistedAutomorphism, dim: usize, index: usize) -> Self {
        let mut x = Self::zero(grading, dim);
        x.coeffs[index] = LaurentScalar::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentScalar::is_zero)
    }

    /// Nonzero (index, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentScalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self { grading: self.grading.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Sum of two elements with the same grading.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.grading, other.grading);
        Self {
            grading: self.grading.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})[{i}]")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A sparse element of D_{α_1} ⊗ … ⊗ D_{α_k}, keyed by basis-index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleTensor {
    pub gradings: Vec<TwistedAutomorphism>,
    terms: BTreeMap<Vec<usize>, LaurentScalar>,
}

impl DoubleTensor {
    pub fn zero(gradings: Vec<TwistedAutomorphism>) -> Self {
        Self { gradings, terms: BTreeMap::new() }
    }

    /// The pure tensor x_1 ⊗ … ⊗ x_k.
    pub fn from_elements(xs: &[&DoubleElement]) -> Self {
        let mut out = Self::zero(xs.iter().map(|x| x.grading.clone()).collect());
        let mut keys: Vec<(Vec<usize>, LaurentScalar)> = vec![(Vec::new(), LaurentScalar::one())];
        for x in xs {
            keys = keys
                .into_iter()
                .flat_map(|(k, c)| {
                    x.terms().map(move |(i, xi)| {
                        let mut k = k.clone();
                        k.push(i);
                        (k, &c * xi)
                    })
                })
                .collect();
        }
        for (k, c) in keys {
            out.add_term(k, c);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.gradings.len()
    }

    pub fn add_term(&mut self, key: Vec<usize>, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[usize]) -> LaurentScalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }
}
