//! The integral group ring of a free group and Fox derivatives.

use std::collections::BTreeMap;
use std::fmt;

use tangle_diagram::Letter;

/// Freely reduces a word.
pub fn reduce(word: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word {
        match out.last() {
            Some(p) if p.generator == l.generator && p.inverse != l.inverse => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// The inverse word.
pub fn invert(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| Letter::new(l.generator, !l.inverse)).collect()
}

/// A finite sum Σ c_w·w with integer coefficients over reduced words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Vec<Letter>, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(&[])
    }

    /// The element 1·w, with w reduced.
    pub fn word(w: &[Letter]) -> Self {
        Self::zero().plus(w, 1)
    }

    /// The generator b_k.
    pub fn generator(k: usize) -> Self {
        Self::word(&[Letter::new(k, false)])
    }

    fn plus(mut self, w: &[Letter], c: i64) -> Self {
        if c != 0 {
            let key = reduce(w);
            let entry = self.terms.entry(key.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                self.terms.remove(&key);
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reduced words with nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&[Letter], i64)> {
        self.terms.iter().map(|(w, &c)| (w.as_slice(), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        other.terms().fold(self.clone(), |acc, (w, c)| acc.plus(w, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        other.terms().fold(self.clone(), |acc, (w, c)| acc.plus(w, -c))
    }

    pub fn scale(&self, k: i64) -> Self {
        self.terms().fold(Self::zero(), |acc, (w, c)| acc.plus(w, c * k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let uv: Vec<Letter> = u.iter().chain(v).copied().collect();
                out = out.plus(&uv, a * b);
            }
        }
        out
    }

    /// Image under the augmentation ℤF → ℤ.
    pub fn augmentation(&self) -> i64 {
        self.terms().map(|(_, c)| c).sum()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|l| format!("b{}{}", l.generator, if l.inverse { "^-1" } else { "" }))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{} ", c.abs())?;
            }
            write!(f, "{word}")?;
        }
        Ok(())
    }
}

/// ∂w/∂b_k, the derivation with ∂b_j/∂b_k = δ_jk and ∂(uv) = ∂u + u·∂v.
/// Letters b_k⁻¹ contribute −(prefix)·b_k⁻¹.
pub fn fox_derivative(w: &[Letter], k: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (i, l) in w.iter().enumerate() {
        if l.generator != k {
            continue;
        }
        if l.inverse {
            out = out.plus(&w[..=i], -1);
        } else {
            out = out.plus(&w[..i], 1);
        }
    }
    out
}

/// Checks Σ_j (∂w/∂b_j)(b_j − 1) = w − 1 in ℤF.
pub fn fundamental_identity(w: &[Letter], generators: usize) -> bool {
    let lhs = (0..generators).fold(GroupRingElement::zero(), |acc, j| {
        acc.add(&fox_derivative(w, j).mul(&GroupRingElement::generator(j).sub(&GroupRingElement::one())))
    });
    lhs == GroupRingElement::word(w).sub(&GroupRingElement::one())
}
