//! Laurent polynomials in s = t^{1/2} with exact field coefficients.

use std::cmp::Ordering;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::{FieldElement, ScalarError};

/// A finite sum of terms c·s^k, stored sorted by exponent with no zero coefficients.
///
/// The variable is s = t^{1/2}, so t^k is the s-exponent 2k.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    terms: Vec<(i64, FieldElement)>,
}

/// Witness for `p = sign · s^(k·step) · q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitWitness {
    pub sign: i8,
    pub k: i64,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElement::one())
    }

    /// The scalar `c` as a constant polynomial.
    pub fn constant(c: FieldElement) -> Self {
        Self::monomial(c, 0)
    }

    /// An integer constant.
    pub fn from_int(n: i64) -> Self {
        Self::constant(FieldElement::from_int(n))
    }

    /// The monomial c·s^k.
    pub fn monomial(c: FieldElement, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(k, c)] }
        }
    }

    /// s^k.
    pub fn s_pow(k: i64) -> Self {
        Self::monomial(FieldElement::one(), k)
    }

    /// t^k = s^{2k}.
    pub fn t_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs, combining repeats.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, FieldElement)>) -> Self {
        let mut v: Vec<(i64, FieldElement)> = pairs.into_iter().collect();
        v.sort_by_key(|(k, _)| *k);
        let mut terms: Vec<(i64, FieldElement)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match terms.last_mut() {
                Some((k0, c0)) if *k0 == k => *c0 += c,
                _ => terms.push((k, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Self { terms }
    }

    /// Terms in ascending s-exponent order.
    pub fn terms(&self) -> &[(i64, FieldElement)] {
        &self.terms
    }

    /// Coefficient of s^k.
    pub fn coeff(&self, k: i64) -> FieldElement {
        match self.terms.binary_search_by_key(&k, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => FieldElement::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Lowest s-exponent, or `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(k, _)| *k)
    }

    /// Highest s-exponent, or `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(k, _)| *k)
    }

    /// The constant value if the polynomial has no s-dependence.
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.as_slice() {
            [] => Some(FieldElement::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// The single term (k, c) if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(i64, &FieldElement)> {
        match self.terms.as_slice() {
            [(k, c)] => Some((*k, c)),
            _ => None,
        }
    }

    /// True when every s-exponent is even, i.e. the value lies in K[t^{±1}].
    pub fn has_integral_t_powers(&self) -> bool {
        self.terms.iter().all(|(k, _)| k % 2 == 0)
    }

    /// Multiplication by s^k.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Multiplication by a field scalar.
    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Addition that reports mixing of distinct cyclotomic fields.
    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.try_add(&b[j].1)?;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Self { terms: out })
    }

    /// Multiplication that reports mixing of distinct cyclotomic fields.
    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((k, c)) = other.as_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, x) in &self.terms {
                terms.push((e + k, x.try_mul(c)?));
            }
            terms.retain(|(_, x)| !x.is_zero());
            return Ok(Self { terms });
        }
        if self.as_monomial().is_some() {
            return other.try_mul(self);
        }
        let mut acc: Vec<(i64, FieldElement)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e, x) in &self.terms {
            for (f, y) in &other.terms {
                acc.push((e + f, x.try_mul(y)?));
            }
        }
        Ok(Self::from_terms(acc))
    }

    /// Inverse of a nonzero monomial.
    pub fn inv_monomial(&self) -> Result<Self, ScalarError> {
        match self.as_monomial() {
            Some((k, c)) => Ok(Self::monomial(c.inv()?, -k)),
            None if self.is_zero() => Err(ScalarError::DivisionByZero),
            None => Err(ScalarError::NotMonomial(self.to_string())),
        }
    }

    /// Integer power; negative exponents require a monomial.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv_monomial()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Square root of a monomial c·s^{2m} whose coefficient is a rational square.
    pub fn sqrt_monomial(&self) -> Result<Self, ScalarError> {
        let err = || ScalarError::NoSquareRoot(self.to_string());
        let (k, c) = self.as_monomial().ok_or_else(err)?;
        if k % 2 != 0 {
            return Err(err());
        }
        Ok(Self::monomial(c.rational_sqrt().ok_or_else(err)?, k / 2))
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>, ScalarError> {
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let d0 = d.min_exp().unwrap();
        let dd = d.max_exp().unwrap() - d0;
        let lead_inv = d.terms.last().unwrap().1.inv()?;
        // Dense polynomial long division after normalizing both lowest exponents to 0.
        let n0 = self.min_exp().unwrap();
        let nd = self.max_exp().unwrap() - n0;
        if nd < dd {
            return Ok(None);
        }
        let mut rem = vec![FieldElement::zero(); nd as usize + 1];
        for (e, c) in &self.terms {
            rem[(e - n0) as usize] = c.clone();
        }
        let mut den = vec![FieldElement::zero(); dd as usize + 1];
        for (e, c) in &d.terms {
            den[(e - d0) as usize] = c.clone();
        }
        let mut quot = vec![FieldElement::zero(); (nd - dd) as usize + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd as usize];
            if top.is_zero() {
                continue;
            }
            let c = top.try_mul(&lead_inv)?;
            for (i, y) in den.iter().enumerate() {
                if !y.is_zero() {
                    rem[k + i] = rem[k + i].try_add(&-(c.try_mul(y)?))?;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        Ok(Some(Self::from_terms(quot.into_iter().enumerate().map(|(i, c)| (i as i64 + n0 - d0, c)))))
    }

    /// Finds sign and k with `self = sign · s^(k·step) · other`; `step = 0` allows only a sign.
    pub fn equal_up_to_unit(&self, other: &Self, step: u32) -> Option<UnitWitness> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Some(UnitWitness { sign: 1, k: 0 }),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        let d = self.min_exp().unwrap() - other.min_exp().unwrap();
        let k = match step {
            0 if d == 0 => 0,
            0 => return None,
            s if d % s as i64 == 0 => d / s as i64,
            _ => return None,
        };
        let shifted = other.shift(d);
        if *self == shifted {
            Some(UnitWitness { sign: 1, k })
        } else if *self == -shifted {
            Some(UnitWitness { sign: -1, k })
        } else {
            None
        }
    }

    /// Divides by ±s^k so the lowest exponent is 0 and the lowest coefficient is positive.
    pub fn canonical_unit_form(&self) -> Result<Self, ScalarError> {
        let (k, c) = self.terms.first().ok_or(ScalarError::ZeroInput)?;
        let shifted = self.shift(-k);
        Ok(if c.sign_key() == Ordering::Less { -shifted } else { shifted })
    }
}

impl From<FieldElement> for LaurentScalar {
    fn from(c: FieldElement) -> Self {
        Self::constant(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $body:expr) => {
        impl $tr<&LaurentScalar> for &LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: &LaurentScalar) -> LaurentScalar {
                let f: fn(&LaurentScalar, &LaurentScalar) -> LaurentScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<LaurentScalar> for &LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                self.$m(&rhs)
            }
        }
        impl $tr<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$m(rhs)
            }
        }
        impl $atr<&LaurentScalar> for LaurentScalar {
            fn $am(&mut self, rhs: &LaurentScalar) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<LaurentScalar> for LaurentScalar {
            fn $am(&mut self, rhs: LaurentScalar) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign, |a, b| a.try_add(b).expect("field mismatch"));
forward_binop!(Sub, sub, SubAssign, sub_assign, |a, b| a.try_add(&-b).expect("field mismatch"));
forward_binop!(Mul, mul, MulAssign, mul_assign, |a, b| a.try_mul(b).expect("field mismatch"));

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}
