//! Coefficient fields: the rationals and cyclotomic extensions ℚ[q]/Φ_n(q).
//!
//! A [`FieldElement`] is either a rational number or a reduced residue
//! polynomial in `q` tagged with its [`CyclotomicField`]. Rational numbers embed
//! into every cyclotomic field, so rational elements combine freely with any
//! field; combining residues from two different cyclotomic fields is an error.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ScalarError;

/// Dense little-endian polynomial over ℚ with no trailing zeros.
pub(crate) type RatPoly = Vec<BigRational>;

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let mut out: RatPoly = (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by the nonzero polynomial `b`.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut rem: RatPoly = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        quot[k] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// The n-th cyclotomic polynomial, computed as (qⁿ − 1) divided by Φ_d for proper divisors d.
fn cyclotomic_polynomial(n: u32) -> RatPoly {
    let mut num: RatPoly = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divrem(&num, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

/// Arithmetic context for ℚ[q]/Φ_n(q); for n ∈ {1, 2} this is ℚ itself with q = ±1.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u32,
    modulus: RatPoly,
}

impl CyclotomicField {
    /// Builds the field descriptor for a positive order `n`.
    pub fn new(n: u32) -> Result<Arc<Self>, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidOrder(n));
        }
        Ok(Arc::new(Self { n, modulus: cyclotomic_polynomial(n) }))
    }

    /// The rational field, viewed as the first cyclotomic field.
    pub fn rationals() -> Arc<Self> {
        Self::new(1).expect("order 1 is valid")
    }

    /// The order n of the root of unity q.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// Degree of Φ_n, i.e. the dimension of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Whether the field is ℚ.
    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// Coefficients of Φ_n, constant term first.
    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    /// The primitive root of unity q.
    pub fn q(self: &Arc<Self>) -> FieldElement {
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    /// Reduces a polynomial in q modulo Φ_n.
    pub fn element(self: &Arc<Self>, coeffs: Vec<BigRational>) -> FieldElement {
        let (_, rem) = poly_divrem(&coeffs, &self.modulus);
        FieldElement::from_residue(Some(self), rem)
    }

    /// Builds an element from integer coordinates in the power basis 1, q, q², …
    pub fn from_coords(self: &Arc<Self>, coords: &[i64]) -> FieldElement {
        self.element(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}
impl Eq for CyclotomicField {}

#[derive(Clone, Debug)]
enum Repr {
    Rational(BigRational),
    /// Residue of degree ≥ 1 and < deg Φ_n.
    Cyclotomic(Arc<CyclotomicField>, RatPoly),
}

/// An exact element of ℚ or of a cyclotomic field.
#[derive(Clone, Debug)]
pub struct FieldElement(Repr);

impl FieldElement {
    fn from_residue(field: Option<&Arc<CyclotomicField>>, mut coeffs: RatPoly) -> Self {
        trim(&mut coeffs);
        match (coeffs.len(), field) {
            (0, _) => Self::zero(),
            (1, _) | (_, None) => Self(Repr::Rational(coeffs.swap_remove(0))),
            (_, Some(f)) => Self(Repr::Cyclotomic(f.clone(), coeffs)),
        }
    }

    /// Exact zero.
    pub fn zero() -> Self {
        Self(Repr::Rational(BigRational::zero()))
    }

    /// Exact one.
    pub fn one() -> Self {
        Self(Repr::Rational(BigRational::one()))
    }

    /// Embeds an integer.
    pub fn from_int(n: i64) -> Self {
        Self(Repr::Rational(BigRational::from_integer(n.into())))
    }

    /// Embeds the fraction `num/den`.
    ///
    /// # Panics
    /// Panics if `den` is zero.
    pub fn from_frac(num: i64, den: i64) -> Self {
        Self(Repr::Rational(BigRational::new(num.into(), den.into())))
    }

    /// Embeds a rational number.
    pub fn from_rational(r: BigRational) -> Self {
        Self(Repr::Rational(r))
    }

    /// Parses a rational literal such as `-3/4`.
    pub fn parse_rational(text: &str) -> Result<Self, ScalarError> {
        let t = text.trim();
        let bad = || ScalarError::Parse { pos: 0, msg: format!("invalid rational `{t}`") };
        let r = match t.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Ok(Self(Repr::Rational(r)))
    }

    /// The rational value, if this element lies in ℚ.
    pub fn to_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            Repr::Cyclotomic(..) => None,
        }
    }

    /// The cyclotomic field this element genuinely needs, or `None` for rationals.
    pub fn field(&self) -> Option<&Arc<CyclotomicField>> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Cyclotomic(f, _) => Some(f),
        }
    }

    /// Coordinates in the power basis 1, q, q², … (trailing zeros trimmed).
    pub fn coords(&self) -> Vec<BigRational> {
        match &self.0 {
            Repr::Rational(r) if r.is_zero() => Vec::new(),
            Repr::Rational(r) => vec![r.clone()],
            Repr::Cyclotomic(_, c) => c.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rational(r) if r.is_one())
    }

    /// Sign of the highest-degree nonzero rational coordinate; `Equal` for zero.
    pub fn sign_key(&self) -> Ordering {
        match &self.0 {
            Repr::Rational(r) => r.cmp(&BigRational::zero()),
            Repr::Cyclotomic(_, c) => c.last().unwrap().cmp(&BigRational::zero()),
        }
    }

    fn join<'a>(&'a self, other: &'a Self) -> Result<Option<&'a Arc<CyclotomicField>>, ScalarError> {
        match (self.field(), other.field()) {
            (Some(a), Some(b)) if a != b => Err(ScalarError::FieldMismatch { left: a.order(), right: b.order() }),
            (Some(a), _) => Ok(Some(a)),
            (None, b) => Ok(b),
        }
    }

    /// Addition that reports mixing of distinct cyclotomic fields.
    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        if let (Repr::Rational(a), Repr::Rational(b)) = (&self.0, &other.0) {
            return Ok(Self(Repr::Rational(a + b)));
        }
        let field = self.join(other)?;
        let (a, b) = (self.coords(), other.coords());
        let sum = (0..a.len().max(b.len()))
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                x + b.get(i).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect();
        Ok(Self::from_residue(field, sum))
    }

    /// Multiplication that reports mixing of distinct cyclotomic fields.
    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Ok(Self(Repr::Rational(a * b))),
            (Repr::Rational(a), Repr::Cyclotomic(f, c)) | (Repr::Cyclotomic(f, c), Repr::Rational(a)) => {
                Ok(Self::from_residue(Some(f), c.iter().map(|x| x * a).collect()))
            }
            (Repr::Cyclotomic(f, a), Repr::Cyclotomic(g, b)) => {
                if f != g {
                    return Err(ScalarError::FieldMismatch { left: f.order(), right: g.order() });
                }
                let (_, rem) = poly_divrem(&poly_mul(a, b), &f.modulus);
                Ok(Self::from_residue(Some(f), rem))
            }
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in ℚ[q].
    pub fn inv(&self) -> Result<Self, ScalarError> {
        match &self.0 {
            Repr::Rational(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Repr::Rational(r) => Ok(Self(Repr::Rational(r.recip()))),
            Repr::Cyclotomic(f, c) => {
                // Invariant: s·c ≡ r0 and t·c ≡ r1 (mod Φ_n).
                let (mut r0, mut r1) = (f.modulus.clone(), c.clone());
                let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
                while !r1.is_empty() {
                    let (q, r) = poly_divrem(&r0, &r1);
                    let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
                    r0 = std::mem::replace(&mut r1, r);
                    s0 = std::mem::replace(&mut s1, s2);
                }
                // Φ_n is irreducible, so the gcd r0 is a nonzero constant.
                let g = r0[0].clone();
                let inv = s0.iter().map(|x| x / &g).collect();
                Ok(f.element(inv))
            }
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// The nonnegative rational square root, when this is the square of a rational.
    pub fn rational_sqrt(&self) -> Option<Self> {
        let r = self.to_rational()?;
        if r.is_negative() {
            return None;
        }
        let (n, d) = (r.numer(), r.denom());
        let (sn, sd) = (n.sqrt(), d.sqrt());
        (&sn * &sn == *n && &sd * &sd == *d).then(|| Self(Repr::Rational(BigRational::new(sn, sd))))
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a == b,
            (Repr::Cyclotomic(f, a), Repr::Cyclotomic(g, b)) => f == g && a == b,
            _ => false,
        }
    }
}
impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Rational(r) => r.hash(state),
            Repr::Cyclotomic(f, c) => {
                f.order().hash(state);
                c.hash(state);
            }
        }
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => fmt_rational(r, f),
            Repr::Cyclotomic(_, c) => {
                write!(f, "(")?;
                let mut first = true;
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let mag = x.abs();
                    if first {
                        if x.is_negative() {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if x.is_negative() { '-' } else { '+' })?;
                    }
                    first = false;
                    match k {
                        0 => fmt_rational(&mag, f)?,
                        _ => {
                            if !mag.is_one() {
                                fmt_rational(&mag, f)?;
                                write!(f, "*")?;
                            }
                            write!(f, "q")?;
                            if k > 1 {
                                write!(f, "^{k}")?;
                            }
                        }
                    }
                }
                write!(f, ")")
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $body:expr) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                let f: fn(&FieldElement, &FieldElement) -> FieldElement = $body;
                f(self, rhs)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl $atr<&FieldElement> for FieldElement {
            fn $am(&mut self, rhs: &FieldElement) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<FieldElement> for FieldElement {
            fn $am(&mut self, rhs: FieldElement) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

// The operator forms panic on mixed cyclotomic fields; use `try_add`/`try_mul` to recover.
forward_binop!(Add, add, AddAssign, add_assign, |a, b| a.try_add(b).expect("field mismatch"));
forward_binop!(Sub, sub, SubAssign, sub_assign, |a, b| a.try_add(&-b).expect("field mismatch"));
forward_binop!(Mul, mul, MulAssign, mul_assign, |a, b| a.try_mul(b).expect("field mismatch"));

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.0 {
            Repr::Rational(r) => FieldElement(Repr::Rational(-r)),
            Repr::Cyclotomic(f, c) => FieldElement(Repr::Cyclotomic(f.clone(), c.iter().map(|x| -x).collect())),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
