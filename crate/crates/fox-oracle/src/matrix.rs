//! Dense matrices over the Laurent ring and fraction-free determinants.

use std::ops::{Index, IndexMut};

use scalar_ring::{FieldMatrix, LaurentScalar, ScalarError};

/// A dense matrix with entries in κ[s^{±1}].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentScalar>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![LaurentScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentScalar::one();
        }
        m
    }

    /// The constant matrix a scaled by the monomial s^k.
    pub fn from_field(a: &FieldMatrix, k: i64) -> Self {
        let mut m = Self::zeros(a.rows(), a.cols());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                m[(i, j)] = LaurentScalar::monomial(a[(i, j)].clone(), k);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes do not match");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shapes do not match");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Copies `block` into rows r.. and columns c...
    pub fn set_block(&mut self, r: usize, c: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r + i, c + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Determinant by Bareiss elimination with row pivoting. Every division
    /// is by a previous pivot and is exact in the Laurent ring.
    pub fn det(&self) -> Result<LaurentScalar, ScalarError> {
        if self.rows != self.cols {
            return Err(ScalarError::Shape(format!("determinant of a {}×{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = 1;
        let mut prev = LaurentScalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(LaurentScalar::zero());
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(p * n + j, k * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] =
                        num.div_exact(&prev)?.ok_or_else(|| ScalarError::Shape("inexact Bareiss quotient".into()))?;
                }
                a[(i, k)] = LaurentScalar::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = if n == 0 { LaurentScalar::one() } else { a[(n - 1, n - 1)].clone() };
        Ok(if sign < 0 { -d } else { d })
    }

    /// Determinant by cofactor expansion along the first row, for small matrices.
    pub fn det_cofactor(&self) -> LaurentScalar {
        let n = self.rows;
        if n == 0 {
            return LaurentScalar::one();
        }
        let mut total = LaurentScalar::zero();
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let minor = self.minor(0, j);
            let term = &self[(0, j)] * &minor.det_cofactor();
            total = if j % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }

    fn minor(&self, r: usize, c: usize) -> Self {
        let n = self.rows;
        let mut m = Self::zeros(n - 1, n - 1);
        for (ii, i) in (0..n).filter(|&i| i != r).enumerate() {
            for (jj, j) in (0..n).filter(|&j| j != c).enumerate() {
                m[(ii, jj)] = self[(i, j)].clone();
            }
        }
        m
    }
}

impl Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentScalar;

    fn index(&self, (i, j): (usize, usize)) -> &LaurentScalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentScalar {
        &mut self.data[i * self.cols + j]
    }
}
