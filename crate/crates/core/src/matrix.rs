//! Small dense integer and rational matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    /// Panics if rows have unequal length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        if let Some(first) = rows.first() {
            assert!(rows.iter().all(|r| r.len() == first.len()), "ragged matrix");
        }
        Self { rows }
    }

    pub fn from_columns(cols: &[Vec<i64>]) -> Self {
        let n = cols.first().map_or(0, Vec::len);
        Self::from_rows((0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows: vec![vec![0; cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1; n])
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m.rows[i][i] = v;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.ncols()).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_columns(&self.rows)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols(), other.nrows(), "shape mismatch");
        let mut out = Self::zeros(self.nrows(), other.ncols());
        for i in 0..self.nrows() {
            for j in 0..other.ncols() {
                out.rows[i][j] = (0..self.ncols()).map(|l| self.rows[i][l] * other.rows[l][j]).sum();
            }
        }
        out
    }

    /// `B·diag(d)`: scales column `j` by `d[j]`.
    pub fn scale_columns(&self, d: &[i64]) -> Self {
        Self::from_rows(self.rows.iter().map(|r| r.iter().zip(d).map(|(a, b)| a * b).collect()).collect())
    }

    /// `diag(d)·B`: scales row `i` by `d[i]`.
    pub fn scale_rows(&self, d: &[i64]) -> Self {
        Self::from_rows(self.rows.iter().zip(d).map(|(r, s)| r.iter().map(|a| a * s).collect()).collect())
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.nrows();
        self.is_square() && (0..n).all(|i| (0..n).all(|j| self.rows[i][j] == -self.rows[j][i]))
    }

    /// `M'_{ij} = M_{σ(i)σ(j)}`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        Self::from_rows(sigma.iter().map(|&i| sigma.iter().map(|&j| self.rows[i][j]).collect()).collect())
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_rows(
            self.rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect(),
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Dense rational matrix with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        Self { rows }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| BigRational::one()).collect())
    }

    pub fn diagonal(d: Vec<BigRational>) -> Self {
        let n = d.len();
        let mut rows = vec![vec![BigRational::zero(); n]; n];
        for (i, v) in d.into_iter().enumerate() {
            rows[i][i] = v;
        }
        Self { rows }
    }

    /// Diagonal of reciprocals `diag(1/d_i)`.
    pub fn inverse_diagonal(d: &[i64]) -> Self {
        Self::diagonal(d.iter().map(|&v| BigRational::new(BigInt::one(), v.into())).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.rows.len();
        let m = other.rows.first().map_or(0, Vec::len);
        let inner = other.rows.len();
        let mut rows = vec![vec![BigRational::zero(); m]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for l in 0..inner {
                    *cell += &self.rows[i][l] * &other.rows[l][j];
                }
            }
        }
        Self { rows }
    }

    pub fn transpose(&self) -> Self {
        let n = self.rows.first().map_or(0, Vec::len);
        Self { rows: (0..n).map(|j| self.rows.iter().map(|r| r[j].clone()).collect()).collect() }
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> BigRational {
        let mut a = self.rows.clone();
        let n = a.len();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return BigRational::zero();
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.rows.len();
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    a[r][c] -= da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        Some(Self { rows: inv })
    }
}
