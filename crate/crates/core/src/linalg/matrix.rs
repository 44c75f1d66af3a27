//! Dense complex matrices in row-major storage.
//!
//! Vectorisation is column-major throughout the crate: `vec(A)` stacks the
//! columns of `A`, so the entry `A[(r, c)]` lands at position `c * rows + r`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};

/// Double-precision complex scalar.
pub type C64 = Complex<f64>;

/// Dense rectangular complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Build from row-major complex entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "ComplexMatrix::from_entries",
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            data: entries,
        })
    }

    /// Build from row-major real entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "ComplexMatrix::from_real",
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            data: entries.iter().map(|&x| C64::new(x, 0.0)).collect(),
        })
    }

    /// Rank-one projector |i><i| in the computational basis.
    pub fn basis_projector(dim: usize, index: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        m[(index, index)] = C64::new(1.0, 0.0);
        m
    }

    /// Matrix unit E_{rc} = |r><c|.
    pub fn matrix_unit(dim: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        m[(r, c)] = C64::new(1.0, 0.0);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        // i-k-j loop order keeps the inner accesses contiguous in row-major storage.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow.iter()) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, other: &Self, s: C64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self.data[r * self.cols + c].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.data[i * self.cols + i]).sum()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for ra in 0..self.rows {
            for ca in 0..self.cols {
                let a = self.data[ra * self.cols + ca];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for rb in 0..other.rows {
                    let dst = (ra * other.rows + rb) * cols + ca * other.cols;
                    let src = rb * other.cols;
                    for cb in 0..other.cols {
                        out.data[dst + cb] = a * other.data[src + cb];
                    }
                }
            }
        }
        out
    }

    /// Hermitian part `(A + A†)/2`.
    pub fn hermitize(&self) -> Self {
        assert!(self.is_square());
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in r..self.cols {
                let avg = (self.data[r * self.cols + c] + self.data[c * self.cols + r].conj())
                    * C64::new(0.5, 0.0);
                out.data[r * self.cols + c] = avg;
                out.data[c * self.cols + r] = avg.conj();
            }
        }
        out
    }

    /// Largest entry-wise deviation from Hermiticity, `max |A - A†|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                let d = (self.data[r * self.cols + c] - self.data[c * self.cols + r].conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// Deviation from unitarity measured as the Schatten-2 norm of `A†A - I`.
    pub fn unitarity_deviation(&self) -> f64 {
        assert!(self.is_square());
        let gram = self.dagger().matmul(self);
        let mut sq = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                let expect = if r == c {
                    C64::new(1.0, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                };
                sq += (gram.data[r * self.cols + c] - expect).norm_sqr();
            }
        }
        sq.sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Column-major vectorisation.
    pub fn vec_col_major(&self) -> Vec<C64> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self.data[r * self.cols + c]);
            }
        }
        v
    }

    /// Inverse of [`ComplexMatrix::vec_col_major`].
    pub fn from_vec_col_major(rows: usize, cols: usize, v: &[C64]) -> Result<Self> {
        if v.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "ComplexMatrix::from_vec_col_major",
                expected: rows * cols,
                got: v.len(),
            });
        }
        let mut m = Self::zeros(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m[(r, c)] = v[c * rows + r];
            }
        }
        Ok(m)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| (a - b).norm() <= tol)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::add(self, rhs)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::sub(self, rhs)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self.data[r * self.cols + c];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Schatten-2 norm `sqrt(tr[A†A])`; coincides with the Frobenius norm and the
/// 2-norm of the column-major vectorisation.
pub fn schatten2(a: &ComplexMatrix) -> f64 {
    a.data().iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}
