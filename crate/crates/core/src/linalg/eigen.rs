//! Hermitian eigendecomposition.
//!
//! Backed by nalgebra's symmetric eigensolver on `Complex<f64>`; exposed here
//! behind a small wrapper so the rest of the crate only deals in
//! [`ComplexMatrix`]. Eigenvalues are returned in ascending order.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::matrix::{C64, ComplexMatrix};

/// Tolerated entry-wise deviation from Hermiticity when decomposing.
pub const EIGH_HERMITICITY_TOL: f64 = 1e-9;

/// Result of a Hermitian eigendecomposition: `A = V diag(λ) V†` with the
/// eigenvector for `eigenvalues[k]` in column `k` of `eigenvectors`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

fn to_nalgebra(a: &ComplexMatrix) -> DMatrix<C64> {
    DMatrix::from_fn(a.rows(), a.cols(), |r, c| a[(r, c)])
}

/// Eigendecomposition of a Hermitian matrix.
///
/// The input is symmetrised via `(A + A†)/2` before decomposing so that
/// floating-point drift in matrices that are Hermitian by construction does
/// not leak into the eigensolver; inputs further than
/// [`EIGH_HERMITICITY_TOL`] from Hermitian are rejected.
pub fn eigh(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            context: "eigh",
            expected: a.rows(),
            got: a.cols(),
        });
    }
    let dev = a.hermiticity_deviation();
    if dev > EIGH_HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let n = a.rows();
    let sym = a.hermitize();
    let eig = to_nalgebra(&sym).symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            eigenvectors[(r, dst)] = eig.eigenvectors[(r, src)];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only, ascending.
pub fn eigvalsh(a: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(eigh(a)?.eigenvalues)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    Ok(eigvalsh(a)?[0])
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn max_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    Ok(*eigvalsh(a)?.last().expect("non-empty spectrum"))
}

/// Reassemble `V f(λ) V†` from a decomposition, applying `f` to each eigenvalue.
pub fn assemble_function(eig: &EigenDecomposition, f: impl Fn(f64) -> C64) -> ComplexMatrix {
    let n = eig.eigenvalues.len();
    let v = &eig.eigenvectors;
    let mut scaled = ComplexMatrix::zeros(n, n);
    for c in 0..n {
        let fv = f(eig.eigenvalues[c]);
        for r in 0..n {
            scaled[(r, c)] = v[(r, c)] * fv;
        }
    }
    scaled.matmul(&v.dagger())
}
