//! Superoperator and Choi representations of linear maps on operators.
//!
//! A channel `T` acting on `d x d` operators is represented by the `d² x d²`
//! matrix `T̂` satisfying `vec(T(A)) = T̂ vec(A)` under the crate's
//! column-major vectorisation.

use crate::error::{Error, Result};
use crate::linalg::eigen::{eigvalsh, max_eigenvalue};
use crate::linalg::matrix::{C64, ComplexMatrix};

/// Matrix representation of a linear map on the operator space of a
/// `d`-dimensional system.
#[derive(Debug, Clone)]
pub struct Superoperator {
    state_dim: usize,
    matrix: ComplexMatrix,
}

impl Superoperator {
    /// Dimension `d` of the underlying system.
    pub fn state_dim(&self) -> usize {
        self.state_dim
    }

    /// Dimension `d²` of the operator space the map acts on.
    pub fn dim(&self) -> usize {
        self.state_dim * self.state_dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Apply the represented map to an operator.
    pub fn apply(&self, a: &ComplexMatrix) -> Result<ComplexMatrix> {
        if a.rows() != self.state_dim || a.cols() != self.state_dim {
            return Err(Error::DimensionMismatch {
                context: "Superoperator::apply",
                expected: self.state_dim,
                got: a.rows(),
            });
        }
        let v = a.vec_col_major();
        let d2 = self.dim();
        let mut out = vec![C64::new(0.0, 0.0); d2];
        for (r, slot) in out.iter_mut().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for (c, &x) in v.iter().enumerate() {
                acc += self.matrix[(r, c)] * x;
            }
            *slot = acc;
        }
        ComplexMatrix::from_vec_col_major(self.state_dim, self.state_dim, &out)
    }

    /// Image of the matrix unit whose column-major vec index is `k`.
    fn column_as_operator(&self, k: usize) -> ComplexMatrix {
        let d = self.state_dim;
        let mut v = vec![C64::new(0.0, 0.0); d * d];
        for (r, slot) in v.iter_mut().enumerate() {
            *slot = self.matrix[(r, k)];
        }
        ComplexMatrix::from_vec_col_major(d, d, &v).expect("column has d² entries")
    }
}

/// Probe tolerance for the linearity check in [`to_superoperator`].
pub const LINEARITY_TOL: f64 = 1e-9;

/// Build the superoperator of a channel by probing it with the matrix-unit
/// basis, then verify linearity on random superpositions of two basis
/// elements.
pub fn to_superoperator<F>(channel: F, state_dim: usize) -> Result<Superoperator>
where
    F: Fn(&ComplexMatrix) -> Result<ComplexMatrix>,
{
    let d = state_dim;
    let d2 = d * d;
    let mut matrix = ComplexMatrix::zeros(d2, d2);
    for c in 0..d {
        for r in 0..d {
            let k = c * d + r; // vec index of E_{rc}
            let image = channel(&ComplexMatrix::matrix_unit(d, r, c))?;
            if image.rows() != d || image.cols() != d {
                return Err(Error::DimensionMismatch {
                    context: "to_superoperator channel output",
                    expected: d,
                    got: image.rows(),
                });
            }
            for (row, &z) in image.vec_col_major().iter().enumerate() {
                matrix[(row, k)] = z;
            }
        }
    }
    let superop = Superoperator {
        state_dim: d,
        matrix,
    };

    // Deterministic superposition probes: a linear map must act on a
    // combination of basis elements exactly as the assembled matrix predicts.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
    };
    for _ in 0..4 {
        let mut probe = ComplexMatrix::zeros(d, d);
        for _ in 0..3 {
            let r = (next().abs() * d as f64) as usize % d;
            let c = (next().abs() * d as f64) as usize % d;
            probe[(r, c)] += C64::new(next(), next());
        }
        let direct = channel(&probe)?;
        let via_matrix = superop.apply(&probe)?;
        let dev = direct.sub(&via_matrix).max_abs();
        if dev > LINEARITY_TOL {
            return Err(Error::NonlinearChannel { deviation: dev });
        }
    }
    Ok(superop)
}

/// Choi matrix `Σ_{rc} E_{rc} ⊗ T(E_{rc})`; positive semidefinite iff the map
/// is completely positive.
pub fn choi_matrix(superop: &Superoperator) -> ComplexMatrix {
    let d = superop.state_dim();
    let mut choi = ComplexMatrix::zeros(d * d, d * d);
    for r in 0..d {
        for c in 0..d {
            let image = superop.column_as_operator(c * d + r);
            // E_{rc} ⊗ image occupies the (r, c) block of the d² x d² matrix.
            for ir in 0..d {
                for ic in 0..d {
                    choi[(r * d + ir, c * d + ic)] = image[(ir, ic)];
                }
            }
        }
    }
    choi
}

/// Outcome of a CPTP check.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct CptpReport {
    /// Largest deviation `|tr T(E) - tr E|` over the matrix-unit basis.
    pub trace_dev: f64,
    /// Smallest eigenvalue of the Choi matrix.
    pub min_choi_eig: f64,
}

/// Trace-preservation tolerance for [`CptpReport::passes`].
pub const CPTP_TRACE_TOL: f64 = 1e-10;
/// Choi-eigenvalue tolerance for [`CptpReport::passes`].
pub const CPTP_EIG_TOL: f64 = -1e-10;

impl CptpReport {
    pub fn passes(&self) -> bool {
        self.trace_dev <= CPTP_TRACE_TOL && self.min_choi_eig >= CPTP_EIG_TOL
    }
}

/// Certify complete positivity and trace preservation of the represented map.
pub fn verify_cptp(superop: &Superoperator) -> Result<CptpReport> {
    let d = superop.state_dim();
    let mut trace_dev: f64 = 0.0;
    for r in 0..d {
        for c in 0..d {
            let image = superop.column_as_operator(c * d + r);
            let expected = if r == c { 1.0 } else { 0.0 };
            let tr = image.trace();
            let dev = ((tr.re - expected).powi(2) + tr.im.powi(2)).sqrt();
            trace_dev = trace_dev.max(dev);
        }
    }
    let choi = choi_matrix(superop).hermitize();
    let eigs = eigvalsh(&choi)?;
    Ok(CptpReport {
        trace_dev,
        min_choi_eig: eigs[0],
    })
}

/// Orthonormal basis of the traceless Hermitian operators on a
/// `d`-dimensional system (generalised Gell-Mann construction, orthonormal
/// under the Hilbert-Schmidt inner product). Returns `d² - 1` matrices.
pub fn traceless_hermitian_basis(d: usize) -> Vec<ComplexMatrix> {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut basis = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in (j + 1)..d {
            // symmetric: (E_jk + E_kj)/sqrt(2)
            let mut sym = ComplexMatrix::zeros(d, d);
            sym[(j, k)] = C64::new(inv_sqrt2, 0.0);
            sym[(k, j)] = C64::new(inv_sqrt2, 0.0);
            basis.push(sym);
            // antisymmetric: -i(E_jk - E_kj)/sqrt(2)
            let mut asym = ComplexMatrix::zeros(d, d);
            asym[(j, k)] = C64::new(0.0, -inv_sqrt2);
            asym[(k, j)] = C64::new(0.0, inv_sqrt2);
            basis.push(asym);
        }
    }
    for l in 1..d {
        // diagonal: (E_00 + ... + E_{l-1,l-1} - l E_ll)/sqrt(l(l+1))
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = ComplexMatrix::zeros(d, d);
        for m in 0..l {
            diag[(m, m)] = C64::new(norm, 0.0);
        }
        diag[(l, l)] = C64::new(-(l as f64) * norm, 0.0);
        basis.push(diag);
    }
    basis
}

/// Operator 2-norm of the map restricted to the traceless Hermitian
/// hyperplane: the largest singular value of `T̂` acting on that subspace.
pub fn traceless_restricted_norm(superop: &Superoperator) -> Result<f64> {
    let d = superop.state_dim();
    let basis = traceless_hermitian_basis(d);
    let d2 = d * d;
    let k = basis.len();
    // Columns of N are the vectorised images of the basis elements.
    let mut n = ComplexMatrix::zeros(d2, k);
    for (col, g) in basis.iter().enumerate() {
        let image = superop.apply(g)?;
        for (row, &z) in image.vec_col_major().iter().enumerate() {
            n[(row, col)] = z;
        }
    }
    let gram = n.dagger().matmul(&n).hermitize();
    Ok(max_eigenvalue(&gram)?.max(0.0).sqrt())
}

/// Operator 2-norm of the full map: the largest singular value of `T̂`.
pub fn operator_two_norm(superop: &Superoperator) -> Result<f64> {
    let gram = superop
        .matrix()
        .dagger()
        .matmul(superop.matrix())
        .hermitize();
    Ok(max_eigenvalue(&gram)?.max(0.0).sqrt())
}
