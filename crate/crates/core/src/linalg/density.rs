//! Density matrices.

use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::linalg::eigen::min_eigenvalue;
use crate::linalg::matrix::{C64, ComplexMatrix};

/// Entry-wise Hermiticity tolerance for a valid state.
pub const DENSITY_HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance on `|tr ρ - 1|`.
pub const DENSITY_TRACE_TOL: f64 = 1e-12;
/// Smallest admissible eigenvalue.
pub const DENSITY_MIN_EIG: f64 = -1e-10;

/// Positive unit-trace Hermitian matrix of dimension `2^n`: the reservoir state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity before accepting the
    /// matrix as a state.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let state = Self::from_output(matrix_checked(matrix)?);
        state.validate()?;
        Ok(state)
    }

    /// Wraps a channel output: re-symmetrises via `(A + A†)/2` and checks the
    /// cheap invariants (dimension, trace), deferring the eigenvalue check to
    /// [`DensityMatrix::validate`]. Channel applications preserve positivity
    /// up to rounding, so hot loops use this path and the test suites call
    /// `validate` on sampled outputs.
    pub(crate) fn from_output(matrix: ComplexMatrix) -> Self {
        let dim = matrix.rows();
        debug_assert!(dim.is_power_of_two());
        debug_assert!((matrix.trace().re - 1.0).abs() < 1e-8);
        Self {
            n_qubits: dim.trailing_zeros() as usize,
            matrix: matrix.hermitize(),
        }
    }

    /// Full invariant check: Hermitian to 1e-12, unit trace to 1e-12,
    /// eigenvalues above -1e-10.
    pub fn validate(&self) -> Result<()> {
        let herm = self.matrix.hermiticity_deviation();
        if herm > DENSITY_HERMITICITY_TOL {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("hermiticity deviation {herm:.3e}"),
            });
        }
        let tr = self.matrix.trace();
        if (tr.re - 1.0).abs() > DENSITY_TRACE_TOL || tr.im.abs() > DENSITY_TRACE_TOL {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("trace {tr} not 1"),
            });
        }
        let min_eig = min_eigenvalue(&self.matrix)?;
        if min_eig < DENSITY_MIN_EIG {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("minimum eigenvalue {min_eig:.3e}"),
            });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Computational basis state |index><index|.
    pub fn basis_state(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1 << n_qubits;
        if index >= dim {
            return Err(Error::QubitIndexOutOfRange {
                index,
                n_total: n_qubits,
            });
        }
        Ok(Self {
            n_qubits,
            matrix: ComplexMatrix::basis_projector(dim, index),
        })
    }
}

fn matrix_checked(matrix: ComplexMatrix) -> Result<ComplexMatrix> {
    if !matrix.is_square() {
        return Err(Error::InvalidDensityMatrix {
            reason: format!("non-square {}x{}", matrix.rows(), matrix.cols()),
        });
    }
    if !matrix.rows().is_power_of_two() {
        return Err(Error::InvalidDensityMatrix {
            reason: format!("dimension {} is not a power of two", matrix.rows()),
        });
    }
    if (matrix.trace().re - 1.0).abs() > 1e-6 {
        return Err(Error::InvalidDensityMatrix {
            reason: format!("trace {} far from 1", matrix.trace()),
        });
    }
    Ok(matrix)
}

/// The completely mixed state `I / 2^n`.
pub fn maximally_mixed(n_qubits: usize) -> DensityMatrix {
    let dim = 1usize << n_qubits;
    let matrix = ComplexMatrix::identity(dim).scale_re(1.0 / dim as f64);
    DensityMatrix::from_output(matrix)
}

/// Seeded random state `G G† / tr[G G†]` from a complex Gaussian matrix `G`.
pub fn random_density(n_qubits: usize, seed: u64) -> DensityMatrix {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    random_density_with(n_qubits, &mut rng)
}

/// Random state drawn from a caller-owned generator.
pub fn random_density_with<R: Rng>(n_qubits: usize, rng: &mut R) -> DensityMatrix {
    let dim = 1usize << n_qubits;
    let g = ComplexMatrix::from_fn(dim, dim, |_, _| {
        C64::new(standard_normal(rng), standard_normal(rng))
    });
    let gg = g.matmul(&g.dagger());
    let tr = gg.trace().re;
    DensityMatrix::from_output(gg.scale_re(1.0 / tr))
}

/// Standard normal via Box-Muller.
fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u1: f64 = rng.gen();
        if u1 > f64::MIN_POSITIVE {
            let u2: f64 = rng.gen();
            return (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        }
    }
}
