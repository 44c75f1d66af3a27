//! Dense complex linear algebra and quantum primitives: Pauli operators,
//! Kronecker products, partial trace, Hermitian matrix exponentials,
//! Schatten/weighted norms, superoperator and Choi representations.
//!
//! Everything here is a pure function of its inputs; values are freely
//! shareable across threads.

mod density;
mod eigen;
mod matrix;
mod superop;

pub use density::{
    maximally_mixed, random_density, random_density_with, DensityMatrix, DENSITY_HERMITICITY_TOL,
    DENSITY_MIN_EIG, DENSITY_TRACE_TOL,
};
pub use eigen::{
    assemble_function, eigh, eigvalsh, max_eigenvalue, min_eigenvalue, EigenDecomposition,
};
pub use matrix::{schatten2, C64, ComplexMatrix};
pub use superop::{
    choi_matrix, operator_two_norm, to_superoperator, traceless_hermitian_basis,
    traceless_restricted_norm, verify_cptp, CptpReport, Superoperator, CPTP_EIG_TOL,
    CPTP_TRACE_TOL,
};

use crate::error::{Error, Result};

/// Hermiticity tolerance required of Hamiltonians passed to [`hermitian_exp`].
pub const HAMILTONIAN_HERMITICITY_TOL: f64 = 1e-12;

/// A Pauli axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    /// The single-qubit 2x2 matrix.
    pub fn matrix(self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(2, 2);
        match self {
            PauliAxis::X => {
                m[(0, 1)] = C64::new(1.0, 0.0);
                m[(1, 0)] = C64::new(1.0, 0.0);
            }
            PauliAxis::Y => {
                m[(0, 1)] = C64::new(0.0, -1.0);
                m[(1, 0)] = C64::new(0.0, 1.0);
            }
            PauliAxis::Z => {
                m[(0, 0)] = C64::new(1.0, 0.0);
                m[(1, 1)] = C64::new(-1.0, 0.0);
            }
        }
        m
    }
}

/// Pauli operator acting on one qubit of an `n_total`-qubit register:
/// `I ⊗ … ⊗ σ ⊗ … ⊗ I` with `σ` in tensor slot `qubit_index` (0-based,
/// slot 0 is the leftmost factor).
pub fn pauli(axis: PauliAxis, qubit_index: usize, n_total: usize) -> Result<ComplexMatrix> {
    if qubit_index >= n_total {
        return Err(Error::QubitIndexOutOfRange {
            index: qubit_index,
            n_total,
        });
    }
    let left = ComplexMatrix::identity(1 << qubit_index);
    let right = ComplexMatrix::identity(1 << (n_total - qubit_index - 1));
    Ok(left.kron(&axis.matrix()).kron(&right))
}

/// Partial trace over the first tensor factor: for `A` acting on
/// `C^{first_dim} ⊗ C^{sub}`, returns `B` with
/// `B_{kl} = Σ_i A_{(i,k),(i,l)}`. Preserves the trace.
pub fn partial_trace_first(a: &ComplexMatrix, first_dim: usize) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            context: "partial_trace_first",
            expected: a.rows(),
            got: a.cols(),
        });
    }
    if first_dim == 0 || a.rows() % first_dim != 0 {
        return Err(Error::DimensionMismatch {
            context: "partial_trace_first factor",
            expected: first_dim,
            got: a.rows(),
        });
    }
    let sub = a.rows() / first_dim;
    let mut out = ComplexMatrix::zeros(sub, sub);
    for i in 0..first_dim {
        for k in 0..sub {
            for l in 0..sub {
                out[(k, l)] += a[(i * sub + k, i * sub + l)];
            }
        }
    }
    Ok(out)
}

/// Unitary `e^{-i H t}` of a Hermitian `H` via eigendecomposition.
pub fn hermitian_exp(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let dev = h.hermiticity_deviation();
    if dev > HAMILTONIAN_HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let eig = eigh(h)?;
    Ok(assemble_function(&eig, |lambda| {
        let phase = -lambda * t;
        C64::new(phase.cos(), phase.sin())
    }))
}

/// Weighted sequence norm `Σ_t |v_t| w_{-t}` of a left-infinite sequence with
/// finite support. The slice `v` lists `(v_{-(L-1)}, …, v_{-1}, v_0)`, so the
/// last element pairs with `w[0]`. Requires `w` strictly positive and
/// strictly decreasing.
pub fn weighted_seq_norm(v: &[f64], w: &[f64]) -> Result<f64> {
    if w.len() < v.len() {
        return Err(Error::DimensionMismatch {
            context: "weighted_seq_norm weights",
            expected: v.len(),
            got: w.len(),
        });
    }
    if w.iter().any(|&x| x <= 0.0) || w.windows(2).any(|p| p[1] >= p[0]) {
        return Err(Error::InvalidWeightSequence);
    }
    Ok(v.iter()
        .rev()
        .zip(w.iter())
        .map(|(&vt, &wt)| vt.abs() * wt)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    // Independent 2x2 kron oracle, written out entry by entry.
    fn kron_oracle_2x2(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                    }
                }
            }
        }
        out
    }

    #[test]
    fn pauli_z_single_qubit_is_diag() {
        let z = pauli(PauliAxis::Z, 0, 1).unwrap();
        assert_eq!(z[(0, 0)], c(1.0, 0.0));
        assert_eq!(z[(1, 1)], c(-1.0, 0.0));
        assert_eq!(z[(0, 1)], c(0.0, 0.0));
        assert_eq!(z[(1, 0)], c(0.0, 0.0));
    }

    #[test]
    fn pauli_z_expectation_on_zero_state() {
        let z = pauli(PauliAxis::Z, 0, 1).unwrap();
        let proj = ComplexMatrix::basis_projector(2, 0);
        let val = z.matmul(&proj).trace();
        assert_relative_eq!(val.re, 1.0, max_relative = 1e-14);
        assert!(val.im.abs() < 1e-14);
    }

    #[test]
    fn pauli_x_on_second_qubit_matches_kron_oracle() {
        let got = pauli(PauliAxis::X, 1, 2).unwrap();
        let expected = kron_oracle_2x2(&ComplexMatrix::identity(2), &PauliAxis::X.matrix());
        assert!(got.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn pauli_is_hermitian_unitary_traceless() {
        for axis in [PauliAxis::X, PauliAxis::Y, PauliAxis::Z] {
            for n in 1..=4 {
                for q in 0..n {
                    let p = pauli(axis, q, n).unwrap();
                    assert!(p.hermiticity_deviation() < 1e-15);
                    assert!(p.unitarity_deviation() < 1e-12);
                    assert!(p.trace().norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn pauli_index_out_of_range_errors() {
        assert!(matches!(
            pauli(PauliAxis::X, 2, 2),
            Err(Error::QubitIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn partial_trace_of_product_state_recovers_second_factor() {
        let eta = random_density(1, 7);
        let rho = random_density(2, 8);
        let joint = eta.matrix().kron(rho.matrix());
        let traced = partial_trace_first(&joint, 2).unwrap();
        assert!(traced.approx_eq(rho.matrix(), 1e-13));
    }

    #[test]
    fn partial_trace_of_maximally_mixed() {
        let joint = ComplexMatrix::identity(4).scale_re(0.25);
        let traced = partial_trace_first(&joint, 2).unwrap();
        assert!(traced.approx_eq(&ComplexMatrix::identity(2).scale_re(0.5), 1e-15));
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        // |Φ+> = (|00> + |11>)/sqrt(2), written out as an explicit 4x4 matrix.
        let mut bell = ComplexMatrix::zeros(4, 4);
        for &r in &[0usize, 3] {
            for &cidx in &[0usize, 3] {
                bell[(r, cidx)] = c(0.5, 0.0);
            }
        }
        let traced = partial_trace_first(&bell, 2).unwrap();
        assert!(traced.approx_eq(&ComplexMatrix::identity(2).scale_re(0.5), 1e-15));
    }

    #[test]
    fn partial_trace_preserves_trace_on_random_inputs() {
        for n in 2..=5 {
            let rho = random_density(n, 100 + n as u64);
            let traced = partial_trace_first(rho.matrix(), 2).unwrap();
            assert!((traced.trace() - rho.matrix().trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_dimension_mismatch_errors() {
        let m = ComplexMatrix::identity(6);
        assert!(partial_trace_first(&m, 4).is_err());
    }

    #[test]
    fn hermitian_exp_of_sigma_z() {
        let z = PauliAxis::Z.matrix();
        let u = hermitian_exp(&z, std::f64::consts::FRAC_PI_2).unwrap();
        assert!((u[(0, 0)] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((u[(1, 1)] - c(0.0, 1.0)).norm() < 1e-14);
        assert!(u[(0, 1)].norm() < 1e-14 && u[(1, 0)].norm() < 1e-14);
    }

    #[test]
    fn hermitian_exp_at_zero_time_is_identity() {
        let h = pauli(PauliAxis::Y, 0, 2).unwrap();
        let u = hermitian_exp(&h, 0.0).unwrap();
        assert!(u.approx_eq(&ComplexMatrix::identity(4), 1e-13));
    }

    // Series-summation oracle for the matrix exponential: Σ (-iHt)^k / k!.
    fn exp_series_oracle(h: &ComplexMatrix, t: f64) -> ComplexMatrix {
        let d = h.rows();
        let step = h.scale(c(0.0, -t));
        let mut term = ComplexMatrix::identity(d);
        let mut sum = ComplexMatrix::identity(d);
        for k in 1..60 {
            term = term.matmul(&step).scale_re(1.0 / k as f64);
            sum = sum.add(&term);
        }
        sum
    }

    #[test]
    fn hermitian_exp_of_sigma_x_at_pi_is_minus_identity() {
        let x = PauliAxis::X.matrix();
        let u = hermitian_exp(&x, std::f64::consts::PI).unwrap();
        assert!(u.approx_eq(&ComplexMatrix::identity(2).scale_re(-1.0), 1e-12));
        assert!(u.approx_eq(&exp_series_oracle(&x, std::f64::consts::PI), 1e-11));
    }

    #[test]
    fn hermitian_exp_matches_series_on_random_hamiltonian() {
        let g = random_density(2, 42).into_matrix().scale_re(3.0);
        let h = g.hermitize();
        let u = hermitian_exp(&h, 0.73).unwrap();
        assert!(u.approx_eq(&exp_series_oracle(&h, 0.73), 1e-11));
    }

    #[test]
    fn hermitian_exp_is_unitary_and_a_one_parameter_group() {
        let h = {
            let a = pauli(PauliAxis::X, 0, 2).unwrap();
            let b = pauli(PauliAxis::Z, 1, 2).unwrap();
            a.add(&b.scale_re(0.7))
        };
        let (s, t) = (0.31, 1.27);
        let us = hermitian_exp(&h, s).unwrap();
        let ut = hermitian_exp(&h, t).unwrap();
        let ust = hermitian_exp(&h, s + t).unwrap();
        assert!(us.unitarity_deviation() < 1e-10);
        assert!(us.matmul(&ut).approx_eq(&ust, 1e-9));
    }

    #[test]
    fn hermitian_exp_rejects_non_hermitian() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(
            hermitian_exp(&m, 1.0),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn schatten2_examples() {
        assert_relative_eq!(
            schatten2(&ComplexMatrix::identity(2)),
            2f64.sqrt(),
            max_relative = 1e-15
        );
        assert_eq!(schatten2(&ComplexMatrix::zeros(3, 3)), 0.0);
        let xz = PauliAxis::X.matrix().add(&PauliAxis::Z.matrix());
        // eigenvalues ±sqrt(2), so the norm is 2
        assert_relative_eq!(schatten2(&xz), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn weighted_seq_norm_two_term_example() {
        // v = (…, 0, v_{-1} = 1, v_0 = 2), w_t = 0.5^t
        let v = [1.0, 2.0];
        let w = [1.0, 0.5, 0.25];
        assert_relative_eq!(weighted_seq_norm(&v, &w).unwrap(), 2.5, max_relative = 1e-15);
    }

    #[test]
    fn weighted_seq_norm_of_zero_sequence() {
        let w = [1.0, 0.5, 0.25];
        assert_eq!(weighted_seq_norm(&[0.0, 0.0, 0.0], &w).unwrap(), 0.0);
    }

    #[test]
    fn weighted_seq_norm_matches_term_by_term_oracle() {
        let lambda: f64 = 0.8;
        let mu: f64 = 0.6;
        let v: Vec<f64> = (0..10).map(|j| mu.powi(j)).collect();
        let w: Vec<f64> = (0..10).map(|j| lambda.powi(j)).collect();
        let mut expected = 0.0;
        for j in 0..10 {
            // v[9 - j] carries time -j
            expected += v[9 - j].abs() * lambda.powi(j as i32);
        }
        assert_relative_eq!(
            weighted_seq_norm(&v, &w).unwrap(),
            expected,
            max_relative = 1e-14
        );
    }

    #[test]
    fn weighted_seq_norm_rejects_non_decreasing_weights() {
        assert!(matches!(
            weighted_seq_norm(&[1.0], &[0.5, 0.5]),
            Err(Error::InvalidWeightSequence)
        ));
        assert!(matches!(
            weighted_seq_norm(&[1.0], &[-1.0, -2.0]),
            Err(Error::InvalidWeightSequence)
        ));
    }

    #[test]
    fn maximally_mixed_single_qubit() {
        let mm = maximally_mixed(1);
        assert!(mm
            .matrix()
            .approx_eq(&ComplexMatrix::identity(2).scale_re(0.5), 1e-15));
    }

    #[test]
    fn maximally_mixed_has_zero_z_expectations() {
        for n in 1..=3 {
            let mm = maximally_mixed(n);
            for i in 0..n {
                let z = pauli(PauliAxis::Z, i, n).unwrap();
                assert!(z.matmul(mm.matrix()).trace().norm() < 1e-14);
            }
        }
    }

    #[test]
    fn random_density_invariants_hold_across_seeds() {
        for n in 1..=4 {
            for seed in 0..250u64 {
                let rho = random_density(n, seed * 4 + n as u64);
                rho.validate().unwrap();
            }
        }
    }

    proptest! {
        #[test]
        fn schatten2_equals_vectorised_two_norm(entries in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 16)) {
            let data: Vec<C64> = entries.iter().map(|&(re, im)| c(re, im)).collect();
            let m = ComplexMatrix::from_entries(4, 4, data).unwrap();
            let vec_norm = m.vec_col_major().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            prop_assert!((schatten2(&m) - vec_norm).abs() <= 1e-12 * (1.0 + vec_norm));
        }
    }
}
