//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the reservoir simulator and bound calculators.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("qubit index {index} out of range for {n_total} qubits")]
    QubitIndexOutOfRange { index: usize, n_total: usize },

    #[error("matrix is not Hermitian (max entry deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("not a valid density matrix: {reason}")]
    InvalidDensityMatrix { reason: String },

    #[error("weight sequence must be strictly positive and strictly decreasing")]
    InvalidWeightSequence,

    #[error("channel is not linear on the operator space (probe deviation {deviation:.3e})")]
    NonlinearChannel { deviation: f64 },

    #[error("parameter {name} = {value} outside valid range {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("input value {value} outside admissible set {range}")]
    InputOutOfRange { value: f64, range: String },

    #[error("missing coupling entry: expected {expected} coupling values for {n_total} qubits, got {got}")]
    MissingCoupling {
        expected: usize,
        got: usize,
        n_total: usize,
    },

    #[error("base channel contraction constants invalid: r0 = {r0}, r1 = {r1} (need r0 + r1 < 1 and r0 >= r1)")]
    InvalidContractionPair { r0: f64, r1: f64 },

    #[error("the two base channels must differ")]
    IdenticalBaseChannels,

    #[error("empty grid axis: {axis}")]
    EmptyGridAxis { axis: &'static str },

    #[error("ghost sample count must be at least 2, got {got}")]
    GhostCountTooSmall { got: usize },

    #[error("sample count m = {m} exceeds series length {len}")]
    NotEnoughSamples { m: usize, len: usize },

    #[error("horizon {horizon} shorter than washout length {washout}")]
    HorizonTooShort { horizon: usize, washout: usize },

    #[error("invalid readout: {reason}")]
    InvalidReadout { reason: String },

    #[error("invalid process specification: {reason}")]
    InvalidProcessSpec { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
