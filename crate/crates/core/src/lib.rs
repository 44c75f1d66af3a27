//! Quantum reservoir computing workbench: CPTP reservoir channels on density
//! matrices, readout classes trained on synthetic stationary time series, and
//! closed-form Rademacher-complexity / generalisation-risk bounds with
//! empirical validation of every theoretical constant.

pub mod bounds;
pub mod channels;
pub mod error;
pub mod learning;
pub mod linalg;
pub mod processes;
pub mod readouts;

pub use error::{Error, Result};
