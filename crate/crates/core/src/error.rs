// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the channel and information-measure routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument lies outside the domain of the operation.
    #[error("{name} = {value} is outside the domain {domain}")]
    Domain { name: &'static str, value: f64, domain: &'static str },

    /// A matrix or vector does not describe a physical qubit state.
    #[error("non-physical state: {0}")]
    Validity(String),

    /// Kraus operators fail the trace-preservation condition.
    #[error("Kraus set is not complete: max |Σ K†K − 1| = {deviation:e}")]
    Completeness { deviation: f64 },

    /// A rate diverges at (or within the guard radius of) `location`.
    #[error("decoherence rate is singular near {location}")]
    Singular { location: f64 },

    #[error("dimension {0} is not supported (qubits only)")]
    UnsupportedDimension(usize),

    /// Malformed caller input such as unsorted series or bad sweep configs.
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, domain: &'static str) -> Error {
    Error::Domain { name, value, domain }
}
