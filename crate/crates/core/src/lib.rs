// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Qubit dephasing channels driven by random telegraph noise and by a
//! non-Markovian dephasing family, with the quantum Fisher information,
//! coherence, mixedness, gate fidelity and Holevo quantity they induce.

pub mod analysis;
pub mod channels;
pub mod error;
pub mod infomeasures;
pub mod mat2;
pub mod qfi;
pub mod qstate;
pub mod series;

pub use error::{Error, Result};
