// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::qstate::DensityMatrix;

/// Completeness tolerance, entrywise on `Σ K†K − 𝟙`.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// An ordered list of Kraus operators describing one channel snapshot.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    operators: Vec<Mat2>,
}

impl KrausSet {
    /// Wraps the operators without checking completeness; see [`KrausSet::check_complete`].
    pub fn new(operators: Vec<Mat2>) -> Self {
        KrausSet { operators }
    }

    pub fn identity() -> Self {
        KrausSet::new(vec![Mat2::IDENTITY])
    }

    pub fn operators(&self) -> &[Mat2] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// Max entry of `|Σ K†K − 𝟙|`.
    ///
    /// This is the trace-preservation condition. For the Hermitian operators
    /// of the dephasing channels it coincides with `Σ KK† = 𝟙`.
    pub fn completeness_deviation(&self) -> f64 {
        let sum: Mat2 = self.operators.iter().map(|k| k.adjoint() * *k).sum();
        sum.max_abs_diff(&Mat2::IDENTITY)
    }

    pub fn check_complete(&self) -> Result<()> {
        let deviation = self.completeness_deviation();
        if deviation > COMPLETENESS_TOL {
            Err(Error::Completeness { deviation })
        } else {
            Ok(())
        }
    }
}

/// `ρ ↦ Σ_μ K_μ ρ K_μ†`.
pub fn apply_channel(kraus: &KrausSet, rho: &DensityMatrix) -> Result<DensityMatrix> {
    kraus.check_complete()?;
    let out: Mat2 = kraus.operators.iter().map(|k| k.sandwich(rho.matrix())).sum();
    DensityMatrix::new(out)
}
