// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Single-qubit states and state-level information measures.
//!
//! Bloch vectors use the half-length convention `ρ = ½𝟙 + ζ·σ`, so a pure
//! state has `|ζ| = ½` and the maximally mixed state has `ζ = 0`. The Pauli
//! basis is the standard one with `σ_z` diagonal.

use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64};
use serde::{Deserialize, Serialize};

/// Tolerance for the physical-validity checks on states.
pub const VALIDITY_TOL: f64 = 1e-12;

const PAULIS: [Mat2; 3] = [Mat2::PAULI_X, Mat2::PAULI_Y, Mat2::PAULI_Z];

/// A validated 2×2 density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(Mat2);

impl DensityMatrix {
    /// Checks hermiticity, unit trace and positivity.
    pub fn new(m: Mat2) -> Result<Self> {
        let herm = m.max_abs_diff(&m.adjoint());
        if herm > VALIDITY_TOL {
            return Err(Error::Validity(format!("not Hermitian (deviation {herm:e})")));
        }
        let tr = m.trace();
        if (tr - C64::new(1.0, 0.0)).norm() > VALIDITY_TOL {
            return Err(Error::Validity(format!("trace {tr} differs from 1")));
        }
        let det = m.det().re;
        if det < -VALIDITY_TOL || m.get(0, 0).re < -VALIDITY_TOL || m.get(1, 1).re < -VALIDITY_TOL {
            return Err(Error::Validity(format!("not positive semidefinite (det {det:e})")));
        }
        Ok(DensityMatrix(m))
    }

    /// Wraps a matrix that is valid by construction.
    pub(crate) fn from_trusted(m: Mat2) -> Self {
        debug_assert!(DensityMatrix::new(m).is_ok(), "trusted state failed validation: {m:?}");
        DensityMatrix(m)
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix(Mat2::IDENTITY.scale_real(0.5))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.0.get(i, j)
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

/// Bloch vector ζ with `ρ = ½𝟙 + ζ·σ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub zeta: [f64; 3],
}

impl BlochVector {
    pub const ORIGIN: BlochVector = BlochVector { zeta: [0.0; 3] };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        BlochVector { zeta: [x, y, z] }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.zeta.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn dot(&self, other: &[f64; 3]) -> f64 {
        self.zeta.iter().zip(other).map(|(a, b)| a * b).sum()
    }
}

/// Eigenvalues of a qubit state, `lambda_plus ≥ lambda_minus`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

/// The pure state `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩` as a density matrix.
pub fn pure_qubit(theta: f64, phi: f64) -> DensityMatrix {
    let (s, c) = (theta / 2.0).sin_cos();
    let off = C64::from_polar(s * c, -phi);
    DensityMatrix::from_trusted(Mat2::new(C64::new(c * c, 0.0), off, off.conj(), C64::new(s * s, 0.0)))
}

/// `ζ_k = ½ Tr(ρ σ_k)`.
pub fn bloch_of(rho: &DensityMatrix) -> BlochVector {
    let zeta = PAULIS.map(|p| 0.5 * (*rho.matrix() * p).trace().re);
    BlochVector { zeta }
}

/// Inverse of [`bloch_of`]; rejects vectors longer than ½.
pub fn density_of(zeta: &BlochVector) -> Result<DensityMatrix> {
    let n = zeta.norm();
    if n > 0.5 + VALIDITY_TOL {
        return Err(Error::Validity(format!("|ζ| = {n} exceeds 1/2")));
    }
    let [x, y, z] = zeta.zeta;
    let m = Mat2::new(C64::new(0.5 + z, 0.0), C64::new(x, -y), C64::new(x, y), C64::new(0.5 - z, 0.0));
    Ok(DensityMatrix::from_trusted(m))
}

/// `Tr ρ²`, computed as the squared Frobenius norm of the Hermitian matrix.
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.matrix().0.iter().flatten().map(|z| z.norm_sqr()).sum()
}

/// `M = 2(1 − Tr ρ²)`; 0 for pure states, 1 for ½𝟙.
pub fn mixedness(rho: &DensityMatrix) -> f64 {
    2.0 * (1.0 - purity(rho))
}

/// l1 coherence: sum of moduli of the off-diagonal entries.
pub fn coherence_l1(rho: &DensityMatrix) -> f64 {
    rho.get(0, 1).norm() + rho.get(1, 0).norm()
}

/// Closed-form qubit eigenvalues `½(Tr ρ ± √((ρ₀₀−ρ₁₁)² + 4|ρ₀₁|²))`.
///
/// The discriminant is the expansion of `(Tr ρ)² − 4 det ρ` for a Hermitian
/// matrix; evaluating it through `hypot` keeps full precision near `½𝟙`,
/// where the `1 − 4 det ρ` form loses half the digits.
pub fn spectrum(rho: &DensityMatrix) -> Spectrum {
    let a = rho.get(0, 0).re;
    let d = rho.get(1, 1).re;
    let gap = (a - d).hypot(2.0 * rho.get(0, 1).norm());
    let tr = a + d;
    Spectrum { lambda_plus: 0.5 * (tr + gap), lambda_minus: (0.5 * (tr - gap)).max(0.0) }
}

/// `−x log₂ x` with the continuous extension `0·log 0 = 0`.
pub(crate) fn entropy_term_bits(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Shannon entropy in bits of the distribution `(x, 1 − x)`.
pub fn binary_entropy_bits(x: f64) -> f64 {
    entropy_term_bits(x) + entropy_term_bits(1.0 - x)
}

/// Von Neumann entropy `−Σ λ log₂ λ`.
pub fn vn_entropy_bits(rho: &DensityMatrix) -> f64 {
    let s = spectrum(rho);
    entropy_term_bits(s.lambda_plus) + entropy_term_bits(s.lambda_minus)
}

/// Coherence–mixedness balance `β = C²/(d−1)² + M`, bounded above by 1.
pub fn beta_balance(rho: &DensityMatrix, d: usize) -> Result<f64> {
    if d != 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    let c = coherence_l1(rho);
    let dm1 = (d - 1) as f64;
    Ok(c * c / (dm1 * dm1) + mixedness(rho))
}
