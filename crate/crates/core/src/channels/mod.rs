// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Dephasing channels and their Kraus machinery.
//!
//! Both channels act on a qubit as `ρ ↦ ½(1+f) ρ + ½(1−f) σ_z ρ σ_z`: the
//! populations are untouched and the coherences are scaled by a single real
//! factor `f`. For RTN `f = Λ(t)`; for NMD `f = Ω(p)`.

mod kraus;
mod nmd;
mod rtn;

pub use kraus::{apply_channel, KrausSet, COMPLETENESS_TOL};
pub use nmd::{
    nmd_critical_points, nmd_decoherence_rate, nmd_kappa, nmd_kraus, nmd_omega, nmd_omega_derivative, NmdParams,
    SINGULAR_GUARD,
};
pub use rtn::{
    rtn_decoherence_rate, rtn_kraus, rtn_memory_derivative, rtn_memory_factor, Damping, RtnParams, BRANCH_GUARD,
    ZERO_GUARD,
};

use crate::error::{domain, Result};
use crate::mat2::{Mat2, C64};
use crate::qstate::{DensityMatrix, VALIDITY_TOL};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which channel family a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChannelKind {
    Rtn,
    Nmd,
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelKind::Rtn => "rtn",
            ChannelKind::Nmd => "nmd",
        })
    }
}

/// Channel family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Channel {
    Rtn(RtnParams),
    Nmd(NmdParams),
}

impl Channel {
    pub fn kind(&self) -> ChannelKind {
        match self {
            Channel::Rtn(_) => ChannelKind::Rtn,
            Channel::Nmd(_) => ChannelKind::Nmd,
        }
    }

    /// Evaluates the channel at abscissa `x` (`t` for RTN, `p` for NMD).
    pub fn at(&self, x: f64) -> Result<ChannelPoint> {
        match *self {
            Channel::Rtn(params) => ChannelPoint::rtn(params, x),
            Channel::Nmd(params) => ChannelPoint::nmd(params, x),
        }
    }

    /// Dephasing factor at `x`.
    pub fn factor(&self, x: f64) -> Result<f64> {
        match self {
            Channel::Rtn(params) => rtn_memory_factor(params, x),
            Channel::Nmd(params) => nmd_omega(params, x),
        }
    }

    /// Derivative of the dephasing factor along the abscissa.
    pub fn factor_derivative(&self, x: f64) -> Result<f64> {
        match self {
            Channel::Rtn(params) => rtn_memory_derivative(params, x),
            Channel::Nmd(params) => nmd_omega_derivative(params, x),
        }
    }

    pub fn kraus(&self, x: f64) -> Result<KrausSet> {
        match self {
            Channel::Rtn(params) => rtn_kraus(params, x),
            Channel::Nmd(params) => nmd_kraus(params, x),
        }
    }

    pub fn decoherence_rate(&self, x: f64) -> Result<f64> {
        match self {
            Channel::Rtn(params) => rtn_decoherence_rate(params, x),
            Channel::Nmd(params) => nmd_decoherence_rate(params, x),
        }
    }
}

/// A channel evaluated at one instant, with its dephasing factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelPoint {
    pub channel: Channel,
    /// `t` for RTN, `p` for NMD.
    pub abscissa: f64,
    pub factor: f64,
}

impl ChannelPoint {
    pub fn rtn(params: RtnParams, t: f64) -> Result<Self> {
        let factor = rtn_memory_factor(&params, t)?;
        Ok(ChannelPoint { channel: Channel::Rtn(params), abscissa: t, factor })
    }

    pub fn nmd(params: NmdParams, p: f64) -> Result<Self> {
        let factor = nmd_omega(&params, p)?;
        Ok(ChannelPoint { channel: Channel::Nmd(params), abscissa: p, factor })
    }

    pub fn kraus(&self) -> KrausSet {
        // the abscissa was validated on construction
        self.channel.kraus(self.abscissa).expect("validated channel point")
    }

    pub fn decoherence_rate(&self) -> Result<f64> {
        self.channel.decoherence_rate(self.abscissa)
    }

    pub fn regime(&self) -> RegimeTag {
        classify_regime(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeTag {
    Markovian,
    NonMarkovian,
    Boundary,
}

impl fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegimeTag::Markovian => "Markovian",
            RegimeTag::NonMarkovian => "NonMarkovian",
            RegimeTag::Boundary => "Boundary",
        })
    }
}

/// RTN: non-Markovian iff `2a > γ`, independent of `t`.
/// NMD: non-Markovian iff `p > r₋`; ordinary dephasing (`α = 0`) is always Markovian.
pub fn classify_regime(point: &ChannelPoint) -> RegimeTag {
    match point.channel {
        Channel::Rtn(params) => match params.branch() {
            Damping::Underdamped { .. } => RegimeTag::NonMarkovian,
            Damping::Critical => RegimeTag::Boundary,
            Damping::Overdamped { .. } => RegimeTag::Markovian,
        },
        Channel::Nmd(params) => match nmd_critical_points(&params) {
            None => RegimeTag::Markovian,
            Some((r_minus, _)) => {
                let d = point.abscissa - r_minus;
                if d.abs() <= 1e-12 {
                    RegimeTag::Boundary
                } else if d > 0.0 {
                    RegimeTag::NonMarkovian
                } else {
                    RegimeTag::Markovian
                }
            }
        },
    }
}

/// The pure state `(θ, φ)` with its coherences scaled by `f`.
pub fn dephased_state(f: f64, theta: f64, phi: f64) -> Result<DensityMatrix> {
    if f.is_nan() || f.abs() > 1.0 + VALIDITY_TOL {
        return Err(domain("f", f, "[-1, 1]"));
    }
    let (s, c) = (theta / 2.0).sin_cos();
    let off = C64::from_polar(0.5 * f * theta.sin(), -phi);
    Ok(DensityMatrix::from_trusted(Mat2::new(C64::new(c * c, 0.0), off, off.conj(), C64::new(s * s, 0.0))))
}
