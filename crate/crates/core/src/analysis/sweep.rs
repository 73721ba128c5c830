// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

use crate::channels::{dephased_state, Channel, ChannelKind, RegimeTag};
use crate::error::{Error, Result};
use crate::infomeasures::{gate_fidelity_dephased, holevo_dephased_closed, holevo_nmd_closed};
use crate::qfi::flow_sample;
use crate::qstate::{beta_balance, coherence_l1, mixedness};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Default number of grid points per sweep.
pub const DEFAULT_STEPS: usize = 2000;

/// One channel, one input state, one abscissa range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub channel: Channel,
    pub theta: f64,
    pub phi: f64,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Input(msg));
        if !(self.theta.is_finite() && self.phi.is_finite()) {
            return bad(format!("state angles must be finite (θ={}, φ={})", self.theta, self.phi));
        }
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return bad(format!("need start < stop, got [{}, {}]", self.start, self.stop));
        }
        if self.steps < 2 {
            return bad(format!("need at least 2 steps, got {}", self.steps));
        }
        if self.start < 0.0 {
            return bad(format!("abscissa must be nonnegative, got start = {}", self.start));
        }
        if self.channel.kind() == ChannelKind::Nmd && self.stop > 0.5 {
            return bad(format!("NMD sweeps end at p ≤ 1/2, got stop = {}", self.stop));
        }
        Ok(())
    }

    /// Uniform grid, with the last point pinned to `stop`.
    pub fn uniform_grid(&self) -> Vec<f64> {
        let n = self.steps;
        let span = self.stop - self.start;
        (0..n).map(|i| if i + 1 == n { self.stop } else { self.start + span * i as f64 / (n - 1) as f64 }).collect()
    }

    /// Uniform grid plus every rate singularity strictly inside the range.
    pub fn grid(&self) -> Vec<f64> {
        merge_grid(self.uniform_grid(), &rate_singularities(&self.channel, self.start, self.stop))
    }
}

pub(crate) fn merge_grid(mut xs: Vec<f64>, extra: &[f64]) -> Vec<f64> {
    for &s in extra {
        let near = xs.iter().any(|x| (x - s).abs() <= 1e-12 * s.abs().max(1.0));
        if !near {
            xs.push(s);
        }
    }
    xs.sort_by(f64::total_cmp);
    xs
}

/// Abscissas in `(start, stop)` where the decoherence rate diverges.
pub fn rate_singularities(channel: &Channel, start: f64, stop: f64) -> Vec<f64> {
    let mut out = Vec::new();
    match channel {
        Channel::Rtn(params) => {
            let mut k = 0;
            while let Some(t) = params.kernel_zero(k) {
                if t >= stop {
                    break;
                }
                if t > start {
                    out.push(t);
                }
                k += 1;
            }
        }
        Channel::Nmd(params) => {
            let root = params.omega_root();
            if root > start && root < stop {
                out.push(root);
            }
        }
    }
    out
}

/// Every facet at one abscissa. `decoherence_rate` is `None` at singular points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub abscissa: f64,
    pub dephasing_factor: f64,
    pub decoherence_rate: Option<f64>,
    pub coherence: f64,
    pub mixedness: f64,
    pub beta: f64,
    pub qfi_theta: f64,
    pub qfi_phi: f64,
    pub flow_theta: f64,
    pub flow_phi: f64,
    pub gate_fidelity: f64,
    pub holevo_closed: f64,
    pub regime: RegimeTag,
}

/// Named per-point quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Facet {
    Lambda,
    Omega,
    Rate,
    Coherence,
    Mixedness,
    Beta,
    QfiTheta,
    QfiPhi,
    FlowTheta,
    FlowPhi,
    GateFidelity,
    Holevo,
}

impl Facet {
    pub const ALL: [Facet; 12] = [
        Facet::Lambda,
        Facet::Omega,
        Facet::Rate,
        Facet::Coherence,
        Facet::Mixedness,
        Facet::Beta,
        Facet::QfiTheta,
        Facet::QfiPhi,
        Facet::FlowTheta,
        Facet::FlowPhi,
        Facet::GateFidelity,
        Facet::Holevo,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Facet::Lambda => "lambda",
            Facet::Omega => "omega",
            Facet::Rate => "rate",
            Facet::Coherence => "coherence",
            Facet::Mixedness => "mixedness",
            Facet::Beta => "beta",
            Facet::QfiTheta => "qfi-theta",
            Facet::QfiPhi => "qfi-phi",
            Facet::FlowTheta => "flow-theta",
            Facet::FlowPhi => "flow-phi",
            Facet::GateFidelity => "gate-fidelity",
            Facet::Holevo => "holevo",
        }
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Facet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Facet::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::Input(format!("unknown facet '{s}'")))
    }
}

impl SweepRecord {
    /// Value of a facet; `None` only for the rate at a singular point.
    pub fn facet(&self, facet: Facet) -> Option<f64> {
        Some(match facet {
            Facet::Lambda | Facet::Omega => self.dephasing_factor,
            Facet::Rate => return self.decoherence_rate,
            Facet::Coherence => self.coherence,
            Facet::Mixedness => self.mixedness,
            Facet::Beta => self.beta,
            Facet::QfiTheta => self.qfi_theta,
            Facet::QfiPhi => self.qfi_phi,
            Facet::FlowTheta => self.flow_theta,
            Facet::FlowPhi => self.flow_phi,
            Facet::GateFidelity => self.gate_fidelity,
            Facet::Holevo => self.holevo_closed,
        })
    }
}

/// All facets at abscissa `x` for the state `(θ, φ)`.
pub fn evaluate_point(channel: &Channel, x: f64, theta: f64, phi: f64) -> Result<SweepRecord> {
    let point = channel.at(x)?;
    let f = point.factor;
    let rho = dephased_state(f, theta, phi)?;
    let decoherence_rate = match point.decoherence_rate() {
        Ok(r) => Some(r),
        Err(Error::Singular { .. }) => None,
        Err(e) => return Err(e),
    };
    let flows = flow_sample(channel, x, theta)?;
    let holevo_closed = match channel {
        Channel::Rtn(_) => holevo_dephased_closed(f, theta),
        Channel::Nmd(params) => holevo_nmd_closed(params, x)?,
    };
    Ok(SweepRecord {
        abscissa: x,
        dephasing_factor: f,
        decoherence_rate,
        coherence: coherence_l1(&rho),
        mixedness: mixedness(&rho),
        beta: beta_balance(&rho, 2)?,
        qfi_theta: flows.f_theta,
        qfi_phi: flows.f_phi,
        flow_theta: flows.flow_theta,
        flow_phi: flows.flow_phi,
        gate_fidelity: gate_fidelity_dephased(f),
        holevo_closed,
        regime: point.regime(),
    })
}

/// Evaluates every point of `xs` (in parallel on the current rayon pool),
/// preserving the input order.
pub fn sweep_points(channel: &Channel, theta: f64, phi: f64, xs: &[f64]) -> Result<Vec<SweepRecord>> {
    xs.par_iter().map(|&x| evaluate_point(channel, x, theta, phi)).collect()
}

/// One record per grid point, sorted by abscissa; rate singularities inside
/// the range are added to the grid and carry `decoherence_rate: None`.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>> {
    config.validate()?;
    sweep_points(&config.channel, config.theta, config.phi, &config.grid())
}
