// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Random telegraph noise (RTN) dephasing.
//!
//! A qubit coupled with strength `a` to a telegraph process of switching rate
//! `γ` (autocorrelation `a² e^{−γ|t−s|}`) keeps its populations and has its
//! coherences multiplied by the memory kernel `Λ(t)`, the solution of
//!
//! ```text
//! Λ'' + 2γ Λ' + 4a² Λ = 0,   Λ(0) = 1,  Λ'(0) = 0.
//! ```
//!
//! With `ω = √|4a² − γ²|` the kernel is oscillatory for `2a > γ`
//! (`e^{−γt}(cos ωt + γ/ω sin ωt)`), hyperbolic for `2a < γ`
//! (`e^{−γt}(cosh ωt + γ/ω sinh ωt)`), and `e^{−γt}(1 + γt)` at `2a = γ`.
//! Only the oscillatory branch crosses zero, and only it can produce negative
//! decoherence rates.

use super::KrausSet;
use crate::error::{domain, Error, Result};
use crate::mat2::Mat2;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Relative guard on `|4a² − γ²| / γ²` below which the critical formula is used.
pub const BRANCH_GUARD: f64 = 1e-12;

/// Distance (in time) from a zero of `Λ` inside which the rate is reported singular.
pub const ZERO_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RtnParams {
    a: f64,
    gamma: f64,
}

impl RtnParams {
    pub fn new(a: f64, gamma: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(domain("a", a, "(0, ∞)"));
        }
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(domain("gamma", gamma, "(0, ∞)"));
        }
        Ok(RtnParams { a, gamma })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn branch(&self) -> Damping {
        let (a2, g) = (2.0 * self.a, self.gamma);
        let disc = (a2 - g) * (a2 + g);
        if disc.abs() < BRANCH_GUARD * g * g {
            Damping::Critical
        } else if disc > 0.0 {
            Damping::Underdamped { omega: disc.sqrt() }
        } else {
            Damping::Overdamped { omega: (-disc).sqrt() }
        }
    }

    /// Zeros of `Λ` for the oscillatory branch: `ω t_k = π/2 + atan(γ/ω) + kπ`.
    pub fn kernel_zero(&self, k: u32) -> Option<f64> {
        match self.branch() {
            Damping::Underdamped { omega } => Some((0.5 * PI + (self.gamma / omega).atan() + k as f64 * PI) / omega),
            _ => None,
        }
    }

    /// The zero of `Λ` closest to `t`, if the kernel has any.
    pub fn nearest_kernel_zero(&self, t: f64) -> Option<f64> {
        let first = self.kernel_zero(0)?;
        let omega = match self.branch() {
            Damping::Underdamped { omega } => omega,
            _ => unreachable!(),
        };
        let k = ((t - first) * omega / PI).round().max(0.0);
        Some(first + k * PI / omega)
    }
}

/// Damping regime of the kernel ODE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Damping {
    /// `2a > γ`, `omega = √(4a² − γ²)`.
    Underdamped {
        omega: f64,
    },
    Critical,
    /// `2a < γ`, `omega = √(γ² − 4a²)`.
    Overdamped {
        omega: f64,
    },
}

fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(domain("t", t, "[0, ∞)"))
    }
}

/// `e^{−γt}·(c(t), s(t)/ω)` where `(c, s)` is `(cos, sin)` or `(cosh, sinh)`
/// of `ωt`; the second entry degrades to `t` at the critical point.
///
/// The hyperbolic products are formed from decaying exponentials so that
/// long times never overflow.
fn damped_pair(params: &RtnParams, t: f64) -> (f64, f64) {
    let g = params.gamma;
    match params.branch() {
        Damping::Underdamped { omega } => {
            let (s, c) = (omega * t).sin_cos();
            let env = (-g * t).exp();
            (env * c, env * s / omega)
        }
        Damping::Critical => {
            let env = (-g * t).exp();
            (env, env * t)
        }
        Damping::Overdamped { omega } => {
            let x = omega * t;
            let grow = ((omega - g) * t).exp();
            let decay = (-(omega + g) * t).exp();
            let cosh = 0.5 * (grow + decay);
            let sinh = if x < 1.0 { (-g * t).exp() * x.sinh() } else { 0.5 * (grow - decay) };
            (cosh, sinh / omega)
        }
    }
}

/// The memory kernel `Λ(t)`.
pub fn rtn_memory_factor(params: &RtnParams, t: f64) -> Result<f64> {
    check_time(t)?;
    let (c, s_over_w) = damped_pair(params, t);
    Ok(c + params.gamma * s_over_w)
}

/// `dΛ/dt = −4a² e^{−γt} s(ωt)/ω` in every branch.
pub fn rtn_memory_derivative(params: &RtnParams, t: f64) -> Result<f64> {
    check_time(t)?;
    let (_, s_over_w) = damped_pair(params, t);
    Ok(-4.0 * params.a * params.a * s_over_w)
}

/// Kraus pair `{√((1+Λ)/2) 𝟙, √((1−Λ)/2) σ_z}`.
pub fn rtn_kraus(params: &RtnParams, t: f64) -> Result<KrausSet> {
    let lam = rtn_memory_factor(params, t)?.clamp(-1.0, 1.0);
    Ok(KrausSet::new(vec![
        Mat2::IDENTITY.scale_real(((1.0 + lam) / 2.0).sqrt()),
        Mat2::PAULI_Z.scale_real(((1.0 - lam) / 2.0).sqrt()),
    ]))
}

/// Canonical dephasing rate `−Λ'/(2Λ)`.
///
/// The envelope `e^{−γt}` cancels, so the rate is evaluated from the
/// oscillatory (or hyperbolic) part alone:
/// `2a² s / (ω c + γ s)`, with `s, c` the undamped sine/cosine pair.
pub fn rtn_decoherence_rate(params: &RtnParams, t: f64) -> Result<f64> {
    check_time(t)?;
    let (a, g) = (params.a, params.gamma);
    let (num, den) = match params.branch() {
        Damping::Underdamped { omega } => {
            let (s, c) = (omega * t).sin_cos();
            (s, omega * c + g * s)
        }
        Damping::Critical => (t, 1.0 + g * t),
        Damping::Overdamped { omega } => {
            // sinh and cosh scaled by e^{−ωt}
            let s = -0.5 * (-2.0 * omega * t).exp_m1();
            let c = 0.5 * (1.0 + (-2.0 * omega * t).exp());
            (s, omega * c + g * s)
        }
    };
    if let Some(zero) = params.nearest_kernel_zero(t) {
        let scale = match params.branch() {
            Damping::Underdamped { omega } => omega,
            _ => 1.0,
        };
        if (t - zero).abs() <= ZERO_GUARD || (den / scale).abs() <= 1e-12 {
            return Err(Error::Singular { location: zero });
        }
    }
    Ok(2.0 * a * a * num / den)
}
