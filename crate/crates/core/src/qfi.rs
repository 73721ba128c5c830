// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Quantum Fisher information of dephased qubits and its flow.
//!
//! For a one-parameter family of Bloch vectors `ζ(α)` (half-length
//! convention) the information is taken as
//!
//! ```text
//! F_α = (ζ·∂ζ)² / (1 − |ζ|²) + |∂ζ|²
//! ```
//!
//! and its flow `dF_α/ds` along the channel abscissa `s` (time for RTN, `p`
//! for NMD) witnesses memory effects: positive flow means information is
//! returning from the environment.
//!
//! For a state `(θ, φ)` dephased by the factor `f(s)`:
//!
//! ```text
//! F_θ = 1 + 3(f² − 4) / (2 D),   D = 7 − f² + (f² − 1) cos 2θ
//! F_φ = ¼ f² sin²θ
//! dF_θ/ds = 18 f f' cos²θ / D²
//! dF_φ/ds = ½ f f' sin²θ
//! ```

use crate::channels::{
    nmd_omega, nmd_omega_derivative, rtn_memory_derivative, rtn_memory_factor, Channel, Damping, NmdParams, RtnParams,
};
use crate::error::{domain, Result};
use crate::qstate::BlochVector;
use crate::series::{intervals_above, Interval};
use serde::{Deserialize, Serialize};

/// Flows at or below this value never count as backflow.
pub const FLOW_THRESHOLD: f64 = 1e-12;

/// Which state angle is being estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StateParam {
    Theta,
    Phi,
}

/// A Bloch vector with its derivative along the estimated parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamDerivative {
    pub zeta: BlochVector,
    pub d_zeta: [f64; 3],
}

/// QFI and its flow at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlowSample {
    pub abscissa: f64,
    pub f_theta: f64,
    pub f_phi: f64,
    pub flow_theta: f64,
    pub flow_phi: f64,
}

impl FlowSample {
    pub fn flow(&self, param: StateParam) -> f64 {
        match param {
            StateParam::Theta => self.flow_theta,
            StateParam::Phi => self.flow_phi,
        }
    }
}

pub fn qfi_from_bloch(d: &ParamDerivative) -> Result<f64> {
    let n2 = d.zeta.norm_sqr();
    if n2.is_nan() || n2 >= 1.0 {
        return Err(domain("|zeta|", n2.sqrt(), "[0, 1)"));
    }
    let dot = d.zeta.dot(&d.d_zeta);
    let dn2: f64 = d.d_zeta.iter().map(|c| c * c).sum();
    Ok(dot * dot / (1.0 - n2) + dn2)
}

/// Bloch vector of the dephased state, `½(f sinθ cosφ, f sinθ sinφ, cosθ)`.
pub fn dephased_bloch(f: f64, theta: f64, phi: f64) -> BlochVector {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    BlochVector::new(0.5 * f * st * cp, 0.5 * f * st * sp, 0.5 * ct)
}

/// Analytic `∂ζ` of [`dephased_bloch`] along `param`.
pub fn dephased_param_derivative(f: f64, theta: f64, phi: f64, param: StateParam) -> ParamDerivative {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let d_zeta = match param {
        StateParam::Theta => [0.5 * f * ct * cp, 0.5 * f * ct * sp, -0.5 * st],
        StateParam::Phi => [-0.5 * f * st * sp, 0.5 * f * st * cp, 0.0],
    };
    ParamDerivative { zeta: dephased_bloch(f, theta, phi), d_zeta }
}

fn theta_denominator(f: f64, theta: f64) -> f64 {
    let f2 = f * f;
    7.0 - f2 + (f2 - 1.0) * (2.0 * theta).cos()
}

pub fn qfi_theta_closed(f: f64, theta: f64) -> f64 {
    1.0 + 3.0 * (f * f - 4.0) / (2.0 * theta_denominator(f, theta))
}

pub fn qfi_phi_closed(f: f64, theta: f64) -> f64 {
    0.25 * f * f * theta.sin().powi(2)
}

/// `(dF_θ/ds, dF_φ/ds)` from the factor `f` and its derivative `df` along `s`.
pub fn dephasing_flows(f: f64, df: f64, theta: f64) -> (f64, f64) {
    let d = theta_denominator(f, theta);
    let flow_theta = 18.0 * f * df * theta.cos().powi(2) / (d * d);
    let flow_phi = 0.5 * f * df * theta.sin().powi(2);
    (flow_theta, flow_phi)
}

/// QFI flows for RTN along physical time.
pub fn qfi_flow_rtn(params: &RtnParams, t: f64, theta: f64) -> Result<(f64, f64)> {
    let lam = rtn_memory_factor(params, t)?;
    let dlam = rtn_memory_derivative(params, t)?;
    Ok(dephasing_flows(lam, dlam, theta))
}

/// RTN flows written through `μ = √((2a/γ)² − 1)` and `ν = γt`; oscillatory branch only.
///
/// `Λ̃ = e^{γt} Λ` denotes the undamped bracket `cos νμ + sin(νμ)/μ`.
///
/// ```text
/// dF_θ/dt = −18 γ μ³ (μ² + 1) cos²θ e^{2γt} sin(νμ) Λ̃
///           / [μ² (cos 2θ − 7) e^{2γt} + 2 μ² sin²θ Λ̃²]²
/// dF_φ/dt = −γ (μ² + 1) sin²θ e^{−2γt} sin²(νμ) (μ cot(νμ) + 1) / (2μ²)
/// ```
///
/// Returns `None` outside the oscillatory branch, where `μ` is imaginary.
pub fn qfi_flow_rtn_mu_form(params: &RtnParams, t: f64, theta: f64) -> Result<Option<(f64, f64)>> {
    check_time(t)?;
    let Damping::Underdamped { omega } = params.branch() else {
        return Ok(None);
    };
    let g = params.gamma();
    let mu = omega / g;
    let x = g * mu * t;
    let (sx, cx) = x.sin_cos();
    let grow = (2.0 * g * t).exp();
    let bracket = cx + sx / mu;
    let (st, ct) = theta.sin_cos();
    let mu2 = mu * mu;

    let den = mu2 * ((2.0 * theta).cos() - 7.0) * grow + 2.0 * st * st * mu2 * bracket * bracket;
    let flow_theta = -18.0 * g * mu2 * (mu2 + 1.0) * ct * ct * grow * sx * mu * bracket / (den * den);
    // sin²x (μ cot x + 1) = sin x (μ cos x + sin x), finite at sin x = 0
    let flow_phi = -g * (mu2 + 1.0) * st * st * (-2.0 * g * t).exp() * sx * (mu * cx + sx) / (2.0 * mu2);
    Ok(Some((flow_theta, flow_phi)))
}

fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(domain("t", t, "[0, ∞)"))
    }
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=0.5).contains(&p) {
        Ok(())
    } else {
        Err(domain("p", p, "[0, 1/2]"))
    }
}

/// QFI flows for NMD along `p`, as polynomials in `p` and `α`:
///
/// ```text
/// dF_θ/dp = 9 cos²θ Ω (α(2p−1) − 1) / E²
/// dF_φ/dp = sin²θ Ω (α(2p−1) − 1)
/// E = 2(p−1)p cos 2θ (α(p−1)−1)(αp−1) − 2(p−1)p (α(p−1)−1)(αp−1) + 3
/// ```
pub fn qfi_flow_nmd(params: &NmdParams, p: f64, theta: f64) -> Result<(f64, f64)> {
    check_p(p)?;
    let a = params.alpha();
    let omega = 2.0 * a * (p - 1.0) * p - 2.0 * p + 1.0;
    let slope = a * (2.0 * p - 1.0) - 1.0;
    let q = (p - 1.0) * p * (a * (p - 1.0) - 1.0) * (a * p - 1.0);
    let e = 2.0 * q * (2.0 * theta).cos() - 2.0 * q + 3.0;
    let (st, ct) = theta.sin_cos();
    Ok((9.0 * ct * ct * omega * slope / (e * e), st * st * omega * slope))
}

/// F_θ, F_φ and both flows for a channel at abscissa `x`.
pub fn flow_sample(channel: &Channel, x: f64, theta: f64) -> Result<FlowSample> {
    let f = channel.factor(x)?;
    let (flow_theta, flow_phi) = match channel {
        Channel::Rtn(params) => qfi_flow_rtn(params, x, theta)?,
        Channel::Nmd(params) => qfi_flow_nmd(params, x, theta)?,
    };
    Ok(FlowSample {
        abscissa: x,
        f_theta: qfi_theta_closed(f, theta),
        f_phi: qfi_phi_closed(f, theta),
        flow_theta,
        flow_phi,
    })
}

/// Central difference `(F(x+h) − F(x−h)) / 2h`.
pub fn numeric_flow<F>(func: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if h.is_nan() || h <= 0.0 {
        return Err(domain("h", h, "(0, ∞)"));
    }
    Ok((func(x + h)? - func(x - h)?) / (2.0 * h))
}

/// [`numeric_flow`] with step `1e-5·max(1, |x|)`.
///
/// When the `h` and `h/2` estimates disagree by more than `1e-4` relative,
/// the Richardson combination `(4 D(h/2) − D(h)) / 3` is returned instead.
pub fn numeric_flow_auto<F>(func: F, x: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = 1e-5 * x.abs().max(1.0);
    let coarse = numeric_flow(&func, x, h)?;
    let fine = numeric_flow(&func, x, 0.5 * h)?;
    let scale = coarse.abs().max(fine.abs());
    if (coarse - fine).abs() > 1e-4 * scale {
        Ok((4.0 * fine - coarse) / 3.0)
    } else {
        Ok(fine)
    }
}

/// Intervals of the abscissa on which the selected flow is positive.
pub fn positive_flow_intervals(series: &[FlowSample], param: StateParam) -> Result<Vec<Interval>> {
    if series.len() < 2 {
        return Err(crate::Error::Input("a flow series needs at least two samples".into()));
    }
    let points: Vec<(f64, Option<f64>)> = series.iter().map(|s| (s.abscissa, Some(s.flow(param)))).collect();
    intervals_above(&points, FLOW_THRESHOLD)
}

/// Convenience for NMD: the flow sample at `p` with `Ω` as the factor.
pub fn nmd_flow_sample(params: &NmdParams, p: f64, theta: f64) -> Result<FlowSample> {
    let omega = nmd_omega(params, p)?;
    let (flow_theta, flow_phi) = qfi_flow_nmd(params, p, theta)?;
    debug_assert!({
        let (ft, fp) = dephasing_flows(omega, nmd_omega_derivative(params, p)?, theta);
        (ft - flow_theta).abs() <= 1e-9 && (fp - flow_phi).abs() <= 1e-9
    });
    Ok(FlowSample {
        abscissa: p,
        f_theta: qfi_theta_closed(omega, theta),
        f_phi: qfi_phi_closed(omega, theta),
        flow_theta,
        flow_phi,
    })
}
