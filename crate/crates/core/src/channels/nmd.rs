// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Non-Markovian dephasing (NMD).
//!
//! Parameterized by a memory strength `α ∈ [0, 1]` and a time-like abscissa
//! `p ∈ [0, ½]`. With `κ = p[1 + α(1−p)]` the Kraus pair is
//! `{√(1−κ) 𝟙, √κ σ_z}` and coherences are scaled by
//! `Ω = 1 − 2κ = 2αp² − 2(1+α)p + 1`. The rate `δ = −Ω'/(2Ω)` diverges at the
//! smaller root `r₋` of `Ω` and is negative beyond it. `α = 0` is ordinary
//! dephasing.

use super::KrausSet;
use crate::error::{domain, Error, Result};
use crate::mat2::Mat2;
use serde::{Deserialize, Serialize};

/// Distance in `p` from `r₋` inside which the rate is reported singular.
pub const SINGULAR_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NmdParams {
    alpha: f64,
}

impl NmdParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(domain("alpha", alpha, "[0, 1]"));
        }
        Ok(NmdParams { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Smallest positive root of `Ω`, `1/(1 + α + √(1 + α²))`.
    ///
    /// This is `r₋` rewritten through the product of roots, which stays
    /// accurate as `α → 0` where it tends to ½ (the root of `1 − 2p`).
    pub(crate) fn omega_root(&self) -> f64 {
        let a = self.alpha;
        1.0 / (1.0 + a + (1.0 + a * a).sqrt())
    }
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=0.5).contains(&p) {
        Ok(())
    } else {
        Err(domain("p", p, "[0, 1/2]"))
    }
}

/// `κ = p[1 + α(1−p)]`, the weight of the `σ_z` branch.
pub fn nmd_kappa(params: &NmdParams, p: f64) -> Result<f64> {
    check_p(p)?;
    let kappa = p * (1.0 + params.alpha * (1.0 - p));
    debug_assert!(((1.0 - params.alpha * p) * (1.0 - p) - (1.0 - kappa)).abs() <= 1e-12);
    Ok(kappa)
}

/// `Ω = 1 − 2κ`.
pub fn nmd_omega(params: &NmdParams, p: f64) -> Result<f64> {
    Ok(1.0 - 2.0 * nmd_kappa(params, p)?)
}

/// `dΩ/dp = −2(1 + α − 2αp)`, strictly negative on `[0, ½]`.
pub fn nmd_omega_derivative(params: &NmdParams, p: f64) -> Result<f64> {
    check_p(p)?;
    let a = params.alpha;
    Ok(-2.0 * (1.0 + a - 2.0 * a * p))
}

pub fn nmd_kraus(params: &NmdParams, p: f64) -> Result<KrausSet> {
    let kappa = nmd_kappa(params, p)?;
    Ok(KrausSet::new(vec![Mat2::IDENTITY.scale_real((1.0 - kappa).sqrt()), Mat2::PAULI_Z.scale_real(kappa.sqrt())]))
}

/// `δ(p) = (½(r₊ + r₋) − p) / ((p − r₋)(p − r₊))`.
///
/// Evaluated as `(1 + α − 2αp)/Ω`, the same rational function without the
/// `1/α` factors, so `α = 0` needs no special case.
pub fn nmd_decoherence_rate(params: &NmdParams, p: f64) -> Result<f64> {
    let omega = nmd_omega(params, p)?;
    let root = params.omega_root();
    if (p - root).abs() <= SINGULAR_GUARD || omega.abs() <= 1e-12 {
        return Err(Error::Singular { location: root });
    }
    let a = params.alpha;
    Ok((1.0 + a - 2.0 * a * p) / omega)
}

/// The roots `r₋ < r₊` of `Ω(p)`, or `None` when `α = 0` and `Ω` is linear.
pub fn nmd_critical_points(params: &NmdParams) -> Option<(f64, f64)> {
    let a = params.alpha;
    if a == 0.0 {
        return None;
    }
    let r_minus = params.omega_root();
    // product of the roots is 1/(2α)
    let r_plus = 1.0 / (2.0 * a * r_minus);
    Some((r_minus, r_plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn p(alpha: f64) -> NmdParams {
        NmdParams::new(alpha).unwrap()
    }

    /// Bisection on Ω(p) = 2αp² − 2(1+α)p + 1 over [0, 1].
    fn bisect_root(alpha: f64) -> f64 {
        let f = |x: f64| 2.0 * alpha * x * x - 2.0 * (1.0 + alpha) * x + 1.0;
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn alpha_is_validated() {
        assert!(NmdParams::new(-0.1).is_err());
        assert!(NmdParams::new(1.1).is_err());
        assert!(NmdParams::new(f64::NAN).is_err());
        assert!(NmdParams::new(0.0).is_ok());
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(nmd_kappa(&p(0.6), 0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(nmd_kappa(&p(0.0), 0.37).unwrap(), 0.37);
        assert_abs_diff_eq!(nmd_kappa(&p(1.0), 0.5).unwrap(), 0.75);
        assert!(nmd_kappa(&p(0.5), 0.51).is_err());
        assert!(nmd_kappa(&p(0.5), -0.01).is_err());
    }

    #[test]
    fn kappa_identity() {
        for alpha in [0.0, 0.3, 1.0] {
            for i in 0..=100 {
                let x = i as f64 * 0.005;
                let k = nmd_kappa(&p(alpha), x).unwrap();
                assert_abs_diff_eq!((1.0 - alpha * x) * (1.0 - x), 1.0 - k, epsilon = 1e-12);
                assert!((0.0..=0.75).contains(&k));
            }
        }
    }

    #[test]
    fn kraus_examples() {
        let k = nmd_kraus(&p(0.4), 0.0).unwrap();
        assert_eq!(k.operators()[0], Mat2::IDENTITY);
        assert_eq!(k.operators()[1].max_abs(), 0.0);

        let k = nmd_kraus(&p(1.0), 0.5).unwrap();
        assert!(k.operators()[0].max_abs_diff(&Mat2::IDENTITY.scale_real(0.5)) < 1e-15);
        assert!(k.operators()[1].max_abs_diff(&Mat2::PAULI_Z.scale_real(3f64.sqrt() / 2.0)) < 1e-15);
        assert!(k.completeness_deviation() < 1e-15);
    }

    #[test]
    fn omega_is_bounded_and_decreasing() {
        for alpha in [0.0, 0.25, 0.5, 0.7, 1.0] {
            let params = p(alpha);
            assert_eq!(nmd_omega(&params, 0.0).unwrap(), 1.0);
            let mut prev = f64::INFINITY;
            for i in 0..=500 {
                let x = i as f64 * 0.001;
                let w = nmd_omega(&params, x).unwrap();
                assert!(w.abs() <= 1.0 + 1e-12);
                assert!(w < prev);
                assert!(nmd_omega_derivative(&params, x).unwrap() < 0.0);
                prev = w;
            }
        }
    }

    #[test]
    fn critical_point_examples() {
        assert_eq!(nmd_critical_points(&p(0.0)), None);
        let (rm, rp) = nmd_critical_points(&p(0.5)).unwrap();
        assert_abs_diff_eq!(rm, 0.381_966_011_250_105_26, epsilon = 1e-12);
        assert_abs_diff_eq!(rp, 2.618_033_988_749_895, epsilon = 1e-12);
        let (rm, _) = nmd_critical_points(&p(1.0)).unwrap();
        assert_abs_diff_eq!(rm, (2.0 - 2f64.sqrt()) / 2.0, epsilon = 1e-15);
        let (rm, _) = nmd_critical_points(&p(0.7)).unwrap();
        assert_abs_diff_eq!(rm, 0.342_388_884_590_449_75, epsilon = 1e-12);
    }

    #[test]
    fn critical_points_are_roots() {
        for alpha in [0.01, 0.25, 0.5, 0.7, 1.0] {
            let (rm, rp) = nmd_critical_points(&p(alpha)).unwrap();
            assert!(rm < rp && rm > 0.0 && rm < 1.0);
            assert_abs_diff_eq!(rm, bisect_root(alpha), epsilon = 1e-12);
            let omega = |x: f64| 2.0 * alpha * x * x - 2.0 * (1.0 + alpha) * x + 1.0;
            assert!(omega(rm).abs() < 1e-10 && omega(rp).abs() < 1e-10);
        }
    }

    #[test]
    fn rate_examples() {
        assert_abs_diff_eq!(nmd_decoherence_rate(&p(0.0), 0.0).unwrap(), 1.0);
        for x in [0.1, 0.2, 0.45] {
            assert_relative_eq!(nmd_decoherence_rate(&p(0.0), x).unwrap(), 1.0 / (1.0 - 2.0 * x), max_relative = 1e-14);
        }
        let (rm, _) = nmd_critical_points(&p(0.7)).unwrap();
        assert!(matches!(nmd_decoherence_rate(&p(0.7), rm), Err(Error::Singular { .. })));
        assert!(nmd_decoherence_rate(&p(0.5), 0.45).unwrap() < 0.0);
        // α = 0 diverges at p = ½
        assert!(matches!(nmd_decoherence_rate(&p(0.0), 0.5), Err(Error::Singular { location }) if location == 0.5));
    }

    #[test]
    fn rate_matches_root_form_and_quotient() {
        for alpha in [0.25, 0.5, 0.7, 1.0] {
            let params = p(alpha);
            let (rm, rp) = nmd_critical_points(&params).unwrap();
            for i in 1..100 {
                let x = i as f64 * 0.005;
                if (x - rm).abs() < 1e-3 {
                    continue;
                }
                let rate = nmd_decoherence_rate(&params, x).unwrap();
                let root_form = (0.5 * (rp + rm) - x) / ((x - rm) * (x - rp));
                assert_relative_eq!(rate, root_form, max_relative = 1e-10);
                let h = 1e-6;
                let fd = (nmd_omega(&params, x + h).unwrap() - nmd_omega(&params, x - h).unwrap()) / (2.0 * h);
                let quotient = -fd / (2.0 * nmd_omega(&params, x).unwrap());
                assert_relative_eq!(rate, quotient, max_relative = 1e-8);
            }
        }
    }
}
