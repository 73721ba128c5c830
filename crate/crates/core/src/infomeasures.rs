// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Channel-level figures of merit: average gate fidelity and Holevo quantity.

use crate::channels::{apply_channel, KrausSet, NmdParams};
use crate::error::{domain, Error, Result};
use crate::mat2::Mat2;
use crate::qstate::{entropy_term_bits, vn_entropy_bits, DensityMatrix};

/// A finite ensemble `{p_i, ρ_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    members: Vec<(f64, DensityMatrix)>,
}

impl Ensemble {
    pub fn new(members: Vec<(f64, DensityMatrix)>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Input("empty ensemble".into()));
        }
        if let Some((p, _)) = members.iter().find(|(p, _)| !(0.0..=1.0).contains(p)) {
            return Err(Error::Input(format!("ensemble weight {p} outside [0, 1]")));
        }
        let total: f64 = members.iter().map(|(p, _)| p).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Input(format!("ensemble weights sum to {total}")));
        }
        Ok(Ensemble { members })
    }

    pub fn members(&self) -> &[(f64, DensityMatrix)] {
        &self.members
    }
}

/// `G = (d + Σ_k |Tr K_k|²) / (d(d+1))`.
///
/// Uses the squared modulus of each trace. Summing the bare traces is not
/// even real-valued for general Kraus sets, and only the squared form gives
/// `(2 + f)/3` for the dephasing channels.
pub fn avg_gate_fidelity(kraus: &KrausSet, d: usize) -> Result<f64> {
    if d != 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    kraus.check_complete()?;
    let d = d as f64;
    let traces: f64 = kraus.operators().iter().map(|k| k.trace().norm_sqr()).sum();
    Ok((d + traces) / (d * (d + 1.0)))
}

/// `(1 + |1 + f|)/3`, i.e. `(2 + f)/3` on `[−1, 1]`.
pub fn gate_fidelity_dephased(f: f64) -> f64 {
    (1.0 + (1.0 + f).abs()) / 3.0
}

/// `χ = S(Σ p_i ρ_i') − Σ p_i S(ρ_i')` in bits, with `ρ_i'` the channel outputs.
pub fn holevo(ensemble: &Ensemble, kraus: &KrausSet) -> Result<f64> {
    let outputs =
        ensemble.members().iter().map(|(p, rho)| Ok((*p, apply_channel(kraus, rho)?))).collect::<Result<Vec<_>>>()?;
    let mean: Mat2 = outputs.iter().map(|(p, rho)| rho.matrix().scale_real(*p)).sum();
    let mean = DensityMatrix::new(mean)?;
    let conditional: f64 = outputs.iter().map(|(p, rho)| p * vn_entropy_bits(rho)).sum();
    Ok(vn_entropy_bits(&mean) - conditional)
}

/// Binary entropy of `λ± = ¼(2 ± √2 √(1 + f² + (1 − f²) cos 2θ))`, the
/// spectrum of the dephased state.
pub fn holevo_dephased_closed(f: f64, theta: f64) -> f64 {
    let f2 = f * f;
    let root = std::f64::consts::SQRT_2 * (1.0 + f2 + (1.0 - f2) * (2.0 * theta).cos()).max(0.0).sqrt();
    let plus = 0.25 * (2.0 + root);
    let minus = 0.25 * (2.0 - root);
    entropy_term_bits(plus) + entropy_term_bits(minus)
}

/// NMD Holevo quantity in bits:
///
/// ```text
/// [4p(1 − 3α(p−1)) artanh(4α(p−1)p − 4p/3 + 1) − 3 ln(2α(p−1)p − 2p/3 + 1)] / ln 8
/// ```
///
/// This is the binary entropy of `A = 1 − 2p/3 + 2αp(p−1)`. `artanh` is taken
/// as `½ ln((1+x)/(1−x))` with `1 − x` formed directly from `p`, so the
/// `p → 0` limit (where `x → 1`) loses no precision; `p = 0` returns 0.
pub fn holevo_nmd_closed(params: &NmdParams, p: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&p) {
        return Err(domain("p", p, "[0, 1/2]"));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    let a = params.alpha();
    let one_minus_x = 4.0 * p / 3.0 - 4.0 * a * (p - 1.0) * p;
    let one_plus_x = 2.0 - one_minus_x;
    let artanh = 0.5 * (one_plus_x / one_minus_x).ln();
    let ln_a = (2.0 * a * (p - 1.0) * p - 2.0 * p / 3.0).ln_1p();
    let num = 4.0 * p * (1.0 - 3.0 * a * (p - 1.0)) * artanh - 3.0 * ln_a;
    Ok(num / 8f64.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{dephased_state, nmd_kraus, nmd_omega, rtn_kraus, RtnParams};
    use crate::qstate::{binary_entropy_bits, pure_qubit};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn h2(x: f64) -> f64 {
        // independent of the crate's entropy helpers
        let term = |v: f64| if v > 0.0 { -v * v.ln() / 2f64.ln() } else { 0.0 };
        term(x) + term(1.0 - x)
    }

    #[test]
    fn gate_fidelity_examples() {
        assert_abs_diff_eq!(avg_gate_fidelity(&KrausSet::identity(), 2).unwrap(), 1.0);
        let params = RtnParams::new(1.0, 1.0).unwrap();
        let t0 = params.kernel_zero(0).unwrap();
        assert_abs_diff_eq!(
            avg_gate_fidelity(&rtn_kraus(&params, t0).unwrap(), 2).unwrap(),
            2.0 / 3.0,
            epsilon = 1e-12
        );
        let nmd = NmdParams::new(1.0).unwrap();
        assert_abs_diff_eq!(avg_gate_fidelity(&nmd_kraus(&nmd, 0.5).unwrap(), 2).unwrap(), 0.5, epsilon = 1e-12);

        assert_eq!(gate_fidelity_dephased(1.0), 1.0);
        assert_abs_diff_eq!(gate_fidelity_dephased(0.0), 2.0 / 3.0);
        assert_abs_diff_eq!(gate_fidelity_dephased(-0.5), 0.5);

        assert!(matches!(avg_gate_fidelity(&KrausSet::new(vec![Mat2::ZERO]), 2), Err(Error::Completeness { .. })));
        assert!(avg_gate_fidelity(&KrausSet::identity(), 3).is_err());
    }

    #[test]
    fn gate_fidelity_closed_form_matches_kraus_form() {
        for alpha in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let params = NmdParams::new(alpha).unwrap();
            for i in 0..=200 {
                let p = 0.5 * i as f64 / 200.0;
                let g = avg_gate_fidelity(&nmd_kraus(&params, p).unwrap(), 2).unwrap();
                assert_abs_diff_eq!(g, gate_fidelity_dephased(nmd_omega(&params, p).unwrap()), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn holevo_examples() {
        let id = KrausSet::identity();
        let single = Ensemble::new(vec![(1.0, pure_qubit(0.4, 0.1))]).unwrap();
        assert_abs_diff_eq!(holevo(&single, &id).unwrap(), 0.0, epsilon = 1e-12);

        let poles = Ensemble::new(vec![(0.5, pure_qubit(0.0, 0.0)), (0.5, pure_qubit(PI, 0.0))]).unwrap();
        let params = RtnParams::new(0.05, 0.001).unwrap();
        for t in [0.0, 3.0, 40.0] {
            let chi = holevo(&poles, &rtn_kraus(&params, t).unwrap()).unwrap();
            assert_abs_diff_eq!(chi, 1.0, epsilon = 1e-12);
        }

        let equator = Ensemble::new(vec![(0.5, pure_qubit(FRAC_PI_2, 0.0)), (0.5, pure_qubit(FRAC_PI_2, PI))]).unwrap();
        assert_abs_diff_eq!(holevo(&equator, &id).unwrap(), 1.0, epsilon = 1e-12);
        // fully dephased equatorial states carry nothing
        let t0 = params.kernel_zero(0).unwrap();
        assert_abs_diff_eq!(holevo(&equator, &rtn_kraus(&params, t0).unwrap()).unwrap(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn invalid_ensembles_are_rejected() {
        let rho = pure_qubit(0.0, 0.0);
        assert!(Ensemble::new(vec![]).is_err());
        assert!(Ensemble::new(vec![(0.5, rho), (0.6, rho)]).is_err());
        assert!(Ensemble::new(vec![(1.5, rho), (-0.5, rho)]).is_err());
    }

    #[test]
    fn dephased_holevo_examples() {
        assert_abs_diff_eq!(holevo_dephased_closed(1.0, 0.9), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(holevo_dephased_closed(0.0, FRAC_PI_2), 1.0, epsilon = 1e-12);
        // numpy eigvalsh + entropy on the explicit matrix
        assert_abs_diff_eq!(holevo_dephased_closed(0.5, FRAC_PI_4), 0.483_766_944_201_426_13, epsilon = 1e-10);
    }

    #[test]
    fn dephased_holevo_is_output_entropy() {
        for i in 0..50 {
            let th = PI * i as f64 / 49.0;
            for j in 0..50 {
                let f = -1.0 + 2.0 * j as f64 / 49.0;
                let s = vn_entropy_bits(&dephased_state(f, th, 0.0).unwrap());
                assert_abs_diff_eq!(holevo_dephased_closed(f, th), s, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn nmd_holevo_examples() {
        let plain = NmdParams::new(0.0).unwrap();
        assert_eq!(holevo_nmd_closed(&plain, 0.0).unwrap(), 0.0);
        assert!(holevo_nmd_closed(&plain, 1e-12).unwrap() < 1e-9);
        assert_abs_diff_eq!(holevo_nmd_closed(&plain, 0.5).unwrap(), 0.918_295_834_054_489_6, epsilon = 1e-10);
        let half = NmdParams::new(0.5).unwrap();
        assert_abs_diff_eq!(holevo_nmd_closed(&half, 0.5).unwrap(), 0.979_868_756_651_152_8, epsilon = 1e-10);
        assert!(holevo_nmd_closed(&half, 0.6).is_err());
    }

    #[test]
    fn nmd_holevo_is_binary_entropy() {
        for alpha in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let params = NmdParams::new(alpha).unwrap();
            for i in 0..200 {
                let p = 0.5 * i as f64 / 199.0;
                let a = 1.0 - 2.0 * p / 3.0 + 2.0 * alpha * p * (p - 1.0);
                let closed = holevo_nmd_closed(&params, p).unwrap();
                assert_abs_diff_eq!(closed, h2(a), epsilon = 1e-10);
                assert_abs_diff_eq!(closed, binary_entropy_bits(a), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn gate_fidelity_is_one_only_for_identity() {
        for f in [-1.0, -0.5, 0.0, 0.5, 0.999] {
            assert!(gate_fidelity_dephased(f) < 1.0);
        }
        assert_eq!(gate_fidelity_dephased(1.0), 1.0);
    }
}
