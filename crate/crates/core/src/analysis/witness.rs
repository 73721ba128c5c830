// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Cross-checks the two memory witnesses on a sweep: positive φ-QFI flow
//! and negative canonical decoherence rate. For pure dephasing both reduce
//! to `sign(f·f') > 0`, so on a grid they may only disagree in the single
//! cell that straddles a sign change.

use super::SweepRecord;
use crate::error::Result;
use crate::qfi::FLOW_THRESHOLD;
use crate::series::{check_sorted, intervals_above, sign_changes, Interval};
use serde::{Deserialize, Serialize};

/// Cells with `|f|` below this are excluded from the witness comparison.
pub const FACTOR_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// Intervals with `flow_phi > 0`.
    pub positive_flow_intervals: Vec<Interval>,
    /// Intervals with a negative decoherence rate.
    pub negative_rate_intervals: Vec<Interval>,
    /// Longest run of consecutive grid cells on which the witnesses disagree.
    pub max_disagreement_cells: usize,
    /// Abscissas of the disagreeing cells.
    pub disagreements: Vec<f64>,
    /// Grid points where the rate is singular.
    pub singularities: Vec<f64>,
    /// Zero crossings of the dephasing factor.
    pub factor_crossings: Vec<f64>,
    pub consistent: bool,
}

/// Sign changes of a sampled series (values within `1e-12` of zero count as zero).
pub fn detect_sign_changes(series: &[(f64, f64)]) -> Result<Vec<f64>> {
    sign_changes(series, 1e-12)
}

pub fn witness_consistency(records: &[SweepRecord]) -> Result<WitnessReport> {
    check_sorted(records.iter().map(|r| r.abscissa))?;

    let flow_points: Vec<(f64, Option<f64>)> = records.iter().map(|r| (r.abscissa, Some(r.flow_phi))).collect();
    let rate_points: Vec<(f64, Option<f64>)> =
        records.iter().map(|r| (r.abscissa, r.decoherence_rate.map(|v| -v))).collect();
    let positive_flow_intervals = intervals_above(&flow_points, FLOW_THRESHOLD)?;
    let negative_rate_intervals = intervals_above(&rate_points, FLOW_THRESHOLD)?;

    let mut disagreements = Vec::new();
    let mut run = 0usize;
    let mut max_disagreement_cells = 0usize;
    for r in records {
        let comparable = r.dephasing_factor.abs() > FACTOR_FLOOR && r.decoherence_rate.is_some();
        let flow_pos = r.flow_phi > FLOW_THRESHOLD;
        let rate_neg = r.decoherence_rate.is_some_and(|v| v < -FLOW_THRESHOLD);
        if comparable && flow_pos != rate_neg {
            disagreements.push(r.abscissa);
            run += 1;
            max_disagreement_cells = max_disagreement_cells.max(run);
        } else {
            run = 0;
        }
    }

    let factor: Vec<(f64, f64)> = records.iter().map(|r| (r.abscissa, r.dephasing_factor)).collect();
    Ok(WitnessReport {
        positive_flow_intervals,
        negative_rate_intervals,
        max_disagreement_cells,
        disagreements,
        singularities: records.iter().filter(|r| r.decoherence_rate.is_none()).map(|r| r.abscissa).collect(),
        factor_crossings: detect_sign_changes(&factor)?,
        consistent: max_disagreement_cells <= 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{run_sweep, SweepConfig, DEFAULT_STEPS};
    use crate::channels::{nmd_critical_points, Channel, NmdParams, RtnParams};
    use std::f64::consts::FRAC_PI_4;

    fn report(channel: Channel, stop: f64) -> WitnessReport {
        let cfg = SweepConfig { channel, theta: FRAC_PI_4, phi: 0.0, start: 0.0, stop, steps: DEFAULT_STEPS };
        witness_consistency(&run_sweep(&cfg).unwrap()).unwrap()
    }

    #[test]
    fn markovian_rtn_has_no_witness() {
        for (a, g) in [(0.05, 1.0), (0.07, 1.0)] {
            let r = report(Channel::Rtn(RtnParams::new(a, g).unwrap()), 100.0);
            assert!(r.positive_flow_intervals.is_empty());
            assert!(r.negative_rate_intervals.is_empty());
            assert!(r.consistent);
            assert!(r.factor_crossings.is_empty());
        }
    }

    #[test]
    fn non_markovian_rtn_witnesses_agree() {
        let r = report(Channel::Rtn(RtnParams::new(0.07, 0.001).unwrap()), 100.0);
        assert!(!r.positive_flow_intervals.is_empty());
        assert_eq!(r.positive_flow_intervals.len(), r.negative_rate_intervals.len());
        for (a, b) in r.positive_flow_intervals.iter().zip(&r.negative_rate_intervals) {
            assert!((a.start - b.start).abs() < 0.1 && (a.end - b.end).abs() < 0.1, "{a:?} vs {b:?}");
        }
        assert!(r.consistent, "{r:?}");
        assert_eq!(r.singularities.len(), r.factor_crossings.len());
    }

    #[test]
    fn nmd_witness_is_a_single_tail_interval() {
        let params = NmdParams::new(0.7).unwrap();
        let (rm, _) = nmd_critical_points(&params).unwrap();
        let r = report(Channel::Nmd(params), 0.5);
        assert_eq!(r.positive_flow_intervals.len(), 1);
        assert_eq!(r.negative_rate_intervals.len(), 1);
        assert!((r.positive_flow_intervals[0].start - rm).abs() < 1e-6);
        assert!((r.negative_rate_intervals[0].start - rm).abs() < 1e-6);
        assert_eq!(r.positive_flow_intervals[0].end, 0.5);
        assert_eq!(r.singularities, vec![rm]);
        assert!(r.consistent);
    }

    #[test]
    fn sign_change_examples() {
        assert!(detect_sign_changes(&[(0.0, 1.0), (1.0, 3.0)]).unwrap().is_empty());
        assert!(detect_sign_changes(&[(1.0, 1.0), (0.0, -1.0)]).is_err());
        let params = RtnParams::new(0.05, 0.001).unwrap();
        let lam: Vec<(f64, f64)> = (0..=2000)
            .map(|i| {
                let t = 100.0 * i as f64 / 2000.0;
                (t, crate::channels::rtn_memory_factor(&params, t).unwrap())
            })
            .collect();
        let c = detect_sign_changes(&lam).unwrap();
        // ODE root via scipy brentq
        assert!((c[0] - 15.808_755_392_222_324).abs() / 15.808_755_392_222_324 < 5e-3);
    }
}
