// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Scans over sampled one-dimensional series.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Closed abscissa interval `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub start: f64,
    pub end: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.start <= x && x <= self.end
    }
}

pub fn check_sorted<I: IntoIterator<Item = f64>>(xs: I) -> Result<()> {
    let mut prev = f64::NEG_INFINITY;
    for (i, x) in xs.into_iter().enumerate() {
        if x.is_nan() || x <= prev {
            return Err(Error::Input(format!("abscissa not strictly increasing at index {i} ({x})")));
        }
        prev = x;
    }
    Ok(())
}

fn crossing(x0: f64, y0: f64, x1: f64, y1: f64, level: f64) -> f64 {
    let (d0, d1) = (y0 - level, y1 - level);
    if d0 == d1 {
        0.5 * (x0 + x1)
    } else {
        x0 + (x1 - x0) * d0 / (d0 - d1)
    }
}

/// Maximal intervals on which the sampled value exceeds `threshold`.
///
/// Endpoints are located by linear interpolation between the bracketing
/// samples. Missing values (singular points) end or begin an interval at
/// their own abscissa.
pub fn intervals_above(points: &[(f64, Option<f64>)], threshold: f64) -> Result<Vec<Interval>> {
    check_sorted(points.iter().map(|p| p.0))?;
    let mut out = Vec::new();
    let mut open: Option<f64> = None;
    for (i, &(x, y)) in points.iter().enumerate() {
        let above = matches!(y, Some(v) if v > threshold);
        let prev = i.checked_sub(1).map(|j| points[j]);
        match (above, open) {
            (true, None) => {
                let start = match prev {
                    Some((px, Some(py))) => crossing(px, py, x, y.unwrap(), threshold),
                    Some((px, None)) => px,
                    None => x,
                };
                open = Some(start);
            }
            (false, Some(start)) => {
                let (px, py) = prev.expect("an open interval has a predecessor");
                let end = match y {
                    Some(v) => crossing(px, py.unwrap(), x, v, threshold),
                    None => x,
                };
                out.push(Interval { start, end });
                open = None;
            }
            _ => {}
        }
    }
    if let (Some(start), Some(&(x, _))) = (open, points.last()) {
        out.push(Interval { start, end: x });
    }
    Ok(out)
}

/// Abscissas where the series changes sign, by linear interpolation.
///
/// Values within `zero_tol` of zero count as zero; a run of zeros between
/// values of opposite sign yields one crossing at the middle of the run.
pub fn sign_changes(points: &[(f64, f64)], zero_tol: f64) -> Result<Vec<f64>> {
    check_sorted(points.iter().map(|p| p.0))?;
    let sign = |v: f64| {
        if v.abs() <= zero_tol {
            0
        } else if v > 0.0 {
            1
        } else {
            -1
        }
    };
    let mut out = Vec::new();
    let mut last: Option<(usize, i32)> = None;
    for (i, &(_, y)) in points.iter().enumerate() {
        let s = sign(y);
        if s == 0 {
            continue;
        }
        if let Some((j, ls)) = last {
            if ls != s {
                let (x0, y0) = points[j];
                let (x1, y1) = points[i];
                if j + 1 == i {
                    out.push(crossing(x0, y0, x1, y1, 0.0));
                } else {
                    out.push(0.5 * (points[j + 1].0 + points[i - 1].0));
                }
            }
        }
        last = Some((i, s));
    }
    Ok(out)
}
