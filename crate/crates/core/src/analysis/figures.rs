// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Datasets behind the seven published figures.
//!
//! Each panel shares one abscissa grid across its curves: a uniform grid
//! plus every rate singularity of every channel drawn in the panel. Caption
//! magnitude scalings are applied here and recorded in [`Series::scale`].

use super::sweep::{merge_grid, rate_singularities, sweep_points, Facet, SweepConfig};
use crate::channels::{Channel, ChannelKind, NmdParams, RtnParams};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

/// Abscissa ranges and resolution for figure panels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FigureOptions {
    pub steps: usize,
    /// RTN panels cover `t ∈ [0, rtn_stop]`.
    pub rtn_stop: f64,
    /// NMD panels cover `p ∈ [0, nmd_stop]`.
    pub nmd_stop: f64,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions { steps: super::DEFAULT_STEPS, rtn_stop: 100.0, nmd_stop: 0.5 }
    }
}

/// One curve: a facet of one channel/state, multiplied by `scale`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub label: String,
    pub channel: Channel,
    pub theta: f64,
    pub phi: f64,
    pub facet: Facet,
    pub scale: f64,
    /// `None` marks a singular point.
    pub values: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Panel {
    /// `figN_panelM`.
    pub name: String,
    pub title: String,
    pub abscissa_label: String,
    pub abscissa: Vec<f64>,
    pub series: Vec<Series>,
    /// Singular abscissas of the plotted rate curves, drawn as vertical lines.
    pub singularities: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure {
    pub id: u8,
    pub panels: Vec<Panel>,
}

struct CurveSpec {
    label: &'static str,
    channel: Channel,
    theta: f64,
    facet: Facet,
    scale: f64,
}

fn rtn(a: f64, gamma: f64) -> Channel {
    Channel::Rtn(RtnParams::new(a, gamma).expect("figure parameters are valid"))
}

fn nmd(alpha: f64) -> Channel {
    Channel::Nmd(NmdParams::new(alpha).expect("figure parameters are valid"))
}

fn curve(label: &'static str, channel: Channel, theta: f64, facet: Facet, scale: f64) -> CurveSpec {
    CurveSpec { label, channel, theta, facet, scale }
}

fn build_panel(fig: u8, index: usize, title: &str, curves: Vec<CurveSpec>, opts: &FigureOptions) -> Result<Panel> {
    let kind = curves[0].channel.kind();
    if curves.iter().any(|c| c.channel.kind() != kind) {
        return Err(Error::Input("a panel mixes RTN and NMD abscissas".into()));
    }
    let (abscissa_label, stop) = match kind {
        ChannelKind::Rtn => ("t", opts.rtn_stop),
        ChannelKind::Nmd => ("p", opts.nmd_stop),
    };
    let mut grid = Vec::new();
    let mut singularities = Vec::new();
    for c in &curves {
        let cfg = SweepConfig { channel: c.channel, theta: c.theta, phi: 0.0, start: 0.0, stop, steps: opts.steps };
        cfg.validate()?;
        if grid.is_empty() {
            grid = cfg.uniform_grid();
        }
        let sing = rate_singularities(&c.channel, 0.0, stop);
        if c.facet == Facet::Rate {
            singularities.extend_from_slice(&sing);
        }
        grid = merge_grid(grid, &sing);
    }
    singularities.sort_by(f64::total_cmp);
    singularities.dedup();

    let series = curves
        .into_iter()
        .map(|c| {
            let records = sweep_points(&c.channel, c.theta, 0.0, &grid)?;
            let values = records.iter().map(|r| r.facet(c.facet).map(|v| c.scale * v)).collect();
            Ok(Series {
                label: c.label.to_string(),
                channel: c.channel,
                theta: c.theta,
                phi: 0.0,
                facet: c.facet,
                scale: c.scale,
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Panel {
        name: format!("fig{fig}_panel{index}"),
        title: title.to_string(),
        abscissa_label: abscissa_label.to_string(),
        abscissa: grid,
        series,
        singularities,
    })
}

/// Figure `id ∈ 1..=7` with default ranges.
pub fn figure_series(id: u8) -> Result<Figure> {
    figure_series_with(id, &FigureOptions::default())
}

pub fn figure_series_with(id: u8, opts: &FigureOptions) -> Result<Figure> {
    use Facet::*;
    let nm = |a| rtn(a, 0.001);
    let mk = |a| rtn(a, 1.0);
    let panels: Vec<(&str, Vec<CurveSpec>)> = match id {
        1 => vec![
            (
                "RTN decoherence rate",
                vec![
                    curve("non-Markovian a=0.05 gamma=0.001", nm(0.05), FRAC_PI_2, Rate, 1.0),
                    curve("Markovian a=0.05 gamma=1 (x10)", mk(0.05), FRAC_PI_2, Rate, 10.0),
                ],
            ),
            ("NMD decoherence rate", vec![curve("alpha=0.7", nmd(0.7), FRAC_PI_2, Rate, 1.0)]),
        ],
        2 => vec![
            (
                "RTN theta QFI flow",
                vec![
                    curve("non-Markovian a=0.07 gamma=0.001", nm(0.07), FRAC_PI_4, FlowTheta, 1.0),
                    curve("Markovian a=0.07 gamma=1 (x5)", mk(0.07), FRAC_PI_4, FlowTheta, 5.0),
                ],
            ),
            (
                "RTN phi QFI flow",
                vec![
                    curve("non-Markovian a=0.07 gamma=0.001", nm(0.07), FRAC_PI_4, FlowPhi, 1.0),
                    curve("Markovian a=0.07 gamma=1 (x5)", mk(0.07), FRAC_PI_4, FlowPhi, 5.0),
                ],
            ),
        ],
        3 => vec![
            ("NMD theta QFI flow", vec![curve("alpha=0.7", nmd(0.7), FRAC_PI_4, FlowTheta, 1.0)]),
            ("NMD phi QFI flow", vec![curve("alpha=0.7", nmd(0.7), FRAC_PI_4, FlowPhi, 1.0)]),
        ],
        4 | 5 => {
            let (top, bottom) = if id == 4 { (Coherence, Mixedness) } else { (GateFidelity, Holevo) };
            let pair = |facet| {
                vec![
                    curve("non-Markovian a=0.07 gamma=0.001", nm(0.07), FRAC_PI_2, facet, 1.0),
                    curve("Markovian a=0.07 gamma=1", mk(0.07), FRAC_PI_2, facet, 1.0),
                ]
            };
            let title = |facet: Facet| format!("RTN {facet}");
            return assemble(id, vec![(title(top), pair(top)), (title(bottom), pair(bottom))], opts);
        }
        6 => vec![
            (
                "RTN coherence-mixedness trade-off",
                vec![
                    curve("C", nm(0.5), FRAC_PI_2, Coherence, 1.0),
                    curve("M", nm(0.5), FRAC_PI_2, Mixedness, 1.0),
                    curve("beta", nm(0.5), FRAC_PI_2, Beta, 1.0),
                ],
            ),
            (
                "NMD coherence-mixedness trade-off",
                vec![
                    curve("C", nmd(0.5), FRAC_PI_4, Coherence, 1.0),
                    curve("M", nmd(0.5), FRAC_PI_4, Mixedness, 1.0),
                    curve("beta", nmd(0.5), FRAC_PI_4, Beta, 1.0),
                ],
            ),
        ],
        7 => [Coherence, Mixedness, GateFidelity, Holevo]
            .into_iter()
            .map(|facet| ("NMD", vec![curve("alpha=0.5", nmd(0.5), FRAC_PI_4, facet, 1.0)]))
            .collect(),
        _ => return Err(Error::Input(format!("unknown figure {id}; expected 1..7"))),
    };
    let panels = panels
        .into_iter()
        .map(|(title, curves)| {
            let title = if id == 7 { format!("{title} {}", curves[0].facet) } else { title.to_string() };
            (title, curves)
        })
        .collect();
    assemble(id, panels, opts)
}

fn assemble(id: u8, panels: Vec<(String, Vec<CurveSpec>)>, opts: &FigureOptions) -> Result<Figure> {
    let panels = panels
        .into_iter()
        .enumerate()
        .map(|(i, (title, curves))| build_panel(id, i + 1, &title, curves, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(Figure { id, panels })
}
