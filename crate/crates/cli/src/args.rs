// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

use clap::{Args, Parser, Subcommand, ValueEnum};
use dephasing::analysis::Facet;
use std::f64::consts::PI;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "dephasing", version, about = "Qubit dephasing channels: facets, sweeps, figures and witnesses")]
pub struct Cli {
    /// key=value file supplying default flags; command-line flags take precedence
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Worker threads for sweep evaluation
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one facet at one point
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Every facet on a grid of the evolution parameter
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Datasets for figures 1 to 7, one file per panel
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Figure(FigureArgs),
    /// Closed-form table values against density-matrix oracles
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Table1(Table1Args),
    /// Compare the QFI-flow and decoherence-rate memory witnesses
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Witness(WitnessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChannelArg {
    Rtn,
    Nmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct ChannelArgs {
    pub channel: ChannelArg,
    /// RTN coupling strength
    #[arg(long)]
    pub a: Option<f64>,
    /// RTN switching rate
    #[arg(long)]
    pub gamma: Option<f64>,
    /// NMD memory parameter in [0, 1]
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Polar angle of the input state (number, or forms like pi/4, 3pi/4)
    #[arg(long, value_parser = parse_angle, default_value = "pi/4")]
    pub theta: f64,
    /// Azimuthal angle of the input state
    #[arg(long, value_parser = parse_angle, default_value = "0")]
    pub phi: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file (directory for `figure`); standard output when absent
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Significant digits in emitted numbers
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(6..=17))]
    pub precision: u8,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.0)]
    pub start: f64,
    /// Defaults to 100 for RTN and 1/2 for NMD
    #[arg(long)]
    pub stop: Option<f64>,
    #[arg(long, default_value_t = dephasing::analysis::DEFAULT_STEPS)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Time (RTN)
    #[arg(long)]
    pub t: Option<f64>,
    /// Time-like parameter (NMD)
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, value_parser = parse_facet)]
    pub facet: Facet,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Facet drawn by `--format svg`
    #[arg(long, value_parser = parse_facet, default_value = "coherence")]
    pub facet: Facet,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Figure number, 1 to 7
    pub id: u8,
    /// Grid points per panel
    #[arg(long, default_value_t = dephasing::analysis::DEFAULT_STEPS)]
    pub steps: usize,
    /// End of the time axis for RTN panels
    #[arg(long, default_value_t = 100.0)]
    pub stop: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[command(flatten)]
    pub channel: ChannelArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Replace the single --theta by a uniform grid of this many angles on [0, pi]
    #[arg(long, value_name = "N")]
    pub theta_steps: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_facet(s: &str) -> Result<Facet, String> {
    s.parse::<Facet>().map_err(|_| {
        let names: Vec<&str> = Facet::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Accepts plain numbers and `[k]pi[/n]`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    let bad = || format!("'{s}' is not an angle (use a number or a form like 3pi/4)");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (s, 1.0),
    };
    let (sign, num) = match num.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, num),
    };
    let k = num.strip_suffix("pi").ok_or_else(bad)?.trim_end_matches('*');
    let k = if k.is_empty() { 1.0 } else { k.parse::<f64>().map_err(|_| bad())? };
    Ok(sign * k * PI / den)
}
