// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

use crate::args::{
    ChannelArg, ChannelArgs, EvalArgs, FigureArgs, Format, GridArgs, OutputArgs, SweepArgs, Table1Args, WitnessArgs,
};
use crate::error::CliError;
use crate::output::{self, round_sig, write_text, Cell, SCHEMA};
use crate::svg::{self, Curve, Plot};
use dephasing::analysis::{
    evaluate_point, figure_series_with, run_sweep, table_entry, witness_consistency, Facet, FigureOptions, SweepConfig,
    TableEntry,
};
use dephasing::channels::{Channel, ChannelKind, NmdParams, RtnParams};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn build_channel(args: &ChannelArgs) -> Result<Channel, CliError> {
    match args.channel {
        ChannelArg::Rtn => {
            if args.alpha.is_some() {
                return Err(usage("--alpha applies to the nmd channel"));
            }
            let (Some(a), Some(gamma)) = (args.a, args.gamma) else {
                return Err(usage("the rtn channel needs --a and --gamma"));
            };
            Ok(Channel::Rtn(RtnParams::new(a, gamma)?))
        }
        ChannelArg::Nmd => {
            if args.a.is_some() || args.gamma.is_some() {
                return Err(usage("--a and --gamma apply to the rtn channel"));
            }
            let alpha = args.alpha.ok_or_else(|| usage("the nmd channel needs --alpha"))?;
            Ok(Channel::Nmd(NmdParams::new(alpha)?))
        }
    }
}

fn sweep_config(channel: Channel, args: &ChannelArgs, grid: &GridArgs) -> Result<SweepConfig, CliError> {
    let default_stop = match channel.kind() {
        ChannelKind::Rtn => 100.0,
        ChannelKind::Nmd => 0.5,
    };
    let config = SweepConfig {
        channel,
        theta: args.theta,
        phi: args.phi,
        start: grid.start,
        stop: grid.stop.unwrap_or(default_stop),
        steps: grid.steps,
    };
    config.validate()?;
    Ok(config)
}

fn format_or(output: &OutputArgs, default: Format, allowed: &[Format], command: &str) -> Result<Format, CliError> {
    let format = output.format.unwrap_or(default);
    if !allowed.contains(&format) {
        return Err(usage(format!("{command} does not support --format {format:?}").to_lowercase()));
    }
    Ok(format)
}

pub fn eval(args: &EvalArgs) -> Result<(), CliError> {
    let channel = build_channel(&args.channel)?;
    let x = match (channel.kind(), args.t, args.p) {
        (ChannelKind::Rtn, Some(t), None) => t,
        (ChannelKind::Nmd, None, Some(p)) => p,
        (ChannelKind::Rtn, _, _) => return Err(usage("the rtn channel takes --t (and not --p)")),
        (ChannelKind::Nmd, _, _) => return Err(usage("the nmd channel takes --p (and not --t)")),
    };
    let format = format_or(&args.output, Format::Csv, &[Format::Csv, Format::Json], "eval")?;
    let value = match args.facet {
        Facet::Rate => channel.decoherence_rate(x)?,
        facet => {
            let record = evaluate_point(&channel, x, args.channel.theta, args.channel.phi)?;
            record.facet(facet).expect("only the rate can be singular")
        }
    };
    let digits = args.output.precision;
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct EvalDoc {
                schema: u32,
                channel: String,
                abscissa: f64,
                theta: f64,
                phi: f64,
                facet: String,
                value: f64,
            }
            output::to_json(&EvalDoc {
                schema: SCHEMA,
                channel: output::channel_summary(&channel),
                abscissa: x,
                theta: args.channel.theta,
                phi: args.channel.phi,
                facet: args.facet.to_string(),
                value: round_sig(value, digits),
            })
        }
        _ => format!("{}\n", output::num(value, digits)),
    };
    write_text(args.output.out.as_deref(), &text)
}

pub fn sweep(args: &SweepArgs) -> Result<(), CliError> {
    let channel = build_channel(&args.channel)?;
    let config = sweep_config(channel, &args.channel, &args.grid)?;
    let format = format_or(&args.output, Format::Csv, &[Format::Csv, Format::Json, Format::Svg], "sweep")?;
    let records = run_sweep(&config)?;
    let digits = args.output.precision;
    let text = match format {
        Format::Csv => output::sweep_csv(&records, digits),
        Format::Json => output::sweep_json(&channel, config.theta, config.phi, &records, digits),
        Format::Svg => {
            let x: Vec<f64> = records.iter().map(|r| r.abscissa).collect();
            let values: Vec<Option<f64>> = records.iter().map(|r| r.facet(args.facet)).collect();
            let markers: Vec<f64> = if args.facet == Facet::Rate {
                records.iter().filter(|r| r.decoherence_rate.is_none()).map(|r| r.abscissa).collect()
            } else {
                Vec::new()
            };
            let title = format!("{} ({})", args.facet, output::channel_summary(&channel));
            let label = args.facet.name();
            svg::render(&Plot {
                title: &title,
                x_label: abscissa_label(channel.kind()),
                x: &x,
                curves: vec![Curve { label, values: &values }],
                markers: &markers,
            })
        }
    };
    write_text(args.output.out.as_deref(), &text)
}

fn abscissa_label(kind: ChannelKind) -> &'static str {
    match kind {
        ChannelKind::Rtn => "t",
        ChannelKind::Nmd => "p",
    }
}

pub fn figure(args: &FigureArgs) -> Result<(), CliError> {
    let format = args.output.format.unwrap_or(Format::Csv);
    let options = FigureOptions { steps: args.steps, rtn_stop: args.stop, ..FigureOptions::default() };
    let figure = figure_series_with(args.id, &options)?;
    let dir = args.output.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
    let digits = args.output.precision;
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
        Format::Svg => "svg",
    };
    let mut written = String::new();
    for panel in &figure.panels {
        let text = match format {
            Format::Csv => output::panel_csv(panel, digits),
            Format::Json => output::panel_json(panel, digits),
            Format::Svg => svg::render(&Plot {
                title: &panel.title,
                x_label: &panel.abscissa_label,
                x: &panel.abscissa,
                curves: panel.series.iter().map(|s| Curve { label: &s.label, values: &s.values }).collect(),
                markers: &panel.singularities,
            }),
        };
        let path = dir.join(format!("{}.{ext}", panel.name));
        write_text(Some(&path), &text)?;
        written.push_str(&path.display().to_string());
        written.push('\n');
    }
    write_text(None, &written)
}

pub fn table1(args: &Table1Args) -> Result<(), CliError> {
    let channel = build_channel(&args.channel)?;
    let config = sweep_config(channel, &args.channel, &args.grid)?;
    let format = format_or(&args.output, Format::Csv, &[Format::Csv, Format::Json], "table1")?;
    let thetas: Vec<f64> = match args.theta_steps {
        None => vec![args.channel.theta],
        Some(n) if n >= 2 => (0..n).map(|i| if i + 1 == n { PI } else { PI * i as f64 / (n - 1) as f64 }).collect(),
        Some(n) => return Err(usage(format!("--theta-steps needs at least 2 angles, got {n}"))),
    };
    let xs = config.uniform_grid();
    let pairs: Vec<(f64, f64)> = thetas.iter().flat_map(|&th| xs.iter().map(move |&x| (th, x))).collect();
    let entries = pairs
        .par_iter()
        .map(|&(th, x)| table_entry(&channel, x, th, args.channel.phi))
        .collect::<Result<Vec<TableEntry>, _>>()?;
    let digits = args.output.precision;
    let text = match format {
        Format::Json => output::table_json(&channel, &entries, digits),
        _ => output::table_csv(&entries, digits),
    };
    write_text(args.output.out.as_deref(), &text)
}

#[derive(Serialize)]
struct IntervalDoc {
    start: f64,
    end: f64,
}

#[derive(Serialize)]
struct WitnessDoc {
    schema: u32,
    channel: String,
    theta: f64,
    phi: f64,
    start: f64,
    stop: f64,
    steps: usize,
    verdict: &'static str,
    positive_flow_intervals: Vec<IntervalDoc>,
    negative_rate_intervals: Vec<IntervalDoc>,
    max_disagreement_cells: usize,
    disagreements: Vec<Cell>,
    singularities: Vec<Cell>,
    factor_crossings: Vec<Cell>,
}

pub fn witness(args: &WitnessArgs) -> Result<(), CliError> {
    let channel = build_channel(&args.channel)?;
    let config = sweep_config(channel, &args.channel, &args.grid)?;
    format_or(&args.output, Format::Json, &[Format::Json], "witness")?;
    let report = witness_consistency(&run_sweep(&config)?)?;
    let digits = args.output.precision;
    let r = |v: f64| round_sig(v, digits);
    let cells = |xs: &[f64]| xs.iter().map(|&x| Cell::new(Some(x), digits)).collect();
    let intervals = |iv: &[dephasing::series::Interval]| {
        iv.iter().map(|i| IntervalDoc { start: r(i.start), end: r(i.end) }).collect()
    };
    let doc = WitnessDoc {
        schema: SCHEMA,
        channel: output::channel_summary(&channel),
        theta: r(config.theta),
        phi: r(config.phi),
        start: r(config.start),
        stop: r(config.stop),
        steps: config.steps,
        verdict: if report.consistent { "consistent" } else { "inconsistent" },
        positive_flow_intervals: intervals(&report.positive_flow_intervals),
        negative_rate_intervals: intervals(&report.negative_rate_intervals),
        max_disagreement_cells: report.max_disagreement_cells,
        disagreements: cells(&report.disagreements),
        singularities: cells(&report.singularities),
        factor_crossings: cells(&report.factor_crossings),
    };
    write_text(args.output.out.as_deref(), &output::to_json(&doc))
}
