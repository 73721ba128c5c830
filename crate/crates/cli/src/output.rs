// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Text encodings of sweeps, figure panels and table slices.

use crate::error::CliError;
use dephasing::analysis::{Panel, SweepRecord, TableEntry, TableQuantity};
use dephasing::channels::Channel;
use serde::Serialize;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

pub const SCHEMA: u32 = 1;
pub const SINGULAR: &str = "SINGULAR";
pub const SWEEP_HEADER: &str =
    "abscissa,factor,rate,coherence,mixedness,beta,qfi_theta,qfi_phi,flow_theta,flow_phi,gate_fidelity,holevo,regime";

/// Rounds to `digits` significant digits and prints the shortest string
/// that reads back as the rounded value.
pub fn round_sig(v: f64, digits: u8) -> f64 {
    if !v.is_finite() {
        return v;
    }
    let r: f64 = format!("{:.*e}", usize::from(digits.max(1)) - 1, v).parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn num(v: f64, digits: u8) -> String {
    format!("{:?}", round_sig(v, digits))
}

fn opt(v: Option<f64>, digits: u8) -> String {
    v.map_or_else(|| SINGULAR.to_string(), |v| num(v, digits))
}

/// A number, or the singularity marker.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Value(f64),
    Marker(&'static str),
}

impl Cell {
    pub fn new(v: Option<f64>, digits: u8) -> Self {
        v.map_or(Cell::Marker(SINGULAR), |v| Cell::Value(round_sig(v, digits)))
    }
}

pub fn write_text(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ChannelMeta {
    channel: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
}

fn channel_meta(channel: &Channel) -> ChannelMeta {
    match channel {
        Channel::Rtn(p) => ChannelMeta { channel: "rtn".into(), a: Some(p.a()), gamma: Some(p.gamma()), alpha: None },
        Channel::Nmd(p) => ChannelMeta { channel: "nmd".into(), a: None, gamma: None, alpha: Some(p.alpha()) },
    }
}

pub fn channel_summary(channel: &Channel) -> String {
    match channel {
        Channel::Rtn(p) => format!("rtn a={:?} gamma={:?}", p.a(), p.gamma()),
        Channel::Nmd(p) => format!("nmd alpha={:?}", p.alpha()),
    }
}

pub fn sweep_csv(records: &[SweepRecord], digits: u8) -> String {
    let mut s = format!("# schema={SCHEMA}\n{SWEEP_HEADER}\n");
    for r in records {
        let cols = [
            num(r.abscissa, digits),
            num(r.dephasing_factor, digits),
            opt(r.decoherence_rate, digits),
            num(r.coherence, digits),
            num(r.mixedness, digits),
            num(r.beta, digits),
            num(r.qfi_theta, digits),
            num(r.qfi_phi, digits),
            num(r.flow_theta, digits),
            num(r.flow_phi, digits),
            num(r.gate_fidelity, digits),
            num(r.holevo_closed, digits),
            r.regime.to_string(),
        ];
        s.push_str(&cols.join(","));
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct SweepRow {
    abscissa: Cell,
    factor: Cell,
    rate: Cell,
    coherence: Cell,
    mixedness: Cell,
    beta: Cell,
    qfi_theta: Cell,
    qfi_phi: Cell,
    flow_theta: Cell,
    flow_phi: Cell,
    gate_fidelity: Cell,
    holevo: Cell,
    regime: String,
}

#[derive(Serialize)]
struct SweepDoc {
    schema: u32,
    #[serde(flatten)]
    channel: ChannelMeta,
    theta: f64,
    phi: f64,
    records: Vec<SweepRow>,
}

pub fn sweep_json(channel: &Channel, theta: f64, phi: f64, records: &[SweepRecord], digits: u8) -> String {
    let c = |v: f64| Cell::new(Some(v), digits);
    let records = records
        .iter()
        .map(|r| SweepRow {
            abscissa: c(r.abscissa),
            factor: c(r.dephasing_factor),
            rate: Cell::new(r.decoherence_rate, digits),
            coherence: c(r.coherence),
            mixedness: c(r.mixedness),
            beta: c(r.beta),
            qfi_theta: c(r.qfi_theta),
            qfi_phi: c(r.qfi_phi),
            flow_theta: c(r.flow_theta),
            flow_phi: c(r.flow_phi),
            gate_fidelity: c(r.gate_fidelity),
            holevo: c(r.holevo_closed),
            regime: r.regime.to_string(),
        })
        .collect();
    to_json(&SweepDoc { schema: SCHEMA, channel: channel_meta(channel), theta, phi, records })
}

pub fn panel_csv(panel: &Panel, digits: u8) -> String {
    let mut s = format!("# schema={SCHEMA}\n# panel={} title={}\n", panel.name, panel.title);
    for (i, series) in panel.series.iter().enumerate() {
        let _ = writeln!(
            s,
            "# series{}: label={} {} theta={} phi={} facet={} scale={}",
            i + 1,
            series.label,
            channel_summary(&series.channel),
            num(series.theta, digits),
            num(series.phi, digits),
            series.facet,
            num(series.scale, digits),
        );
    }
    for x in &panel.singularities {
        let _ = writeln!(s, "# singularity={}", num(*x, digits));
    }
    s.push_str(&panel.abscissa_label);
    for i in 0..panel.series.len() {
        let _ = write!(s, ",series{}", i + 1);
    }
    s.push('\n');
    for (k, x) in panel.abscissa.iter().enumerate() {
        s.push_str(&num(*x, digits));
        for series in &panel.series {
            s.push(',');
            s.push_str(&opt(series.values[k], digits));
        }
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct SeriesDoc {
    label: String,
    #[serde(flatten)]
    channel: ChannelMeta,
    theta: Cell,
    phi: Cell,
    facet: String,
    scale: Cell,
    values: Vec<Cell>,
}

#[derive(Serialize)]
struct PanelDoc {
    schema: u32,
    panel: String,
    title: String,
    abscissa_label: String,
    singularities: Vec<Cell>,
    abscissa: Vec<Cell>,
    series: Vec<SeriesDoc>,
}

pub fn panel_json(panel: &Panel, digits: u8) -> String {
    let c = |v: f64| Cell::new(Some(v), digits);
    let doc = PanelDoc {
        schema: SCHEMA,
        panel: panel.name.clone(),
        title: panel.title.clone(),
        abscissa_label: panel.abscissa_label.clone(),
        singularities: panel.singularities.iter().map(|&x| c(x)).collect(),
        abscissa: panel.abscissa.iter().map(|&x| c(x)).collect(),
        series: panel
            .series
            .iter()
            .map(|s| SeriesDoc {
                label: s.label.clone(),
                channel: channel_meta(&s.channel),
                theta: c(s.theta),
                phi: c(s.phi),
                facet: s.facet.to_string(),
                scale: c(s.scale),
                values: s.values.iter().map(|&v| Cell::new(v, digits)).collect(),
            })
            .collect(),
    };
    to_json(&doc)
}

pub fn table_header() -> String {
    let mut cols = vec!["abscissa".to_string(), "theta".into(), "factor".into()];
    for q in TableQuantity::ALL {
        let n = q.name();
        cols.extend([n.to_string(), format!("{n}_oracle"), format!("{n}_diff")]);
    }
    cols.join(",")
}

pub fn table_csv(entries: &[TableEntry], digits: u8) -> String {
    let mut s = format!("# schema={SCHEMA}\n{}\n", table_header());
    for e in entries {
        let mut cols = vec![num(e.abscissa, digits), num(e.theta, digits), num(e.factor, digits)];
        for cell in &e.cells {
            cols.extend([num(cell.closed, digits), num(cell.oracle, digits), num(cell.diff(), digits)]);
        }
        s.push_str(&cols.join(","));
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct TableCellDoc {
    closed: f64,
    oracle: f64,
    diff: f64,
}

#[derive(Serialize)]
struct TableRowDoc {
    abscissa: f64,
    theta: f64,
    factor: f64,
    coherence: TableCellDoc,
    mixedness: TableCellDoc,
    beta: TableCellDoc,
    gate_fidelity: TableCellDoc,
    holevo: TableCellDoc,
}

#[derive(Serialize)]
struct TableDoc {
    schema: u32,
    #[serde(flatten)]
    channel: ChannelMeta,
    max_diff: f64,
    records: Vec<TableRowDoc>,
}

pub fn table_json(channel: &Channel, entries: &[TableEntry], digits: u8) -> String {
    let r = |v: f64| round_sig(v, digits);
    let cell = |e: &TableEntry, i: usize| {
        let c = e.cells[i];
        TableCellDoc { closed: r(c.closed), oracle: r(c.oracle), diff: r(c.diff()) }
    };
    let records = entries
        .iter()
        .map(|e| TableRowDoc {
            abscissa: r(e.abscissa),
            theta: r(e.theta),
            factor: r(e.factor),
            coherence: cell(e, 0),
            mixedness: cell(e, 1),
            beta: cell(e, 2),
            gate_fidelity: cell(e, 3),
            holevo: cell(e, 4),
        })
        .collect();
    let max_diff = r(entries.iter().map(TableEntry::max_diff).fold(0.0, f64::max));
    to_json(&TableDoc { schema: SCHEMA, channel: channel_meta(channel), max_diff, records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_to_significant_digits() {
        assert_eq!(num(1.0, 12), "1.0");
        assert_eq!(num(0.1 + 0.2, 12), "0.3");
        assert_eq!(num(0.1 + 0.2, 17), "0.30000000000000004");
        assert_eq!(num(-0.0, 12), "0.0");
        assert_eq!(num(2.0 / 3.0, 6), "0.666667");
        assert_eq!(num(1.234567e-9, 6), "1.23457e-9");
        assert_eq!(num(123456789.0, 6), "123457000.0");
    }

    #[test]
    fn cells_serialize_as_numbers_or_marker() {
        assert_eq!(serde_json::to_string(&Cell::new(Some(0.5), 12)).unwrap(), "0.5");
        assert_eq!(serde_json::to_string(&Cell::new(None, 12)).unwrap(), "\"SINGULAR\"");
    }

    #[test]
    fn table_header_has_all_rows() {
        let h = table_header();
        assert!(h.starts_with("abscissa,theta,factor,coherence,coherence_oracle,coherence_diff"));
        assert!(h.ends_with("holevo,holevo_oracle,holevo_diff"));
    }
}
