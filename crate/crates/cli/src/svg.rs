// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Minimal line-plot renderer.

use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;
const STYLES: [(&str, &str); 4] = [("#1f4e9c", ""), ("#c0392b", "6 4"), ("#2e8b57", "2 3"), ("#7d3c98", "8 3 2 3")];

pub struct Curve<'a> {
    pub label: &'a str,
    pub values: &'a [Option<f64>],
}

pub struct Plot<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub x: &'a [f64],
    pub curves: Vec<Curve<'a>>,
    /// Drawn as dashed vertical lines.
    pub markers: &'a [f64],
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn tick(v: f64) -> String {
    let s = format!("{:.3e}", v);
    let plain = format!("{:.4}", v);
    if v == 0.0 || (v.abs() >= 1e-3 && v.abs() < 1e4) {
        plain.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Vertical range. With singular markers present the extreme 2% of samples
/// on each side are clipped so the divergence does not flatten the curve.
fn y_range(plot: &Plot) -> (f64, f64) {
    let mut ys: Vec<f64> = plot.curves.iter().flat_map(|c| c.values.iter().flatten().copied()).collect();
    if ys.is_empty() {
        return (-1.0, 1.0);
    }
    ys.sort_by(f64::total_cmp);
    let (lo, hi) = if plot.markers.is_empty() {
        (ys[0], ys[ys.len() - 1])
    } else {
        let k = ys.len() / 50;
        (ys[k], ys[ys.len() - 1 - k])
    };
    let span = hi - lo;
    if span <= 1e-12 * lo.abs().max(1.0) {
        let pad = 0.1 * lo.abs().max(1.0);
        (lo - pad, hi + pad)
    } else {
        (lo - 0.05 * span, hi + 0.05 * span)
    }
}

pub fn render(plot: &Plot) -> String {
    let (x0, x1) = (plot.x[0], plot.x[plot.x.len() - 1]);
    let (y0, y1) = y_range(plot);
    let pw = WIDTH - LEFT - RIGHT;
    let ph = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + pw * (x - x0) / (x1 - x0);
    let sy = |y: f64| TOP + ph * (1.0 - (y - y0) / (y1 - y0));

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(s, r#"<clipPath id="plot"><rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}"/></clipPath>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(plot.title)
    );
    let _ = writeln!(s, r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#);

    for i in 0..=4 {
        let fx = x0 + (x1 - x0) * i as f64 / 4.0;
        let fy = y0 + (y1 - y0) * i as f64 / 4.0;
        let (px, py) = (sx(fx), sy(fy));
        let _ = writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/>"#,
            TOP + ph,
            TOP + ph + 5.0
        );
        let _ = writeln!(s, r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, TOP + ph + 18.0, tick(fx));
        let _ = writeln!(s, r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/>"#, LEFT - 5.0);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, LEFT - 8.0, py + 4.0, tick(fy));
    }
    if y0 < 0.0 && y1 > 0.0 {
        let z = sy(0.0);
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{z:.2}" x2="{:.2}" y2="{z:.2}" stroke="#999" stroke-width="0.5"/>"##,
            LEFT + pw
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        LEFT + pw / 2.0,
        HEIGHT - 12.0,
        escape(plot.x_label)
    );

    for &m in plot.markers {
        let px = sx(m);
        let _ = writeln!(
            s,
            r##"<line x1="{px:.2}" y1="{TOP}" x2="{px:.2}" y2="{:.2}" stroke="#555" stroke-dasharray="3 3"/>"##,
            TOP + ph
        );
    }

    for (i, curve) in plot.curves.iter().enumerate() {
        let (color, dash) = STYLES[i % STYLES.len()];
        let dash = if dash.is_empty() { String::new() } else { format!(r#" stroke-dasharray="{dash}""#) };
        let mut runs: Vec<Vec<String>> = vec![Vec::new()];
        for (x, v) in plot.x.iter().zip(curve.values) {
            match v {
                Some(y) => runs.last_mut().expect("nonempty").push(format!("{:.2},{:.2}", sx(*x), sy(*y))),
                None => runs.push(Vec::new()),
            }
        }
        for run in runs.iter().filter(|r| r.len() > 1) {
            let _ = writeln!(
                s,
                r#"<polyline clip-path="url(#plot)" fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{}"/>"#,
                run.join(" ")
            );
        }
        let ly = TOP + 16.0 + 16.0 * i as f64;
        let lx = LEFT + 10.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="1.5"{dash}/>"#,
            lx + 24.0
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, lx + 30.0, ly + 4.0, escape(curve.label));
    }
    s.push_str("</svg>\n");
    s
}
