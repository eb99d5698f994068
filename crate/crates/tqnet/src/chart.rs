//! Static SVG bar charts of a temporal quantity.
//!
//! The x axis covers the instants `tmin..tmax` (half-open). Each interval
//! with a positive value is drawn as one bar spanning its instants, with
//! height proportional to `value / tqmax`. Output contains no scripts and is
//! byte-identical for identical inputs.

use std::fmt::Write;

use crate::error::{Error, Result};
use tqnet_core::{Num, TemporalQuantity, Time};

#[derive(Clone, Debug, PartialEq)]
pub struct ChartOptions {
    pub tmin: Time,
    pub tmax: Time,
    /// Value mapped to the full plot height; defaults to the largest value shown.
    pub tqmax: Option<f64>,
    pub width: u32,
    pub height: u32,
    pub title: String,
    pub fill: String,
}

impl Default for ChartOptions {
    fn default() -> Self {
        ChartOptions {
            tmin: 0,
            tmax: 1,
            tqmax: None,
            width: 600,
            height: 150,
            title: String::new(),
            fill: "red".into(),
        }
    }
}

const LEFT: f64 = 45.0;
const RIGHT: f64 = 10.0;
const TOP: f64 = 22.0;
const BOTTOM: f64 = 22.0;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Tick spacing in years keeping at most ~20 labels.
fn tick_step(span: Time) -> Time {
    [1, 2, 5, 10, 20, 25, 50, 100, 200, 500, 1000]
        .into_iter()
        .find(|&s| span / s <= 20)
        .unwrap_or(span.max(1))
}

pub fn render_svg(q: &TemporalQuantity, opts: &ChartOptions) -> Result<String> {
    if opts.tmin >= opts.tmax {
        return Err(Error::Invalid(format!("tmin ({}) must be below tmax ({})", opts.tmin, opts.tmax)));
    }
    let visible: Vec<(Time, Time, f64)> = q
        .triples()
        .filter_map(|(s, f, v)| {
            let (s, f) = (s.max(opts.tmin), f.min(opts.tmax));
            (s < f && v > 0.0).then_some((s, f, v))
        })
        .collect();
    let tqmax = opts
        .tqmax
        .filter(|m| *m > 0.0)
        .unwrap_or_else(|| visible.iter().map(|b| b.2).fold(0.0, f64::max).max(1.0));

    let (w, h) = (f64::from(opts.width), f64::from(opts.height));
    let plot_w = (w - LEFT - RIGHT).max(1.0);
    let plot_h = (h - TOP - BOTTOM).max(1.0);
    let span = opts.tmax - opts.tmin;
    let unit = plot_w / span as f64;
    let x_of = |t: Time| LEFT + (t - opts.tmin) as f64 * unit;
    let base = TOP + plot_h;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        opts.width, opts.height, opts.width, opts.height
    )
    .unwrap();
    writeln!(svg, r#"<rect class="background" x="0" y="0" width="{}" height="{}" fill="white"/>"#, opts.width, opts.height).unwrap();
    if !opts.title.is_empty() {
        writeln!(svg, r#"<text class="title" x="{:.2}" y="15" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#, w / 2.0, escape(&opts.title)).unwrap();
    }
    for (s, f, v) in &visible {
        let bar_h = (v / tqmax).min(1.0) * plot_h;
        writeln!(
            svg,
            r#"<rect class="bar" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"><title>[{}, {}): {}</title></rect>"#,
            x_of(*s),
            base - bar_h,
            (f - s) as f64 * unit,
            bar_h,
            escape(&opts.fill),
            s,
            f,
            Num(*v)
        )
        .unwrap();
    }
    writeln!(svg, r#"<line class="axis" x1="{LEFT:.2}" y1="{base:.2}" x2="{:.2}" y2="{base:.2}" stroke="black"/>"#, LEFT + plot_w).unwrap();
    writeln!(svg, r#"<line class="axis" x1="{LEFT:.2}" y1="{TOP:.2}" x2="{LEFT:.2}" y2="{base:.2}" stroke="black"/>"#).unwrap();
    let step = tick_step(span);
    let first_tick = opts.tmin + (step - opts.tmin.rem_euclid(step)) % step;
    for t in (first_tick..opts.tmax).step_by(step as usize) {
        writeln!(
            svg,
            r#"<text class="tick" x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="9" text-anchor="middle">{}</text>"#,
            x_of(t) + unit / 2.0,
            base + 13.0,
            t
        )
        .unwrap();
    }
    for (value, y) in [(0.0, base), (tqmax, TOP)] {
        writeln!(
            svg,
            r#"<text class="value" x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="9" text-anchor="end">{}</text>"#,
            LEFT - 4.0,
            y + 3.0,
            Num(value)
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
