//! Minimal SVG 1.1 line plot for the product-family purity curves.

use std::fmt::Write as _;

use crate::repro::Fig1Row;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 50.0;
const Y_MIN: f64 = 0.2;
const Y_MAX: f64 = 0.55;

struct Frame {
    x_min: f64,
    x_max: f64,
}

impl Frame {
    fn x(&self, p: f64) -> f64 {
        LEFT + (p - self.x_min) / (self.x_max - self.x_min) * (WIDTH - LEFT - RIGHT)
    }

    fn y(&self, v: f64) -> f64 {
        let v = v.clamp(Y_MIN, Y_MAX);
        HEIGHT - BOTTOM - (v - Y_MIN) / (Y_MAX - Y_MIN) * (HEIGHT - TOP - BOTTOM)
    }
}

/// A labelled vertical marker.
#[derive(Debug, Clone, Copy)]
pub struct Marker<'a> {
    pub p: f64,
    pub label: &'a str,
}

/// Renders purity, b1, b2 and the classic radius against p, shading `shaded` and marking `markers`.
pub fn fig1_svg(rows: &[Fig1Row], shaded: Option<(f64, f64)>, markers: &[Marker]) -> String {
    let frame = Frame {
        x_min: rows.first().map_or(0.0, |r| r.p),
        x_max: rows.last().map_or(0.5, |r| r.p).max(1e-12),
    };
    let (plot_right, plot_bottom) = (WIDTH - RIGHT, HEIGHT - BOTTOM);
    let mut s = String::new();
    writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();

    if let Some((a, b)) = shaded {
        let (xa, xb) = (frame.x(a), frame.x(b));
        writeln!(
            s,
            r##"<rect x="{xa:.2}" y="{TOP}" width="{:.2}" height="{:.2}" fill="#cfe8cf" fill-opacity="0.7"/>"##,
            xb - xa,
            plot_bottom - TOP
        )
        .unwrap();
    }

    // axes
    writeln!(
        s,
        r#"<path d="M{LEFT},{TOP} L{LEFT},{plot_bottom} L{plot_right},{plot_bottom}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    for i in 0..=5 {
        let p = frame.x_min + (frame.x_max - frame.x_min) * i as f64 / 5.0;
        let x = frame.x(p);
        writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{plot_bottom}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{p:.2}</text>"#,
            plot_bottom + 5.0,
            plot_bottom + 18.0
        )
        .unwrap();
    }
    for i in 0..=7 {
        let v = Y_MIN + 0.05 * i as f64;
        let y = frame.y(v);
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{v:.2}</text>"#,
            LEFT - 5.0,
            LEFT - 8.0,
            y + 4.0
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">p</text>"#,
        (LEFT + plot_right) / 2.0,
        HEIGHT - 12.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">purity</text>"#,
        (TOP + plot_bottom) / 2.0,
        (TOP + plot_bottom) / 2.0
    )
    .unwrap();

    for m in markers {
        let x = frame.x(m.p);
        writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{plot_bottom}" stroke="#555555" stroke-dasharray="4 3"/><text x="{:.2}" y="{:.2}" font-size="10">{}</text>"##,
            x + 3.0,
            TOP + 12.0,
            escape(m.label)
        )
        .unwrap();
    }

    let curves: [(&str, &str, fn(&Fig1Row) -> f64); 4] = [
        ("purity", "#1f77b4", |r| r.purity),
        ("B1", "#d62728", |r| r.b1),
        ("B2", "#2ca02c", |r| r.b2),
        ("1/3", "#7f7f7f", |r| r.classic),
    ];
    for (k, (name, color, get)) in curves.iter().enumerate() {
        let pts: Vec<String> = rows
            .iter()
            .map(|r| format!("{:.2},{:.2}", frame.x(r.p), frame.y(get(r))))
            .collect();
        writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            pts.join(" ")
        )
        .unwrap();
        let ly = TOP + 10.0 + 20.0 * k as f64;
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            plot_right + 15.0,
            plot_right + 40.0,
            plot_right + 46.0,
            ly + 4.0,
            escape(name)
        )
        .unwrap();
    }
    if shaded.is_some() {
        let ly = TOP + 10.0 + 20.0 * curves.len() as f64;
        writeln!(
            s,
            r##"<rect x="{:.2}" y="{:.2}" width="25" height="10" fill="#cfe8cf"/><text x="{:.2}" y="{:.2}">abs-sep</text>"##,
            plot_right + 15.0,
            ly - 5.0,
            plot_right + 46.0,
            ly + 4.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
