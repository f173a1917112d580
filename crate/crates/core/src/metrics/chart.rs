//! Minimal SVG line charts of metric curves.

use std::fmt::Write as _;

/// One curve: `(n, value)` points with values kept as their CSV text; `None`
/// marks an undefined value and breaks the line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(usize, Option<String>)>,
}

impl Series {
    pub fn new(label: impl Into<String>) -> Self {
        Series { label: label.into(), points: Vec::new() }
    }
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 200.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders the series on shared axes. Every defined point is also emitted as
/// a marker carrying its length and original value text.
pub fn svg_chart(title: &str, series: &[Series]) -> String {
    let defined = || series.iter().flat_map(|s| s.points.iter());
    let x_min = defined().map(|p| p.0).min().unwrap_or(0) as f64;
    let mut x_max = defined().map(|p| p.0).max().unwrap_or(1) as f64;
    if x_max <= x_min {
        x_max = x_min + 1.0;
    }
    let values = || defined().filter_map(|p| p.1.as_deref().and_then(|v| v.parse::<f64>().ok()));
    let y_min = values().fold(0.0f64, f64::min);
    let mut y_max = values().fold(1.0f64, f64::max);
    if y_max <= y_min {
        y_max = y_min + 1.0;
    }
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |n: f64| LEFT + (n - x_min) / (x_max - x_min) * plot_w;
    let py = |v: f64| TOP + (y_max - v) / (y_max - y_min) * plot_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#, LEFT + plot_w / 2.0, escape(title));

    // axes and ticks
    let _ = writeln!(
        out,
        r#"<path d="M{LEFT},{TOP} V{} H{}" fill="none" stroke="black"/>"#,
        TOP + plot_h,
        LEFT + plot_w
    );
    for i in 0..=5 {
        let v = y_min + (y_max - y_min) * f64::from(i) / 5.0;
        let y = py(v);
        let _ = writeln!(
            out,
            r##"<line x1="{}" y1="{y:.2}" x2="{}" y2="{y:.2}" stroke="#ddd"/><text x="{}" y="{:.2}" text-anchor="end">{v:.1}</text>"##,
            LEFT,
            LEFT + plot_w,
            LEFT - 6.0,
            y + 4.0
        );
    }
    let span = (x_max - x_min).max(1.0);
    let step = (span / 10.0).ceil().max(1.0);
    let mut tick = x_min;
    while tick <= x_max + 1e-9 {
        let x = px(tick);
        let _ = writeln!(
            out,
            r#"<line x1="{x:.2}" y1="{}" x2="{x:.2}" y2="{}" stroke="black"/><text x="{x:.2}" y="{}" text-anchor="middle">{}</text>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 18.0,
            tick as usize
        );
        tick += step;
    }
    let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">trace length n</text>"#, LEFT + plot_w / 2.0, HEIGHT - 10.0);

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(out, r#"<g class="series" data-label="{}" stroke="{color}" fill="{color}">"#, escape(&s.label));
        let mut run: Vec<(f64, f64)> = Vec::new();
        let flush = |run: &mut Vec<(f64, f64)>, out: &mut String| {
            if run.len() > 1 {
                let pts: Vec<String> = run.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                let _ = writeln!(out, r#"<polyline fill="none" stroke-width="1.5" points="{}"/>"#, pts.join(" "));
            }
            run.clear();
        };
        for (n, v) in &s.points {
            match v.as_deref().and_then(|t| t.parse::<f64>().ok().map(|f| (t, f))) {
                Some((text, f)) => {
                    let (x, y) = (px(*n as f64), py(f));
                    run.push((x, y));
                    let _ = writeln!(
                        out,
                        r#"<circle cx="{x:.2}" cy="{y:.2}" r="2" data-n="{n}" data-value="{}"/>"#,
                        escape(text)
                    );
                }
                None => flush(&mut run, &mut out),
            }
        }
        flush(&mut run, &mut out);
        let ly = TOP + 10.0 + 18.0 * i as f64;
        let lx = LEFT + plot_w + 15.0;
        let _ = writeln!(
            out,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke-width="2"/><text x="{}" y="{}" stroke="none" fill="black">{}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(&s.label)
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(vals: &[Option<&str>]) -> Series {
        Series {
            label: "precision_eq".into(),
            points: vals.iter().enumerate().map(|(n, v)| (n, v.map(String::from))).collect(),
        }
    }

    #[test]
    fn flat_line_at_one() {
        let svg = svg_chart("t", &[series(&[Some("1.000000"); 4])]);
        assert_eq!(svg.matches("<polyline").count(), 1);
        // y = 1 maps to the top of the plot area
        assert_eq!(svg.matches(&format!(r#"cy="{TOP:.2}""#)).count(), 4);
    }

    #[test]
    fn undefined_values_leave_gaps() {
        let svg = svg_chart("t", &[series(&[Some("0.5"), Some("0.5"), None, Some("0.7"), Some("0.8")])]);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert!(svg.contains(r#"data-n="3" data-value="0.7""#));
        assert!(!svg.contains(r#"data-n="2""#));
    }
}
