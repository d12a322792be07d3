//! SVG plot of the curves of a run, one `<path>` per depth.

use std::fmt::Write as _;

use crate::curve::SampledCurve;

const WIDTH: f64 = 1200.0;
const MARGIN: f64 = 48.0;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
    "#7f7f7f", "#bcbd22",
];

/// Renders the curves in one frame with the x-axis, integer ticks and a
/// legend. The output depends only on the sample positions.
pub fn render_svg(curves: &[&SampledCurve]) -> String {
    let (mut lo, mut hi) = ([0.0f64, 0.0f64], [1.0f64, 0.0f64]);
    for c in curves {
        for s in &c.samples {
            for k in 0..2 {
                lo[k] = lo[k].min(s.pos[k]);
                hi[k] = hi[k].max(s.pos[k]);
            }
        }
    }
    let span_x = (hi[0] - lo[0]).max(1e-9);
    let span_y = (hi[1] - lo[1]).max(0.1 * span_x);
    let (lo_y, hi_y) = if hi[1] - lo[1] < span_y {
        let mid = 0.5 * (lo[1] + hi[1]);
        (mid - 0.5 * span_y, mid + 0.5 * span_y)
    } else {
        (lo[1], hi[1])
    };
    let scale = (WIDTH - 2.0 * MARGIN) / span_x;
    let height = span_y * scale + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + (x - lo[0]) * scale;
    let py = |y: f64| MARGIN + (hi_y - y) * scale;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}">"#
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    let _ = writeln!(
        out,
        r##"<g id="frame" stroke="#444" stroke-width="1" font-family="sans-serif" font-size="12" fill="#444">"##
    );
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
        px(lo[0]),
        py(0.0),
        px(hi[0]),
        py(0.0)
    );
    let first_tick = lo[0].ceil() as i64;
    let last_tick = hi[0].floor() as i64;
    let stride = (((last_tick - first_tick) / 20) + 1).max(1);
    let mut tick = first_tick;
    while tick <= last_tick {
        let x = px(tick as f64);
        let _ = writeln!(
            out,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}"/><text x="{x:.2}" y="{:.2}" text-anchor="middle" stroke="none">{tick}</text>"#,
            py(0.0) - 4.0,
            py(0.0) + 4.0,
            py(0.0) + 18.0
        );
        tick += stride;
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" stroke="none">x in bicycle lengths, y range [{lo_y:.3}, {hi_y:.3}]</text>"#,
        MARGIN,
        MARGIN - 16.0
    );
    out.push_str("</g>\n");

    for (k, c) in curves.iter().enumerate() {
        let color = PALETTE[c.depth % PALETTE.len()];
        let _ = write!(
            out,
            r#"<path id="depth-{d}" class="curve depth-{d}" fill="none" stroke="{color}" stroke-width="1.2" d=""#,
            d = c.depth
        );
        for (i, s) in c.samples.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(out, "{cmd}{:.2} {:.2}", px(s.pos[0]), py(s.pos[1]));
            if i + 1 < c.samples.len() {
                out.push(' ');
            }
        }
        out.push_str("\"/>\n");
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" fill="{color}">depth {}</text>"#,
            WIDTH - MARGIN - 70.0,
            MARGIN + 14.0 * k as f64,
            c.depth
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_path_per_curve() {
        let ts = [0.0, 0.5, 1.0];
        let a = SampledCurve::from_points(&ts, &[[0.0, 0.0], [0.5, 0.1], [1.0, 0.0]], 0).unwrap();
        let b = SampledCurve::from_points(&ts, &[[0.0, 0.0], [-0.5, 0.3], [1.0, 0.0]], 1).unwrap();
        let svg = render_svg(&[&a, &b]);
        assert_eq!(svg.matches("<path ").count(), 2);
        assert!(svg.contains("id=\"depth-0\"") && svg.contains("id=\"depth-1\""));
        assert!(svg.contains("id=\"frame\""));
        assert_eq!(svg, render_svg(&[&a, &b]));
    }
}
