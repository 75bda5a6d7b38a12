//! SVG output. The y axis points up in drawings and down on screen, so rows are
//! flipped. Output depends only on the drawing and the options.

use std::fmt::Write as _;

use crate::drawing::Drawing;
use crate::validate::find_crossings;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    /// Pixels per grid unit.
    pub scale: u32,
    pub mark_crossings: bool,
    pub color_by_factor: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 4,
            mark_crossings: false,
            color_by_factor: false,
        }
    }
}

/// The x pair (F0, F2) in blues, the y pair (F1, F3) in oranges.
const FACTOR_COLORS: [&str; 4] = ["#1f77b4", "#ff7f0e", "#6baed6", "#fdae6b"];
const MARGIN: f64 = 8.0;

pub fn to_svg(d: &Drawing, opts: &RenderOptions) -> String {
    let points = d.positions.iter().chain(d.edges.iter().flat_map(|e| e.bends.iter()));
    let (mut x0, mut y0, mut x1, mut y1) = (0, 0, 0, 0);
    for (i, p) in points.enumerate() {
        if i == 0 {
            (x0, y0, x1, y1) = (p.x, p.y, p.x, p.y);
        }
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let s = opts.scale.max(1) as f64;
    let sx = |x: f64| (x - x0 as f64) * s + MARGIN;
    let sy = |y: f64| (y1 as f64 - y) * s + MARGIN;
    let width = (x1 - x0) as f64 * s + 2.0 * MARGIN;
    let height = (y1 - y0) as f64 * s + 2.0 * MARGIN;
    let radius = (s * 0.75).clamp(1.5, 6.0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<g fill="none" stroke-width="1">"#);
    for e in &d.edges {
        let color = match (opts.color_by_factor, e.factor, e.augmented) {
            (true, Some(f), _) => FACTOR_COLORS[f as usize % 4],
            (_, _, true) => "#999999",
            _ => "#000000",
        };
        let pts: Vec<String> = d
            .polyline(e)
            .iter()
            .map(|p| format!("{},{}", sx(p.x as f64), sy(p.y as f64)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline class="edge" data-edge="{}" stroke="{color}" points="{}"/>"#,
            e.id.0,
            pts.join(" ")
        );
    }
    let _ = writeln!(out, "</g>");

    if opts.mark_crossings {
        let arm = radius * 1.5;
        let _ = writeln!(out, r##"<g stroke="#d62728" stroke-width="1">"##);
        for c in find_crossings(d) {
            let (x, y) = c.point.to_f64();
            let (cx, cy) = (sx(x), sy(y));
            let _ = writeln!(
                out,
                r#"<path class="crossing" d="M{:.3},{:.3}L{:.3},{:.3}M{:.3},{:.3}L{:.3},{:.3}"/>"#,
                cx - arm,
                cy - arm,
                cx + arm,
                cy + arm,
                cx - arm,
                cy + arm,
                cx + arm,
                cy - arm
            );
        }
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(out, r#"<g fill="black">"#);
    for (v, p) in d.positions.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<circle class="vertex" data-vertex="{v}" cx="{}" cy="{}" r="{radius}"/>"#,
            sx(p.x as f64),
            sy(p.y as f64)
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
