//! Standalone SVG rendering of a point set and, optionally, a drawing.
//!
//! Shapes use the instance's own integer coordinates; a single group
//! transform flips and scales them into the viewport.

use std::fmt::Write as _;
use std::path::Path;

use super::HarnessError;
use crate::embed::Mapping;
use crate::geometry::Point;
use crate::plane3tree::PlaneGraphInput;

const VIEW: f64 = 800.0;
const MARGIN: f64 = 20.0;

pub fn render_svg(graph: &PlaneGraphInput, points: &[Point], mapping: Option<&Mapping>) -> String {
    let xs = points.iter().map(|p| p.x());
    let ys = points.iter().map(|p| p.y());
    let (xmin, xmax) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(1));
    let (ymin, ymax) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(1));
    let span = ((xmax - xmin).max(ymax - ymin)).max(1) as f64;
    let scale = (VIEW - 2.0 * MARGIN) / span;
    let radius = span / 150.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" height="{VIEW}" viewBox="0 0 {VIEW} {VIEW}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    // x' = scale * (x - xmin) + MARGIN, y' = VIEW - MARGIN - scale * (y - ymin)
    let _ = writeln!(
        s,
        r#"<g transform="matrix({scale} 0 0 {} {} {})">"#,
        -scale,
        MARGIN - scale * xmin as f64,
        VIEW - MARGIN + scale * ymin as f64
    );
    if let Some(m) = mapping {
        let outer: Vec<(usize, usize)> = (0..3).map(|i| (graph.outer[i], graph.outer[(i + 1) % 3])).collect();
        let is_outer = |u: usize, v: usize| outer.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
        let _ = writeln!(s, r#"<g class="edges" stroke="black" vector-effect="non-scaling-stroke">"#);
        for &(u, v) in &graph.edges {
            let (a, b) = (m.assignment[u], m.assignment[v]);
            let class = if is_outer(u, v) { r#" class="outer" stroke="crimson" stroke-width="3""# } else { "" };
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"{class} vector-effect="non-scaling-stroke"/>"#,
                a.x(),
                a.y(),
                b.x(),
                b.y()
            );
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, r#"<g class="points" fill="steelblue">"#);
    for p in points {
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="{radius}"/>"#, p.x(), p.y());
    }
    let _ = writeln!(s, "</g>\n</g>\n</svg>");
    s
}

pub fn export_svg(
    graph: &PlaneGraphInput,
    points: &[Point],
    mapping: Option<&Mapping>,
    path: &Path,
) -> Result<(), HarnessError> {
    std::fs::write(path, render_svg(graph, points, mapping))?;
    Ok(())
}
