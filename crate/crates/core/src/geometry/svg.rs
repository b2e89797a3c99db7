//! Deterministic SVG export.

use std::fmt::Write;

use super::{slope_classes, Drawing};
use crate::scalar::Scalar;

const MARGIN: f64 = 0.05;

fn color(class: usize) -> String {
    // Golden-angle hue walk: neighbouring classes get distant hues.
    let hue = (class as f64 * 137.507_764) % 360.0;
    format!("hsl({hue:.1},70%,40%)")
}

/// Render vertices as circles and edges as paths, one stroke colour per
/// slope class. The y axis points up.
pub fn render_svg<S: Scalar>(d: &Drawing<S>) -> String {
    let pts: Vec<(f64, f64)> = d.vertices.iter().chain(d.bends.values()).map(|p| p.to_f64()).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let size = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = MARGIN * size;
    let (vx, vy, vw, vh) = (x0 - pad, -y1 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let stroke = size / 200.0;
    let radius = size / 100.0;

    let segs = d.segments();
    let classes = slope_classes(d).unwrap_or_else(|_| vec![0; segs.len()]);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}">"#
    )
    .unwrap();
    writeln!(out, r#"<g fill="none" stroke-width="{stroke:.6}" stroke-linecap="round">"#).unwrap();
    for (s, class) in segs.iter().zip(classes) {
        let (ax, ay) = d.point(s.from).to_f64();
        let (bx, by) = d.point(s.to).to_f64();
        writeln!(
            out,
            r#"<path d="M {ax:.6} {:.6} L {bx:.6} {:.6}" stroke="{}" data-edge="{}"/>"#,
            -ay,
            -by,
            color(class),
            s.edge
        )
        .unwrap();
    }
    writeln!(out, "</g>\n<g fill=\"black\">").unwrap();
    for (v, p) in d.vertices.iter().enumerate() {
        let (x, y) = p.to_f64();
        writeln!(out, r#"<circle cx="{x:.6}" cy="{:.6}" r="{radius:.6}" data-vertex="{v}"/>"#, -y).unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn svg_is_deterministic_and_complete() {
        let d = Drawing::new(
            vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 2.0)],
            vec![(0, 1), (0, 2), (1, 2)],
        );
        let a = render_svg(&d);
        assert_eq!(a, render_svg(&d.clone()));
        assert_eq!(a.matches("<circle").count(), 3);
        assert_eq!(a.matches("<path").count(), 3);
        assert!(a.contains(r#"viewBox="-0.100000 -2.100000 1.200000 2.200000""#));
        assert!(a.contains("cy=\"-2.000000\""));
    }
}
