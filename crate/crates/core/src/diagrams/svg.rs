use std::fmt::Write;

use super::{BrauerDiagram, Edge, Labeling, Row};

/// SVG drawing of `d` in user coordinates: top row at `y = 0`, bottom row
/// at `y = 1`, columns at `x = 0, 1, ..., n-1`.
///
/// Arcs are straight segments. Cups bulge downwards and caps upwards, with
/// depth proportional to their span. Vertices are labelled under `lab`.
pub fn render_svg(d: &BrauerDiagram, lab: Labeling) -> String {
    let n = d.n();
    let width = n.max(1) as f64;
    // deepest possible cup/cap reaches 0.4 of the row gap
    let depth_per_col = 0.4 / width;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-0.5 -0.5 {width} 2" width="{w}" height="{h}">"#,
        w = 60 * n.max(1),
        h = 120
    );
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke="black" stroke-width="0.02" stroke-linecap="round">"#
    );
    for e in d.edges() {
        match e {
            Edge::Arc { top, bottom } => {
                let _ = writeln!(out, r#"<line x1="{top}" y1="0" x2="{bottom}" y2="1"/>"#);
            }
            Edge::Cup(u, v) => {
                let depth = depth_per_col * (v - u) as f64;
                let _ = writeln!(
                    out,
                    r#"<path d="M {u} 0 Q {mid} {c} {v} 0"/>"#,
                    mid = (u + v) as f64 / 2.0,
                    c = fmt_num(2.0 * depth)
                );
            }
            Edge::Cap(u, v) => {
                let depth = depth_per_col * (v - u) as f64;
                let _ = writeln!(
                    out,
                    r#"<path d="M {u} 1 Q {mid} {c} {v} 1"/>"#,
                    mid = (u + v) as f64 / 2.0,
                    c = fmt_num(1.0 - 2.0 * depth)
                );
            }
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<g fill="black" font-family="sans-serif" font-size="0.22" text-anchor="middle">"#
    );
    for row in [Row::Top, Row::Bottom] {
        let (y, ty) = match row {
            Row::Top => (0, "-0.15"),
            Row::Bottom => (1, "1.3"),
        };
        for c in 0..n {
            let label = d.label(d.position(row, c), lab);
            let _ = writeln!(out, r#"<circle cx="{c}" cy="{y}" r="0.05"/>"#);
            let _ = writeln!(out, r#"<text x="{c}" y="{ty}">{label}</text>"#);
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

// Fixed precision keeps the output byte-stable.
fn fmt_num(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Variant;

    #[test]
    fn draws_every_edge_and_label() {
        let d = BrauerDiagram::from_edges(
            3,
            &[
                Edge::Cup(0, 1),
                Edge::Cap(1, 2),
                Edge::Arc { top: 2, bottom: 0 },
            ],
        )
        .unwrap();
        let svg = render_svg(&d, Variant::B);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<path").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert!(svg.contains(r#"<line x1="2" y1="0" x2="0" y2="1"/>"#));
        // bottom row reads 3 2 1 under backward labels
        assert!(svg.contains(r#"<text x="0" y="1.3">3</text>"#));
        assert_eq!(svg, render_svg(&d, Variant::B));
    }
}
