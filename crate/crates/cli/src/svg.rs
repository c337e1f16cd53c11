//! Plane-curve drawing with gaps in the under strand.
//!
//! The curve `x = cos(aθ), y = cos(bθ)`, `θ ∈ [0, π]`, is sampled adaptively
//! in θ. Crossing points come from the exact angles; a sample is dropped when
//! it lies within the gap radius of a crossing whose under passage is the
//! nearest point of `E` in angle.

use std::f64::consts::PI;
use std::fmt::Write;

use chebknot::KnotDiagram;

const SIZE: f64 = 480.0;
const PAD: f64 = 24.0;
/// Maximum distance, in pixels, between the curve and a sampled chord.
const TOLERANCE: f64 = 0.25;
const MAX_DEPTH: u32 = 12;

struct Gap {
    x: f64,
    y: f64,
    /// Angle of the under passage.
    theta: f64,
}

fn to_px(x: f64, y: f64) -> (f64, f64) {
    let half = (SIZE - 2.0 * PAD) / 2.0;
    (PAD + half * (1.0 + x), PAD + half * (1.0 - y))
}

fn point(a: f64, b: f64, theta: f64) -> (f64, f64) {
    to_px((a * theta).cos(), (b * theta).cos())
}

/// Splits `[t0, t1]` until chords are flat and no longer than `max_len`,
/// so that every gap contains samples.
fn refine(a: f64, b: f64, t0: f64, t1: f64, max_len: f64, depth: u32, out: &mut Vec<f64>) {
    let tm = 0.5 * (t0 + t1);
    let (p0, p1, pm) = (point(a, b, t0), point(a, b, t1), point(a, b, tm));
    let dev = ((pm.0 - 0.5 * (p0.0 + p1.0)).powi(2) + (pm.1 - 0.5 * (p0.1 + p1.1)).powi(2)).sqrt();
    let len = (p1.0 - p0.0).hypot(p1.1 - p0.1);
    if depth < MAX_DEPTH && (dev > TOLERANCE || len > max_len) {
        refine(a, b, t0, tm, max_len, depth + 1, out);
        refine(a, b, tm, t1, max_len, depth + 1, out);
    } else {
        out.push(t1);
    }
}

/// SVG document for the diagram's plane projection.
pub fn render(diagram: &KnotDiagram, title: &str) -> String {
    let (a, b) = (diagram.curve.a as f64, diagram.curve.b as f64);
    let ab = a * b;
    let gaps: Vec<Gap> = diagram
        .crossings
        .iter()
        .map(|dc| {
            let c = &dc.crossing;
            // t (angle uπ/ab) is over exactly when z(t) > z(s)
            let under = if dc.over_first() { c.u2 } else { c.u };
            let (x, y) = to_px(c.x(), c.y());
            Gap {
                x,
                y,
                theta: under as f64 * PI / ab,
            }
        })
        .collect();
    let spacing = gaps
        .iter()
        .enumerate()
        .flat_map(|(i, g)| gaps[i + 1..].iter().map(move |h| (g.x - h.x).hypot(g.y - h.y)))
        .fold(SIZE, f64::min);
    let radius = (0.3 * spacing).clamp(1.5, 9.0);
    let half_step = 0.5 * PI / ab;

    let coarse = (16.0 * (a + b)) as usize;
    let mut thetas = vec![0.0];
    for i in 0..coarse {
        let t0 = PI * i as f64 / coarse as f64;
        let t1 = PI * (i + 1) as f64 / coarse as f64;
        refine(a, b, t0, t1, 0.25 * radius, 0, &mut thetas);
    }

    let hidden = |theta: f64, (x, y): (f64, f64)| {
        gaps.iter()
            .any(|g| (theta - g.theta).abs() < half_step && (x - g.x).hypot(y - g.y) < radius)
    };
    let mut runs: Vec<Vec<(f64, f64)>> = vec![Vec::new()];
    for &theta in &thetas {
        let p = point(a, b, theta);
        if hidden(theta, p) {
            if !runs.last().unwrap().is_empty() {
                runs.push(Vec::new());
            }
        } else {
            runs.last_mut().unwrap().push(p);
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, "<title>{title}</title>");
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<g fill="none" stroke="black" stroke-width="1.6" stroke-linecap="round" stroke-linejoin="round">"#
    );
    for run in runs.iter().filter(|r| r.len() >= 2) {
        let mut d = String::new();
        for (i, (x, y)) in run.iter().enumerate() {
            let _ = write!(d, "{}{x:.2},{y:.2}", if i == 0 { "M" } else { " L" });
        }
        let _ = writeln!(svg, r#"<path d="{d}"/>"#);
    }
    let _ = writeln!(svg, "</g>");
    for theta in [0.0, PI] {
        let (x, y) = point(a, b, theta);
        let _ = writeln!(svg, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5" fill="black"/>"#);
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use chebknot::harmonic::build_diagram;
    use chebknot::HarmonicKnotSpec;

    fn trefoil() -> KnotDiagram {
        build_diagram(&HarmonicKnotSpec::new(3, 4, 5).unwrap()).unwrap()
    }

    #[test]
    fn one_gap_per_crossing() {
        let svg = render(&trefoil(), "H(3,4,5)");
        // an open curve cut at n under passages leaves n + 1 pieces
        assert_eq!(svg.matches("<path").count(), 4);
        for (a, b, c) in [(5, 6, 19), (3, 11, 19), (4, 9, 11)] {
            let d = build_diagram(&HarmonicKnotSpec::new(a, b, c).unwrap()).unwrap();
            let n = d.crossing_count();
            assert_eq!(render(&d, "x").matches("<path").count(), n + 1, "H({a},{b},{c})");
        }
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn mirror_moves_the_gaps() {
        let d = trefoil();
        assert_ne!(render(&d, "x"), render(&d.mirror(), "x"));
        assert_eq!(render(&d, "x"), render(&d, "x"));
    }
}
