//! Per-plane SVG rendering. Coordinates are rounded to six decimals for
//! display only.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::geometry::{rat, Rational};
use crate::projection::{project, PlanePair, PlaneProjection};

const SIZE: i64 = 1000;
const MARGIN: i64 = 40;

/// `r` rounded half away from zero to six decimals.
fn fixed6(r: &Rational) -> String {
    let scaled = r * Rational::from_integer(BigInt::from(1_000_000));
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem.abs() * 2u8;
    let q = if twice >= *scaled.denom() { q + scaled.numer().signum() } else { q };
    let neg = q.is_negative();
    let digits = q.abs().to_string();
    let digits = format!("{digits:0>7}");
    let (int, frac) = digits.split_at(digits.len() - 6);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

/// Draws the projection onto `plane`: every vertex as a labelled circle and
/// the edges assigned to `plane` as lines, fitted into a 1000x1000 view box
/// with the y axis pointing up.
pub fn export_svg(pp: &PlaneProjection, plane: PlanePair) -> Result<String> {
    let points = project(pp.embedding(), plane)?;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    )
    .unwrap();
    writeln!(out, "<title>plane {plane}</title>").unwrap();
    let min =
        |f: fn(&crate::geometry::Point2) -> &Rational| points.iter().map(f).min().cloned().unwrap_or_else(|| rat(0));
    let max =
        |f: fn(&crate::geometry::Point2) -> &Rational| points.iter().map(f).max().cloned().unwrap_or_else(|| rat(0));
    let (x0, x1, y0, y1) = (min(|p| &p.x), max(|p| &p.x), min(|p| &p.y), max(|p| &p.y));
    let (w, h) = (&x1 - &x0, &y1 - &y0);
    let span = if w > h { w.clone() } else { h.clone() };
    let inner = rat(SIZE - 2 * MARGIN);
    let scale = if span.is_zero() { rat(1) } else { &inner / &span };
    // centre the shorter side
    let ox = rat(MARGIN) + (&inner - &w * &scale) / rat(2);
    let oy = rat(MARGIN) + (&inner - &h * &scale) / rat(2);
    let screen: Vec<(String, String)> = points
        .iter()
        .map(|p| {
            let sx = &ox + (&p.x - &x0) * &scale;
            let sy = rat(SIZE) - (&oy + (&p.y - &y0) * &scale);
            (fixed6(&sx), fixed6(&sy))
        })
        .collect();
    writeln!(out, r#"<g stroke="black" stroke-width="2">"#).unwrap();
    for (u, v) in pp.edges_in_plane(plane) {
        let ((ux, uy), (vx, vy)) = (&screen[u], &screen[v]);
        writeln!(out, r#"<line x1="{ux}" y1="{uy}" x2="{vx}" y2="{vy}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g font-family="sans-serif" font-size="14" text-anchor="middle">"#).unwrap();
    for (v, (x, y)) in screen.iter().enumerate() {
        writeln!(out, r#"<circle cx="{x}" cy="{y}" r="9" fill="white" stroke="black"/>"#).unwrap();
        writeln!(out, r#"<text x="{x}" y="{y}" dy="5">{v}</text>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;

    #[test]
    fn rounding() {
        assert_eq!(fixed6(&rat(3)), "3.000000");
        assert_eq!(fixed6(&ratio(1, 3)), "0.333333");
        assert_eq!(fixed6(&ratio(2, 3)), "0.666667");
        assert_eq!(fixed6(&ratio(-1, 8_000_000)), "0.000000");
        assert_eq!(fixed6(&ratio(-5, 2)), "-2.500000");
        assert_eq!(fixed6(&ratio(1, 2_000_000)), "0.000001");
    }

    #[test]
    fn renders_assigned_edges_only() {
        let pp = crate::constructors::extremal_two_plane(14).unwrap();
        let h = export_svg(&pp, PlanePair { i: 0, j: 1 }).unwrap();
        let m = export_svg(&pp, PlanePair { i: 1, j: 2 }).unwrap();
        let lines = |s: &str| s.matches("<line ").count();
        assert_eq!(lines(&h) + lines(&m), 69 + 3);
        assert_eq!(h.matches("<circle ").count(), 14);
        let empty = export_svg(&pp, PlanePair { i: 0, j: 2 }).unwrap();
        assert_eq!(lines(&empty), 0);
        assert_eq!(empty.matches("<circle ").count(), 14);
        assert_eq!(h, export_svg(&pp, PlanePair { i: 0, j: 1 }).unwrap());
        assert!(export_svg(&pp, PlanePair { i: 1, j: 3 }).is_err());
    }

    #[test]
    fn fits_view_box() {
        let pp = crate::constructors::complete_graph_embedding(8).unwrap();
        let s = export_svg(&pp, PlanePair { i: 0, j: 1 }).unwrap();
        for cap in s.split('"').filter_map(|t| t.parse::<f64>().ok()) {
            assert!((0.0..=1000.0).contains(&cap));
        }
    }
}
