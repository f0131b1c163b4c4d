//! Deterministic SVG renderings of the three object families: labeled
//! polygons with diagonals, Shi tableaux in their staircase layout, and
//! partitions inside their bounding staircase.

use fuss_catalan::{LabeledPolygon, ShiTableau, StaircasePartition};
use std::fmt::Write;

const POLY_SIZE: f64 = 560.0;
const POLY_RADIUS: f64 = 230.0;
const LABEL_RADIUS: f64 = 250.0;
const CELL: usize = 40;
const MARGIN: usize = 20;

fn vertex_xy(position: usize, count: usize, radius: f64) -> (f64, f64) {
    let theta = -std::f64::consts::FRAC_PI_2
        + 2.0 * std::f64::consts::PI * (position as f64) / (count as f64);
    let cx = POLY_SIZE / 2.0;
    let cy = POLY_SIZE / 2.0;
    // y grows downward in SVG; flip the sine so positions advance
    // counterclockwise on screen
    (cx + radius * theta.cos(), cy - radius * theta.sin())
}

/// Polygon with labeled vertices and the given diagonals; diagonals that
/// belong to the snake are highlighted. With `overlay_snake` the snake is
/// drawn even when absent from `diagonals`.
pub fn polygon_svg(
    polygon: &LabeledPolygon,
    diagonals: &[(usize, usize)],
    overlay_snake: bool,
) -> String {
    let count = polygon.vertex_count();
    let snake = polygon.snake_diagonals();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">",
        s = POLY_SIZE
    );
    let _ = write!(svg, "  <polygon points=\"");
    for position in 0..count {
        let (x, y) = vertex_xy(position, count, POLY_RADIUS);
        let _ = write!(svg, "{x:.2},{y:.2} ");
    }
    svg.pop();
    svg.push_str("\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n");

    let mut line = |a: usize, b: usize, highlighted: bool| {
        let pa = polygon.position_of(a).expect("label");
        let pb = polygon.position_of(b).expect("label");
        let (x1, y1) = vertex_xy(pa, count, POLY_RADIUS);
        let (x2, y2) = vertex_xy(pb, count, POLY_RADIUS);
        let (stroke, width) = if highlighted {
            ("#c0392b", 2.5)
        } else {
            ("#2c3e50", 1.5)
        };
        let _ = writeln!(
            svg,
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{stroke}\" stroke-width=\"{width}\"/>"
        );
    };
    for &(a, b) in diagonals {
        line(a, b, snake.contains(&(a.min(b), a.max(b))));
    }
    if overlay_snake {
        for &(a, b) in &snake {
            if !diagonals.contains(&(a, b)) {
                line(a, b, true);
            }
        }
    }
    for position in 0..count {
        let (x, y) = vertex_xy(position, count, POLY_RADIUS);
        let _ = writeln!(
            svg,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#444444\"/>"
        );
        let (lx, ly) = vertex_xy(position, count, LABEL_RADIUS);
        let _ = writeln!(
            svg,
            "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"15\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            polygon.label_at(position)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Staircase diagram with the coordinate of the root spanning `i..=j`
/// drawn in box `(i, n-j+1)`.
pub fn tableau_svg(t: &ShiTableau) -> String {
    let n = t.rank();
    let width = MARGIN * 2 + CELL * n;
    let height = MARGIN * 2 + CELL * n;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    for i in 1..=n {
        for j in i..=n {
            let column = n - j + 1;
            let x = MARGIN + (column - 1) * CELL;
            let y = MARGIN + (i - 1) * CELL;
            let _ = writeln!(
                svg,
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"none\" stroke=\"#444444\"/>"
            );
            let _ = writeln!(
                svg,
                "  <text x=\"{tx}\" y=\"{ty}\" font-size=\"17\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">{v}</text>",
                tx = x + CELL / 2,
                ty = y + CELL / 2,
                v = t.entry(i, j)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

/// Young diagram of the partition shaded inside its bounding staircase.
pub fn partition_svg(p: &StaircasePartition) -> String {
    let n = p.rank();
    let m = p.fuss();
    let width = MARGIN * 2 + CELL * m * n;
    let height = MARGIN * 2 + CELL * n;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    for i in 1..=n {
        let filled = p.part(i);
        for c in 1..=p.bound(i) {
            let x = MARGIN + (c - 1) * CELL;
            let y = MARGIN + (i - 1) * CELL;
            let fill = if c <= filled { "#9ec9e6" } else { "none" };
            let _ = writeln!(
                svg,
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#888888\"/>"
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}
