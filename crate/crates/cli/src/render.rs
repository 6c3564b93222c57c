//! SVG drawing of a triangulated polygon.
//!
//! Vertices sit on a circle, vertex 0 at the top and indices increasing
//! counterclockwise. Convex diagonals are straight chords. A punctured arc
//! `A(i,j)` is drawn as a curve that sweeps counterclockwise from `i` to `j`,
//! dipping towards the puncture by an amount growing with the angle it spans,
//! so nested arcs stay nested and the loop goes all the way round.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use polyarc_core::{Arc, Colour, Triangulation};

const SIZE: f64 = 400.0;
const CENTRE: f64 = SIZE / 2.0;
const RADIUS: f64 = 160.0;
const SAMPLES: usize = 48;

fn point(m: usize, v: f64, r: f64) -> (f64, f64) {
    // counterclockwise on screen: y grows downwards
    let theta = PI / 2.0 + TAU * v / m as f64;
    (CENTRE + r * theta.cos(), CENTRE - r * theta.sin())
}

fn colour_name(c: Colour) -> &'static str {
    match c {
        Colour::Red => "#c0392b",
        Colour::Blue => "#2e5fa8",
    }
}

fn punctured_path(m: usize, i: usize, j: usize) -> String {
    let span = if i == j { m } else { (j + m - i) % m };
    let depth = 0.25 + 0.5 * span as f64 / m as f64;
    let mut d = String::new();
    for s in 0..=SAMPLES {
        let t = s as f64 / SAMPLES as f64;
        let r = RADIUS * (1.0 - depth * (PI * t).sin());
        let (x, y) = point(m, i as f64 + t * span as f64, r);
        let cmd = if s == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{x:.2},{y:.2} ").unwrap();
    }
    d.pop();
    d
}

pub fn svg(t: &Triangulation) -> String {
    let spec = t.spec();
    let m = spec.m();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, "  <title>{spec}</title>").unwrap();

    for v in 0..m {
        let w = (v + 1) % m;
        let (x1, y1) = point(m, v as f64, RADIUS);
        let (x2, y2) = point(m, (v + 1) as f64, RADIUS);
        if spec.is_punctured() {
            // boundary edges follow the circle so a bigon stays visible
            writeln!(
                out,
                r##"  <path class="edge" data-from="{v}" data-to="{w}" d="M{x1:.2},{y1:.2} A{RADIUS},{RADIUS} 0 0 0 {x2:.2},{y2:.2}" fill="none" stroke="#000" stroke-width="2"/>"##
            )
            .unwrap();
        } else {
            writeln!(
                out,
                r##"  <line class="edge" data-from="{v}" data-to="{w}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#000" stroke-width="2"/>"##
            )
            .unwrap();
        }
    }

    for &a in t.arcs() {
        match a {
            Arc::Diagonal(i, j) => {
                let (x1, y1) = point(m, i as f64, RADIUS);
                let (x2, y2) = point(m, j as f64, RADIUS);
                writeln!(
                    out,
                    r##"  <line class="arc" data-arc="{a}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#555" stroke-width="1.5"/>"##
                )
                .unwrap();
            }
            Arc::Punctured(i, j) => {
                writeln!(
                    out,
                    r##"  <path class="arc" data-arc="{a}" d="{}" fill="none" stroke="#555" stroke-width="1.5"/>"##,
                    punctured_path(m, i, j)
                )
                .unwrap();
            }
        }
    }

    if spec.is_punctured() {
        writeln!(
            out,
            r##"  <circle class="puncture" cx="{CENTRE}" cy="{CENTRE}" r="4" fill="#fff" stroke="#000"/>"##
        )
        .unwrap();
    }
    for v in 0..m {
        let (x, y) = point(m, v as f64, RADIUS);
        let (lx, ly) = point(m, v as f64, RADIUS + 18.0);
        let c = spec.colour(v);
        writeln!(
            out,
            r##"  <circle class="vertex" data-colour="{}" cx="{x:.2}" cy="{y:.2}" r="7" fill="{}" stroke="#000"/>"##,
            c.symbol(),
            colour_name(c)
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">{v}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
