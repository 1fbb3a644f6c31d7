//! SVG figures of subdivisions and lifted polytopes.
//!
//! Rank 1 and 2 are drawn as is, rank 3 as an oblique wireframe. Vertices are
//! labelled with their exact coordinates.

use std::fmt::Write;

use momentcut_core::toric2d;
use momentcut_core::{Polytope, RatVector, Subdivision};
use num_traits::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("figures support rank 1 to 3, found rank {0}")]
pub struct FigureUnsupported(pub usize);

const SIZE: f64 = 480.0;
const MARGIN: f64 = 60.0;
const COLORS: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

enum Shape {
    Polygon(Vec<[f64; 2]>, &'static str),
    Segment([f64; 2], [f64; 2], f64),
    Label([f64; 2], String),
    Caption(String),
}

#[derive(Default)]
struct Figure {
    shapes: Vec<Shape>,
}

fn project(v: &RatVector) -> [f64; 2] {
    let c = |i: usize| v.entries().get(i).and_then(ToPrimitive::to_f64).unwrap_or(0.0);
    match v.len() {
        1 => [c(0), 0.0],
        2 => [c(0), c(1)],
        _ => [c(0) + 0.45 * c(2), c(1) + 0.3 * c(2)],
    }
}

impl Figure {
    fn polytope(&mut self, p: &Polytope, fill: &'static str, width: f64) {
        if p.rank() == 2 && p.dim() == 2 {
            let pts = toric2d::ccw_vertices(p)
                .expect("full-dimensional polygon")
                .iter()
                .map(project)
                .collect();
            self.shapes.push(Shape::Polygon(pts, fill));
        }
        let v = p.vertices();
        for (a, b) in p.edges() {
            self.shapes
                .push(Shape::Segment(project(&v[a]), project(&v[b]), width));
        }
    }

    fn labels<'a>(&mut self, points: impl IntoIterator<Item = &'a RatVector>) {
        let mut seen: Vec<&RatVector> = Vec::new();
        for v in points {
            if !seen.contains(&v) {
                seen.push(v);
                self.shapes.push(Shape::Label(project(v), v.to_string()));
            }
        }
    }

    fn render(&self) -> String {
        let points = self.shapes.iter().flat_map(|s| match s {
            Shape::Polygon(p, _) => p.clone(),
            Shape::Segment(a, b, _) => vec![*a, *b],
            Shape::Label(p, _) => vec![*p],
            Shape::Caption(_) => vec![],
        });
        let (mut lo, mut hi) = ([f64::MAX; 2], [f64::MIN; 2]);
        for p in points {
            for i in 0..2 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        let map = |p: &[f64; 2]| {
            (
                MARGIN + (p[0] - lo[0]) * scale,
                SIZE - MARGIN - (p[1] - lo[1]) * scale,
            )
        };

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" font-family="monospace" font-size="11">"#
        );
        let _ = writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
        let mut caption_y = 18.0;
        for s in &self.shapes {
            match s {
                Shape::Polygon(pts, fill) => {
                    let list: Vec<String> = pts
                        .iter()
                        .map(|p| {
                            let (x, y) = map(p);
                            format!("{x:.2},{y:.2}")
                        })
                        .collect();
                    let _ = writeln!(
                        out,
                        r#"<polygon points="{}" fill="{fill}" fill-opacity="0.8" stroke="none"/>"#,
                        list.join(" ")
                    );
                }
                Shape::Segment(a, b, w) => {
                    let ((x1, y1), (x2, y2)) = (map(a), map(b));
                    let _ = writeln!(
                        out,
                        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="{w}"/>"#
                    );
                }
                Shape::Label(p, text) => {
                    let (x, y) = map(p);
                    let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5"/>"#);
                    let _ = writeln!(
                        out,
                        r#"<text x="{:.2}" y="{:.2}">{text}</text>"#,
                        x + 4.0,
                        y - 4.0
                    );
                }
                Shape::Caption(text) => {
                    let _ = writeln!(out, r#"<text x="8" y="{caption_y}">{text}</text>"#);
                    caption_y += 14.0;
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn check_rank(rank: usize) -> Result<(), FigureUnsupported> {
    if (1..=3).contains(&rank) {
        Ok(())
    } else {
        Err(FigureUnsupported(rank))
    }
}

/// The cells `Δ_i` filled in distinct colours, walls in bold.
pub fn subdivision(sub: &Subdivision) -> Result<String, FigureUnsupported> {
    check_rank(sub.ambient().rank())?;
    let mut fig = Figure::default();
    fig.polytope(sub.ambient(), "none", 0.5);
    for i in 0..sub.len() {
        if let Some(cell) = sub.cell(i) {
            fig.polytope(cell, COLORS[i % COLORS.len()], 1.5);
            fig.shapes.push(Shape::Caption(format!(
                "cell {}: {} vertices",
                i + 1,
                cell.vertices().len()
            )));
        }
    }
    fig.labels(sub.cell_vertices().iter());
    Ok(fig.render())
}

/// A polytope with every vertex labelled, and a caption line.
pub fn polytope(p: &Polytope, caption: &str) -> Result<String, FigureUnsupported> {
    check_rank(p.rank())?;
    let mut fig = Figure::default();
    fig.polytope(p, COLORS[0], 1.5);
    fig.labels(p.vertices());
    fig.shapes.push(Shape::Caption(caption.to_owned()));
    Ok(fig.render())
}
