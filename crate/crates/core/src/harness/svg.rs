//! Deterministic SVG drawings of a polygon with nested adjoints and its core.
//!
//! Geometry is exact up to the final conversion of coordinates to decimal
//! strings. Three-dimensional inputs are drawn through their natural
//! projection when that image is at most two-dimensional.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::adjunction::{classical_adjoint, classical_core, FineAdjunction};
use crate::exactla::{sub_rat, RatVector, Rational};
use crate::polytope::Polytope;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Fine,
    Classical,
    /// Fine adjoints, with the classical core drawn as well.
    Both,
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

/// Vertices of a polygon in counterclockwise order starting from the
/// lexicographically smallest, compared exactly.
fn cyclic_order(p: &Polytope) -> Vec<RatVector> {
    let mut verts = p.vertices().to_vec();
    if verts.len() < 3 {
        return verts;
    }
    let origin = verts.remove(0);
    // every other vertex lies in the half-plane x > x0 or (x = x0, y > y0)
    verts.sort_by(|a, b| {
        let da = sub_rat(a, &origin);
        let db = sub_rat(b, &origin);
        let cross = &da[0] * &db[1] - &da[1] * &db[0];
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    verts.insert(0, origin);
    verts
}

struct Frame {
    min: [f64; 2],
    scale: f64,
    height: f64,
}

impl Frame {
    fn new(p: &Polytope) -> Self {
        let coord = |v: &RatVector, i: usize| v.get(i).and_then(ToPrimitive::to_f64).unwrap_or(0.0);
        let xs: Vec<f64> = p.vertices().iter().map(|v| coord(v, 0)).collect();
        let ys: Vec<f64> = p.vertices().iter().map(|v| coord(v, 1)).collect();
        let fold = |v: &[f64], f: fn(f64, f64) -> f64, init: f64| v.iter().copied().fold(init, f);
        let min = [fold(&xs, f64::min, f64::INFINITY), fold(&ys, f64::min, f64::INFINITY)];
        let span_x = fold(&xs, f64::max, f64::NEG_INFINITY) - min[0];
        let span_y = fold(&ys, f64::max, f64::NEG_INFINITY) - min[1];
        let scale = (SIZE - 2.0 * MARGIN) / span_x.max(span_y).max(1.0);
        Frame { min, scale, height: span_y * scale + 2.0 * MARGIN }
    }

    fn point(&self, v: &RatVector) -> (f64, f64) {
        let x = v[0].to_f64().unwrap_or(0.0);
        let y = v.get(1).and_then(ToPrimitive::to_f64).unwrap_or(self.min[1]);
        (
            MARGIN + (x - self.min[0]) * self.scale,
            self.height - MARGIN - (y - self.min[1]) * self.scale,
        )
    }

    fn width(&self, p: &Polytope) -> f64 {
        let max_x = p.vertices().iter().filter_map(|v| v[0].to_f64()).fold(self.min[0], f64::max);
        (max_x - self.min[0]) * self.scale + 2.0 * MARGIN
    }
}

fn shape(out: &mut String, frame: &Frame, q: &Polytope, class: &str, label: Option<&Rational>, style: &str) {
    let data = label.map(|s| format!(" data-s=\"{s}\"")).unwrap_or_default();
    let pts: Vec<(f64, f64)> = cyclic_order(q).iter().map(|v| frame.point(v)).collect();
    let _ = match pts.len() {
        0 => Ok(()),
        1 => writeln!(
            out,
            "  <circle class=\"{class}\"{data} cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" {style}/>",
            pts[0].0, pts[0].1
        ),
        2 => writeln!(
            out,
            "  <line class=\"{class}\"{data} x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" {style}/>",
            pts[0].0, pts[0].1, pts[1].0, pts[1].1
        ),
        _ => {
            let list: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
            writeln!(out, "  <polygon class=\"{class}\"{data} points=\"{}\" {style}/>", list.join(" "))
        }
    };
}

/// A polytope of dimension at most two to draw, plus an optional note.
fn drawable(p: &Polytope) -> Result<(Polytope, Option<String>)> {
    match p.ambient_dim() {
        1 | 2 => Ok((p.clone(), None)),
        3 => {
            let proj = FineAdjunction::compute(p)?.natural_projection()?;
            if proj.projected.ambient_dim() > 2 {
                return Err(Error::DimensionMismatch(
                    "natural projection of this polytope is 3-dimensional; nothing to draw".into(),
                ));
            }
            let rows: Vec<String> = proj.matrix.iter().map(|r| crate::exactla::format_int_vec(r)).collect();
            Ok((proj.projected, Some(format!("natural projection by the rows {}", rows.join(" ")))))
        }
        n => Err(Error::DimensionMismatch(format!("cannot draw a polytope in R^{n}"))),
    }
}

/// `P` with adjoints at the given levels (empty ones skipped) and its core.
pub fn emit_svg(p: &Polytope, levels: &[Rational], mode: Mode) -> Result<String> {
    let (q, note) = drawable(p)?;
    let adj = FineAdjunction::compute(&q)?;
    let frame = Frame::new(&q);
    let mut levels: Vec<Rational> = levels.to_vec();
    levels.sort();
    levels.dedup();
    if let Some(s) = levels.iter().find(|s| s.is_negative()) {
        return Err(Error::NegativeParameter(s.to_string()));
    }

    let mut out = String::new();
    let width = frame.width(&q);
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.3}\" height=\"{:.3}\" viewBox=\"0 0 {width:.3} {:.3}\">",
        frame.height, frame.height
    );
    if let Some(note) = note {
        let _ = writeln!(out, "  <desc>{note}</desc>");
    }
    shape(&mut out, &frame, &q, "polytope", None, "fill=\"#f2f2f2\" stroke=\"#000000\" stroke-width=\"2\"");
    for s in levels.iter().filter(|s| !s.is_zero()) {
        let inner = match mode {
            Mode::Classical => classical_adjoint(&q, s)?,
            Mode::Fine | Mode::Both => adj.adjoint(s)?,
        };
        shape(&mut out, &frame, &inner, "adjoint", Some(s), "fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"");
    }
    if matches!(mode, Mode::Fine | Mode::Both) {
        shape(&mut out, &frame, &adj.core, "fine-core", None, "fill=\"#c0392b\" stroke=\"#c0392b\" stroke-width=\"3\"");
    }
    if matches!(mode, Mode::Classical | Mode::Both) {
        let core = classical_core(&q)?;
        shape(
            &mut out,
            &frame,
            &core,
            "classical-core",
            None,
            "fill=\"#2e8b57\" stroke=\"#2e8b57\" stroke-width=\"3\" stroke-dasharray=\"4 3\"",
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
