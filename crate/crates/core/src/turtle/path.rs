//! Tracing words into polylines, in exact coordinates where the rule allows.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::phi::PhiNum;
use crate::turtle::rules::{DrawingRule, Length, TurtleAction};
use crate::word::Word;

pub type ExactPoint = [PhiNum; 2];

/// Quarter-turn headings, counterclockwise from +x.
pub const EAST: u8 = 0;
pub const NORTH: u8 = 1;
pub const WEST: u8 = 2;
pub const SOUTH: u8 = 3;

fn quarter_vec(q: u8) -> [i64; 2] {
    match q % 4 {
        0 => [1, 0],
        1 => [0, 1],
        2 => [-1, 0],
        _ => [0, -1],
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Start {
    pub origin: ExactPoint,
    /// One of EAST, NORTH, WEST, SOUTH.
    pub heading: u8,
}

impl Default for Start {
    fn default() -> Start {
        Start { origin: [PhiNum::ZERO; 2], heading: SOUTH }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Path {
    pub rule: String,
    pub vertices: Vec<[f64; 2]>,
    /// Present when every turn was a multiple of 90° and every step exact.
    pub exact_vertices: Option<Vec<ExactPoint>>,
    pub tokens: Vec<String>,
    /// For token i, the vertex range [start, end] it drew.
    pub token_spans: Vec<(usize, usize)>,
    pub initial_heading: [f64; 2],
    pub final_heading: [f64; 2],
    pub length: f64,
}

pub fn trace(w: &Word, rule: &DrawingRule) -> Result<Path> {
    trace_from(w, rule, Start::default())
}

pub fn trace_from(w: &Word, rule: &DrawingRule, start: Start) -> Result<Path> {
    let tokens = rule.tokens(w)?;
    let exact = rule.is_exact();
    let mut q = start.heading % 4;
    let mut deg = 90.0 * f64::from(q);
    let mut pos = start.origin;
    let mut fpos = [pos[0].to_f64(), pos[1].to_f64()];
    let mut vertices = vec![fpos];
    let mut exact_vertices = vec![pos];
    let mut spans = Vec::with_capacity(tokens.len());
    let mut length = 0.0;
    let initial_heading = unit(deg);
    for t in &tokens {
        let from = vertices.len() - 1;
        for a in &rule.actions[t] {
            match *a {
                TurtleAction::Turn(d) => {
                    deg += d;
                    if exact {
                        q = (i64::from(q) + (d / 90.0) as i64).rem_euclid(4) as u8;
                    }
                }
                TurtleAction::Forward(len) => {
                    if exact {
                        let Length::Exact(l) = len else { unreachable!() };
                        let v = quarter_vec(q);
                        pos = [pos[0] + l * v[0], pos[1] + l * v[1]];
                        fpos = [pos[0].to_f64(), pos[1].to_f64()];
                        exact_vertices.push(pos);
                    } else {
                        let l = len.to_f64();
                        let r = deg.to_radians();
                        fpos = [fpos[0] + l * r.cos(), fpos[1] + l * r.sin()];
                    }
                    length += len.to_f64();
                    vertices.push(fpos);
                }
            }
        }
        spans.push((from, vertices.len() - 1));
    }
    let final_heading = if exact {
        let v = quarter_vec(q);
        [v[0] as f64, v[1] as f64]
    } else {
        unit(deg)
    };
    let initial_heading = if exact {
        let v = quarter_vec(start.heading);
        [v[0] as f64, v[1] as f64]
    } else {
        initial_heading
    };
    Ok(Path {
        rule: rule.name.clone(),
        vertices,
        exact_vertices: exact.then_some(exact_vertices),
        tokens,
        token_spans: spans,
        initial_heading,
        final_heading,
        length,
    })
}

fn unit(deg: f64) -> [f64; 2] {
    // snap multiples of 90° so the headings compare exactly
    if deg % 90.0 == 0.0 {
        let v = quarter_vec((deg / 90.0).rem_euclid(4.0) as u8);
        return [v[0] as f64, v[1] as f64];
    }
    let r = deg.to_radians();
    [r.cos(), r.sin()]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BBox {
    pub min: [f64; 2],
    pub max: [f64; 2],
}

impl BBox {
    pub fn width(&self) -> f64 {
        self.max[0] - self.min[0]
    }

    pub fn height(&self) -> f64 {
        self.max[1] - self.min[1]
    }
}

impl Path {
    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn displacement(&self) -> [f64; 2] {
        let a = self.vertices[0];
        let b = *self.vertices.last().unwrap();
        [b[0] - a[0], b[1] - a[1]]
    }

    pub fn exact_displacement(&self) -> Option<ExactPoint> {
        let v = self.exact_vertices.as_ref()?;
        let a = v[0];
        let b = *v.last().unwrap();
        Some([b[0] - a[0], b[1] - a[1]])
    }

    /// Displacement as integers, when it has no φ part and no half.
    pub fn integer_displacement(&self) -> Option<[i64; 2]> {
        let d = self.exact_displacement()?;
        if d.iter().all(|c| c.m == 0 && c.k % 2 == 0) {
            Some([d[0].k / 2, d[1].k / 2])
        } else {
            None
        }
    }

    pub fn bounding_box(&self) -> BBox {
        let mut min = self.vertices[0];
        let mut max = min;
        for v in &self.vertices {
            for i in 0..2 {
                min[i] = min[i].min(v[i]);
                max[i] = max[i].max(v[i]);
            }
        }
        BBox { min, max }
    }

    /// Axis-aligned [min, max] corners in exact arithmetic.
    pub fn exact_bounding_box(&self) -> Option<[ExactPoint; 2]> {
        let v = self.exact_vertices.as_ref()?;
        let mut min = v[0];
        let mut max = min;
        for p in v {
            for i in 0..2 {
                min[i] = min[i].min(p[i]);
                max[i] = max[i].max(p[i]);
            }
        }
        Some([min, max])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Symmetry {
    pub symmetric: bool,
    pub center: [f64; 2],
}

/// Point symmetry about the midpoint of entrance and exit, with matching headings.
pub fn half_turn_symmetry(p: &Path) -> Symmetry {
    let l = p.vertices.len() - 1;
    let a = p.vertices[0];
    let b = p.vertices[l];
    let center = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
    let same_heading = p
        .initial_heading
        .iter()
        .zip(&p.final_heading)
        .all(|(x, y)| (x - y).abs() < 1e-9);
    let symmetric = same_heading
        && match &p.exact_vertices {
            Some(v) => {
                let s = [v[0][0] + v[l][0], v[0][1] + v[l][1]];
                (0..=l).all(|i| v[i][0] + v[l - i][0] == s[0] && v[i][1] + v[l - i][1] == s[1])
            }
            None => {
                let s = [a[0] + b[0], a[1] + b[1]];
                let v = &p.vertices;
                (0..=l).all(|i| (v[i][0] + v[l - i][0] - s[0]).abs() < 1e-9 && (v[i][1] + v[l - i][1] - s[1]).abs() < 1e-9)
            }
        };
    Symmetry { symmetric, center }
}

/// Path with fewer than two vertices cannot be drawn or fitted.
pub fn require_nondegenerate(p: &Path) -> Result<()> {
    if p.vertices.len() < 2 {
        Err(Error::EmptyCanvas)
    } else {
        Ok(())
    }
}
