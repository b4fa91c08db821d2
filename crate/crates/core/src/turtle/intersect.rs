//! Self-contact of a polyline: proper crossings, collinear overlaps, touches.

use std::cmp::Ordering;

use serde::Serialize;

use crate::phi::PhiNum;
use crate::turtle::path::{ExactPoint, Path};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    /// Interiors cross transversally.
    pub proper_crossings: usize,
    /// Collinear segments sharing a stretch of positive length.
    pub collinear_overlaps: usize,
    /// Non-adjacent segments meeting in a single point that is an endpoint of one of them.
    pub vertex_touches: usize,
    pub exact: bool,
}

pub const EPS: f64 = 1e-9;

pub fn self_intersections(p: &Path) -> IntersectionReport {
    match &p.exact_vertices {
        Some(v) => exact_report(v),
        None => float_report(&p.vertices),
    }
}

#[derive(Clone, Copy)]
struct Seg {
    idx: usize,
    lo: ExactPoint,
    hi: ExactPoint,
    /// 0 horizontal, 1 vertical
    axis: usize,
}

fn inside(x: PhiNum, lo: PhiNum, hi: PhiNum) -> Ordering {
    // Less: outside, Equal: at an end, Greater: strictly inside
    if x < lo || x > hi {
        Ordering::Less
    } else if x == lo || x == hi {
        Ordering::Equal
    } else {
        Ordering::Greater
    }
}

#[derive(PartialEq)]
enum Contact {
    Nothing,
    Touch,
    Overlap,
    Cross,
}

fn contact(a: &Seg, b: &Seg) -> Contact {
    let (ax, bx) = (a.axis, b.axis);
    if ax == bx {
        let o = 1 - ax;
        if a.lo[o] != b.lo[o] {
            return Contact::Nothing;
        }
        let lo = a.lo[ax].max(b.lo[ax]);
        let hi = a.hi[ax].min(b.hi[ax]);
        return match lo.cmp(&hi) {
            Ordering::Less => Contact::Overlap,
            Ordering::Equal => Contact::Touch,
            Ordering::Greater => Contact::Nothing,
        };
    }
    let (h, v) = if ax == 0 { (a, b) } else { (b, a) };
    let along_h = inside(v.lo[0], h.lo[0], h.hi[0]);
    let along_v = inside(h.lo[1], v.lo[1], v.hi[1]);
    match (along_h, along_v) {
        (Ordering::Less, _) | (_, Ordering::Less) => Contact::Nothing,
        (Ordering::Greater, Ordering::Greater) => Contact::Cross,
        _ => Contact::Touch,
    }
}

fn exact_report(v: &[ExactPoint]) -> IntersectionReport {
    let mut segs: Vec<Seg> = v
        .windows(2)
        .enumerate()
        .map(|(idx, w)| {
            let axis = if w[0][1] == w[1][1] { 0 } else { 1 };
            let lo = [w[0][0].min(w[1][0]), w[0][1].min(w[1][1])];
            let hi = [w[0][0].max(w[1][0]), w[0][1].max(w[1][1])];
            Seg { idx, lo, hi, axis }
        })
        .collect();
    segs.sort_by(|a, b| a.lo[0].cmp(&b.lo[0]).then(a.idx.cmp(&b.idx)));
    let mut r = IntersectionReport { exact: true, ..Default::default() };
    for i in 0..segs.len() {
        let a = segs[i];
        for b in &segs[i + 1..] {
            if b.lo[0] > a.hi[0] {
                break;
            }
            if b.lo[1] > a.hi[1] || a.lo[1] > b.hi[1] {
                continue;
            }
            let c = contact(&a, b);
            if a.idx.abs_diff(b.idx) == 1 {
                // neighbours share a vertex; only a reversal counts
                if c == Contact::Overlap {
                    r.collinear_overlaps += 1;
                }
                continue;
            }
            match c {
                Contact::Nothing => {}
                Contact::Touch => r.vertex_touches += 1,
                Contact::Overlap => r.collinear_overlaps += 1,
                Contact::Cross => r.proper_crossings += 1,
            }
        }
    }
    r
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn sgn(x: f64) -> i32 {
    if x > EPS {
        1
    } else if x < -EPS {
        -1
    } else {
        0
    }
}

fn on_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0]) - EPS && p[0] <= a[0].max(b[0]) + EPS && p[1] >= a[1].min(b[1]) - EPS && p[1] <= a[1].max(b[1]) + EPS
}

fn float_contact(a0: [f64; 2], a1: [f64; 2], b0: [f64; 2], b1: [f64; 2]) -> Contact {
    let d1 = sgn(cross(b0, b1, a0));
    let d2 = sgn(cross(b0, b1, a1));
    let d3 = sgn(cross(a0, a1, b0));
    let d4 = sgn(cross(a0, a1, b1));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return Contact::Cross;
    }
    if d1 == 0 && d2 == 0 {
        // collinear: project on the longer axis
        let ax = if (a1[0] - a0[0]).abs() >= (a1[1] - a0[1]).abs() { 0 } else { 1 };
        let (alo, ahi) = (a0[ax].min(a1[ax]), a0[ax].max(a1[ax]));
        let (blo, bhi) = (b0[ax].min(b1[ax]), b0[ax].max(b1[ax]));
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        return if hi - lo > EPS {
            Contact::Overlap
        } else if hi - lo >= -EPS {
            Contact::Touch
        } else {
            Contact::Nothing
        };
    }
    let touch = (d1 == 0 && on_segment(a0, b0, b1))
        || (d2 == 0 && on_segment(a1, b0, b1))
        || (d3 == 0 && on_segment(b0, a0, a1))
        || (d4 == 0 && on_segment(b1, a0, a1));
    if touch {
        Contact::Touch
    } else {
        Contact::Nothing
    }
}

fn float_report(v: &[[f64; 2]]) -> IntersectionReport {
    let mut idx: Vec<usize> = (0..v.len().saturating_sub(1)).collect();
    let minx = |i: usize| v[i][0].min(v[i + 1][0]);
    let maxx = |i: usize| v[i][0].max(v[i + 1][0]);
    idx.sort_by(|&a, &b| minx(a).total_cmp(&minx(b)).then(a.cmp(&b)));
    let mut r = IntersectionReport::default();
    for (n, &i) in idx.iter().enumerate() {
        for &j in &idx[n + 1..] {
            if minx(j) > maxx(i) + EPS {
                break;
            }
            let c = float_contact(v[i], v[i + 1], v[j], v[j + 1]);
            if i.abs_diff(j) == 1 {
                if c == Contact::Overlap {
                    r.collinear_overlaps += 1;
                }
                continue;
            }
            match c {
                Contact::Nothing => {}
                Contact::Touch => r.vertex_touches += 1,
                Contact::Overlap => r.collinear_overlaps += 1,
                Contact::Cross => r.proper_crossings += 1,
            }
        }
    }
    r
}
