//! Heading drift of the generalized to-and-fro rule, and the angle where it vanishes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::turtle::path::trace;
use crate::turtle::rules::DrawingRule;
use crate::word::Word;

pub const CHUNK: usize = 21;
pub const BISECT_TOL: f64 = 0.01;

/// Mean bend of the path in degrees per unit length, anticlockwise positive.
///
/// The word is cut into consecutive chunks of `chunk` letters (the last may
/// be shorter). The signed angles between successive chunk displacements are
/// summed without wrapping and divided by the total path length.
pub fn net_heading_drift_with(w: &Word, angle: f64, chunk: usize) -> Result<f64> {
    if chunk == 0 {
        return Err(Error::Invalid("chunk must be positive".into()));
    }
    if angle.rem_euclid(360.0) == 180.0 {
        return Ok(0.0);
    }
    let p = trace(w, &DrawingRule::generalized(angle))?;
    let mut vecs = Vec::new();
    for c in (0..p.token_spans.len()).step_by(chunk) {
        let last = (c + chunk).min(p.token_spans.len()) - 1;
        let a = p.vertices[p.token_spans[c].0];
        let b = p.vertices[p.token_spans[last].1];
        let d = [b[0] - a[0], b[1] - a[1]];
        if d[0].hypot(d[1]) > 1e-12 {
            vecs.push(d);
        }
    }
    let bend: f64 = vecs
        .windows(2)
        .map(|v| {
            let (x, y) = (v[0], v[1]);
            (x[0] * y[1] - x[1] * y[0]).atan2(x[0] * y[0] + x[1] * y[1])
        })
        .sum();
    if p.length == 0.0 {
        return Ok(0.0);
    }
    Ok(bend.to_degrees() / p.length)
}

pub fn net_heading_drift(w: &Word, angle: f64) -> Result<f64> {
    net_heading_drift_with(w, angle, CHUNK)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AngleSearch {
    pub angle: f64,
    pub lo: f64,
    pub hi: f64,
    pub drift_lo: f64,
    pub drift_hi: f64,
    pub iterations: usize,
}

/// Bisects the drift root on [lo, hi] down to 0.01°.
pub fn find_firehose_angle(w: &Word, lo: f64, hi: f64) -> Result<AngleSearch> {
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(Error::Invalid(format!("need lo < hi, got {lo} and {hi}")));
    }
    let (mut a, mut b) = (lo, hi);
    let da = net_heading_drift(w, a)?;
    let db = net_heading_drift(w, b)?;
    if da == 0.0 {
        return Ok(AngleSearch { angle: a, lo, hi, drift_lo: da, drift_hi: db, iterations: 0 });
    }
    if db == 0.0 {
        return Ok(AngleSearch { angle: b, lo, hi, drift_lo: da, drift_hi: db, iterations: 0 });
    }
    if (da > 0.0) == (db > 0.0) {
        return Err(Error::Bracket { lo, hi });
    }
    let mut fa = da;
    let mut iterations = 0;
    while b - a > BISECT_TOL {
        let m = (a + b) / 2.0;
        let fm = net_heading_drift(w, m)?;
        iterations += 1;
        if fm == 0.0 {
            a = m;
            b = m;
            break;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(AngleSearch { angle: (a + b) / 2.0, lo, hi, drift_lo: da, drift_hi: db, iterations })
}
