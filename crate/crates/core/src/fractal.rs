//! Displacement recurrences, dimensions, box counting and bounding-rectangle ratios.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::phi::PHI;
use crate::turtle::path::{trace, Path};
use crate::turtle::rules::DrawingRule;
use crate::word::{fib, trim_last_two};

/// Displacements of W_{n-3} = (p, q) and W_{n-6} = (r, s).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VecPair {
    pub pq: [i64; 2],
    pub rs: [i64; 2],
}

fn ck(x: Option<i64>) -> Result<i64> {
    x.ok_or(Error::Overflow("vector recurrence"))
}

/// Residue 1: (2p-2q-r+2, 2p+2q-s). Residue 4: (2p+2q-r-2, -2p+2q-s).
pub fn vector_recurrence(vp: VecPair, residue: usize) -> Result<[i64; 2]> {
    let [p, q] = vp.pq;
    let [r, s] = vp.rs;
    let two = |x: i64| ck(x.checked_mul(2));
    match residue % 6 {
        1 => Ok([
            ck(two(p)?.checked_sub(two(q)?).and_then(|x| x.checked_sub(r)).and_then(|x| x.checked_add(2)))?,
            ck(two(p)?.checked_add(two(q)?).and_then(|x| x.checked_sub(s)))?,
        ]),
        4 => Ok([
            ck(two(p)?.checked_add(two(q)?).and_then(|x| x.checked_sub(r)).and_then(|x| x.checked_sub(2)))?,
            ck(two(q)?.checked_sub(two(p)?).and_then(|x| x.checked_sub(s)))?,
        ]),
        r => Err(Error::Residue(r)),
    }
}

pub const SEED_W4: [i64; 2] = [-2, -1];
pub const SEED_W7: [i64; 2] = [0, -6];

/// (n, displacement of W_n) for n = 4, 7, 10, … ≤ n_max.
pub fn vector_sequence(n_max: usize) -> Result<Vec<(usize, [i64; 2])>> {
    if n_max < 7 {
        return Err(Error::Invalid(format!("vector_sequence needs n_max ≥ 7, got {n_max}")));
    }
    let mut v = vec![(4, SEED_W4), (7, SEED_W7)];
    let mut n = 10;
    while n <= n_max {
        let k = v.len();
        let next = vector_recurrence(VecPair { pq: v[k - 1].1, rs: v[k - 2].1 }, n % 6)?;
        v.push((n, next));
        n += 3;
    }
    Ok(v)
}

fn norm(v: [i64; 2]) -> f64 {
    (v[0] as f64).hypot(v[1] as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DimensionReport {
    pub m_ratio: f64,
    pub s_ratio: f64,
    pub dimension: f64,
}

/// log m / log s for m copies scaled down by s.
pub fn similarity_dimension(m: f64, s: f64) -> Result<DimensionReport> {
    if !(m > 1.0 && s > 1.0) || !m.is_finite() || !s.is_finite() {
        return Err(Error::Domain(format!("need m > 1 and s > 1, got m = {m}, s = {s}")));
    }
    Ok(DimensionReport { m_ratio: m, s_ratio: s, dimension: m.ln() / s.ln() })
}

/// Same, from the contraction ratio r = 1/s.
pub fn similarity_dimension_ratio(m: f64, r: f64) -> Result<DimensionReport> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!("need 0 < r < 1, got {r}")));
    }
    similarity_dimension(m, 1.0 / r)
}

/// Fib(n+2) / Fib(n-1), as a fraction.
pub fn segment_growth_fraction(n: usize) -> Result<(u64, u64)> {
    if n < 9 {
        return Err(Error::Invalid(format!("segment_growth_ratio needs n ≥ 9, got {n}")));
    }
    Ok((fib(n + 2), fib(n - 1)))
}

pub fn segment_growth_ratio(n: usize) -> Result<f64> {
    let (a, b) = segment_growth_fraction(n)?;
    Ok(a as f64 / b as f64)
}

/// |W_n| / |W_{n-3}| from the recurrence.
pub fn scale_ratio(n: usize) -> Result<f64> {
    if n % 3 != 1 || n < 13 {
        return Err(Error::Invalid(format!("scale_ratio needs n ≡ 1 (mod 3), n ≥ 13, got {n}")));
    }
    let v = vector_sequence(n)?;
    let k = v.len();
    Ok(norm(v[k - 1].1) / norm(v[k - 2].1))
}

/// (n, (w² - 4wx + 2x²)/w²) with x from W_n (n ≡ 4 mod 6) and w from W_{n+3}.
pub fn quadratic_residuals(n_max: usize) -> Result<Vec<(usize, f64)>> {
    let v = vector_sequence(n_max)?;
    Ok(v.windows(2)
        .filter(|p| p[0].0 % 6 == 4)
        .map(|p| {
            let x = p[0].1[0] as f64;
            let w = p[1].1[1] as f64;
            (p[0].0, (w * w - 4.0 * w * x + 2.0 * x * x) / (w * w))
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoxCountReport {
    pub estimate: f64,
    /// RMS deviation of log counts from the fitted line.
    pub residual: f64,
    pub scales: Vec<f64>,
    pub counts: Vec<usize>,
    pub anchor: [f64; 2],
}

pub const MIN_SCALES: usize = 4;
pub const MIN_DECADES: f64 = 1.5;

/// Dyadic box sizes 64 … 2, spanning 1.5 decades and staying above the tile length.
pub const DEFAULT_SCALES: [f64; 6] = [64.0, 32.0, 16.0, 8.0, 4.0, 2.0];

/// Counts grid cells met by the path at each box size, on a grid anchored at
/// the bounding box's minimum corner; each segment is sampled every size/8.
/// The estimate is the least-squares slope of log count against log(1/size).
pub fn box_count_dimension(p: &Path, scales: &[f64]) -> Result<BoxCountReport> {
    if p.vertices.len() < 2 {
        return Err(Error::EmptyCanvas);
    }
    if scales.len() < MIN_SCALES {
        return Err(Error::Fit(format!("need at least {MIN_SCALES} scales, got {}", scales.len())));
    }
    if scales.iter().any(|&s| s.is_nan() || s <= 0.0 || !s.is_finite()) {
        return Err(Error::Fit("box sizes must be positive".into()));
    }
    let lo = scales.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = scales.iter().cloned().fold(0.0, f64::max);
    if (hi / lo).log10() < MIN_DECADES - 1e-12 {
        return Err(Error::Fit(format!("box sizes span {:.3} decades, need {MIN_DECADES}", (hi / lo).log10())));
    }
    let bb = p.bounding_box();
    if bb.width() == 0.0 && bb.height() == 0.0 {
        return Err(Error::EmptyCanvas);
    }
    let anchor = bb.min;
    let counts: Vec<usize> = scales.iter().map(|&s| count_boxes(&p.vertices, s, anchor)).collect();
    let xs: Vec<f64> = scales.iter().map(|s| (1.0 / s).ln()).collect();
    let ys: Vec<f64> = counts.iter().map(|&c| (c as f64).ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let icept = my - slope * mx;
    let residual = (xs.iter().zip(&ys).map(|(x, y)| (y - icept - slope * x).powi(2)).sum::<f64>() / n).sqrt();
    Ok(BoxCountReport { estimate: slope, residual, scales: scales.to_vec(), counts, anchor })
}

fn count_boxes(v: &[[f64; 2]], s: f64, o: [f64; 2]) -> usize {
    let mut cells = HashSet::new();
    for w in v.windows(2) {
        let (a, b) = (w[0], w[1]);
        let len = (b[0] - a[0]).hypot(b[1] - a[1]);
        let k = ((len / (s / 8.0)).ceil() as usize).max(1);
        for i in 0..=k {
            let t = i as f64 / k as f64;
            let x = a[0] + (b[0] - a[0]) * t;
            let y = a[1] + (b[1] - a[1]) * t;
            cells.insert((((x - o[0]) / s).floor() as i64, ((y - o[1]) / s).floor() as i64));
        }
    }
    cells.len()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RectFit {
    /// Long side over short side of the fitted rectangle.
    pub ratio: f64,
    /// Rotation of the rectangle's frame from the axes, degrees in [0, 90).
    pub angle: f64,
    pub width: f64,
    pub height: f64,
    /// Height over width of the axis-aligned box, for comparison.
    pub axis_ratio: f64,
    pub corners: [[f64; 2]; 4],
    /// The diagonal parallel to entrance-exit.
    pub diagonal: [[f64; 2]; 2],
}

fn hull(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut p = points.to_vec();
    p.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let cross = |o: [f64; 2], a: [f64; 2], b: [f64; 2]| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let mut h: Vec<[f64; 2]> = Vec::with_capacity(2 * p.len());
    for pass in 0..2 {
        let start = h.len();
        let iter: Box<dyn Iterator<Item = &[f64; 2]>> = if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while h.len() >= start + 2 && cross(h[h.len() - 2], h[h.len() - 1], q) <= 0.0 {
                h.pop();
            }
            h.push(q);
        }
        h.pop();
    }
    h
}

fn extents(h: &[[f64; 2]], t: f64) -> [f64; 4] {
    let (c, s) = (t.cos(), t.sin());
    let (mut u0, mut u1, mut v0, mut v1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in h {
        let u = p[0] * c + p[1] * s;
        let v = -p[0] * s + p[1] * c;
        u0 = u0.min(u);
        u1 = u1.max(u);
        v0 = v0.min(v);
        v1 = v1.max(v);
    }
    [u0, u1, v0, v1]
}

fn frame(h: &[[f64; 2]], t: f64) -> (f64, f64) {
    let [u0, u1, v0, v1] = extents(h, t);
    (u1 - u0, v1 - v0)
}

/// Sine of the angle between the entrance-exit vector and a rectangle diagonal.
fn diagonal_miss(h: &[[f64; 2]], d: [f64; 2], t: f64, sign: f64) -> f64 {
    let (w, ht) = frame(h, t);
    let (c, s) = (t.cos(), t.sin());
    let du = d[0] * c + d[1] * s;
    let dv = -d[0] * s + d[1] * c;
    (du * sign * ht - dv * w) / (du.hypot(dv) * w.hypot(ht))
}

const ANGLE_STEPS: usize = 1800;

/// Side ratio of the smallest rectangle around the path whose diagonal runs
/// parallel to the line from entrance to exit.
pub fn fit_diagonal_rectangle(p: &Path) -> Result<RectFit> {
    if p.vertices.len() < 2 {
        return Err(Error::EmptyCanvas);
    }
    let d = p.displacement();
    if d[0].hypot(d[1]) == 0.0 {
        return Err(Error::Domain("entrance and exit coincide".into()));
    }
    let h = hull(&p.vertices);
    let quarter = std::f64::consts::FRAC_PI_2;
    let mut best: Option<(f64, f64, f64, f64, f64)> = None;
    for sign in [1.0, -1.0] {
        let f = |t: f64| diagonal_miss(&h, d, t, sign);
        for k in 0..ANGLE_STEPS {
            let mut t0 = quarter * k as f64 / ANGLE_STEPS as f64;
            let mut t1 = quarter * (k + 1) as f64 / ANGLE_STEPS as f64;
            let (r0, r1) = (f(t0), f(t1));
            if !(r0 == 0.0 || r0 * r1 < 0.0) {
                continue;
            }
            for _ in 0..60 {
                let tm = (t0 + t1) / 2.0;
                if f(t0) * f(tm) <= 0.0 {
                    t1 = tm;
                } else {
                    t0 = tm;
                }
            }
            let (w, ht) = frame(&h, t0);
            let area = w * ht;
            if best.is_none_or(|b| area < b.0 - 1e-9) {
                best = Some((area, t0, w, ht, sign));
            }
        }
    }
    let (_, t, w, ht, sign) = best.ok_or_else(|| Error::Domain("no diagonal-aligned rectangle found".into()))?;
    let bb = p.bounding_box();
    let [u0, u1, v0, v1] = extents(&h, t);
    let (c, s) = (t.cos(), t.sin());
    let world = |u: f64, v: f64| [u * c - v * s, u * s + v * c];
    let corners = [world(u0, v0), world(u1, v0), world(u1, v1), world(u0, v1)];
    let diagonal = if sign > 0.0 { [corners[0], corners[2]] } else { [corners[3], corners[1]] };
    Ok(RectFit {
        ratio: w.max(ht) / w.min(ht),
        angle: t.to_degrees(),
        width: w,
        height: ht,
        axis_ratio: bb.height() / bb.width(),
        corners,
        diagonal,
    })
}

/// The fitted rectangle ratio for the double-letter W_n path.
pub fn bbox_ratio_limit(n: usize) -> Result<RectFit> {
    if n % 3 != 1 {
        return Err(Error::Invalid(format!("bbox_ratio_limit needs n ≡ 1 (mod 3), got {n}")));
    }
    let p = trace(&trim_last_two(n)?, &DrawingRule::double_letter())?;
    fit_diagonal_rectangle(&p)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PeriodicApprox {
    pub k: usize,
    /// Digram tiles in F_k.
    pub segments: u64,
    /// Entrance-to-exit span of W_k plus the two half tiles at its ends.
    pub scale: f64,
    pub dimension: f64,
}

pub fn periodic_approx(k: usize) -> Result<PeriodicApprox> {
    if k % 3 != 1 || k < 7 {
        return Err(Error::Invalid(format!("periodic_approx needs k ≡ 1 (mod 3), k ≥ 7, got {k}")));
    }
    let v = vector_sequence(k)?;
    let span = norm(v.last().unwrap().1);
    let segments = fib(k + 2) / 2;
    let scale = span + 1.0;
    let dimension = similarity_dimension(segments as f64, scale)?.dimension;
    Ok(PeriodicApprox { k, segments, scale, dimension })
}

/// log φ³ / log(1 + √2).
pub fn limit_dimension() -> f64 {
    (PHI * PHI * PHI).ln() / (1.0 + 2f64.sqrt()).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_examples() {
        let vp = VecPair { pq: [-12, -11], rs: [0, -6] };
        assert_eq!(vector_recurrence(vp, 1).unwrap(), [0, -40]);
        let vp = VecPair { pq: [0, -6], rs: [-2, -1] };
        assert_eq!(vector_recurrence(vp, 4).unwrap(), [-12, -11]);
        let vp = VecPair { pq: [-70, -69], rs: [0, -40] };
        assert_eq!(vector_recurrence(vp, 1).unwrap(), [0, -238]);
        assert_eq!(vector_recurrence(vp, 3), Err(Error::Residue(3)));
    }

    #[test]
    fn sequence_w31() {
        let v = vector_sequence(31).unwrap();
        assert_eq!(v.last().unwrap(), &(31, [0, -8118]));
    }

    #[test]
    fn dimensions() {
        assert_eq!(similarity_dimension_ratio(8.0, 0.25).unwrap().dimension, 1.5);
        assert!((limit_dimension() - 1.637938).abs() < 1e-5);
        assert_eq!(similarity_dimension(3.0, 3.0).unwrap().dimension, 1.0);
        assert!(similarity_dimension(1.0, 2.0).is_err());
        assert!(similarity_dimension_ratio(2.0, 1.5).is_err());
    }

    #[test]
    fn growth_and_scale() {
        assert_eq!(segment_growth_fraction(9).unwrap(), (89, 21));
        assert!((segment_growth_ratio(30).unwrap() - PHI.powi(3)).abs() < 1e-9);
        assert!((scale_ratio(13).unwrap() - 2.457).abs() < 1e-3);
        assert!((scale_ratio(19).unwrap() - 2.421).abs() < 1e-3);
        assert!(scale_ratio(10).is_err());
    }

    #[test]
    fn periodic() {
        let p = periodic_approx(7).unwrap();
        assert_eq!((p.segments, p.scale), (17, 7.0));
        assert!((p.dimension - 1.456).abs() < 1e-3);
        let p = periodic_approx(31).unwrap();
        assert_eq!((p.segments, p.scale), (1_762_289, 8119.0));
        assert!((p.dimension - 1.598).abs() < 1e-3);
    }

    #[test]
    fn box_count_rejects_narrow_scales() {
        let p = trace(&trim_last_two(10).unwrap(), &DrawingRule::double_letter()).unwrap();
        assert!(matches!(box_count_dimension(&p, &[8.0, 4.0, 2.0, 1.0, 0.5]), Err(Error::Fit(_))));
        assert!(matches!(box_count_dimension(&p, &[8.0, 0.1, 0.05]), Err(Error::Fit(_))));
    }
}
