//! The to-and-fro rule on a line: exact positions, deviation diagrams, excursions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::phi::PhiNum;
use crate::word::{fib_word, Alphabet, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub letter: usize,
    /// Direction of travel during this step.
    pub dir: i8,
    pub to: PhiNum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace1d {
    pub steps: Vec<Step>,
    /// Position at each letter boundary, starting with 0.
    pub boundaries: Vec<PhiNum>,
    pub final_direction: i8,
}

impl Trace1d {
    pub fn final_position(&self) -> PhiNum {
        *self.boundaries.last().unwrap()
    }

    /// 0 followed by the position after every half move.
    pub fn positions(&self) -> Vec<PhiNum> {
        std::iter::once(PhiNum::ZERO).chain(self.steps.iter().map(|s| s.to)).collect()
    }

    pub fn max_abs(&self) -> PhiNum {
        self.steps.iter().map(|s| s.to.abs()).max().unwrap_or(PhiNum::ZERO)
    }
}

/// a: forward φ. b: forward ½, reverse, forward ½.
pub fn trace_1d(w: &Word) -> Result<Trace1d> {
    Alphabet::fibonacci().check(w)?;
    let mut pos = PhiNum::ZERO;
    let mut dir: i8 = 1;
    let mut steps = Vec::with_capacity(w.len() * 2);
    let mut boundaries = Vec::with_capacity(w.len() + 1);
    boundaries.push(pos);
    for (i, &c) in w.letters().iter().enumerate() {
        if c == b'a' {
            pos += PhiNum::PHI * i64::from(dir);
            steps.push(Step { letter: i, dir, to: pos });
        } else {
            pos += PhiNum::HALF * i64::from(dir);
            steps.push(Step { letter: i, dir, to: pos });
            dir = -dir;
            pos += PhiNum::HALF * i64::from(dir);
            steps.push(Step { letter: i, dir, to: pos });
        }
        boundaries.push(pos);
    }
    Ok(Trace1d { steps, boundaries, final_direction: dir })
}

/// Largest |position| on the trace of F_n.
pub fn max_deviation(n: usize) -> PhiNum {
    trace_1d(&fib_word(n)).unwrap().max_abs()
}

pub const DEFAULT_DROP: f64 = 0.4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeviationDiagram {
    pub polyline: Vec<[f64; 2]>,
    pub control_points: Vec<[f64; 2]>,
    /// Control-point x positions, doubled so they stay in the φ ring, with counts.
    pub tallies: Vec<(PhiNum, usize)>,
    pub drop: f64,
    pub total_drop: f64,
}

/// A tiles run horizontally; each b runs out ½, steps down by `drop`, and runs back ½.
pub fn deviation_diagram(w: &Word, drop: f64) -> Result<DeviationDiagram> {
    let t = trace_1d(w)?;
    let mut y = 0.0;
    let mut polyline = vec![[0.0, 0.0]];
    let mut control_points = Vec::with_capacity(w.len());
    let mut tally: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut prev = PhiNum::ZERO;
    let mut i = 0;
    while i < t.steps.len() {
        let s = &t.steps[i];
        let is_b = w.letters()[s.letter] == b'b';
        let mid2 = if is_b { s.to + s.to } else { prev + s.to };
        *tally.entry((mid2.m, mid2.k)).or_default() += 1;
        if is_b {
            let fold = s.to.to_f64();
            let back = t.steps[i + 1].to.to_f64();
            control_points.push([fold, y - drop / 2.0]);
            polyline.push([fold, y]);
            y -= drop;
            polyline.push([fold, y]);
            polyline.push([back, y]);
            prev = t.steps[i + 1].to;
            i += 2;
        } else {
            control_points.push([mid2.to_f64() / 2.0, y]);
            polyline.push([s.to.to_f64(), y]);
            prev = s.to;
            i += 1;
        }
    }
    let mut tallies: Vec<(PhiNum, usize)> = tally.into_iter().map(|((m, k), c)| (PhiNum::new(m, k), c)).collect();
    tallies.sort_by_key(|t| t.0);
    Ok(DeviationDiagram { polyline, control_points, tallies, drop, total_drop: -y })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Move {
    pub letter: char,
    /// Direction relative to the excursion's first move.
    pub dir: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Excursion {
    /// Letter range [start, end).
    pub start: usize,
    pub end: usize,
    pub side: i8,
    /// Both ends on zero. Only the final excursion of a trace can be open.
    pub closed: bool,
    pub key: Vec<Move>,
}

impl Excursion {
    pub fn tiles(&self) -> usize {
        self.end - self.start
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub key: String,
    pub tiles: usize,
    pub occurrences: usize,
    pub first_start: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcursionReport {
    pub excursions: Vec<Excursion>,
    /// Distinct closed excursions, ordered by size then key.
    pub structures: Vec<Structure>,
    pub identify_reversal: bool,
}

fn reversed_key(key: &[Move]) -> Vec<Move> {
    // walking backwards flips each a; a b's spike stays on its side
    let raw: Vec<Move> = key
        .iter()
        .rev()
        .map(|m| Move { letter: m.letter, dir: if m.letter == 'a' { -m.dir } else { m.dir } })
        .collect();
    let s = raw.first().map_or(1, |m| m.dir);
    raw.into_iter().map(|m| Move { letter: m.letter, dir: m.dir * s }).collect()
}

pub fn key_string(key: &[Move]) -> String {
    key.iter().map(|m| format!("{}{}", m.letter, if m.dir > 0 { '+' } else { '-' })).collect()
}

fn canonical(key: &[Move], identify_reversal: bool) -> Vec<Move> {
    if identify_reversal {
        let r = reversed_key(key);
        if r < key.to_vec() {
            return r;
        }
    }
    key.to_vec()
}

/// Splits the trace at every exact return to zero. Letters never straddle a
/// zero: tile boundaries sit on multiples of φ and b folds lie ½ off them.
pub fn zero_excursions(w: &Word, identify_reversal: bool) -> Result<ExcursionReport> {
    let t = trace_1d(w)?;
    let s = w.letters();
    let mut excursions = Vec::new();
    let mut start = 0;
    let mut dir: i8 = 1;
    let mut key = Vec::new();
    let mut first_dir = 0;
    for (i, &c) in s.iter().enumerate() {
        if key.is_empty() {
            first_dir = dir;
        }
        key.push(Move { letter: c as char, dir: dir * first_dir });
        if c == b'b' {
            dir = -dir;
        }
        if t.boundaries[i + 1].is_zero() {
            excursions.push(Excursion {
                start,
                end: i + 1,
                side: first_dir,
                closed: true,
                key: canonical(&key, identify_reversal),
            });
            key.clear();
            start = i + 1;
        }
    }
    if !key.is_empty() {
        excursions.push(Excursion {
            start,
            end: s.len(),
            side: first_dir,
            closed: false,
            key: canonical(&key, identify_reversal),
        });
    }
    let mut seen: BTreeMap<Vec<Move>, Structure> = BTreeMap::new();
    for e in excursions.iter().filter(|e| e.closed) {
        seen.entry(e.key.clone())
            .or_insert_with(|| Structure { key: key_string(&e.key), tiles: e.tiles(), occurrences: 0, first_start: e.start })
            .occurrences += 1;
    }
    let mut structures: Vec<Structure> = seen.into_values().collect();
    structures.sort_by(|a, b| a.tiles.cmp(&b.tiles).then_with(|| a.key.cmp(&b.key)));
    Ok(ExcursionReport { excursions, structures, identify_reversal })
}
