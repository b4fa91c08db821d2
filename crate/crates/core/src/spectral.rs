//! Incidence matrices, primitivity and Perron-Frobenius data.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Letter, Substitution};

/// Entry (r, c) counts letter r in the image of letter c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    #[serde(serialize_with = "letters_as_strings")]
    pub letters: Vec<Letter>,
    pub entries: Vec<Vec<u64>>,
}

fn letters_as_strings<S: serde::Serializer>(l: &[Letter], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(l.iter().map(|&c| (c as char).to_string()))
}

impl IncidenceMatrix {
    pub fn new(letters: Vec<Letter>, entries: Vec<Vec<u64>>) -> Result<IncidenceMatrix> {
        let d = letters.len();
        if entries.len() != d || entries.iter().any(|r| r.len() != d) {
            return Err(Error::Invalid("matrix must be square over the alphabet".into()));
        }
        Ok(IncidenceMatrix { letters, entries })
    }

    pub fn identity(letters: Vec<Letter>) -> IncidenceMatrix {
        let d = letters.len();
        let entries = (0..d).map(|r| (0..d).map(|c| u64::from(r == c)).collect()).collect();
        IncidenceMatrix { letters, entries }
    }

    pub fn dim(&self) -> usize {
        self.letters.len()
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        self.entries.iter().map(|r| r[c]).collect()
    }

    pub fn mul(&self, o: &IncidenceMatrix) -> Result<IncidenceMatrix> {
        let d = self.dim();
        let mut out = vec![vec![0u64; d]; d];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = 0u64;
                for k in 0..d {
                    let p = self.entries[i][k].checked_mul(o.entries[k][j]).ok_or(Error::Overflow("matrix power"))?;
                    acc = acc.checked_add(p).ok_or(Error::Overflow("matrix power"))?;
                }
                *cell = acc;
            }
        }
        Ok(IncidenceMatrix { letters: self.letters.clone(), entries: out })
    }

    fn transpose(&self) -> IncidenceMatrix {
        let d = self.dim();
        let entries = (0..d).map(|r| (0..d).map(|c| self.entries[c][r]).collect()).collect();
        IncidenceMatrix { letters: self.letters.clone(), entries }
    }
}

pub fn incidence(s: &Substitution) -> IncidenceMatrix {
    let letters = s.alphabet().letters().to_vec();
    let d = letters.len();
    let mut entries = vec![vec![0u64; d]; d];
    for (c, &lc) in letters.iter().enumerate() {
        for &x in s.image(lc).unwrap().letters() {
            let r = s.alphabet().index_of(x).unwrap();
            entries[r][c] += 1;
        }
    }
    IncidenceMatrix { letters, entries }
}

/// Exact Mⁿ by repeated squaring. Fails on u64 overflow.
pub fn power(m: &IncidenceMatrix, n: u32) -> Result<IncidenceMatrix> {
    let mut result = IncidenceMatrix::identity(m.letters.clone());
    let mut base = m.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base)?;
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Primitivity {
    pub primitive: bool,
    /// Smallest n with Mⁿ strictly positive.
    pub exponent: Option<usize>,
}

/// Tests powers up to the Wielandt bound (d-1)²+1 on the zero pattern.
pub fn is_primitive(m: &IncidenceMatrix) -> Primitivity {
    let d = m.dim();
    if d == 0 {
        return Primitivity { primitive: false, exponent: None };
    }
    let pattern: Vec<Vec<bool>> = m.entries.iter().map(|r| r.iter().map(|&x| x > 0).collect()).collect();
    let mut cur = pattern.clone();
    let bound = (d - 1) * (d - 1) + 1;
    for e in 1..=bound {
        if cur.iter().all(|r| r.iter().all(|&x| x)) {
            return Primitivity { primitive: true, exponent: Some(e) };
        }
        let mut next = vec![vec![false; d]; d];
        for i in 0..d {
            for j in 0..d {
                next[i][j] = (0..d).any(|k| cur[i][k] && pattern[k][j]);
            }
        }
        cur = next;
    }
    Primitivity { primitive: false, exponent: None }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerronData {
    pub lambda_pf: f64,
    /// Letter frequencies, summing to 1.
    pub right_vector: Vec<f64>,
    /// Tile lengths, with the unit letter at 1.
    pub left_vector: Vec<f64>,
    pub unit_letter: char,
    pub method: &'static str,
    pub iterations: usize,
}

pub const POWER_TOL: f64 = 1e-12;
pub const POWER_MAX_ITER: usize = 10_000;

/// Perron-Frobenius eigendata. `unit` picks the letter whose tile length is 1;
/// it defaults to `b` when the alphabet has one, otherwise the last letter.
pub fn perron(m: &IncidenceMatrix, unit: Option<Letter>) -> Result<PerronData> {
    if !is_primitive(m).primitive {
        return Err(Error::NotPrimitive);
    }
    let unit = unit.unwrap_or_else(|| if m.letters.contains(&b'b') { b'b' } else { *m.letters.last().unwrap() });
    let ui = m
        .letters
        .iter()
        .position(|&c| c == unit)
        .ok_or_else(|| Error::Invalid(format!("unit letter {} not in alphabet", unit as char)))?;

    let (lambda, right, left, method, iterations) = if m.dim() == 1 {
        (m.entries[0][0] as f64, vec![1.0], vec![1.0], "closed-form", 0)
    } else if m.dim() == 2 {
        let [p, q] = [m.entries[0][0] as f64, m.entries[0][1] as f64];
        let [r, s] = [m.entries[1][0] as f64, m.entries[1][1] as f64];
        let disc = (p - s) * (p - s) + 4.0 * q * r;
        let lambda = (p + s + disc.sqrt()) / 2.0;
        let other = p + s - lambda;
        if other.abs() >= lambda {
            return Err(Error::NotPrimitive);
        }
        (lambda, vec![q, lambda - p], vec![r, lambda - p], "closed-form", 0)
    } else {
        let (lambda, right, it1) = power_iterate(m)?;
        let (_, left, it2) = power_iterate(&m.transpose())?;
        (lambda, right, left, "power-iteration", it1.max(it2))
    };
    let total: f64 = right.iter().sum();
    let right_vector = right.iter().map(|x| x / total).collect();
    let left_vector = left.iter().map(|x| x / left[ui]).collect();
    Ok(PerronData { lambda_pf: lambda, right_vector, left_vector, unit_letter: unit as char, method, iterations })
}

fn power_iterate(m: &IncidenceMatrix) -> Result<(f64, Vec<f64>, usize)> {
    let d = m.dim();
    let mut x = vec![1.0 / d as f64; d];
    let mut lambda = 0.0;
    for it in 1..=POWER_MAX_ITER {
        let y: Vec<f64> = (0..d).map(|i| (0..d).map(|j| m.entries[i][j] as f64 * x[j]).sum()).collect();
        let s: f64 = y.iter().sum();
        lambda = s;
        let y: Vec<f64> = y.iter().map(|v| v / s).collect();
        let delta = y.iter().zip(&x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        x = y;
        if delta < POWER_TOL {
            return Ok((lambda, x, it));
        }
    }
    Err(Error::Domain(format!("power iteration did not converge, last estimate {lambda}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn m(rows: &[&[u64]]) -> IncidenceMatrix {
        let letters = b"abcdefgh"[..rows.len()].to_vec();
        IncidenceMatrix::new(letters, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn theta_matrix() {
        let t = incidence(&Substitution::theta());
        assert_eq!(t.entries, vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(power(&t, 6).unwrap().entries, vec![vec![13, 8], vec![8, 5]]);
        assert_eq!(power(&t, 2).unwrap().entries, vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(power(&t, 0).unwrap(), IncidenceMatrix::identity(vec![b'a', b'b']));
        assert!(power(&t, 100).is_err());
    }

    #[test]
    fn omega_matrix() {
        let o = incidence(&Substitution::omega());
        assert_eq!(o.column(0), vec![5, 2, 2]);
        assert!(!is_primitive(&o).primitive);
        assert_eq!(perron(&o, None), Err(Error::NotPrimitive));
        let id = incidence(&Substitution::identity(Alphabet::fibonacci()));
        assert_eq!(id.entries, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn primitivity() {
        let t = incidence(&Substitution::theta());
        assert_eq!(is_primitive(&t), Primitivity { primitive: true, exponent: Some(2) });
        assert!(!is_primitive(&m(&[&[1, 0], &[0, 1]])).primitive);
        assert!(!is_primitive(&m(&[&[0, 1], &[1, 0]])).primitive);
    }

    #[test]
    fn theta_perron() {
        let p = perron(&incidence(&Substitution::theta()), None).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((p.lambda_pf - phi).abs() < 1e-12);
        assert!((p.right_vector[0] - (phi - 1.0)).abs() < 1e-12);
        assert!((p.right_vector[1] - (2.0 - phi)).abs() < 1e-12);
        assert!((p.left_vector[0] - phi).abs() < 1e-12);
        assert_eq!(p.left_vector[1], 1.0);
    }

    #[test]
    fn tribonacci_power_iteration() {
        // a -> ab, b -> ac, c -> a
        let t = m(&[&[1, 1, 1], &[1, 0, 0], &[0, 1, 0]]);
        let p = perron(&t, None).unwrap();
        assert_eq!(p.method, "power-iteration");
        let l = p.lambda_pf;
        assert!((l * l * l - l * l - l - 1.0).abs() < 1e-9);
        assert!((p.right_vector.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(p.left_vector.iter().all(|&x| x > 0.0));
    }
}
