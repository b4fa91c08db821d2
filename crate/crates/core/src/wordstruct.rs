//! Factorizations, embeddings, digrams and the parity and displacement classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::phi::PhiNum;
use crate::turtle::line::trace_1d;
use crate::word::{fib, fib_word, swap_last_two, trim_last_two, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CentralLetter {
    Empty,
    A,
    B,
}

/// Middle letter of W_n: empty for n ≡ 1, b for n ≡ 0, a for n ≡ 2 (mod 3).
pub fn central_letter(n: usize) -> Result<CentralLetter> {
    if n == 0 {
        return Err(Error::Underflow { n, need: 2 });
    }
    let c = match n % 3 {
        1 => CentralLetter::Empty,
        0 => CentralLetter::B,
        _ => CentralLetter::A,
    };
    if n <= 24 {
        debug_assert_eq!(central_letter_of(&trim_last_two(n)?), Some(c));
    }
    Ok(c)
}

/// Middle letter read off a word; `None` when the word is not a palindrome.
pub fn central_letter_of(w: &Word) -> Option<CentralLetter> {
    if !w.is_palindrome() {
        return None;
    }
    if w.len() % 2 == 0 {
        return Some(CentralLetter::Empty);
    }
    Some(if w.letters()[w.len() / 2] == b'a' { CentralLetter::A } else { CentralLetter::B })
}

/// Period of the Fibonacci numbers modulo m.
pub fn pisano_period(m: u64) -> u64 {
    assert!(m >= 1, "pisano_period needs m ≥ 1");
    if m == 1 {
        return 1;
    }
    let (mut a, mut b) = (0u64, 1u64);
    let mut n = 0;
    loop {
        let t = (a + b) % m;
        a = b;
        b = t;
        n += 1;
        if a == 0 && b == 1 {
            return n;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub factors: Vec<Word>,
    pub remainder: Word,
}

impl Factorization {
    pub fn concat(&self) -> Word {
        let mut w = Word::empty();
        for f in &self.factors {
            w.push_word(f);
        }
        w.push_word(&self.remainder);
        w
    }
}

/// Greedy parse into aba and baaba, choosing by the next letter.
pub fn factorize_aba_baaba(w: &Word) -> Result<Factorization> {
    let s = w.letters();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let f: &[u8] = if s[i] == b'b' { b"baaba" } else { b"aba" };
        if s[i..].starts_with(f) {
            factors.push(Word::from_letters(f.to_vec()));
            i += f.len();
        } else if s.len() - i < 5 {
            break;
        } else {
            return Err(Error::NotAPrefix(i));
        }
    }
    Ok(Factorization { factors, remainder: Word::from_letters(s[i..].to_vec()) })
}

/// Indices [3m-2, 3m-5, …, 4, 3, 4, …, 3m-2]; the words concatenate to F_{3m}.
pub fn nested_embedding(m: usize) -> Vec<usize> {
    assert!(m >= 1, "nested_embedding needs m ≥ 1");
    let outer: Vec<usize> = (1..m).rev().map(|j| 3 * j + 1).collect();
    let mut v = outer.clone();
    v.push(3);
    v.extend(outer.iter().rev());
    v
}

pub fn nested_embedding_word(m: usize) -> Word {
    let mut w = Word::empty();
    for k in nested_embedding(m) {
        w.push_word(&fib_word(k));
    }
    w
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Digram {
    Ab,
    Aa,
    Ba,
}

impl Digram {
    pub fn as_str(self) -> &'static str {
        match self {
            Digram::Ab => "ab",
            Digram::Aa => "aa",
            Digram::Ba => "ba",
        }
    }
}

pub fn digram_pairs(w: &Word) -> Result<Vec<Digram>> {
    let s = w.letters();
    if s.len() % 2 == 1 {
        return Err(Error::Pairing(format!("odd length {}", s.len())));
    }
    s.chunks(2)
        .enumerate()
        .map(|(i, p)| match p {
            b"ab" => Ok(Digram::Ab),
            b"aa" => Ok(Digram::Aa),
            b"ba" => Ok(Digram::Ba),
            b"bb" => Err(Error::IllegalDigram(2 * i)),
            _ => Err(Error::Pairing(format!("foreign letters at {}", 2 * i))),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DigramFrequencies {
    pub ab: usize,
    pub aa: usize,
    pub ba: usize,
    pub total: usize,
    pub freq_ab: f64,
    pub freq_aa: f64,
    pub freq_ba: f64,
}

/// Pair counts of F_n, defined when |F_n| is even, i.e. n ≡ 1 (mod 3).
pub fn digram_frequencies(n: usize) -> Result<DigramFrequencies> {
    if n % 3 != 1 {
        return Err(Error::Pairing(format!("F_{n} has odd length; need n ≡ 1 (mod 3)")));
    }
    let pairs = digram_pairs(&fib_word(n))?;
    let count = |d| pairs.iter().filter(|&&p| p == d).count();
    let (ab, aa, ba) = (count(Digram::Ab), count(Digram::Aa), count(Digram::Ba));
    let t = pairs.len() as f64;
    Ok(DigramFrequencies {
        ab,
        aa,
        ba,
        total: pairs.len(),
        freq_ab: ab as f64 / t,
        freq_aa: aa as f64 / t,
        freq_ba: ba as f64 / t,
    })
}

/// A word in the free group on the letters; `true` marks an inverse letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SignedWord(pub Vec<(char, bool)>);

impl SignedWord {
    pub fn positive(w: &Word) -> SignedWord {
        SignedWord(w.letters().iter().map(|&c| (c as char, false)).collect())
    }

    /// Concatenate and cancel x·x⁻¹ pairs.
    pub fn reduce_concat(parts: &[SignedWord]) -> SignedWord {
        let mut out: Vec<(char, bool)> = Vec::new();
        for p in parts {
            for &(c, inv) in &p.0 {
                if out.last() == Some(&(c, !inv)) {
                    out.pop();
                } else {
                    out.push((c, inv));
                }
            }
        }
        SignedWord(out)
    }

    /// The plain word, if no inverse letters remain.
    pub fn to_word(&self) -> Option<Word> {
        if self.0.iter().any(|&(_, inv)| inv) {
            return None;
        }
        Some(Word::from_letters(self.0.iter().map(|&(c, _)| c as u8).collect()))
    }

    pub fn render(&self) -> String {
        self.0.iter().map(|&(c, inv)| if inv { format!("{c}^-1") } else { c.to_string() }).collect()
    }
}

/// W_k, with W_0 = b⁻¹ so that F_0 = W_0·ba holds in the free group.
pub fn w_signed(k: usize) -> SignedWord {
    if k == 0 {
        SignedWord(vec![('b', true)])
    } else {
        SignedWord::positive(&trim_last_two(k).unwrap())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FivePartSplit {
    pub n: usize,
    /// Indices of the five W parts: n-3, n-3, n-6, n-3, n-3.
    pub part_indices: [usize; 5],
    pub parts: Vec<SignedWord>,
    /// vu, vu, uv, uv where F_n ends in uv.
    pub joints: [Word; 4],
}

impl FivePartSplit {
    pub fn concat(&self) -> Option<Word> {
        let mut seq = Vec::new();
        for i in 0..5 {
            seq.push(self.parts[i].clone());
            if i < 4 {
                seq.push(SignedWord::positive(&self.joints[i]));
            }
        }
        SignedWord::reduce_concat(&seq).to_word()
    }
}

/// W_n = W_{n-3}(vu) W_{n-3}(vu) W_{n-6}(uv) W_{n-3}(uv) W_{n-3}.
pub fn decompose_theorem31(n: usize) -> Result<FivePartSplit> {
    if n < 6 {
        return Err(Error::Invalid(format!("decompose_theorem31 needs n ≥ 6, got {n}")));
    }
    let (u, v) = if n % 2 == 0 { ('b', 'a') } else { ('a', 'b') };
    let vu = Word::new(&format!("{v}{u}"));
    let uv = Word::new(&format!("{u}{v}"));
    let idx = [n - 3, n - 3, n - 6, n - 3, n - 3];
    Ok(FivePartSplit {
        n,
        part_indices: idx,
        parts: idx.iter().map(|&k| w_signed(k)).collect(),
        joints: [vu.clone(), vu, uv.clone(), uv],
    })
}

/// [T_{n+1} = F_n T_{n-1}, F_n = F_{n-2} T_{n-1}, T_n = F_{n-2} F_{n-1}].
pub fn check_lemma_32_33(n: usize) -> Result<[bool; 3]> {
    if n < 3 {
        return Err(Error::Invalid(format!("check_lemma_32_33 needs n ≥ 3, got {n}")));
    }
    let f = fib_word;
    let t = |k| swap_last_two(k).unwrap();
    Ok([
        t(n + 1) == f(n).concat(&t(n - 1)),
        f(n) == f(n - 2).concat(&t(n - 1)),
        t(n) == f(n - 2).concat(&f(n - 1)),
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Sustain,
    Reversal,
}

impl Parity {
    pub fn of_direction(d: i8) -> Parity {
        if d > 0 {
            Parity::Sustain
        } else {
            Parity::Reversal
        }
    }

    pub fn letter(self) -> char {
        match self {
            Parity::Sustain => 'S',
            Parity::Reversal => 'R',
        }
    }
}

/// Sustain iff F_n has an even number of b's, i.e. Fib(n) is even.
pub fn direction_parity(n: usize) -> Parity {
    if fib(n) % 2 == 0 {
        Parity::Sustain
    } else {
        Parity::Reversal
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DisplacementClass {
    /// Final position as a multiple of φ: +1, -1 or 0.
    pub magnitude: i8,
    pub parity: Parity,
    /// "closed-form" or "simulated".
    pub source: &'static str,
}

impl DisplacementClass {
    pub fn position(&self) -> PhiNum {
        PhiNum::PHI * i64::from(self.magnitude)
    }
}

/// Closed forms for n ≡ 0, 1, 3, 4 (mod 6); a trace of F_n otherwise.
pub fn displacement_class(n: usize) -> Result<DisplacementClass> {
    if n == 0 {
        return Err(Error::Invalid("displacement_class needs n ≥ 1".into()));
    }
    let closed = |magnitude, parity| Ok(DisplacementClass { magnitude, parity, source: "closed-form" });
    match n % 6 {
        0 => closed(1, Parity::Sustain),
        1 => closed(1, Parity::Reversal),
        3 => closed(-1, Parity::Sustain),
        4 => closed(-1, Parity::Reversal),
        _ => {
            let t = trace_1d(&fib_word(n))?;
            let p = t.final_position();
            let magnitude = [1i8, -1, 0]
                .into_iter()
                .find(|&m| p == PhiNum::PHI * i64::from(m))
                .ok_or_else(|| Error::Domain(format!("F_{n} ends at {p}, outside {{+φ, -φ, 0}}")))?;
            Ok(DisplacementClass { magnitude, parity: Parity::of_direction(t.final_direction), source: "simulated" })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrackRow {
    pub component: usize,
    pub initial_direction: i8,
    pub relative_displacement: PhiNum,
    pub final_direction: i8,
    pub running_displacement: PhiNum,
}

/// Walks the nested embedding of F_{3m}, one component at a time.
pub fn track_components(m: usize) -> Vec<TrackRow> {
    let mut dir: i8 = 1;
    let mut running = PhiNum::ZERO;
    let mut rows = Vec::new();
    for k in nested_embedding(m) {
        let t = trace_1d(&fib_word(k)).unwrap();
        let rel = t.final_position() * i64::from(dir);
        let initial = dir;
        dir *= t.final_direction;
        running += rel;
        rows.push(TrackRow {
            component: k,
            initial_direction: initial,
            relative_displacement: rel,
            final_direction: dir,
            running_displacement: running,
        });
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_letters() {
        assert_eq!(central_letter(1).unwrap(), CentralLetter::Empty);
        assert_eq!(central_letter(2).unwrap(), CentralLetter::A);
        assert_eq!(central_letter(9).unwrap(), CentralLetter::B);
    }

    #[test]
    fn pisano() {
        assert_eq!(pisano_period(2), 3);
        assert_eq!(pisano_period(1), 1);
        assert_eq!(pisano_period(10), 60);
    }

    #[test]
    fn prefix_parse() {
        let f = factorize_aba_baaba(&crate::word::fib_prefix(29)).unwrap();
        let want = ["aba", "aba", "baaba", "aba", "baaba", "baaba", "aba"];
        assert_eq!(f.factors.iter().map(|w| w.as_str()).collect::<Vec<_>>(), want);
        assert_eq!(f.remainder.as_str(), "ba");
        let f = factorize_aba_baaba(&"aba".into()).unwrap();
        assert_eq!((f.factors.len(), f.remainder.len()), (1, 0));
        assert!(factorize_aba_baaba(&"abbaaba".into()).is_err());
    }

    #[test]
    fn embedding() {
        assert_eq!(nested_embedding(4), vec![10, 7, 4, 3, 4, 7, 10]);
        assert_eq!(nested_embedding(1), vec![3]);
        assert_eq!(nested_embedding_word(5), fib_word(15));
    }

    #[test]
    fn digrams() {
        use Digram::*;
        assert_eq!(digram_pairs(&fib_word(4)).unwrap(), vec![Ab, Aa, Ba, Ba]);
        assert_eq!(digram_pairs(&Word::empty()).unwrap(), vec![]);
        assert!(digram_pairs(&"aba".into()).is_err());
        let d = digram_frequencies(7).unwrap();
        assert_eq!((d.ab, d.aa, d.ba), (7, 4, 6));
        let d = digram_frequencies(4).unwrap();
        assert_eq!((d.freq_ab, d.freq_aa, d.freq_ba), (0.25, 0.25, 0.5));
        assert!(digram_frequencies(5).is_err());
    }

    #[test]
    fn five_part_split() {
        let t = decompose_theorem31(10).unwrap();
        assert_eq!(t.part_indices, [7, 7, 4, 7, 7]);
        assert_eq!(t.joints.iter().map(|j| j.as_str()).collect::<Vec<_>>(), ["ab", "ab", "ba", "ba"]);
        assert_eq!(t.concat().unwrap(), trim_last_two(10).unwrap());
        let t = decompose_theorem31(6).unwrap();
        assert_eq!(t.parts[2].render(), "b^-1");
        assert_eq!(t.concat().unwrap(), trim_last_two(6).unwrap());
        assert!(decompose_theorem31(5).is_err());
    }

    #[test]
    fn t_word_identities() {
        assert_eq!(check_lemma_32_33(3).unwrap(), [true; 3]);
        assert_eq!(swap_last_two(3).unwrap(), fib_word(1).concat(&fib_word(2)));
    }

    #[test]
    fn classes() {
        assert_eq!(direction_parity(6), Parity::Sustain);
        assert_eq!(direction_parity(7), Parity::Reversal);
        assert_eq!(direction_parity(3), Parity::Sustain);
        let c = displacement_class(13).unwrap();
        assert_eq!((c.magnitude, c.parity), (1, Parity::Reversal));
        let c = displacement_class(15).unwrap();
        assert_eq!((c.magnitude, c.parity), (-1, Parity::Sustain));
        let c = displacement_class(5).unwrap();
        assert_eq!((c.magnitude, c.parity, c.source), (0, Parity::Reversal, "simulated"));
    }

    #[test]
    fn f15_running_displacement() {
        let rows = track_components(5);
        let running: Vec<i64> = rows.iter().map(|r| {
            assert_eq!(r.running_displacement.k, 0);
            r.running_displacement.m
        }).collect();
        assert_eq!(running, vec![1, 2, 3, 4, 3, 2, 1, 0, -1]);
        let rows = track_components(1);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].running_displacement, -PhiNum::PHI);
    }
}
