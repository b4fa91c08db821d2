//! Words, alphabets and substitutions, plus the Fibonacci word constructors.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A single letter, stored as its ASCII byte.
pub type Letter = u8;

/// A finite word. Equality is letterwise.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Builds a word from ASCII text. No alphabet check is made here.
    pub fn new(s: &str) -> Word {
        Word(s.as_bytes().to_vec())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("words hold ASCII letters")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&c| c == letter).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push_word(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    /// Position of the first occurrence of `needle`, if any.
    pub fn find(&self, needle: &Word) -> Option<usize> {
        if needle.is_empty() {
            return Some(0);
        }
        self.0.windows(needle.len()).position(|w| w == needle.letters())
    }

    pub fn contains(&self, needle: &Word) -> bool {
        self.find(needle).is_some()
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_str())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        if let Some(c) = s.chars().find(|c| !c.is_ascii_alphabetic()) {
            return Err(Error::AlphabetMismatch { letter: c, alphabet: "ASCII letters".into() });
        }
        Ok(Word::new(s))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Word {
        Word::new(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new(letters: &str) -> Result<Alphabet> {
        let mut seen = BTreeSet::new();
        for c in letters.bytes() {
            if !c.is_ascii_alphabetic() || !seen.insert(c) {
                return Err(Error::Invalid(format!("bad alphabet {letters:?}")));
            }
        }
        if seen.is_empty() {
            return Err(Error::Invalid("empty alphabet".into()));
        }
        Ok(Alphabet { letters: letters.bytes().collect() })
    }

    pub fn fibonacci() -> Alphabet {
        Alphabet { letters: b"ab".to_vec() }
    }

    pub fn omega() -> Alphabet {
        Alphabet { letters: b"FLR".to_vec() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn index_of(&self, c: Letter) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&c| self.index_of(c).is_none()) {
            None => Ok(()),
            Some(&c) => Err(Error::AlphabetMismatch {
                letter: c as char,
                alphabet: String::from_utf8_lossy(&self.letters).into_owned(),
            }),
        }
    }
}

/// A letter to word map, extended to words by concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Substitution {
    /// `images` pairs each letter with its image; every letter needs exactly one.
    pub fn new(alphabet: Alphabet, images: &[(Letter, &str)]) -> Result<Substitution> {
        let mut table: Vec<Option<Word>> = vec![None; alphabet.len()];
        for &(c, img) in images {
            let i = alphabet.index_of(c).ok_or(Error::AlphabetMismatch {
                letter: c as char,
                alphabet: String::from_utf8_lossy(alphabet.letters()).into_owned(),
            })?;
            let w = Word::new(img);
            if w.is_empty() {
                return Err(Error::Invalid(format!("empty image for {}", c as char)));
            }
            alphabet.check(&w)?;
            if table[i].replace(w).is_some() {
                return Err(Error::Invalid(format!("two images for {}", c as char)));
            }
        }
        let images = table
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| Error::Invalid(format!("no image for {}", alphabet.letters()[i] as char)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Substitution { alphabet, images })
    }

    /// θ: a -> ab, b -> a.
    pub fn theta() -> Substitution {
        Substitution::new(Alphabet::fibonacci(), &[(b'a', "ab"), (b'b', "a")]).unwrap()
    }

    /// Ω: F -> FLFRFRFLF, L -> L, R -> R.
    pub fn omega() -> Substitution {
        Substitution::new(Alphabet::omega(), &[(b'F', "FLFRFRFLF"), (b'L', "L"), (b'R', "R")]).unwrap()
    }

    pub fn identity(alphabet: Alphabet) -> Substitution {
        let images = alphabet.letters().iter().map(|&c| Word::from_letters(vec![c])).collect();
        Substitution { alphabet, images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, c: Letter) -> Option<&Word> {
        self.alphabet.index_of(c).map(|i| &self.images[i])
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.alphabet.check(w)?;
        let mut out = Vec::with_capacity(w.len() * 2);
        for &c in w.letters() {
            let i = self.alphabet.index_of(c).unwrap();
            out.extend_from_slice(self.images[i].letters());
        }
        Ok(Word::from_letters(out))
    }

    pub fn iterate(&self, w: &Word, n: usize) -> Result<Word> {
        let mut cur = w.clone();
        for _ in 0..n {
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }
}

/// Fib(0) = 0, Fib(1) = 1. Panics past Fib(93), the last value fitting in u64.
pub fn fib(n: usize) -> u64 {
    assert!(n <= 93, "Fib({n}) overflows u64");
    let (mut x, mut y) = (0u64, 1u64);
    for _ in 0..n {
        let t = x + y;
        x = y;
        y = t;
    }
    x
}

/// F_n = θⁿ(a).
pub fn fib_word(n: usize) -> Word {
    let theta = Substitution::theta();
    theta.iterate(&Word::new("a"), n).unwrap()
}

/// F_n from F_n = F_{n-1} F_{n-2}, seeded with F_0 = a, F_1 = ab.
pub fn fib_word_concat(n: usize) -> Word {
    let (mut prev, mut cur) = (Word::new("a"), Word::new("ab"));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = cur.concat(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Smallest n with |F_n| ≥ len.
pub fn fib_index_covering(len: usize) -> usize {
    (0..).find(|&n| fib(n + 2) as usize >= len).unwrap()
}

/// A prefix of the infinite Fibonacci word with at least `len` letters.
pub fn fib_prefix(len: usize) -> Word {
    let w = fib_word(fib_index_covering(len));
    w.slice(0, len)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WordStats {
    pub count_a: usize,
    pub count_b: usize,
    pub length: usize,
}

pub fn word_stats(w: &Word) -> Result<WordStats> {
    Alphabet::fibonacci().check(w)?;
    let count_b = w.count(b'b');
    Ok(WordStats { count_a: w.len() - count_b, count_b, length: w.len() })
}

/// W_n: F_n without its last two letters.
pub fn trim_last_two(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::Underflow { n, need: 2 });
    }
    let f = fib_word(n);
    Ok(f.slice(0, f.len() - 2))
}

/// T_n: F_n with its last two letters exchanged.
pub fn swap_last_two(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::Underflow { n, need: 2 });
    }
    let mut v = fib_word(n).into_letters();
    let l = v.len();
    v.swap(l - 1, l - 2);
    Ok(Word::from_letters(v))
}

/// F*_n: F_n without its leading aba.
pub fn strip_leading_aba(n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::NoAbaPrefix(n));
    }
    let f = fib_word(n);
    Ok(f.slice(3, f.len()))
}

/// Context length needed to see every factor of length `len`.
pub fn context_len(len: usize) -> usize {
    200.max(20 * len)
}

/// Every distinct factor of length `len` in F_{n_source}.
pub fn factor_set(n_source: usize, len: usize) -> Result<BTreeSet<Word>> {
    let w = fib_word(n_source);
    let need = context_len(len);
    if w.len() < need {
        return Err(Error::InsufficientContext { need, have: w.len() });
    }
    Ok(factors_of(&w, len))
}

pub fn factors_of(w: &Word, len: usize) -> BTreeSet<Word> {
    if len > w.len() {
        return BTreeSet::new();
    }
    if len == 0 {
        return BTreeSet::from([Word::empty()]);
    }
    w.letters().windows(len).map(|s| Word::from_letters(s.to_vec())).collect()
}

/// A block repeated `exponent` times in succession starting at `position`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Repetition {
    pub block: Word,
    pub exponent: usize,
    pub position: usize,
}

fn exponent_at(s: &[Letter], i: usize, len: usize) -> usize {
    let run = s[i..].iter().zip(&s[i + len..]).take_while(|(x, y)| x == y).count();
    1 + run / len
}

/// The highest power of any block of length ≤ `max_block`. Ties go to the
/// earliest position, then the shorter block. `None` only for an empty prefix.
pub fn max_power(prefix: &Word, max_block: usize) -> Option<Repetition> {
    let s = prefix.letters();
    let mut best: Option<Repetition> = None;
    for i in 0..s.len() {
        for len in 1..=max_block.min(s.len() - i) {
            let k = if i + len < s.len() { exponent_at(s, i, len) } else { 1 };
            if best.as_ref().is_none_or(|b| k > b.exponent) {
                best = Some(Repetition { block: Word::from_letters(s[i..i + len].to_vec()), exponent: k, position: i });
            }
        }
    }
    best
}

/// Distinct blocks of length ≤ `max_block` whose `exponent`-th power occurs in `prefix`.
pub fn repetitions(prefix: &Word, max_block: usize, exponent: usize) -> BTreeSet<Word> {
    let s = prefix.letters();
    let mut out = BTreeSet::new();
    for len in 1..=max_block {
        if len * exponent > s.len() {
            break;
        }
        for i in 0..=s.len() - len * exponent {
            if exponent_at(s, i, len) >= exponent {
                out.insert(Word::from_letters(s[i..i + len].to_vec()));
            }
        }
    }
    out
}

/// True iff `block` repeated `k` times is a factor of `w`.
pub fn contains_power(w: &Word, block: &Word, k: usize) -> bool {
    let mut p = Word::empty();
    for _ in 0..k {
        p.push_word(block);
    }
    w.contains(&p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_and_omega_images() {
        let t = Substitution::theta();
        assert_eq!(t.apply(&"a".into()).unwrap(), Word::new("ab"));
        assert_eq!(t.apply(&Word::empty()).unwrap(), Word::empty());
        let o = Substitution::omega();
        assert_eq!(o.apply(&"F".into()).unwrap(), Word::new("FLFRFRFLF"));
        assert!(matches!(t.apply(&"abc".into()), Err(Error::AlphabetMismatch { letter: 'c', .. })));
    }

    #[test]
    fn bad_substitutions() {
        let ab = Alphabet::fibonacci();
        assert!(Substitution::new(ab.clone(), &[(b'a', "ab")]).is_err());
        assert!(Substitution::new(ab.clone(), &[(b'a', "ab"), (b'b', "")]).is_err());
        assert!(Substitution::new(ab, &[(b'a', "ac"), (b'b', "a")]).is_err());
    }

    #[test]
    fn small_words() {
        assert_eq!(fib_word(0).as_str(), "a");
        assert_eq!(fib_word(3).as_str(), "abaab");
        assert_eq!(fib_word_concat(5).as_str(), "abaababaabaab");
        assert_eq!(fib_word_concat(1).as_str(), "ab");
        let s = word_stats(&fib_word(7)).unwrap();
        assert_eq!((s.count_a, s.count_b, s.length), (21, 13, 34));
        assert_eq!(word_stats(&Word::empty()).unwrap().length, 0);
    }

    #[test]
    fn trimmed_words() {
        assert_eq!(trim_last_two(1).unwrap(), Word::empty());
        assert_eq!(trim_last_two(4).unwrap().as_str(), "abaaba");
        assert_eq!(trim_last_two(3).unwrap().as_str(), "aba");
        assert!(trim_last_two(0).is_err());
        assert_eq!(swap_last_two(2).unwrap().as_str(), "aab");
        assert_eq!(swap_last_two(3).unwrap().as_str(), "ababa");
        assert_eq!(swap_last_two(1).unwrap().as_str(), "ba");
        assert!(swap_last_two(0).is_err());
        assert_eq!(strip_leading_aba(3).unwrap().as_str(), "ab");
        assert_eq!(strip_leading_aba(2).unwrap().as_str(), "");
        assert_eq!(strip_leading_aba(5).unwrap().as_str(), "ababaabaab");
        assert!(strip_leading_aba(1).is_err());
    }

    #[test]
    fn palindromes() {
        assert!(Word::new("abaaba").is_palindrome());
        assert!(Word::empty().is_palindrome());
        assert!(!Word::new("abaab").is_palindrome());
    }

    #[test]
    fn factor_sets() {
        let f3 = factor_set(12, 3).unwrap();
        let want: BTreeSet<Word> = ["aab", "aba", "baa", "bab"].iter().map(|s| Word::new(s)).collect();
        assert_eq!(f3, want);
        assert_eq!(factor_set(12, 1).unwrap().len(), 2);
        assert_eq!(factor_set(14, 12).unwrap().len(), 13);
        assert!(matches!(factor_set(5, 3), Err(Error::InsufficientContext { .. })));
    }

    #[test]
    fn powers() {
        let r = max_power(&"aa".into(), 1).unwrap();
        assert_eq!((r.block.as_str(), r.exponent), ("a", 2));
        assert!(max_power(&Word::empty(), 3).is_none());
        let f12 = fib_word(12);
        assert_eq!(max_power(&f12, 8).unwrap().exponent, 3);
        assert!(repetitions(&f12, 8, 3).contains(&Word::new("baaba")));
        assert!(contains_power(&f12, &"baababaa".into(), 2));
        assert!(contains_power(&f12, &"baaba".into(), 3));
        assert!(!contains_power(&f12, &"baaba".into(), 4));
    }

    #[test]
    fn fib_numbers() {
        assert_eq!((fib(0), fib(1), fib(2), fib(10)), (0, 1, 1, 55));
        assert_eq!(fib_prefix(29).len(), 29);
    }
}
