//! Factor legality by iterated desubstitution, with a substring oracle to check against.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{context_len, factors_of, fib_prefix, Word};

/// Largest word the oracle will look up.
pub const ORACLE_CAP: usize = 5_000;

/// Words this short are decided by table lookup.
pub const BASE_LEN: usize = 4;

/// A word with flags for whether unknown letters may lie beyond each end.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BoundedFactor {
    pub word: Word,
    pub left_open: bool,
    pub right_open: bool,
}

impl BoundedFactor {
    pub fn new(word: Word, left_open: bool, right_open: bool) -> BoundedFactor {
        BoundedFactor { word, left_open, right_open }
    }

    pub fn open(word: impl Into<Word>) -> BoundedFactor {
        BoundedFactor::new(word.into(), true, true)
    }

    pub fn closed(word: impl Into<Word>) -> BoundedFactor {
        BoundedFactor::new(word.into(), false, false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    Bb,
    Aaa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Offence {
    pub index: usize,
    pub pattern: Pattern,
}

/// First occurrence of bb or aaa.
pub fn scan_forbidden(w: &Word) -> Option<Offence> {
    let s = w.letters();
    for i in 0..s.len() {
        if s[i] == b'b' && s.get(i + 1) == Some(&b'b') {
            return Some(Offence { index: i, pattern: Pattern::Bb });
        }
        if s[i] == b'a' && s.get(i + 1) == Some(&b'a') && s.get(i + 2) == Some(&b'a') {
            return Some(Offence { index: i, pattern: Pattern::Aaa });
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    Forbidden(Offence),
    /// A closed left end cannot start with b: no image of θ does.
    UnpairedLeadingB,
    ForeignLetter { index: usize },
    NotInBaseTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub word: Word,
    pub reason: Reason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DesubOutcome {
    /// The input itself cannot be an image factor.
    Rejected(Rejection),
    /// Every candidate preimage was rejected.
    Illegal(Vec<Rejection>),
    Preimages { kept: Vec<BoundedFactor>, pruned: Vec<Rejection> },
}

impl DesubOutcome {
    pub fn is_illegal(&self) -> bool {
        matches!(self, DesubOutcome::Rejected(_) | DesubOutcome::Illegal(_))
    }

    pub fn kept(&self) -> &[BoundedFactor] {
        match self {
            DesubOutcome::Rejected(_) | DesubOutcome::Illegal(_) => &[],
            DesubOutcome::Preimages { kept, .. } => kept,
        }
    }

    /// All candidate preimage words, kept or pruned, in order.
    pub fn candidates(&self) -> Vec<Word> {
        match self {
            DesubOutcome::Rejected(_) => Vec::new(),
            DesubOutcome::Illegal(r) => r.iter().map(|x| x.word.clone()).collect(),
            DesubOutcome::Preimages { kept, pruned } => {
                kept.iter().map(|f| f.word.clone()).chain(pruned.iter().map(|x| x.word.clone())).collect()
            }
        }
    }
}

/// One round of inverting θ on a factor.
///
/// Each `ab` becomes `a`, each other `a` becomes `b`. A leading `b` on an
/// open left end becomes `a`. A trailing unpaired `a` on an open right end
/// may be a whole image of `b` or the cut-off head of `ab`, so that branch
/// keeps both `..b` and the preimage with the letter dropped. Preimages are
/// open at both ends.
pub fn desubstitute(f: &BoundedFactor) -> DesubOutcome {
    let s = f.word.letters();
    if let Some(index) = s.iter().position(|&c| c != b'a' && c != b'b') {
        return DesubOutcome::Rejected(Rejection { word: f.word.clone(), reason: Reason::ForeignLetter { index } });
    }
    if let Some(off) = scan_forbidden(&f.word) {
        return DesubOutcome::Rejected(Rejection { word: f.word.clone(), reason: Reason::Forbidden(off) });
    }
    let mut pre = Vec::with_capacity(s.len() / 2 + 1);
    let mut i = 0;
    if s.first() == Some(&b'b') {
        if !f.left_open {
            return DesubOutcome::Rejected(Rejection { word: f.word.clone(), reason: Reason::UnpairedLeadingB });
        }
        pre.push(b'a');
        i = 1;
    }
    let mut dropped = None;
    while i < s.len() {
        if s.get(i + 1) == Some(&b'b') {
            pre.push(b'a');
            i += 2;
        } else {
            if i + 1 == s.len() && f.right_open {
                dropped = Some(pre.clone());
            }
            pre.push(b'b');
            i += 1;
        }
    }
    let mut candidates = vec![Word::from_letters(pre)];
    if let Some(d) = dropped {
        candidates.push(Word::from_letters(d));
    }
    let mut kept = Vec::new();
    let mut pruned = Vec::new();
    for w in candidates {
        match scan_forbidden(&w) {
            Some(off) => pruned.push(Rejection { word: w, reason: Reason::Forbidden(off) }),
            None => kept.push(BoundedFactor::open(w)),
        }
    }
    if kept.is_empty() {
        DesubOutcome::Illegal(pruned)
    } else {
        DesubOutcome::Preimages { kept, pruned }
    }
}

fn base_table() -> &'static HashSet<Word> {
    static TABLE: OnceLock<HashSet<Word>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let p = fib_prefix(context_len(BASE_LEN));
        (0..=BASE_LEN).flat_map(|l| factors_of(&p, l)).collect()
    })
}

/// The legal factors of length ≤ 4, sorted.
pub fn base_factors() -> BTreeSet<Word> {
    base_table().iter().cloned().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LegalityReport {
    pub factor: BoundedFactor,
    pub legal: bool,
    /// Desubstitution rounds run before the verdict.
    pub rounds: usize,
    /// Live preimages after each round.
    pub levels: Vec<Vec<Word>>,
    /// For a legal verdict, the base word that was reached.
    pub base: Option<Word>,
    /// Everything pruned along the way.
    pub rejections: Vec<Rejection>,
}

/// Breadth-first desubstitution until a base word is reached or every branch dies.
pub fn legality(f: &BoundedFactor) -> LegalityReport {
    let mut report = LegalityReport {
        factor: f.clone(),
        legal: false,
        rounds: 0,
        levels: Vec::new(),
        base: None,
        rejections: Vec::new(),
    };
    if f.left_open && f.right_open && f.word.len() <= BASE_LEN {
        report.legal = base_table().contains(&f.word);
        if report.legal {
            report.base = Some(f.word.clone());
        } else {
            report.rejections.push(Rejection { word: f.word.clone(), reason: Reason::NotInBaseTable });
        }
        return report;
    }
    if let DesubOutcome::Rejected(r) = desubstitute(f) {
        if !matches!(r.reason, Reason::UnpairedLeadingB) {
            report.rejections.push(r);
            return report;
        }
    }
    let mut level = vec![f.clone()];
    while !level.is_empty() {
        report.rounds += 1;
        let mut next = BTreeSet::new();
        for x in &level {
            match desubstitute(x) {
                DesubOutcome::Rejected(r) => report.rejections.push(r),
                DesubOutcome::Illegal(r) => report.rejections.extend(r),
                DesubOutcome::Preimages { kept, pruned } => {
                    report.rejections.extend(pruned);
                    for p in kept {
                        if p.word.len() > BASE_LEN {
                            next.insert(p);
                        } else if base_table().contains(&p.word) {
                            if report.base.is_none() {
                                report.base = Some(p.word.clone());
                            }
                        } else {
                            report.rejections.push(Rejection { word: p.word.clone(), reason: Reason::NotInBaseTable });
                        }
                    }
                }
            }
        }
        let mut words: Vec<Word> = next.iter().map(|p| p.word.clone()).collect();
        if let Some(b) = &report.base {
            words.push(b.clone());
            report.levels.push(words);
            report.legal = true;
            return report;
        }
        report.levels.push(words);
        level = next.into_iter().collect();
    }
    report
}

pub fn is_legal_factor(f: &BoundedFactor) -> bool {
    legality(f).legal
}

/// Substring search in a Fibonacci prefix of length max(200, 20·|w|).
pub fn oracle_is_factor(w: &Word) -> Result<bool> {
    if w.len() > ORACLE_CAP {
        return Err(Error::OracleCap { len: w.len(), cap: ORACLE_CAP });
    }
    Ok(fib_prefix(context_len(w.len())).contains(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forbidden_scan() {
        assert_eq!(scan_forbidden(&"abba".into()), Some(Offence { index: 1, pattern: Pattern::Bb }));
        assert_eq!(scan_forbidden(&"ababaabaaab".into()), Some(Offence { index: 7, pattern: Pattern::Aaa }));
        assert_eq!(scan_forbidden(&"abaab".into()), None);
    }

    #[test]
    fn single_rounds() {
        let d = desubstitute(&BoundedFactor::closed("ab"));
        assert_eq!(d.kept(), &[BoundedFactor::open("a")]);
        let d = desubstitute(&BoundedFactor::closed("ba"));
        assert!(d.is_illegal());
        let d = desubstitute(&BoundedFactor::open("ba"));
        assert_eq!(d.candidates(), vec![Word::new("ab"), Word::new("a")]);
        let d = desubstitute(&BoundedFactor::new("aba".into(), true, false));
        assert_eq!(d.candidates(), vec![Word::new("ab")]);
    }

    #[test]
    fn worked_example() {
        let d = desubstitute(&BoundedFactor::open("abaabaababaabababa"));
        assert!(d.is_illegal());
        assert!(d.candidates().contains(&Word::new("ababaabaaab")));
        let r = legality(&BoundedFactor::open("abaabaababaabababa"));
        assert_eq!((r.legal, r.rounds), (false, 1));
    }

    #[test]
    fn embedded_words() {
        let r = legality(&BoundedFactor::open("aababaabaabaaba"));
        assert_eq!((r.legal, r.rounds), (false, 2));
        let r = legality(&BoundedFactor::open("aababaababaababa"));
        assert_eq!((r.legal, r.rounds), (false, 3));
    }

    #[test]
    fn forbidden_input_needs_no_rounds() {
        let r = legality(&BoundedFactor::open("abaaab"));
        assert_eq!((r.legal, r.rounds), (false, 0));
        let r = legality(&BoundedFactor::closed("baab"));
        assert_eq!((r.legal, r.rounds), (false, 1));
    }

    #[test]
    fn short_words() {
        assert!(is_legal_factor(&BoundedFactor::open("baab")));
        assert!(!is_legal_factor(&BoundedFactor::open("bb")));
        assert!(is_legal_factor(&BoundedFactor::open("")));
        assert_eq!(base_factors().len(), 1 + 2 + 3 + 4 + 5);
    }

    #[test]
    fn oracle() {
        assert!(oracle_is_factor(&"babaab".into()).unwrap());
        assert!(!oracle_is_factor(&"aaa".into()).unwrap());
        assert!(oracle_is_factor(&Word::new(&"a".repeat(6000))).is_err());
    }
}
