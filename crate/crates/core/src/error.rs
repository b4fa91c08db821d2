use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("letter {letter:?} is not in alphabet {alphabet:?}")]
    AlphabetMismatch { letter: char, alphabet: String },
    #[error("F_{n} has fewer than {need} letters")]
    Underflow { n: usize, need: usize },
    #[error("F_{0} has no leading aba")]
    NoAbaPrefix(usize),
    #[error("need a Fibonacci prefix of at least {need} letters, have {have}")]
    InsufficientContext { need: usize, have: usize },
    #[error("word of length {len} exceeds oracle cap {cap}")]
    OracleCap { len: usize, cap: usize },
    #[error("cannot pair letters: {0}")]
    Pairing(String),
    #[error("illegal digram bb at position {0}")]
    IllegalDigram(usize),
    #[error("not a Fibonacci prefix: parse failed at position {0}")]
    NotAPrefix(usize),
    #[error("matrix is not primitive")]
    NotPrimitive,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("residue {0} is not 1 or 4 mod 6")]
    Residue(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("fit error: {0}")]
    Fit(String),
    #[error("no sign change of drift on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },
    #[error("path has fewer than 2 vertices")]
    EmptyCanvas,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
