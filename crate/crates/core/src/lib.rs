//! Fibonacci word substitution and its combinatorics, legality testing by
//! desubstitution, spectral data, turtle drawing rules and fractal dimensions.
//!
//! ```
//! use fibword::word::fib_word;
//! assert_eq!(fib_word(3).as_str(), "abaab");
//! ```

#![allow(clippy::manual_is_multiple_of)]

pub mod cli;
pub mod error;
pub mod fractal;
pub mod legality;
pub mod phi;
pub mod render;
pub mod report;
pub mod spectral;
pub mod turtle;
pub mod word;
pub mod wordstruct;

pub use error::{Error, Result};
pub use phi::PhiNum;
pub use word::{Substitution, Word};
