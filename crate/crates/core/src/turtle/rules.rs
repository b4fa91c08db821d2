//! Drawing rules: how tokens of a word map to turtle actions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::phi::PhiNum;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Length {
    Exact(PhiNum),
    Float(f64),
}

impl Length {
    pub fn to_f64(self) -> f64 {
        match self {
            Length::Exact(p) => p.to_f64(),
            Length::Float(x) => x,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TurtleAction {
    Forward(Length),
    /// Degrees, positive is counterclockwise.
    Turn(f64),
}

use TurtleAction::{Forward, Turn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenScheme {
    PerLetter,
    PerDigram,
    /// Letter plus parity of its position; `base` is the number given to index 0.
    PerLetterWithParity { base: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DrawingRule {
    pub name: String,
    pub scheme: TokenScheme,
    pub actions: BTreeMap<String, Vec<TurtleAction>>,
}

const HALF: Length = Length::Exact(PhiNum::HALF);
const ONE: Length = Length::Exact(PhiNum::ONE);
const PHI: Length = Length::Exact(PhiNum::PHI);

fn table(entries: &[(&str, Vec<TurtleAction>)]) -> BTreeMap<String, Vec<TurtleAction>> {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Folds an angle into (-180, 180].
fn fold_angle(deg: f64) -> f64 {
    let mut a = deg % 360.0;
    if a <= -180.0 {
        a += 360.0;
    } else if a > 180.0 {
        a -= 360.0;
    }
    a
}

impl DrawingRule {
    pub fn identity() -> DrawingRule {
        DrawingRule {
            name: "identity".into(),
            scheme: TokenScheme::PerLetter,
            actions: table(&[("a", vec![Forward(PHI)]), ("b", vec![Forward(ONE)])]),
        }
    }

    pub fn to_and_fro() -> DrawingRule {
        DrawingRule {
            name: "to-and-fro".into(),
            scheme: TokenScheme::PerLetter,
            actions: table(&[("a", vec![Forward(PHI)]), ("b", vec![Forward(HALF), Turn(180.0), Forward(HALF)])]),
        }
    }

    /// b turns clockwise by `angle` between its two half steps.
    pub fn generalized(angle: f64) -> DrawingRule {
        let turn = fold_angle(-angle);
        let name = if fold_angle(angle) == 180.0 { "to-and-fro".to_string() } else { format!("angle:{angle}") };
        DrawingRule {
            name,
            scheme: TokenScheme::PerLetter,
            actions: table(&[("a", vec![Forward(PHI)]), ("b", vec![Forward(HALF), Turn(turn), Forward(HALF)])]),
        }
    }

    pub fn double_letter() -> DrawingRule {
        DrawingRule {
            name: "double-letter".into(),
            scheme: TokenScheme::PerDigram,
            actions: table(&[
                ("ab", vec![Forward(HALF), Turn(-90.0), Forward(HALF)]),
                ("aa", vec![Forward(ONE)]),
                ("ba", vec![Forward(HALF), Turn(90.0), Forward(HALF)]),
            ]),
        }
    }

    pub fn odd_even(parity_base: usize) -> DrawingRule {
        DrawingRule {
            name: "odd-even".into(),
            scheme: TokenScheme::PerLetterWithParity { base: parity_base },
            actions: table(&[
                ("a.even", vec![Forward(ONE), Turn(90.0)]),
                ("a.odd", vec![Forward(ONE), Turn(-90.0)]),
                ("b.even", vec![Forward(ONE)]),
                ("b.odd", vec![Forward(ONE)]),
            ]),
        }
    }

    pub fn omega() -> DrawingRule {
        DrawingRule {
            name: "omega".into(),
            scheme: TokenScheme::PerLetter,
            actions: table(&[("F", vec![Forward(ONE)]), ("L", vec![Turn(90.0)]), ("R", vec![Turn(-90.0)])]),
        }
    }

    /// Accepts identity, to-and-fro, double-letter, odd-even, omega and angle:<deg>.
    pub fn by_name(name: &str, parity_base: usize) -> Result<DrawingRule> {
        match name {
            "identity" => Ok(DrawingRule::identity()),
            "to-and-fro" => Ok(DrawingRule::to_and_fro()),
            "double-letter" => Ok(DrawingRule::double_letter()),
            "odd-even" => Ok(DrawingRule::odd_even(parity_base)),
            "omega" => Ok(DrawingRule::omega()),
            _ => {
                let deg = name
                    .strip_prefix("angle:")
                    .and_then(|d| d.parse::<f64>().ok())
                    .filter(|d| d.is_finite())
                    .ok_or_else(|| Error::Invalid(format!("unknown rule {name:?}")))?;
                Ok(DrawingRule::generalized(deg))
            }
        }
    }

    /// True when every turn is a multiple of 90° and every length is exact.
    pub fn is_exact(&self) -> bool {
        self.actions.values().flatten().all(|a| match a {
            Forward(Length::Exact(_)) => true,
            Forward(Length::Float(_)) => false,
            Turn(d) => d % 90.0 == 0.0,
        })
    }

    pub fn tokens(&self, w: &Word) -> Result<Vec<String>> {
        let s = w.letters();
        let toks: Vec<String> = match self.scheme {
            TokenScheme::PerLetter => s.iter().map(|&c| (c as char).to_string()).collect(),
            TokenScheme::PerDigram => {
                if s.len() % 2 == 1 {
                    return Err(Error::Pairing(format!("odd length {} under {}", s.len(), self.name)));
                }
                s.chunks(2).map(|p| String::from_utf8_lossy(p).into_owned()).collect()
            }
            TokenScheme::PerLetterWithParity { base } => s
                .iter()
                .enumerate()
                .map(|(i, &c)| format!("{}.{}", c as char, if (i + base) % 2 == 0 { "even" } else { "odd" }))
                .collect(),
        };
        for (i, t) in toks.iter().enumerate() {
            if !self.actions.contains_key(t) {
                if self.scheme == TokenScheme::PerDigram && t == "bb" {
                    return Err(Error::IllegalDigram(2 * i));
                }
                return Err(Error::AlphabetMismatch {
                    letter: t.chars().next().unwrap_or('?'),
                    alphabet: self.name.clone(),
                });
            }
        }
        Ok(toks)
    }
}

pub fn builtin_rules() -> Vec<DrawingRule> {
    vec![
        DrawingRule::identity(),
        DrawingRule::to_and_fro(),
        DrawingRule::generalized(137.5),
        DrawingRule::double_letter(),
        DrawingRule::odd_even(0),
        DrawingRule::omega(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_entries() {
        let t = DrawingRule::to_and_fro();
        assert_eq!(t.actions["b"], vec![Forward(HALF), Turn(180.0), Forward(HALF)]);
        assert_eq!(DrawingRule::double_letter().actions["aa"], vec![Forward(ONE)]);
        assert_eq!(DrawingRule::generalized(180.0), t);
        assert!(t.is_exact());
        assert!(!DrawingRule::generalized(137.0).is_exact());
    }

    #[test]
    fn tokenizing() {
        let d = DrawingRule::double_letter();
        assert!(matches!(d.tokens(&"aba".into()), Err(Error::Pairing(_))));
        assert_eq!(d.tokens(&"aabb".into()), Err(Error::IllegalDigram(2)));
        let oe = DrawingRule::odd_even(0);
        assert_eq!(oe.tokens(&"ab".into()).unwrap(), vec!["a.even", "b.odd"]);
        let oe1 = DrawingRule::odd_even(1);
        assert_eq!(oe1.tokens(&"ab".into()).unwrap(), vec!["a.odd", "b.even"]);
        assert!(DrawingRule::omega().tokens(&"FX".into()).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(DrawingRule::by_name("angle:108", 0).unwrap().name, "angle:108");
        assert!(DrawingRule::by_name("spiral", 0).is_err());
        assert_eq!(builtin_rules().len(), 6);
    }
}
