//! Freely reduced words over an ordered symbol basis.
//!
//! A word is a sequence of letters, each a basis-symbol index together with a
//! sign (`+1` or `-1`). Words are kept freely reduced at all times: no letter
//! is ever adjacent to its own inverse. Reduction uses a stack, so it is a
//! single left-to-right pass, idempotent and confluent.

use std::fmt;

/// One letter of a word: basis symbol index and exponent sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    /// Index into the carrier's symbol basis.
    pub sym: u32,
    /// `+1` for the symbol, `-1` for its inverse.
    pub exp: i8,
}

impl Letter {
    /// The inverse letter.
    pub fn inv(self) -> Letter {
        Letter { sym: self.sym, exp: -self.exp }
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word (group identity).
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// A single-letter word.
    pub fn letter(sym: u32, exp: i8) -> Word {
        debug_assert!(exp == 1 || exp == -1);
        Word(vec![Letter { sym, exp }])
    }

    /// Builds a word from arbitrary letters, freely reducing them.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            match stack.last() {
                Some(&top) if top.sym == l.sym && top.exp == -l.exp => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word(stack)
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, rhs: &Word) -> Word {
        Word::from_letters(self.0.iter().copied().chain(rhs.0.iter().copied()))
    }

    /// The inverse word (letters reversed and inverted).
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// The letters of the word, in order.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Word length after reduction.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "x{}{}", l.sym, if l.exp == 1 { "" } else { "⁻¹" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_adjacent_inverses() {
        let w = Word::from_letters([
            Letter { sym: 0, exp: -1 },
            Letter { sym: 0, exp: 1 },
            Letter { sym: 1, exp: 1 },
            Letter { sym: 0, exp: 1 },
            Letter { sym: 0, exp: -1 },
        ]);
        assert_eq!(w, Word::letter(1, 1));
    }

    #[test]
    fn inverse_concat_is_identity() {
        let w = Word::from_letters([
            Letter { sym: 2, exp: 1 },
            Letter { sym: 0, exp: -1 },
            Letter { sym: 2, exp: 1 },
        ]);
        assert!(w.concat(&w.inverse()).is_empty());
        assert!(w.inverse().concat(&w).is_empty());
    }
}
