//! Binary words and naive pattern-instance search.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A finite word over `{0, 1}`. Symbols are stored as the bytes `0` and `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    /// Builds a word from symbols, rejecting anything other than 0 and 1.
    pub fn from_symbols(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidLetter(bad));
        }
        Ok(BinaryWord(symbols))
    }

    /// The length-`len` word whose symbol `i` is bit `len - 1 - i` of `bits`,
    /// so that counting `bits` upwards lists words in lexicographic order.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= 64, "from_bits supports at most 64 symbols");
        BinaryWord((0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    /// Symbolwise `0 <-> 1` exchange.
    pub fn complement(&self) -> Self {
        BinaryWord(self.0.iter().map(|&s| s ^ 1).collect())
    }

    pub fn reverse(&self) -> Self {
        BinaryWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> Self {
        let mut symbols = self.0.clone();
        symbols.extend_from_slice(&other.0);
        BinaryWord(symbols)
    }

    pub fn find_xxrx_instance(&self) -> Option<PatternInstance> {
        find_instance(&self.0, Pattern::XXrX)
    }

    pub fn find_xxxr_instance(&self) -> Option<PatternInstance> {
        find_instance(&self.0, Pattern::XXXr)
    }

    /// Membership in L by exhaustive instance search.
    pub fn avoids_xxrx_naive(&self) -> bool {
        avoids_xxrx(&self.0)
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, symbol)| match symbol {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidSymbol { symbol, position }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

/// The three-block patterns searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// `x x^R x`
    XXrX,
    /// `x x x^R`
    XXXr,
}

/// An occurrence of a three-block pattern: blocks of length `block_len`
/// starting at `start`, `start + block_len` and `start + 2 * block_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternInstance {
    pub start: usize,
    pub block_len: usize,
}

impl PatternInstance {
    /// Re-checks the occurrence blockwise against `word`.
    pub fn is_valid_in(&self, word: &BinaryWord, pattern: Pattern) -> bool {
        let t = self.block_len;
        t >= 1
            && self
                .start
                .checked_add(3 * t)
                .is_some_and(|end| end <= word.len())
            && matches_at(word.symbols(), self.start, t, pattern)
    }
}

impl fmt::Display for PatternInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.block_len)
    }
}

#[inline]
fn matches_at(w: &[u8], i: usize, t: usize, pattern: Pattern) -> bool {
    let (a, b, c) = (&w[i..i + t], &w[i + t..i + 2 * t], &w[i + 2 * t..i + 3 * t]);
    match pattern {
        Pattern::XXrX => a == c && a.iter().zip(b.iter().rev()).all(|(x, y)| x == y),
        Pattern::XXXr => a == b && a.iter().zip(c.iter().rev()).all(|(x, y)| x == y),
    }
}

/// Smallest block length first, then leftmost start.
pub fn find_instance(w: &[u8], pattern: Pattern) -> Option<PatternInstance> {
    let n = w.len();
    for t in 1..=n / 3 {
        for start in 0..=n - 3 * t {
            if matches_at(w, start, t, pattern) {
                return Some(PatternInstance { start, block_len: t });
            }
        }
    }
    None
}

pub fn avoids_xxrx(w: &[u8]) -> bool {
    find_instance(w, Pattern::XXrX).is_none()
}

/// Position of the first `000` or `111`, if any.
pub fn find_cube(w: &[u8]) -> Option<usize> {
    w.windows(3).position(|t| t[0] == t[1] && t[1] == t[2])
}
