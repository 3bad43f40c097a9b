//! Factorization of cube-free binary words into maximal alternating runs.
//!
//! A word avoiding `000` and `111` splits uniquely as
//! `A_0 a_1 a_1 A_1 a_2 a_2 ... a_k a_k A_k` with every `A_i` alternating.
//! Cutting between the two copies of each doubled letter leaves `k + 1`
//! alternating runs; their lengths form the profile. The first run is
//! `A_0 a_1`, interior runs are `a_i A_i a_{i+1}` and the last is `a_k A_k`,
//! so the profile entries sum to the word length and interior entries are
//! at least 2. Given the first letter, the profile determines the word.

use std::fmt;
use std::str::FromStr;

use crate::unimodal::{self, SequenceClass};
use crate::word::{self, BinaryWord, PatternInstance};
use crate::{Error, Result};

/// Run lengths `(n_0, ..., n_k)` of a cube-free word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile(Vec<usize>);

impl Profile {
    /// Checks that every entry is at least 1 and every interior entry at least 2.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let last = entries.len().saturating_sub(1);
        for (index, &value) in entries.iter().enumerate() {
            let min = if index > 0 && index < last { 2 } else { 1 };
            if value < min {
                return Err(Error::InvalidProfile { index, value });
            }
        }
        Ok(Profile(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Profile::new(parse_tuple(s, "profile")?)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}

/// Parses `"(a,b,c)"`; `"()"` is the empty tuple. Whitespace around entries
/// is tolerated.
pub(crate) fn parse_tuple(s: &str, what: &'static str) -> Result<Vec<usize>> {
    let bad = || Error::Parse {
        what,
        input: s.to_string(),
    };
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|e| e.trim().parse::<usize>().map_err(|_| bad()))
        .collect()
}

/// A cube-free word as its first letter plus profile.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    /// `None` exactly for the empty word.
    pub start_letter: Option<u8>,
    pub profile: Profile,
}

impl Factorization {
    pub fn to_word(&self) -> BinaryWord {
        match self.start_letter {
            Some(letter) => reconstruct(letter, &self.profile)
                .expect("factorization holds a valid letter and profile"),
            None => BinaryWord::empty(),
        }
    }
}

fn reject_cubes(w: &[u8]) -> Result<()> {
    match word::find_cube(w) {
        Some(position) => Err(Error::ForbiddenCube {
            cube: if w[position] == 0 { "000" } else { "111" },
            position,
        }),
        None => Ok(()),
    }
}

/// Run lengths of a word already known to be cube-free.
fn run_lengths(w: &[u8]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut run_start = 0;
    for p in 1..w.len() {
        if w[p] == w[p - 1] {
            runs.push(p - run_start);
            run_start = p;
        }
    }
    if !w.is_empty() {
        runs.push(w.len() - run_start);
    }
    runs
}

pub fn factorize(w: &BinaryWord) -> Result<Factorization> {
    reject_cubes(w.symbols())?;
    Ok(Factorization {
        start_letter: w.first(),
        profile: Profile(run_lengths(w.symbols())),
    })
}

pub fn profile(w: &BinaryWord) -> Result<Profile> {
    factorize(w).map(|f| f.profile)
}

/// The unique cube-free word starting with `start_letter` whose profile is
/// `profile`. An empty profile gives the empty word.
pub fn reconstruct(start_letter: u8, profile: &Profile) -> Result<BinaryWord> {
    if start_letter > 1 {
        return Err(Error::InvalidLetter(start_letter));
    }
    // Re-validate: a Profile may have been built by hand in this crate.
    let profile = Profile::new(profile.0.clone())?;
    let mut symbols = Vec::with_capacity(profile.weight());
    let mut letter = start_letter;
    for &run in profile.entries() {
        for _ in 0..run {
            symbols.push(letter);
            letter ^= 1;
        }
        // The run ended on `letter ^ 1`; the next run repeats it.
        letter ^= 1;
    }
    BinaryWord::from_symbols(symbols)
}

/// Membership in L in linear time: cube-free and valley-free profile.
pub fn is_in_l_linear(w: &BinaryWord) -> bool {
    let symbols = w.symbols();
    if word::find_cube(symbols).is_some() {
        return false;
    }
    unimodal::classify_entries(&run_lengths(symbols))
        .map(|class| !matches!(class, SequenceClass::NotInX { .. }))
        .unwrap_or(false)
}

/// An occurrence of `x x^R x` found in linear time, or `None` if `w` is in L.
///
/// A cube gives the instance with block length 1. Otherwise a profile valley
/// `n_{j-1} >= n_j <= n_{j+1}` gives blocks of length `n_j`: the tail of run
/// `j - 1`, run `j`, and the head of run `j + 1`, which read `x`, `x^R`, `x`
/// because all three are alternating and meet at doubled letters.
pub fn linear_witness(w: &BinaryWord) -> Option<PatternInstance> {
    let symbols = w.symbols();
    if let Some(start) = word::find_cube(symbols) {
        return Some(PatternInstance { start, block_len: 1 });
    }
    let runs = run_lengths(symbols);
    let valley = runs
        .windows(3)
        .position(|r| r[0] >= r[1] && r[1] <= r[2])?
        + 1;
    let run_start: usize = runs[..valley].iter().sum();
    Some(PatternInstance {
        start: run_start - runs[valley],
        block_len: runs[valley],
    })
}
