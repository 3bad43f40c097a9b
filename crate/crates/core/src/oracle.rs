//! Brute-force reference counts.
//!
//! The word side only calls the naive instance search in [`crate::word`];
//! the sequence side only calls the valley test in [`crate::unimodal`].
//! Neither touches [`crate::factorize`] or [`crate::enumerate`], which are
//! what they check.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::enumerate::CountTable;
use crate::factorize;
use crate::unimodal::{self, SequenceClass, XSequence};
use crate::word::{self, BinaryWord};
use crate::{Error, Execution, Result};

pub const MAX_WORD_LEN: usize = 24;
pub const MAX_SEQ_WEIGHT: usize = 40;
/// Largest length for which [`cross_check`] verifies the bijection itself.
pub const MAX_BIJECTION_LEN: usize = 16;

fn guard(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::OutOfRange {
            what,
            value,
            min: 0,
            max,
        });
    }
    Ok(())
}

fn fill(buf: &mut [u8], bits: u64) {
    let n = buf.len();
    for (i, s) in buf.iter_mut().enumerate() {
        *s = ((bits >> (n - 1 - i)) & 1) as u8;
    }
}

/// Number of words of length `n` avoiding `x x^R x`, by full enumeration.
pub fn brute_count_words(n: usize) -> Result<u64> {
    brute_count_words_with(n, Execution::default())
}

pub fn brute_count_words_with(n: usize, exec: Execution) -> Result<u64> {
    guard("word length", n, MAX_WORD_LEN)?;
    // Split on the top bits so each task scans a block of 2^low words.
    let high = n.min(8);
    let low = n - high;
    Ok(exec.sum(0..1u64 << high, |prefix| {
        let mut buf = [0u8; MAX_WORD_LEN];
        let w = &mut buf[..n];
        let mut count = 0;
        for suffix in 0..1u64 << low {
            fill(w, prefix << low | suffix);
            if word::avoids_xxrx(w) {
                count += 1;
            }
        }
        count
    }))
}

/// Calls `visit` on every composition of `remaining` appended to `prefix`,
/// skipping extensions whose last three entries already form a valley (a
/// valley never disappears when more entries are appended).
fn for_each_valley_free(prefix: &mut Vec<usize>, remaining: usize, visit: &mut dyn FnMut(&[usize])) {
    if remaining == 0 {
        visit(prefix);
        return;
    }
    for d in 1..=remaining {
        let m = prefix.len();
        if m >= 2 && prefix[m - 2] >= prefix[m - 1] && prefix[m - 1] <= d {
            continue;
        }
        prefix.push(d);
        for_each_valley_free(prefix, remaining - d, visit);
        prefix.pop();
    }
}

fn visit_x_by_first_entry(n: usize, first: usize, visit: &mut dyn FnMut(&[usize])) {
    let mut prefix = vec![first];
    for_each_valley_free(&mut prefix, n - first, &mut |s| {
        let class = unimodal::classify_entries(s).expect("compositions are positive");
        if !matches!(class, SequenceClass::NotInX { .. }) {
            visit(s);
        }
    });
}

/// Number of valley-free sequences of positive integers of weight `n`.
pub fn brute_count_x(n: usize) -> Result<u64> {
    brute_count_x_with(n, Execution::default())
}

pub fn brute_count_x_with(n: usize, exec: Execution) -> Result<u64> {
    guard("sequence weight", n, MAX_SEQ_WEIGHT)?;
    if n == 0 {
        return Ok(1);
    }
    Ok(exec.sum(1..n as u64 + 1, |first| {
        let mut count = 0;
        visit_x_by_first_entry(n, first as usize, &mut |_| count += 1);
        count
    }))
}

/// Every member of X of weight `n`, in lexicographic order.
pub fn x_sequences_of_weight(n: usize) -> Result<Vec<XSequence>> {
    guard("sequence weight", n, MAX_SEQ_WEIGHT)?;
    let mut out = Vec::new();
    if n == 0 {
        out.push(XSequence::default());
    }
    for first in 1..=n {
        visit_x_by_first_entry(n, first, &mut |s| {
            out.push(XSequence::new(s.to_vec()).expect("positive entries"))
        });
    }
    Ok(out)
}

/// Which claim a discrepancy belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Word count against `c(n)`.
    Words,
    /// Sequence count against `v(n)`.
    Sequences,
    /// Number of distinct profiles against the number of words in L_0.
    Injectivity,
    /// Profile image against the members of X of the same weight.
    Image,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Words => "words",
            Side::Sequences => "sequences",
            Side::Injectivity => "injectivity",
            Side::Image => "image",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub n: usize,
    pub side: Side,
    pub expected: BigUint,
    pub got: BigUint,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub words_checked: usize,
    pub sequences_checked: usize,
    pub bijection_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl CrossCheckReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,side,expected,got\n");
        for d in &self.discrepancies {
            out.push_str(&format!("{},{},{},{}\n", d.n, d.side.name(), d.expected, d.got));
        }
        out
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "words n<={} sequences n<={} bijection n<={}: {} discrepancies",
            self.words_checked,
            self.sequences_checked,
            self.bijection_checked,
            self.discrepancies.len()
        )?;
        for d in &self.discrepancies {
            writeln!(f, "n={} {}: expected {} got {}", d.n, d.side.name(), d.expected, d.got)?;
        }
        Ok(())
    }
}

/// Checks the word counts, the sequence counts and (for short lengths) the
/// profile bijection between L_0 and X.
pub fn cross_check(n_words: usize, n_seq: usize) -> Result<CrossCheckReport> {
    cross_check_with(n_words, n_seq, Execution::default())
}

pub fn cross_check_with(n_words: usize, n_seq: usize, exec: Execution) -> Result<CrossCheckReport> {
    guard("word length", n_words, MAX_WORD_LEN)?;
    guard("sequence weight", n_seq, MAX_SEQ_WEIGHT)?;
    let table = CountTable::compute_with(n_words.max(n_seq), exec)?;
    let mut report = CrossCheckReport {
        words_checked: n_words,
        sequences_checked: n_seq,
        bijection_checked: n_words.min(MAX_BIJECTION_LEN),
        discrepancies: Vec::new(),
    };

    for n in 0..=n_words {
        let got = BigUint::from(brute_count_words_with(n, exec)?);
        if got != table.c[n] {
            report.discrepancies.push(Discrepancy {
                n,
                side: Side::Words,
                expected: table.c[n].clone(),
                got,
            });
        }
    }
    for n in 0..=n_seq {
        let got = BigUint::from(brute_count_x_with(n, exec)?);
        if got != table.v[n] {
            report.discrepancies.push(Discrepancy {
                n,
                side: Side::Sequences,
                expected: table.v[n].clone(),
                got,
            });
        }
    }
    for n in 0..=report.bijection_checked {
        report.discrepancies.extend(check_bijection(n, exec)?);
    }
    Ok(report)
}

/// Words of length `n` starting with 0 (plus the empty word) that avoid
/// `x x^R x`, by naive search.
pub fn l0_words(n: usize, exec: Execution) -> Result<Vec<BinaryWord>> {
    guard("word length", n, MAX_WORD_LEN)?;
    if n == 0 {
        return Ok(vec![BinaryWord::empty()]);
    }
    let words = exec.map_range(0..1usize << (n - 1), |bits| {
        let w = BinaryWord::from_bits(bits as u64, n);
        w.avoids_xxrx_naive().then_some(w)
    });
    Ok(words.into_iter().flatten().collect())
}

fn check_bijection(n: usize, exec: Execution) -> Result<Vec<Discrepancy>> {
    let words = l0_words(n, exec)?;
    let image: BTreeSet<XSequence> = words
        .iter()
        .map(|w| factorize::profile(w).map(|p| XSequence::from(&p)))
        .collect::<Result<_>>()?;
    let x: BTreeSet<XSequence> = x_sequences_of_weight(n)?.into_iter().collect();
    let mut out = Vec::new();
    if image.len() != words.len() {
        out.push(Discrepancy {
            n,
            side: Side::Injectivity,
            expected: words.len().into(),
            got: image.len().into(),
        });
    }
    if image != x {
        let got = if image.len() == x.len() {
            image.intersection(&x).count()
        } else {
            image.len()
        };
        out.push(Discrepancy {
            n,
            side: Side::Image,
            expected: x.len().into(),
            got: got.into(),
        });
    }
    Ok(out)
}

/// Indices of `words` on which the linear and naive recognizers disagree.
pub fn recognizer_disagreements(words: &[BinaryWord], exec: Execution) -> Vec<usize> {
    exec.map(words, |w| factorize::is_in_l_linear(w) != w.avoids_xxrx_naive())
        .into_iter()
        .enumerate()
        .filter_map(|(i, differs)| differs.then_some(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_count_examples() {
        assert_eq!(brute_count_words(5).unwrap(), 16);
        assert_eq!(brute_count_words(0).unwrap(), 1);
        assert_eq!(brute_count_words(8).unwrap(), 50);
        assert!(brute_count_words(25).is_err());
    }

    #[test]
    fn sequence_count_examples() {
        assert_eq!(brute_count_x(4).unwrap(), 5);
        assert_eq!(brute_count_x(0).unwrap(), 1);
        assert_eq!(brute_count_x(2).unwrap(), 2);
        assert!(brute_count_x(41).is_err());
        let four: Vec<String> = x_sequences_of_weight(4)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(four, ["(1,2,1)", "(1,3)", "(2,2)", "(3,1)", "(4)"]);
    }

    /// The pruned walk must agree with testing every composition.
    #[test]
    fn pruning_loses_nothing() {
        for n in 1..=16usize {
            let mut plain = 0;
            for mask in 0..1u32 << (n - 1) {
                let mut parts = vec![1];
                for bit in 0..n - 1 {
                    if mask >> bit & 1 == 1 {
                        parts.push(1);
                    } else {
                        *parts.last_mut().unwrap() += 1;
                    }
                }
                if !matches!(
                    unimodal::classify_entries(&parts).unwrap(),
                    SequenceClass::NotInX { .. }
                ) {
                    plain += 1;
                }
            }
            assert_eq!(brute_count_x(n).unwrap(), plain, "n={n}");
        }
    }

    #[test]
    fn words_are_twice_sequences() {
        for n in 1..=16 {
            assert_eq!(brute_count_words(n).unwrap(), 2 * brute_count_x(n).unwrap());
        }
    }

    #[test]
    fn strategies_agree() {
        for n in [0, 1, 9, 14] {
            assert_eq!(
                brute_count_words_with(n, Execution::Sequential).unwrap(),
                brute_count_words_with(n, Execution::Parallel).unwrap()
            );
        }
        assert_eq!(
            brute_count_x_with(22, Execution::Sequential).unwrap(),
            brute_count_x_with(22, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn cross_check_examples() {
        assert!(cross_check(0, 0).unwrap().is_clean());
        let r = cross_check(12, 25).unwrap();
        assert!(r.is_clean(), "{r}");
        assert_eq!(r.to_csv(), "n,side,expected,got\n");
        assert!(cross_check(25, 0).is_err());
    }

    #[test]
    fn report_formats() {
        let r = CrossCheckReport {
            words_checked: 3,
            sequences_checked: 3,
            bijection_checked: 3,
            discrepancies: vec![Discrepancy {
                n: 3,
                side: Side::Words,
                expected: 6u32.into(),
                got: 7u32.into(),
            }],
        };
        assert_eq!(r.to_csv(), "n,side,expected,got\n3,words,6,7\n");
        assert!(r.to_string().contains("n=3 words: expected 6 got 7"));
    }
}
