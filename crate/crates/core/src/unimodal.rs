//! Valley-free sequences of positive integers.
//!
//! A sequence is in X when no interior index `j` has
//! `d_{j-1} >= d_j <= d_{j+1}`. Equivalently it rises strictly to a peak and
//! then falls strictly, where the peak is either a single strict maximum
//! (Type 1, a strongly unimodal sequence) or two equal adjacent maxima
//! (Type 2). Indices reported here are 1-based.

use std::fmt;
use std::str::FromStr;

use crate::factorize::{parse_tuple, write_tuple, Profile};
use crate::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XSequence(Vec<usize>);

impl XSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        check_positive(&entries)?;
        Ok(XSequence(entries))
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

    pub fn classify(&self) -> SequenceClass {
        classify_entries(&self.0).expect("entries are positive")
    }

    pub fn in_x(&self) -> bool {
        !matches!(self.classify(), SequenceClass::NotInX { .. })
    }

    /// Every member of X is a valid run profile (interior entries of a
    /// valley-free sequence are at least 2).
    pub fn to_profile(&self) -> Result<Profile> {
        Profile::new(self.0.clone())
    }
}

impl From<&Profile> for XSequence {
    fn from(p: &Profile) -> Self {
        XSequence(p.entries().to_vec())
    }
}

impl fmt::Display for XSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for XSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        XSequence::new(parse_tuple(s, "sequence")?)
    }
}

fn check_positive(entries: &[usize]) -> Result<()> {
    match entries.iter().position(|&d| d == 0) {
        Some(index) => Err(Error::NonPositiveEntry { index }),
        None => Ok(()),
    }
}

/// Classification with a 1-based witness index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceClass {
    /// Strict single maximum at `peak`. The empty sequence uses `peak = 0`.
    Type1 { peak: usize },
    /// `d_{peak-1} = d_peak` is the maximum.
    Type2 { peak: usize },
    /// Smallest `valley` with `d_{valley-1} >= d_valley <= d_{valley+1}`.
    NotInX { valley: usize },
}

impl SequenceClass {
    /// Re-checks the witness against `entries`.
    pub fn is_witnessed_by(&self, entries: &[usize]) -> bool {
        let d = |j: usize| entries[j - 1];
        let m = entries.len();
        match *self {
            SequenceClass::Type1 { peak: 0 } => m == 0,
            SequenceClass::Type1 { peak } => {
                peak <= m
                    && (1..peak).all(|i| d(i) < d(i + 1))
                    && (peak..m).all(|i| d(i) > d(i + 1))
            }
            SequenceClass::Type2 { peak } => {
                (2..=m).contains(&peak)
                    && d(peak - 1) == d(peak)
                    && (1..peak - 1).all(|i| d(i) < d(i + 1))
                    && (peak..m).all(|i| d(i) > d(i + 1))
            }
            SequenceClass::NotInX { valley } => {
                valley >= 2 && valley < m && d(valley - 1) >= d(valley) && d(valley) <= d(valley + 1)
            }
        }
    }
}

impl fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceClass::Type1 { peak } => write!(f, "Type1 peak={peak}"),
            SequenceClass::Type2 { peak } => write!(f, "Type2 peak={peak}"),
            SequenceClass::NotInX { valley } => write!(f, "NotInX valley={valley}"),
        }
    }
}

pub fn classify_entries(entries: &[usize]) -> Result<SequenceClass> {
    check_positive(entries)?;
    if let Some(i) = entries
        .windows(3)
        .position(|w| w[0] >= w[1] && w[1] <= w[2])
    {
        return Ok(SequenceClass::NotInX { valley: i + 2 });
    }
    if let Some(i) = entries.windows(2).position(|w| w[0] == w[1]) {
        return Ok(SequenceClass::Type2 { peak: i + 2 });
    }
    // Valley-free with no plateau: the first strict descent follows the peak.
    let peak = entries
        .windows(2)
        .position(|w| w[0] > w[1])
        .map_or(entries.len(), |i| i + 1);
    Ok(SequenceClass::Type1 { peak })
}

pub fn classify(s: &XSequence) -> SequenceClass {
    s.classify()
}

pub fn in_x(s: &XSequence) -> bool {
    s.in_x()
}

/// Two partitions into distinct parts, each stored in increasing order.
/// `lambda` is the rising side; `mu` is read backwards as the falling side.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistinctPartitionPair {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

fn check_distinct_parts(parts: &[usize]) -> Result<()> {
    let ok = parts.first().is_none_or(|&p| p >= 1) && parts.windows(2).all(|w| w[0] < w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPartition(format!("{parts:?}")))
    }
}

impl DistinctPartitionPair {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        check_distinct_parts(&lambda)?;
        check_distinct_parts(&mu)?;
        Ok(DistinctPartitionPair { lambda, mu })
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn weight(&self) -> usize {
        self.lambda.iter().sum::<usize>() + self.mu.iter().sum::<usize>()
    }
}

impl fmt::Display for DistinctPartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("λ=")?;
        write_tuple(f, &self.lambda)?;
        f.write_str(";μ=")?;
        write_tuple(f, &self.mu)
    }
}

impl FromStr for DistinctPartitionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "partition pair",
            input: s.to_string(),
        };
        let (l, m) = s.trim().split_once(';').ok_or_else(bad)?;
        let l = l.trim().strip_prefix("λ=").ok_or_else(bad)?;
        let m = m.trim().strip_prefix("μ=").ok_or_else(bad)?;
        DistinctPartitionPair::new(
            parse_tuple(l, "partition pair")?,
            parse_tuple(m, "partition pair")?,
        )
    }
}

/// `lambda` ascending followed by `mu` descending. Always valley-free.
pub fn pair_to_sequence(p: &DistinctPartitionPair) -> XSequence {
    let mut entries = p.lambda.clone();
    entries.extend(p.mu.iter().rev());
    XSequence(entries)
}

/// All pairs mapping to `s` under [`pair_to_sequence`]: two for Type 1 (the
/// peak on either side), one for Type 2 and one for the empty sequence.
pub fn sequence_to_pairs(s: &XSequence) -> Result<Vec<DistinctPartitionPair>> {
    let d = s.entries();
    let split = |at: usize| DistinctPartitionPair {
        lambda: d[..at].to_vec(),
        mu: d[at..].iter().rev().copied().collect(),
    };
    match s.classify() {
        SequenceClass::NotInX { valley } => Err(Error::NotInX { valley }),
        SequenceClass::Type1 { peak: 0 } => Ok(vec![DistinctPartitionPair::default()]),
        SequenceClass::Type1 { peak } => Ok(vec![split(peak), split(peak - 1)]),
        SequenceClass::Type2 { peak } => Ok(vec![split(peak - 1)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(entries: &[usize]) -> XSequence {
        XSequence::new(entries.to_vec()).unwrap()
    }

    fn pair(l: &[usize], m: &[usize]) -> DistinctPartitionPair {
        DistinctPartitionPair::new(l.to_vec(), m.to_vec()).unwrap()
    }

    /// All compositions of `n` (sequences of positive integers summing to `n`).
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        (0..1u32 << (n - 1))
            .map(|mask| {
                let mut parts = vec![1];
                for bit in 0..n - 1 {
                    if mask >> bit & 1 == 1 {
                        parts.push(1);
                    } else {
                        *parts.last_mut().unwrap() += 1;
                    }
                }
                parts
            })
            .collect()
    }

    /// Membership via the Type 1 / Type 2 templates, tried for every j.
    fn matches_template(d: &[usize]) -> bool {
        let m = d.len();
        if m == 0 {
            return true;
        }
        (1..=m).any(|j| {
            let rising = (1..j - 1).all(|i| d[i - 1] < d[i]);
            let falling = (j..m).all(|i| d[i - 1] > d[i]);
            let top = j == 1 || d[j - 2] <= d[j - 1];
            rising && falling && top
        })
    }

    #[test]
    fn classify_examples() {
        assert_eq!(seq(&[4, 4, 4]).classify(), SequenceClass::NotInX { valley: 2 });
        assert_eq!(seq(&[1, 2, 1]).classify(), SequenceClass::Type1 { peak: 2 });
        assert_eq!(seq(&[2, 2]).classify(), SequenceClass::Type2 { peak: 2 });
        assert_eq!(seq(&[1, 1, 2]).classify(), SequenceClass::NotInX { valley: 2 });
        assert_eq!(seq(&[5]).classify(), SequenceClass::Type1 { peak: 1 });
        assert_eq!(seq(&[]).classify(), SequenceClass::Type1 { peak: 0 });
        assert_eq!(seq(&[3, 1, 1, 3]).classify(), SequenceClass::NotInX { valley: 2 });
        assert_eq!(seq(&[3, 4, 1, 2, 3]).classify(), SequenceClass::NotInX { valley: 3 });
    }

    #[test]
    fn in_x_examples() {
        assert!(!in_x(&seq(&[4, 4, 4])));
        assert!(in_x(&seq(&[2, 2])));
        assert!(in_x(&seq(&[])));
    }

    #[test]
    fn entry_domain_error() {
        assert_eq!(XSequence::new(vec![1, 0]), Err(Error::NonPositiveEntry { index: 1 }));
        assert_eq!(classify_entries(&[0]), Err(Error::NonPositiveEntry { index: 0 }));
    }

    #[test]
    fn pair_to_sequence_examples() {
        let s = pair_to_sequence(&pair(&[1, 3], &[2]));
        assert_eq!(s, seq(&[1, 3, 2]));
        assert!(s.in_x());
        assert_eq!(pair_to_sequence(&pair(&[], &[])), seq(&[]));
        let s = pair_to_sequence(&pair(&[2], &[2]));
        assert_eq!(s.classify(), SequenceClass::Type2 { peak: 2 });
    }

    #[test]
    fn sequence_to_pairs_examples() {
        assert_eq!(
            sequence_to_pairs(&seq(&[1, 3, 2])).unwrap(),
            vec![pair(&[1, 3], &[2]), pair(&[1], &[2, 3])]
        );
        assert_eq!(sequence_to_pairs(&seq(&[2, 2])).unwrap(), vec![pair(&[2], &[2])]);
        assert_eq!(sequence_to_pairs(&seq(&[])).unwrap(), vec![pair(&[], &[])]);
        assert_eq!(
            sequence_to_pairs(&seq(&[4, 4, 4])),
            Err(Error::NotInX { valley: 2 })
        );
    }

    #[test]
    fn invalid_partitions() {
        assert!(DistinctPartitionPair::new(vec![2, 2], vec![]).is_err());
        assert!(DistinctPartitionPair::new(vec![], vec![0, 1]).is_err());
        assert!(DistinctPartitionPair::new(vec![3, 1], vec![]).is_err());
    }

    #[test]
    fn text_formats() {
        assert_eq!(seq(&[1, 3, 2]).to_string(), "(1,3,2)");
        assert_eq!(pair(&[1, 3], &[2]).to_string(), "λ=(1,3);μ=(2)");
        assert_eq!(
            "λ=(1,3);μ=(2)".parse::<DistinctPartitionPair>().unwrap(),
            pair(&[1, 3], &[2])
        );
        assert_eq!("λ=();μ=()".parse::<DistinctPartitionPair>().unwrap(), pair(&[], &[]));
        assert!("(1,3);(2)".parse::<DistinctPartitionPair>().is_err());
        assert_eq!("(1, 3,2)".parse::<XSequence>().unwrap(), seq(&[1, 3, 2]));
        assert!("(1,0)".parse::<XSequence>().is_err());
    }

    #[test]
    fn definitions_agree_exhaustive() {
        for n in 0..=12 {
            for c in compositions(n) {
                let class = classify_entries(&c).unwrap();
                assert!(class.is_witnessed_by(&c), "{c:?} {class}");
                let in_x = !matches!(class, SequenceClass::NotInX { .. });
                assert_eq!(in_x, matches_template(&c), "{c:?}");
                if in_x && c.len() >= 3 {
                    assert!(c[1..c.len() - 1].iter().all(|&d| d != 1), "{c:?}");
                }
            }
        }
    }

    #[test]
    fn pairs_round_trip_exhaustive() {
        for n in 0..=12 {
            for c in compositions(n) {
                let s = XSequence(c);
                if let Ok(pairs) = sequence_to_pairs(&s) {
                    for p in &pairs {
                        assert_eq!(pair_to_sequence(p), s);
                    }
                    let expected = match s.classify() {
                        SequenceClass::Type1 { peak: 0 } | SequenceClass::Type2 { .. } => 1,
                        _ => 2,
                    };
                    assert_eq!(pairs.len(), expected);
                }
            }
        }
    }

    fn arb_distinct_parts() -> impl Strategy<Value = Vec<usize>> {
        prop::collection::btree_set(1usize..=12, 0..=4).prop_map(|s| s.into_iter().collect())
    }

    proptest! {
        #[test]
        fn pairs_always_land_in_x(l in arb_distinct_parts(), m in arb_distinct_parts()) {
            let p = DistinctPartitionPair::new(l, m).unwrap();
            prop_assume!(p.weight() <= 30);
            let s = pair_to_sequence(&p);
            prop_assert!(s.in_x());
            prop_assert!(sequence_to_pairs(&s).unwrap().contains(&p));
        }

        #[test]
        fn witness_always_validates(c in prop::collection::vec(1usize..=6, 0..12)) {
            let class = classify_entries(&c).unwrap();
            prop_assert!(class.is_witnessed_by(&c));
        }
    }
}
