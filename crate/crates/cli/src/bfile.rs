//! OEIS b-file reading.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BFileError {
    #[error("line {line}: expected \"n a(n)\", found {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index {index} does not increase on {previous}")]
    NotIncreasing { line: usize, index: i64, previous: i64 },
    #[error("{0}")]
    Io(String),
}

/// Parsed b-file: `(index, value)` pairs with strictly increasing indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BFile {
    /// `A` followed by six digits, when it can be read off the file name
    /// (`b022567.txt`) or a comment line.
    pub sequence_id: Option<String>,
    pub entries: Vec<(i64, BigUint)>,
}

impl BFile {
    pub fn read(path: &Path) -> Result<Self, BFileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| BFileError::Io(format!("{}: {e}", path.display())))?;
        let mut bfile: BFile = text.parse()?;
        if bfile.sequence_id.is_none() {
            bfile.sequence_id = path
                .file_stem()
                .and_then(|s| s.to_str())
                .and_then(|s| s.strip_prefix('b'))
                .and_then(id_from_digits);
        }
        Ok(bfile)
    }
}

fn id_from_digits(digits: &str) -> Option<String> {
    (digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit())).then(|| format!("A{digits}"))
}

fn id_in_comment(comment: &str) -> Option<String> {
    comment
        .split(|c: char| !c.is_ascii_alphanumeric())
        .find_map(|tok| tok.strip_prefix('A').and_then(id_from_digits))
}

impl FromStr for BFile {
    type Err = BFileError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut bfile = BFile::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                if bfile.sequence_id.is_none() {
                    bfile.sequence_id = id_in_comment(comment);
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            let malformed = || BFileError::Malformed {
                line,
                text: raw.to_string(),
            };
            let mut fields = trimmed.split_whitespace();
            let (Some(n), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(malformed());
            };
            let index: i64 = n.parse().map_err(|_| malformed())?;
            let value: BigUint = value.parse().map_err(|_| malformed())?;
            if let Some(&(previous, _)) = bfile.entries.last() {
                if index <= previous {
                    return Err(BFileError::NotIncreasing {
                        line,
                        index,
                        previous,
                    });
                }
            }
            bfile.entries.push((index, value));
        }
        Ok(bfile)
    }
}
