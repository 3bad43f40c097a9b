//! The slice of L inside `(01)^+ (10)^+ (01)^+ (10)^+`.
//!
//! `(01)^i (10)^j (01)^k (10)^l` avoids `x x^R x` exactly when
//! `(i < j or k < j) and (j < k or l < k)`. This module checks that equality
//! against naive membership on a box of exponents.

use std::fmt;

use crate::word::BinaryWord;
use crate::{Error, Execution, Result};

pub const MAX_EXPONENT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadExponents {
    i: usize,
    j: usize,
    k: usize,
    l: usize,
}

impl QuadExponents {
    pub fn new(i: usize, j: usize, k: usize, l: usize) -> Result<Self> {
        if let Some(&value) = [i, j, k, l].iter().find(|&&e| e < 1) {
            return Err(Error::OutOfRange {
                what: "exponent",
                value,
                min: 1,
                max: usize::MAX,
            });
        }
        Ok(QuadExponents { i, j, k, l })
    }

    pub fn get(&self) -> (usize, usize, usize, usize) {
        (self.i, self.j, self.k, self.l)
    }
}

impl fmt::Display for QuadExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.i, self.j, self.k, self.l)
    }
}

pub fn quad_predicate(e: &QuadExponents) -> bool {
    let QuadExponents { i, j, k, l } = *e;
    (i < j || k < j) && (j < k || l < k)
}

/// `(01)^i (10)^j (01)^k (10)^l`.
pub fn build_quad_word(e: &QuadExponents) -> BinaryWord {
    let mut symbols = Vec::with_capacity(2 * (e.i + e.j + e.k + e.l));
    for (count, pair) in [(e.i, [0, 1]), (e.j, [1, 0]), (e.k, [0, 1]), (e.l, [1, 0])] {
        for _ in 0..count {
            symbols.extend_from_slice(&pair);
        }
    }
    BinaryWord::from_symbols(symbols).expect("binary symbols")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadRow {
    pub exponents: QuadExponents,
    pub in_l: bool,
    pub predicate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    pub max_exp: usize,
    /// Every checked quadruple in lexicographic order.
    pub rows: Vec<QuadRow>,
}

impl IntersectionReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &QuadRow> {
        self.rows.iter().filter(|r| r.in_l != r.predicate)
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches().next().is_none()
    }

    /// `i,j,k,l,in_L,predicate`, one row per quadruple.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,k,l,in_L,predicate\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.exponents, r.in_l, r.predicate));
        }
        out
    }
}

impl fmt::Display for IntersectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad: Vec<_> = self.mismatches().collect();
        writeln!(
            f,
            "checked {} quadruples up to {}: {} mismatches",
            self.rows.len(),
            self.max_exp,
            bad.len()
        )?;
        for r in bad {
            writeln!(f, "({}): in_L={} predicate={}", r.exponents, r.in_l, r.predicate)?;
        }
        Ok(())
    }
}

pub fn verify_intersection_claim(max_exp: usize) -> Result<IntersectionReport> {
    verify_intersection_claim_with(max_exp, Execution::default())
}

pub fn verify_intersection_claim_with(max_exp: usize, exec: Execution) -> Result<IntersectionReport> {
    if !(1..=MAX_EXPONENT).contains(&max_exp) {
        return Err(Error::OutOfRange {
            what: "max_exp",
            value: max_exp,
            min: 1,
            max: MAX_EXPONENT,
        });
    }
    let m = max_exp;
    let rows = exec.map_range(0..m.pow(4), |idx| {
        let e = QuadExponents {
            i: idx / (m * m * m) + 1,
            j: idx / (m * m) % m + 1,
            k: idx / m % m + 1,
            l: idx % m + 1,
        };
        QuadRow {
            exponents: e,
            in_l: build_quad_word(&e).avoids_xxrx_naive(),
            predicate: quad_predicate(&e),
        }
    });
    Ok(IntersectionReport { max_exp, rows })
}
