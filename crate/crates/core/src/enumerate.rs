//! Exact counting tables and the asymptotic estimate for `ũ(n)`.
//!
//! - `ũ(n)`: coefficients of `∏_{j>=1} (1 + q^j)^2`, i.e. ordered pairs of
//!   partitions into distinct parts of total weight `n`.
//! - `v(n)`: valley-free sequences of weight `n`. The pair count sees each
//!   Type 1 sequence twice and each Type 2 sequence once, so
//!   `v(n) = (ũ(n) + t₂(n)) / 2` for `n >= 1` with
//!   `Σ t₂(n) q^n = Σ_{p>=1} q^{2p} ∏_{j<p} (1 + q^j)^2`.
//! - `c(n)`: binary words of length `n` avoiding `x x^R x`, `c(n) = 2 v(n)`
//!   for `n >= 1`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Execution, Result};

/// Exact values `ũ(0..=limit)`, `v(0..=limit)` and `c(0..=limit)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub limit: usize,
    pub u_tilde: Vec<BigUint>,
    pub v: Vec<BigUint>,
    pub c: Vec<BigUint>,
}

/// Which column of a [`CountTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Column {
    UTilde,
    V,
    C,
}

impl Column {
    pub const ALL: [Column; 3] = [Column::UTilde, Column::V, Column::C];

    /// Header used in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Column::UTilde => "u_tilde",
            Column::V => "v",
            Column::C => "c",
        }
    }
}

impl std::str::FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" | "u_tilde" => Ok(Column::UTilde),
            "v" => Ok(Column::V),
            "c" => Ok(Column::C),
            _ => Err(Error::Parse {
                what: "column",
                input: s.to_string(),
            }),
        }
    }
}

impl CountTable {
    pub fn compute(limit: usize) -> Result<Self> {
        Self::compute_with(limit, Execution::default())
    }

    pub fn compute_with(limit: usize, exec: Execution) -> Result<Self> {
        let (u_tilde, t2) = pair_series(limit, exec);
        let v = v_from_series(&u_tilde, &t2)?;
        let c = c_from_v(&v);
        Ok(CountTable {
            limit,
            u_tilde,
            v,
            c,
        })
    }

    pub fn column(&self, column: Column) -> &[BigUint] {
        match column {
            Column::UTilde => &self.u_tilde,
            Column::V => &self.v,
            Column::C => &self.c,
        }
    }

    /// First `n >= 1` violating `ũ(n) <= 2 v(n)`, `v(n) <= ũ(n)` or
    /// `ũ(n) <= c(n) <= 2 ũ(n)`.
    pub fn first_bound_violation(&self) -> Option<usize> {
        (1..=self.limit).find(|&n| {
            let (u, v, c) = (&self.u_tilde[n], &self.v[n], &self.c[n]);
            let two_u = u * 2u32;
            !(u <= &(v * 2u32) && v <= u && u <= c && c <= &two_u)
        })
    }
}

/// Series shorter than this are updated in place even under
/// `Execution::Parallel`; reallocating per factor costs more than it saves.
const PARALLEL_MIN_LEN: usize = 2048;

/// Multiplies `series` in place by `(1 + q^j)^2 = 1 + 2q^j + q^{2j}`,
/// truncated to its current length.
fn mul_one_plus_qj_squared(series: &mut Vec<BigUint>, j: usize, exec: Execution) {
    let len = series.len();
    if j >= len {
        return;
    }
    if exec.is_parallel() && len >= PARALLEL_MIN_LEN {
        let old = std::mem::take(series);
        *series = exec.map_range(0..len, |m| {
            let mut x = old[m].clone();
            if m >= j {
                x += &old[m - j] * 2u32;
            }
            if m >= 2 * j {
                x += &old[m - 2 * j];
            }
            x
        });
    } else {
        // Descending, so the lower coefficients read are still the old ones.
        for m in (j..len).rev() {
            let mut add = &series[m - j] * 2u32;
            if m >= 2 * j {
                add += &series[m - 2 * j];
            }
            series[m] += add;
        }
    }
}

/// Returns `(ũ, t₂)` truncated after `q^limit`.
fn pair_series(limit: usize, exec: Execution) -> (Vec<BigUint>, Vec<BigUint>) {
    let len = limit + 1;
    let mut product = vec![BigUint::zero(); len];
    product[0] = BigUint::one();
    let mut t2 = vec![BigUint::zero(); len];
    for p in 1..=limit {
        // Here product = ∏_{j<p} (1 + q^j)^2; a Type 2 peak p contributes q^{2p}.
        for m in 2 * p..len {
            t2[m] += &product[m - 2 * p];
        }
        mul_one_plus_qj_squared(&mut product, p, exec);
    }
    (product, t2)
}

fn v_from_series(u_tilde: &[BigUint], t2: &[BigUint]) -> Result<Vec<BigUint>> {
    let two = BigUint::from(2u32);
    u_tilde
        .iter()
        .zip(t2)
        .enumerate()
        .map(|(n, (u, t))| {
            if n == 0 {
                return Ok(BigUint::one());
            }
            let sum = u + t;
            if !(&sum % &two).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "u_tilde({n}) + t2({n}) = {sum} is odd"
                )));
            }
            Ok(sum / &two)
        })
        .collect()
}

fn c_from_v(v: &[BigUint]) -> Vec<BigUint> {
    v.iter()
        .enumerate()
        .map(|(n, x)| if n == 0 { BigUint::one() } else { x * 2u32 })
        .collect()
}

/// `[ũ(0), ..., ũ(limit)]`.
pub fn gf_u_tilde(limit: usize) -> Vec<BigUint> {
    pair_series(limit, Execution::default()).0
}

/// `[v(0), ..., v(limit)]`.
pub fn count_v(limit: usize) -> Result<Vec<BigUint>> {
    let (u, t2) = pair_series(limit, Execution::default());
    v_from_series(&u, &t2)
}

/// `[c(0), ..., c(limit)]`.
pub fn count_c(limit: usize) -> Result<Vec<BigUint>> {
    count_v(limit).map(|v| c_from_v(&v))
}

/// Checks `ũ(n)/2 <= v(n) <= ũ(n)` and `ũ(n) <= c(n) <= 2ũ(n)` for
/// `1 <= n <= limit` in exact arithmetic.
pub fn verify_bounds(limit: usize) -> Result<bool> {
    Ok(CountTable::compute(limit)?.first_bound_violation().is_none())
}

/// Estimate of `ũ(n)` from the leading asymptotic term and its first
/// correction. The `O(1/n)` remainder is not included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticEstimate {
    pub n: usize,
    pub value: f64,
    /// `|value / exact - 1|` when an exact value was supplied.
    pub relative_error_vs_exact: Option<f64>,
}

impl AsymptoticEstimate {
    pub fn with_exact(mut self, exact: &BigUint) -> Self {
        self.relative_error_vs_exact = exact
            .to_f64()
            .filter(|e| e.is_finite() && *e > 0.0)
            .map(|e| (self.value / e - 1.0).abs());
        self
    }
}

/// `√3 (24n−1)^{−3/4} exp((π/6)√(24n−1)) (1 + (π²−9) / (4π √(24n−1)))`.
pub fn asymptotic_u_tilde(n: usize) -> Result<AsymptoticEstimate> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max: usize::MAX,
        });
    }
    use std::f64::consts::PI;
    let x = 24.0 * n as f64 - 1.0;
    let root = x.sqrt();
    let leading = 3f64.sqrt() * x.powf(-0.75) * (PI / 6.0 * root).exp();
    let correction = 1.0 + (PI * PI - 9.0) / (4.0 * PI * root);
    Ok(AsymptoticEstimate {
        n,
        value: leading * correction,
        relative_error_vs_exact: None,
    })
}
