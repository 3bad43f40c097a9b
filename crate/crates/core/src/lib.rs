//! Binary words avoiding the pattern `x x^R x`.
//!
//! A binary word avoids `x x^R x` exactly when it avoids `000` and `111` and
//! the lengths of its maximal alternating runs (its *profile*) form a
//! valley-free sequence. This crate provides:
//!
//! - [`word`]: binary words and naive pattern-instance search,
//! - [`factorize`]: the run factorization, its inverse and a linear-time
//!   membership test,
//! - [`unimodal`]: valley-free sequences, Type 1 / Type 2 classification and
//!   the encoding by pairs of distinct-part partitions,
//! - [`enumerate`]: exact counting tables and the asymptotic estimate,
//! - [`oracle`]: brute-force reference counts and cross-checks,
//! - [`cfl`]: the `(01)^i (10)^j (01)^k (10)^l` slice of the language.
//!
//! Data-parallel work goes through [`Execution`]; with the `parallel`
//! feature disabled every strategy runs sequentially.

pub mod cfl;
mod error;
mod exec;
pub mod enumerate;
pub mod export;
pub mod factorize;
pub mod oracle;
pub mod sample;
pub mod unimodal;
pub mod word;

pub use error::{Error, Result};
pub use exec::Execution;
pub use word::{BinaryWord, PatternInstance};
