//! The `xxrx` command-line tool.
//!
//! Commands write to the supplied writers and return the process exit code,
//! so they can be driven in-process by tests.

pub mod bfile;
pub mod cache;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xxrx_core::enumerate::{self, Column, CountTable};
use xxrx_core::factorize::{self, Profile};
use xxrx_core::unimodal::XSequence;
use xxrx_core::{cfl, export, oracle, sample, BinaryWord, Execution};

use crate::bfile::BFile;
use crate::cache::TableCache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

pub const DEFAULT_SEED: u64 = 0x5eed_2015;

/// Largest `n` for which `asym` also computes the exact value.
const ASYM_EXACT_LIMIT: usize = 10_000;

#[derive(Debug, Parser)]
#[command(name = "xxrx", version, about = "Binary words avoiding x x^R x")]
pub struct Cli {
    /// Run data-parallel loops on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColumnArg {
    U,
    V,
    C,
}

impl From<ColumnArg> for Column {
    fn from(c: ColumnArg) -> Self {
        match c {
            ColumnArg::U => Column::UTilde,
            ColumnArg::V => Column::V,
            ColumnArg::C => Column::C,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership in L; prints IN_L or an instance (start,t).
    Check {
        word: String,
        /// Use the exhaustive instance search instead of the linear test.
        #[arg(long)]
        naive: bool,
    },
    /// Print the first letter and run profile of a word.
    Factor { word: String },
    /// Rebuild a word from its first letter and profile, e.g. `invert 0 "(4,4,4)"`.
    Invert { letter: u8, profile: String },
    /// Exact table of u~(n), v(n), c(n) for n = 0..=N.
    Count {
        n: usize,
        /// Emit one column only (b-file output defaults to c).
        #[arg(long, value_enum)]
        column: Option<ColumnArg>,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long)]
        no_cache: bool,
    },
    /// Coefficients of prod (1+q^j)^2; same as `count --column u`.
    Gf {
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long)]
        no_cache: bool,
    },
    /// Asymptotic estimate of u~(n) and its error against the exact value.
    Asym { n: usize },
    /// Brute-force cross-check of counts and of the profile bijection.
    Oracle {
        #[arg(long, default_value_t = 12)]
        words: usize,
        #[arg(long, default_value_t = 25)]
        seq: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Check membership against the predicate on (01)^i(10)^j(01)^k(10)^l.
    CflVerify {
        #[arg(long, default_value_t = 8)]
        max_exp: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Compare a local column against an OEIS b-file.
    OeisCompare {
        path: PathBuf,
        #[arg(long, value_enum)]
        column: ColumnArg,
        #[arg(long)]
        no_cache: bool,
    },
    /// Time the linear and naive recognizers and check that they agree.
    Bench {
        #[arg(long, default_value_t = 1000)]
        max_len: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Skip the naive recognizer above this length.
        #[arg(long, default_value_t = 5000)]
        naive_cutoff: usize,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let result = match cli.command {
        Command::Check { word, naive } => cmd_check(&word, naive, out, err),
        Command::Factor { word } => cmd_factor(&word, out, err),
        Command::Invert { letter, profile } => cmd_invert(letter, &profile, out, err),
        Command::Count {
            n,
            column,
            format,
            no_cache,
        } => cmd_count(n, column.map(Column::from), format, cache_for(no_cache), exec, out, err),
        Command::Gf {
            n,
            format,
            no_cache,
        } => cmd_count(n, Some(Column::UTilde), format, cache_for(no_cache), exec, out, err),
        Command::Asym { n } => cmd_asym(n, exec, out, err),
        Command::Oracle { words, seq, format } => cmd_oracle(words, seq, format, exec, out, err),
        Command::CflVerify { max_exp, format } => cmd_cfl_verify(max_exp, format, exec, out, err),
        Command::OeisCompare {
            path,
            column,
            no_cache,
        } => cmd_oeis_compare(&path, column.into(), cache_for(no_cache), exec, out, err),
        Command::Bench {
            max_len,
            samples,
            seed,
            naive_cutoff,
        } => cmd_bench(max_len, samples, seed, naive_cutoff, exec, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_BAD_INPUT
    })
}

fn cache_for(no_cache: bool) -> Option<TableCache> {
    if no_cache {
        None
    } else {
        TableCache::from_env()
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn parse_word(s: &str, err: &mut dyn Write) -> Result<BinaryWord, i32> {
    s.parse::<BinaryWord>().map_err(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_BAD_INPUT
    })
}

pub fn cmd_check(word: &str, naive: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let w = match parse_word(word, err) {
        Ok(w) => w,
        Err(code) => return Ok(code),
    };
    let witness = if naive {
        w.find_xxrx_instance()
    } else {
        factorize::linear_witness(&w)
    };
    match witness {
        None => {
            writeln!(out, "IN_L")?;
            Ok(EXIT_OK)
        }
        Some(inst) => {
            writeln!(out, "{inst}")?;
            Ok(EXIT_NO)
        }
    }
}

pub fn cmd_factor(word: &str, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let w = match parse_word(word, err) {
        Ok(w) => w,
        Err(code) => return Ok(code),
    };
    let f = factorize::factorize(&w)?;
    let start = f.start_letter.map_or("-".to_string(), |l| l.to_string());
    let class = XSequence::from(&f.profile).classify();
    writeln!(out, "start={start} profile={} class={class}", f.profile)?;
    Ok(EXIT_OK)
}

pub fn cmd_invert(letter: u8, profile: &str, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let profile: Profile = profile.parse()?;
    let w = factorize::reconstruct(letter, &profile)?;
    writeln!(out, "{w}")?;
    Ok(EXIT_OK)
}

/// Table for `0..=limit`, from the cache when it covers `limit`.
fn table(limit: usize, cache: Option<&TableCache>, exec: Execution, err: &mut dyn Write) -> Result<CountTable, xxrx_core::Error> {
    if let Some(t) = cache.and_then(|c| c.load_table(limit)) {
        return Ok(t);
    }
    let t = CountTable::compute_with(limit, exec)?;
    if let Some(c) = cache {
        if let Err(e) = c.store(&t) {
            let _ = writeln!(err, "warning: could not write cache in {}: {e}", c.dir().display());
        }
    }
    Ok(t)
}

pub fn cmd_count(
    n: usize,
    column: Option<Column>,
    format: TableFormat,
    cache: Option<TableCache>,
    exec: Execution,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let t = table(n, cache.as_ref(), exec, err)?;
    match (format, column) {
        (TableFormat::Csv, None) => export::write_csv(out, &t, &Column::ALL)?,
        (TableFormat::Csv, Some(c)) => export::write_csv(out, &t, &[c])?,
        (TableFormat::Bfile, c) => export::write_bfile(out, &t, c.unwrap_or(Column::C))?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_asym(n: usize, exec: Execution, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut est = enumerate::asymptotic_u_tilde(n)?;
    let mut exact = None;
    if n <= ASYM_EXACT_LIMIT {
        let t = table(n, TableCache::from_env().as_ref(), exec, err)?;
        est = est.with_exact(&t.u_tilde[n]);
        exact = Some(t.u_tilde[n].clone());
    }
    write!(out, "n={n} estimate={:.6e}", est.value)?;
    if let (Some(x), Some(rel)) = (exact, est.relative_error_vs_exact) {
        write!(out, " exact={x} relative_error={rel:.6e}")?;
    }
    writeln!(out, " (O(1/n) term omitted)")?;
    Ok(EXIT_OK)
}

pub fn cmd_oracle(
    words: usize,
    seq: usize,
    format: ReportFormat,
    exec: Execution,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> CmdResult {
    let report = oracle::cross_check_with(words, seq, exec)?;
    match format {
        ReportFormat::Text => write!(out, "{report}")?,
        ReportFormat::Csv => write!(out, "{}", report.to_csv())?,
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_NO })
}

pub fn cmd_cfl_verify(
    max_exp: usize,
    format: ReportFormat,
    exec: Execution,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> CmdResult {
    let report = cfl::verify_intersection_claim_with(max_exp, exec)?;
    match format {
        ReportFormat::Text => write!(out, "{report}")?,
        ReportFormat::Csv => write!(out, "{}", report.to_csv())?,
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_NO })
}

pub fn cmd_oeis_compare(
    path: &std::path::Path,
    column: Column,
    cache: Option<TableCache>,
    exec: Execution,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let bfile = match BFile::read(path) {
        Ok(b) => b,
        Err(e) => {
            writeln!(err, "error: {}: {e}", path.display())?;
            return Ok(EXIT_BAD_INPUT);
        }
    };
    let id = bfile.sequence_id.as_deref().unwrap_or("b-file");
    let overlap: Vec<(usize, &BigUint)> = bfile
        .entries
        .iter()
        .filter_map(|(n, v)| usize::try_from(*n).ok().map(|n| (n, v)))
        .collect();
    let Some(&(max_index, _)) = overlap.last() else {
        writeln!(err, "warning: {id} has no entries with index >= 0; nothing compared")?;
        writeln!(out, "compared 0 entries of {id} against {}: 0 mismatches", column.name())?;
        return Ok(EXIT_OK);
    };
    let t = table(max_index, cache.as_ref(), exec, err)?;
    let local = t.column(column);
    let mut mismatches = 0;
    for (n, theirs) in &overlap {
        if &local[*n] != *theirs {
            mismatches += 1;
            writeln!(out, "n={n} local={} {id}={theirs}", local[*n])?;
        }
    }
    writeln!(
        out,
        "compared {} entries of {id} against {}: {mismatches} mismatches",
        overlap.len(),
        column.name()
    )?;
    Ok(if mismatches == 0 { EXIT_OK } else { EXIT_NO })
}

fn bench_lengths(max_len: usize) -> Vec<usize> {
    let mut lengths: Vec<usize> = std::iter::successors(Some(1usize), |&l| l.checked_mul(10))
        .take_while(|&l| l <= max_len)
        .collect();
    if lengths.last() != Some(&max_len) {
        lengths.push(max_len);
    }
    lengths
}

fn nanos_per_call(words: &[BinaryWord], f: impl Fn(&BinaryWord) -> bool) -> (f64, Vec<bool>) {
    let start = Instant::now();
    let verdicts: Vec<bool> = words.iter().map(&f).collect();
    let ns = start.elapsed().as_nanos() as f64 / words.len().max(1) as f64;
    (ns, verdicts)
}

pub fn cmd_bench(
    max_len: usize,
    samples: usize,
    seed: u64,
    naive_cutoff: usize,
    _exec: Execution,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if max_len < 1 {
        writeln!(err, "error: --max-len must be at least 1")?;
        return Ok(EXIT_BAD_INPUT);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0usize;
    writeln!(out, "len,kind,samples,linear_ns_per_call,naive_ns_per_call,agreement")?;
    for len in bench_lengths(max_len) {
        for kind in ["uniform", "in_L"] {
            let words: Vec<BinaryWord> = (0..samples)
                .map(|_| match kind {
                    "uniform" => sample::uniform_word(&mut rng, len),
                    _ => sample::random_l_word(&mut rng, len),
                })
                .collect();
            let (linear_ns, linear) = nanos_per_call(&words, factorize::is_in_l_linear);
            if len > naive_cutoff {
                writeln!(out, "{len},{kind},{samples},{linear_ns:.1},-,-")?;
                continue;
            }
            let (naive_ns, naive) = nanos_per_call(&words, BinaryWord::avoids_xxrx_naive);
            let agree = linear.iter().zip(&naive).filter(|(a, b)| a == b).count();
            disagreements += samples - agree;
            let pct = if samples == 0 { 100.0 } else { 100.0 * agree as f64 / samples as f64 };
            writeln!(out, "{len},{kind},{samples},{linear_ns:.1},{naive_ns:.1},{pct:.1}%")?;
        }
    }
    if disagreements > 0 {
        writeln!(err, "error: recognizers disagreed on {disagreements} samples")?;
        return Ok(EXIT_NO);
    }
    Ok(EXIT_OK)
}
