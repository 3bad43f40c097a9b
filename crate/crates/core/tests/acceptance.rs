//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one PASS/FAIL line per criterion; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xxrx_core::enumerate::{self, CountTable};
use xxrx_core::factorize::{self, Profile};
use xxrx_core::unimodal::{self, XSequence};
use xxrx_core::{cfl, oracle, sample, BinaryWord, Execution};

type Outcome = Result<String, String>;

const KNOWN_C: [u64; 13] = [1, 2, 4, 6, 10, 16, 24, 34, 50, 72, 100, 138, 188];
const KNOWN_U: [u64; 13] = [1, 2, 3, 6, 9, 14, 22, 32, 46, 66, 93, 128, 176];

const ASYM_TOLERANCE: f64 = 0.02;
const GROWTH_BRACKET: (f64, f64) = (1.0, 3.0);
const RANDOM_SEED: u64 = 20_150_817;

fn big_vec(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_reproduction() -> Outcome {
    let c = enumerate::count_c(12).map_err(|e| e.to_string())?;
    let u = enumerate::gf_u_tilde(12);
    ensure(c == big_vec(&KNOWN_C), || format!("c = {c:?}"))?;
    ensure(u == big_vec(&KNOWN_U), || format!("u_tilde = {u:?}"))?;
    Ok("c(0..=12) and u_tilde(0..=12) exact".into())
}

fn oracle_words() -> Outcome {
    let c = enumerate::count_c(20).map_err(|e| e.to_string())?;
    for (n, expected) in c.iter().enumerate() {
        let got = oracle::brute_count_words(n).map_err(|e| e.to_string())?;
        ensure(&BigUint::from(got) == expected, || {
            format!("n={n}: brute {got}, table {expected}")
        })?;
    }
    Ok(format!("n <= 20 agree, c(20) = {}", c[20]))
}

fn oracle_sequences() -> Outcome {
    let v = enumerate::count_v(25).map_err(|e| e.to_string())?;
    for (n, expected) in v.iter().enumerate() {
        let got = oracle::brute_count_x(n).map_err(|e| e.to_string())?;
        ensure(&BigUint::from(got) == expected, || {
            format!("n={n}: brute {got}, table {expected}")
        })?;
    }
    Ok(format!("n <= 25 agree, v(25) = {}", v[25]))
}

/// Compositions of `n` whose interior parts are at least 2.
fn valid_profiles(n: usize) -> Vec<Profile> {
    if n == 0 {
        return vec![Profile::default()];
    }
    (0..1u32 << (n - 1))
        .filter_map(|mask| {
            let mut parts = vec![1];
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(1);
                } else {
                    *parts.last_mut().unwrap() += 1;
                }
            }
            Profile::new(parts).ok()
        })
        .collect()
}

fn bijection() -> Outcome {
    let mut words_seen = 0;
    for n in 0..=16 {
        let words = oracle::l0_words(n, Execution::default()).map_err(|e| e.to_string())?;
        words_seen += words.len();
        let mut image = BTreeSet::new();
        for w in &words {
            let p = factorize::profile(w).map_err(|e| format!("{w}: {e}"))?;
            let s = XSequence::from(&p);
            ensure(unimodal::in_x(&s), || format!("profile {p} of {w} not in X"))?;
            let back = factorize::reconstruct(0, &p).map_err(|e| e.to_string())?;
            ensure(n == 0 || &back == w, || format!("reconstruct(profile({w})) = {back}"))?;
            image.insert(s);
        }
        ensure(image.len() == words.len(), || format!("n={n}: profile not injective"))?;
        let x: BTreeSet<XSequence> = oracle::x_sequences_of_weight(n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        ensure(image == x, || format!("n={n}: image differs from X"))?;

        for p in valid_profiles(n) {
            for letter in [0, 1] {
                let w = factorize::reconstruct(letter, &p).map_err(|e| e.to_string())?;
                let again = factorize::profile(&w).map_err(|e| e.to_string())?;
                ensure(again == p, || format!("profile(reconstruct({letter}, {p})) = {again}"))?;
            }
        }
    }
    Ok(format!("{words_seen} words of L_0 with |w| <= 16"))
}

fn recognizer_agreement() -> Outcome {
    let exec = Execution::default();
    let mut exhaustive = Vec::new();
    for n in 0..=16 {
        exhaustive.extend((0..1u64 << n).map(|bits| BinaryWord::from_bits(bits, n)));
    }
    let bad = oracle::recognizer_disagreements(&exhaustive, exec);
    ensure(bad.is_empty(), || format!("exhaustive: {}", exhaustive[bad[0]]))?;

    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let uniform: Vec<BinaryWord> = (0..10_000).map(|_| sample::uniform_word(&mut rng, 1000)).collect();
    let bad = oracle::recognizer_disagreements(&uniform, exec);
    ensure(bad.is_empty(), || format!("uniform sample {}", bad[0]))?;

    // Uniform words almost always contain a cube; words of L exercise the
    // valley test itself.
    let in_l: Vec<BinaryWord> = (0..500).map(|_| sample::random_l_word(&mut rng, 1000)).collect();
    let bad = oracle::recognizer_disagreements(&in_l, exec);
    ensure(bad.is_empty(), || format!("L sample {}", bad[0]))?;
    Ok(format!(
        "{} exhaustive, 10000 uniform + 500 in-L words of length 1000",
        exhaustive.len()
    ))
}

fn sandwich_bounds() -> Outcome {
    let ok = enumerate::verify_bounds(200).map_err(|e| e.to_string())?;
    ensure(ok, || "verify_bounds(200) returned false".into())?;
    Ok("1 <= n <= 200".into())
}

fn asymptotics() -> Outcome {
    let exact = enumerate::gf_u_tilde(500);
    let rel = |n: usize| -> Result<f64, String> {
        enumerate::asymptotic_u_tilde(n)
            .map_err(|e| e.to_string())?
            .with_exact(&exact[n])
            .relative_error_vs_exact
            .ok_or_else(|| format!("no relative error at n={n}"))
    };
    let mut worst = (0, 0.0f64);
    for n in 20..=500 {
        let r = rel(n)?;
        ensure(r < ASYM_TOLERANCE, || format!("n={n}: relative error {r:.4}"))?;
        if r > worst.1 {
            worst = (n, r);
        }
    }
    let (e50, e500) = (rel(50)?, rel(500)?);
    ensure(e500 < e50, || format!("error at 500 ({e500:.3e}) >= at 50 ({e50:.3e})"))?;
    Ok(format!(
        "max {:.3e} at n={}, err(50)={e50:.3e}, err(500)={e500:.3e}",
        worst.1, worst.0
    ))
}

fn intersection_equality() -> Outcome {
    let report = cfl::verify_intersection_claim(8).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == 4096, || format!("{} rows", report.rows.len()))?;
    ensure(report.is_clean(), || report.to_string())?;
    let in_l = report.rows.iter().filter(|r| r.in_l).count();
    Ok(format!("4096 quadruples, {in_l} in L, 0 mismatches"))
}

fn partition_pair_identity() -> Outcome {
    let u = enumerate::gf_u_tilde(12);
    for (n, expected) in u.iter().enumerate() {
        let mut pairs = 0usize;
        for s in oracle::x_sequences_of_weight(n).map_err(|e| e.to_string())? {
            pairs += unimodal::sequence_to_pairs(&s).map_err(|e| e.to_string())?.len();
        }
        ensure(&BigUint::from(pairs) == expected, || {
            format!("n={n}: {pairs} pairs, u_tilde = {expected}")
        })?;
    }
    Ok("0 <= n <= 12".into())
}

fn growth_bracket() -> Outcome {
    let t = CountTable::compute(1000).map_err(|e| e.to_string())?;
    let (lo, hi) = GROWTH_BRACKET;
    let mut range = (f64::INFINITY, f64::NEG_INFINITY);
    for n in 50..=1000 {
        let c = t.c[n].to_f64().ok_or("c(n) not representable")?;
        let ratio = c.ln() / (n as f64).sqrt();
        ensure((lo..=hi).contains(&ratio), || format!("n={n}: log c / sqrt n = {ratio:.4}"))?;
        range = (range.0.min(ratio), range.1.max(ratio));
    }
    Ok(format!("log c(n)/sqrt(n) in [{:.4}, {:.4}]", range.0, range.1))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "table reproduction", budget: Some(secs(1)), check: table_reproduction },
        Criterion { id: 2, name: "oracle equivalence (words)", budget: Some(secs(300)), check: oracle_words },
        Criterion { id: 3, name: "oracle equivalence (sequences)", budget: Some(secs(60)), check: oracle_sequences },
        Criterion { id: 4, name: "bijection, exhaustive", budget: None, check: bijection },
        Criterion { id: 5, name: "recognizer agreement", budget: None, check: recognizer_agreement },
        Criterion { id: 6, name: "sandwich bounds", budget: Some(secs(10)), check: sandwich_bounds },
        Criterion { id: 7, name: "asymptotics", budget: None, check: asymptotics },
        Criterion { id: 8, name: "intersection equality", budget: Some(secs(60)), check: intersection_equality },
        Criterion { id: 9, name: "partition-pair identity", budget: None, check: partition_pair_identity },
        Criterion { id: 10, name: "intermediate-growth bracket", budget: None, check: growth_bracket },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.check)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(budget)) = (&outcome, c.budget) {
            if elapsed > budget {
                outcome = Err(format!("took {elapsed:.2?}, budget {budget:.0?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  [{:>2}] {} ({elapsed:.2?}): {detail}", c.id, c.name),
            Err(why) => {
                failures += 1;
                println!("FAIL  [{:>2}] {} ({elapsed:.2?}): {why}", c.id, c.name);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
