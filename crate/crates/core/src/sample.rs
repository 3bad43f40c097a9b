//! Random words for tests and benchmarks.

use rand::Rng;

use crate::factorize::{self, Profile};
use crate::word::BinaryWord;

/// A uniformly random binary word.
pub fn uniform_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> BinaryWord {
    BinaryWord::from_symbols((0..len).map(|_| rng.random_range(0..=1u8)).collect())
        .expect("binary symbols")
}

/// A random valley-free sequence of weight exactly `weight`: a rising run of
/// parts with gaps in 1..=3, one peak, and a falling run built the same way.
/// Not uniform over X.
pub fn random_x_sequence<R: Rng + ?Sized>(rng: &mut R, weight: usize) -> Vec<usize> {
    let mut rising = side(rng, weight / 3);
    let top = rising.last().copied().unwrap_or(0);
    let rest = weight - rising.iter().sum::<usize>();
    // The peak `rest - sum(falling)` must stay above both sides.
    let mut falling: Vec<usize> = Vec::new();
    let mut next = rng.random_range(1..=3usize);
    loop {
        let used: usize = falling.iter().sum();
        if used + next > rest / 2 || rest - used - next <= top.max(next) {
            break;
        }
        falling.push(next);
        next += rng.random_range(1..=3usize);
    }
    let peak = rest - falling.iter().sum::<usize>();
    if peak > 0 {
        rising.push(peak);
    }
    rising.extend(falling.iter().rev());
    rising
}

fn side<R: Rng + ?Sized>(rng: &mut R, budget: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut sum = 0;
    let mut next = rng.random_range(1..=3usize);
    while sum + next <= budget {
        parts.push(next);
        sum += next;
        next += rng.random_range(1..=3usize);
    }
    parts
}

/// A random word of length `len` that avoids `x x^R x`, built from a random
/// valley-free profile.
pub fn random_l_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> BinaryWord {
    let profile = Profile::new(random_x_sequence(rng, len)).expect("valley-free profile");
    factorize::reconstruct(rng.random_range(0..=1u8), &profile).expect("valid letter")
}
