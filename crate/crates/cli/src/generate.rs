//! Seeded corpus generation.

use npn_core::{Result, TruthTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Name and version of the generator, recorded in generated corpus headers.
pub const PRNG: &str = "ChaCha8Rng (rand_chacha 0.3)";

/// `count` tables drawn uniformly with replacement from all `n`-variable
/// functions.
pub fn uniform(vars: usize, count: usize, seed: u64) -> Result<Vec<TruthTable>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = if vars <= 6 { 1 } else { 1 << (vars - 6) };
    (0..count)
        .map(|_| TruthTable::from_words(vars, (0..words).map(|_| rng.gen()).collect::<Vec<u64>>()))
        .collect()
}

/// `count` tables with consecutive integer encodings `start, start + 1, ...`,
/// wrapping modulo `2^(2^n)`.
pub fn consecutive(vars: usize, count: usize, start: u64) -> Result<Vec<TruthTable>> {
    let words = if vars <= 6 { 1 } else { 1 << (vars - 6) };
    let mut current = vec![0u64; words];
    current[0] = start;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let t = TruthTable::from_words(vars, current.clone())?;
        // Increment the masked value so small arities wrap correctly.
        current = t.words().to_vec();
        for w in current.iter_mut() {
            let (next, carry) = w.overflowing_add(1);
            *w = next;
            if !carry {
                break;
            }
        }
        out.push(t);
    }
    Ok(out)
}
