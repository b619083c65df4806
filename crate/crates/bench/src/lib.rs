//! Fixtures shared by the benchmarks.

use conclab::random::random_seifert;
use conclab::SeifertMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic Seifert matrices of genus `g`.
pub fn corpus(g: usize, count: usize) -> Vec<SeifertMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + g as u64);
    (0..count).map(|_| random_seifert(g, 3, &mut rng)).collect()
}
