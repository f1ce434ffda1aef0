//! Seeded workloads shared by the engine benchmarks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braidkit::{BaseGroup, BraidWord, CyclicGroup, IntegerGroup, IntegerMatrix, PositiveWord, SignedWord};

pub fn integers() -> Arc<dyn BaseGroup> {
    Arc::new(IntegerGroup::new())
}

pub fn cyclic(k: u64) -> Arc<dyn BaseGroup> {
    Arc::new(CyclicGroup::new(k).expect("order at least 1"))
}

pub fn h() -> SignedWord {
    SignedWord::power_of(0, 1)
}

/// Uniform signed braid word of exactly `len` letters.
pub fn random_braid(n: usize, len: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let idx: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i64);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_indices(n, &idx).expect("indices in range")
}

/// Uniform positive word over `generators` letters.
pub fn random_positive(generators: usize, len: usize, seed: u64) -> PositiveWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PositiveWord((0..len).map(|_| rng.gen_range(0..generators)).collect())
}

pub fn random_matrix(rows: usize, cols: usize, bound: i64, seed: u64) -> IntegerMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntegerMatrix::from_rows(cols, &data)
}
