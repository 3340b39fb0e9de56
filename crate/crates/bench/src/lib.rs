//! Shared instance generators for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bdsym_core::TruthTable;

/// Deterministic random vector field on `B^n`.
pub fn random_table(n: usize, seed: u64) -> TruthTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1usize << n;
    TruthTable::from_rows(
        n,
        (0..size).map(|_| rng.gen_range(0..size) as u16).collect(),
    )
    .expect("rows in range")
}

/// The 3-bit fixture with a coordinate 3-cycle symmetry; a non-degenerate
/// search instance.
pub fn cycle_table() -> TruthTable {
    TruthTable::from_rows(3, vec![0, 3, 6, 1, 5, 4, 2, 7]).expect("valid rows")
}
