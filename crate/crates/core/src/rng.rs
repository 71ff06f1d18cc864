//! Seedable RNG streams for reproducible parallel runs.
//!
//! Every randomized operation in this crate takes an explicit `&mut impl Rng`
//! handle. Independent trajectories (or replicas) must not share a stream:
//! replica `r` of a run with master seed `s` uses `stream_rng(s, r)`, so
//! results are reproducible regardless of how replicas are scheduled.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// ChaCha stream derived from `(seed, stream)`. Distinct streams of the same
/// seed never overlap.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
