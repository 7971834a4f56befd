//! Seeded, counter-based random streams.
//!
//! Every random draw in the crate comes from a ChaCha8 stream keyed by a
//! `(seed, stream)` pair, so trial `k` of an experiment produces the same graph
//! no matter which worker runs it or in what order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TrialRng = ChaCha8Rng;

/// Independent stream `stream` of the generator keyed by `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Stream id for trial `trial` at sweep point `point` of an experiment.
pub fn trial_stream(point: usize, trial: usize) -> u64 {
    ((point as u64) << 32) | (trial as u64 & 0xffff_ffff)
}
