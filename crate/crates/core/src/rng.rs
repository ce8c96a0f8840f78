//! Seeded random streams.
//!
//! Every stochastic routine draws from ChaCha8, which produces the same
//! sequence for the same seed on every platform. Parallel work gets one
//! stream per task: the master seed fixes the key and the task index selects
//! an independent ChaCha stream, so results never depend on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SimRng {
    SimRng::seed_from_u64(seed)
}

pub fn task_stream(seed: u64, task: u64) -> SimRng {
    let mut rng = SimRng::seed_from_u64(seed);
    rng.set_stream(task);
    rng
}
