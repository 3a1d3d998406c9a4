// SPDX-License-Identifier: Apache-2.0

//! Named random substreams derived from one seed.
//!
//! Each algorithm stage draws from its own stream, so adding a stage never
//! shifts the numbers another stage sees.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator type used throughout the crate.
pub type StreamRng = ChaCha8Rng;

/// A deterministic generator for `(seed, name)`.
pub fn substream(seed: u64, name: &str) -> StreamRng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name.as_bytes()))
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}
