//! Seeded random streams.
//!
//! Every random draw in the crate comes from a [`Stream`], a ChaCha8 generator
//! seeded through `rand_core::SeedableRng::seed_from_u64`. Independent
//! sub-streams (instance `k` of an ensemble, the optimizer, ...) get their own
//! seed from [`child_seed`], so they never share state and can be generated in
//! any order or in parallel.
//!
//! Derived values:
//!
//! - uniform `f64` on `[0, 1)`: the top 53 bits of one `u64`, times `2^-53`.
//! - standard normal: Box-Muller cosine branch on two uniforms,
//!   `sqrt(-2 ln(1 - u1)) * cos(2 pi u2)`. The sine branch is discarded so that
//!   every normal draw consumes exactly two `u64` words.

use core::f64::consts::PI;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of sub-stream `index` under `base`.
///
/// `mix64(mix64(base + GOLDEN_GAMMA) ^ (index + 1) * GOLDEN_GAMMA)`, all
/// arithmetic wrapping.
pub fn child_seed(base: u64, index: u64) -> u64 {
    let parent = mix64(base.wrapping_add(GOLDEN_GAMMA));
    mix64(parent ^ index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA))
}

#[derive(Debug, Clone)]
pub struct Stream {
    rng: ChaCha8Rng,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn standard_normal(&mut self) -> f64 {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        libm::sqrt(-2.0 * libm::log(u1)) * libm::cos(2.0 * PI * u2)
    }

    /// `true` with probability `p`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.uniform() < p
    }
}
