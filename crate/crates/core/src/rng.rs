//! Deterministic counter-based randomness.
//!
//! Colors are drawn by hashing `(seed, vertex, round)`, so redrawing one
//! vertex's color never shifts any other vertex's stream. That property is
//! what makes resampling traces replayable: a step that redraws the variable
//! set of one event touches exactly those vertices' counters and nothing
//! else. Identical seeds produce identical streams on every platform.

use serde::{Deserialize, Serialize};

const VERTEX_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const ROUND_GAMMA: u64 = 0xD1B5_4A32_D192_ED03;

/// Splittable source of per-vertex color draws, keyed by a 64-bit seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSource {
    pub seed: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource { seed }
    }

    /// Raw 64-bit draw for `(key, counter)`. Two finalizer passes so the
    /// key and counter contributions don't cancel linearly.
    pub fn raw(&self, key: u64, counter: u64) -> u64 {
        let inner = mix(self.seed ^ key.wrapping_mul(VERTEX_GAMMA));
        mix(inner ^ counter.wrapping_mul(ROUND_GAMMA))
    }

    /// Color in `1..=q` for `vertex` at resampling round `round`.
    ///
    /// Round 0 is the initial coloring; each resample of a vertex bumps its
    /// round. The modulo bias is below 2^-50 for any palette that fits in
    /// memory.
    pub fn color(&self, vertex: usize, round: u64, q: usize) -> usize {
        assert!(q >= 1, "palette must be nonempty");
        1 + (self.raw(vertex as u64, round) % q as u64) as usize
    }

    /// Uniform draw in `[0, 1)` for non-color decisions (fixture wiring).
    pub fn unit(&self, key: u64, counter: u64) -> f64 {
        (self.raw(key, counter) >> 11) as f64 / (1u64 << 53) as f64
    }
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
