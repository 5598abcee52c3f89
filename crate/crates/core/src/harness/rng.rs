//! Platform-independent sampling streams.
//!
//! Sample `i` of a run with seed `s` draws from its own Xoshiro256++
//! generator, seeded (through SplitMix64 state expansion) with
//! `s ^ splitmix64(i)`. Streams are therefore independent of how the index
//! range is split across workers.

use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::{SplitMix64, Xoshiro256PlusPlus};

use crate::series::Complex;

pub type SampleRng = Xoshiro256PlusPlus;

/// Generator for sample `index` of the run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> SampleRng {
    let key = SplitMix64::seed_from_u64(index).next_u64();
    Xoshiro256PlusPlus::seed_from_u64(seed ^ key)
}

/// Uniform on `[0, 1)` with 53 bits of precision.
pub fn uniform<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.gen::<f64>()
}

/// Uniform point in the closed unit disk from two uniforms: radius
/// `sqrt(u)`, angle `2 pi v`. With `on_boundary` the radius is 1.
pub fn disk_point(u: f64, v: f64, on_boundary: bool) -> Complex {
    let r = if on_boundary { 1.0 } else { u.sqrt() };
    Complex::from_polar(r, std::f64::consts::TAU * v)
}
