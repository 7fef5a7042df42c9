//! Seeded random instances.
//!
//! The stream is fixed so any implementation can reproduce it:
//!
//! * PRNG: SplitMix64 (golden-ratio increment `0x9e3779b97f4a7c15`), state
//!   initialized to the seed.
//! * An integer in `[lo, hi]` is `lo + (next_u64() mod (hi - lo + 1))`.
//! * Each attempt draws points in order, coordinates in order, and for each
//!   coordinate the numerator in `[-bound, bound]` then the denominator in
//!   `[1, min(bound, 100)]`.
//! * Attempts repeat on the same stream until the `d + 2` points are
//!   distinct and in general position, at most [`MAX_ATTEMPTS`] times.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde_json::json;

use crate::error::{RadonError, Result};
use crate::geometry::{is_general_position, Point, PointSet};
use crate::harness::instance::InstanceFile;
use crate::rational;

pub const MAX_ATTEMPTS: usize = 1000;
pub const MAX_DENOMINATOR: u64 = 100;
pub const PRNG_NAME: &str = "splitmix64";

fn draw(rng: &mut SplitMix64, lo: i64, hi: i64) -> i64 {
    let span = (hi - lo) as u64 + 1;
    lo + (rng.next_u64() % span) as i64
}

/// `d + 2` random points of `R^d` in general position.
pub fn generate(dim: usize, seed: u64, bound: u64) -> Result<InstanceFile> {
    generate_capped(dim, seed, bound, MAX_ATTEMPTS)
}

fn generate_capped(dim: usize, seed: u64, bound: u64, max_attempts: usize) -> Result<InstanceFile> {
    if dim == 0 {
        return Err(RadonError::InvalidInput("dimension must be at least 1".into()));
    }
    if bound == 0 || bound > i64::MAX as u64 / 2 {
        return Err(RadonError::InvalidInput(format!("bound {bound} out of range")));
    }
    let b = bound as i64;
    let max_den = bound.min(MAX_DENOMINATOR) as i64;
    let mut rng = SplitMix64::seed_from_u64(seed);
    for attempt in 1..=max_attempts {
        let points: Vec<Point> = (0..dim + 2)
            .map(|_| {
                let coords = (0..dim)
                    .map(|_| {
                        let num = draw(&mut rng, -b, b);
                        let den = draw(&mut rng, 1, max_den);
                        rational::frac(num, den)
                    })
                    .collect();
                Point::new(coords).expect("dim >= 1")
            })
            .collect();
        let Ok(ps) = PointSet::new(dim, points) else {
            continue;
        };
        if is_general_position(&ps) {
            let mut file = InstanceFile::from_point_set(&ps);
            let meta = json!({"prng": PRNG_NAME, "seed": seed, "bound": bound, "attempts": attempt});
            file.meta = meta.as_object().cloned();
            return Ok(file);
        }
    }
    Err(RadonError::GeneratorFailure { attempts: max_attempts })
}
