//! Seeded generators shared by the integration tests.

#![allow(dead_code)]

use divdiff::{NewtonPoly, NodeSequence, PowerPoly};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `|a - b| / max(|b|, 1)`.
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// `count` sites in `[lo, hi]`, sorted, at least `gap` apart.
pub fn spread_sites(rng: &mut ChaCha8Rng, count: usize, lo: f64, hi: f64, gap: f64) -> Vec<f64> {
    loop {
        let mut s: Vec<f64> = (0..count).map(|_| rng.random_range(lo..hi)).collect();
        s.sort_by(f64::total_cmp);
        if s.windows(2).all(|w| w[1] - w[0] >= gap) {
            return s;
        }
    }
}

/// Sorted nodes in `[lo, hi]`, `1..=max_len` of them, each site repeated up
/// to `max_mult` times.
pub fn clustered(rng: &mut ChaCha8Rng, max_len: usize, max_mult: usize, lo: f64, hi: f64) -> NodeSequence {
    let len = rng.random_range(1..=max_len);
    let mut mults = Vec::new();
    let mut total = 0;
    while total < len {
        let m = rng.random_range(1..=max_mult).min(len - total);
        mults.push(m);
        total += m;
    }
    let gap = 0.5 * (hi - lo) / mults.len() as f64;
    let sites = spread_sites(rng, mults.len(), lo, hi, gap);
    let nodes = sites
        .iter()
        .zip(&mults)
        .flat_map(|(&s, &m)| std::iter::repeat_n(s, m))
        .collect();
    NodeSequence::new(nodes).unwrap()
}

pub fn increasing(rng: &mut ChaCha8Rng, len: usize, lo: f64, hi: f64) -> Vec<f64> {
    spread_sites(rng, len, lo, hi, 0.02 * (hi - lo) / len as f64)
}

pub fn power_poly(rng: &mut ChaCha8Rng, degree: usize) -> PowerPoly {
    PowerPoly::new((0..=degree).map(|_| rng.random_range(-1.0..1.0)).collect())
}

/// Newton form with centers at least 0.1 apart, in random order.
pub fn newton_poly(rng: &mut ChaCha8Rng, len: usize) -> NewtonPoly {
    let mut centers = spread_sites(rng, len - 1, -1.0, 1.0, 0.1);
    centers.shuffle(rng);
    let coeffs = (0..len).map(|_| rng.random_range(-1.0..1.0)).collect();
    NewtonPoly::new(centers, coeffs).unwrap()
}
