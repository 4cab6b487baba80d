//! Instance generation: seeded random frameworks and exhaustive enumeration.
//!
//! Random draws come from SplitMix64 (state initialised to the seed, one
//! `next_u64` per draw). A Bernoulli(p) trial takes the top 53 bits of the
//! draw as `u ∈ [0, 1)` and succeeds iff `u < p`. Pairs `(xi, xj)` are drawn
//! row-major, `i` and `j` running from 1 to n, self-pairs included, so the
//! same `(n, p, seed)` yields the same framework in any implementation that
//! follows these rules.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::af::{Af, ArgumentId};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_all_afs`] without an override.
pub const ENUMERATION_GUARD: usize = 3;

/// Seeded generator shared by all random instance builders.
pub struct Prng(SplitMix64);

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// Derives the seed of the `index`-th instance of a stream from a base seed.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    Prng::new(base ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03)).next_u64()
}

fn arg_names(n: usize) -> Vec<ArgumentId> {
    (1..=n).map(|i| ArgumentId::named(&format!("x{i}"))).collect()
}

/// A random framework on `x1..xn`; every ordered pair is an attack with
/// probability `p`.
pub fn random_af(n: usize, p: f64, seed: u64) -> Result<Af> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!("p = {p} is not in [0, 1]")));
    }
    let args = arg_names(n);
    let mut rng = Prng::new(seed);
    let mut attacks = Vec::new();
    for a in &args {
        for b in &args {
            if rng.bernoulli(p) {
                attacks.push((a.clone(), b.clone()));
            }
        }
    }
    Af::new(args, attacks)
}

/// Every framework on `x1..xn`, one per attack subset, in increasing order
/// of the subset's bitmask. `n` above [`ENUMERATION_GUARD`] needs
/// `allow_large`; `n > 5` is never accepted.
pub fn enumerate_all_afs(n: usize, allow_large: bool) -> Result<AllAfs> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    if n > ENUMERATION_GUARD && !allow_large {
        return Err(Error::BadParameter(format!(
            "n = {n} yields 2^{} frameworks; pass the override to enumerate anyway",
            n * n
        )));
    }
    if n * n > 25 {
        return Err(Error::TooLarge(format!("2^{} frameworks", n * n)));
    }
    Ok(AllAfs {
        args: arg_names(n),
        next: 0,
        end: 1u64 << (n * n),
    })
}

pub struct AllAfs {
    args: Vec<ArgumentId>,
    next: u64,
    end: u64,
}

impl AllAfs {
    fn build(&self, mask: u64) -> Af {
        let n = self.args.len();
        let attacks = (0..n * n)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| (self.args[k / n].clone(), self.args[k % n].clone()));
        Af::new(self.args.clone(), attacks).expect("generated framework is valid")
    }
}

impl Iterator for AllAfs {
    type Item = Af;

    fn next(&mut self) -> Option<Af> {
        if self.next >= self.end {
            return None;
        }
        let af = self.build(self.next);
        self.next += 1;
        Some(af)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllAfs {}
