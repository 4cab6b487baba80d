//! Definitional enumeration over all subsets of the arguments.
//!
//! This is the oracle every faster route is checked against. It follows the
//! textbook definitions literally (grounded is the ⊆-least complete set, not
//! a fixpoint iteration) and is limited to [`MAX_ARGS`] arguments.

use crate::af::Af;

use super::{ExtensionSet, SemanticsId};

/// Largest framework the oracle accepts.
pub const MAX_ARGS: usize = 24;

struct Masks {
    n: usize,
    out: Vec<u32>,
    inc: Vec<u32>,
}

impl Masks {
    fn new(af: &Af) -> Self {
        let n = af.len();
        assert!(n <= MAX_ARGS, "brute-force oracle is limited to {MAX_ARGS} arguments, got {n}");
        let mut out = vec![0u32; n];
        let mut inc = vec![0u32; n];
        for &(i, j) in af.attack_indices() {
            out[i] |= 1 << j;
            inc[j] |= 1 << i;
        }
        Masks { n, out, inc }
    }

    fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn members(s: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| s >> i & 1 == 1)
    }

    fn attacked(&self, s: u32) -> u32 {
        Self::members(s).fold(0, |acc, i| acc | self.out[i])
    }

    fn range(&self, s: u32) -> u32 {
        s | self.attacked(s)
    }

    fn conflict_free(&self, s: u32) -> bool {
        Self::members(s).all(|i| self.out[i] & s == 0)
    }

    /// Arguments all of whose attackers are attacked by `s`.
    fn defended(&self, s: u32) -> u32 {
        let attacked = self.attacked(s);
        (0..self.n)
            .filter(|&a| self.inc[a] & !attacked == 0)
            .fold(0, |acc, a| acc | 1 << a)
    }

    fn admissible(&self, s: u32) -> bool {
        self.conflict_free(s) && s & !self.defended(s) == 0
    }

    fn complete(&self, s: u32) -> bool {
        self.conflict_free(s) && self.defended(s) == s
    }
}

fn conflict_free_masks(m: &Masks) -> Vec<u32> {
    (0..=m.full()).filter(|&s| m.conflict_free(s)).collect()
}

/// Members of `family` not strictly below another member under `key`
/// (⊆-order of the keys).
fn maximal_by(family: &[u32], key: impl Fn(u32) -> u32) -> Vec<u32> {
    family
        .iter()
        .copied()
        .filter(|&s| {
            let ks = key(s);
            !family.iter().any(|&t| {
                let kt = key(t);
                kt != ks && kt & ks == ks
            })
        })
        .collect()
}

fn masks_for(m: &Masks, sigma: SemanticsId) -> Vec<u32> {
    let cf = conflict_free_masks(m);
    let adm = || -> Vec<u32> { cf.iter().copied().filter(|&s| m.admissible(s)).collect() };
    match sigma {
        SemanticsId::Adm => adm(),
        SemanticsId::Stb => cf.iter().copied().filter(|&s| m.range(s) == m.full()).collect(),
        SemanticsId::Com => cf.iter().copied().filter(|&s| m.complete(s)).collect(),
        SemanticsId::Grd => {
            let com: Vec<u32> = cf.iter().copied().filter(|&s| m.complete(s)).collect();
            com.iter()
                .copied()
                .filter(|&s| !com.iter().any(|&t| t != s && t & s == t))
                .collect()
        }
        SemanticsId::Prf => maximal_by(&adm(), |s| s),
        SemanticsId::Sem => maximal_by(&adm(), |s| m.range(s)),
        SemanticsId::Stg => maximal_by(&cf, |s| m.range(s)),
    }
}

fn to_set(af: &Af, masks: Vec<u32>) -> ExtensionSet {
    ExtensionSet::from_index_sets(
        af,
        masks
            .into_iter()
            .map(|s| Masks::members(s).collect::<Vec<_>>()),
    )
}

/// σ(F) by enumeration of all subsets.
pub fn extensions(af: &Af, sigma: SemanticsId) -> ExtensionSet {
    let m = Masks::new(af);
    to_set(af, masks_for(&m, sigma))
}

/// All conflict-free subsets of the arguments.
pub fn conflict_free_sets(af: &Af) -> ExtensionSet {
    let m = Masks::new(af);
    to_set(af, conflict_free_masks(&m))
}
