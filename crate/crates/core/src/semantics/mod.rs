//! The seven semantics and the decision problems over them.
//!
//! Two solvers back the same contract: [`brute`], which enumerates every
//! subset and is the reference, and [`engine`], the backtracking solver
//! used for translated frameworks that are too big to enumerate.
//! [`extensions`] picks the oracle for small inputs and the engine above
//! [`BRUTE_LIMIT`] arguments.

pub mod brute;
pub mod engine;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::af::{Af, ArgumentId, Extension};
use crate::error::{Error, Result};

pub use engine::{naive_sets, solve, stable_backtracking};

/// Frameworks up to this size are evaluated by subset enumeration.
pub const BRUTE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemanticsId {
    Grd,
    Adm,
    Stb,
    Com,
    Prf,
    Sem,
    Stg,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 7] = [
        SemanticsId::Grd,
        SemanticsId::Adm,
        SemanticsId::Stb,
        SemanticsId::Com,
        SemanticsId::Prf,
        SemanticsId::Sem,
        SemanticsId::Stg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsId::Grd => "grd",
            SemanticsId::Adm => "adm",
            SemanticsId::Stb => "stb",
            SemanticsId::Com => "com",
            SemanticsId::Prf => "prf",
            SemanticsId::Sem => "sem",
            SemanticsId::Stg => "stg",
        }
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemanticsId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SemanticsId::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown semantics `{s}`")))
    }
}

/// The extensions of one framework under one semantics.
///
/// Equality compares the extensions only, not the recorded argument set.
#[derive(Clone)]
pub struct ExtensionSet {
    args: Vec<ArgumentId>,
    extensions: BTreeSet<Extension>,
}

impl ExtensionSet {
    pub(crate) fn from_index_sets<I, S>(af: &Af, sets: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        ExtensionSet {
            args: af.args().to_vec(),
            extensions: sets
                .into_iter()
                .map(|s| af.extension_of_indices(s))
                .collect(),
        }
    }

    /// Wraps explicit extensions; fails if one leaves the framework.
    pub fn new(af: &Af, extensions: impl IntoIterator<Item = Extension>) -> Result<Self> {
        let extensions: BTreeSet<Extension> = extensions.into_iter().collect();
        for e in &extensions {
            af.indices(e)?;
        }
        Ok(ExtensionSet {
            args: af.args().to_vec(),
            extensions,
        })
    }

    /// The arguments of the framework these extensions belong to.
    pub fn args(&self) -> &[ArgumentId] {
        &self.args
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn contains(&self, e: &Extension) -> bool {
        self.extensions.contains(e)
    }

    /// Extensions in canonical order (size, then lexicographic).
    pub fn iter(&self) -> impl Iterator<Item = &Extension> {
        self.extensions.iter()
    }

    pub fn extensions(&self) -> &BTreeSet<Extension> {
        &self.extensions
    }

    pub fn into_extensions(self) -> BTreeSet<Extension> {
        self.extensions
    }

    pub fn is_subset(&self, other: &ExtensionSet) -> bool {
        self.extensions.is_subset(&other.extensions)
    }
}

impl PartialEq for ExtensionSet {
    fn eq(&self, other: &Self) -> bool {
        self.extensions == other.extensions
    }
}

impl Eq for ExtensionSet {}

impl PartialEq<BTreeSet<Extension>> for ExtensionSet {
    fn eq(&self, other: &BTreeSet<Extension>) -> bool {
        &self.extensions == other
    }
}

impl fmt::Debug for ExtensionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.extensions.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = &'a Extension;
    type IntoIter = std::collections::btree_set::Iter<'a, Extension>;
    fn into_iter(self) -> Self::IntoIter {
        self.extensions.iter()
    }
}

/// All conflict-free subsets (exponential; oracle-sized inputs only).
pub fn conflict_free_sets(af: &Af) -> ExtensionSet {
    brute::conflict_free_sets(af)
}

/// σ(F).
pub fn extensions(af: &Af, sigma: SemanticsId) -> ExtensionSet {
    if af.len() <= BRUTE_LIMIT {
        brute::extensions(af, sigma)
    } else {
        engine::solve(af, sigma)
    }
}

/// The grounded extension, as the least fixpoint of the characteristic
/// function iterated from ∅.
pub fn grounded(af: &Af) -> Extension {
    af.extension_of(&engine::grounded_idx(af))
}

/// Whether `s ∈ σ(F)`.
///
/// grd, stb, adm and com are checked directly against their definitions.
/// prf, sem and stg additionally search for a witness against maximality.
pub fn verify(af: &Af, sigma: SemanticsId, s: &Extension) -> Result<bool> {
    use engine::{exists, Base, Query, Required};

    let set = af.indices(s)?;
    let n = af.len();
    let cf = af.is_conflict_free_idx(&set);
    let attacked = af.attacked_by_idx(&set);
    let adm = cf
        && set
            .ones()
            .all(|a| af.attackers_of(a).iter().all(|&b| attacked.contains(b)));
    let range = af.range_idx(&set);
    let outside = |r: &FixedBitSet| (0..n).filter(|i| !r.contains(*i)).collect::<Vec<_>>();
    let bigger_range_exists = |base: Base| {
        outside(&range).into_iter().any(|y| {
            let mut req = range.clone();
            req.insert(y);
            let mut q = Query::new(base);
            q.required_range = Required::These(req);
            exists(af, q)
        })
    };
    Ok(match sigma {
        SemanticsId::Grd => set == engine::grounded_idx(af),
        SemanticsId::Stb => cf && range.count_ones(..) == n,
        SemanticsId::Adm => adm,
        SemanticsId::Com => adm && af.characteristic_idx(&set) == set,
        SemanticsId::Prf => {
            adm && outside(&set).into_iter().all(|a| {
                let mut forced = set.clone();
                forced.insert(a);
                let mut q = Query::new(Base::Admissible);
                q.forced_in = Some(forced);
                !exists(af, q)
            })
        }
        SemanticsId::Sem => adm && !bigger_range_exists(Base::Admissible),
        SemanticsId::Stg => cf && !bigger_range_exists(Base::ConflictFree),
    })
}

fn arg_index(af: &Af, a: &ArgumentId) -> Result<usize> {
    af.index_of(a)
        .ok_or_else(|| Error::NotInFramework(a.to_string()))
}

/// Is `a` in some σ-extension?
pub fn credulous(af: &Af, sigma: SemanticsId, a: &ArgumentId) -> Result<bool> {
    arg_index(af, a)?;
    Ok(extensions(af, sigma).iter().any(|e| e.contains(a)))
}

/// Is `a` in every σ-extension? True when there are none.
pub fn skeptical(af: &Af, sigma: SemanticsId, a: &ArgumentId) -> Result<bool> {
    arg_index(af, a)?;
    Ok(extensions(af, sigma).iter().all(|e| e.contains(a)))
}

pub fn exists(af: &Af, sigma: SemanticsId) -> bool {
    !extensions(af, sigma).is_empty()
}

pub fn exists_nonempty(af: &Af, sigma: SemanticsId) -> bool {
    extensions(af, sigma).iter().any(|e| !e.is_empty())
}
