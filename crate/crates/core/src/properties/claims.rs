use std::fmt;

use serde::{Deserialize, Serialize};

use crate::semantics::SemanticsId;
use crate::translations::{Route, TranslationId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strength {
    Exact,
    WeaklyExact,
    Faithful,
    WeaklyFaithful,
}

impl Strength {
    pub const ALL: [Strength; 4] = [
        Strength::Exact,
        Strength::WeaklyExact,
        Strength::Faithful,
        Strength::WeaklyFaithful,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Strength::Exact => "exact",
            Strength::WeaklyExact => "weakly-exact",
            Strength::Faithful => "faithful",
            Strength::WeaklyFaithful => "weakly-faithful",
        }
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Structural {
    Covering,
    Embedding,
    Modular,
    Monotone,
}

/// A proven positive result: `route` is a `strength` translation for
/// `source ⇒ target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub source: SemanticsId,
    pub target: SemanticsId,
    pub route: Route,
    pub strength: Strength,
    pub structural: Vec<Structural>,
}

impl Claim {
    fn new(source: SemanticsId, target: SemanticsId, route: Route, strength: Strength) -> Self {
        let mut structural = vec![Structural::Covering];
        if route.is_embedding() {
            structural.push(Structural::Embedding);
        }
        if route.is_modular() {
            structural.push(Structural::Modular);
            structural.push(Structural::Monotone);
        }
        Claim {
            source,
            target,
            route,
            strength,
            structural,
        }
    }

    /// `source=>target:route`, e.g. `stb=>sem:tr3`.
    pub fn name(&self) -> String {
        format!("{}=>{}:{}", self.source, self.target, self.route)
    }

    pub fn has(&self, p: Structural) -> bool {
        self.structural.contains(&p)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.strength)
    }
}

/// Every positive entry of the intertranslatability table.
pub fn claim_matrix() -> Vec<Claim> {
    use SemanticsId::*;
    use Strength::*;
    use TranslationId::*;

    let single = Route::Single;
    let after = |inner| Route::Composite { outer: Tr4, inner };
    let entries = [
        (Grd, Adm, after(Tr8), WeaklyFaithful),
        (Grd, Stb, single(Tr8), Faithful),
        (Grd, Com, single(Tr8), Faithful),
        (Grd, Prf, single(Tr8), Faithful),
        (Grd, Sem, single(Tr8), Faithful),
        (Grd, Stg, single(Tr8), Faithful),
        (Adm, Stb, single(Tr6), Faithful),
        (Adm, Com, single(Tr1), Exact),
        (Adm, Prf, after(Tr6), WeaklyFaithful),
        (Adm, Sem, single(Tr6), Faithful),
        (Adm, Stg, single(Tr6), Faithful),
        (Stb, Adm, single(Tr4), WeaklyExact),
        (Stb, Com, single(Tr4), WeaklyExact),
        (Stb, Prf, single(Tr4), WeaklyExact),
        (Stb, Sem, single(Tr3), WeaklyExact),
        (Stb, Sem, single(Tr4), WeaklyExact),
        (Stb, Stg, single(Tr3), WeaklyExact),
        (Com, Adm, after(Tr7), WeaklyFaithful),
        (Com, Stb, single(Tr7), Faithful),
        (Com, Prf, after(Tr7), WeaklyFaithful),
        (Com, Sem, single(Tr7), Faithful),
        (Com, Stg, single(Tr7), Faithful),
        (Prf, Sem, single(Tr1), Exact),
        (Stg, Sem, single(Tr2), Exact),
    ];
    entries
        .into_iter()
        .map(|(s, t, r, k)| Claim::new(s, t, r, k))
        .collect()
}

/// Proven results that the table leaves out: `tr5` as the embedding
/// alternative to `tr2`.
pub fn supplementary_claims() -> Vec<Claim> {
    vec![Claim::new(
        SemanticsId::Stg,
        SemanticsId::Sem,
        Route::Single(TranslationId::Tr5),
        Strength::Faithful,
    )]
}

/// The table followed by the supplementary claims.
pub fn all_claims() -> Vec<Claim> {
    let mut claims = claim_matrix();
    claims.extend(supplementary_claims());
    claims
}

/// Looks a claim up by [`Claim::name`].
pub fn find_claim(name: &str) -> Option<Claim> {
    all_claims().into_iter().find(|c| c.name() == name)
}
