use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::af::{Af, ArgumentId, Extension};
use crate::error::{Error, Result};
use crate::semantics::{self, engine, SemanticsId};
use crate::translations::{translate_route, Route, TranslateOptions, TranslationOutput};

use super::Strength;

/// The four strength verdicts for one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Verdicts {
    pub exact: bool,
    pub weakly_exact: bool,
    pub faithful: bool,
    pub weakly_faithful: bool,
}

impl Verdicts {
    /// `remainder` only affects the two weak verdicts.
    pub fn compute(
        source: &BTreeSet<Extension>,
        target: &BTreeSet<Extension>,
        original: &BTreeSet<ArgumentId>,
        remainder: &[Extension],
    ) -> Self {
        let reduced: BTreeSet<Extension> = target
            .iter()
            .filter(|e| !remainder.contains(e))
            .cloned()
            .collect();
        Verdicts {
            exact: source == target,
            weakly_exact: *source == reduced,
            faithful: projects_onto(source, target, original),
            weakly_faithful: projects_onto(source, &reduced, original),
        }
    }

    pub fn holds(&self, strength: Strength) -> bool {
        match strength {
            Strength::Exact => self.exact,
            Strength::WeaklyExact => self.weakly_exact,
            Strength::Faithful => self.faithful,
            Strength::WeaklyFaithful => self.weakly_faithful,
        }
    }
}

fn projects_onto(
    source: &BTreeSet<Extension>,
    target: &BTreeSet<Extension>,
    original: &BTreeSet<ArgumentId>,
) -> bool {
    if source.len() != target.len() {
        return false;
    }
    let projected: BTreeSet<Extension> = target
        .iter()
        .map(|e| e.filtered(|a| original.contains(a)))
        .collect();
    projected == *source
}

fn verdicts(f: &Af, out: &TranslationOutput, sigma: SemanticsId, sigma_t: SemanticsId) -> Verdicts {
    let source = semantics::extensions(f, sigma).into_extensions();
    let target = engine::solve(&out.target, sigma_t).into_extensions();
    Verdicts::compute(&source, &target, &out.original_args, &out.remainder)
}

/// σ(F) = σ′(Tr(F)).
pub fn check_exact(f: &Af, out: &TranslationOutput, sigma: SemanticsId, sigma_t: SemanticsId) -> bool {
    verdicts(f, out, sigma, sigma_t).exact
}

/// σ(F) = σ′(Tr(F)) minus the remainder sets.
pub fn check_weakly_exact(
    f: &Af,
    out: &TranslationOutput,
    sigma: SemanticsId,
    sigma_t: SemanticsId,
) -> bool {
    verdicts(f, out, sigma, sigma_t).weakly_exact
}

/// σ(F) is the projection of σ′(Tr(F)), and both have the same size.
pub fn check_faithful(
    f: &Af,
    out: &TranslationOutput,
    sigma: SemanticsId,
    sigma_t: SemanticsId,
) -> bool {
    verdicts(f, out, sigma, sigma_t).faithful
}

/// As [`check_faithful`] after removing the remainder sets.
pub fn check_weakly_faithful(
    f: &Af,
    out: &TranslationOutput,
    sigma: SemanticsId,
    sigma_t: SemanticsId,
) -> bool {
    verdicts(f, out, sigma, sigma_t).weakly_faithful
}

/// F ⊆ Tr(F).
pub fn check_covering(f: &Af, out: &TranslationOutput) -> bool {
    f.is_subframework(&out.target)
}

/// F ⊆ Tr(F) and Tr(F) adds no attack between original arguments.
pub fn check_embedding(f: &Af, out: &TranslationOutput) -> bool {
    check_covering(f, out)
        && out
            .target
            .attacks()
            .filter(|(a, b)| f.contains(a) && f.contains(b))
            .all(|(a, b)| f.has_attack(a, b))
}

/// Tr(F) ⊆ Tr(G). Requires F ⊆ G.
pub fn check_monotone_pair(f: &Af, g: &Af, route: Route, opts: &TranslateOptions) -> Result<bool> {
    if !f.is_subframework(g) {
        return Err(Error::BadParameter(
            "monotonicity is checked on pairs F ⊆ G".to_owned(),
        ));
    }
    let tf = translate_route(f, route, opts)?;
    let tg = translate_route(g, route, opts)?;
    Ok(tf.target.is_subframework(&tg.target))
}

/// Tr(F) ∪ Tr(G) = Tr(F ∪ G).
pub fn check_modular_pair(f: &Af, g: &Af, route: Route, opts: &TranslateOptions) -> Result<bool> {
    let tf = translate_route(f, route, opts)?;
    let tg = translate_route(g, route, opts)?;
    let tu = translate_route(&f.union(g), route, opts)?;
    Ok(tf.target.union(&tg.target) == tu.target)
}
