//! The fixed frameworks that refute translations in the impossibility
//! results, with the extension sets their refutations rely on.

use std::collections::BTreeSet;

use crate::af::{Af, Extension};
use crate::semantics::{self, SemanticsId};

/// A framework and the extension sets asserted for it.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub name: &'static str,
    pub af: Af,
    pub expected: Vec<(SemanticsId, BTreeSet<Extension>)>,
}

impl Counterexample {
    /// Mismatches between the expected and the computed extension sets.
    pub fn mismatches(&self) -> Vec<String> {
        self.expected
            .iter()
            .filter_map(|(sigma, want)| {
                let got = semantics::extensions(&self.af, *sigma);
                (got != *want).then(|| format!("{}: {sigma} is {got:?}, expected {want:?}", self.name))
            })
            .collect()
    }
}

fn exts(sets: &[&[&str]]) -> BTreeSet<Extension> {
    sets.iter()
        .map(|s| Extension::from_names(s.iter().copied()))
        .collect()
}

/// `({a,b}, {(a,b),(b,a)})`.
pub fn mutual_attack() -> Af {
    Af::from_names(&["a", "b"], &[("a", "b"), ("b", "a")])
}

/// `({a,b}, {(a,a),(a,b)})`.
pub fn self_attacking_attacker() -> Af {
    Af::from_names(&["a", "b"], &[("a", "a"), ("a", "b")])
}

/// The nine-argument framework separating preferred and semi-stable from
/// stage semantics.
pub fn stage_separator() -> Af {
    Af::from_names(
        &["a", "b", "c", "d", "e", "f", "g1", "g2", "h"],
        &[
            ("g1", "g1"),
            ("g2", "g2"),
            ("a", "b"),
            ("b", "a"),
            ("c", "d"),
            ("d", "c"),
            ("a", "g1"),
            ("b", "e"),
            ("c", "e"),
            ("d", "g2"),
            ("e", "f"),
            ("f", "h"),
            ("h", "e"),
        ],
    )
}

pub fn counterexamples() -> Vec<Counterexample> {
    use SemanticsId::*;
    let two = exts(&[&["a"], &["b"]]);
    let with_empty = exts(&[&[], &["a"], &["b"]]);
    let sem = exts(&[&["b", "d", "f"], &["a", "c", "f"], &["a", "d"]]);
    let mut prf = sem.clone();
    prf.extend(exts(&[&["b", "c", "f"]]));
    vec![
        Counterexample {
            name: "no-translation-into-grd",
            af: mutual_attack(),
            expected: vec![
                (Sem, two.clone()),
                (Stg, two.clone()),
                (Prf, two.clone()),
                (Stb, two),
                (Com, with_empty.clone()),
                (Adm, with_empty.clone()),
                (Grd, exts(&[&[]])),
            ],
        },
        Counterexample {
            name: "adm-com-not-exact-into-maximal",
            af: mutual_attack(),
            expected: vec![(Adm, with_empty.clone()), (Com, with_empty)],
        },
        Counterexample {
            name: "com-not-exact-into-adm",
            af: mutual_attack(),
            expected: vec![(Com, exts(&[&[], &["a"], &["b"]]))],
        },
        Counterexample {
            name: "stg-not-embedding-exact-into-sem",
            af: self_attacking_attacker(),
            expected: vec![(Stg, exts(&[&["b"]]))],
        },
        Counterexample {
            name: "prf-sem-not-exact-into-stg",
            af: stage_separator(),
            expected: vec![(Sem, sem), (Prf, prf)],
        },
    ]
}

/// The conflict-freeness facts behind the stage separator: the three
/// semi-stable extensions are conflict-free, none of `(d,f)`, `(f,d)`,
/// `(a,f)`, `(f,a)` is an attack, and so `{a,d,f}` is conflict-free too.
pub fn stage_separator_facts() -> Vec<String> {
    let f = stage_separator();
    let mut problems = Vec::new();
    for s in [&["b", "d", "f"][..], &["a", "c", "f"], &["a", "d"], &["a", "d", "f"]] {
        let e = Extension::from_names(s.iter().copied());
        if !f.is_conflict_free(&e).expect("names are in the framework") {
            problems.push(format!("{e} is not conflict-free"));
        }
    }
    for (x, y) in [("d", "f"), ("f", "d"), ("a", "f"), ("f", "a")] {
        if f.has_attack(&crate::af::ArgumentId::named(x), &crate::af::ArgumentId::named(y)) {
            problems.push(format!("({x},{y}) is an attack"));
        }
    }
    problems
}
