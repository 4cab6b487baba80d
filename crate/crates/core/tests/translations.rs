use std::collections::BTreeSet;

use argtrans::generate::enumerate_all_afs;
use argtrans::semantics::{brute, engine, extensions};
use argtrans::translations::{tr8_default_layers, translate, TranslationId::*};
use argtrans::{Af, Extension, SemanticsId};

fn small_afs() -> Vec<Af> {
    (1..=3).flat_map(|n| enumerate_all_afs(n, false).unwrap()).collect()
}

#[test]
fn size_formulas() {
    for f in small_afs() {
        let (n, r) = (f.len(), f.num_attacks());
        assert_eq!(translate(&f, Tr1).unwrap().target.len(), 2 * n);
        assert_eq!(translate(&f, Tr3).unwrap().target.len(), n + 1);
        assert_eq!(translate(&f, Tr6).unwrap().target.len(), 2 * n + r);
        assert_eq!(translate(&f, Tr7).unwrap().target.len(), 5 * n + r);
        let l = tr8_default_layers(n) as usize;
        assert_eq!(l, n.div_ceil(2));
        assert_eq!(translate(&f, Tr8).unwrap().target.len(), 2 * l * n);
    }
}

#[test]
fn remainders_only_hold_fresh_arguments() {
    for f in small_afs() {
        for t in argtrans::TranslationId::ALL {
            let out = translate(&f, t).unwrap();
            assert!(out.original_args.iter().all(|a| out.target.contains(a)));
            for s in &out.remainder {
                assert!(s.iter().all(|a| !a.is_plain()));
            }
        }
    }
}

#[test]
fn tr8_semantics_coincide_on_the_target() {
    for f in small_afs() {
        let out = translate(&f, Tr8).unwrap();
        let grd: BTreeSet<Extension> = [argtrans::semantics::grounded(&out.target)].into_iter().collect();
        for sigma in [SemanticsId::Stb, SemanticsId::Com, SemanticsId::Prf, SemanticsId::Sem, SemanticsId::Stg] {
            assert_eq!(engine::solve(&out.target, sigma), grd, "{f:?} {sigma}");
        }
    }
}

#[test]
fn tr2_on_a_self_attacker() {
    let f = Af::from_names(&["a"], &[("a", "a")]);
    let out = translate(&f, Tr2).unwrap();
    let empty: BTreeSet<Extension> = [Extension::new()].into_iter().collect();
    assert_eq!(brute::extensions(&out.target, SemanticsId::Sem), empty);
    assert_eq!(brute::extensions(&out.target, SemanticsId::Stg), empty);
}

#[test]
fn projections_recover_the_source_semantics() {
    for f in small_afs() {
        let cases = [
            (Tr5, SemanticsId::Stg, SemanticsId::Sem),
            (Tr6, SemanticsId::Adm, SemanticsId::Stb),
            (Tr7, SemanticsId::Com, SemanticsId::Stb),
            (Tr8, SemanticsId::Grd, SemanticsId::Grd),
        ];
        for (t, sigma, target) in cases {
            let out = translate(&f, t).unwrap();
            let projected: BTreeSet<Extension> = extensions(&out.target, target)
                .iter()
                .map(|e| out.project(e).unwrap())
                .collect();
            assert_eq!(projected, extensions(&f, sigma).into_extensions(), "{f:?} {t}");
        }
    }
}
