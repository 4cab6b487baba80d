use std::collections::BTreeSet;

use super::counterexamples::{counterexamples, mutual_attack, stage_separator, stage_separator_facts};
use super::*;
use crate::af::{Af, Extension};
use crate::par::Parallelism;
use crate::semantics::{self, SemanticsId::*};
use crate::translations::{translate, translate_route, Route, TranslateOptions, TranslationId::*};

fn example1() -> Af {
    Af::from_names(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("c", "b"), ("c", "d"), ("d", "c"), ("d", "e"), ("e", "e")],
    )
}

#[test]
fn strength_checks_on_example1() {
    let f = example1();
    let tr1 = translate(&f, Tr1).unwrap();
    assert!(check_exact(&f, &tr1, Prf, Sem));
    assert!(check_exact(&f, &tr1, Adm, Com));
    let tr3 = translate(&f, Tr3).unwrap();
    assert!(check_weakly_exact(&f, &tr3, Stb, Sem));
    assert!(!check_exact(&f, &tr3, Stb, Sem));
    let tr4 = translate(&f, Tr4).unwrap();
    assert!(check_weakly_exact(&f, &tr4, Stb, Prf));
    let tr6 = translate(&f, Tr6).unwrap();
    assert!(check_faithful(&f, &tr6, Adm, Stb));
    assert!(!check_exact(&f, &tr6, Adm, Stb));
    let tr7 = translate(&f, Tr7).unwrap();
    assert!(check_faithful(&f, &tr7, Com, Stg));
    let tr8 = translate(&f, Tr8).unwrap();
    assert!(check_faithful(&f, &tr8, Grd, Prf));
    let tr48 = translate_route(&f, "tr4.tr8".parse().unwrap(), &TranslateOptions::default()).unwrap();
    assert!(check_weakly_faithful(&f, &tr48, Grd, Adm));
    assert!(!check_faithful(&f, &tr48, Grd, Adm));
}

#[test]
fn identity_is_not_exact_from_adm_to_prf() {
    let f = mutual_attack();
    let id = translate_route(&f, Route::Identity, &TranslateOptions::default()).unwrap();
    assert!(!check_exact(&f, &id, Adm, Prf));
    assert!(check_exact(&f, &id, Prf, Stb));
}

#[test]
fn weakly_exact_removes_the_remainder() {
    let f = Af::from_names(&["a"], &[("a", "a")]);
    let out = translate(&f, Tr3).unwrap();
    assert!(semantics::extensions(&f, Stb).is_empty());
    assert_eq!(
        semantics::extensions(&out.target, Stg),
        out.remainder.iter().cloned().collect::<BTreeSet<Extension>>()
    );
    assert!(check_weakly_exact(&f, &out, Stb, Stg));
}

#[test]
fn verdicts_need_equal_cardinality() {
    let a = Extension::from_names(["a"]);
    let source: BTreeSet<Extension> = [a.clone()].into_iter().collect();
    let mut a_bar = a.clone();
    a_bar.insert(crate::af::ArgumentId::named("b").bar());
    let target: BTreeSet<Extension> = [a.clone(), a_bar].into_iter().collect();
    let original = [crate::af::ArgumentId::named("a"), crate::af::ArgumentId::named("b")]
        .into_iter()
        .collect();
    let v = Verdicts::compute(&source, &target, &original, &[]);
    assert!(!v.faithful);
    assert!(!v.exact);
}

#[test]
fn claim_table_shape() {
    let claims = claim_matrix();
    assert_eq!(claims.len(), 24);
    let names: BTreeSet<String> = claims.iter().map(Claim::name).collect();
    assert_eq!(names.len(), 24);
    for c in &claims {
        assert_ne!(c.source, c.target);
    }
    let composites: Vec<String> = claims
        .iter()
        .filter(|c| matches!(c.route, Route::Composite { .. }))
        .map(Claim::name)
        .collect();
    assert_eq!(
        composites,
        ["grd=>adm:tr4.tr8", "adm=>prf:tr4.tr6", "com=>adm:tr4.tr7", "com=>prf:tr4.tr7"]
    );
    for c in &claims {
        if matches!(c.route, Route::Composite { .. }) {
            assert_eq!(c.strength, Strength::WeaklyFaithful);
            assert!(!c.has(Structural::Modular));
        }
    }
    let tr3 = find_claim("stb=>sem:tr3").unwrap();
    assert_eq!(tr3.strength, Strength::WeaklyExact);
    assert!(tr3.has(Structural::Modular));
    assert!(find_claim("stg=>sem:tr5").is_some());
    assert!(find_claim("prf=>stg:tr1").is_none());
}

#[test]
fn exhaustive_sweep_small() {
    for n in 1..=2 {
        let result = run_sweep(&SweepConfig::new(n, 0, 0)).unwrap();
        assert!(result.passed(), "{:?}", result.claims);
        assert_eq!(result.claims[0].instances_checked, 1 << (n * n));
    }
}

#[test]
fn sweep_modes_agree() {
    let mut cfg = SweepConfig::new(0, 5, 42);
    cfg.parallelism = Parallelism::Sequential;
    let seq = run_sweep(&cfg).unwrap();
    cfg.parallelism = Parallelism::Parallel;
    let par = run_sweep(&cfg).unwrap();
    let strip = |r: &SweepResult| -> Vec<(String, usize, usize)> {
        r.claims
            .iter()
            .map(|c| (c.claim.clone(), c.instances_checked, c.failures.len()))
            .collect()
    };
    assert_eq!(strip(&seq), strip(&par));
    assert!(seq.passed());
}

#[test]
fn sweep_reports_failures_for_a_false_claim() {
    let mut cfg = SweepConfig::new(2, 0, 0);
    let mut wrong = find_claim("stb=>sem:tr3").unwrap();
    wrong.strength = Strength::Exact;
    cfg.claims = vec![wrong];
    let result = run_sweep(&cfg).unwrap();
    assert!(!result.claims[0].passed());
    assert!(result.claims[0].failures[0].detail.starts_with("not exact"));
}

#[test]
fn explore_reports_strengths() {
    let cfg = SweepConfig::new(2, 0, 0);
    let report = explore(Route::Single(Tr3), Stb, Sem, &cfg).unwrap();
    assert!(report.holds[&Strength::WeaklyExact]);
    assert!(!report.holds[&Strength::Exact]);
    assert!(report.counterexamples.contains_key(&Strength::Exact));
    let json = serde_json::to_string(&report).unwrap();
    assert!(json.contains("\"weakly-exact\":true"));
}

#[test]
fn structural_sweep() {
    let reports = run_structural(&StructuralConfig::new(3, 500, 7)).unwrap();
    assert_eq!(reports.len(), 32);
    for r in &reports {
        assert!(r.passed(), "{} {:?}", r.claim, r.failures.first());
    }
}

#[test]
fn non_modular_witnesses() {
    let opts = TranslateOptions::default();
    for t in crate::translations::TranslationId::ALL {
        match non_modular_witness(t) {
            Some((f, g)) => {
                assert!(!t.is_modular());
                assert!(!check_modular_pair(&f, &g, Route::Single(t), &opts).unwrap());
            }
            None => assert!(t.is_modular()),
        }
    }
}

#[test]
fn tr2_is_not_embedding_on_an_asymmetric_attack() {
    let f = Af::from_names(&["a", "b"], &[("a", "b")]);
    let out = translate(&f, Tr2).unwrap();
    assert!(check_covering(&f, &out));
    assert!(!check_embedding(&f, &out));
    let out5 = translate(&f, Tr5).unwrap();
    assert!(check_embedding(&f, &out5));
}

#[test]
fn monotone_requires_a_subframework() {
    let f = Af::from_names(&["a"], &[]);
    let g = Af::from_names(&["b"], &[]);
    assert!(check_monotone_pair(&f, &g, Route::Single(Tr1), &TranslateOptions::default()).is_err());
}

#[test]
fn counterexample_goldens() {
    for c in counterexamples() {
        assert!(c.mismatches().is_empty(), "{:?}", c.mismatches());
    }
    assert!(stage_separator_facts().is_empty());
    let f = stage_separator();
    let out = translate(&f, Tr5).unwrap();
    let projected: BTreeSet<Extension> = semantics::engine::solve(&out.target, Sem)
        .iter()
        .map(|e| out.project(e).unwrap())
        .collect();
    assert_eq!(projected, semantics::extensions(&f, Stg).into_extensions());
}

#[test]
fn semantics_laws_hold_on_examples() {
    assert_eq!(semantics_laws(&example1()), Ok(()));
    assert_eq!(semantics_laws(&stage_separator()), Ok(()));
}

#[test]
fn reports_serialize_as_json_lines() {
    let reports = run_claims(1, 0, 0).unwrap();
    assert_eq!(reports.len(), all_claims().len() + 1);
    for r in &reports {
        let line = serde_json::to_string(r).unwrap();
        assert!(!line.contains('\n'));
        let back: CheckReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back.claim, r.claim);
    }
}
