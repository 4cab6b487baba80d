//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use argtrans::format::serialize_apx;
use argtrans::generate::{derive_seed, enumerate_all_afs, random_af};
use argtrans::properties::{
    self, counterexamples, CheckReport, StructuralConfig, SweepConfig,
};
use argtrans::reductions::{self, Cnf3};
use argtrans::semantics::{self, brute, engine};
use argtrans::translations::{Route, TranslationId};
use argtrans::{Af, ArgumentId, Extension, SemanticsId};

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {:.1} s, limit {:.0} s", elapsed.as_secs_f64(), limit.as_secs_f64())
    })
}

fn exts(sets: &[&[&str]]) -> BTreeSet<Extension> {
    sets.iter()
        .map(|s| Extension::from_names(s.iter().copied()))
        .collect()
}

fn example1() -> Af {
    Af::from_names(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("c", "b"), ("c", "d"), ("d", "c"), ("d", "e"), ("e", "e")],
    )
}

fn failed_reports(reports: &[CheckReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            let f = &r.failures[0];
            format!("{}: {} on {}", r.claim, f.detail, f.af.replace('\n', " "))
        })
        .collect()
}

fn example1_golden() -> Outcome {
    use SemanticsId::*;
    let start = Instant::now();
    let f = example1();
    let expected = [
        (Stb, exts(&[&["a", "d"]])),
        (Stg, exts(&[&["a", "d"]])),
        (Sem, exts(&[&["a", "d"]])),
        (Adm, exts(&[&[], &["a"], &["c"], &["d"], &["a", "c"], &["a", "d"]])),
        (Prf, exts(&[&["a", "c"], &["a", "d"]])),
        (Com, exts(&[&["a"], &["a", "c"], &["a", "d"]])),
        (Grd, exts(&[&["a"]])),
    ];
    for (sigma, want) in &expected {
        for (solver, got) in [
            ("enumeration", brute::extensions(&f, *sigma)),
            ("engine", engine::solve(&f, *sigma)),
        ] {
            ensure(got == *want, || format!("{sigma} by {solver}: {got:?}"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("7 semantics, 2 solvers, {:.3} s", start.elapsed().as_secs_f64()))
}

fn stage_separator_golden() -> Outcome {
    let start = Instant::now();
    let f = counterexamples::stage_separator();
    let sem = exts(&[&["b", "d", "f"], &["a", "c", "f"], &["a", "d"]]);
    let mut prf = sem.clone();
    prf.extend(exts(&[&["b", "c", "f"]]));
    for (sigma, want) in [(SemanticsId::Sem, &sem), (SemanticsId::Prf, &prf)] {
        let got = semantics::extensions(&f, sigma);
        ensure(got == *want, || format!("{sigma}: {got:?}"))?;
        let got = engine::solve(&f, sigma);
        ensure(got == *want, || format!("{sigma} by engine: {got:?}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("sem 3 sets, prf 4 sets, {:.3} s", start.elapsed().as_secs_f64()))
}

fn claim_sweep(cfg: &SweepConfig, limit: Duration, expected_instances: usize) -> (Outcome, Option<CheckReport>) {
    let start = Instant::now();
    let result = match properties::run_sweep(cfg) {
        Ok(r) => r,
        Err(e) => return (Err(e.to_string()), None),
    };
    let outcome = (|| {
        let names: BTreeSet<String> = result.claims.iter().map(|r| r.claim.clone()).collect();
        for c in properties::claim_matrix() {
            ensure(names.contains(&c.name()), || format!("claim {} not run", c.name()))?;
        }
        for composite in ["grd=>adm:tr4.tr8", "adm=>prf:tr4.tr6", "com=>adm:tr4.tr7", "com=>prf:tr4.tr7"] {
            ensure(names.contains(composite), || format!("composite {composite} not run"))?;
        }
        for r in &result.claims {
            ensure(r.instances_checked == expected_instances, || {
                format!("{} checked {} instances", r.claim, r.instances_checked)
            })?;
        }
        let failed = failed_reports(&result.claims);
        ensure(failed.is_empty(), || failed.join("; "))?;
        within(start.elapsed(), limit)?;
        Ok(format!(
            "{} claims x {} frameworks, 0 failures, {:.1} s",
            result.claims.len(),
            expected_instances,
            start.elapsed().as_secs_f64()
        ))
    })();
    (outcome, result.laws)
}

fn structural_sweep() -> Outcome {
    let start = Instant::now();
    let reports = properties::run_structural(&StructuralConfig::new(3, 500, SEED)).map_err(|e| e.to_string())?;
    ensure(reports.len() == 32, || format!("{} structural reports", reports.len()))?;
    let failed = failed_reports(&reports);
    ensure(failed.is_empty(), || failed.join("; "))?;
    let by_name: BTreeMap<&str, &CheckReport> = reports.iter().map(|r| (r.claim.as_str(), r)).collect();
    for t in TranslationId::ALL {
        let modular = by_name[format!("modular:{t}").as_str()];
        let expected = if t.is_modular() { 500 } else { 1 };
        ensure(modular.instances_checked == expected, || {
            format!("modular:{t} checked {} pairs", modular.instances_checked)
        })?;
    }
    Ok(format!(
        "covering 8/8, embedding 7/8 (tr2 fails on asymmetric attacks), modular 4/8 on 500 pairs + 4 witnesses, {:.1} s",
        start.elapsed().as_secs_f64()
    ))
}

fn laws(reports: &[Option<CheckReport>]) -> Outcome {
    let mut checked = 0;
    for r in reports {
        let r = r.as_ref().ok_or("semantics laws were not run")?;
        let failed = failed_reports(std::slice::from_ref(r));
        ensure(failed.is_empty(), || failed.join("; "))?;
        checked += r.instances_checked;
    }
    ensure(checked == 512 + 9000, || format!("laws checked on {checked} frameworks"))?;
    Ok(format!("{checked} frameworks"))
}

fn stable_oracle() -> Outcome {
    let mut count = 0;
    let mut check = |f: &Af| -> Result<(), String> {
        count += 1;
        let fast = semantics::stable_backtracking(f);
        let slow = brute::extensions(f, SemanticsId::Stb);
        ensure(fast == slow, || format!("{f:?}: {fast:?} vs {slow:?}"))
    };
    for f in enumerate_all_afs(3, false).map_err(|e| e.to_string())? {
        check(&f)?;
    }
    let densities = [0.15, 0.3, 0.5];
    for i in 0..1000u64 {
        let f = random_af(6, densities[i as usize % 3], derive_seed(SEED, i)).map_err(|e| e.to_string())?;
        check(&f)?;
    }
    Ok(format!("{count} frameworks (512 exhaustive, 1000 random with n=6)"))
}

fn horn_equivalence() -> Outcome {
    let (mut yes, mut no) = (0, 0);
    for i in 0..200u64 {
        let t = reductions::random_horn(10, 15, derive_seed(SEED, i));
        ensure(t.atoms().len() <= 10 && t.rules().len() <= 15, || "theory too large".into())?;
        let model = reductions::horn_minimal_model(&t);
        let z = t.atoms().iter().nth(i as usize % t.atoms().len()).unwrap().clone();
        let f = reductions::horn_to_af(&t, &z).map_err(|e| e.to_string())?;
        let t_in = semantics::grounded(&f).contains(&ArgumentId::special_t());
        ensure(model.contains(&z) == t_in, || format!("{t:?} with query {z}"))?;
        if t_in {
            yes += 1;
        } else {
            no += 1;
        }
    }
    ensure(yes > 0 && no > 0, || format!("degenerate sample: {yes} in model, {no} not"))?;
    Ok(format!("200 theories ({yes} queries in the least model, {no} not)"))
}

fn cnf_equivalence() -> Outcome {
    let s: Extension = [ArgumentId::special_s()].into_iter().collect();
    let check = |phi: &Cnf3| -> Result<bool, String> {
        let sat = reductions::brute_sat(phi).map_err(|e| e.to_string())?;
        let f = reductions::cnf_to_af(phi);
        let s_stage = semantics::verify(&f, SemanticsId::Stg, &s).map_err(|e| e.to_string())?;
        ensure(sat == !s_stage, || format!("{phi:?}: satisfiable={sat}, {{__s}} stage={s_stage}"))?;
        Ok(sat)
    };
    ensure(check(&reductions::four_variable_example())?, || "fixed formula should be satisfiable".into())?;
    let (mut sat, mut unsat) = (0, 0);
    for i in 0..200u64 {
        let phi = reductions::random_cnf3(6, 10, derive_seed(SEED, i));
        if check(&phi)? {
            sat += 1;
        } else {
            unsat += 1;
        }
    }
    ensure(sat > 0 && unsat > 0, || format!("degenerate sample: {sat} sat, {unsat} unsat"))?;
    Ok(format!("fixed formula + 200 random ({sat} satisfiable, {unsat} not)"))
}

fn cli_lines(args: &[&str]) -> Result<BTreeSet<String>, String> {
    let out = argtrans_cli::run(std::iter::once("argtrans").chain(args.iter().copied()));
    ensure(out.code == 0, || format!("{args:?}: {}", out.stderr))?;
    Ok(out.stdout.lines().map(str::to_owned).collect())
}

fn pipeline_equivalence() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files: Vec<PathBuf> = Vec::new();
    for n in 1..=3 {
        for f in enumerate_all_afs(n, false).map_err(|e| e.to_string())? {
            let path = dir.path().join(format!("f{}.apx", files.len()));
            std::fs::write(&path, serialize_apx(&f)).map_err(|e| e.to_string())?;
            files.push(path);
        }
    }
    let claims = properties::all_claims();
    let mut runs = 0;
    for path in &files {
        let file = path.to_str().unwrap();
        let mut direct: BTreeMap<SemanticsId, BTreeSet<String>> = BTreeMap::new();
        for c in &claims {
            if let Entry::Vacant(slot) = direct.entry(c.source) {
                slot.insert(cli_lines(&["solve", file, "--semantics", c.source.as_str()])?);
            }
            let route = c.route.to_string();
            let via = cli_lines(&[
                "solve",
                file,
                "--semantics",
                c.source.as_str(),
                "--via-translation",
                &route,
                "--target",
                c.target.as_str(),
            ])?;
            runs += 1;
            ensure(via == direct[&c.source], || {
                format!(
                    "{} on {}: direct {:?}, translated {:?}",
                    c.name(),
                    std::fs::read_to_string(path).unwrap_or_default().replace('\n', " "),
                    direct[&c.source],
                    via
                )
            })?;
        }
    }
    ensure(claims.iter().any(|c| matches!(c.route, Route::Composite { .. })), || "no composite route".into())?;
    Ok(format!("{} routes x {} frameworks = {runs} translated solves", claims.len(), files.len()))
}

fn main() {
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let mut report = |n: u32, name: &'static str, outcome: Outcome| {
        match &outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(why) => println!("criterion {n:>2} FAIL  {name}: {why}"),
        }
        results.push((n, name, outcome));
    };

    report(1, "example-1 golden extensions", example1_golden());
    report(2, "stage-separator golden sem/prf", stage_separator_golden());
    let (exhaustive, laws3) = claim_sweep(
        &SweepConfig::new(3, 0, SEED),
        Duration::from_secs(600),
        512,
    );
    report(3, "exhaustive claim sweep, n=3", exhaustive);
    let (random, laws4) = claim_sweep(
        &SweepConfig::new(0, 1000, SEED),
        Duration::from_secs(1800),
        9000,
    );
    report(4, "random claim sweep, n=4..6, p=0.15/0.3/0.5", random);
    report(5, "structural properties", structural_sweep());
    report(6, "semantics laws on swept frameworks", laws(&[laws3, laws4]));
    report(7, "backtracking stable = enumeration", stable_oracle());
    report(8, "horn gadget equivalence", horn_equivalence());
    report(9, "3-cnf gadget equivalence", cnf_equivalence());
    report(10, "cli direct vs translated solve", pipeline_equivalence());

    let failed = results.iter().filter(|(_, _, o)| o.is_err()).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
