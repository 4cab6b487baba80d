use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::af::{Af, Extension};
use crate::error::Result;
use crate::format::serialize_apx;
use crate::generate::{derive_seed, enumerate_all_afs, random_af};
use crate::par::{self, Parallelism};
use crate::semantics::{self, engine, SemanticsId};
use crate::translations::{translate_route, Route, TranslateOptions};

use super::checks::{check_covering, check_embedding, Verdicts};
use super::claims::{all_claims, Claim, Strength, Structural};

/// One failing instance: the framework in APX and what went wrong.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub af: String,
    pub detail: String,
}

impl Failure {
    pub fn new(af: &Af, detail: impl Into<String>) -> Self {
        Failure {
            af: serialize_apx(af),
            detail: detail.into(),
        }
    }
}

/// The outcome of checking one property over a batch of instances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub claim: String,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: f64,
}

impl CheckReport {
    pub fn new(claim: impl Into<String>) -> Self {
        CheckReport {
            claim: claim.into(),
            instances_checked: 0,
            failures: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn record(&mut self, af: &Af, outcome: std::result::Result<(), String>) {
        self.instances_checked += 1;
        if let Err(detail) = outcome {
            self.failures.push(Failure::new(af, detail));
        }
    }

    pub(crate) fn add_time(&mut self, d: Duration) {
        self.elapsed_ms += d.as_secs_f64() * 1000.0;
    }
}

/// Which instances a sweep visits and how.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Every framework on `x1..xn` for this `n`; 0 disables.
    pub n_exhaustive: usize,
    pub sample_sizes: Vec<usize>,
    pub densities: Vec<f64>,
    /// Random frameworks per (size, density) cell.
    pub samples_per_cell: usize,
    pub seed: u64,
    pub parallelism: Parallelism,
    pub translate: TranslateOptions,
    pub claims: Vec<Claim>,
    pub check_laws: bool,
}

impl SweepConfig {
    pub fn new(n_exhaustive: usize, samples_per_cell: usize, seed: u64) -> Self {
        SweepConfig {
            n_exhaustive,
            sample_sizes: vec![4, 5, 6],
            densities: vec![0.15, 0.3, 0.5],
            samples_per_cell,
            seed,
            parallelism: Parallelism::default(),
            translate: TranslateOptions::default(),
            claims: all_claims(),
            check_laws: true,
        }
    }

    /// Exhaustive instances first, then the samples cell by cell.
    pub fn instances(&self) -> Result<Vec<Af>> {
        let mut out = Vec::new();
        if self.n_exhaustive > 0 {
            out.extend(enumerate_all_afs(self.n_exhaustive, false)?);
        }
        let mut index = 0u64;
        for &n in &self.sample_sizes {
            for &p in &self.densities {
                for _ in 0..self.samples_per_cell {
                    out.push(random_af(n, p, derive_seed(self.seed, index))?);
                    index += 1;
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    /// One report per claim, in claim order.
    pub claims: Vec<CheckReport>,
    /// Semantics laws on every source instance, if enabled.
    pub laws: Option<CheckReport>,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(CheckReport::passed)
            && self.laws.as_ref().is_none_or(CheckReport::passed)
    }
}

type Sources = BTreeMap<SemanticsId, BTreeSet<Extension>>;

fn sources(f: &Af) -> Sources {
    SemanticsId::ALL
        .into_iter()
        .map(|s| (s, semantics::extensions(f, s).into_extensions()))
        .collect()
}

fn show(set: &BTreeSet<Extension>) -> String {
    let items: Vec<String> = set.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// The inclusions and coincidences every framework satisfies.
pub fn semantics_laws(f: &Af) -> std::result::Result<(), String> {
    laws_on(f, &sources(f))
}

fn laws_on(f: &Af, src: &Sources) -> std::result::Result<(), String> {
    use SemanticsId::*;
    let chain = [Stb, Sem, Prf, Com, Adm];
    for w in chain.windows(2) {
        if !src[&w[0]].is_subset(&src[&w[1]]) {
            return Err(format!("{} not included in {}", w[0], w[1]));
        }
    }
    if !src[&Stb].is_empty() && !(src[&Stb] == src[&Sem] && src[&Stb] == src[&Stg]) {
        return Err(format!(
            "stable extensions exist but stb={} sem={} stg={}",
            show(&src[&Stb]),
            show(&src[&Sem]),
            show(&src[&Stg])
        ));
    }
    let grd = &src[&Grd];
    if grd.len() != 1 {
        return Err(format!("grd has {} extensions", grd.len()));
    }
    let g = grd.iter().next().expect("one extension");
    if !src[&Com].iter().all(|c| g.is_subset(c)) || !src[&Com].contains(g) {
        return Err(format!("grd {g} is not the least complete extension"));
    }
    if *g != semantics::grounded(f) {
        return Err(format!("grd {g} differs from the fixpoint {}", semantics::grounded(f)));
    }
    Ok(())
}

fn check_claim(
    f: &Af,
    claim: &Claim,
    src: &Sources,
    opts: &TranslateOptions,
) -> std::result::Result<(), String> {
    let out = translate_route(f, claim.route, opts).map_err(|e| e.to_string())?;
    let source = &src[&claim.source];
    let target = engine::solve(&out.target, claim.target).into_extensions();
    let v = Verdicts::compute(source, &target, &out.original_args, &out.remainder);
    let plain = Verdicts::compute(source, &target, &out.original_args, &[]);

    if !v.holds(claim.strength) {
        return Err(format!(
            "not {}: {}(F) = {}, {}(Tr(F)) = {}",
            claim.strength,
            claim.source,
            show(source),
            claim.target,
            show(&target)
        ));
    }
    let implications = [
        (plain.exact, plain.weakly_exact, "exact without weakly-exact"),
        (plain.weakly_exact, plain.weakly_faithful, "weakly-exact without weakly-faithful"),
        (plain.faithful, plain.weakly_faithful, "faithful without weakly-faithful"),
        (plain.exact, plain.faithful, "exact without faithful"),
        (v.weakly_exact, v.weakly_faithful, "weakly-exact without weakly-faithful (remainder)"),
    ];
    if let Some((_, _, what)) = implications.iter().find(|(a, b, _)| *a && !*b) {
        return Err(format!("verdicts inconsistent: {what}"));
    }
    if !check_covering(f, &out) {
        return Err("translation is not covering".to_owned());
    }
    if claim.has(Structural::Embedding) && !check_embedding(f, &out) {
        return Err("translation is not embedding".to_owned());
    }
    Ok(())
}

struct InstanceOutcome {
    claims: Vec<(std::result::Result<(), String>, Duration)>,
    laws: Option<(std::result::Result<(), String>, Duration)>,
}

fn evaluate(f: &Af, cfg: &SweepConfig) -> InstanceOutcome {
    let start = Instant::now();
    let src = sources(f);
    let laws = cfg.check_laws.then(|| {
        let r = laws_on(f, &src);
        (r, start.elapsed())
    });
    let claims = cfg
        .claims
        .iter()
        .map(|c| {
            let t = Instant::now();
            let r = check_claim(f, c, &src, &cfg.translate);
            (r, t.elapsed())
        })
        .collect();
    InstanceOutcome { claims, laws }
}

/// Checks every configured claim on every configured instance.
///
/// Instances are evaluated independently (in parallel when configured);
/// reports list claims in configuration order and failures in instance
/// order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    let instances = cfg.instances()?;
    let outcomes = par::map(cfg.parallelism, instances.iter().collect(), |f| evaluate(f, cfg));

    let mut claims: Vec<CheckReport> = cfg.claims.iter().map(|c| CheckReport::new(c.name())).collect();
    let mut laws = cfg.check_laws.then(|| CheckReport::new("laws"));
    for (f, outcome) in instances.iter().zip(outcomes) {
        for (report, (r, d)) in claims.iter_mut().zip(outcome.claims) {
            report.record(f, r);
            report.add_time(d);
        }
        if let (Some(report), Some((r, d))) = (laws.as_mut(), outcome.laws) {
            report.record(f, r);
            report.add_time(d);
        }
    }
    Ok(SweepResult { claims, laws })
}

/// All claims over the frameworks of size `n_exhaustive` and
/// `n_samples` seeded frameworks per (size, density) cell for sizes 4 to 6
/// and densities 0.15, 0.3, 0.5. The semantics-law report comes last.
pub fn run_claims(n_exhaustive: usize, n_samples: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let result = run_sweep(&SweepConfig::new(n_exhaustive, n_samples, seed))?;
    let mut reports = result.claims;
    reports.extend(result.laws);
    Ok(reports)
}

/// Which strengths a candidate route achieves over a sweep's instances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExploreReport {
    pub route: Route,
    pub source: SemanticsId,
    pub target: SemanticsId,
    pub instances_checked: usize,
    pub holds: BTreeMap<Strength, bool>,
    pub counterexamples: BTreeMap<Strength, Failure>,
}

/// Evaluates all four strengths of `route` for `source ⇒ target` and keeps
/// the first counterexample to each.
pub fn explore(
    route: Route,
    source: SemanticsId,
    target: SemanticsId,
    cfg: &SweepConfig,
) -> Result<ExploreReport> {
    let instances = cfg.instances()?;
    let verdicts = par::map(cfg.parallelism, instances.iter().collect(), |f| {
        let out = translate_route(f, route, &cfg.translate)?;
        let src = semantics::extensions(f, source).into_extensions();
        let tgt = engine::solve(&out.target, target).into_extensions();
        Ok(Verdicts::compute(&src, &tgt, &out.original_args, &out.remainder))
    });
    let mut report = ExploreReport {
        route,
        source,
        target,
        instances_checked: instances.len(),
        holds: Strength::ALL.into_iter().map(|s| (s, true)).collect(),
        counterexamples: BTreeMap::new(),
    };
    for (f, v) in instances.iter().zip(verdicts) {
        let v: Verdicts = v?;
        for s in Strength::ALL {
            if !v.holds(s) {
                report.holds.insert(s, false);
                report
                    .counterexamples
                    .entry(s)
                    .or_insert_with(|| Failure::new(f, format!("not {s}")));
            }
        }
    }
    Ok(report)
}
