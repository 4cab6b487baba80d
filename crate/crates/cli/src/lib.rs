//! The `argtrans` command line.
//!
//! [`run`] parses arguments and executes one subcommand, returning what
//! would go to standard output and standard error plus the exit code, so
//! the binary and the tests share one code path.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use argtrans::format::{self, Format};
use argtrans::generate::random_af;
use argtrans::par::Parallelism;
use argtrans::properties::{self, CheckReport, StructuralConfig, SweepConfig};
use argtrans::reductions::{self, Cnf3, HornTheory};
use argtrans::semantics::{self, engine};
use argtrans::translations::{translate_route, Route, TranslateOptions};
use argtrans::{Af, ArgumentId, Extension, SemanticsId};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "argtrans", version, about = "Argumentation semantics, translations and their checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate extensions or answer a decision problem
    Solve(SolveArgs),
    /// Apply a translation and print the target framework
    Translate(TranslateArgs),
    /// Check translation claims over exhaustive and random frameworks
    Check(CheckArgs),
    /// Print a random framework
    Gen(GenArgs),
    /// Build a hardness gadget framework
    Reduce {
        #[command(subcommand)]
        which: ReduceCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    Enum,
    Cred,
    Skept,
    Ver,
    Exists,
    ExistsNe,
}

#[derive(Args, Debug)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long, value_parser = parse_semantics)]
    semantics: SemanticsId,
    #[arg(long, default_value = "apx", value_parser = parse_format)]
    format: Format,
    /// Solve through a translation, e.g. `tr3` or `tr4.tr8`
    #[arg(long, value_parser = parse_route)]
    via_translation: Option<Route>,
    /// Target semantics for --via-translation; defaults to the first
    /// proven claim for the route
    #[arg(long, value_parser = parse_semantics, requires = "via_translation")]
    target: Option<SemanticsId>,
    #[arg(long, value_enum, default_value = "enum")]
    problem: Problem,
    #[arg(long)]
    arg: Option<String>,
    /// Comma-separated set, e.g. `a,b`; empty for ∅
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    tr8_layers: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TranslateArgs {
    file: PathBuf,
    #[arg(long, value_parser = parse_route)]
    tr: Route,
    #[arg(long, default_value = "apx", value_parser = parse_format)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the JSON sidecar; defaults to `<out>.map.json`
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long)]
    tr8_layers: Option<u32>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// `all` or a claim name such as `stb=>sem:tr3`
    #[arg(long, default_value = "all")]
    claim: String,
    /// Check every framework of this size; 0 skips the exhaustive part
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Random frameworks per (size, density) cell for sizes 4 to 6
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also run the covering/embedding/modular/monotone sweep
    #[arg(long)]
    structural: bool,
    /// Sampled pairs for the modular and monotone checks
    #[arg(long, default_value_t = 500)]
    pairs: usize,
    #[arg(long)]
    sequential: bool,
    #[arg(long)]
    tr8_layers: Option<u32>,
    #[arg(long)]
    json: bool,
    /// Report which strengths --tr achieves for --source => --target
    #[arg(long, requires_all = ["tr", "source", "target"])]
    explore: bool,
    #[arg(long, value_parser = parse_route)]
    tr: Option<Route>,
    #[arg(long, value_parser = parse_semantics)]
    source: Option<SemanticsId>,
    #[arg(long, value_parser = parse_semantics)]
    target: Option<SemanticsId>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "apx", value_parser = parse_format)]
    format: Format,
    /// Print Graphviz DOT instead
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand, Debug)]
enum ReduceCommand {
    /// Definite Horn theory (`b1 & b2 -> h` per line) to F_{T,z}
    Horn {
        file: PathBuf,
        #[arg(long)]
        query: String,
        #[arg(long)]
        json: bool,
    },
    /// DIMACS 3-CNF to F_φ
    Cnf {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn parse_semantics(s: &str) -> Result<SemanticsId, String> {
    s.parse().map_err(|e: argtrans::Error| e.to_string())
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: argtrans::Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: argtrans::Error| e.to_string())
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stderr: text,
                    code: EXIT_USAGE,
                    ..Output::default()
                }
            } else {
                Output {
                    stdout: text,
                    ..Output::default()
                }
            };
        }
    };
    let mut out = Output::default();
    let result = match cli.command {
        Command::Solve(a) => solve(a, &mut out),
        Command::Translate(a) => translate(a, &mut out),
        Command::Check(a) => check(a, &mut out),
        Command::Gen(a) => gen(a, &mut out),
        Command::Reduce { which } => reduce(which, &mut out),
    };
    if let Err(e) = result {
        let _ = writeln!(out.stderr, "error: {e:#}");
        out.code = EXIT_USAGE;
    }
    out
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_af(path: &Path, fmt: Format) -> Result<Af> {
    let text = read(path)?;
    format::parse(&text, fmt).with_context(|| format!("cannot parse {}", path.display()))
}

fn parse_set(s: &str) -> Result<Extension> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| ArgumentId::plain(x).map_err(Into::into))
        .collect()
}

fn options(tr8_layers: Option<u32>) -> Result<TranslateOptions> {
    if tr8_layers == Some(0) {
        bail!("--tr8-layers must be at least 1");
    }
    Ok(TranslateOptions { tr8_layers })
}

/// The target semantics of the first proven claim for `sigma` via `route`.
pub fn default_target(sigma: SemanticsId, route: Route) -> Option<SemanticsId> {
    if route == Route::Identity {
        return Some(sigma);
    }
    properties::all_claims()
        .into_iter()
        .find(|c| c.source == sigma && c.route == route)
        .map(|c| c.target)
}

/// σ-extensions of `f` computed by translating, solving the target under
/// `target`, dropping the remainder sets and projecting.
pub fn extensions_via(
    f: &Af,
    route: Route,
    target: SemanticsId,
    opts: &TranslateOptions,
) -> Result<BTreeSet<Extension>> {
    let out = translate_route(f, route, opts)?;
    engine::solve(&out.target, target)
        .iter()
        .filter(|e| !out.remainder.contains(e))
        .map(|e| out.project(e).map_err(Into::into))
        .collect()
}

fn solve(a: SolveArgs, out: &mut Output) -> Result<()> {
    let f = load_af(&a.file, a.format)?;
    let sigma = a.semantics;
    let arg = match (&a.arg, a.problem) {
        (Some(name), _) => {
            let id = ArgumentId::plain(name)?;
            if !f.contains(&id) {
                bail!("argument `{name}` is not in the framework");
            }
            Some(id)
        }
        (None, Problem::Cred | Problem::Skept) => bail!("--problem cred/skept needs --arg"),
        (None, _) => None,
    };
    let set = match (&a.set, a.problem) {
        (Some(s), _) => {
            let e = parse_set(s)?;
            f.indices(&e)?;
            Some(e)
        }
        (None, Problem::Ver) => bail!("--problem ver needs --set"),
        (None, _) => None,
    };

    let exts: BTreeSet<Extension> = match a.via_translation {
        Some(route) => {
            let target = match a.target.or_else(|| default_target(sigma, route)) {
                Some(t) => t,
                None => bail!("no proven claim for {sigma} via {route}; pass --target"),
            };
            extensions_via(&f, route, target, &options(a.tr8_layers)?)?
        }
        None if a.problem == Problem::Ver => {
            let s = set.as_ref().expect("checked above");
            let yes = semantics::verify(&f, sigma, s)?;
            return answer(out, "ver", yes, a.json);
        }
        None => semantics::extensions(&f, sigma).into_extensions(),
    };

    let holds = match a.problem {
        Problem::Enum => {
            for e in &exts {
                if a.json {
                    let names: Vec<&str> = e.iter().map(ArgumentId::as_str).collect();
                    let _ = writeln!(out.stdout, "{}", json!(names));
                } else {
                    let _ = writeln!(out.stdout, "{e}");
                }
            }
            return Ok(());
        }
        Problem::Cred => exts.iter().any(|e| e.contains(arg.as_ref().unwrap())),
        Problem::Skept => exts.iter().all(|e| e.contains(arg.as_ref().unwrap())),
        Problem::Ver => exts.contains(set.as_ref().unwrap()),
        Problem::Exists => !exts.is_empty(),
        Problem::ExistsNe => exts.iter().any(|e| !e.is_empty()),
    };
    let name = a.problem.to_possible_value().expect("no skipped variants");
    answer(out, name.get_name(), holds, a.json)
}

fn answer(out: &mut Output, problem: &str, yes: bool, json_out: bool) -> Result<()> {
    if json_out {
        let _ = writeln!(out.stdout, "{}", json!({ "problem": problem, "answer": yes }));
    } else {
        let _ = writeln!(out.stdout, "{}", if yes { "YES" } else { "NO" });
    }
    Ok(())
}

fn translate(a: TranslateArgs, out: &mut Output) -> Result<()> {
    let f = load_af(&a.file, a.format)?;
    let t = translate_route(&f, a.tr, &options(a.tr8_layers)?)?;
    let text = format::serialize(&t.target, a.format);
    let sidecar = json!({
        "translation": a.tr,
        "original_args": t.original_args.iter().map(ArgumentId::as_str).collect::<Vec<_>>(),
        "remainder": t.remainder.iter()
            .map(|e| e.iter().map(ArgumentId::as_str).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "arg_map": t.arg_map(),
    });
    let map_path = a.map.clone().or_else(|| {
        a.out.as_ref().map(|o| {
            let mut p = o.clone().into_os_string();
            p.push(".map.json");
            PathBuf::from(p)
        })
    });
    match &a.out {
        Some(path) => write(path, &text)?,
        None => out.stdout.push_str(&text),
    }
    if let Some(path) = map_path {
        write(&path, &(serde_json::to_string_pretty(&sidecar)? + "\n"))?;
    }
    Ok(())
}

fn report_line(r: &CheckReport, json_out: bool) -> Result<String> {
    if json_out {
        return Ok(serde_json::to_string(r)?);
    }
    let mut line = format!(
        "{} {} ({} instances, {:.0} ms)",
        if r.passed() { "PASS" } else { "FAIL" },
        r.claim,
        r.instances_checked,
        r.elapsed_ms
    );
    if let Some(f) = r.failures.first() {
        let _ = write!(
            line,
            "\n  {} failure(s); first: {} on {}",
            r.failures.len(),
            f.detail,
            f.af.trim_end().replace('\n', " ")
        );
    }
    Ok(line)
}

fn check(a: CheckArgs, out: &mut Output) -> Result<()> {
    let parallelism = if a.sequential {
        Parallelism::Sequential
    } else {
        Parallelism::Parallel
    };
    let mut cfg = SweepConfig::new(a.n, a.samples, a.seed);
    cfg.parallelism = parallelism;
    cfg.translate = options(a.tr8_layers)?;

    if a.explore {
        let (route, source, target) = (a.tr.unwrap(), a.source.unwrap(), a.target.unwrap());
        let report = properties::explore(route, source, target, &cfg)?;
        if a.json {
            let _ = writeln!(out.stdout, "{}", serde_json::to_string(&report)?);
        } else {
            let _ = writeln!(
                out.stdout,
                "{source}=>{target}:{route} over {} instances",
                report.instances_checked
            );
            for (strength, holds) in &report.holds {
                let _ = write!(out.stdout, "  {strength}: {}", if *holds { "holds" } else { "fails" });
                if let Some(f) = report.counterexamples.get(strength) {
                    let _ = write!(out.stdout, " on {}", f.af.trim_end().replace('\n', " "));
                }
                out.stdout.push('\n');
            }
        }
        return Ok(());
    }

    if a.claim != "all" {
        let claim = properties::find_claim(&a.claim)
            .ok_or_else(|| anyhow!("unknown claim `{}`", a.claim))?;
        cfg.claims = vec![claim];
        cfg.check_laws = false;
    }
    let result = properties::run_sweep(&cfg)?;
    let mut reports = result.claims;
    reports.extend(result.laws);
    if a.structural {
        let mut s = StructuralConfig::new(a.n, a.pairs, a.seed);
        s.parallelism = parallelism;
        reports.extend(properties::run_structural(&s)?);
    }
    for r in &reports {
        let _ = writeln!(out.stdout, "{}", report_line(r, a.json)?);
    }
    if !reports.iter().all(CheckReport::passed) {
        out.code = EXIT_CHECK_FAILED;
    }
    Ok(())
}

fn gen(a: GenArgs, out: &mut Output) -> Result<()> {
    let f = random_af(a.n, a.p, a.seed)?;
    out.stdout = if a.dot {
        format::to_dot(&f)
    } else {
        format::serialize(&f, a.format)
    };
    Ok(())
}

fn emit_gadget(out: &mut Output, af: &Af, note: serde_json::Value, json_out: bool) {
    let apx = format::serialize_apx(af);
    if json_out {
        let _ = writeln!(out.stdout, "{}", json!({ "note": note, "apx": apx }));
    } else {
        let _ = writeln!(out.stdout, "# {note}");
        out.stdout.push_str(&apx);
    }
}

fn reduce(which: ReduceCommand, out: &mut Output) -> Result<()> {
    match which {
        ReduceCommand::Horn { file, query, json } => {
            let theory = HornTheory::parse(&read(&file)?)?;
            let z = ArgumentId::plain(&query)?;
            let af = reductions::horn_to_af(&theory, &z)?;
            let in_model = reductions::horn_minimal_model(&theory).contains(&z);
            let t_in_grd = semantics::grounded(&af).contains(&ArgumentId::special_t());
            let note = json!({
                "reduction": "horn",
                "equivalence": format!("{query} is in the least model iff __t is in the grounded extension"),
                "query_in_least_model": in_model,
                "t_in_grounded": t_in_grd,
            });
            emit_gadget(out, &af, note, json);
        }
        ReduceCommand::Cnf { file, json } => {
            let phi = Cnf3::parse_dimacs(&read(&file)?)?;
            let af = reductions::cnf_to_af(&phi);
            let satisfiable = reductions::brute_sat(&phi)?;
            let s: Extension = [ArgumentId::special_s()].into_iter().collect();
            let s_is_stage = semantics::verify(&af, SemanticsId::Stg, &s)?;
            let note = json!({
                "reduction": "cnf",
                "equivalence": "the formula is satisfiable iff {__s} is not a stage extension",
                "satisfiable": satisfiable,
                "s_is_stage": s_is_stage,
            });
            emit_gadget(out, &af, note, json);
        }
    }
    Ok(())
}
