//! Command-line front end: module checks, η and homology, AR quivers and the
//! verification suites.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dualrep::artheory::{dim_label, gamma_l, gamma_stable, letter_string, to_dot};
use dualrep::kqrep::{decompose, direct_sum, iso_test, knit_ar_quiver, ArQuiver, ArrowKind, Module, NodeClass};
use dualrep::lambda::{eta, ext1_lambda, homology, sgp_witness, DiffRep};
use dualrep::text::{diffrep_to_text, parse_diffrep, parse_rep, rep_to_text};
use dualrep::{run_suite, seeded_rng, Field, Quiver, Rep, SeededRng, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "dualrep", version, about = "Quiver representations over a field and over the dual numbers")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// `F<p>` or `Q`.
    #[arg(long, global = true, default_value = "F32003")]
    field: Field,
    /// Seed of every randomized step.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Retries for randomized decomposition and isomorphism tests.
    #[arg(long, global = true, default_value_t = 64)]
    trials: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Report perfectness, Ext¹(M, Λ), a Gorenstein witness and the homology of a module.
    Check(InputArgs),
    /// Write ηN for a kQ-module N.
    Eta(InputArgs),
    /// Write the homology H(M) of a Λ-module M.
    Homology(InputArgs),
    /// Emit an Auslander–Reiten quiver.
    Ar(ArArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    rep: Option<PathBuf>,
    /// Quiver file, needed when the module file does not embed its quiver.
    #[arg(long)]
    quiver: Option<PathBuf>,
    /// Output file (stdout by default).
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Check that η and H invert each other on the input (or, with only `--quiver`, on
    /// every indecomposable).
    #[arg(long)]
    verify_roundtrip: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Kq,
    #[value(name = "L")]
    L,
    Stable,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Kq => "kq",
            Mode::L => "L",
            Mode::Stable => "stable",
        })
    }
}

#[derive(Args)]
struct ArArgs {
    #[arg(long, value_enum, default_value = "L")]
    mode: Mode,
    #[arg(long)]
    quiver: PathBuf,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long)]
    quiver: PathBuf,
    /// Size of the randomized corpus (suite-specific default).
    #[arg(long)]
    random: Option<usize>,
}

/// Failures with their own exit codes.
#[derive(Debug)]
enum Failure {
    Invariant(String),
    Suite,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invariant(what) => write!(f, "invariant violated: {what}"),
            Failure::Suite => f.write_str("suite failed"),
        }
    }
}

impl std::error::Error for Failure {}

fn invariant(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Invariant(what.to_string()).into())
    }
}

struct Ctx {
    config: Config,
    rng: SeededRng,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_quiver(path: &Path) -> Result<Arc<Quiver>> {
    let q: Quiver = read(path)?.parse().with_context(|| format!("parsing {}", path.display()))?;
    Ok(Arc::new(q))
}

fn optional_quiver(args: &InputArgs) -> Result<Option<Arc<Quiver>>> {
    args.quiver.as_deref().map(load_quiver).transpose()
}

fn rep_path(args: &InputArgs) -> Result<&Path> {
    args.rep.as_deref().context("missing --rep")
}

fn load_diffrep(args: &InputArgs) -> Result<DiffRep> {
    let path = rep_path(args)?;
    let q = optional_quiver(args)?;
    parse_diffrep(&read(path)?, q.as_ref()).with_context(|| format!("parsing {}", path.display()))
}

fn load_rep(args: &InputArgs) -> Result<Rep> {
    let path = rep_path(args)?;
    let q = optional_quiver(args)?;
    parse_rep(&read(path)?, q.as_ref()).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `0`, `S(y)` for a simple module, the dimension vector otherwise.
fn describe_homology(h: &Rep) -> String {
    let nonzero: Vec<usize> = (0..h.dims().len()).filter(|&v| h.dims()[v] > 0).collect();
    match nonzero[..] {
        [] => "0".into(),
        [v] if h.dims()[v] == 1 => format!("S({})", h.quiver().vertex_name(v)),
        _ => dim_label(h),
    }
}

fn cmd_check(ctx: &mut Ctx, args: &InputArgs) -> Result<()> {
    let m = load_diffrep(args)?;
    let q = m.quiver().clone();
    let perfect = m.is_perfect();
    let ext1 = ext1_lambda(&m);
    let h = homology(&m).module;
    let mut out = format!("quiver: {}\ndims: {}\n", q.name(), dim_label(&m));
    out.push_str(&format!("perfect: {}\next1: {ext1}\n", if perfect { "yes" } else { "no" }));
    invariant(perfect == (ext1 == 0), "perfect iff Ext¹(M, Λ) = 0")?;
    if perfect {
        let w = sgp_witness(&m, &mut ctx.rng, ctx.config.trials)?;
        invariant(w.verify(), "Im f = Ker f for the Gorenstein witness")?;
        invariant(w.p_module.total_dim() == 2 * m.total_dim(), "|P| = 2|M|")?;
        out.push_str(&format!("sgp: ok, |P| = {}, |M| = {}\n", w.p_module.total_dim(), m.total_dim()));
    } else {
        out.push_str("sgp: not perfect\n");
    }
    out.push_str(&format!("H: {}\nH dims: {}\n", describe_homology(&h), dim_label(&h)));
    let root = if h.is_zero() {
        "none".to_string()
    } else {
        let d: Vec<i64> = h.dims().iter().map(|&x| x as i64).collect();
        q.root_type(&d)?.to_string()
    };
    out.push_str(&format!("root_type: {root}\n"));
    emit(args.output.as_deref(), &out)
}

/// `H(ηN) ≅ N` and, for `M = ηN`, `ηH(M) ≅ M`.
fn eta_roundtrip(ctx: &mut Ctx, n: &Rep) -> bool {
    let m = eta(n).module;
    let h = homology(&m).module;
    let trials = ctx.config.trials;
    iso_test(&h, n, &mut ctx.rng, trials).is_some() && iso_test(&eta(&h).module, &m, &mut ctx.rng, trials).is_some()
}

fn cmd_eta(ctx: &mut Ctx, args: &InputArgs) -> Result<()> {
    if args.rep.is_none() && args.verify_roundtrip {
        let q = optional_quiver(args)?.context("missing --rep or --quiver")?;
        let nodes = knit_ar_quiver(&q, ctx.config.field)?.nodes;
        let ok = nodes.iter().filter(|n| eta_roundtrip(ctx, &n.module)).count();
        println!("roundtrip: {ok}/{} ok", nodes.len());
        return invariant(ok == nodes.len(), "ηH and Hη are the identity on indecomposables");
    }
    let n = load_rep(args)?;
    emit(args.output.as_deref(), &diffrep_to_text(&eta(&n).module))?;
    if args.verify_roundtrip {
        invariant(eta_roundtrip(ctx, &n), "H(ηN) ≅ N and ηH(ηN) ≅ ηN")?;
        eprintln!("roundtrip: ok");
    }
    Ok(())
}

fn cmd_homology(ctx: &mut Ctx, args: &InputArgs) -> Result<()> {
    let m = load_diffrep(args)?;
    let h = homology(&m).module;
    emit(args.output.as_deref(), &rep_to_text(&h))?;
    if args.verify_roundtrip {
        let trials = ctx.config.trials;
        let e = eta(&h).module;
        invariant(iso_test(&homology(&e).module, &h, &mut ctx.rng, trials).is_some(), "H(ηH(M)) ≅ H(M)")?;
        if m.is_perfect() {
            // ηH(M) is M without its projective summands
            let pieces: Vec<DiffRep> = decompose(&m, &mut ctx.rng, trials)
                .pieces
                .into_iter()
                .filter(|p| !homology(p).module.is_zero())
                .collect();
            let rest = if pieces.is_empty() { e.clone() } else { direct_sum(&pieces).module };
            invariant(iso_test(&rest, &e, &mut ctx.rng, trials).is_some(), "ηH(M) ≅ M up to projective summands")?;
        }
        eprintln!("roundtrip: ok");
    }
    Ok(())
}

fn summary<M: Module>(mode: Mode, ar: &ArQuiver<M>) -> String {
    let projective = ar.nodes.iter().filter(|n| n.class == NodeClass::LambdaProjective).count();
    let mut out = format!(
        "quiver: {}\nmode: {mode}\nnodes: {}\narrows: {}\nghost_arrows: {}\nprojective_nodes: {projective}\n",
        ar.quiver.name(),
        ar.node_count(),
        ar.arrow_count(),
        ar.count_kind(ArrowKind::Ghost),
    );
    for n in &ar.nodes {
        out.push_str(&format!("node: {} {}\n", n.label, dim_label(&n.module)));
    }
    out
}

fn cmd_ar(ctx: &mut Ctx, args: &ArArgs) -> Result<()> {
    let q = load_quiver(&args.quiver)?;
    let field = ctx.config.field;
    let title = match args.mode {
        Mode::Kq => format!("Gamma(mod kQ) {}", q.name()),
        Mode::L => format!("Gamma(L) {}", q.name()),
        Mode::Stable => format!("Gamma(stable L) {}", q.name()),
    };
    let (text, dot) = match args.mode {
        Mode::Kq => {
            let ar = knit_ar_quiver(&q, field)?;
            (summary(args.mode, &ar), to_dot(&ar, &title, dim_label))
        }
        Mode::L | Mode::Stable => {
            let ar = if matches!(args.mode, Mode::L) { gamma_l(&q, field)? } else { gamma_stable(&q, field)? };
            (summary(args.mode, &ar), to_dot(&ar, &title, letter_string))
        }
    };
    print!("{text}");
    if let Some(path) = &args.dot {
        fs::write(path, dot).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn cmd_verify(ctx: &mut Ctx, args: &VerifyArgs) -> Result<()> {
    let q = load_quiver(&args.quiver)?;
    let config = SuiteConfig {
        field: ctx.config.field,
        trials: ctx.config.trials,
        random: args.random.unwrap_or(args.suite.default_random()),
    };
    let report = run_suite(args.suite, &q, &config, &mut ctx.rng)?;
    print!("{}", report.to_text());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Suite.into())
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(f) = err.downcast_ref::<Failure>() {
        return match f {
            Failure::Invariant(_) => 3,
            Failure::Suite => 1,
        };
    }
    match err.chain().find_map(|e| e.downcast_ref::<dualrep::Error>()) {
        Some(dualrep::Error::NotRepresentationFinite(_)) => 4,
        Some(
            dualrep::Error::Parse { .. }
            | dualrep::Error::CyclicQuiver(_)
            | dualrep::Error::Disconnected(_)
            | dualrep::Error::DuplicateId(_)
            | dualrep::Error::UnknownVertex(_)
            | dualrep::Error::UnknownArrow(_),
        )
        | None => 2,
        Some(_) => 3,
    }
}

fn run(cli: Cli) -> Result<()> {
    let rng = seeded_rng(cli.config.seed);
    let mut ctx = Ctx { config: cli.config, rng };
    match &cli.command {
        Command::Check(a) => cmd_check(&mut ctx, a),
        Command::Eta(a) => cmd_eta(&mut ctx, a),
        Command::Homology(a) => cmd_homology(&mut ctx, a),
        Command::Ar(a) => cmd_ar(&mut ctx, a),
        Command::Verify(a) => cmd_verify(&mut ctx, a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
