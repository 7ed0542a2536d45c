use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use kve::forest::solve_forest;
use kve::{parse_ex3c, parse_labels, parse_solution, write_roles, write_solution, GraphFormat};
use kve_core::exact::{exact_kve, exact_st, DEFAULT_BUDGET};
use kve_core::generate::{gen_random_graph, gen_random_tree};
use kve_core::greedy::approx_kve;
use kve_core::reductions::{
    build_ex3c_gadget, build_ktuple_to_kve, build_ve_to_kve, ex3c_claim, ktuple_claim, ve_to_kve_claim, GadgetGraph,
};
use kve_core::tree_solver::StLabeling;
use kve_core::{first_violation, Graph, Outcome};

/// Exit status for an infeasible instance, a rejected solution or a failed claim.
const NEGATIVE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "kve",
    version,
    about = "k-vertex-edge domination solvers and gadget builders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a k-ve dominating set.
    Solve(SolveArgs),
    /// Check a solution file against a graph.
    Verify(VerifyArgs),
    /// Build a gadget graph from a source instance.
    Reduce(ReduceArgs),
    /// Generate a random tree or graph.
    Gen(GenArgs),
    /// Compute both sides of a reduction's claim with the exact solver.
    CheckClaim(ClaimArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Tree,
    Greedy,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Reduction {
    Ex3c,
    Ve2kve,
    Ktuple2kve,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Tree,
    Graph,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, `-` for stdin.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        let text = read_input(&self.input)?;
        self.format
            .parse(&text)
            .with_context(|| format!("parsing {}", self.input.display()))
    }
}

#[derive(Args)]
struct BudgetArg {
    /// Search node budget for the exact solver; defaults to $KVE_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
}

impl BudgetArg {
    fn resolve(&self) -> Result<u64> {
        if let Some(b) = self.budget {
            return Ok(b);
        }
        match std::env::var("KVE_BUDGET") {
            Ok(v) => v
                .trim()
                .parse()
                .with_context(|| format!("KVE_BUDGET={v:?} is not an integer")),
            Err(_) => Ok(DEFAULT_BUDGET),
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    /// Vertex labels (`v R`) and edge demands (`u v s`) for the tree and exact solvers.
    #[arg(long)]
    labels: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArg,
    #[command(flatten)]
    graph: GraphInput,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    #[command(flatten)]
    graph: GraphInput,
    /// Solution file in the `solve` output format.
    solution: PathBuf,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(value_enum)]
    reduction: Reduction,
    /// Required except for ktuple2kve without --check.
    #[arg(short)]
    k: Option<usize>,
    /// Write the gadget here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the `vertex role` sidecar here.
    #[arg(long)]
    roles: Option<PathBuf>,
    /// Also check the reduction's claim; the verdict goes to stderr.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    budget: BudgetArg,
    /// Ex3C instance (`q m`, then triples) for ex3c, a graph otherwise.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(short)]
    n: usize,
    /// Edge probability for `graph`.
    #[arg(short, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClaimArgs {
    #[arg(value_enum)]
    reduction: Reduction,
    #[arg(short)]
    k: usize,
    #[command(flatten)]
    budget: BudgetArg,
    input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn solve(args: &SolveArgs) -> Result<u8> {
    let g = args.graph.load()?;
    let k = args.k;
    let labeling = match &args.labels {
        Some(path) => {
            if matches!(args.algo, Algo::Greedy) {
                bail!("--labels is supported by the tree and exact solvers only");
            }
            Some(parse_labels(&read_input(path)?, &g, k).with_context(|| format!("parsing {}", path.display()))?)
        }
        None => None,
    };
    let result = match args.algo {
        Algo::Tree => {
            let lab = labeling.unwrap_or_else(|| StLabeling::uniform(&g, k));
            solve_forest(&g, &lab).context("the tree solver needs a forest")?
        }
        Algo::Greedy => approx_kve(&g, k as usize),
        Algo::Exact => {
            let budget = Some(args.budget.resolve()?);
            let r = match &labeling {
                Some(lab) => exact_st(&g, lab, budget)?,
                None => exact_kve(&g, k as usize, budget)?,
            };
            r.witness.map_or(Outcome::Infeasible, Outcome::Found)
        }
    };
    emit(None, &write_solution(&result))?;
    Ok(if result.is_infeasible() { NEGATIVE } else { 0 })
}

fn verify(args: &VerifyArgs) -> Result<u8> {
    let g = args.graph.load()?;
    let text = read_input(&args.solution)?;
    let d = match parse_solution(&text).with_context(|| format!("parsing {}", args.solution.display()))? {
        Outcome::Found(d) => d,
        Outcome::Infeasible => bail!("solution file declares the instance infeasible; nothing to verify"),
    };
    match first_violation(&g, &d, args.k as usize)? {
        None => {
            println!("OK");
            Ok(0)
        }
        Some((u, v)) => {
            println!("VIOLATED {u} {v}");
            Ok(NEGATIVE)
        }
    }
}

fn require_k(k: Option<usize>) -> Result<usize> {
    k.context("this reduction needs -k")
}

fn build(reduction: Reduction, k: Option<usize>, input: &Path, format: GraphFormat) -> Result<GadgetGraph> {
    let text = read_input(input)?;
    let ctx = || format!("parsing {}", input.display());
    Ok(match reduction {
        Reduction::Ex3c => build_ex3c_gadget(&parse_ex3c(&text).with_context(ctx)?, require_k(k)?)?,
        Reduction::Ve2kve => build_ve_to_kve(&format.parse(&text).with_context(ctx)?, require_k(k)?)?,
        Reduction::Ktuple2kve => build_ktuple_to_kve(&format.parse(&text).with_context(ctx)?),
    })
}

/// Report lines and verdict for a claim on the given input.
fn claim_report(
    reduction: Reduction,
    k: usize,
    input: &Path,
    format: GraphFormat,
    budget: u64,
) -> Result<(String, bool)> {
    let text = read_input(input)?;
    let ctx = || format!("parsing {}", input.display());
    let show = |o: Option<usize>| o.map_or_else(|| "infeasible".to_string(), |v| v.to_string());
    let budget = Some(budget);
    Ok(match reduction {
        Reduction::Ex3c => {
            let c = ex3c_claim(&parse_ex3c(&text).with_context(ctx)?, k, budget)?;
            let report = format!(
                "exact cover: {}\ngadget optimum: {}\nthreshold: {}\n",
                if c.cover_exists { "yes" } else { "no" },
                c.optimum,
                c.threshold
            );
            (report, c.holds())
        }
        Reduction::Ve2kve => {
            let c = ve_to_kve_claim(&format.parse(&text).with_context(ctx)?, k, budget)?;
            let report = format!(
                "source optimum: {}\ngadget optimum: {}\n",
                show(c.source.optimum),
                show(c.gadget.optimum)
            );
            (report, c.holds())
        }
        Reduction::Ktuple2kve => {
            let c = ktuple_claim(&format.parse(&text).with_context(ctx)?, k, budget)?;
            let report = format!(
                "source optimum: {}\ngadget optimum: {}\n",
                show(c.source.optimum),
                show(c.gadget.optimum)
            );
            (report, c.holds())
        }
    })
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "PASS"
    } else {
        "FAIL"
    }
}

fn reduce(args: &ReduceArgs) -> Result<u8> {
    let gadget = build(args.reduction, args.k, &args.input, args.format)?;
    emit(args.out.as_deref(), &args.format.write(&gadget.graph))?;
    if let Some(path) = &args.roles {
        emit(Some(path), &write_roles(&gadget.roles))?;
    }
    if !args.check {
        return Ok(0);
    }
    let (_, holds) = claim_report(
        args.reduction,
        require_k(args.k)?,
        &args.input,
        args.format,
        args.budget.resolve()?,
    )?;
    eprintln!("{}", verdict(holds));
    Ok(if holds { 0 } else { NEGATIVE })
}

fn check_claim(args: &ClaimArgs) -> Result<u8> {
    let (report, holds) = claim_report(args.reduction, args.k, &args.input, args.format, args.budget.resolve()?)?;
    println!("{report}{}", verdict(holds));
    Ok(if holds { 0 } else { NEGATIVE })
}

fn generate(args: &GenArgs) -> Result<u8> {
    if args.n == 0 {
        bail!("-n must be at least 1");
    }
    let g = match args.kind {
        GenKind::Tree => gen_random_tree(args.n, args.seed),
        GenKind::Graph => {
            if !(0.0..=1.0).contains(&args.p) {
                bail!("-p must lie in [0, 1]");
            }
            gen_random_graph(args.n, args.p, args.seed)
        }
    };
    emit(args.out.as_deref(), &args.format.write(&g))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Reduce(a) => reduce(a),
        Command::Gen(a) => generate(a),
        Command::CheckClaim(a) => check_claim(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
