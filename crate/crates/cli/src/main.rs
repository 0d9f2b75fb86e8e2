//! Command-line driver for the `qpaths` library.
//!
//! Subcommands:
//!
//! * `rvalue` — compute a single `R_{α,n}` in a chosen seed and print it in
//!   the canonical Laurent grammar (the output reparses to an equal value).
//! * `series` — tabulate the terms of a rank-two recurrence as aligned text
//!   or CSV.
//! * `graph` — export a seed's path graph, its compactification, or its
//!   planar network as DOT; byte-identical across runs.
//! * `verify` — run the identity suites and print one pass/fail line per
//!   check.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` usage or I/O
//! error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qpaths::compact::build_compact_direct;
use qpaths::graphs::build_gamma;
use qpaths::qsystem::{parse_seed_file, MotzkinPath, SeedContext};
use qpaths::rank2::{AffinePair, Rank2};
use qpaths::totalpos::{factorization, network_dot};
use qpaths::verify::{run_suite, Suite, VerifyConfig};
use qpaths::{VarRegistry, ZPoly};

/// Largest rank `verify` accepts; every suite stays desk-scale below this.
const MAX_VERIFY_RANK: usize = 4;

#[derive(Parser)]
#[command(
    name = "qpaths",
    version,
    about = "Exact Q-system values, path generating series, and their cross-checks",
    long_about = "Exact arithmetic for the A_r Q-system and its equivalent models: \
                  hard-particle partition functions, weighted-path transfer matrices, \
                  compactified graphs, and totally positive networks.  All output is \
                  exact (integer-coefficient Laurent polynomials); nothing is floating \
                  point."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one R value in a chosen seed.
    ///
    /// The seed is either a Motzkin path `-m` (heights m_1,…,m_r, consecutive
    /// differences in {-1,0,1}), which introduces variables named `R{a}_{n}`
    /// for R_{a,m_a} and R_{a,m_a+1} (negative shifts read `R{a}_m{|n|}`), or
    /// a seed file with caller-chosen names.  The value R_{α,n} is printed
    /// as a Laurent polynomial in those variables, one term per `+`, each
    /// term `coeff*var^exp*…`; the text reparses to an equal value.
    Rvalue(RvalueArgs),
    /// Tabulate a rank-two recurrence x_{n+1} x_{n-1} = x_n^b + 1 (b at odd
    /// n, c at even n) for the affine exponent pairs bc = 4.
    Series(SeriesArgs),
    /// Export a seed's graph as DOT (deterministic bytes).
    Graph(GraphArgs),
    /// Run the identity suites and report each check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RvalueArgs {
    /// Rank r; optional, must match the path or seed file when given.
    #[arg(short, long)]
    rank: Option<usize>,
    /// Motzkin path as comma-separated heights, e.g. `0,1,2`.
    #[arg(short = 'm', long = "path", value_name = "M", conflicts_with = "seed_file")]
    path: Option<String>,
    /// Node index α (0 and r+1 are the boundary value 1).
    #[arg(short = 'a', long = "alpha")]
    alpha: usize,
    /// Time index n (any integer; the recurrence runs both ways).
    #[arg(short = 'n', long = "shift", allow_hyphen_values = true)]
    n: i64,
    /// Exit 1 unless every coefficient of the value is positive.
    #[arg(long)]
    check_positive: bool,
    /// Seed description file: one `R <alpha> <n> = <name>` line per seed
    /// variable; `#` starts a comment.
    #[arg(long, value_name = "FILE")]
    seed_file: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Exponent pair (b,c).
    #[arg(long, value_enum)]
    system: SystemArg,
    /// Seed index k: the seed pair is (x_k, x_{k+1}).  The (1,4) system
    /// supports k = 0 and 1; the (4,1) system only k = 0.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    base: i64,
    /// Last index to print; the table runs n = 0 … N.
    #[arg(short = 'N', long = "order", default_value_t = 8)]
    order: usize,
    /// Output layout.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    /// b = c = 2.
    #[value(name = "22")]
    TwoTwo,
    /// b = 1 at odd steps, c = 4 at even steps.
    #[value(name = "14")]
    OneFour,
    /// b = 4 at odd steps, c = 1 at even steps.
    #[value(name = "41")]
    FourOne,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// Aligned two-column table.
    Text,
    /// Comma-separated with header `n,coefficient`.
    Csv,
}

#[derive(Args)]
struct GraphArgs {
    /// Rank r; optional, must match the path when given.
    #[arg(short, long)]
    rank: Option<usize>,
    /// Motzkin path as comma-separated heights, e.g. `0,1,2`.
    #[arg(short = 'm', long = "path", value_name = "M")]
    path: String,
    /// Which drawing to emit.
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Write the DOT bytes to this file instead of standard output.
    #[arg(short = 'o', long = "out", value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// The tree-shaped path graph of the seed, rooted at 0.
    Gamma,
    /// Its compactification: merged vertices, signed level-skipping edges.
    #[value(name = "gamma-prime", alias = "gamma_prime")]
    GammaPrime,
    /// The planar network of the totally positive factorization.
    Network,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity family to run.
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Largest rank exercised (individual checks clamp further).
    #[arg(short, long, default_value_t = 3)]
    rank: usize,
    /// Series truncation order.
    #[arg(short = 'N', long = "order", default_value_t = 6)]
    order: usize,
    /// Worker threads; checks are independent, output order is fixed.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    /// Every suite below.
    All,
    /// Q-system recursion, determinants, conserved quantities, positivity.
    Qsys,
    /// Rank-two closed forms, linearizations, conserved quantities.
    #[value(name = "rank2")]
    Rank2,
    /// Path graphs, transfer matrices, continued fractions, LGV.
    Paths,
    /// Compactified graphs and merge lemmas.
    Compact,
    /// Matrix factorizations, networks, minors.
    Totalpos,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Qsys => Suite::Qsys,
            SuiteArg::Rank2 => Suite::Rank2,
            SuiteArg::Paths => Suite::Paths,
            SuiteArg::Compact => Suite::Compact,
            SuiteArg::Totalpos => Suite::Totalpos,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rvalue(args) => cmd_rvalue(args),
        Command::Series(args) => cmd_series(args),
        Command::Graph(args) => cmd_graph(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Parse `0,1,2`-style comma-separated heights into a Motzkin path.
fn parse_path(text: &str) -> Result<MotzkinPath, String> {
    let heights = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad path entry `{}`", s.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    MotzkinPath::new(heights).map_err(|e| e.to_string())
}

/// Check an optional explicit rank against the rank implied by the path.
fn check_rank(given: Option<usize>, implied: usize) -> Result<(), String> {
    match given {
        Some(r) if r != implied => Err(format!(
            "rank {r} does not match the {implied}-entry path"
        )),
        _ => Ok(()),
    }
}

/// Build the seed context from either `-m` or `--seed-file`.
fn seed_context(
    rank: Option<usize>,
    path: Option<&str>,
    seed_file: Option<&Path>,
) -> Result<SeedContext, String> {
    let ctx = match (path, seed_file) {
        (Some(text), None) => SeedContext::new(parse_path(text)?),
        (None, Some(file)) => {
            let text = fs::read_to_string(file)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            parse_seed_file(&text).map_err(|e| e.to_string())?
        }
        _ => return Err("a Motzkin path (-m) or a seed file (--seed-file) is required".into()),
    };
    check_rank(rank, ctx.rank())?;
    Ok(ctx)
}

fn cmd_rvalue(args: RvalueArgs) -> Result<ExitCode, String> {
    let mut ctx = seed_context(args.rank, args.path.as_deref(), args.seed_file.as_deref())?;
    let value = ctx
        .compute_r(args.alpha, args.n)
        .map_err(|e| e.to_string())?;
    println!("{}", value.format(ctx.registry()));
    if args.check_positive && !value.is_positive() {
        eprintln!("value R_{{{},{}}} has a non-positive coefficient", args.alpha, args.n);
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_series(args: SeriesArgs) -> Result<ExitCode, String> {
    let pair = match args.system {
        SystemArg::TwoTwo => AffinePair::B2C2,
        SystemArg::OneFour => AffinePair::B1C4,
        SystemArg::FourOne => AffinePair::B4C1,
    };
    let mut sys = Rank2::new(pair, args.base).map_err(|e| e.to_string())?;
    let mut rows = Vec::with_capacity(args.order + 1);
    for n in 0..=args.order {
        let text = sys
            .iterate(n as i64)
            .map_err(|e| e.to_string())?
            .format(sys.registry());
        rows.push(text);
    }
    if args.format == FormatArg::Csv {
        println!("n,coefficient");
        for (n, text) in rows.iter().enumerate() {
            println!("{n},{text}");
        }
    } else {
        let width = args.order.to_string().len();
        println!("{:>width$}  coefficient", "n");
        for (n, text) in rows.iter().enumerate() {
            println!("{n:>width$}  {text}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_graph(args: GraphArgs) -> Result<ExitCode, String> {
    let m = parse_path(&args.path)?;
    check_rank(args.rank, m.rank())?;
    // Symbolic step weights y_1 … y_{2r+1}, matching the drawings' labels.
    let mut registry = VarRegistry::new();
    let weights: Vec<ZPoly> = (1..=2 * m.rank() + 1)
        .map(|i| ZPoly::var(registry.intern(&format!("y{i}"))))
        .collect();
    let dot = match args.variant {
        VariantArg::Gamma => build_gamma(&m, &weights)
            .map_err(|e| e.to_string())?
            .to_dot(&registry),
        VariantArg::GammaPrime => build_compact_direct(&m, &weights)
            .map_err(|e| e.to_string())?
            .to_dot(&registry),
        VariantArg::Network => {
            let fact = factorization(&m, &weights).map_err(|e| e.to_string())?;
            network_dot(&fact, &registry)
        }
    };
    match args.out {
        Some(path) => fs::write(&path, dot.as_bytes())
            .map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{dot}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.rank == 0 || args.rank > MAX_VERIFY_RANK {
        return Err(format!(
            "verification rank must be between 1 and {MAX_VERIFY_RANK}"
        ));
    }
    let cfg = VerifyConfig {
        rank: args.rank,
        order: args.order,
        jobs: args.jobs.max(1),
    };
    let outcomes = run_suite(args.suite.into(), cfg);
    let mut failed = 0usize;
    for o in &outcomes {
        if o.passed {
            println!("PASS {} ({})", o.name, o.detail);
        } else {
            failed += 1;
            println!("FAIL {}: {}", o.name, o.detail);
        }
    }
    println!(
        "{} checks: {} passed, {} failed",
        outcomes.len(),
        outcomes.len() - failed,
        failed
    );
    Ok(if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
