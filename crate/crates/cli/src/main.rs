use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use verlinde_core::app::{self, Command, Completion, RunConfig, CORPUS_ENV};
use verlinde_core::exact::{parse_rational, Rational};

/// Exact fusion rings, surface dimensions, 2d TQFTs and category completions.
///
/// Inputs that do not exist on disk are looked up in $VERLINDE_CORPUS and
/// then in the built-in corpus (e.g. `fib.fusion`, `z2.algebra`).
#[derive(Parser, Debug)]
#[command(name = "verlinde", version)]
struct Cli {
    /// Print `key = value` lines instead of prose.
    #[arg(long, global = true)]
    machine: bool,
    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = app::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check the axioms of a fusion ring, algebra or category file.
    Validate {
        file: PathBuf,
        /// Highest genus used by gluing and invariance checks.
        #[arg(long)]
        max_genus: Option<u32>,
        /// Random basis changes for the invariance check.
        #[arg(long, default_value_t = app::DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Split a fusion ring into blocks, one per unit component.
    Blocks { file: PathBuf },
    /// Dimension of the space attached to a coloured surface.
    Dim {
        file: PathBuf,
        /// A .surfaces file; overrides --genus and --boundary.
        surfaces: Option<PathBuf>,
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Closed-surface invariants of a Frobenius algebra.
    Invariant {
        file: PathBuf,
        #[arg(long)]
        genus: Option<u32>,
        /// Print every genus up to this one (default 3).
        #[arg(long, conflicts_with = "genus")]
        max_genus: Option<u32>,
    },
    /// Evaluate a cobordism word in a Frobenius algebra.
    Evalword { algebra: PathBuf, word: PathBuf },
    /// List fusion rings of given rank up to isomorphism.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Largest fusion coefficient allowed.
        #[arg(long, default_value_t = 1)]
        max_coeff: u32,
    },
    /// Matrix or idempotent completion of a presented category.
    Complete {
        #[arg(value_enum)]
        kind: CompletionKind,
        file: PathBuf,
        /// An .idempotents file listing the objects to add (karoubi only).
        idempotents: Option<PathBuf>,
        /// Longest object sequence (mat only).
        #[arg(long, default_value_t = app::DEFAULT_BOUND)]
        bound: usize,
        /// Also add the empty sequence as a zero object (mat only).
        #[arg(long)]
        with_zero: bool,
        /// Comma-separated coefficients searched for idempotents (karoubi only).
        #[arg(long, value_delimiter = ',', value_parser = rational)]
        grid: Option<Vec<Rational>>,
    },
    /// Trace-form semisimplicity test, optionally checking a separability idempotent.
    CheckSeparable {
        algebra: PathBuf,
        element: Option<PathBuf>,
    },
    /// Blocks, modular functors, surface dimensions and twist checks.
    Report {
        file: PathBuf,
        /// Extra .surfaces and .twists files.
        extra: Vec<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    #[arg(long, default_value_t = 0)]
    genus: u32,
    /// Comma-separated boundary labels, by name or index.
    #[arg(long, value_delimiter = ',')]
    boundary: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CompletionKind {
    Mat,
    Karoubi,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).ok_or_else(|| format!("'{s}' is not a rational number"))
}

fn config(cli: Cli) -> RunConfig {
    let mut c = RunConfig::new(Command::Validate);
    c.machine = cli.machine;
    c.seed = cli.seed;
    c.corpus_dir = std::env::var_os(CORPUS_ENV).map(PathBuf::from);
    match cli.command {
        Cmd::Validate { file, max_genus, trials } => {
            c.inputs.push(file);
            c.max_genus = max_genus;
            c.trials = trials;
        }
        Cmd::Blocks { file } => {
            c.command = Command::Blocks;
            c.inputs.push(file);
        }
        Cmd::Dim { file, surfaces, surface } => {
            c.command = Command::Dim;
            c.inputs.push(file);
            c.inputs.extend(surfaces);
            c.genus = Some(surface.genus);
            c.boundary = surface.boundary;
        }
        Cmd::Invariant { file, genus, max_genus } => {
            c.command = Command::Invariant;
            c.inputs.push(file);
            c.genus = genus;
            c.max_genus = max_genus;
        }
        Cmd::Evalword { algebra, word } => {
            c.command = Command::EvalWord;
            c.inputs = vec![algebra, word];
        }
        Cmd::Enumerate { rank, max_coeff } => {
            c.command = Command::Enumerate;
            c.rank = rank;
            c.max_coeff = max_coeff;
        }
        Cmd::Complete { kind, file, idempotents, bound, with_zero, grid } => {
            c.command = Command::Complete(match kind {
                CompletionKind::Mat => Completion::Mat,
                CompletionKind::Karoubi => Completion::Karoubi,
            });
            c.inputs.push(file);
            c.inputs.extend(idempotents);
            c.bound = bound;
            c.with_zero = with_zero;
            c.grid = grid;
        }
        Cmd::CheckSeparable { algebra, element } => {
            c.command = Command::CheckSeparable;
            c.inputs.push(algebra);
            c.inputs.extend(element);
        }
        Cmd::Report { file, extra } => {
            c.command = Command::Report;
            c.inputs.push(file);
            c.inputs.extend(extra);
        }
    }
    c
}

fn main() -> ExitCode {
    let out = app::run(&config(Cli::parse()));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.status as u8)
}
