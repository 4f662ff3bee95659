//! The `wildrows` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 instance too large for the requested brute-force path.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use wildrows_core::poe012::BRUTE_ORACLE_LIMIT;
use wildrows_core::rankrec::{rank_poly_recursive_with, RecursionOptions};
use wildrows_core::{
    ab_enumerate, brute_oracle, enumerate_k_ideals, enumerate_k_models, enumerate_k_subtrees,
    enumerate_models, natural_base, ElemSet, FinalStack, RankPolynomial,
};

use crate::bench::{run_bench, BenchOptions};
use crate::format;
use crate::gen::{gen_layered_poset, gen_random_tree, LayeredSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "wildrows",
    version,
    about = "Enumerate models, order ideals and subtrees with wildcard rows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Wildcard rows, one per line.
    Rows,
    /// Every set, one per line, in row order.
    Sets,
    /// The number of sets.
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Ab,
    Recursive,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Models of an implication family (`imp` file).
    Models {
        file: PathBuf,
        /// Only models with exactly K elements.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Rows)]
        format: Format,
    },
    /// Order ideals of a poset (`poset` file).
    Ideals {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Use {0,1,2,a,b}-rows (all ideals only).
        #[arg(long, conflicts_with = "k")]
        compact: bool,
        #[arg(long, value_enum, default_value_t = Format::Rows)]
        format: Format,
    },
    /// Subtrees of a tree (`tree` file) with exactly K vertices.
    Subtrees {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Rows)]
        format: Format,
    },
    /// Whitney numbers N_0 ... N_w of the ideal lattice of a poset.
    Whitney {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Ab)]
        method: Method,
        /// Cache the recursion by remaining element set.
        #[arg(long)]
        memo: bool,
    },
    /// Write a random instance file.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Time both Whitney methods on layered posets listed in a spec file.
    Bench {
        /// Lines `m l t seed`.
        #[arg(long)]
        spec: PathBuf,
        /// Tab-separated output instead of an aligned table.
        #[arg(long)]
        tsv: bool,
        /// Per-method limit in seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long)]
        memo: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Layered poset W(m, l, t).
    Poset {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Uniform random labeled tree.
    Tree {
        #[arg(long)]
        w: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Input(_) => EXIT_INPUT,
            Failure::Guard(_) => EXIT_GUARD,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Guard(m) => m,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "wildrows: {}", f.message());
            f.code()
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn parsed<T>(path: &Path, parse: fn(&str) -> Result<T, format::FormatError>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Models { file, k, format } => {
            let family = parsed(&file, format::parse_family)?;
            match k {
                None => print_stack(out, &enumerate_models(&family), None, format),
                Some(k) => {
                    let oracle = brute_oracle(&family).map_err(|_| {
                        Failure::Guard(format!(
                            "--k on a general family needs an exhaustive feasibility test, \
                             limited to w <= {BRUTE_ORACLE_LIMIT} (this family has w = {}); \
                             use `ideals` or `subtrees` for posets and trees, or drop --k",
                            family.w()
                        ))
                    })?;
                    print_stack(out, &enumerate_k_models(&family, k, &oracle), Some(k), format)
                }
            }
        }
        Command::Ideals { file, k, compact, format } => {
            let poset = parsed(&file, format::parse_poset)?;
            match (k, compact) {
                (Some(k), _) => print_stack(out, &enumerate_k_ideals(&poset, k), Some(k), format),
                (None, false) => print_stack(out, &enumerate_models(&natural_base(&poset)), None, format),
                (None, true) => {
                    let rows = ab_enumerate(&poset).rows;
                    match format {
                        Format::Rows => rows.iter().try_for_each(|r| writeln!(out, "{r}"))?,
                        Format::Sets => {
                            for r in &rows {
                                print_sets(out, r.members())?;
                            }
                        }
                        Format::Count => {
                            let total: num_bigint::BigUint = rows.iter().map(|r| r.count()).sum();
                            writeln!(out, "{total}")?;
                        }
                    }
                    Ok(())
                }
            }
        }
        Command::Subtrees { file, k, format } => {
            let tree = parsed(&file, format::parse_tree)?;
            print_stack(out, &enumerate_k_subtrees(&tree, k), Some(k), format)
        }
        Command::Whitney { file, method, memo } => {
            let poset = parsed(&file, format::parse_poset)?;
            let len = poset.w() + 1;
            let recursive = || rank_poly_recursive_with(&poset, RecursionOptions { memoize: memo });
            match method {
                Method::Ab => {
                    writeln!(out, "{}", ab_enumerate(&poset).rank_polynomial().coefficient_line(len))?
                }
                Method::Recursive => writeln!(out, "{}", recursive().polynomial.coefficient_line(len))?,
                Method::Both => {
                    let ab = ab_enumerate(&poset);
                    let ab_poly: RankPolynomial = ab.rank_polynomial();
                    let rec = recursive();
                    writeln!(out, "{}", ab_poly.coefficient_line(len))?;
                    if ab_poly == rec.polynomial {
                        writeln!(out, "agree")?;
                    } else {
                        writeln!(out, "disagree")?;
                        writeln!(out, "recursive: {}", rec.polynomial.coefficient_line(len))?;
                    }
                    let nsum = rec.nsum.map_or("n/a".to_string(), |n| n.to_string());
                    writeln!(out, "R={} nsum={nsum}", ab.row_count())?;
                }
            }
            Ok(())
        }
        Command::Gen { what } => {
            let (text, dest) = match what {
                GenCommand::Poset { m, l, t, seed, out } => {
                    let spec = LayeredSpec { m, l, t, seed };
                    spec.validate().map_err(Failure::Usage)?;
                    (format::render_poset(&gen_layered_poset(spec)), out)
                }
                GenCommand::Tree { w, seed, out } => {
                    if w == 0 {
                        return Err(Failure::Usage("a tree needs --w >= 1".into()));
                    }
                    (format::render_tree(&gen_random_tree(w, seed)), out)
                }
            };
            match dest {
                None => out.write_all(text.as_bytes())?,
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
            }
            Ok(())
        }
        Command::Bench { spec, tsv, timeout, memo } => {
            let specs = parsed(&spec, format::parse_bench_specs)?;
            if !(timeout.is_finite() && timeout >= 0.0) {
                return Err(Failure::Usage(format!("invalid --timeout {timeout}")));
            }
            let options =
                BenchOptions { timeout: Some(Duration::from_secs_f64(timeout)), warmup: true, memoize: memo };
            let report = run_bench(&specs, &options);
            let text = if tsv { report.render_tsv() } else { report.render_table() };
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_sets(out: &mut dyn Write, sets: impl IntoIterator<Item = ElemSet>) -> std::io::Result<()> {
    sets.into_iter().try_for_each(|s| writeln!(out, "{s}"))
}

fn print_stack(out: &mut dyn Write, stack: &FinalStack, k: Option<usize>, format: Format) -> Outcome {
    match (format, k) {
        (Format::Rows, _) => stack.rows.iter().try_for_each(|r| writeln!(out, "{r}"))?,
        (Format::Sets, None) => print_sets(out, stack.members())?,
        (Format::Sets, Some(k)) => print_sets(out, stack.k_sets(k))?,
        (Format::Count, None) => writeln!(out, "{}", stack.count())?,
        (Format::Count, Some(k)) => writeln!(out, "{}", stack.count_k(k))?,
    }
    Ok(())
}
