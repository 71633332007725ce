use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperposet::algebra::format_rational;
use hyperposet::characters::{
    anticyclic_m, ce_formula, conjecture_report, equivariant_characters, hal, wh_pp,
};
use hyperposet::genseries::{chi, mobius_hat, tau, ChiMethod};
use hyperposet::posetlab::{
    dump, enumerate, load, CyclicHypertree, Family, Hypertree, PointedPartition, RootedForest, Structure,
};
use hyperposet::symfunc::SymFunc;
use hyperposet::verify::{run_suite, Suite};
use hyperposet::Error;

#[derive(Parser)]
#[command(name = "hyperposet", version, about = "Hypertree posets: series, characters and checks")]
struct Cli {
    /// Truncation order of every series
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=16))]
    order: u32,

    /// Output format for polynomial tables
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory of enumeration cache files
    #[arg(long, global = true, env = "HYPERPOSET_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "HA")]
    Ha,
    #[value(name = "HAC")]
    Hac,
    #[value(name = "HAL")]
    Hal,
    #[value(name = "WHPP")]
    Whpp,
    #[value(name = "CE")]
    Ce,
    #[value(name = "M")]
    M,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial of the hypertree poset
    Chi {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "via_tau", value_parser = parse_method)]
        method: ChiMethod,
    },
    /// Rank polynomial of cyclic hypertrees
    Tau {
        #[arg(long)]
        n: usize,
    },
    /// Möbius number of the hypertree poset with a top added
    MobiusHat {
        #[arg(long)]
        n: usize,
    },
    /// List the canonical structures of a family
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Write a cache file instead of listing
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// One degree of a character, as JSON
    Char {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        degree: usize,
    },
    /// Run a suite of checks, one line per check
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Compare the hypertree Whitney character with the HAL series
    Report {
        #[arg(long, required = true)]
        conjecture: bool,
        #[arg(long)]
        n: usize,
    },
}

fn parse_method(s: &str) -> Result<ChiMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. }
            | Error::BoundExceeded { .. }
            | Error::Parse(_)
            | Error::VertexMismatch { .. }
            | Error::Cache { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(()) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(msg)) => {
            print!("{out}");
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let order = cli.order as usize;
    match &cli.command {
        Command::Chi { n, method } => {
            let c = chi(*n, *method)?;
            match cli.format {
                Format::Tsv => out.push_str(&c.tsv_row()),
                Format::Json => out.push_str(&serde_json::json!({ "n": c.n, "chi": c.to_string() }).to_string()),
                Format::Text => out.push_str(&c.to_string()),
            }
            out.push('\n');
        }
        Command::Tau { n } => {
            let p = tau(*n)?;
            out.push_str(&p.fmt_with("t"));
            out.push('\n');
        }
        Command::MobiusHat { n } => {
            out.push_str(&format_rational(&mobius_hat(*n)?));
            out.push('\n');
        }
        Command::Enumerate { family, n, dump } => {
            let cache = cli.cache_dir.as_deref();
            let lines = match family {
                Family::Hypertree => listing::<Hypertree>(*n, dump.as_deref(), cache)?,
                Family::CyclicHypertree => listing::<CyclicHypertree>(*n, dump.as_deref(), cache)?,
                Family::PointedPartition => listing::<PointedPartition>(*n, dump.as_deref(), cache)?,
                Family::Forest => listing::<RootedForest>(*n, dump.as_deref(), cache)?,
            };
            for l in lines {
                out.push_str(&l);
                out.push('\n');
            }
        }
        Command::Char { which, degree } => {
            let d = *degree;
            if d == 0 {
                return Err(Failure::Usage("degree must be at least 1".into()));
            }
            let order = order.max(d);
            let f: SymFunc = match which {
                Which::Ha => equivariant_characters(order)?.0.total,
                Which::Hac => equivariant_characters(order)?.1.total,
                Which::Hal => hal(order)?.hal,
                Which::Whpp => wh_pp(order)?,
                Which::Ce => ce_formula(order)?,
                Which::M => anticyclic_m(order)?,
            };
            out.push_str(&f.degree_to_json(d).to_string());
            out.push('\n');
        }
        Command::Verify { suite, max_n } => {
            let checks = run_suite(*suite, order, *max_n)?;
            for c in &checks {
                out.push_str(&c.to_string());
                out.push('\n');
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} of {} checks failed", checks.len())));
            }
        }
        Command::Report { n, .. } => {
            let r = conjecture_report(*n)?;
            out.push_str(&serde_json::to_string_pretty(&r.to_json()).expect("JSON values serialize"));
            out.push('\n');
            if !r.dimension_check {
                return Err(Failure::Verification("dimension check failed".into()));
            }
        }
    }
    Ok(())
}

/// Canonical lines for `(S, n)`, read from or written to the cache when a
/// directory is configured; `dump` writes a cache file and lists nothing.
fn listing<S: Structure>(n: usize, dump_to: Option<&Path>, cache: Option<&Path>) -> Result<Vec<String>, Failure> {
    let cached = cache.map(|dir| dir.join(format!("{}_{n}.txt", S::FAMILY)));
    let elements = match &cached {
        Some(path) if path.exists() => load::<S>(path, n)?,
        _ => {
            let elements = enumerate::<S>(n)?;
            if let Some(path) = &cached {
                std::fs::create_dir_all(path.parent().expect("joined path has a parent"))
                    .map_err(|e| Failure::Usage(format!("cache directory: {e}")))?;
                dump(path, n, &elements)?;
            }
            elements
        }
    };
    if let Some(path) = dump_to {
        dump(path, n, &elements)?;
        return Ok(vec![format!("wrote {} structures to {}", elements.len(), path.display())]);
    }
    Ok(elements.iter().map(|e| e.to_string()).collect())
}
