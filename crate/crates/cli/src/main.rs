//! Command-line front end: morphism enumeration, verification suites,
//! Hilbert series, Grothendieck classes, and the ideal lattice.
//!
//! Output formats: `text` for humans, `structured` for newline-delimited
//! JSON records carrying an explicit schema tag.  Identical flags (seed
//! included) produce byte-identical structured output.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! or input errors.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use flagmod_core::hilbert::{hseries_of_class, hseries_of_symelt, EGFSeries, KClass};
use flagmod_core::ideal::{self, PIdeal};
use flagmod_core::partition::{CompositionTuple, PartitionTuple};
use flagmod_core::symfunc::TensorSymElt;
use flagmod_core::verify::{run_suite, suite_names, CheckReport};
use flagmod_core::weighted_cat::{enumerate_homs, CategoryFlavor};
use flagmod_core::RunConfig;

const SCHEMA: &str = "flagmod/1";

#[derive(Parser)]
#[command(
    name = "flagmod",
    version,
    about = "Exact computations for weight-filtered injection categories",
    propagate_version = true
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Arity: number of weight levels
    #[arg(long, global = true, env = "FLAGMOD_N")]
    n: Option<usize>,
    /// Columns per row in the finite flag model
    #[arg(long, global = true, env = "FLAGMOD_K")]
    k: Option<usize>,
    /// Polynomial degree truncation
    #[arg(long = "D", global = true, env = "FLAGMOD_BIG_D")]
    degree_trunc: Option<u32>,
    /// Series truncation (total size bound)
    #[arg(long = "N", global = true, env = "FLAGMOD_BIG_N")]
    series_trunc: Option<u32>,
    /// Size ceiling for enumerated tuples
    #[arg(long, global = true, env = "FLAGMOD_MAX")]
    max: Option<u32>,
    /// Seed for randomized checks
    #[arg(long, global = true, env = "FLAGMOD_SEED")]
    seed: Option<u64>,
    /// Output format
    #[arg(long, global = true, env = "FLAGMOD_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

impl GlobalOpts {
    fn config(&self) -> RunConfig {
        let base = RunConfig::default();
        RunConfig {
            n: self.n.unwrap_or(base.n),
            k: self.k.unwrap_or(base.k),
            d_trunc: self.degree_trunc.unwrap_or(base.d_trunc),
            n_trunc: self.series_trunc.unwrap_or(base.n_trunc),
            max_size: self.max.unwrap_or(base.max_size),
            seed: self.seed.unwrap_or(base.seed),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List or count morphisms of weighted sets
    Homs(HomsArgs),
    /// Run a named verification suite, or `all`
    Verify {
        /// Suite name (see `verify list`), `all`, or `list`
        suite: String,
    },
    /// Enhanced Hilbert series
    Hilbert {
        #[command(subcommand)]
        cmd: HilbertCmd,
    },
    /// Grothendieck classes over the tensor-symmetric functions
    Kclass {
        #[command(subcommand)]
        cmd: KclassCmd,
    },
    /// The lattice of equivariant prime-power sums
    Ideal {
        #[command(subcommand)]
        cmd: IdealCmd,
    },
}

#[derive(Args)]
struct HomsArgs {
    /// Category: fi, fb, or cd<level> (e.g. cd2)
    #[arg(long, default_value = "fi")]
    cat: String,
    /// Source tuple, comma-separated (∅ with --n for the zero tuple)
    #[arg(long)]
    from: String,
    /// Target tuple, comma-separated
    #[arg(long)]
    to: String,
    /// Print only the number of morphisms
    #[arg(long)]
    count: bool,
}

#[derive(Subcommand)]
enum HilbertCmd {
    /// Series of the basis class [A_d] (d = 0 is the ground field)
    Class {
        #[arg(long)]
        basis: usize,
    },
    /// Series of a Schur element, given as a JSON partition tuple like [[1],[]]
    Schur { tuple: String },
}

#[derive(Subcommand)]
enum KclassCmd {
    /// The basis class [A_d]
    Basis {
        #[arg(long)]
        d: usize,
    },
    /// Scale a basis class by a Schur element (JSON partition tuple)
    Scale {
        #[arg(long)]
        basis: usize,
        #[arg(long)]
        by: String,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Canonicalize a sum of prime powers, e.g. "[(1,3),(0,1)]"
    Sum { terms: String },
    /// The radical of a sum
    Radical { terms: String },
    /// Does the first ideal contain the second?
    Contains { outer: String, inner: String },
    /// The maximal chain of primes
    Chain,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = cli.opts.config();
    let format = cli.opts.format;
    match &cli.command {
        Command::Homs(args) => cmd_homs(args, &cli.opts, format),
        Command::Verify { suite } => cmd_verify(suite, &cfg, format),
        Command::Hilbert { cmd } => cmd_hilbert(cmd, &cfg, format),
        Command::Kclass { cmd } => cmd_kclass(cmd, &cfg, format),
        Command::Ideal { cmd } => cmd_ideal(cmd, &cli.opts, format),
    }
}

fn emit<T: Serialize>(record: &T) -> Result<()> {
    println!("{}", serde_json::to_string(record)?);
    Ok(())
}

// ---------------------------------------------------------------------------
// homs
// ---------------------------------------------------------------------------

fn parse_flavor(s: &str) -> Result<CategoryFlavor> {
    match s {
        "fi" => Ok(CategoryFlavor::fi()),
        "fb" => Ok(CategoryFlavor::Fb),
        other => {
            if let Some(level) = other.strip_prefix("cd") {
                let d: u32 = level
                    .parse()
                    .map_err(|_| anyhow!("bad category `{other}`: expected fi, fb, or cd<level>"))?;
                Ok(CategoryFlavor::Cd(d))
            } else {
                bail!("bad category `{other}`: expected fi, fb, or cd<level>")
            }
        }
    }
}

fn parse_tuple(s: &str, n: Option<usize>) -> Result<CompositionTuple> {
    let s = s.trim();
    if s == "∅" || s.is_empty() {
        let n = n.ok_or_else(|| anyhow!("the zero tuple needs --n to fix the arity"))?;
        return Ok(CompositionTuple::zero(n));
    }
    let entries: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().with_context(|| format!("bad tuple entry `{p}`")))
        .collect::<Result<_>>()?;
    if let Some(n) = n {
        if entries.len() != n {
            bail!("tuple {s} has {} entries but --n is {n}", entries.len());
        }
    }
    Ok(CompositionTuple::new(entries))
}

#[derive(Serialize)]
struct HomCountRecord<'a> {
    schema: &'static str,
    kind: &'static str,
    cat: &'a str,
    from: &'a CompositionTuple,
    to: &'a CompositionTuple,
    count: usize,
}

#[derive(Serialize)]
struct HomRecord<'a, T: Serialize> {
    schema: &'static str,
    kind: &'static str,
    cat: &'a str,
    morphism: T,
}

fn cmd_homs(args: &HomsArgs, opts: &GlobalOpts, format: Format) -> Result<bool> {
    let flavor = parse_flavor(&args.cat)?;
    let from = parse_tuple(&args.from, opts.n)?;
    let to = parse_tuple(&args.to, opts.n)?;
    let homs = enumerate_homs(flavor, &from, &to)?;
    if args.count {
        match format {
            Format::Text => println!("{}", homs.len()),
            Format::Structured => emit(&HomCountRecord {
                schema: SCHEMA,
                kind: "hom-count",
                cat: &args.cat,
                from: &from,
                to: &to,
                count: homs.len(),
            })?,
        }
        return Ok(true);
    }
    for h in &homs {
        match format {
            Format::Text => {
                if h.pairs().is_empty() {
                    println!("(empty)");
                } else {
                    let legs: Vec<String> = h
                        .pairs()
                        .iter()
                        .map(|(sw, sp, tw, tp)| format!("{sw}.{sp}->{tw}.{tp}"))
                        .collect();
                    println!("{}", legs.join(" "));
                }
            }
            Format::Structured =>

                emit(&HomRecord { schema: SCHEMA, kind: "morphism", cat: &args.cat, morphism: h })?,
        }
    }
    if format == Format::Text {
        println!("total: {}", homs.len());
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CheckRecord<'a> {
    schema: &'static str,
    kind: &'static str,
    suite: &'a str,
    name: &'a str,
    pass: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct SuiteResultRecord<'a> {
    schema: &'static str,
    kind: &'static str,
    suite: &'a str,
    pass: bool,
}

fn print_report(report: &CheckReport, format: Format) -> Result<()> {
    match format {
        Format::Text => {
            println!("suite {}", report.suite);
            for line in &report.lines {
                let flag = if line.pass { "PASS" } else { "FAIL" };
                println!("  {flag} {} ({})", line.name, line.detail);
            }
            println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
        }
        Format::Structured => {
            for line in &report.lines {
                emit(&CheckRecord {
                    schema: SCHEMA,
                    kind: "check",
                    suite: &report.suite,
                    name: &line.name,
                    pass: line.pass,
                    detail: &line.detail,
                })?;
            }
            emit(&SuiteResultRecord {
                schema: SCHEMA,
                kind: "suite-result",
                suite: &report.suite,
                pass: report.passed(),
            })?;
        }
    }
    Ok(())
}

fn cmd_verify(suite: &str, cfg: &RunConfig, format: Format) -> Result<bool> {
    if suite == "list" {
        for name in suite_names() {
            println!("{name}");
        }
        return Ok(true);
    }
    let names: Vec<&str> =
        if suite == "all" { suite_names().to_vec() } else { vec![suite] };
    let mut all_pass = true;
    for name in names {
        let report = run_suite(name, cfg)?;
        print_report(&report, format)?;
        all_pass &= report.passed();
    }
    Ok(all_pass)
}

// ---------------------------------------------------------------------------
// hilbert / kclass
// ---------------------------------------------------------------------------

fn parse_partition_tuple(s: &str, n: usize) -> Result<PartitionTuple> {
    let tuple: PartitionTuple = serde_json::from_str(s)
        .with_context(|| format!("bad partition tuple `{s}`: expected JSON like [[2,1],[]]"))?;
    if tuple.arity() != n {
        bail!("partition tuple {tuple} has arity {} but n = {n}", tuple.arity());
    }
    Ok(tuple)
}

#[derive(Serialize)]
struct SeriesRecord<'a> {
    schema: &'static str,
    kind: &'static str,
    n: usize,
    trunc: u32,
    series: &'a EGFSeries,
}

fn print_series(series: &EGFSeries, format: Format) -> Result<()> {
    match format {
        Format::Text => println!("{series}"),
        Format::Structured => emit(&SeriesRecord {
            schema: SCHEMA,
            kind: "series",
            n: series.arity(),
            trunc: series.trunc(),
            series,
        })?,
    }
    Ok(())
}

fn cmd_hilbert(cmd: &HilbertCmd, cfg: &RunConfig, format: Format) -> Result<bool> {
    match cmd {
        HilbertCmd::Class { basis } => {
            let class = KClass::basis(cfg.n, *basis, cfg.n_trunc)?;
            let series = hseries_of_class(&class, cfg.n_trunc)?;
            print_series(&series, format)?;
        }
        HilbertCmd::Schur { tuple } => {
            let tuple = parse_partition_tuple(tuple, cfg.n)?;
            let elt = TensorSymElt::schur(tuple, cfg.n_trunc);
            print_series(&hseries_of_symelt(&elt, cfg.n_trunc), format)?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct KClassRecord<'a> {
    schema: &'static str,
    kind: &'static str,
    n: usize,
    class: &'a KClass,
}

fn print_kclass(class: &KClass, format: Format) -> Result<()> {
    match format {
        Format::Text => {
            for (d, coeff) in class.coefficients().iter().enumerate() {
                println!("p[{d}] = {coeff}");
            }
        }
        Format::Structured => emit(&KClassRecord {
            schema: SCHEMA,
            kind: "kclass",
            n: class.arity(),
            class,
        })?,
    }
    Ok(())
}

fn cmd_kclass(cmd: &KclassCmd, cfg: &RunConfig, format: Format) -> Result<bool> {
    match cmd {
        KclassCmd::Basis { d } => {
            print_kclass(&KClass::basis(cfg.n, *d, cfg.n_trunc)?, format)?;
        }
        KclassCmd::Scale { basis, by } => {
            let class = KClass::basis(cfg.n, *basis, cfg.n_trunc)?;
            let tuple = parse_partition_tuple(by, cfg.n)?;
            let elt = TensorSymElt::schur(tuple, cfg.n_trunc);
            print_kclass(&flagmod_core::hilbert::kclass_scale(&class, &elt)?, format)?;
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// ideal
// ---------------------------------------------------------------------------

/// Parses "[(1,3),(0,1)]" into raw (index, exponent) terms.
fn parse_ideal_terms(s: &str) -> Result<Vec<(u32, u32)>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| anyhow!("bad ideal `{s}`: expected [(i,e),...]"))?;
    let mut terms = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| anyhow!("bad ideal term near `{rest}`"))?;
        let (pair, tail) = body
            .split_once(')')
            .ok_or_else(|| anyhow!("unclosed ideal term near `{rest}`"))?;
        let (i, e) = pair
            .split_once(',')
            .ok_or_else(|| anyhow!("bad ideal term `({pair})`"))?;
        terms.push((
            i.trim().parse::<u32>().with_context(|| format!("bad index `{i}`"))?,
            e.trim().parse::<u32>().with_context(|| format!("bad exponent `{e}`"))?,
        ));
        rest = tail.trim().strip_prefix(',').unwrap_or(tail).trim_start();
    }
    Ok(terms)
}

/// The ambient arity: --n when given, else the smallest arity that keeps
/// every index meaningful.
fn ideal_arity(opts: &GlobalOpts, terms: &[(u32, u32)]) -> usize {
    opts.n.unwrap_or_else(|| {
        terms.iter().map(|&(i, _)| i as usize + 1).max().unwrap_or(1)
    })
}

#[derive(Serialize)]
struct IdealRecord<'a> {
    schema: &'static str,
    kind: &'static str,
    n: usize,
    ideal: &'a PIdeal,
}

fn print_ideal(ideal: &PIdeal, format: Format) -> Result<()> {
    match format {
        Format::Text => println!("{ideal}"),
        Format::Structured => emit(&IdealRecord {
            schema: SCHEMA,
            kind: "ideal",
            n: ideal.arity(),
            ideal,
        })?,
    }
    Ok(())
}

fn cmd_ideal(cmd: &IdealCmd, opts: &GlobalOpts, format: Format) -> Result<bool> {
    match cmd {
        IdealCmd::Sum { terms } => {
            let raw = parse_ideal_terms(terms)?;
            let n = ideal_arity(opts, &raw);
            print_ideal(&ideal::canonicalize(n, &raw)?, format)?;
        }
        IdealCmd::Radical { terms } => {
            let raw = parse_ideal_terms(terms)?;
            let n = ideal_arity(opts, &raw);
            print_ideal(&ideal::radical(&ideal::canonicalize(n, &raw)?), format)?;
        }
        IdealCmd::Contains { outer, inner } => {
            let raw_outer = parse_ideal_terms(outer)?;
            let raw_inner = parse_ideal_terms(inner)?;
            let mut all = raw_outer.clone();
            all.extend_from_slice(&raw_inner);
            let n = ideal_arity(opts, &all);
            let answer = ideal::contains(
                &ideal::canonicalize(n, &raw_outer)?,
                &ideal::canonicalize(n, &raw_inner)?,
            )?;
            match format {
                Format::Text => println!("{answer}"),
                Format::Structured => emit(&serde_json::json!({
                    "schema": SCHEMA,
                    "kind": "contains",
                    "n": n,
                    "answer": answer,
                }))?,
            }
        }
        IdealCmd::Chain => {
            let n = opts.n.unwrap_or(RunConfig::default().n);
            let chain = ideal::prime_chain(n);
            match format {
                Format::Text => {
                    let rendered: Vec<String> =
                        chain.iter().map(|p| p.to_string()).collect();
                    println!("{}", rendered.join(" ⊂ "));
                    println!("chain length {n}");
                }
                Format::Structured => {
                    for (pos, p) in chain.iter().enumerate() {
                        emit(&serde_json::json!({
                            "schema": SCHEMA,
                            "kind": "chain-member",
                            "n": n,
                            "position": pos,
                            "ideal": p,
                        }))?;
                    }
                }
            }
        }
    }
    Ok(true)
}
