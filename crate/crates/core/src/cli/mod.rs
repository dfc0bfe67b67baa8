//! The `bigraded-lc` command line: argument types, ideal sources and the three commands.
//!
//! Commands return an [`Outcome`] with the text to print and the process exit code, so the
//! binary only parses arguments and forwards. Library errors map to exit codes through
//! [`exit_code`].

mod report;
mod verify;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

pub use report::{write_atomically, LinearFit, Metadata, SweepReport, SweepRow};
pub use verify::{measure, verify, Theorem};

use crate::cohomology::{cohomology_component, corpus, top_component_presentation, BigradedIdeal, KoszulOracle};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use crate::poly::{IdealFile, P};
use crate::resolution::minimal_resolution;

#[derive(Debug, Parser)]
#[command(name = "bigraded-lc", version, about = "Graded components of local cohomology of bigraded quotients S/I")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Presentation, Betti table, regularity and dimension of H^s_Q(S/I)_j.
    Compute(ComputeArgs),
    /// Check a statement over a window of y-degrees and write a CSV report.
    Verify(VerifyArgs),
    /// Compare Koszul-cohomology dimensions with the Hilbert function of the main path.
    Oracle(OracleArgs),
}

/// Built-in ideal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `Σ x_i^d y_i` with `m = n` (flags `--d`, `--n`).
    RegularSequence,
    /// `f1 y1 + f2 y2` (flags `--f1`, `--f2`, `--m`).
    TwoSummands,
    /// `r` random monomials (flags `--r`, `--m`, `--n`, `--seed`).
    Monomial,
    /// A random bigraded ideal (flag `--seed`).
    Random,
    /// `Σ l_i y_i` with random linear forms `l_i` and `m = n` (flags `--n`, `--seed`).
    Linear,
}

/// Where the ideal comes from: a file or a built-in family.
#[derive(Clone, Debug, Default, Args)]
pub struct Source {
    /// Ideal file: header `ring m=<m> n=<n> p=<p>`, then one generator per line.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub f1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub f2: Option<String>,
    /// Coefficient field: a prime, or 0 for the rationals. Overrides the file header.
    #[arg(long)]
    pub field: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub s: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub j: i64,
    /// Write the Betti table as CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: Theorem,
    #[command(flatten)]
    pub source: Source,
    /// Inclusive range `A..B` in either order; defaults to `-n..-n-6`.
    #[arg(long, allow_hyphen_values = true)]
    pub j_window: Option<String>,
    /// The factor `g` for `regsum`, a form of `S0`; defaults to `x1`.
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub s: usize,
    /// x-degrees `A..B`.
    #[arg(long, default_value = "0..4")]
    pub i_range: String,
    /// y-degrees `A..B` in either order; defaults to `-n..-n-4`.
    #[arg(long, allow_hyphen_values = true)]
    pub j_window: Option<String>,
    #[arg(long, default_value_t = 40)]
    pub t_max: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What to print and how to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

/// 2 input errors, 3 preconditions, 4 violated hypotheses, 5 search limits, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Poly(_) | Error::Io(_) => 2,
        Error::InvalidArgument(_) => 3,
        Error::HypothesisViolated(_) | Error::NotMonomial(_) => 4,
        Error::NotFound { .. } | Error::NotStabilized { .. } => 5,
        _ => 1,
    }
}

/// Parses `A..B` into the inclusive list from `A` towards `B`.
pub fn parse_range(text: &str) -> Result<Vec<i64>> {
    let bad = || Error::InvalidArgument(format!("expected a range A..B, got `{text}`"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    Ok(if a <= b { (a..=b).collect() } else { (b..=a).rev().collect() })
}

/// Runs a parsed command line. Errors from lower layers are returned; use [`exit_code`].
pub fn run(cli: &Cli) -> Result<Outcome> {
    let source = match &cli.command {
        Command::Compute(a) => &a.source,
        Command::Verify(a) => &a.source,
        Command::Oracle(a) => &a.source,
    };
    let file = match &source.ideal {
        Some(path) => Some(IdealFile::parse(&fs::read_to_string(path)?)?),
        None => None,
    };
    let p = source.field.or(file.as_ref().map(|f| f.p)).unwrap_or(DEFAULT_PRIME);
    if p == 0 {
        return run_over(Rationals, cli, file.as_ref());
    }
    let field = PrimeField::new(p).ok_or_else(|| Error::InvalidArgument(format!("{p} is not a prime below 2^31")))?;
    run_over(field, cli, file.as_ref())
}

fn run_over<F: Field>(field: F, cli: &Cli, file: Option<&IdealFile>) -> Result<Outcome> {
    match &cli.command {
        Command::Compute(a) => compute(&build_ideal(&field, &a.source, file, Family::Random)?, a),
        Command::Verify(a) => {
            let default = match a.theorem {
                Theorem::Regular => Family::RegularSequence,
                Theorem::Twosummands => Family::TwoSummands,
                Theorem::Regsum => Family::Linear,
                Theorem::Monomial | Theorem::Bh => Family::Monomial,
                _ => Family::Random,
            };
            let ideal = build_ideal(&field, &a.source, file, default)?;
            verify_cmd(&ideal, a)
        }
        Command::Oracle(a) => oracle(&build_ideal(&field, &a.source, file, Family::Random)?, a),
    }
}

/// The ideal named by `source`, falling back to `default` when neither a file nor a family is given.
pub fn build_ideal<F: Field>(field: &F, source: &Source, file: Option<&IdealFile>, default: Family) -> Result<BigradedIdeal<F>> {
    if let Some(file) = file {
        return BigradedIdeal::from_file(file, field.clone());
    }
    let positive = |v: usize, what: &str| if v == 0 { Err(Error::InvalidArgument(format!("--{what} must be positive"))) } else { Ok(v) };
    Ok(match source.family.unwrap_or(default) {
        Family::RegularSequence => {
            let n = positive(source.n.unwrap_or(2), "n")?;
            corpus::regular_sequence_form(field, source.d.unwrap_or(1), n)
        }
        Family::TwoSummands => {
            let missing = || Error::InvalidArgument("two-summands needs --f1 and --f2".into());
            let (f1, f2) = (source.f1.as_deref().ok_or_else(missing)?, source.f2.as_deref().ok_or_else(missing)?);
            corpus::two_summand_form(field, positive(source.m.unwrap_or(2), "m")?, f1, f2)?
        }
        Family::Monomial => corpus::monomial_ideal(
            field,
            positive(source.m.unwrap_or(2), "m")?,
            positive(source.n.unwrap_or(2), "n")?,
            positive(source.r.unwrap_or(2), "r")?,
            source.seed,
        ),
        Family::Random => corpus::random_ideal(field, corpus::CorpusShape::default(), source.seed, 0),
        Family::Linear => {
            let n = positive(source.n.unwrap_or(2), "n")?;
            corpus::regsum_pairs(field, n, source.seed, 1).remove(0).1
        }
    })
}

/// A short stable fingerprint of the ring and generators.
pub fn ideal_hash<F: Field>(ideal: &BigradedIdeal<F>) -> String {
    let mut h = Sha256::new();
    h.update(describe_ring(ideal).as_bytes());
    for g in ideal.gens() {
        h.update(ideal.spec().s().format(g).as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn describe_ring<F: Field>(ideal: &BigradedIdeal<F>) -> String {
    format!("m={} n={}", ideal.spec().m(), ideal.spec().n())
}

fn describe_ideal<F: Field>(ideal: &BigradedIdeal<F>) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| ideal.spec().s().format(g)).collect();
    format!("({})", gens.join(", "))
}

fn default_window<F: Field>(ideal: &BigradedIdeal<F>, text: Option<&str>, depth: i64) -> Result<Vec<i64>> {
    let n = ideal.spec().n() as i64;
    match text {
        Some(t) => parse_range(t),
        None => Ok((-n - depth..=-n).rev().collect()),
    }
}

/// Runs `f` on a pool capped by `BIGRADEDLC_THREADS` when that is set to a positive integer.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("BIGRADEDLC_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&k| k > 0);
    match cap.and_then(|k| rayon::ThreadPoolBuilder::new().num_threads(k).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn compute<F: Field>(ideal: &BigradedIdeal<F>, args: &ComputeArgs) -> Result<Outcome> {
    let n = ideal.spec().n();
    if args.s > n {
        return Err(Error::InvalidArgument(format!("s = {} exceeds n = {n}", args.s)));
    }
    let comp = if args.s == n { top_component_presentation(ideal, args.j) } else { cohomology_component(ideal, args.s, args.j)? };
    let p = comp.presentation.pruned();
    let mut text = String::new();
    writeln!(text, "ring {} over {}", describe_ring(ideal), ideal.spec().field().name()).unwrap();
    writeln!(text, "ideal {}", describe_ideal(ideal)).unwrap();
    writeln!(text, "H^{}_Q(S/I)_{}", args.s, args.j).unwrap();
    let res = minimal_resolution(&p);
    if p.is_zero() {
        writeln!(text, "zero module").unwrap();
    } else {
        writeln!(text, "generator degrees {:?}", p.row_degrees()).unwrap();
        writeln!(text, "relation degrees {:?}", p.col_degrees()).unwrap();
        if p.matrix().ncols() > 0 && p.num_generators() > 0 {
            write!(text, "{}", p.format()).unwrap();
        } else {
            writeln!(text, "free of rank {}", p.num_generators()).unwrap();
        }
        writeln!(text, "hilbert series {}", p.hilbert_series()).unwrap();
        write!(text, "betti\n{}", res.betti_table()).unwrap();
        writeln!(text, "reg {}", res.regularity()?).unwrap();
        writeln!(text, "dim {}", p.krull_dimension()).unwrap();
    }
    if let Some(out) = &args.out {
        write_atomically(out, &res.betti_table().to_csv())?;
    }
    Ok(Outcome { code: 0, text })
}

fn verify_cmd<F: Field>(ideal: &BigradedIdeal<F>, args: &VerifyArgs) -> Result<Outcome> {
    let js = default_window(ideal, args.j_window.as_deref(), 6)?;
    let g: Option<P<F>> = match (&args.g, args.theorem) {
        (Some(text), _) => Some(ideal.spec().parse_s0(text)?),
        (None, Theorem::Regsum) => Some(ideal.spec().s0().var(0)),
        _ => None,
    };
    let start = Instant::now();
    let mut report = with_thread_cap(|| verify(args.theorem, ideal, &js, g.as_ref()))?;
    report.metadata = Metadata {
        ring: describe_ring(ideal),
        ideal_hash: ideal_hash(ideal),
        field: ideal.spec().field().name(),
        wall_time_ms: start.elapsed().as_millis(),
    };
    if let Some(out) = &args.out {
        report.write_csv(out)?;
    }
    let ok = report.all_pass();
    let mut text = format!("verify {:?} on {}\n{report}", args.theorem, describe_ideal(ideal));
    writeln!(text, "{}", if ok { "all checked rows pass" } else { "some checked rows FAIL" }).unwrap();
    Ok(Outcome { code: if ok { 0 } else { 1 }, text })
}

fn oracle<F: Field>(ideal: &BigradedIdeal<F>, args: &OracleArgs) -> Result<Outcome> {
    let n = ideal.spec().n();
    if args.s > n {
        return Err(Error::InvalidArgument(format!("s = {} exceeds n = {n}", args.s)));
    }
    let is = parse_range(&args.i_range)?;
    if is.iter().any(|&i| i < 0) {
        return Err(Error::InvalidArgument("x-degrees must be non-negative".into()));
    }
    let js = default_window(ideal, args.j_window.as_deref(), 4)?;
    let mut oracle = KoszulOracle::new(ideal);
    let mut csv = String::from("s,i,j,oracle,main,match\n");
    let mut text = format!("oracle H^{} on {}\n{:>5} |", args.s, describe_ideal(ideal), "j\\i");
    for i in &is {
        write!(text, "{i:>9}").unwrap();
    }
    text.push('\n');
    let mut all = true;
    for &j in &js {
        let main = cohomology_component(ideal, args.s, j)?.presentation;
        write!(text, "{j:>5} |").unwrap();
        for &i in &is {
            let dim = oracle.stable_dim(args.s, i, j, args.t_max)?.dim as i64;
            let here = main.hilbert_function(i);
            all &= dim == here;
            writeln!(csv, "{},{i},{j},{dim},{here},{}", args.s, dim == here).unwrap();
            let cell = if dim == here { dim.to_string() } else { format!("{dim}!={here}") };
            write!(text, "{cell:>9}").unwrap();
        }
        text.push('\n');
    }
    writeln!(text, "{}", if all { "matches the main path" } else { "MISMATCH with the main path" }).unwrap();
    if let Some(out) = &args.out {
        write_atomically(out, &csv)?;
    }
    Ok(Outcome { code: if all { 0 } else { 1 }, text })
}

/// Parses `argv`, runs, and returns the exit code after printing.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
