//! Subcommands and exit codes: 0 ok, 1 usage or input error, 2 budget ran out
//! (always for `invariants`, under `--strict` for `verify`), 3 a MISMATCH under `--strict`.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use ahg_core::invariants::{format_matching_polynomial, matching_polynomial, Budget, InvariantKind};
use ahg_core::verify::VerifyError;
use ahg_core::{
    builtin_order5_loop, dihedral_group, moufang_extension, AlgebraError, AssociatingHypergraph, InvariantError, Loop,
};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use thiserror::Error;

use crate::export::{export_to_vec, ExportFormat};
use crate::report::{render, summary, witness_summary, ReportFormat};
use crate::table::{parse_table, TableError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const BUDGET_ENV: &str = "AHG_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "ahg", version, about = "Associating hypergraphs of the Moufang loops M(D_n,2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Export the associating hypergraph of M(D_n,2).
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "edge-json")]
        format: ExportFormat,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute selected invariants of the support hypergraph.
    Invariants {
        #[arg(long)]
        n: usize,
        /// Comma-separated: alpha,tau,rho,nu,chi,chi-strong,matching-poly.
        #[arg(long, value_delimiter = ',', default_value = "alpha,tau,rho,nu,chi,chi-strong,matching-poly")]
        select: Vec<String>,
        /// Node budget per solver; overrides AHG_BUDGET.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
    },
    /// Compare enumeration against the closed-form predictions for each n in a range.
    Verify {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        /// Exit 3 on any MISMATCH, else 2 on any INCONCLUSIVE.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a loop table and test associativity and the Moufang identities.
    LoopCheck {
        /// `builtin-order5` or a table file path.
        source: String,
        /// Also evaluate one triple, e.g. `1,3,2`.
        #[arg(long, value_parser = parse_triple)]
        triple: Option<[usize; 3]>,
    },
}

fn parse_triple(s: &str) -> Result<[usize; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b, c] => {
            let p = |t: &str| t.parse::<usize>().map_err(|_| format!("{t:?} is not an element index"));
            Ok([p(a)?, p(b)?, p(c)?])
        }
        _ => Err(format!("expected three comma-separated indices, got {s:?}")),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Table { path: PathBuf, source: TableError },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Budget from the flag, else AHG_BUDGET, else the default.
pub fn resolve_budget(flag: Option<u64>, env: Option<&str>) -> Result<Budget, CliError> {
    if let Some(b) = flag {
        return Ok(Budget(b));
    }
    match env {
        None => Ok(Budget::DEFAULT),
        Some(s) => match s.trim().parse::<u64>() {
            Ok(b) if b >= 1 => Ok(Budget(b)),
            _ => Err(CliError::Usage(format!("{BUDGET_ENV} must be a positive integer, got {s:?}"))),
        },
    }
}

fn env_budget(flag: Option<u64>) -> Result<Budget, CliError> {
    resolve_budget(flag, std::env::var(BUDGET_ENV).ok().as_deref())
}

/// Parses arguments and runs one command, returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Build { n, format, out } => cmd_build(n, format, out.as_deref(), stdout, stderr),
        Command::Invariants { n, select, budget } => cmd_invariants(n, &select, env_budget(budget)?, stdout, stderr),
        Command::Verify { n_min, n_max, budget, strict, format, out } => {
            cmd_verify(n_min, n_max, env_budget(budget)?, strict, format, out.as_deref(), stdout, stderr)
        }
        Command::LoopCheck { source, triple } => cmd_loop_check(&source, triple, stdout),
    }
}

fn emit(bytes: &[u8], out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|source| CliError::Write { path: path.to_path_buf(), source }),
        None => Ok(stdout.write_all(bytes)?),
    }
}

fn build_hypergraph(n: usize) -> Result<AssociatingHypergraph, CliError> {
    let (group, _) = dihedral_group(n)?;
    Ok(AssociatingHypergraph::build(&moufang_extension(&group)))
}

pub fn cmd_build(
    n: usize,
    format: ExportFormat,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let h = build_hypergraph(n)?;
    emit(&export_to_vec(&h, n, format), out, stdout)?;
    writeln!(
        stderr,
        "M(D_{n},2): {} vertices, {} directed edges, {} support edges",
        h.vertex_count(),
        h.directed_edges().len(),
        h.support().edge_count()
    )?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Selection {
    Invariant(InvariantKind),
    MatchingPoly,
}

fn parse_selection(select: &[String]) -> Result<Vec<Selection>, CliError> {
    select
        .iter()
        .map(|s| match s.trim() {
            "matching-poly" => Ok(Selection::MatchingPoly),
            t => t
                .parse()
                .map(Selection::Invariant)
                .map_err(|()| CliError::Usage(format!("unknown invariant selector {t:?}"))),
        })
        .collect()
}

pub fn cmd_invariants(
    n: usize,
    select: &[String],
    budget: Budget,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let selection = parse_selection(select)?;
    let h = build_hypergraph(n)?;
    let support = h.support();
    let names = h.source().names();
    writeln!(
        stdout,
        "M(D_{n},2): |V|={} support edges={} budget={}",
        h.vertex_count(),
        support.edge_count(),
        budget.0
    )?;

    let lines: Vec<Result<(String, bool, f64), CliError>> = selection
        .par_iter()
        .map(|&sel| {
            let start = Instant::now();
            let (line, exhausted) = match sel {
                Selection::Invariant(kind) => {
                    let r = kind.solve(support, budget)?;
                    let status = if r.budget_exhausted { "budget exhausted, best found" } else { "optimal" };
                    let line = format!(
                        "{kind} = {}  ({status}, nodes {})  witness {}",
                        r.value,
                        r.nodes_explored,
                        witness_summary(&r.witness, names)
                    );
                    (line, r.budget_exhausted)
                }
                Selection::MatchingPoly => {
                    let p = matching_polynomial(support, budget)?;
                    let status = if p.budget_exhausted { "budget exhausted, partial counts" } else { "complete" };
                    let line = format!(
                        "matching-poly = {:?}  ({status}, nodes {})\n  {}",
                        p.coefficients,
                        p.nodes_explored,
                        format_matching_polynomial(&p)
                    );
                    (line, p.budget_exhausted)
                }
            };
            Ok((line, exhausted, start.elapsed().as_secs_f64()))
        })
        .collect();

    let mut any_exhausted = false;
    for (sel, entry) in selection.iter().zip(lines) {
        let (line, exhausted, secs) = entry?;
        writeln!(stdout, "{line}")?;
        let tag = match sel {
            Selection::Invariant(kind) => kind.tag(),
            Selection::MatchingPoly => "matching-poly",
        };
        writeln!(stderr, "{tag}: {secs:.3}s")?;
        any_exhausted |= exhausted;
    }
    Ok(if any_exhausted { EXIT_INCONCLUSIVE } else { EXIT_OK })
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_verify(
    n_min: usize,
    n_max: usize,
    budget: Budget,
    strict: bool,
    format: ReportFormat,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let start = Instant::now();
    let reports = crate::run_range_parallel(n_min, n_max, budget)?;
    emit(render(&reports, format).as_bytes(), out, stdout)?;
    let t = summary(&reports);
    writeln!(
        stderr,
        "verified n={n_min}..={n_max} in {:.2}s: {} MATCH, {} MISMATCH, {} INCONCLUSIVE",
        start.elapsed().as_secs_f64(),
        t.matches,
        t.mismatches,
        t.inconclusive
    )?;
    Ok(match () {
        _ if !strict => EXIT_OK,
        _ if t.mismatches > 0 => EXIT_MISMATCH,
        _ if t.inconclusive > 0 => EXIT_INCONCLUSIVE,
        _ => EXIT_OK,
    })
}

pub fn cmd_loop_check(source: &str, triple: Option<[usize; 3]>, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (l, builtin) = if source == "builtin-order5" {
        (builtin_order5_loop(), true)
    } else {
        let path = PathBuf::from(source);
        let text = fs::read_to_string(&path).map_err(|source| CliError::Read { path: path.clone(), source })?;
        let l = parse_table(&text).map_err(|source| CliError::Table { path, source })?;
        (l, false)
    };
    writeln!(stdout, "source: {source}")?;
    writeln!(stdout, "order: {}", l.order())?;
    writeln!(stdout, "latin square: ok")?;
    writeln!(stdout, "identity: {}", l.identity())?;
    match l.nonassociative_witness() {
        None => writeln!(stdout, "associative: yes")?,
        Some((x, y, z)) => {
            writeln!(stdout, "associative: no")?;
            writeln!(stdout, "witness: {}", describe_triple(&l, [x, y, z]))?;
        }
    }
    if builtin {
        for t in [[1, 2, 3], [1, 3, 2]] {
            writeln!(stdout, "documented example: {}", describe_triple(&l, t))?;
        }
    }
    if let Some(t) = triple {
        l.associates(t[0], t[1], t[2])?;
        writeln!(stdout, "triple: {}", describe_triple(&l, t))?;
    }
    let m = l.check_moufang_identities();
    match m.counterexample {
        None => writeln!(stdout, "moufang identities: hold")?,
        Some(v) => writeln!(stdout, "moufang identities: fail, {v}")?,
    }
    Ok(EXIT_OK)
}

fn describe_triple(l: &Loop, [x, y, z]: [usize; 3]) -> String {
    let left = l.product(l.product(x, y), z);
    let right = l.product(x, l.product(y, z));
    let verdict = if left == right { "associates" } else { "does not associate" };
    let n = |i| l.name(i);
    format!(
        "({},{},{}): ({}*{})*{} = {}, {}*({}*{}) = {}, {verdict}",
        n(x),
        n(y),
        n(z),
        n(x),
        n(y),
        n(z),
        n(left),
        n(x),
        n(y),
        n(z),
        n(right)
    )
}
