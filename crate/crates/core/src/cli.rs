//! Command-line front end.
//!
//! Exit codes: 0 success (whatever the verdict), 2 formula parse error,
//! 3 invalid arguments, 4 resource guard exceeded, 1 I/O failure.
//! `CHI_MAX_PATTERNS` (or `--max-patterns`) overrides every resource guard.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::characteristics::{self, ChiReport};
use crate::counting::{self, CountTable};
use crate::error::Error;
use crate::formula::{self, Formula};
use crate::oracle;
use crate::patterns::{self, OrderPattern, PatternIndex};
use crate::valuations::{self, rational_string, Valuation, DEFAULT_DENSE_LIMIT};

/// Environment variable overriding the resource guards.
pub const MAX_PATTERNS_ENV: &str = "CHI_MAX_PATTERNS";
/// Default guard for `chi`/`classify`: patterns walked per formula.
pub const DEFAULT_CHI_LIMIT: u64 = 100_000_000;
/// Default guard for `patterns --list` and `--dot`.
pub const DEFAULT_LIST_LIMIT: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "godel-chi", version, about = "Generalised Euler characteristics of Gödel logic formulas")]
pub struct Cli {
    /// Worker threads for counting (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Override the resource guard (also settable through CHI_MAX_PATTERNS).
    #[arg(long, global = true, value_name = "COUNT")]
    pub max_patterns: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report χ_1..χ_{n+1} of a formula and the verdicts they imply.
    Chi(ChiArgs),
    /// Like `chi`, with a one-line verdict.
    Classify(ChiArgs),
    /// Print the table of P(n, k) (or T(n, k) with --tree).
    Table(TableArgs),
    /// Count, list or draw the forest of order patterns.
    Patterns(PatternsArgs),
    /// Linear algebra on the space of valuations.
    #[command(subcommand)]
    Valuations(ValuationsCommand),
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    pub formula: String,
    /// Number of variables; defaults to the largest index used and may only
    /// be raised. Required for formulas without variables.
    #[arg(long = "vars", value_name = "N")]
    pub vars: Option<usize>,
    /// Report only χ_k. Values above n + 1 behave like n + 1.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 9)]
    pub max_n: usize,
    #[arg(long, default_value_t = 7)]
    pub max_k: usize,
    /// Print T(n, k), the per-height counts of the tallest tree.
    #[arg(long)]
    pub tree: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["count", "list", "dot"]))]
pub struct PatternsArgs {
    #[arg(long)]
    pub n: usize,
    /// Only patterns of at most this height (default: all, n + 1).
    #[arg(long)]
    pub max_height: Option<usize>,
    #[arg(long)]
    pub count: bool,
    #[arg(long)]
    pub list: bool,
    /// Write the forest as a Graphviz digraph ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum ValuationsCommand {
    /// Dimensions of the characteristic span, the permutation-invariant
    /// valuations and the whole space.
    Dims(NArgs),
    /// Determinant of the characteristics evaluated along a maximal chain.
    Det(NArgs),
    /// Permutation invariance of a valuation (default: of every χ_k).
    Invariant(ValuationArgs),
    /// Express a valuation as a combination of χ_1..χ_{n+1}.
    Span(ValuationArgs),
}

#[derive(Debug, Args)]
pub struct NArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ValuationArgs {
    #[arg(long)]
    pub n: usize,
    /// Add the basis valuation of a pattern such as "{1,2}|{}" (repeatable).
    #[arg(long, value_name = "PATTERN")]
    pub indicator: Vec<String>,
    /// Add Σ c_k χ_k for comma-separated rationals, e.g. "2,-1" or "1/2".
    #[arg(long, value_name = "COEFFS", allow_hyphen_values = true)]
    pub chi: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// χ_k by enumerating every (k+1)-valued assignment.
    Chi {
        formula: String,
        #[arg(long = "vars", value_name = "N")]
        vars: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Number of classes of (k+1)-valued assignments, by enumeration.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse(formula::ParseError),
    InvalidArgs(String),
    Resource(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::InvalidArgs(_) => 3,
            CliError::Resource(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::InvalidArgs(m) | CliError::Resource(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => CliError::Parse(p),
            e @ Error::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            e => CliError::InvalidArgs(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command, writing
/// regular output to `out`. `--help`/`--version` print to `out` and succeed.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> CliResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(out, "{e}")?;
            return Ok(());
        }
        Err(e) => {
            let msg = e.to_string();
            let msg = msg.strip_prefix("error: ").unwrap_or(&msg).trim_end();
            return Err(CliError::InvalidArgs(msg.to_string()));
        }
    };
    execute(&cli, out)
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let started = Instant::now();
    let result = match cli.threads {
        Some(0) => Err(CliError::InvalidArgs("--threads must be at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::InvalidArgs(e.to_string()))
            .and_then(|pool| {
                let mut buf = Vec::new();
                let r = pool.install(|| dispatch(cli, &mut buf));
                out.write_all(&buf)?;
                r
            }),
        None => dispatch(cli, out),
    };
    if cli.timing {
        eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    }
    result
}

fn limit(cli: &Cli, default: u64) -> CliResult<u64> {
    if let Some(v) = cli.max_patterns {
        return Ok(v);
    }
    match std::env::var(MAX_PATTERNS_ENV) {
        Ok(s) => {
            s.trim().parse().map_err(|_| CliError::InvalidArgs(format!("{MAX_PATTERNS_ENV}={s:?} is not a count")))
        }
        Err(_) => Ok(default),
    }
}

fn check_limit(what: &'static str, needed: &BigUint, limit: u64) -> CliResult {
    if *needed > BigUint::from(limit) {
        return Err(Error::ResourceLimit { what, needed: needed.to_string(), limit }.into());
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Chi(args) => cmd_chi(cli, args, false, out),
        Command::Classify(args) => cmd_chi(cli, args, true, out),
        Command::Table(args) => cmd_table(args, out),
        Command::Patterns(args) => cmd_patterns(cli, args, out),
        Command::Valuations(cmd) => cmd_valuations(cli, cmd, out),
        Command::Oracle(cmd) => cmd_oracle(cmd, out),
    }
}

/// Parses the formula and settles the variable count.
fn formula_and_n(text: &str, vars: Option<usize>) -> CliResult<(Formula, usize)> {
    let f = formula::parse(text).map_err(CliError::Parse)?;
    let used = f.max_var();
    let n = match vars {
        Some(n) if n < used => {
            return Err(CliError::InvalidArgs(format!("--vars {n} is below X{used} used by the formula")))
        }
        Some(n) => n,
        None => used,
    };
    if n == 0 {
        return Err(CliError::InvalidArgs("formula has no variables; pass --vars N".into()));
    }
    Ok((f, n))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_chi(cli: &Cli, args: &ChiArgs, classify: bool, out: &mut dyn Write) -> CliResult {
    let (f, n) = formula_and_n(&args.formula, args.vars)?;
    if args.k == Some(0) {
        return Err(CliError::InvalidArgs("--k must be at least 1".into()));
    }
    let height = args.k.unwrap_or(n + 1).min(n + 1);
    let mut counts = CountTable::new();
    check_limit("characteristic count", &counts.patterns(n, height), limit(cli, DEFAULT_CHI_LIMIT)?)?;

    if let (Some(k), false) = (args.k, classify) {
        let chi = characteristics::chi(&f, n, k)?;
        let p = counts.patterns(n, k);
        let tautology = chi == p;
        if args.json {
            let v = json!({
                "formula": f.to_string(), "n": n, "k": k,
                "chi": chi.to_string(), "p": p.to_string(), "tautology": tautology,
            });
            writeln!(out, "{v}")?;
        } else {
            writeln!(out, "chi_{k}({f}) = {chi} over n = {n}; P({n},{k}) = {p}")?;
            writeln!(out, "tautology of G_{}: {}", k + 1, yes_no(tautology))?;
        }
        return Ok(());
    }

    let report = characteristics::chi_vector(&f, n)?;
    match (classify, args.json) {
        (false, true) => writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))?,
        (true, true) => {
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["verdict"] = Value::String(report.verdict().to_string());
            writeln!(out, "{v}")?;
        }
        (true, false) => writeln!(out, "{f}: {}", report.verdict())?,
        (false, false) => out.write_all(render_report(&report).as_bytes())?,
    }
    Ok(())
}

fn render_report(r: &ChiReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "formula: {}", r.formula);
    let _ = writeln!(s, "n: {}", r.n);
    let rows: Vec<[String; 4]> = r
        .chi
        .iter()
        .zip(&r.p_row)
        .enumerate()
        .map(|(i, (c, p))| [(i + 1).to_string(), c.to_string(), p.to_string(), yes_no(c == p).to_string()])
        .collect();
    let header = ["k", "chi_k", "P(n,k)", "G_{k+1} tautology"].map(String::from);
    s.push_str(&align(std::iter::once(header).chain(rows).collect()));
    let _ = writeln!(s, "boolean models: {}", r.boolean_model_count);
    let _ = writeln!(s, "classical tautology: {}", yes_no(r.classical_tautology));
    let _ = writeln!(s, "classical contradiction: {}", yes_no(r.classical_contradiction));
    let _ = writeln!(s, "G_inf tautology: {}", yes_no(r.godel_infinity_tautology));
    let least = r.least_k_not_tautology.map_or("none".to_string(), |k| k.to_string());
    let _ = writeln!(s, "least k not tautology: {least}");
    s
}

/// Right-aligns columns separated by two spaces.
fn align<const W: usize>(rows: Vec<[String; W]>) -> String {
    let widths: Vec<usize> = (0..W).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
        let _ = writeln!(s, "{}", line.join("  "));
    }
    s
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> CliResult {
    if args.max_n == 0 || args.max_k == 0 {
        return Err(CliError::InvalidArgs("--max-n and --max-k must be positive".into()));
    }
    let mut counts = CountTable::new();
    let table = if args.tree {
        counts.tree_table(args.max_n, args.max_k)
    } else {
        counts.pattern_table(args.max_n, args.max_k)
    };
    if args.json {
        let v: Vec<Vec<String>> = table.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?;
        return Ok(());
    }
    let mut cells: Vec<Vec<String>> = Vec::new();
    cells.push(std::iter::once("n\\k".to_string()).chain((1..=args.max_k).map(|k| k.to_string())).collect());
    for (i, row) in table.iter().enumerate() {
        cells.push(std::iter::once((i + 1).to_string()).chain(row.iter().map(|x| x.to_string())).collect());
    }
    let cols = args.max_k + 1;
    let widths: Vec<usize> = (0..cols).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    for row in cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
        writeln!(out, "{}", line.join("  "))?;
    }
    Ok(())
}

fn cmd_patterns(cli: &Cli, args: &PatternsArgs, out: &mut dyn Write) -> CliResult {
    if args.n == 0 {
        return Err(CliError::InvalidArgs("--n must be at least 1".into()));
    }
    let height = args.max_height.unwrap_or(args.n + 1);
    if height == 0 {
        return Err(CliError::InvalidArgs("--max-height must be at least 1".into()));
    }
    let total = counting::pattern_count(args.n, height);
    if args.count {
        if args.json {
            writeln!(out, "{}", json!({"n": args.n, "max_height": height, "count": total.to_string()}))?;
        } else {
            writeln!(out, "{total}")?;
        }
        return Ok(());
    }
    let guard = limit(cli, DEFAULT_LIST_LIMIT)?;
    check_limit("pattern listing", &total, guard)?;
    if args.list {
        if args.json {
            let items: Vec<Value> = patterns::enumerate(args.n, height)
                .map(|p| json!({"pattern": p.to_string(), "height": p.height()}))
                .collect();
            writeln!(out, "{}", Value::Array(items))?;
        } else {
            for p in patterns::enumerate(args.n, height) {
                writeln!(out, "{p}\t{}", p.height())?;
            }
        }
        return Ok(());
    }
    let path = args.dot.as_ref().expect("clap enforces one mode");
    let index = PatternIndex::new(args.n, height, guard)?;
    let dot = patterns::forest_dot(&index);
    if path.as_os_str() == "-" {
        out.write_all(dot.as_bytes())?;
    } else {
        std::fs::write(path, dot)?;
        let roots = index.iter().filter(|p| p.parent().is_none()).count();
        writeln!(out, "wrote {} nodes in {roots} trees to {}", index.len(), path.display())?;
    }
    Ok(())
}

fn parse_rational(s: &str) -> CliResult<BigRational> {
    let bad = || CliError::InvalidArgs(format!("{s:?} is not a rational number"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == 0.into() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn build_valuation(args: &ValuationArgs, guard: u64) -> CliResult<Option<Valuation>> {
    let mut nu: Option<Valuation> = None;
    if let Some(coeffs) = &args.chi {
        let coeffs = coeffs.split(',').map(parse_rational).collect::<CliResult<Vec<_>>>()?;
        nu = Some(Valuation::chi_combination(args.n, &coeffs, guard)?);
    }
    for text in &args.indicator {
        let p: OrderPattern = text.parse()?;
        if p.n() != args.n {
            return Err(CliError::InvalidArgs(format!("pattern {p} has {} variables, expected {}", p.n(), args.n)));
        }
        let e = Valuation::indicator(&p);
        nu = Some(match nu {
            Some(v) => v.add(&e)?,
            None => e,
        });
    }
    Ok(nu)
}

fn cmd_valuations(cli: &Cli, cmd: &ValuationsCommand, out: &mut dyn Write) -> CliResult {
    let guard = limit(cli, DEFAULT_DENSE_LIMIT)?;
    match cmd {
        ValuationsCommand::Dims(a) => {
            let dims = valuations::dimensions(a.n, guard)?;
            if a.json {
                writeln!(out, "{}", serde_json::to_string(&dims).expect("serializable"))?;
            } else {
                writeln!(out, "n = {}\nv = {}\ni_perm = {}\nc = {}", dims.n, dims.v, dims.i_perm, dims.c)?;
            }
        }
        ValuationsCommand::Det(a) => {
            let m = valuations::independence_matrix(a.n)?;
            let det = valuations::determinant(&m)?;
            let rows: Vec<Vec<String>> = m.matrix().iter().map(|r| r.iter().map(rational_string).collect()).collect();
            if a.json {
                writeln!(out, "{}", json!({"n": a.n, "matrix": rows, "determinant": rational_string(&det)}))?;
            } else {
                for r in &rows {
                    writeln!(out, "{}", r.join(" "))?;
                }
                writeln!(out, "det = {}", rational_string(&det))?;
            }
        }
        ValuationsCommand::Invariant(a) => {
            let dim = valuations::invariant_dimension(a.n, guard)?;
            let v = match build_valuation(a, guard)? {
                Some(nu) => json!({"n": a.n, "i_perm": dim, "invariant": valuations::is_invariant(&nu, guard)?}),
                None => {
                    let chis = (1..=a.n + 1)
                        .map(|k| valuations::is_invariant(&valuations::chi_as_valuation(a.n, k, guard)?, guard))
                        .collect::<Result<Vec<bool>, Error>>()?;
                    json!({"n": a.n, "i_perm": dim, "chis_invariant": chis})
                }
            };
            if a.json {
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "i_perm = {dim}")?;
                if let Some(b) = v.get("invariant") {
                    writeln!(out, "invariant: {}", yes_no(b.as_bool() == Some(true)))?;
                } else {
                    writeln!(
                        out,
                        "every chi_k invariant: {}",
                        yes_no(v["chis_invariant"].as_array().is_some_and(|a| a.iter().all(|b| b == true)))
                    )?;
                }
            }
        }
        ValuationsCommand::Span(a) => {
            let nu = build_valuation(a, guard)?
                .ok_or_else(|| CliError::InvalidArgs("give --indicator and/or --chi to describe a valuation".into()))?;
            let coeffs = valuations::in_span_of_chis(&nu, guard)?;
            let strings = coeffs.as_ref().map(|c| c.iter().map(rational_string).collect::<Vec<_>>());
            if a.json {
                writeln!(out, "{}", json!({"n": a.n, "in_span": coeffs.is_some(), "coefficients": strings}))?;
            } else {
                match strings {
                    Some(c) => writeln!(out, "in span: yes\ncoefficients: {}", c.join(", "))?,
                    None => writeln!(out, "in span: no")?,
                }
            }
        }
    }
    Ok(())
}

fn cmd_oracle(cmd: &OracleCommand, out: &mut dyn Write) -> CliResult {
    match cmd {
        OracleCommand::Chi { formula, vars, k, json: as_json } => {
            let (f, n) = formula_and_n(formula, *vars)?;
            if *k == 0 {
                return Err(CliError::InvalidArgs("--k must be at least 1".into()));
            }
            let brute = oracle::brute_chi(&f, n, *k)?;
            let fast = characteristics::chi(&f, n, *k)?;
            if *as_json {
                let v = json!({
                    "formula": f.to_string(), "n": n, "k": k,
                    "brute_chi": brute.to_string(), "chi": fast.to_string(), "agree": brute == fast,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "brute force: {brute}\npattern count: {fast}\nagree: {}", yes_no(brute == fast))?;
            }
        }
        OracleCommand::Classes { n, k, json: as_json } => {
            let brute = oracle::brute_class_count(*n, *k)?;
            let p = counting::pattern_count(*n, *k);
            if *as_json {
                let v = json!({"n": n, "k": k, "brute_classes": brute.to_string(), "p": p.to_string(), "agree": brute == p});
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "brute force: {brute}\nP({n},{k}): {p}\nagree: {}", yes_no(brute == p))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let mut out = Vec::new();
        run(std::iter::once("godel-chi").chain(args.iter().copied()), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    fn run_err(args: &[&str]) -> i32 {
        let mut out = Vec::new();
        run(std::iter::once("godel-chi").chain(args.iter().copied()), &mut out).unwrap_err().exit_code()
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-1/2").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational(" 3 ").unwrap(), BigRational::from_integer(3.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_err(&["chi", "X1 &"]), 2);
        assert_eq!(run_err(&["chi", "1"]), 3);
        assert_eq!(run_err(&["chi", "X3", "--vars", "2"]), 3);
        assert_eq!(run_err(&["chi", "X1", "--k", "0"]), 3);
        assert_eq!(run_err(&["table", "--max-n", "0"]), 3);
        assert_eq!(run_err(&["valuations", "dims", "--n", "7"]), 4);
        assert_eq!(run_err(&["bogus"]), 3);
    }

    #[test]
    fn max_patterns_flag_overrides_guard() {
        assert_eq!(run_err(&["--max-patterns", "10", "patterns", "--n", "3", "--list"]), 4);
        assert_eq!(run_ok(&["--max-patterns", "51", "patterns", "--n", "3", "--list"]).lines().count(), 51);
    }

    #[test]
    fn help_succeeds() {
        assert!(run_ok(&["--help"]).contains("Usage"));
    }

    #[test]
    fn aligned_report() {
        let text = run_ok(&["chi", "~~X1"]);
        assert!(text.contains("formula: ~~X1"));
        assert!(text.contains("least k not tautology: 1"));
    }
}
