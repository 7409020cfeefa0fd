//! `twoline`: count, tabulate, enumerate, map and verify two-line noncrossing
//! matchings and the families equinumerous with them.

mod output;

use std::io::{self, BufRead, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twoline::bijections::{apply_named, BIJECTION_NAMES};
use twoline::counting::{
    a_binomial, a_table, asymptotic_estimate_for, b_table, d_count, m_count, r_diag, r_diag_sequence,
    s_count, z_table, BigCount, TriangleTable,
};
use twoline::objects::*;
use twoline::parallel::Execution;
use twoline::series::PartSet;
use twoline::verify::{run_suite, SUITES};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
    Core(twoline::Error),
    ChecksFailed,
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<twoline::Error> for CliError {
    fn from(e: twoline::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::ChecksFailed => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Core(twoline::Error::InstanceTooLarge { .. }) => 4,
            CliError::Core(_) => 2,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Parser)]
#[command(name = "twoline", version, about = "Exact counts, tables, enumeration and bijections for two-line noncrossing matchings")]
#[command(after_help = "Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error, 4 instance too large.")]
struct Cli {
    /// Output format; not every command accepts every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Stop enumeration after this many objects.
    #[arg(long, global = true)]
    limit: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count.
    ///
    /// a, b, d take --k and --n; m takes length --k and end height --n (may be
    /// negative); s(n, k) and z(n, k) take row --n and total --k; r takes --n.
    Count {
        #[arg(value_enum)]
        family: CountFamily,
        #[arg(long, default_value_t = 0)]
        k: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
    },
    /// Print a triangle up to a maximal index sum (row index for z).
    ///
    /// The bfile format reads the rows left to right as one sequence starting
    /// at index 0.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        max: usize,
    },
    /// List objects of one family, one canonical encoding per line.
    Enumerate(EnumerateArgs),
    /// Apply a bijection to objects given as arguments or one per stdin line.
    Map {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(BIJECTION_NAMES))]
        name: String,
        input: Option<String>,
        #[arg(long)]
        inverse: bool,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        max: usize,
        /// Run the checks on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Write a b-file.
    ///
    /// Triangles are read by rows and the diagonal starts at n = 0, all at
    /// offset 0. Lacing counts ((n-1)!)^2 a(n,n) are indexed by n from 1.
    Export {
        #[arg(value_enum)]
        sequence: Sequence,
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
    /// Compare r(n) with the main term of its asymptotic expansion.
    Asymptotic {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFamily {
    A,
    B,
    Z,
    D,
    M,
    S,
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    A,
    B,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    #[value(name = "A079487")]
    A079487,
    #[value(name = "A051286")]
    A051286,
    #[value(name = "A125250")]
    A125250,
    #[value(name = "A078698")]
    A078698,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Matching,
    Motzkin,
    Domino,
    Closed,
    S012,
    Composition,
    Weighted,
    Chords,
    Lacing,
    Staircase,
    Steps,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Right,
    NonSelfCrossing,
}

#[derive(clap::Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Fence size for closed sets.
    #[arg(long)]
    m: Option<usize>,
    /// Closed-set size.
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    cost: Option<usize>,
    /// Allowed parts: a list like "1,2", or "odd", or "ge2".
    #[arg(long, default_value = "1,2")]
    set: String,
    /// Keep only compositions with this many summands.
    #[arg(long)]
    summands: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Right)]
    mode: Mode,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Io(err) => eprintln!("error: {err}"),
                CliError::Core(err) => eprintln!("error: {err}"),
                CliError::ChecksFailed => eprintln!("verification failed"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let mut w = output::open(cli.out.as_deref())?;
    let result = match &cli.command {
        Command::Count { family, k, n } => count(&mut *w, cli.format, *family, *k, *n),
        Command::Table { kind, max } => table(&mut *w, cli.format, *kind, *max),
        Command::Enumerate(args) => enumerate(&mut *w, cli.format, cli.limit, args),
        Command::Map { name, input, inverse } => map(&mut *w, cli.format, name, input.as_deref(), *inverse),
        Command::Verify { suite, max, sequential } => verify(&mut *w, cli.format, suite, *max, *sequential),
        Command::Export { sequence, terms } => export(&mut *w, cli.format, *sequence, *terms),
        Command::Asymptotic { n } => asymptotic(&mut *w, cli.format, *n),
    };
    // flush even when checks failed so the report is complete
    let flushed = w.flush();
    result?;
    flushed?;
    Ok(())
}

fn text_or_json(format: Format, what: &str) -> Result<(), CliError> {
    match format {
        Format::Text | Format::Json => Ok(()),
        _ => Err(usage(format!("{what} supports --format text or json"))),
    }
}

fn nonneg(name: &str, v: i64) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| usage(format!("--{name} must be nonnegative, got {v}")))
}

fn count(w: &mut dyn Write, format: Format, family: CountFamily, k: i64, n: i64) -> Result<(), CliError> {
    text_or_json(format, "count")?;
    let value = match family {
        CountFamily::M => m_count(nonneg("k", k)?, n),
        _ => {
            let (k, n) = (nonneg("k", k)?, nonneg("n", n)?);
            match family {
                CountFamily::A => a_binomial(k, n),
                CountFamily::B => b_table(k + n).get(k, n).cloned().unwrap_or_default(),
                CountFamily::Z => z_table(n).get(n, k).cloned().unwrap_or_default(),
                CountFamily::D => d_count(k, n),
                CountFamily::S => s_count(n, k),
                CountFamily::R => r_diag(n)?,
                CountFamily::M => unreachable!(),
            }
        }
    };
    match format {
        Format::Json => output::json(w, &output::big(&value)),
        _ => Ok(writeln!(w, "{value}")?),
    }
}

fn triangle(kind: TableKind, max: usize) -> TriangleTable {
    match kind {
        TableKind::A => a_table(max),
        TableKind::B => b_table(max),
        TableKind::Z => z_table(max),
    }
}

fn table(w: &mut dyn Write, format: Format, kind: TableKind, max: usize) -> Result<(), CliError> {
    let t = triangle(kind, max);
    let rows = t.rows();
    match format {
        Format::Text => {
            for r in &rows {
                writeln!(w, "{}", output::joined(r, " "))?;
            }
        }
        Format::Csv => {
            for r in &rows {
                writeln!(w, "{}", output::joined(r, ","))?;
            }
        }
        Format::Json => output::json(w, &output::big_rows(&rows))?,
        Format::Bfile => output::bfile(w, 0, &t.flatten())?,
    }
    Ok(())
}

fn part_set(text: &str) -> Result<PartSet, CliError> {
    match text {
        "odd" => Ok(PartSet::Odd),
        "ge2" | ">=2" => Ok(PartSet::AtLeastTwo),
        list => {
            let parts: Vec<usize> = list
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| usage(format!("bad part {p:?} in --set"))))
                .collect::<Result<_, _>>()?;
            Ok(PartSet::finite(parts)?)
        }
    }
}

/// Feeds objects to `emit` until `limit` is reached or writing fails.
struct Emitter<'w> {
    w: &'w mut dyn Write,
    limit: Option<u64>,
    seen: u64,
    lines: Option<Vec<String>>,
    err: Option<io::Error>,
}

impl Emitter<'_> {
    fn push(&mut self, line: String) -> ControlFlow<()> {
        if self.limit.is_some_and(|l| self.seen >= l) {
            return ControlFlow::Break(());
        }
        self.seen += 1;
        match &mut self.lines {
            Some(lines) => lines.push(line),
            None => {
                if let Err(e) = writeln!(self.w, "{line}") {
                    self.err = Some(e);
                    return ControlFlow::Break(());
                }
            }
        }
        if self.limit.is_some_and(|l| self.seen >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("{family} needs --{flag}")))
}

fn enumerate(w: &mut dyn Write, format: Format, limit: Option<u64>, a: &EnumerateArgs) -> Result<(), CliError> {
    let json = match format {
        Format::Text | Format::Csv => false,
        Format::Json => true,
        Format::Bfile => return Err(usage("enumerate supports --format text, csv or json")),
    };
    let mut em = Emitter { w, limit, seen: 0, lines: json.then(Vec::new), err: None };
    if limit == Some(0) {
        return finish_enumeration(em);
    }
    let kn = |name: &str| -> Result<(usize, usize), CliError> {
        Ok((need(a.k, "k", name)?, nonneg("n", need(a.n, "n", name)?)?))
    };
    macro_rules! visit {
        ($call:expr) => {
            $call(&mut |x| em.push(x.to_string()))?
        };
    }
    match a.family {
        Family::Matching => {
            let (k, n) = kn("matching")?;
            visit!(|s| visit_matchings(k, n, s))
        }
        Family::Motzkin => {
            let k = need(a.k, "k", "motzkin")?;
            let n = need(a.n, "n", "motzkin")?;
            visit!(|s| visit_peakless(k, n, s))
        }
        Family::Domino => {
            let (k, n) = kn("domino")?;
            visit!(|s| visit_domino_pairs(k, n, s))
        }
        Family::Closed => {
            let m = need(a.m, "m", "closed")?;
            visit!(|s| visit_closed_sets(m, a.size, s))
        }
        Family::S012 => {
            let (k, n) = kn("s012")?;
            visit!(|s| visit_012(n, k, s))
        }
        Family::Composition => {
            let set = part_set(&a.set)?;
            let n = nonneg("n", need(a.n, "n", "composition")?)?;
            let filter = a.summands.map(CompositionFilter::Summands);
            visit!(|s| visit_compositions(&set, n, filter, s))
        }
        Family::Weighted => {
            let cost = need(a.cost, "cost", "weighted")?;
            visit!(|s| visit_weighted_paths(cost, s))
        }
        Family::Chords => {
            let n = nonneg("n", need(a.n, "n", "chords")?)?;
            visit!(|s| visit_chords(n, s))
        }
        Family::Lacing => {
            let (k, n) = kn("lacing")?;
            let mode = match a.mode {
                Mode::Right => LacingMode::Right,
                Mode::NonSelfCrossing => LacingMode::NonSelfCrossing,
            };
            visit!(|s| visit_lacings(k, n, mode, s))
        }
        Family::Staircase => {
            let (k, n) = kn("staircase")?;
            visit!(|s| visit_staircases(k, n, s))
        }
        Family::Steps => {
            let (k, n) = kn("steps")?;
            visit!(|s| visit_b_step_paths(k, n, s))
        }
    }
    finish_enumeration(em)
}

fn finish_enumeration(em: Emitter<'_>) -> Result<(), CliError> {
    if let Some(e) = em.err {
        return Err(e.into());
    }
    if let Some(lines) = em.lines {
        output::json(em.w, &lines)?;
    }
    Ok(())
}

fn map(w: &mut dyn Write, format: Format, name: &str, input: Option<&str>, inverse: bool) -> Result<(), CliError> {
    text_or_json(format, "map")?;
    let inputs: Vec<String> = match input {
        Some(s) => vec![s.to_string()],
        None => io::stdin()
            .lock()
            .lines()
            .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
            .collect::<Result<_, _>>()?,
    };
    let mut outputs = Vec::new();
    for i in &inputs {
        outputs.push(apply_named(name, i.trim(), inverse)?);
    }
    match format {
        Format::Json => {
            let pairs: Vec<Value> = inputs.iter().zip(&outputs).map(|(i, o)| json!({"input": i.trim(), "output": o})).collect();
            output::json(w, &pairs)
        }
        _ => {
            for o in &outputs {
                writeln!(w, "{o}")?;
            }
            Ok(())
        }
    }
}

fn verify(w: &mut dyn Write, format: Format, suite: &str, max: usize, sequential: bool) -> Result<(), CliError> {
    text_or_json(format, "verify")?;
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(usage(format!("unknown suite {suite:?}; expected all or one of {}", SUITES.join(", "))));
    }
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let report = run_suite(suite, max, exec)?;
    match format {
        Format::Json => output::json(w, &report)?,
        _ => writeln!(w, "{report}")?,
    }
    if report.overall {
        Ok(())
    } else {
        Err(CliError::ChecksFailed)
    }
}

/// Enough triangle rows to hold `terms` entries read by rows.
fn rows_for(terms: usize, row_len: impl Fn(usize) -> usize) -> usize {
    let (mut rows, mut total) = (0, 0);
    while total < terms {
        total += row_len(rows);
        rows += 1;
    }
    rows
}

fn export(w: &mut dyn Write, format: Format, sequence: Sequence, terms: usize) -> Result<(), CliError> {
    if !matches!(format, Format::Text | Format::Bfile) {
        return Err(usage("export always writes a b-file"));
    }
    let take = |v: Vec<BigCount>| v.into_iter().take(terms).collect::<Vec<_>>();
    let (offset, values) = match sequence {
        Sequence::A079487 => {
            let rows = rows_for(terms, |m| m + 1);
            (0, take(z_table(rows.saturating_sub(1)).flatten()))
        }
        Sequence::A125250 => {
            let rows = rows_for(terms, |s| s + 1);
            (0, take(b_table(rows.saturating_sub(1)).flatten()))
        }
        Sequence::A051286 => {
            if terms == 0 {
                (0, Vec::new())
            } else {
                (0, r_diag_sequence(terms - 1)?)
            }
        }
        Sequence::A078698 => {
            let mut fact = BigCount::from(1u32);
            let mut values = Vec::with_capacity(terms);
            for n in 1..=terms {
                if n > 1 {
                    fact *= n - 1;
                }
                values.push(&fact * &fact * a_binomial(n, n));
            }
            (1, values)
        }
    };
    output::bfile(w, offset, &values)
}

fn asymptotic(w: &mut dyn Write, format: Format, n: usize) -> Result<(), CliError> {
    text_or_json(format, "asymptotic")?;
    if n == 0 {
        return Err(usage("asymptotic needs --n >= 1"));
    }
    let exact = r_diag(n)?;
    let est = asymptotic_estimate_for(n, &exact);
    match format {
        Format::Json => output::json(
            w,
            &json!({
                "n": n,
                "exact": output::big(&exact),
                "estimate_log": est.estimate_log,
                "exact_log": est.exact_log,
                "relative_error": est.relative_error,
            }),
        ),
        _ => {
            writeln!(w, "r({n}) = {exact}")?;
            writeln!(w, "ln r({n}) = {:.6}", est.exact_log)?;
            writeln!(w, "ln main term = {:.6}", est.estimate_log)?;
            writeln!(w, "relative error = {:.6e}", est.relative_error)?;
            Ok(())
        }
    }
}
