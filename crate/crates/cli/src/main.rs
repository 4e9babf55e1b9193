//! `pqc`: capacity outer bounds and monomial orders from the command line.

mod record;
mod verify;

use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pqc_core::search::default_fixed_colors;
use pqc_core::{run, BoundParams, ColorOrder, Error, FieldSpec, Method, SearchConfig, TiePolicy};

use record::{Format, Knobs, Run};
use verify::Suite;

#[derive(Parser)]
#[command(
    name = "pqc",
    version,
    about = "Capacity outer bounds for private quadratic monomial computation"
)]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, global = true, env = "PQC_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one order with a constructive method and evaluate it.
    Order(OrderArgs),
    /// Exhaustive or directed random search.
    Search(SearchArgs),
    /// One row per f, one column per method.
    Table(TableArgs),
    /// Run an invariant suite.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long)]
    f: usize,
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leading color classes held fixed (E-EC, random search).
    #[arg(long)]
    fixed_colors: Option<usize>,
    #[arg(long, value_enum, default_value_t = Tie::Lex)]
    tie: Tie,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Print the bound as a hexadecimal float.
    #[arg(long)]
    raw: bool,
    /// Report a wall time of 0 so that output is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Lex,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderMethod {
    Ec,
    #[value(name = "e-ec")]
    EEc,
    Ldf,
    Ebg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchMethod {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Colors {
    Natural,
    Shifted,
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long, value_enum)]
    method: OrderMethod,
    #[command(flatten)]
    common: Common,
    /// EC color-class order (default: natural for even f, shifted for odd f).
    #[arg(long, value_enum)]
    colors: Option<Colors>,
    /// Cap on E-EC color permutations.
    #[arg(long)]
    cap: Option<u128>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    method: SearchMethod,
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// Lift the exhaustive-search size guard.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    f_range: (usize, usize),
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long, value_delimiter = ',', default_value = "ec,e-ec,ldf,ebg")]
    methods: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draws per f for the random method.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// One row per (f, method) with evaluations and timing.
    #[arg(long)]
    long: bool,
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    no_timing: bool,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 5)]
    f: usize,
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start `{a}`"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

enum Failure {
    Usage(String),
    Guard(String),
    Verify,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_guard_violation() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let outcome = match cli.command {
        Command::Order(a) => cmd_order(a),
        Command::Search(a) => cmd_search(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn configure(method: Method, c: &Common) -> Result<SearchConfig, Failure> {
    let field = FieldSpec::new(c.q)?;
    let params = BoundParams::new(c.n, c.f, field)?;
    let mut cfg = SearchConfig::new(method, params);
    cfg.seed = c.seed;
    cfg.tie_policy = match c.tie {
        Tie::Lex => TiePolicy::Lexicographic,
        Tie::Random => TiePolicy::SeededRandom,
    };
    if let Some(k) = c.fixed_colors {
        cfg.fixed_colors = k;
    }
    Ok(cfg)
}

fn execute(cfg: &SearchConfig, knobs: Knobs, raw: bool, no_timing: bool) -> Result<Run, Failure> {
    let engine = cfg.params.engine()?;
    let start = Instant::now();
    let result = run(cfg, &engine)?;
    let ms = if no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    Ok(record::build(
        cfg.method,
        cfg.params.field,
        cfg.params.n,
        knobs,
        &result,
        ms,
        raw,
    ))
}

fn emit(runs: &[Run], format: Format) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    record::write_runs(&mut out, runs, format)?;
    out.flush()?;
    Ok(())
}

fn cmd_order(a: OrderArgs) -> Result<(), Failure> {
    let method = match a.method {
        OrderMethod::Ec => Method::Ec,
        OrderMethod::EEc => Method::EnhancedEc,
        OrderMethod::Ldf => Method::Ldf,
        OrderMethod::Ebg => Method::Ebg,
    };
    let mut cfg = configure(method, &a.common)?;
    if let Some(colors) = a.colors {
        cfg.color_order = match colors {
            Colors::Natural => ColorOrder::Natural,
            Colors::Shifted => ColorOrder::Shifted,
        };
    }
    if let Some(cap) = a.cap {
        cfg.permutation_cap = cap;
    }
    let seeded = matches!(a.common.tie, Tie::Random);
    let knobs = Knobs {
        seed: seeded.then_some(cfg.seed),
        fixed_colors: (method == Method::EnhancedEc).then_some(cfg.fixed_colors),
        budget: None,
    };
    let run = execute(&cfg, knobs, a.common.raw, a.common.no_timing)?;
    emit(&[run], a.common.format)
}

fn cmd_search(a: SearchArgs) -> Result<(), Failure> {
    let method = match a.method {
        SearchMethod::Exhaustive => Method::Exhaustive,
        SearchMethod::Random => Method::DirectedRandom,
    };
    let mut cfg = configure(method, &a.common)?;
    cfg.budget = a.budget;
    cfg.force = a.force;
    let random = method == Method::DirectedRandom;
    let knobs = Knobs {
        seed: random.then_some(cfg.seed),
        fixed_colors: random.then_some(cfg.fixed_colors),
        budget: random.then_some(cfg.budget),
    };
    let run = execute(&cfg, knobs, a.common.raw, a.common.no_timing)?;
    if random {
        eprintln!("evaluations: {}", run.evaluations);
    }
    emit(&[run], a.common.format)
}

fn cmd_table(a: TableArgs) -> Result<(), Failure> {
    let methods = a
        .methods
        .iter()
        .filter(|m| !m.trim().is_empty())
        .map(|m| m.trim().parse::<Method>())
        .collect::<pqc_core::Result<Vec<_>>>()?;
    if methods.is_empty() {
        return Err(Failure::Usage("--methods needs at least one method".into()));
    }
    let field = FieldSpec::new(a.q)?;
    let mut rows: Vec<(usize, Vec<Run>)> = Vec::new();
    for f in a.f_range.0..=a.f_range.1 {
        let mut row = Vec::new();
        for &method in &methods {
            let params = BoundParams::new(a.n, f, field)?;
            let mut cfg = SearchConfig::new(method, params);
            cfg.seed = a.seed;
            cfg.budget = a.budget;
            cfg.fixed_colors = default_fixed_colors(method, f);
            let knobs = Knobs {
                seed: None,
                fixed_colors: None,
                budget: None,
            };
            row.push(execute(&cfg, knobs, a.raw, a.no_timing)?);
        }
        rows.push((f, row));
    }

    let mut sink: Box<dyn Write> = match &a.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    if a.long {
        let runs: Vec<Run> = rows.into_iter().flat_map(|(_, r)| r).collect();
        record::write_runs(&mut sink, &runs, Format::Csv)?;
    } else {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(&mut sink);
        let mut header = vec!["f".to_string()];
        header.extend(methods.iter().map(|m| m.name().to_string()));
        w.write_record(&header)?;
        for (f, row) in rows {
            let mut cells = vec![f.to_string()];
            cells.extend(row.into_iter().map(|r| r.record.bound));
            w.write_record(&cells)?;
        }
        w.flush()?;
    }
    sink.flush()?;
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let field = FieldSpec::new(a.q)?;
    let checks = verify::run_suite(a.suite, a.f, field, a.seed)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut failed = 0;
    for c in &checks {
        if !c.ok {
            failed += 1;
        }
        writeln!(
            out,
            "{} {}: {}",
            if c.ok { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        )?;
    }
    out.flush()?;
    if failed > 0 {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}
