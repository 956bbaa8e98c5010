//! Command-line front end: construction, checks, spectra, searches and
//! verification runs, reported as JSON envelopes.
//!
//! Exit codes: 0 verdict true or search completed, 1 verdict false, 2 usage
//! error or malformed input, 3 budget exhausted.

pub mod verify;

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pancyclic::checks::{
    cycle_spectrum, has_triangle_cover, is_edge_pancyclic, is_pancyclic, is_vertex_pancyclic,
    verify_distance_layer_bounds, CheckOptions, CheckReport, Evidence, Verdict,
};
use pancyclic::connectivity::connectivity_with_cut;
use pancyclic::families::FamilySpec;
use pancyclic::search::{
    max_diameter_edge_pancyclic, min_size, min_size_stream, DiameterMode, Predicate, SearchOptions, SearchOutcome,
    Source,
};
use pancyclic::{canonical_code, canonical_form, emit_dot, emit_graph6, parse_graph6, Graph};
use serde::Serialize;
use serde_json::{json, Value};

pub use verify::{Claim, VerifyReport};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// JSON schema of every report line, versioned with the crate.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

/// Environment variable holding the worker-thread count.
pub const WORKERS_ENV: &str = "PANCYCLIC_WORKERS";

/// Orders above this get [`LARGE_ORDER_BUDGET`] nodes per probe unless
/// `--budget` is given.
pub const UNLIMITED_BUDGET_ORDER: usize = 40;
pub const LARGE_ORDER_BUDGET: u64 = 100_000_000;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Wrapper around every JSON result.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: &'static str,
    pub elapsed_ms: u64,
}

#[derive(Parser, Debug)]
#[command(name = "pancyclic", version, about = "Constructions, checks and extremal searches for edge-pancyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named family member.
    Construct(ConstructArgs),
    /// Decide a predicate for graph6 input.
    Check(CheckArgs),
    /// Per-edge cycle lengths of graph6 input.
    Spectrum(SpectrumArgs),
    /// Extremal searches.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Reproduce a named result at given parameters.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Canonical graph6 and hex code of graph6 input.
    Canon(GraphInput),
}

#[derive(Args, Debug)]
struct GraphInput {
    /// graph6 strings; one per line on standard input when omitted.
    graphs: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(FamilySpec::NAMES))]
    family: String,
    /// Order (or fan size) for order-indexed families.
    #[arg(long)]
    n: Option<usize>,
    /// Block parameter for h_block and g_ring.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckPredicate {
    TriangleCover,
    EdgePancyclic,
    VertexPancyclic,
    Pancyclic,
    LayerBounds,
    Connectivity,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(value_enum)]
    predicate: CheckPredicate,
    /// Node ceiling per path probe (unlimited up to order 40).
    #[arg(long)]
    budget: Option<u64>,
    /// Required connectivity for the `connectivity` predicate.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Attach every witness cycle to positive pancyclicity reports.
    #[arg(long)]
    witnesses: bool,
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[arg(long)]
    budget: Option<u64>,
    #[command(flatten)]
    input: GraphInput,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SearchPredicate {
    EdgePancyclic,
    TriangleCover,
}

impl From<SearchPredicate> for Predicate {
    fn from(p: SearchPredicate) -> Self {
        match p {
            SearchPredicate::EdgePancyclic => Predicate::EdgePancyclic,
            SearchPredicate::TriangleCover => Predicate::TriangleCover,
        }
    }
}

#[derive(Subcommand, Debug)]
enum SearchCommand {
    /// Minimum size of a graph of the given order satisfying the predicate.
    MinSize {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        predicate: SearchPredicate,
        /// Required connectivity (default 2).
        #[arg(long, default_value_t = 2)]
        kappa: usize,
        /// Read candidate graphs from a graph6 file (`-` for standard input)
        /// instead of generating them.
        #[arg(long)]
        stream: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Maximum diameter of an edge-pancyclic graph of the given order.
    MaxDiameter {
        #[arg(long)]
        order: usize,
        /// Examine every edge-pancyclic graph of the order (up to 9).
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// 2-connected triangle-cover minimum and its extremal graphs.
    Lemma1 {
        #[arg(long)]
        n: usize,
    },
    /// 3-connected triangle-cover minimum and the wheel.
    Lemma2 {
        #[arg(long)]
        n: usize,
    },
    /// Connected triangle-cover minimum.
    Erdos {
        #[arg(long)]
        n: usize,
    },
    /// Order, size and edge-pancyclicity of the ring G(k).
    Thm5 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Maximum diameter of edge-pancyclic graphs.
    Thm6 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Path and cycle properties of the block H(k).
    HkProps {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Where output goes.
struct Io<'a> {
    stdin: &'a mut (dyn BufRead + Send),
    stdout: &'a mut (dyn Write + Send),
    stderr: &'a mut (dyn Write + Send),
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::True => EXIT_TRUE,
        Verdict::False => EXIT_FALSE,
        Verdict::Unknown => EXIT_BUDGET,
    }
}

/// Combines per-graph exit codes: false wins over exhausted budgets.
fn combine(a: i32, b: i32) -> i32 {
    if a == EXIT_FALSE || b == EXIT_FALSE {
        EXIT_FALSE
    } else {
        a.max(b)
    }
}

fn search_code(out: &SearchOutcome) -> i32 {
    if out.exhaustive || out.source == Source::Construction {
        EXIT_TRUE
    } else {
        EXIT_BUDGET
    }
}

fn default_budget(g: &Graph, budget: Option<u64>) -> Option<u64> {
    budget.or((g.order() > UNLIMITED_BUDGET_ORDER).then_some(LARGE_ORDER_BUDGET))
}

fn workers_from_env() -> Result<Option<usize>, Usage> {
    match std::env::var(WORKERS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(Some(w)),
            _ => Err(Usage(format!("{WORKERS_ENV} must be a positive integer, got {s:?}"))),
        },
        Err(_) => Ok(None),
    }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run(
    argv: &[String],
    stdin: &mut (dyn BufRead + Send),
    stdout: &mut (dyn Write + Send),
    stderr: &mut (dyn Write + Send),
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_TRUE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{text}") } else { write!(stdout, "{text}") };
            return code;
        }
    };
    let workers = match workers_from_env() {
        Ok(w) => w,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    let pool = workers.and_then(|w| rayon::ThreadPoolBuilder::new().num_threads(w).build().ok());
    let result = match pool {
        Some(pool) => pool.install(|| dispatch(cli.command, &mut io)),
        None => dispatch(cli.command, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(io: &mut Io, command: &str, inputs: Value, result: impl Serialize, start: Instant) -> Result<(), Usage> {
    let env = ReportEnvelope {
        command: command.to_string(),
        inputs,
        result: serde_json::to_value(result)?,
        version: VERSION,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    writeln!(io.stdout, "{}", serde_json::to_string(&env)?)?;
    Ok(())
}

/// graph6 inputs from the arguments or, when none are given, from standard
/// input, with their line numbers.
fn read_graphs(io: &mut Io, args: &[String]) -> Result<Vec<(usize, String)>, Usage> {
    let lines: Vec<String> = if args.is_empty() {
        io.stdin.lines().collect::<Result<_, _>>()?
    } else {
        args.to_vec()
    };
    let out: Vec<(usize, String)> = lines
        .into_iter()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if out.is_empty() {
        return Err(Usage("no graph6 input".into()));
    }
    Ok(out)
}

fn parse_line(line: usize, text: &str) -> Result<Graph, Usage> {
    parse_graph6(text).map_err(|e| Usage(format!("input line {line}: malformed graph6 {text:?}: {e}")))
}

/// Runs `each` on every input graph, stopping at the first malformed one.
fn batch(
    io: &mut Io,
    args: &[String],
    mut each: impl FnMut(&mut Io, &str, &Graph) -> Result<i32, Usage>,
) -> Result<i32, Usage> {
    let mut code = EXIT_TRUE;
    for (line, text) in read_graphs(io, args)? {
        let g = parse_line(line, &text)?;
        code = combine(code, each(io, &text, &g)?);
    }
    Ok(code)
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, Usage> {
    match command {
        Command::Construct(a) => construct(io, a),
        Command::Check(a) => check(io, a),
        Command::Spectrum(a) => spectrum(io, a),
        Command::Search(s) => search(io, s),
        Command::Verify(v) => run_verify(io, v),
        Command::Canon(input) => canon(io, input),
    }
}

fn construct(io: &mut Io, a: ConstructArgs) -> Result<i32, Usage> {
    let start = Instant::now();
    let takes_k = FamilySpec::takes_k(&a.family);
    let param = match (takes_k, a.n, a.k) {
        (true, None, Some(k)) => k,
        (false, Some(n), None) => n,
        (true, _, _) => return Err(Usage(format!("{} takes --k", a.family))),
        (false, _, _) => return Err(Usage(format!("{} takes --n", a.family))),
    };
    let spec = FamilySpec::from_name(&a.family, param).expect("name checked by the parser");
    let lg = spec.build()?;
    match a.format {
        Format::Graph6 => writeln!(io.stdout, "{}", emit_graph6(&lg.graph)?)?,
        Format::Dot => write!(io.stdout, "{}", emit_dot(&lg.graph, Some(&lg.labels)))?,
        Format::Json => {
            let result = json!({
                "family": a.family,
                "param": param,
                "graph6": emit_graph6(&lg.graph)?,
                "order": lg.graph.order(),
                "size": lg.graph.size(),
                "labels": lg.labels,
            });
            emit(io, "construct", json!({ "family": a.family, "param": param }), result, start)?;
        }
    }
    Ok(EXIT_TRUE)
}

fn connectivity_report(g: &Graph, k: usize) -> Result<CheckReport, Usage> {
    let (kappa, cut) = connectivity_with_cut(g)?;
    let mut r = CheckReport::new(format!("connectivity>={k}"), Verdict::from_bool(kappa >= k));
    r.evidence.push(Evidence::Connectivity { kappa, required: k });
    if let Some(vertices) = cut {
        r.evidence.push(Evidence::VertexCut { vertices });
    }
    Ok(r)
}

fn check(io: &mut Io, a: CheckArgs) -> Result<i32, Usage> {
    let name = a.predicate.to_possible_value().expect("no skipped variants").get_name().to_string();
    batch(io, &a.input.graphs, |io, text, g| {
        let start = Instant::now();
        let opts = CheckOptions { budget: default_budget(g, a.budget), parallel: true, witnesses: a.witnesses };
        let report = match a.predicate {
            CheckPredicate::TriangleCover => has_triangle_cover(g),
            CheckPredicate::EdgePancyclic => is_edge_pancyclic(g, opts)?,
            CheckPredicate::VertexPancyclic => is_vertex_pancyclic(g, opts)?,
            CheckPredicate::Pancyclic => is_pancyclic(g, opts)?,
            CheckPredicate::LayerBounds => verify_distance_layer_bounds(g)?,
            CheckPredicate::Connectivity => connectivity_report(g, a.k)?,
        };
        let inputs = json!({ "predicate": name, "graph6": text, "budget": opts.budget });
        emit(io, "check", inputs, &report, start)?;
        Ok(verdict_code(report.verdict))
    })
}

fn spectrum(io: &mut Io, a: SpectrumArgs) -> Result<i32, Usage> {
    batch(io, &a.input.graphs, |io, text, g| {
        let start = Instant::now();
        let opts = CheckOptions { budget: default_budget(g, a.budget), parallel: true, witnesses: false };
        let s = cycle_spectrum(g, opts);
        let code = if s.complete { EXIT_TRUE } else { EXIT_BUDGET };
        emit(io, "spectrum", json!({ "graph6": text, "budget": opts.budget }), &s, start)?;
        Ok(code)
    })
}

fn canon(io: &mut Io, input: GraphInput) -> Result<i32, Usage> {
    batch(io, &input.graphs, |io, text, g| {
        let start = Instant::now();
        let result = json!({
            "graph6": emit_graph6(&canonical_form(g))?,
            "code": canonical_code(g).hex(),
            "order": g.order(),
            "size": g.size(),
        });
        emit(io, "canon", json!({ "graph6": text }), result, start)?;
        Ok(EXIT_TRUE)
    })
}

fn search_stats(io: &mut Io, out: &SearchOutcome) -> Result<(), Usage> {
    let enumerated: u64 = out.counts.iter().map(|c| c.enumerated).sum();
    writeln!(
        io.stderr,
        "order {}: sizes {}..={}, {} classes enumerated, {} passing, value {:?}, exhaustive {}, {} ms",
        out.order,
        out.sizes[0],
        out.sizes[1],
        enumerated,
        out.total_passing(),
        out.value,
        out.exhaustive,
        out.elapsed_ms
    )?;
    Ok(())
}

fn search(io: &mut Io, s: SearchCommand) -> Result<i32, Usage> {
    let start = Instant::now();
    let (out, inputs) = match s {
        SearchCommand::MinSize { order, predicate, kappa, stream, budget } => {
            let opts = SearchOptions { budget, workers: None };
            let p = Predicate::from(predicate);
            let out = match &stream {
                None => min_size(order, p, kappa, opts)?,
                Some(path) if path.as_os_str() == "-" => min_size_stream(order, p, kappa, &mut *io.stdin, opts)?,
                Some(path) => {
                    let file = File::open(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
                    min_size_stream(order, p, kappa, BufReader::new(file), opts)?
                }
            };
            let inputs = json!({
                "search": "min-size",
                "order": order,
                "predicate": p.name(),
                "kappa": kappa,
                "stream": stream.map(|p| p.display().to_string()),
                "budget": budget,
            });
            (out, inputs)
        }
        SearchCommand::MaxDiameter { order, exhaustive, budget } => {
            let opts = SearchOptions { budget, workers: None };
            let mode = if exhaustive { DiameterMode::Exhaustive } else { DiameterMode::Witness };
            let out = max_diameter_edge_pancyclic(order, mode, opts)?;
            let inputs = json!({ "search": "max-diameter", "order": order, "exhaustive": exhaustive, "budget": budget });
            (out, inputs)
        }
    };
    search_stats(io, &out)?;
    emit(io, "search", inputs, &out, start)?;
    Ok(search_code(&out))
}

fn run_verify(io: &mut Io, v: VerifyCommand) -> Result<i32, Usage> {
    let start = Instant::now();
    let opts = SearchOptions::default();
    let report = match v {
        VerifyCommand::Lemma1 { n } => verify::lemma1(n, opts)?,
        VerifyCommand::Lemma2 { n } => verify::lemma2(n, opts)?,
        VerifyCommand::Erdos { n } => verify::erdos(n, opts)?,
        VerifyCommand::Thm5 { k, budget } => verify::thm5(k, budget)?,
        VerifyCommand::Thm6 { n, exhaustive } => verify::thm6(n, exhaustive, opts)?,
        VerifyCommand::HkProps { k, budget } => verify::hk_props(k, budget)?,
    };
    for c in &report.claims {
        let mark = match c.holds {
            Verdict::True => "pass",
            Verdict::False => "FAIL",
            Verdict::Unknown => "undecided",
        };
        writeln!(io.stderr, "{} {}: {mark} (expected {}, observed {})", report.name, c.name, c.expected, c.observed)?;
    }
    let inputs = json!({ "verify": report.name, "params": report.params });
    emit(io, "verify", inputs, &report, start)?;
    Ok(verdict_code(report.verdict))
}
