//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O or
//! input error, 4 oracle limit exceeded.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::engine::{run, Algorithm, EnumConfig, Reductions};
use crate::error::{IngestError, OracleError};
use crate::global::{global_reduce, GlobalConfig, ReductionLedger};
use crate::graph::{compact, CompactGraph, DeadVertices, EditableGraph};
use crate::io::{gen_random, read_edge_list, write_cliques, write_edge_list, write_id_map, OutputMode, ParseOptions, ParsedGraph};
use crate::metrics::RunReport;
use crate::oracle::{verify_cliques, DEFAULT_ORACLE_LIMIT, MAX_ORACLE_LIMIT};
use crate::sink::{CliqueSink, CollectingSink, CountingSink, WriterSink};

#[derive(Parser, Debug)]
#[command(name = "rmce", version, about = "Maximal clique enumeration with graph reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the maximal cliques of a graph.
    Enumerate(EnumerateArgs),
    /// Apply global reduction and write the remaining graph.
    Reduce(ReduceArgs),
    /// Compare engine configurations against the reference enumerator.
    Verify(VerifyArgs),
    /// Write a random G(n, p) edge list.
    Gen(GenArgs),
    /// Run the variant matrix and print a comparison table.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Edge list path; `-` reads stdin, `.gz` is decompressed.
    pub input: String,
    /// Accept lines with more than two columns, using the first two.
    #[arg(long)]
    pub lenient: bool,
    /// Use file ids as vertex ids instead of renumbering them densely.
    #[arg(long)]
    pub no_renumber: bool,
    /// Write the `dense original` id mapping to this path.
    #[arg(long, value_name = "PATH")]
    pub map: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct EngineArgs {
    /// Recursion kernel: bk, degen or rcd.
    #[arg(long, default_value = "degen")]
    pub algorithm: Algorithm,
    /// Comma-separated subset of global, dynamic, xreduce; or all, none.
    #[arg(long, default_value = "all")]
    pub reductions: Reductions,
    /// Use the exact degree-one rule inside the recursion.
    #[arg(long)]
    pub strict_degree_one: bool,
    /// Run top-level subproblems in parallel (ignored while xreduce is on).
    #[arg(long)]
    pub parallel: bool,
    /// Worker threads for --parallel (default: all cores).
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
}

impl EngineArgs {
    fn config(&self, metrics: bool) -> EnumConfig {
        EnumConfig {
            algorithm: self.algorithm,
            reductions: self.reductions,
            strict_degree_one: self.strict_degree_one,
            metrics,
            parallel: self.parallel || self.threads.is_some(),
        }
    }
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub engine: EngineArgs,
    /// Print only the number of maximal cliques.
    #[arg(long)]
    pub count_only: bool,
    /// Sort members and lines so output depends only on the clique set.
    #[arg(long)]
    pub canonical: bool,
    /// Write cliques here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Write the run report as JSON to this path.
    #[arg(long, value_name = "PATH")]
    pub stats: Option<PathBuf>,
    /// Print the run report as a table on stderr.
    #[arg(long)]
    pub table: bool,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Write the reduced edge list here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Write the cliques reported by the reduction to this path.
    #[arg(long, value_name = "PATH")]
    pub cliques: Option<PathBuf>,
    /// Write the reduction ledger as JSON to this path.
    #[arg(long, value_name = "PATH")]
    pub stats: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Verify this graph instead of random ones.
    pub input: Option<String>,
    /// Seed of the first random graph; trial t uses seed + t.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 30)]
    pub n: usize,
    #[arg(long, default_value_t = 0.2)]
    pub p: f64,
    /// Check only this kernel (default: all three).
    #[arg(long)]
    pub algorithm: Option<Algorithm>,
    /// Check only this reduction set (default: all eight subsets).
    #[arg(long)]
    pub reductions: Option<Reductions>,
    #[arg(long)]
    pub strict_degree_one: bool,
    /// Largest vertex count the reference enumerator accepts (at most 128).
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    pub limit_oracle: usize,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Edge lists to benchmark; with none, a random G(n, p, seed) is used.
    pub inputs: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 0.05)]
    pub p: f64,
    #[arg(long)]
    pub lenient: bool,
    #[arg(long)]
    pub strict_degree_one: bool,
    /// Write every run report as a JSON array to this path.
    #[arg(long, value_name = "PATH")]
    pub stats: Option<PathBuf>,
}

/// Failure of a command, mapped onto the exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] IngestError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Oracle(_) => 4,
        }
    }
}

fn io_err(context: &str) -> impl Fn(io::Error) -> CliError + '_ {
    move |e| CliError::Input(IngestError::io(context, e))
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::Input(IngestError::io(format!("creating {}", path.display()), e)))
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(create(p)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(args: &InputArgs) -> Result<ParsedGraph, CliError> {
    let opts = ParseOptions {
        lenient: args.lenient,
        renumber: !args.no_renumber,
        ..Default::default()
    };
    let parsed = read_edge_list(&args.input, opts)?;
    if let Some(path) = &args.map {
        let labels = parsed
            .labels
            .as_deref()
            .ok_or_else(|| CliError::Usage("--map needs renumbering; drop --no-renumber".into()))?;
        write_id_map(create(path)?, labels)?;
    }
    Ok(parsed)
}

fn set_threads(threads: Option<usize>) -> Result<(), CliError> {
    if let Some(t) = threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn write_report(path: &PathBuf, json: &str) -> Result<(), CliError> {
    let mut f = create(path)?;
    writeln!(f, "{json}").and_then(|_| f.flush()).map_err(io_err("writing stats"))
}

/// Parses `args` and runs the command.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run_command(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rmce: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn run_command(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<(), CliError> {
    if a.count_only && a.canonical {
        return Err(CliError::Usage("--count-only and --canonical are exclusive".into()));
    }
    set_threads(a.engine.threads)?;
    let cfg = a.engine.config(a.stats.is_some() || a.table);
    let ParsedGraph { graph, labels, .. } = load(&a.input)?;
    let labels = labels.as_deref();
    let out = output(&a.output)?;

    let report = if a.count_only {
        let mut sink = CountingSink::new();
        let report = run(graph, &cfg, &mut sink);
        let mut out = out;
        writeln!(out, "{}", sink.count())
            .and_then(|_| out.flush())
            .map_err(io_err("writing count"))?;
        report
    } else if a.canonical {
        let mut sink = CollectingSink::new();
        let report = run(graph, &cfg, &mut sink);
        write_cliques(out, sink.cliques(), labels, OutputMode::Canonical)?;
        report
    } else {
        let mut sink = WriterSink::new(out, labels);
        let report = run(graph, &cfg, &mut sink);
        sink.finish().map_err(io_err("writing cliques"))?;
        report
    };
    emit_report(&report, a.stats.as_ref(), a.table)
}

fn emit_report(report: &RunReport, stats: Option<&PathBuf>, table: bool) -> Result<(), CliError> {
    if let Some(path) = stats {
        write_report(path, &report.to_json())?;
    }
    if table {
        eprint!("{}", report.render_table());
    }
    Ok(())
}

fn cmd_reduce(a: ReduceArgs) -> Result<(), CliError> {
    let ParsedGraph { graph: mut g, labels, .. } = load(&a.input)?;
    let labels = labels.as_deref();
    let (n, m) = (g.n(), g.m());
    let mut sink = CollectingSink::new();
    let mut ledger = ReductionLedger::default();
    global_reduce(&mut g, &mut sink, &mut ledger, GlobalConfig::default());
    write_edge_list(output(&a.output)?, &g, labels)?;
    if let Some(path) = &a.cliques {
        write_cliques(create(path)?, sink.cliques(), labels, OutputMode::Canonical)?;
    }
    if let Some(path) = &a.stats {
        let json = serde_json::json!({
            "n": n,
            "m": m,
            "remaining_vertices": g.live_vertex_count(),
            "remaining_edges": g.m(),
            "ledger": ledger,
        });
        write_report(path, &serde_json::to_string_pretty(&json).expect("ledger serializes"))?;
    }
    eprintln!(
        "removed {} of {} vertices and {} of {} edges; {} cliques reported",
        ledger.deleted_vertices, n, ledger.deleted_edges, m, ledger.cliques_emitted
    );
    Ok(())
}

fn verify_configs(a: &VerifyArgs) -> Vec<EnumConfig> {
    let algorithms: Vec<Algorithm> = a.algorithm.map_or(Algorithm::ALL.to_vec(), |x| vec![x]);
    let reductions: Vec<Reductions> = a.reductions.map_or(Reductions::subsets().to_vec(), |r| vec![r]);
    let mut out = Vec::new();
    for &alg in &algorithms {
        for &r in &reductions {
            out.push(EnumConfig {
                strict_degree_one: a.strict_degree_one,
                ..EnumConfig::new(alg, r)
            });
        }
    }
    out
}

/// Runs every configuration on `g` and returns one message per mismatch.
fn check_graph(g: &EditableGraph, configs: &[EnumConfig], limit: usize) -> Vec<String> {
    let frozen: CompactGraph = compact(g, DeadVertices::KeepIds);
    let mut problems = Vec::new();
    for cfg in configs {
        let mut sink = CollectingSink::new();
        run(g.clone(), cfg, &mut sink);
        let v = verify_cliques(&frozen, sink.cliques(), limit);
        if !v.is_ok() {
            problems.push(format!(
                "{} [{}]: {} non-cliques, {} non-maximal, {} missing, {} duplicates",
                cfg.algorithm,
                cfg.reductions,
                v.non_cliques.len(),
                v.non_maximal.len(),
                v.missing.len(),
                v.duplicates.len()
            ));
        }
    }
    problems
}

fn cmd_verify(a: VerifyArgs) -> Result<(), CliError> {
    if a.limit_oracle > MAX_ORACLE_LIMIT {
        return Err(CliError::Usage(format!("--limit-oracle is at most {MAX_ORACLE_LIMIT}")));
    }
    if !(0.0..=1.0).contains(&a.p) {
        return Err(CliError::Usage(format!("--p {} is outside [0, 1]", a.p)));
    }
    let configs = verify_configs(&a);
    let graphs: Vec<(String, EditableGraph)> = match &a.input {
        Some(path) => {
            let parsed = read_edge_list(path, ParseOptions::default())?;
            vec![(path.clone(), parsed.graph)]
        }
        None => (0..a.trials)
            .map(|t| {
                let seed = a.seed.wrapping_add(t);
                let g = gen_random(a.n, a.p, seed).map_err(IngestError::from)?;
                Ok((format!("G({}, {}, seed {seed})", a.n, a.p), g))
            })
            .collect::<Result<_, CliError>>()?,
    };
    if let Some((_, g)) = graphs.iter().find(|(_, g)| g.n() > a.limit_oracle) {
        return Err(OracleError::LimitExceeded {
            n: g.n(),
            limit: a.limit_oracle,
        }
        .into());
    }
    let mut failed = 0usize;
    for (name, g) in &graphs {
        let problems = check_graph(g, &configs, a.limit_oracle);
        if !problems.is_empty() {
            failed += 1;
            for p in problems {
                eprintln!("{name}: {p}");
            }
        }
    }
    let total = graphs.len();
    println!(
        "{}/{} graphs match the reference enumerator under {} configuration(s)",
        total - failed,
        total,
        configs.len()
    );
    if failed > 0 {
        return Err(CliError::Mismatch(format!("{failed} graph(s) mismatched")));
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<(), CliError> {
    let g = gen_random(a.n, a.p, a.seed).map_err(|e| CliError::Usage(e.to_string()))?;
    write_edge_list(output(&a.output)?, &g, None)?;
    Ok(())
}

/// The comparison matrix: name, kernel, reductions.
pub const BENCH_VARIANTS: [(&str, Algorithm, Reductions); 8] = [
    ("BK", Algorithm::BkPivot, Reductions::NONE),
    ("BKdegen", Algorithm::BkDegen, Reductions::NONE),
    ("RMCEdegen", Algorithm::BkDegen, Reductions::ALL),
    ("BKrcd", Algorithm::BkRcd, Reductions::NONE),
    ("RMCErcd", Algorithm::BkRcd, Reductions::ALL),
    (
        "Variant1",
        Algorithm::BkDegen,
        Reductions {
            global: false,
            dynamic: true,
            xreduce: true,
        },
    ),
    (
        "Variant2",
        Algorithm::BkDegen,
        Reductions {
            global: true,
            dynamic: false,
            xreduce: true,
        },
    ),
    (
        "Variant3",
        Algorithm::BkDegen,
        Reductions {
            global: true,
            dynamic: true,
            xreduce: false,
        },
    ),
];

fn cmd_bench(a: BenchArgs) -> Result<(), CliError> {
    let graphs: Vec<(String, EditableGraph)> = if a.inputs.is_empty() {
        let g = gen_random(a.n, a.p, a.seed).map_err(|e| CliError::Usage(e.to_string()))?;
        vec![(format!("G({},{},{})", a.n, a.p, a.seed), g)]
    } else {
        let opts = ParseOptions {
            lenient: a.lenient,
            ..Default::default()
        };
        a.inputs
            .iter()
            .map(|p| Ok((p.clone(), read_edge_list(p, opts)?.graph)))
            .collect::<Result<_, CliError>>()?
    };

    let mut reports = Vec::new();
    let mut rows = vec![[
        "graph", "variant", "algorithm", "reductions", "cliques", "calls", "calls/base", "seconds", "speedup",
    ]
    .map(String::from)];
    for (name, g) in &graphs {
        let mut base: Option<(u64, f64)> = None;
        for (variant, alg, red) in BENCH_VARIANTS {
            let cfg = EnumConfig {
                strict_degree_one: a.strict_degree_one,
                metrics: true,
                ..EnumConfig::new(alg, red)
            };
            let start = Instant::now();
            let mut sink = CountingSink::new();
            let report = run(g.clone(), &cfg, &mut sink);
            let secs = start.elapsed().as_secs_f64();
            // BKdegen is the reference row for both ratios.
            if variant == "BKdegen" {
                base = Some((report.recursive_calls.max(1), secs.max(1e-9)));
            }
            let (calls_ratio, speedup) = match base {
                Some((c, t)) if variant != "BK" => (
                    format!("{:.4}", report.recursive_calls as f64 / c as f64),
                    format!("{:.2}", t / secs.max(1e-9)),
                ),
                _ => ("-".into(), "-".into()),
            };
            rows.push([
                name.clone(),
                variant.to_string(),
                alg.to_string(),
                red.to_string(),
                sink.count().to_string(),
                report.recursive_calls.to_string(),
                calls_ratio,
                format!("{secs:.4}"),
                speedup,
            ]);
            reports.push(serde_json::json!({ "graph": name, "variant": variant, "report": report }));
        }
    }

    let widths: Vec<usize> = (0..rows[0].len()).map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0)).collect();
    let mut out = io::stdout().lock();
    for row in &rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).map_err(io_err("writing table"))?;
    }
    if let Some(path) = &a.stats {
        write_report(path, &serde_json::to_string_pretty(&reports).expect("reports serialize"))?;
    }
    Ok(())
}
