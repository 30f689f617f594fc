use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use critcolor::budget::Budget;
use critcolor::formats::{to_edges_text, to_graph6};
use critcolor::graph::Graph;
use critcolor::harness::{
    analyze_graph, exhaustive_min_degree_scan, fixture_figure1, lemma1_scan, load_corpus,
    verify_statement, Corpus, CorpusFormat, Statement,
};
use critcolor::mozhan::{mozhan_walk_within, SearchMode};

#[derive(Parser)]
#[command(name = "critcolor", version, about = "Exact coloring analysis for critical-graph corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the structural report for every graph in an input file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = CorpusFormat::from_str, default_value = "graph6")]
        format: CorpusFormat,
        /// Also write the JSON reports to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check a statement over a corpus or an exhaustive scan.
    Verify(VerifyArgs),
    /// Run the counter-driven swap walk from a low vertex.
    Walk {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = CorpusFormat::from_str, default_value = "graph6")]
        format: CorpusFormat,
        /// Start vertex; must be low (degree chi - 1).
        #[arg(long)]
        start: usize,
        #[arg(long)]
        max_steps: usize,
        /// Initial coloring search: "exact" or "local".
        #[arg(long, default_value = "exact")]
        mode: String,
        /// Seed for the local search mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the full trace JSON to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Seeded Lemma 1 oracle scan with exact certified minimality.
    Lemma1 {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit a named fixture graph.
    Fixture {
        /// Only "figure1" is defined.
        name: String,
        #[arg(long, default_value = "graph6")]
        emit: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = Statement::from_str)]
    statement: Statement,
    /// Corpus file; mutually exclusive with --exhaustive-n.
    #[arg(long, conflicts_with = "exhaustive_n")]
    corpus: Option<PathBuf>,
    #[arg(long, value_parser = CorpusFormat::from_str, default_value = "graph6")]
    format: CorpusFormat,
    /// Treat malformed corpus entries as fatal.
    #[arg(long)]
    strict: bool,
    /// Scan all labeled graphs on this many vertices instead of a corpus.
    #[arg(long, requires = "min_deg")]
    exhaustive_n: Option<usize>,
    #[arg(long)]
    min_deg: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn budget_ms_from_env() -> Option<u64> {
    std::env::var("CRITCOLOR_BUDGET_MS").ok().and_then(|v| v.parse().ok())
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("critcolor: {message}");
    ExitCode::from(2)
}

fn write_json<T: serde::Serialize>(value: &T, path: Option<&PathBuf>) -> Result<(), String> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn single_graph(path: &Path, format: CorpusFormat) -> Result<Graph, String> {
    let corpus = load_corpus(path, format, true).map_err(|e| e.to_string())?;
    let first = corpus.iter().next().map(|entry| entry.graph.clone());
    first.ok_or_else(|| format!("{}: no graphs found", path.display()))
}

fn run_analyze(input: PathBuf, format: CorpusFormat, json: Option<PathBuf>) -> ExitCode {
    let corpus = match load_corpus(&input, format, true) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let ms = budget_ms_from_env();
    let reports: Vec<_> = corpus
        .iter()
        .map(|entry| {
            let budget = ms.map_or(Budget::unlimited(), Budget::from_ms);
            analyze_graph(&entry.graph, entry.label.clone(), &budget)
        })
        .collect();
    for r in &reports {
        println!(
            "{}: n={} m={} chi={} omega={} Delta={} delta={} theta={} critical={}",
            r.label,
            r.n,
            r.edge_count,
            opt(r.chromatic_number),
            opt(r.clique_number),
            r.max_degree,
            r.min_degree,
            opt(r.ore_degree),
            r.vertex_critical.map_or("?".to_string(), |b| b.to_string()),
        );
    }
    if json.is_none() {
        match serde_json::to_string_pretty(&reports) {
            Ok(text) => println!("{text}"),
            Err(e) => return fail(e),
        }
    } else if let Err(e) = write_json(&reports, json.as_ref()) {
        return fail(e);
    }
    ExitCode::SUCCESS
}

fn opt(v: Option<usize>) -> String {
    v.map_or("?".to_string(), |x| x.to_string())
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let corpus: Corpus = if let Some(path) = &args.corpus {
        match load_corpus(path, args.format, args.strict) {
            Ok(c) => c,
            Err(e) => return fail(e),
        }
    } else if let Some(n) = args.exhaustive_n {
        let min_deg = args.min_deg.expect("clap enforces --min-deg");
        match exhaustive_min_degree_scan(n, min_deg) {
            Ok(c) => c,
            Err(e) => return fail(e),
        }
    } else {
        return fail("verify needs --corpus PATH or --exhaustive-n N --min-deg D");
    };
    for m in corpus.malformed() {
        eprintln!("critcolor: skipping malformed entry at line {}: {}", m.line, m.message);
    }
    let report = verify_statement(&corpus, args.statement, budget_ms_from_env());
    println!(
        "{}: scanned={} hypothesis_satisfied={} verified={} skipped={} errors={} violations={}",
        report.statement,
        report.scanned,
        report.hypothesis_satisfied,
        report.verified,
        report.skipped,
        report.errors,
        report.violations.len(),
    );
    for note in &report.notes {
        println!("note: {note}");
    }
    for label in &report.violations {
        println!("violation: {label}");
    }
    if let Err(e) = write_json(&report, args.json.as_ref()) {
        return fail(e);
    }
    if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[allow(clippy::too_many_arguments)]
fn run_walk(
    input: PathBuf,
    format: CorpusFormat,
    start: usize,
    max_steps: usize,
    mode: String,
    seed: u64,
    trace_path: Option<PathBuf>,
) -> ExitCode {
    let g = match single_graph(&input, format) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let search = match mode.as_str() {
        "exact" => SearchMode::Exact,
        "local" => SearchMode::LocalSearch { seed },
        other => return fail(format!("unknown mode {other:?} (expected exact or local)")),
    };
    let budget = budget_ms_from_env().map_or(Budget::unlimited(), Budget::from_ms);
    let trace = match mozhan_walk_within(&g, start, max_steps, search, &budget) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    println!(
        "walk: start={} steps={} q_excursion={} outcome={:?}",
        trace.start,
        trace.steps.len(),
        trace.q_excursion,
        trace.outcome,
    );
    if let Err(e) = write_json(&trace, trace_path.as_ref()) {
        return fail(e);
    }
    ExitCode::SUCCESS
}

fn run_lemma1(samples: usize, max_n: usize, seed: u64, json: Option<PathBuf>) -> ExitCode {
    let report = match lemma1_scan(samples, max_n, seed) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    println!(
        "lemma1: samples={} groups_checked={} applicable={} violations={}",
        report.samples,
        report.groups_checked,
        report.applicable_groups,
        report.violations.len(),
    );
    for label in &report.violations {
        println!("violation: {label}");
    }
    if let Err(e) = write_json(&report, json.as_ref()) {
        return fail(e);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_fixture(name: String, emit: String) -> ExitCode {
    if name != "figure1" {
        return fail(format!("unknown fixture {name:?} (only figure1 is defined)"));
    }
    let g = fixture_figure1();
    match emit.as_str() {
        "graph6" => println!("{}", to_graph6(&g)),
        "edges" => print!("{}", to_edges_text(&g)),
        other => return fail(format!("unknown emit format {other:?} (expected graph6 or edges)")),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input, format, json } => run_analyze(input, format, json),
        Command::Verify(args) => run_verify(args),
        Command::Walk { input, format, start, max_steps, mode, seed, trace } => {
            run_walk(input, format, start, max_steps, mode, seed, trace)
        }
        Command::Lemma1 { samples, max_n, seed, json } => run_lemma1(samples, max_n, seed, json),
        Command::Fixture { name, emit } => run_fixture(name, emit),
    }
}
