//! Corpus ingestion, fixtures, verification campaigns over the structural
//! statements, the Lemma 1 oracle scan, and walk instance generation.

use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::budget::Budget;
use crate::coloring::{
    chromatic_number_within, critical_subgraph, critical_vertices_within, is_critical_vertex,
    is_vertex_critical_within,
};
use crate::formats::{from_dimacs, from_edges_text, from_graph6, to_graph6};
use crate::graph::{clique_number, Graph};
use crate::mozhan::{
    find_minimal_form_coloring, verify_lemma1, PartitionScheme, Provenance,
};
use crate::structure::{
    classify, corollary_n_check_within, corollary_o_check_within, high_subgraph_within,
    kk_theorem_check_within, ore_degree, theorem_m_check_within, DegreeClass, StatementCheck,
    StructureError,
};

/// The reading of "critical" used by every statement check.
pub const CRITICALITY_DEFINITION: &str = "vertex-critical";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed entry at line {line}: {message}")]
    MalformedEntry { line: usize, message: String },
    #[error("scan range too large: n = {n}, min_deg = {min_deg} (need n <= 10, n - 4 <= min_deg <= n - 1)")]
    RangeTooLarge { n: usize, min_deg: usize },
    #[error("bad argument: {0}")]
    BadArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Graph6,
    Dimacs,
    Edges,
}

impl std::str::FromStr for CorpusFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<CorpusFormat, String> {
        match s {
            "graph6" => Ok(CorpusFormat::Graph6),
            "dimacs" => Ok(CorpusFormat::Dimacs),
            "edges" => Ok(CorpusFormat::Edges),
            other => Err(format!("unknown format {other:?} (expected graph6, dimacs, or edges)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct Malformed {
    pub line: usize,
    pub message: String,
}

/// An ordered sequence of graphs with source labels. Iteration order is
/// the source order.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    entries: Vec<CorpusEntry>,
    malformed: Vec<Malformed>,
}

impl Corpus {
    pub fn new() -> Corpus {
        Corpus::default()
    }

    pub fn push(&mut self, label: impl Into<String>, graph: Graph) {
        self.entries.push(CorpusEntry { label: label.into(), graph });
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter()
    }

    pub fn malformed(&self) -> &[Malformed] {
        &self.malformed
    }

    /// Sha-256 over the canonical graph6 lines, independent of the source
    /// format the corpus was loaded from.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for entry in &self.entries {
            hasher.update(to_graph6(&entry.graph).as_bytes());
            hasher.update(b"\n");
        }
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Reads a corpus from disk: one graph per line for graph6, one graph per
/// file for dimacs and edges. Malformed graph6 lines are collected with
/// their line numbers; under `strict` the first one is fatal.
pub fn load_corpus(
    path: &Path,
    format: CorpusFormat,
    strict: bool,
) -> Result<Corpus, HarnessError> {
    let text = std::fs::read_to_string(path)?;
    let mut corpus = Corpus::new();
    match format {
        CorpusFormat::Graph6 => {
            for (idx, line) in text.lines().enumerate() {
                let line_no = idx + 1;
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                match from_graph6(trimmed) {
                    Ok(g) => corpus.push(format!("{}:{line_no}", path.display()), g),
                    Err(e) => {
                        if strict {
                            return Err(HarnessError::MalformedEntry {
                                line: line_no,
                                message: e.to_string(),
                            });
                        }
                        corpus.malformed.push(Malformed {
                            line: line_no,
                            message: e.to_string(),
                        });
                    }
                }
            }
        }
        CorpusFormat::Dimacs | CorpusFormat::Edges => {
            let parsed = match format {
                CorpusFormat::Dimacs => from_dimacs(&text),
                _ => from_edges_text(&text),
            };
            match parsed {
                Ok(g) => corpus.push(path.display().to_string(), g),
                Err(e) => {
                    if strict {
                        return Err(HarnessError::MalformedEntry {
                            line: 1,
                            message: e.to_string(),
                        });
                    }
                    corpus.malformed.push(Malformed { line: 1, message: e.to_string() });
                }
            }
        }
    }
    Ok(corpus)
}

/// The 9-vertex, 19-edge graph read off the counterexample figure:
/// two K4 blocks {v0..v3} and {v4..v7}, a hub v8 joined to v0, v1, v2,
/// v4, v6, and the bridges v3v5 and v3v7.
pub fn fixture_figure1() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 8),
        (1, 8),
        (2, 8),
        (4, 5),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 7),
        (6, 7),
        (4, 8),
        (6, 8),
        (3, 5),
        (3, 7),
    ];
    Graph::from_edge_list(9, &edges).expect("fixture edge list is valid")
}

/// Per-graph analysis. Fields that require exact solving are `None` when
/// the budget ran out before they were computed.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub label: String,
    pub n: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub ore_degree: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub clique_number: Option<usize>,
    pub degree_classes: Option<Vec<DegreeClass>>,
    pub high_vertices: Option<Vec<usize>>,
    pub high_edge_count: Option<usize>,
    pub high_clique_number: Option<usize>,
    pub vertex_critical: Option<bool>,
    pub critical_vertices: Option<Vec<usize>>,
    pub theorem_m: Option<StatementCheck>,
    pub corollary_n: Option<StatementCheck>,
    pub corollary_o: Option<StatementCheck>,
    pub kk_theorem: Option<StatementCheck>,
    pub criticality_definition: &'static str,
    pub budget_exhausted: bool,
}

pub fn analyze_graph(g: &Graph, label: impl Into<String>, budget: &Budget) -> StructureReport {
    let mut report = StructureReport {
        label: label.into(),
        n: g.n(),
        edge_count: g.edge_count(),
        max_degree: g.max_degree().unwrap_or(0),
        min_degree: g.min_degree().unwrap_or(0),
        connected: g.is_connected(),
        ore_degree: ore_degree(g).ok(),
        chromatic_number: None,
        clique_number: None,
        degree_classes: None,
        high_vertices: None,
        high_edge_count: None,
        high_clique_number: None,
        vertex_critical: None,
        critical_vertices: None,
        theorem_m: None,
        corollary_n: None,
        corollary_o: None,
        kk_theorem: None,
        criticality_definition: CRITICALITY_DEFINITION,
        budget_exhausted: false,
    };
    if g.n() == 0 {
        return report;
    }
    let steps = || -> Result<(), StructureError> {
        report.chromatic_number = Some(chromatic_number_within(g, budget)?.0);
        report.clique_number = Some(clique_number(g));
        report.degree_classes = Some(classify(g));
        let (h, high) = high_subgraph_within(g, budget)?;
        report.high_vertices = Some(high.iter().copied().collect());
        report.high_edge_count = Some(h.edge_count());
        report.high_clique_number = Some(clique_number(&h));
        report.critical_vertices =
            Some(critical_vertices_within(g, budget)?.iter().copied().collect());
        report.vertex_critical = Some(is_vertex_critical_within(g, budget)?);
        report.theorem_m = Some(theorem_m_check_within(g, budget)?);
        report.corollary_n = Some(corollary_n_check_within(g, budget)?);
        report.kk_theorem = Some(kk_theorem_check_within(g, budget)?);
        if g.edge_count() > 0 {
            report.corollary_o = Some(corollary_o_check_within(g, budget)?);
        }
        Ok(())
    }();
    if steps.is_err() {
        report.budget_exhausted = true;
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Statement {
    TheoremM,
    CorollaryN,
    CorollaryO,
    KKTheorem,
}

impl Statement {
    pub fn name(&self) -> &'static str {
        match self {
            Statement::TheoremM => "theorem-m",
            Statement::CorollaryN => "corollary-n",
            Statement::CorollaryO => "corollary-o",
            Statement::KKTheorem => "kk",
        }
    }

    /// Evaluates hypothesis and conclusion on one graph, with an optional
    /// sharpness note (Corollary O just below its chi >= 6 threshold).
    fn check(
        &self,
        g: &Graph,
        budget: &Budget,
    ) -> Result<(StatementCheck, Option<String>), StructureError> {
        match self {
            Statement::TheoremM => Ok((theorem_m_check_within(g, budget)?, None)),
            Statement::CorollaryN => Ok((corollary_n_check_within(g, budget)?, None)),
            Statement::KKTheorem => Ok((kk_theorem_check_within(g, budget)?, None)),
            Statement::CorollaryO => {
                let check = corollary_o_check_within(g, budget)?;
                let mut note = None;
                if !check.hypothesis {
                    let theta = ore_degree(g)?;
                    let (chi, _) = chromatic_number_within(g, budget)?;
                    if chi == 5 && chi == theta / 2 + 1 && !check.conclusion {
                        note = Some(
                            "sharpness: chi = floor(theta/2) + 1 = 5 without a K_5, \
                             so the chi >= 6 threshold cannot be lowered"
                                .to_string(),
                        );
                    }
                }
                Ok((check, note))
            }
        }
    }
}

impl std::str::FromStr for Statement {
    type Err = String;

    fn from_str(s: &str) -> Result<Statement, String> {
        match s {
            "theorem-m" => Ok(Statement::TheoremM),
            "corollary-n" => Ok(Statement::CorollaryN),
            "corollary-o" => Ok(Statement::CorollaryO),
            "kk" => Ok(Statement::KKTheorem),
            other => Err(format!(
                "unknown statement {other:?} (expected theorem-m, corollary-n, corollary-o, or kk)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GraphOutcome {
    /// Hypothesis false; nothing to verify.
    HypothesisNotMet,
    /// Hypothesis and conclusion both hold.
    Verified,
    /// Hypothesis holds, conclusion fails.
    Violation,
    /// Per-graph budget ran out; never counted as a pass.
    Skipped { reason: String },
    Error { message: String },
}

impl fmt::Display for GraphOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphOutcome::HypothesisNotMet => write!(f, "hypothesis-not-met"),
            GraphOutcome::Verified => write!(f, "verified"),
            GraphOutcome::Violation => write!(f, "violation"),
            GraphOutcome::Skipped { reason } => write!(f, "skipped ({reason})"),
            GraphOutcome::Error { message } => write!(f, "error ({message})"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StatementRecord {
    pub label: String,
    pub outcome: GraphOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub statement: &'static str,
    pub criticality_definition: &'static str,
    pub input_digest: String,
    pub scanned: usize,
    pub hypothesis_satisfied: usize,
    pub verified: usize,
    pub skipped: usize,
    pub errors: usize,
    /// Labels of hypothesis-true, conclusion-false graphs. Empty on every
    /// corpus the statements actually cover.
    pub violations: Vec<String>,
    pub notes: Vec<String>,
    pub records: Vec<StatementRecord>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates one statement on every graph of the corpus. Each graph gets a
/// fresh budget of `per_graph_ms` (unlimited when `None`); graphs that
/// exceed it are recorded as skipped, never as passes.
pub fn verify_statement(
    corpus: &Corpus,
    statement: Statement,
    per_graph_ms: Option<u64>,
) -> Report {
    let mut report = Report {
        tool: "critcolor",
        version: env!("CARGO_PKG_VERSION"),
        statement: statement.name(),
        criticality_definition: CRITICALITY_DEFINITION,
        input_digest: corpus.digest(),
        scanned: 0,
        hypothesis_satisfied: 0,
        verified: 0,
        skipped: 0,
        errors: 0,
        violations: Vec::new(),
        notes: Vec::new(),
        records: Vec::new(),
    };
    for entry in corpus.iter() {
        report.scanned += 1;
        let budget = match per_graph_ms {
            Some(ms) => Budget::from_ms(ms),
            None => Budget::unlimited(),
        };
        let outcome = match statement.check(&entry.graph, &budget) {
            Ok((check, note)) => {
                if let Some(note) = note {
                    report.notes.push(format!("{}: {note}", entry.label));
                }
                if !check.hypothesis {
                    GraphOutcome::HypothesisNotMet
                } else if check.conclusion {
                    report.hypothesis_satisfied += 1;
                    report.verified += 1;
                    GraphOutcome::Verified
                } else {
                    report.hypothesis_satisfied += 1;
                    report.violations.push(entry.label.clone());
                    GraphOutcome::Violation
                }
            }
            Err(StructureError::BudgetExceeded(_)) => {
                report.skipped += 1;
                GraphOutcome::Skipped { reason: "budget exceeded".to_string() }
            }
            Err(e) => {
                report.errors += 1;
                GraphOutcome::Error { message: e.to_string() }
            }
        };
        report.records.push(StatementRecord { label: entry.label.clone(), outcome });
    }
    report
}

/// All labeled graphs on `n` vertices with minimum degree >= `min_deg`,
/// generated by enumerating complement graphs of maximum degree
/// <= n - 1 - min_deg. Labeled, not isomorphism-reduced.
pub fn exhaustive_min_degree_scan(n: usize, min_deg: usize) -> Result<Corpus, HarnessError> {
    if n == 0 || n > 10 || min_deg >= n || min_deg + 4 < n {
        return Err(HarnessError::RangeTooLarge { n, min_deg });
    }
    let cap = n - 1 - min_deg;
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    let mut corpus = Corpus::new();
    let mut comp_deg = vec![0usize; n];
    let mut removed = vec![false; pairs.len()];
    enumerate_complements(
        n,
        min_deg,
        cap,
        &pairs,
        0,
        &mut comp_deg,
        &mut removed,
        &mut corpus,
    );
    Ok(corpus)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_complements(
    n: usize,
    min_deg: usize,
    cap: usize,
    pairs: &[(usize, usize)],
    idx: usize,
    comp_deg: &mut Vec<usize>,
    removed: &mut Vec<bool>,
    corpus: &mut Corpus,
) {
    if idx == pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed[*i])
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edge_list(n, &edges).expect("pairs are in range");
        let label = format!("scan(n={n},min_deg={min_deg})#{}", corpus.len());
        corpus.push(label, g);
        return;
    }
    let (u, v) = pairs[idx];
    enumerate_complements(n, min_deg, cap, pairs, idx + 1, comp_deg, removed, corpus);
    if comp_deg[u] < cap && comp_deg[v] < cap {
        comp_deg[u] += 1;
        comp_deg[v] += 1;
        removed[idx] = true;
        enumerate_complements(n, min_deg, cap, pairs, idx + 1, comp_deg, removed, corpus);
        removed[idx] = false;
        comp_deg[u] -= 1;
        comp_deg[v] -= 1;
    }
}

fn random_graph_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated pairs are in range")
}

/// Erdos-Renyi G(n, p), deterministic in the seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(&mut rng, n, p)
}

/// A vertex-critical graph obtained as the critical subgraph of seeded
/// random graphs on `n` vertices, retried until the result has at least
/// 4 vertices.
pub fn random_critical(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let p = rng.gen_range(0.35..0.9);
        let g = random_graph_with(&mut rng, n.max(4), p);
        let c = critical_subgraph(&g);
        if c.n() >= 4 {
            return c;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1ScanReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub max_n: usize,
    /// Verified (graph, scheme) instances; graphs whose chi admits no
    /// eligible scheme are skipped and not counted.
    pub samples: usize,
    pub skipped_graphs: usize,
    pub groups_checked: usize,
    pub applicable_groups: usize,
    pub violations: Vec<String>,
    pub pass: bool,
}

/// Seeded Lemma 1 campaign: draws vertex-critical graphs, computes the
/// certified-exact minimal form coloring for every eligible scheme
/// (single group (2) when chi = 3; all (r1, r2) with r1 + r2 = chi - 1 and
/// both >= 2 when chi >= 5), and checks the lemma's conclusion on every
/// applicable group. Exact minimality caps `max_n` at 9.
pub fn lemma1_scan(samples: usize, max_n: usize, seed: u64) -> Result<Lemma1ScanReport, HarnessError> {
    if !(4..=9).contains(&max_n) {
        return Err(HarnessError::BadArgument(format!(
            "max_n = {max_n} out of range (need 4 <= max_n <= 9)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Lemma1ScanReport {
        tool: "critcolor",
        version: env!("CARGO_PKG_VERSION"),
        seed,
        max_n,
        samples: 0,
        skipped_graphs: 0,
        groups_checked: 0,
        applicable_groups: 0,
        violations: Vec::new(),
        pass: true,
    };
    let mut drawn = 0usize;
    while report.samples < samples {
        let n = rng.gen_range(4..=max_n);
        let p = rng.gen_range(0.35..0.9);
        let g = critical_subgraph(&random_graph_with(&mut rng, n, p));
        drawn += 1;
        if g.n() < 4 {
            report.skipped_graphs += 1;
            continue;
        }
        let (chi, _) = crate::coloring::chromatic_number(&g);
        let schemes: Vec<PartitionScheme> = if chi == 3 {
            vec![PartitionScheme::new(vec![2])]
        } else if chi >= 5 {
            (2..=(chi - 3))
                .map(|r1| PartitionScheme::new(vec![r1, chi - 1 - r1]))
                .collect()
        } else {
            Vec::new()
        };
        if schemes.is_empty() {
            report.skipped_graphs += 1;
            continue;
        }
        for scheme in schemes {
            if report.samples >= samples {
                break;
            }
            let pc = match find_minimal_form_coloring(&g, &scheme) {
                Ok(pc) => pc,
                Err(e) => {
                    // Critical graphs always admit a form coloring; surface
                    // anything else as a violation rather than skipping.
                    report.violations.push(format!(
                        "lemma1#{drawn}(n={},chi={chi}): search failed: {e}",
                        g.n()
                    ));
                    continue;
                }
            };
            let x = pc.singleton();
            let lemma = verify_lemma1(&g, &pc, x, Provenance::ExactGlobal)
                .expect("singleton matches and coloring validates");
            report.samples += 1;
            report.groups_checked += lemma.groups.len();
            report.applicable_groups +=
                lemma.groups.iter().filter(|o| o.applicable).count();
            if !lemma.pass {
                report.violations.push(format!(
                    "lemma1#{drawn}(n={},chi={chi},scheme={:?},x={x})",
                    g.n(),
                    scheme.group_sizes()
                ));
            }
        }
    }
    report.pass = report.violations.is_empty();
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct WalkInstance {
    pub label: String,
    pub graph: Graph,
    /// A low vertex that is critical, so the walk's initial minimal
    /// coloring with this singleton exists.
    pub start: usize,
}

/// Deterministic supply of walk instances: seeded edge perturbations of
/// the figure fixture, kept only when the result is connected with
/// chi = Delta >= 5 and some low vertex critical. Random G(n, p) sampling
/// hits that window too rarely to be usable.
pub fn walk_instances(count: usize, seed: u64) -> Vec<WalkInstance> {
    let base = fixture_figure1();
    let n = base.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempt = 0usize;
    while out.len() < count {
        attempt += 1;
        let mut adj: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| base.has_edge(u, v)).collect())
            .collect();
        let toggles = rng.gen_range(1..=3);
        for _ in 0..toggles {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n);
            while v == u {
                v = rng.gen_range(0..n);
            }
            adj[u][v] = !adj[u][v];
            adj[v][u] = adj[u][v];
        }
        let mut edges = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for u in 0..n {
            for v in (u + 1)..n {
                if adj[u][v] {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("perturbed pairs in range");
        if !g.is_connected() {
            continue;
        }
        let delta = g.max_degree().expect("nonempty");
        if delta < 5 {
            continue;
        }
        let (chi, _) = crate::coloring::chromatic_number(&g);
        if chi != delta {
            continue;
        }
        let lows: Vec<usize> = (0..n)
            .filter(|&v| g.neighbors(v).len() == chi - 1 && is_critical_vertex(&g, v))
            .collect();
        if lows.is_empty() {
            continue;
        }
        let start = lows[rng.gen_range(0..lows.len())];
        out.push(WalkInstance {
            label: format!("walk-instance(seed={seed})#{attempt}"),
            graph: g,
            start,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic_number;

    #[test]
    fn figure1_shape() {
        let g = fixture_figure1();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 19);
        for v in 0..9 {
            let expected = if v == 3 || v == 8 { 5 } else { 4 };
            assert_eq!(g.degree(v).unwrap(), expected, "vertex {v}");
        }
        assert_eq!(chromatic_number(&g).0, 5);
    }

    #[test]
    fn load_graph6_corpus_in_order() {
        let dir = std::env::temp_dir().join("critcolor-harness-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("three.g6");
        std::fs::write(&path, "Bw\n@\nBw\n").unwrap();
        let corpus = load_corpus(&path, CorpusFormat::Graph6, true).unwrap();
        assert_eq!(corpus.len(), 3);
        let sizes: Vec<usize> = corpus.iter().map(|e| e.graph.n()).collect();
        assert_eq!(sizes, vec![3, 1, 3]);

        let empty = dir.join("empty.g6");
        std::fs::write(&empty, "").unwrap();
        assert!(load_corpus(&empty, CorpusFormat::Graph6, true).unwrap().is_empty());
    }

    #[test]
    fn malformed_line_reported_with_number() {
        let dir = std::env::temp_dir().join("critcolor-harness-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.g6");
        std::fs::write(&path, "Bw\n\u{7f}zz\n@\n").unwrap();
        let lax = load_corpus(&path, CorpusFormat::Graph6, false).unwrap();
        assert_eq!(lax.len(), 2);
        assert_eq!(lax.malformed().len(), 1);
        assert_eq!(lax.malformed()[0].line, 2);

        let err = load_corpus(&path, CorpusFormat::Graph6, true).unwrap_err();
        match err {
            HarnessError::MalformedEntry { line, .. } => assert_eq!(line, 2),
            other => panic!("expected MalformedEntry, got {other:?}"),
        }
    }

    #[test]
    fn verify_on_complete_graph_corpus() {
        let mut corpus = Corpus::new();
        for n in [6, 7, 8] {
            corpus.push(format!("K{n}"), Graph::complete(n));
        }
        let report = verify_statement(&corpus, Statement::TheoremM, None);
        assert_eq!(report.scanned, 3);
        assert_eq!(report.hypothesis_satisfied, 2);
        assert!(report.violations.is_empty());
        assert_eq!(report.records[0].outcome, GraphOutcome::HypothesisNotMet);
    }

    #[test]
    fn corollary_o_sharpness_note_on_figure1() {
        let mut corpus = Corpus::new();
        corpus.push("figure1", fixture_figure1());
        let report = verify_statement(&corpus, Statement::CorollaryO, None);
        assert_eq!(report.hypothesis_satisfied, 0);
        assert!(report.violations.is_empty());
        assert_eq!(report.notes.len(), 1);
        assert!(report.notes[0].contains("sharpness"));
    }

    #[test]
    fn scan_min_deg_n_minus_one_is_complete_graph() {
        let corpus = exhaustive_min_degree_scan(7, 6).unwrap();
        assert_eq!(corpus.len(), 1);
        assert!(corpus.iter().next().unwrap().graph.is_complete());
    }

    #[test]
    fn scan_n7_min_deg5_counts_matchings() {
        // Complements are matchings on 7 labeled vertices; the telephone
        // numbers give 232 of them.
        let corpus = exhaustive_min_degree_scan(7, 5).unwrap();
        assert_eq!(corpus.len(), 232);
        for entry in corpus.iter() {
            assert!(entry.graph.min_degree().unwrap() >= 5);
        }
    }

    #[test]
    fn scan_rejects_out_of_range() {
        assert!(matches!(
            exhaustive_min_degree_scan(11, 8),
            Err(HarnessError::RangeTooLarge { .. })
        ));
        assert!(matches!(
            exhaustive_min_degree_scan(9, 4),
            Err(HarnessError::RangeTooLarge { .. })
        ));
    }

    #[test]
    fn random_graph_endpoints_and_determinism() {
        assert_eq!(random_graph(5, 0.0, 7).edge_count(), 0);
        assert!(random_graph(5, 1.0, 7).is_complete());
        let a = random_graph(9, 0.5, 42);
        let b = random_graph(9, 0.5, 42);
        assert_eq!(to_graph6(&a), to_graph6(&b));
        assert_ne!(to_graph6(&a), to_graph6(&random_graph(9, 0.5, 43)));
    }

    #[test]
    fn random_critical_is_critical() {
        for seed in 0..5 {
            let g = random_critical(7, seed);
            assert!(g.n() >= 4);
            assert!(crate::coloring::is_vertex_critical(&g));
        }
    }

    #[test]
    fn lemma1_scan_small_run() {
        let report = lemma1_scan(12, 7, 5).unwrap();
        assert_eq!(report.samples, 12);
        assert!(report.pass, "violations: {:?}", report.violations);
        assert!(report.groups_checked >= 12);
    }

    #[test]
    fn walk_instances_meet_preconditions() {
        let instances = walk_instances(5, 11);
        assert_eq!(instances.len(), 5);
        for inst in &instances {
            let delta = inst.graph.max_degree().unwrap();
            let (chi, _) = chromatic_number(&inst.graph);
            assert_eq!(chi, delta);
            assert!(delta >= 5);
            assert_eq!(inst.graph.degree(inst.start).unwrap(), chi - 1);
            assert!(is_critical_vertex(&inst.graph, inst.start));
        }
    }

    #[test]
    fn corpus_digest_is_stable_and_order_sensitive() {
        let mut a = Corpus::new();
        a.push("x", Graph::complete(3));
        a.push("y", Graph::complete(4));
        let mut b = Corpus::new();
        b.push("other-label", Graph::complete(3));
        b.push("z", Graph::complete(4));
        assert_eq!(a.digest(), b.digest());
        let mut c = Corpus::new();
        c.push("y", Graph::complete(4));
        c.push("x", Graph::complete(3));
        assert_ne!(a.digest(), c.digest());
    }
}
