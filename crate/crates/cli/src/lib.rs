//! `pdgraph`: generate graph families, run the labeling constructors,
//! verifiers and deciders, and write JSON, DOT or CSV artifacts.
//!
//! Exit status: 0 for a witness, a valid labeling or a satisfied coloring;
//! 1 for a refutation or an invalid input labeling; 2 when the answer is
//! unknown (bounded search found nothing, or a budget ran out); 64 for usage
//! errors; 74 for I/O errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use prime_distance::coloring::{
    circulant_2odd_coloring, construct_2odd_labeling, find_2odd_coloring,
    verify_coloring_conditions, TwoOddColoringOutcome, DEFAULT_COLORING_BUDGET,
};
use prime_distance::graph::{colored_fan, generate};
use prime_distance::labeling::{
    label_bipartite, label_bipartite_graph, label_circulant_half, label_circulant_k3, label_cycle,
    label_cycle_ramare, label_dutch_windmill, label_paper_mill, label_path,
    verify_color_satisfying, verify_labeling, CycleMethod, Mode,
};
use prime_distance::search::{
    classify_circulant, conjecture_sweep, decide_color_satisfying, decide_prime_distance,
    sweep_csv, DecisionOutcome, SearchConfig, SweepConfig, TheoremTag,
};
use prime_distance::{EdgeColoring, Error, FamilySpec, Graph, Labeling};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "pdgraph",
    version,
    about = "Prime distance and 2-odd graph labelings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a family's graph as JSON or DOT.
    Gen {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Run the explicit construction for a family.
    Label {
        #[command(flatten)]
        input: Input,
        /// Cycle construction.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Force the number of primes in the Ramare decomposition.
        #[arg(long, requires = "method")]
        terms: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Check a labeling, optionally against a coloring.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        labels: PathBuf,
        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Prime)]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Find a 2-odd coloring, or check a given one.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,
        /// Node budget of the coloring search.
        #[arg(long, default_value_t = DEFAULT_COLORING_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Decide whether a labeling exists, by theorem or bounded search.
    Decide {
        #[command(flatten)]
        input: Input,
        /// Coloring the labeling must satisfy.
        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Prime)]
        mode: ModeArg,
        #[command(flatten)]
        search: SearchArgs,
        /// Include the verifier report for any witness.
        #[arg(long)]
        emit_certificate: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Classify and search every Circ(n,k) up to a size.
    Sweep {
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        /// Search bound per vertex.
        #[arg(long, default_value_t = 40)]
        bound_per_vertex: i64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        deterministic: bool,
        /// Write each witness next to the table as `witness_N_K.json`.
        #[arg(long, requires = "out")]
        emit_certificate: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Render a graph with optional labels and coloring.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        labels: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Family such as `circ:12,5`, `windmill:5`, `papermill:2,3`.
    #[arg(long)]
    family: Option<String>,
    /// Graph JSON file: `{"n": .., "edges": [[u, v], ..]}`.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Labels stay in [-B, B]; defaults to 40 times the vertex count.
    #[arg(long)]
    bound: Option<i64>,
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; more than one allows parallel search.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Sequential search even with several jobs.
    #[arg(long)]
    deterministic: bool,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Prime,
    #[value(name = "2odd")]
    TwoOdd,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Prime => Mode::PrimeDistance,
            ModeArg::TwoOdd => Mode::TwoOdd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Lookup,
    Goldbach,
    Vinogradov,
    Ramare,
}

impl From<Method> for CycleMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Lookup => CycleMethod::Lookup,
            Method::Goldbach => CycleMethod::Goldbach,
            Method::Vinogradov => CycleMethod::Vinogradov,
            Method::Ramare => CycleMethod::Ramare,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    /// A construction or desk-scale search gave up.
    Unavailable(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotFound(_) | Error::ConstructionFailed(_) => {
                Failure::Unavailable(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Run<T> = Result<T, Failure>;

/// What a command produced: the artifact text and the exit status.
struct Report {
    text: String,
    status: i32,
    note: Option<String>,
}

impl Report {
    fn json(value: &Value, status: i32) -> Self {
        Report {
            text: serde_json::to_string_pretty(value).expect("json value") + "\n",
            status,
            note: None,
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return status;
        }
    };
    let out = output_of(&cli.command).out.clone();
    match execute(cli.command) {
        Ok(report) => {
            if let Some(note) = &report.note {
                eprintln!("{note}");
            }
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &report.text) {
                        eprintln!("pdgraph: cannot write {}: {e}", path.display());
                        return EXIT_IO;
                    }
                }
                None => print!("{}", report.text),
            }
            report.status
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("pdgraph: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            eprintln!("pdgraph: {msg}");
            EXIT_IO
        }
        Err(Failure::Unavailable(msg)) => {
            eprintln!("pdgraph: {msg}");
            EXIT_UNKNOWN
        }
    }
}

fn output_of(c: &Command) -> &Output {
    match c {
        Command::Gen { output, .. }
        | Command::Label { output, .. }
        | Command::Verify { output, .. }
        | Command::Color { output, .. }
        | Command::Decide { output, .. }
        | Command::Sweep { output, .. }
        | Command::Export { output, .. } => output,
    }
}

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

/// The graph, its family when given as one, and the family's own coloring
/// (only the colored fans have one).
fn load_graph(input: &Input) -> Run<(Graph, Option<FamilySpec>)> {
    match (&input.family, &input.graph) {
        (Some(f), None) => {
            let spec: FamilySpec = f.parse()?;
            Ok((generate(&spec)?, Some(spec)))
        }
        (None, Some(path)) => Ok((Graph::from_json_str(&read(path)?)?, None)),
        _ => Err(Failure::Usage(
            "give exactly one of --family and --graph".into(),
        )),
    }
}

fn load_labels(g: &Graph, path: &Path) -> Run<Labeling> {
    let l = Labeling::from_json_str(&read(path)?)?;
    if l.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            got: l.len(),
        }
        .into());
    }
    Ok(l)
}

fn load_coloring(
    g: &Graph,
    spec: Option<&FamilySpec>,
    path: Option<&Path>,
) -> Run<Option<EdgeColoring>> {
    match (path, spec) {
        (Some(p), _) => Ok(Some(EdgeColoring::from_json_str(g, &read(p)?)?)),
        (None, Some(FamilySpec::ColoredFan(k))) => Ok(Some(colored_fan(*k).1)),
        _ => Ok(None),
    }
}

fn format_or(output: &Output, default: Format, allowed: &[Format]) -> Run<Format> {
    let f = output.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage(format!(
            "format {f:?} is not available for this command"
        )))
    }
}

fn execute(command: Command) -> Run<Report> {
    match command {
        Command::Gen { input, output } => {
            let (g, spec) = load_graph(&input)?;
            match format_or(&output, Format::Json, &[Format::Json, Format::Dot])? {
                Format::Dot => {
                    let c = load_coloring(&g, spec.as_ref(), None)?;
                    Ok(Report {
                        text: export_dot(&g, None, c.as_ref()),
                        status: EXIT_OK,
                        note: None,
                    })
                }
                _ => Ok(Report {
                    text: g.to_json_string() + "\n",
                    status: EXIT_OK,
                    note: None,
                }),
            }
        }
        Command::Label {
            input,
            method,
            terms,
            output,
        } => {
            format_or(&output, Format::Json, &[Format::Json])?;
            let (g, spec) = load_graph(&input)?;
            let l = construct(&g, spec.as_ref(), method, terms)?;
            let Some(l) = l else {
                let v = json!({ "outcome": "no_construction" });
                return Ok(Report::json(&v, EXIT_UNKNOWN)
                    .note("no explicit construction for this input; try `pdgraph decide`"));
            };
            let report = verify_labeling(&g, &l, Mode::PrimeDistance);
            let v = json!({ "labels": l.labels, "valid": report.valid });
            Ok(Report::json(
                &v,
                if report.valid { EXIT_OK } else { EXIT_REFUTED },
            ))
        }
        Command::Verify {
            input,
            labels,
            coloring,
            mode,
            output,
        } => {
            format_or(&output, Format::Json, &[Format::Json])?;
            let (g, _) = load_graph(&input)?;
            let l = load_labels(&g, &labels)?;
            let report = match coloring {
                Some(p) => {
                    let c = EdgeColoring::from_json_str(&g, &read(&p)?)?;
                    verify_color_satisfying(&g, &c, &l, mode.into())
                }
                None => verify_labeling(&g, &l, mode.into()),
            };
            let status = if report.valid { EXIT_OK } else { EXIT_REFUTED };
            let v = serde_json::to_value(&report).expect("report serializes");
            let note = match report.failures.len() {
                0 => "valid".to_string(),
                n => format!("invalid: {n} failure(s)"),
            };
            Ok(Report::json(&v, status).note(note))
        }
        Command::Color {
            input,
            coloring,
            budget,
            output,
        } => {
            format_or(&output, Format::Json, &[Format::Json])?;
            let (g, spec) = load_graph(&input)?;
            if let Some(p) = coloring {
                let c = EdgeColoring::from_json_str(&g, &read(&p)?)?;
                let report = verify_coloring_conditions(&g, &c);
                let status = if report.satisfied {
                    EXIT_OK
                } else {
                    EXIT_REFUTED
                };
                let v = serde_json::to_value(&report).expect("report serializes");
                return Ok(Report::json(&v, status));
            }
            let outcome = match spec {
                Some(FamilySpec::Circ1k(n, k)) => circulant_2odd_coloring(n, k)?,
                _ => find_2odd_coloring(&g, budget),
            };
            Ok(match outcome {
                TwoOddColoringOutcome::Coloring(c) => {
                    let l = construct_2odd_labeling(&g, &c)?;
                    let v = json!({
                        "outcome": "coloring",
                        "red": c.to_json(&g).red,
                        "labels": l.labels,
                    });
                    Report::json(&v, EXIT_OK)
                }
                TwoOddColoringOutcome::NotTwoOdd(refutation) => {
                    let v = json!({ "outcome": "not_two_odd", "refutation": refutation });
                    Report::json(&v, EXIT_REFUTED).note("PROVEN_NOT: no 2-odd coloring exists")
                }
                TwoOddColoringOutcome::Unknown { nodes } => {
                    let v = json!({ "outcome": "unknown", "nodes": nodes });
                    Report::json(&v, EXIT_UNKNOWN).note("coloring search budget exhausted")
                }
            })
        }
        Command::Decide {
            input,
            coloring,
            mode,
            search,
            emit_certificate,
            output,
        } => {
            format_or(&output, Format::Json, &[Format::Json])?;
            let (g, spec) = load_graph(&input)?;
            let c = load_coloring(&g, spec.as_ref(), coloring.as_deref())?;
            let cfg = SearchConfig {
                label_bound: search.bound.unwrap_or(40 * g.vertex_count().max(1) as i64),
                node_budget: search.budget.unwrap_or(SearchConfig::default().node_budget),
                deterministic: search.deterministic || search.jobs == 1,
                jobs: search.jobs,
            };
            let mode = Mode::from(mode);
            let outcome = decide(&g, spec.as_ref(), c.as_ref(), mode, &cfg)?;
            Ok(decision_report(
                &g,
                c.as_ref(),
                mode,
                &outcome,
                emit_certificate,
            ))
        }
        Command::Sweep {
            n_max,
            bound_per_vertex,
            budget,
            jobs,
            deterministic,
            emit_certificate,
            output,
        } => {
            let format = format_or(&output, Format::Csv, &[Format::Csv, Format::Json])?;
            let cfg = SweepConfig {
                bound_per_vertex,
                node_budget: budget.unwrap_or(SweepConfig::default().node_budget),
                jobs,
                deterministic: deterministic || jobs == 1,
                ..SweepConfig::default()
            };
            let rows = conjecture_sweep(n_max, &cfg)?;
            let mut files = vec![None; rows.len()];
            if emit_certificate {
                let dir = output
                    .out
                    .as_deref()
                    .and_then(Path::parent)
                    .unwrap_or(Path::new("."));
                for (row, file) in rows.iter().zip(&mut files) {
                    if let Some(w) = row.witness() {
                        let name = format!("witness_{}_{}.json", row.n, row.k);
                        fs::write(dir.join(&name), w.to_json_string() + "\n")
                            .map_err(|e| Failure::Io(format!("cannot write {name}: {e}")))?;
                        *file = Some(name);
                    }
                }
            }
            let inconsistent = rows
                .iter()
                .filter(|r| r.verdict == prime_distance::search::Verdict::Inconsistent)
                .count();
            let text = match format {
                Format::Json => {
                    let v: Vec<Value> = rows
                        .iter()
                        .zip(&files)
                        .map(|(r, f)| {
                            let mut v = serde_json::to_value(r).expect("row serializes");
                            v["kind"] = json!(r.outcome.kind());
                            v["witness_file"] = json!(f);
                            v
                        })
                        .collect();
                    serde_json::to_string_pretty(&v).expect("rows serialize") + "\n"
                }
                _ => sweep_csv(&rows, &files),
            };
            Ok(Report {
                text,
                status: if inconsistent == 0 { EXIT_OK } else { EXIT_REFUTED },
                note: Some(format!(
                    "{} cells, {inconsistent} inconsistent; no_witness_within_bound is evidence, not proof",
                    rows.len()
                )),
            })
        }
        Command::Export {
            input,
            labels,
            coloring,
            output,
        } => {
            let format = format_or(&output, Format::Dot, &[Format::Dot, Format::Json])?;
            let (g, spec) = load_graph(&input)?;
            let l = labels.map(|p| load_labels(&g, &p)).transpose()?;
            let c = load_coloring(&g, spec.as_ref(), coloring.as_deref())?;
            let text = match format {
                Format::Json => {
                    let mut v = json!({ "graph": g.to_json() });
                    if let Some(l) = &l {
                        v["labels"] = json!(l.labels);
                    }
                    if let Some(c) = &c {
                        v["red"] = json!(c.to_json(&g).red);
                    }
                    serde_json::to_string_pretty(&v).expect("json value") + "\n"
                }
                _ => export_dot(&g, l.as_ref(), c.as_ref()),
            };
            Ok(Report {
                text,
                status: EXIT_OK,
                note: None,
            })
        }
    }
}

/// The constructor that fits the family, if any. Graph files are tried as
/// bipartite graphs.
fn construct(
    g: &Graph,
    spec: Option<&FamilySpec>,
    method: Option<Method>,
    terms: Option<usize>,
) -> Run<Option<Labeling>> {
    let cycle = |n: usize| -> Run<Labeling> {
        Ok(match (method, terms) {
            (Some(Method::Ramare), t) => label_cycle_ramare(n, t)?,
            (Some(m), None) => label_cycle(n, m.into())?,
            (Some(_), Some(_)) => {
                return Err(Failure::Usage("--terms applies to --method ramare".into()))
            }
            (None, _) => label_cycle(
                n,
                if n <= 5 {
                    CycleMethod::Lookup
                } else {
                    CycleMethod::Goldbach
                },
            )?,
        })
    };
    let is_cycle = matches!(
        spec,
        Some(FamilySpec::Cycle(_)) | Some(FamilySpec::Circ1k(_, 1))
    );
    if method.is_some() && !is_cycle {
        return Err(Failure::Usage("--method applies to cycles".into()));
    }
    let l = match spec {
        Some(FamilySpec::Path(n)) => label_path(*n)?,
        Some(FamilySpec::Cycle(n)) | Some(FamilySpec::Circ1k(n, 1)) => cycle(*n)?,
        Some(FamilySpec::CompleteBipartite(r, s)) => label_bipartite(*r, *s)?,
        Some(FamilySpec::DutchWindmill(n)) => label_dutch_windmill(*n)?,
        Some(FamilySpec::PaperMill(n, k)) => label_paper_mill(*n, *k)?,
        Some(FamilySpec::Circ1k(n, 3)) if *n > 7 => label_circulant_k3(*n)?,
        Some(FamilySpec::Circ1k(n, k)) if 2 * k == *n && n % 4 == 0 => label_circulant_half(*n)?,
        _ => match label_bipartite_graph(g) {
            Ok(l) => l,
            Err(Error::InvalidSpec(_)) => return Ok(None),
            Err(e) => return Err(e.into()),
        },
    };
    Ok(Some(l))
}

fn decide(
    g: &Graph,
    spec: Option<&FamilySpec>,
    c: Option<&EdgeColoring>,
    mode: Mode,
    cfg: &SearchConfig,
) -> Run<DecisionOutcome> {
    if let Some(c) = c {
        return Ok(decide_color_satisfying(g, c, mode, cfg)?);
    }
    if mode == Mode::TwoOdd {
        return Ok(match find_2odd_coloring(g, cfg.node_budget) {
            TwoOddColoringOutcome::Coloring(c) => DecisionOutcome::Witness {
                labeling: construct_2odd_labeling(g, &c)?,
                nodes: 0,
            },
            TwoOddColoringOutcome::NotTwoOdd(_) => DecisionOutcome::ProvenNot {
                theorem: TheoremTag::NotTwoOdd,
            },
            TwoOddColoringOutcome::Unknown { nodes } => DecisionOutcome::BudgetExhausted {
                bound: cfg.label_bound,
                nodes,
            },
        });
    }
    if let Some(FamilySpec::Circ1k(n, k)) = spec {
        let known = classify_circulant(*n, *k)?;
        let settled = match &known {
            DecisionOutcome::ProvenNot { .. } => true,
            DecisionOutcome::ProvenYes { witness, .. } => witness.is_some(),
            _ => false,
        };
        if settled {
            return Ok(known);
        }
    }
    Ok(decide_prime_distance(g, cfg))
}

fn decision_report(
    g: &Graph,
    c: Option<&EdgeColoring>,
    mode: Mode,
    outcome: &DecisionOutcome,
    certificate: bool,
) -> Report {
    let mut v = serde_json::to_value(outcome).expect("outcome serializes");
    v["kind"] = json!(outcome.kind());
    if let Some(w) = outcome.witness() {
        v["labels"] = json!(w.labels);
        if certificate {
            let report = match c {
                Some(c) => verify_color_satisfying(g, c, w, mode),
                None => verify_labeling(g, w, mode),
            };
            v["certificate"] =
                json!({ "graph": g.to_json(), "labels": w.labels, "verify": report });
        }
    }
    let (status, note) = match outcome {
        DecisionOutcome::Witness { .. } => (EXIT_OK, "witness found".to_string()),
        DecisionOutcome::ProvenYes { theorem, .. } => {
            (EXIT_OK, format!("PROVEN_YES ({})", theorem.as_str()))
        }
        DecisionOutcome::ProvenNot { theorem } => {
            (EXIT_REFUTED, format!("PROVEN_NOT ({})", theorem.as_str()))
        }
        DecisionOutcome::NoWithinBound { bound, .. } => (
            EXIT_UNKNOWN,
            format!("no witness within B={bound} (evidence only, not a proof)"),
        ),
        DecisionOutcome::BudgetExhausted { nodes, .. } => (
            EXIT_UNKNOWN,
            format!("budget exhausted after {nodes} nodes"),
        ),
        DecisionOutcome::OpenConjectured {
            expected_prime_distance,
        } => (
            EXIT_UNKNOWN,
            format!("open; conjectured {expected_prime_distance}"),
        ),
    };
    Report::json(&v, status).note(note)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering. Vertices carry their labels; edges carry label differences
/// when labels are given. Red edges are bold, blue edges thin.
pub fn export_dot(g: &Graph, l: Option<&Labeling>, c: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let text = match l {
            Some(l) => format!("{}\\n{}", g.name(v), l.get(v)),
            None => g.name(v),
        };
        let _ = writeln!(out, "  {v} [label={}];", quote(&text));
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let mut attrs = Vec::new();
        if let Some(l) = l {
            attrs.push(format!("label=\"{}\"", l.difference(u, v).abs()));
        }
        match c.map(|c| c.is_red(id)) {
            Some(true) => attrs.push("color=red, style=bold, penwidth=3".into()),
            Some(false) => attrs.push("color=blue, style=solid, penwidth=1".into()),
            None => {}
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {u} -- {v};");
        } else {
            let _ = writeln!(out, "  {u} -- {v} [{}];", attrs.join(", "));
        }
    }
    out.push_str("}\n");
    out
}
