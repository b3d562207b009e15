//! The `edgestab` command line and its JSON report schema.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::census::{all_graphs, connected_graphs};
use crate::coloring::{chromatic_index_with, EdgeClass};
use crate::error::{Error, Result};
use crate::generators::FamilySpec;
use crate::graph::{DegreeProfile, Edge, Graph};
use crate::io::{read_graphs, write_graph, write_graph6, Format};
use crate::stability::{
    exact_es, mitigate, normalize_min_mitigating, stability_bounds, ExactOptions,
    NormalizationTrace, StabilityBounds, StabilityReport,
};
use crate::verify::{self, Scale, Suite};

pub const TOOL: &str = "edgestab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "edgestab", version, about = "Chromatic index and chromatic edge stability of small graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Read graphs from FILE instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<String>,
    /// Build the input graph from a family, e.g. --family "complete_minus_matching 3 2".
    #[arg(long, global = true, value_name = "SPEC", conflicts_with = "input")]
    family: Option<String>,
    /// Input format (detected when omitted); for `gen` and `census`, the output format.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Emit one JSON document per graph.
    #[arg(long, global = true)]
    json: bool,
    /// Abort after this many search steps (exit code 3).
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,
    /// Seed for random families.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Include wall-clock timings in JSON reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edgelist => Format::Edgelist,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic index and class.
    Chi,
    /// Chromatic edge stability index with a witness set.
    Es {
        /// Exhaustive minimum (default).
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        /// Constructive upper bound from the applicable theorem.
        #[arg(long)]
        bound: bool,
        /// Restrict the exact search to edges meeting a vertex of degree at least Δ-1.
        #[arg(long, value_enum, default_value = "off")]
        prune: Switch,
    },
    /// Constructive mitigating set: bipartite formula, Class 2 bound or general bound.
    Mitigate,
    /// Rewrite a minimum mitigating set so every edge meets a vertex of degree at least Δ-1.
    Normalize {
        /// The set as "u-v,u-v,…"; defaults to the exact witness.
        #[arg(long, value_name = "EDGES")]
        set: Option<String>,
    },
    /// Print a graph from a named family.
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Run self-checking suites: thm4, thm7, thm9, sec3, prop11, coloring or all.
    Verify {
        suite: String,
        /// Use the full census sizes (up to 9 vertices; minutes, not seconds).
        #[arg(long)]
        full: bool,
    },
    /// Print every graph on n vertices up to isomorphism, one graph6 line each.
    Census {
        n: usize,
        /// Only connected graphs with at least one edge.
        #[arg(long)]
        connected: bool,
    },
}

/// Where a reported graph came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputDescriptor {
    File { path: String, index: usize },
    Stdin { index: usize },
    Family { spec: FamilySpec },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> GraphSummary {
        GraphSummary { n: g.n(), m: g.edge_count(), graph6: write_graph6(g) }
    }
}

/// One report per input graph; see the README for the field reference.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: InputDescriptor,
    pub graph: GraphSummary,
    pub chi: usize,
    pub class: EdgeClass,
    pub profile: DegreeProfile,
    pub bounds: StabilityBounds,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stability: Option<StabilityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<NormalizationTrace>,
    /// Search steps charged against `--budget`.
    pub steps: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenDocument {
    pub tool: String,
    pub version: String,
    pub family: FamilySpec,
    pub graph: GraphSummary,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyDocument {
    pub tool: String,
    pub version: String,
    pub suites: Vec<&'static str>,
    pub full: bool,
    pub passed: bool,
    pub checks: Vec<verify::Check>,
}

enum Failure {
    Input(String),
    Budget(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run_cli<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(&cli, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_BAD_INPUT
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_BUDGET
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen { family, params } => gen(g, family, params, out),
        Command::Verify { suite, full } => run_verify(g, suite, *full, out),
        Command::Census { n, connected } => census(g, *n, *connected, out),
        command => {
            for (input, graph) in load_inputs(g, stdin)? {
                analyze(g, command, input, &graph, out)?;
            }
            Ok(())
        }
    }
}

fn family_from(g: &GlobalArgs, name: &str, params: &[String]) -> Result<FamilySpec, Failure> {
    let spec = FamilySpec::parse(name, params, g.seed.unwrap_or(0))?;
    if spec.is_random() && g.json && g.seed.is_none() {
        return Err(Failure::Input(format!("{name} is random; --json output requires --seed")));
    }
    Ok(spec)
}

fn load_inputs(g: &GlobalArgs, stdin: &mut dyn Read) -> Result<Vec<(InputDescriptor, Graph)>, Failure> {
    if let Some(text) = &g.family {
        let mut words = text.split_whitespace().map(str::to_string);
        let name = words.next().ok_or_else(|| Failure::Input("--family needs a family name".into()))?;
        let params: Vec<String> = words.collect();
        let spec = family_from(g, &name, &params)?;
        let graph = spec.generate()?;
        return Ok(vec![(InputDescriptor::Family { spec }, graph)]);
    }
    let format = g.format.map(Format::from);
    let (text, path) = match &g.input {
        Some(path) => (
            std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?,
            Some(path.clone()),
        ),
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            (text, None)
        }
    };
    let graphs = read_graphs(&text, format)?;
    if graphs.is_empty() {
        return Err(Failure::Input("no graph in input".into()));
    }
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(index, graph)| {
            let input = match &path {
                Some(path) => InputDescriptor::File { path: path.clone(), index },
                None => InputDescriptor::Stdin { index },
            };
            (input, graph)
        })
        .collect())
}

fn parse_edge_set(text: &str) -> Result<Vec<Edge>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Failure::Input(format!("edge {tok:?} is not of the form u-v")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Input(format!("edge {tok:?} has a bad vertex")))
            };
            Ok(Edge::new(parse(a)?, parse(b)?))
        })
        .collect()
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Chi => "chi",
        Command::Es { .. } => "es",
        Command::Mitigate => "mitigate",
        Command::Normalize { .. } => "normalize",
        Command::Gen { .. } => "gen",
        Command::Verify { .. } => "verify",
        Command::Census { .. } => "census",
    }
}

fn analyze(
    g: &GlobalArgs,
    command: &Command,
    input: InputDescriptor,
    graph: &Graph,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let started = Instant::now();
    let mut budget = g.budget.map_or_else(Budget::unlimited, Budget::steps);
    graph.require_edges()?;
    let chi = chromatic_index_with(graph, &mut budget)?;
    let class = if chi == graph.max_degree() { EdgeClass::Class1 } else { EdgeClass::Class2 };
    let mut stability = None;
    let mut normalization = None;
    match command {
        Command::Es { bound: true, .. } | Command::Mitigate => {
            stability = Some(mitigate(graph, &mut budget)?);
        }
        Command::Es { prune, .. } => {
            let opts = ExactOptions { prune_by_degree: *prune == Switch::On };
            stability = Some(exact_es(graph, opts, &mut budget)?);
        }
        Command::Normalize { set } => {
            let start = match set {
                Some(text) => parse_edge_set(text)?,
                None => exact_es(graph, ExactOptions::default(), &mut budget)?.witness.edges,
            };
            let (witness, trace) = normalize_min_mitigating(graph, &start, &mut budget)?;
            let bounds = stability_bounds(graph, chi);
            stability = Some(StabilityReport {
                es: witness.len(),
                witness,
                method: crate::stability::Method::Exact,
                bound_value: bounds.best(),
            });
            normalization = Some(trace);
        }
        _ => {}
    }
    let doc = ReportDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        command: command_name(command).into(),
        input,
        graph: GraphSummary::of(graph),
        chi,
        class,
        profile: graph.degree_profile(),
        bounds: stability_bounds(graph, chi),
        stability,
        normalization,
        steps: budget.used(),
        timings_ms: g.timings.then(|| started.elapsed().as_secs_f64() * 1e3),
    };
    if g.json {
        writeln!(out, "{}", serde_json::to_string(&doc).expect("report serializes"))?;
    } else {
        out.write_all(render_text(&doc).as_bytes())?;
    }
    Ok(())
}

fn edge_list_text(edges: &[Edge]) -> String {
    if edges.is_empty() {
        return "(none)".into();
    }
    edges.iter().map(Edge::to_string).collect::<Vec<_>>().join(" ")
}

fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    let class = match doc.class {
        EdgeClass::Class1 => 1,
        EdgeClass::Class2 => 2,
    };
    writeln!(s, "graph: n={} m={} graph6={}", doc.graph.n, doc.graph.m, doc.graph.graph6).unwrap();
    writeln!(s, "chi' = {} (Class {class}), Delta = {}", doc.chi, doc.profile.delta).unwrap();
    if let Some(rep) = &doc.stability {
        let label = match doc.command.as_str() {
            "normalize" => "normalized set".to_string(),
            _ => format!("es = {} ({})", rep.es, rep.method.as_str()),
        };
        writeln!(s, "{label}").unwrap();
        writeln!(s, "witness: {}", edge_list_text(&rep.witness.edges)).unwrap();
        writeln!(s, "chi' after removal: {}", rep.witness.chi_after).unwrap();
        writeln!(s, "best applicable bound: {}", rep.bound_value).unwrap();
    }
    if let Some(trace) = &doc.normalization {
        if trace.steps.is_empty() {
            writeln!(s, "no replacement needed").unwrap();
        }
        for (i, st) in trace.steps.iter().enumerate() {
            let fan: Vec<String> = st.fan.iter().map(usize::to_string).collect();
            writeln!(
                s,
                "step {}: replaced {} by {} (pivot {}, fan {}, free color {})",
                i + 1,
                st.removed,
                st.inserted,
                st.pivot,
                fan.join(" "),
                st.free_at_pivot
            )
            .unwrap();
        }
    }
    if doc.command == "chi" {
        let b = &doc.bounds;
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        writeln!(
            s,
            "bounds: class2={} general={} bipartite={}",
            opt(b.class2),
            b.general,
            opt(b.bipartite_formula)
        )
        .unwrap();
    }
    s
}

fn output_format(g: &GlobalArgs) -> Format {
    g.format.map_or(Format::Graph6, Format::from)
}

fn gen(g: &GlobalArgs, family: &str, params: &[String], out: &mut dyn Write) -> Result<(), Failure> {
    let spec = family_from(g, family, params)?;
    let graph = spec.generate()?;
    if g.json {
        let doc = GenDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            family: spec,
            graph: GraphSummary::of(&graph),
            edges: graph.edges().to_vec(),
        };
        writeln!(out, "{}", serde_json::to_string(&doc).expect("document serializes"))?;
    } else {
        out.write_all(write_graph(&graph, output_format(g)).as_bytes())?;
    }
    Ok(())
}

fn census(g: &GlobalArgs, n: usize, connected: bool, out: &mut dyn Write) -> Result<(), Failure> {
    if n > 10 {
        return Err(Failure::Input(format!("census is limited to 10 vertices, got {n}")));
    }
    let graphs = if connected { connected_graphs(n) } else { all_graphs(n) };
    let format = output_format(g);
    for graph in graphs {
        out.write_all(write_graph(&graph, format).as_bytes())?;
    }
    Ok(())
}

fn run_verify(g: &GlobalArgs, name: &str, full: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let suites = Suite::parse(name).ok_or_else(|| {
        Failure::Input(format!("unknown suite {name:?}; expected thm4, thm7, thm9, sec3, prop11, coloring or all"))
    })?;
    let mut scale = if full { Scale::full() } else { Scale::quick() };
    scale.seed = g.seed.unwrap_or(0);
    let mut checks = Vec::new();
    for suite in &suites {
        for check in verify::run(*suite, &scale) {
            if !g.json {
                let mark = if check.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{mark} {}: {}: {}", check.suite, check.name, check.detail)?;
            }
            checks.push(check);
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    if g.json {
        let doc = VerifyDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            suites: suites.iter().map(|s| s.name()).collect(),
            full,
            passed,
            checks,
        };
        writeln!(out, "{}", serde_json::to_string(&doc).expect("document serializes"))?;
    } else {
        let ok = checks.iter().filter(|c| c.passed).count();
        writeln!(out, "{ok} of {} checks passed", checks.len())?;
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}
