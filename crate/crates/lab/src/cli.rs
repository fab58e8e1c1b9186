//! The `mhc` command line.
//!
//! Exit codes: 0 success, 1 failed assertion or expectation, 2 usage,
//! 3 unreadable input, 4 capability bound exceeded, and for `construct` with
//! invalid parameters 5 (Δ or n out of range), 6 (Δ = n − 2),
//! 7 (Δ = 3 with n odd).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use mhc_core::canon::{canonical_form, CANON_MAX_ORDER};
use mhc_core::constructions::{
    build_g, build_h, build_wheel, construct, valid_degrees, valid_parameters, validity, ConstructionError,
    LabeledGraph, ValidityReason,
};
use mhc_core::formulas::verify_all_pairs;
use mhc_core::graph::{Graph, GraphError, CONNECTIVITY_MAX_ORDER};
use mhc_core::minimality::is_minimally_hc;
use mhc_core::search::{Source, SurveyReport, ENUMERATION_MAX_ORDER};
use mhc_core::solver::is_hamiltonian_connected;

use crate::formats::{emit_dot, emit_edgelist, parse_edgelist};
use crate::graph6::emit_graph6;
use crate::records::*;
use crate::stream::{read_graph6, StreamError};
use crate::survey::{dedup_stream, hunt_min_degree_4, pool, survey_graphs, survey_native, SurveyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CAPABILITY: i32 = 4;
pub const EXIT_RANGE: i32 = 5;
pub const EXIT_DELTA_N_MINUS_2: i32 = 6;
pub const EXIT_CUBIC_ODD: i32 = 7;

/// Largest order `verify-formulas` sweeps.
const FORMULA_MAX_ORDER: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "mhc", version, about = "Minimally hamiltonian-connected graph laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the extremal graph for (n, Δ).
    Construct(ConstructArgs),
    /// Check graphs read as graph6 or an edge list.
    Check(CheckArgs),
    /// Expand and verify every path template.
    VerifyFormulas(VerifyArgs),
    /// Survey all graphs of order n.
    Search(SearchArgs),
    /// Per-graph invariants, or the degree spectrum table.
    Stats(StatsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
    Csv,
    Dot,
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Wheel,
    CaseOdd,
    CaseEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("output").args(["format", "dot", "graph6", "edgelist"])))]
struct ConstructArgs {
    n: usize,
    delta: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Same as --format dot.
    #[arg(long)]
    dot: bool,
    /// Same as --format graph6.
    #[arg(long)]
    graph6: bool,
    /// Same as --format edgelist.
    #[arg(long)]
    edgelist: bool,
    /// Build this family directly instead of dispatching on (n, Δ).
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").args(["hc", "mhc", "connectivity"]).required(true)))]
struct CheckArgs {
    /// Hamiltonian-connectivity verdicts.
    #[arg(long)]
    hc: bool,
    /// Minimality verdicts with per-edge evidence.
    #[arg(long)]
    mhc: bool,
    /// Vertex connectivity.
    #[arg(long)]
    connectivity: bool,
    /// Read from a file instead of standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    input_format: InputFormat,
    #[arg(long, value_enum, default_value = "records")]
    format: Format,
    /// Exit 1 unless every graph passes (HC, minimal, or 3-connected).
    #[arg(long)]
    assert: bool,
    /// Abort on the first malformed line.
    #[arg(long)]
    strict: bool,
    /// Delete edge U,V from every input graph first; repeatable.
    #[arg(long = "drop-edge", value_name = "U,V", value_parser = parse_pair)]
    drop_edge: Vec<(usize, usize)>,
    /// Include the refuting pair for each edge decided by the solver.
    #[arg(long, requires = "mhc")]
    certificate: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Verify a single instance instead of the sweep.
    #[arg(requires = "delta")]
    n: Option<usize>,
    delta: Option<usize>,
    /// Largest order in the sweep.
    #[arg(long, default_value_t = 14, conflicts_with = "n")]
    max_n: usize,
    #[arg(long, value_enum, default_value = "records")]
    format: Format,
    /// Only print the summary.
    #[arg(long)]
    summary_only: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    n: usize,
    /// Read graphs of order n as graph6 from standard input.
    #[arg(long)]
    stdin_graph6: bool,
    /// Read graphs of order n as graph6 from a file.
    #[arg(long, conflicts_with = "stdin_graph6")]
    input: Option<PathBuf>,
    /// Exit 1 unless the maximum-degree spectrum is exactly this set.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    expect_max_degrees: Option<Vec<usize>>,
    /// Exit 1 unless the minimum-degree spectrum is exactly this set.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    expect_min_degrees: Option<Vec<usize>>,
    /// Also look for a minimal graph with minimum degree at least 4.
    #[arg(long)]
    hunt: bool,
    #[arg(long, env = "MHC_WORKERS")]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "records")]
    format: Format,
    /// Canonical forms held in memory before spilling to disk.
    #[arg(long, default_value_t = 1 << 20)]
    spill_bound: usize,
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[arg(long, conflicts_with = "spectrum")]
    input: Option<PathBuf>,
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "records")]
    format: Format,
    /// Survey n = 4..=MAX_N and tabulate the degree spectra.
    #[arg(long, value_name = "MAX_N")]
    spectrum: Option<usize>,
    #[arg(long, env = "MHC_WORKERS")]
    workers: Option<usize>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected U,V, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_INPUT, e.to_string())
    }
}

impl From<StreamError> for Failure {
    fn from(e: StreamError) -> Self {
        Failure::new(EXIT_INPUT, e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::TooLarge { .. } | GraphError::TooSmall { .. } => EXIT_CAPABILITY,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<SurveyError> for Failure {
    fn from(e: SurveyError) -> Self {
        match e {
            SurveyError::Graph(g) => g.into(),
            SurveyError::OrderMismatch { .. } => Failure::new(EXIT_INPUT, e.to_string()),
            _ => Failure::new(EXIT_INPUT, e.to_string()),
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match &e {
            ConstructionError::Invalid { reason, .. } => match reason {
                ValidityReason::DeltaEqualsNMinus2 => EXIT_DELTA_N_MINUS_2,
                ValidityReason::CubicOddOrder => EXIT_CUBIC_ODD,
                _ => EXIT_RANGE,
            },
            ConstructionError::Graph(g) => return g.clone().into(),
            _ => EXIT_RANGE,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line with explicit streams; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => run_construct(a, out),
        Command::Check(a) => run_check(a, stdin, out, err),
        Command::VerifyFormulas(a) => run_verify(a, out),
        Command::Search(a) => run_search(a, stdin, out, err),
        Command::Stats(a) => run_stats(a, stdin, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::new(EXIT_USAGE, message)
}

fn reject_formats(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
        Err(usage(format!("{command} does not support --format {name}")))
    }
}

fn open_input<'a>(path: &Option<PathBuf>, stdin: &'a mut dyn BufRead) -> Result<Box<dyn BufRead + 'a>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(
            File::open(p).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(stdin),
    })
}

fn read_graphs(
    reader: Box<dyn BufRead + '_>,
    strict: bool,
    err: &mut dyn Write,
) -> Result<Vec<(usize, Graph)>, Failure> {
    Ok(read_graph6(reader, strict, |e| {
        let _ = writeln!(err, "warning: skipped {e}");
    })?)
}

fn set_string(values: &[usize]) -> String {
    let items: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

// ---------------------------------------------------------------------------
// construct

fn run_construct(a: ConstructArgs, out: &mut dyn Write) -> Outcome {
    let format = match (a.format, a.dot, a.graph6, a.edgelist) {
        (Some(f), ..) => f,
        (None, true, _, _) => Format::Dot,
        (None, _, true, _) => Format::Graph6,
        (None, _, _, true) => Format::Edgelist,
        _ => Format::Text,
    };
    reject_formats(
        format,
        &[Format::Text, Format::Records, Format::Dot, Format::Graph6, Format::Edgelist],
        "construct",
    )?;
    let lg = match a.family {
        None => construct(a.n, a.delta)?,
        Some(FamilyArg::Wheel) => {
            if a.delta + 1 != a.n {
                return Err(Failure::new(EXIT_RANGE, format!("the wheel on {} vertices has Δ = {}", a.n, a.n.saturating_sub(1))));
            }
            build_wheel(a.n)?
        }
        Some(FamilyArg::CaseOdd) => build_g(a.n, a.delta)?,
        Some(FamilyArg::CaseEven) => build_h(a.n, a.delta)?,
    };
    let text = match format {
        Format::Dot => emit_dot(&lg),
        Format::Graph6 => emit_graph6(&lg.graph) + "\n",
        Format::Edgelist => emit_edgelist(&lg.graph),
        Format::Records => to_line(&ConstructionRecord::new(&lg)) + "\n",
        _ => construction_text(&lg),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn construction_text(lg: &LabeledGraph) -> String {
    let p = lg.params;
    let mut s = format!(
        "{}: family {}, n = {}, Δ = {}, k = {}, s = {}, {} edges\n",
        instance_name(lg),
        lg.family,
        p.n,
        p.delta,
        p.k,
        p.s,
        lg.graph.size()
    );
    for e in lg.graph.edges() {
        s += &format!("{} {}\n", lg.label(e.lo()), lg.label(e.hi()));
    }
    s
}

// ---------------------------------------------------------------------------
// check

fn run_check(a: CheckArgs, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    reject_formats(a.format, &[Format::Records, Format::Text, Format::Csv], "check")?;
    let mut reader = open_input(&a.input, stdin)?;
    let graphs = match a.input_format {
        InputFormat::Graph6 => read_graphs(reader, a.strict, err)?,
        InputFormat::Edgelist => {
            let mut text = String::new();
            reader.read_to_string(&mut text)?;
            let g = parse_edgelist(&text).map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
            vec![(1, g)]
        }
    };
    if a.format == Format::Csv {
        let header = if a.hc {
            "line,graph6,n,is_hc,witness_pairs_checked,failing_pair,pruned_by"
        } else if a.mhc {
            "line,graph6,n,is_hc,is_minimal,fast_path_used,edges"
        } else {
            "line,graph6,n,size,connectivity,min_degree,max_degree"
        };
        writeln!(out, "{header}")?;
    }
    let mut all_pass = true;
    for (line, mut g) in graphs {
        for &(u, v) in &a.drop_edge {
            g = g
                .remove_edge((u, v))
                .map_err(|e| Failure::new(EXIT_INPUT, format!("line {line}: --drop-edge {u},{v}: {e}")))?;
        }
        let g6 = emit_graph6(&g);
        if a.hc {
            let r = is_hamiltonian_connected(&g)?;
            all_pass &= r.is_hc;
            let rec = HcRecord::new(line, &g, &r);
            match a.format {
                Format::Csv => writeln!(
                    out,
                    "{line},{g6},{},{},{},{},{}",
                    rec.n,
                    rec.is_hc,
                    rec.witness_pairs_checked,
                    rec.failing_pair.map(|[u, v]| format!("{u}-{v}")).unwrap_or_default(),
                    rec.pruned_by.unwrap_or("")
                )?,
                Format::Text => {
                    let detail = match (rec.pruned_by, rec.failing_pair) {
                        (Some(p), _) => format!(" (pruned: {p})"),
                        (None, Some([u, v])) => format!(" (no Hamilton path {u}-{v})"),
                        _ => String::new(),
                    };
                    writeln!(out, "line {line}: {g6} hamiltonian-connected: {}{detail}", rec.is_hc)?
                }
                _ => writeln!(out, "{}", to_line(&rec))?,
            }
        } else if a.mhc {
            let v = is_minimally_hc(&g)?;
            all_pass &= v.is_minimal;
            let rec = MhcRecord::new(line, &g, &v, a.certificate);
            match a.format {
                Format::Csv => writeln!(
                    out,
                    "{line},{g6},{},{},{},{},{}",
                    rec.n,
                    rec.is_hc,
                    rec.is_minimal,
                    rec.fast_path_used,
                    rec.edges.len()
                )?,
                Format::Text => {
                    writeln!(out, "line {line}: {g6} hamiltonian-connected: {}, minimal: {}", v.is_hc, v.is_minimal)?;
                    for e in &rec.edges {
                        let pair = e.refuting_pair.map(|[a, b]| format!(" ({a}-{b})")).unwrap_or_default();
                        let reason = e.reason.unwrap_or("still hamiltonian-connected");
                        writeln!(out, "  {}-{}: {reason}{pair}", e.edge[0], e.edge[1])?;
                    }
                }
                _ => writeln!(out, "{}", to_line(&rec))?,
            }
        } else {
            if g.order() > CONNECTIVITY_MAX_ORDER {
                return Err(GraphError::TooLarge { what: "vertex connectivity", n: g.order(), max: CONNECTIVITY_MAX_ORDER }.into());
            }
            let k = g.vertex_connectivity()?;
            all_pass &= k >= 3;
            let rec = ConnectivityRecord {
                kind: "connectivity",
                line,
                graph6: g6.clone(),
                n: g.order(),
                size: g.size(),
                connectivity: k,
                min_degree: g.min_degree(),
                max_degree: g.max_degree(),
            };
            match a.format {
                Format::Csv => writeln!(
                    out,
                    "{line},{g6},{},{},{k},{},{}",
                    rec.n, rec.size, rec.min_degree, rec.max_degree
                )?,
                Format::Text => writeln!(out, "line {line}: {g6} connectivity {k}")?,
                _ => writeln!(out, "{}", to_line(&rec))?,
            }
        }
    }
    Ok(if a.assert && !all_pass { EXIT_ASSERT } else { EXIT_OK })
}

// ---------------------------------------------------------------------------
// verify-formulas

fn run_verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    reject_formats(a.format, &[Format::Records, Format::Text, Format::Csv], "verify-formulas")?;
    let instances: Vec<(usize, usize)> = match (a.n, a.delta) {
        (Some(n), Some(delta)) => {
            let verdict = validity(n, delta)?;
            if !verdict.valid {
                return Err(ConstructionError::Invalid { n, delta, reason: verdict.reason }.into());
            }
            if delta + 1 == n {
                return Err(usage(format!("W{n} has no path templates; use `check --hc`")));
            }
            vec![(n, delta)]
        }
        _ => {
            if a.max_n > FORMULA_MAX_ORDER {
                return Err(Failure::new(EXIT_CAPABILITY, format!("--max-n is limited to {FORMULA_MAX_ORDER}")));
            }
            valid_parameters(a.max_n).filter(|&(n, d)| d + 1 < n).collect()
        }
    };
    if a.format == Format::Csv && !a.summary_only {
        writeln!(out, "instance,n,delta,case,u,v,verified")?;
    }
    let mut summary = FormulaSummary { kind: "formula-summary", instances: 0, pairs: 0, verified: 0, failures: 0 };
    for (n, delta) in instances {
        let lg = construct(n, delta)?;
        let report = verify_all_pairs(&lg).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
        summary.instances += 1;
        summary.pairs += report.pairs();
        summary.verified += report.verified();
        summary.failures += report.pairs() - report.verified();
        if a.summary_only {
            continue;
        }
        match a.format {
            Format::Text => {
                writeln!(out, "{}: {}/{} pairs verified", instance_name(&lg), report.verified(), report.pairs())?;
                for r in report.failures() {
                    let e = r.error.as_ref().map(|e| e.to_string()).unwrap_or_default();
                    writeln!(out, "  FAIL {}-{}: {e}", lg.label(r.u), lg.label(r.v))?;
                }
            }
            Format::Csv => {
                for r in &report.records {
                    let rec = FormulaPairRecord::new(&lg, r);
                    writeln!(
                        out,
                        "{},{n},{delta},{},{},{},{}",
                        rec.instance,
                        rec.case.unwrap_or_default(),
                        rec.u,
                        rec.v,
                        rec.verified
                    )?;
                }
            }
            _ => {
                for r in &report.records {
                    writeln!(out, "{}", to_line(&FormulaPairRecord::new(&lg, r)))?;
                }
            }
        }
    }
    match a.format {
        Format::Text => writeln!(
            out,
            "{} instances, {} pairs, {} verified, {} failures",
            summary.instances, summary.pairs, summary.verified, summary.failures
        )?,
        Format::Csv if a.summary_only => {
            writeln!(out, "instances,pairs,verified,failures")?;
            writeln!(out, "{},{},{},{}", summary.instances, summary.pairs, summary.verified, summary.failures)?
        }
        Format::Csv => {}
        _ => writeln!(out, "{}", to_line(&summary))?,
    }
    Ok(if summary.failures == 0 { EXIT_OK } else { EXIT_ASSERT })
}

// ---------------------------------------------------------------------------
// search

fn predicted(n: usize) -> Vec<usize> {
    valid_degrees(n)
}

fn run_search(a: SearchArgs, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    reject_formats(a.format, &[Format::Records, Format::Text, Format::Csv], "search")?;
    let streamed = a.stdin_graph6 || a.input.is_some();
    if a.n < 4 {
        return Err(usage("search needs n ≥ 4"));
    }
    if !streamed && a.n > ENUMERATION_MAX_ORDER {
        return Err(usage(format!(
            "native enumeration covers n ≤ {ENUMERATION_MAX_ORDER}; supply graphs with --stdin-graph6 or --input"
        )));
    }
    if a.n > CANON_MAX_ORDER {
        return Err(Failure::new(EXIT_CAPABILITY, format!("surveys support n ≤ {CANON_MAX_ORDER}")));
    }
    let pool = pool(a.workers)?;
    let started = Instant::now();
    let (report, duplicates, graphs) = if streamed {
        let reader = open_input(&a.input, stdin)?;
        let mut graphs = Vec::new();
        for (line, g) in read_graphs(reader, a.strict, err)? {
            if g.order() == a.n {
                graphs.push(g);
            } else if a.strict {
                return Err(Failure::new(EXIT_INPUT, format!("line {line}: order {} differs from {}", g.order(), a.n)));
            } else {
                writeln!(err, "warning: skipped line {line}: order {} differs from {}", g.order(), a.n)?;
            }
        }
        let (graphs, duplicates) = dedup_stream(graphs, a.spill_bound)?;
        (survey_graphs(&pool, a.n, Source::ExternalStream, &graphs)?, duplicates, graphs)
    } else {
        let graphs = Vec::new();
        (survey_native(&pool, a.n)?, 0, graphs)
    };
    let hunt = if a.hunt {
        // only minimal graphs can be witnesses, and those are already known
        let candidates: Vec<Graph> = if streamed { graphs } else { report.mhc_graphs.clone() };
        Some(hunt_min_degree_4(&pool, &candidates)?)
    } else {
        None
    };
    writeln!(err, "elapsed {:.2?}", started.elapsed())?;

    let summary = SurveyRecord::new(&report, duplicates, predicted(a.n));
    write_survey(out, a.format, &report, &summary)?;
    if let Some(hit) = &hunt {
        let rec = HuntRecord {
            kind: "hunt",
            n: a.n,
            found: hit.is_some(),
            index: hit.as_ref().map(|h| h.index),
            graph6: hit.as_ref().map(|h| emit_graph6(&h.graph)),
            certificate: hit.as_ref().map(|h| MhcRecord::new(h.index + 1, &h.graph, &h.verdict, true)),
        };
        match a.format {
            Format::Records => writeln!(out, "{}", to_line(&rec))?,
            _ => match &rec.graph6 {
                Some(g6) => writeln!(out, "minimum degree ≥ 4 witness: {g6}")?,
                None => writeln!(out, "no minimal graph with minimum degree ≥ 4")?,
            },
        }
    }

    let mut code = EXIT_OK;
    for (flag, expected, got) in [
        ("--expect-max-degrees", &a.expect_max_degrees, &report.max_degree_spectrum),
        ("--expect-min-degrees", &a.expect_min_degrees, &report.min_degree_spectrum),
    ] {
        if let Some(list) = expected {
            let mut want = list.clone();
            want.sort_unstable();
            want.dedup();
            if &want != got {
                writeln!(err, "{flag}: expected {}, found {}", set_string(&want), set_string(got))?;
                code = EXIT_ASSERT;
            }
        }
    }
    Ok(code)
}

fn write_survey(out: &mut dyn Write, format: Format, report: &SurveyReport, s: &SurveyRecord) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(
                out,
                "n,source,graphs_scanned,mhc_count,max_degree_spectrum,predicted_max_degree_spectrum,min_degree_spectrum,wheel_unique_at_top"
            )?;
            let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(";");
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                s.n,
                s.source,
                s.graphs_scanned,
                s.mhc_count,
                join(&s.max_degree_spectrum),
                join(&s.predicted_max_degree_spectrum),
                join(&s.min_degree_spectrum),
                s.wheel_unique_at_top
            )
        }
        Format::Text => {
            writeln!(
                out,
                "n = {} ({}): {} graphs scanned, {} minimally hamiltonian-connected",
                s.n, s.source, s.graphs_scanned, s.mhc_count
            )?;
            for g in &report.mhc_graphs {
                writeln!(out, "  {}  Δ = {}, δ = {}, {} edges", emit_graph6(g), g.max_degree(), g.min_degree(), g.size())?;
            }
            writeln!(
                out,
                "max degree spectrum {} (predicted {})",
                set_string(&s.max_degree_spectrum),
                set_string(&s.predicted_max_degree_spectrum)
            )?;
            writeln!(out, "min degree spectrum {}", set_string(&s.min_degree_spectrum))?;
            writeln!(out, "wheel unique at Δ = n − 1: {}", s.wheel_unique_at_top)?;
            let f = &s.funnel;
            writeln!(
                out,
                "funnel: δ < 3 {}, κ < 3 {}, not HC {}, not minimal {}, minimal {}",
                f.min_degree, f.connectivity, f.not_hc, f.not_minimal, f.minimal
            )
        }
        _ => {
            for g in &report.mhc_graphs {
                writeln!(out, "{}", to_line(&MhcGraphRecord::new(g)))?;
            }
            writeln!(out, "{}", to_line(s))
        }
    }
}

// ---------------------------------------------------------------------------
// stats

fn run_stats(a: StatsArgs, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    reject_formats(a.format, &[Format::Records, Format::Text, Format::Csv], "stats")?;
    if let Some(max_n) = a.spectrum {
        return spectrum_table(max_n, a.workers, a.format, out);
    }
    let reader = open_input(&a.input, stdin)?;
    let graphs = read_graphs(reader, a.strict, err)?;
    if a.format == Format::Csv {
        writeln!(out, "line,graph6,n,size,min_degree,max_degree,connected,connectivity")?;
    }
    for (line, g) in graphs {
        let n = g.order();
        let connectivity = if n <= CONNECTIVITY_MAX_ORDER { Some(g.vertex_connectivity()?) } else { None };
        let canonical = if n <= CANON_MAX_ORDER { Some(emit_graph6(&canonical_form(&g)?.to_graph())) } else { None };
        let rec = StatsRecord {
            kind: "stats",
            line,
            graph6: emit_graph6(&g),
            n,
            size: g.size(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            degree_sequence: g.degree_profile().sequence(),
            connected: g.is_connected(),
            connectivity,
            canonical_graph6: canonical,
        };
        let k = rec.connectivity.map(|k| k.to_string()).unwrap_or_default();
        match a.format {
            Format::Csv => writeln!(
                out,
                "{line},{},{n},{},{},{},{},{k}",
                rec.graph6, rec.size, rec.min_degree, rec.max_degree, rec.connected
            )?,
            Format::Text => writeln!(
                out,
                "line {line}: {} n = {n}, {} edges, δ = {}, Δ = {}, κ = {}",
                rec.graph6,
                rec.size,
                rec.min_degree,
                rec.max_degree,
                if k.is_empty() { "n/a" } else { &k }
            )?,
            _ => writeln!(out, "{}", to_line(&rec))?,
        }
    }
    Ok(EXIT_OK)
}

fn spectrum_table(max_n: usize, workers: Option<usize>, format: Format, out: &mut dyn Write) -> Outcome {
    if !(4..=ENUMERATION_MAX_ORDER).contains(&max_n) {
        return Err(usage(format!("--spectrum needs 4 ≤ MAX_N ≤ {ENUMERATION_MAX_ORDER}")));
    }
    let pool = pool(workers)?;
    if format == Format::Csv {
        writeln!(out, "n,graphs_scanned,mhc_count,max_degree_spectrum,predicted_max_degree_spectrum,min_degree_spectrum,wheel_unique_at_top")?;
    }
    if format == Format::Text {
        writeln!(out, "n  scanned  mhc  max degrees      predicted        min degrees  wheel unique")?;
    }
    for n in 4..=max_n {
        let r = survey_native(&pool, n)?;
        let rec = SpectrumRecord {
            kind: "spectrum",
            n,
            graphs_scanned: r.graphs_scanned,
            mhc_count: r.mhc_graphs.len(),
            max_degree_spectrum: r.max_degree_spectrum.clone(),
            predicted_max_degree_spectrum: predicted(n),
            min_degree_spectrum: r.min_degree_spectrum.clone(),
            wheel_unique_at_top: r.wheel_unique_at_top,
        };
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(";");
        match format {
            Format::Csv => writeln!(
                out,
                "{n},{},{},{},{},{},{}",
                rec.graphs_scanned,
                rec.mhc_count,
                join(&rec.max_degree_spectrum),
                join(&rec.predicted_max_degree_spectrum),
                join(&rec.min_degree_spectrum),
                rec.wheel_unique_at_top
            )?,
            Format::Text => writeln!(
                out,
                "{n:<2} {:>8} {:>4}  {:<16} {:<16} {:<12} {}",
                rec.graphs_scanned,
                rec.mhc_count,
                set_string(&rec.max_degree_spectrum),
                set_string(&rec.predicted_max_degree_spectrum),
                set_string(&rec.min_degree_spectrum),
                rec.wheel_unique_at_top
            )?,
            _ => writeln!(out, "{}", to_line(&rec))?,
        }
    }
    Ok(EXIT_OK)
}
