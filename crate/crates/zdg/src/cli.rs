//! Command-line front end. `run` maps outcomes to exit codes: 0 success,
//! 1 counterexample, 2 usage or input error, 3 resource limit.

use crate::dn::{build_dn_graph, dn_report};
use crate::graph::{property_report, Label, LabeledGraph, ReportOptions};
use crate::numthy::factorize;
use crate::product::{build_product_graph, build_product_type_graph_with, product_report, ProductDims};
use crate::theorems::zn_report;
use crate::verify::{list_claims, registry, run_claim, RunOptions, Status};
use crate::zn::{build_ring_graph, build_type_graph};
use crate::{Error, DEFAULT_BUILD_CAP, DEFAULT_ORACLE_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "zdg", version, about = "Zero-divisor graphs of Z_n, its products, and divisor posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Zero-divisor graph of Z_n.
    Ring {
        n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Zero-divisor graph of Z_n1 x ... x Z_nk.
    Product {
        #[arg(value_parser = parse_dims)]
        dims: ProductDims,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Type graph of Z_n, or of a product when given comma-separated moduli.
    Typegraph {
        target: String,
        /// Add a loop on every type whose square is zero.
        #[arg(long)]
        strong: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Zero-divisor graph of the divisor poset D_n.
    Poset {
        n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Tabulate selected properties over a range of n.
    Survey {
        #[arg(long, value_enum)]
        kind: SurveyKind,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Comma-separated property names, e.g. clique_number,perfect.
        #[arg(long, value_delimiter = ',', required = true)]
        props: Vec<String>,
        #[arg(long, value_enum, default_value_t = SurveyFormat::Csv)]
        format: SurveyFormat,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run one claim, or every claim, printing one JSON line per claim.
    Verify {
        #[arg(long)]
        claim: Option<String>,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
        /// Node budget for each exponential search.
        #[arg(long)]
        budget: Option<u64>,
        /// Collect every counterexample instead of stopping at the first.
        #[arg(long)]
        exhaustive: bool,
    },
    /// List registered claims.
    Claims,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Export {
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SurveyKind {
    Ring,
    Poset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SurveyFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Limits {
    /// Vertex cap for graph construction.
    #[arg(long, default_value_t = DEFAULT_BUILD_CAP)]
    cap: usize,
    /// Vertex cap for the exponential-time oracles.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Node budget for each exponential search.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Include the oracle property report and the closed-form predictions.
    #[arg(long)]
    report: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Shorthand for --format dot.
    #[arg(long, value_enum, conflicts_with = "format")]
    export: Option<Export>,
    #[command(flatten)]
    limits: Limits,
}

fn parse_dims(s: &str) -> Result<ProductDims, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Properties whose computation is polynomial.
const CHEAP_PROPS: &[&str] = &[
    "vertex_count",
    "edge_count",
    "loop_count",
    "complete",
    "regular",
    "connected",
    "eulerian",
    "complete_multipartite",
    "girth",
    "diameter",
    "chordal",
    "chordal_witness",
    "planar",
    "simplicial",
];

const EXPENSIVE_PROPS: &[&str] = &[
    "clique_number",
    "chromatic_number",
    "independence_number",
    "domination_number",
    "min_dominating_count",
    "vertex_cover_number",
    "perfect",
    "perfect_witness",
];

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<crate::graph::GraphError> for Failure {
    fn from(e: crate::graph::GraphError) -> Self {
        Error::from(e).into()
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Resource(format!("output error: {e}"))
    }
}

/// Parses `argv` (program name first) and runs the command, writing
/// results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Resource(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_RESOURCE
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(argv, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Ring { n, out: args } => {
            let g = build_ring_graph(n, Some(args.limits.cap))?;
            let header = json!({"family": "ring", "n": n});
            let closed = || Ok(json!(zn_report(n)?));
            emit_graph(out, &g, header, &args, closed)
        }
        Command::Product { dims, out: args } => {
            let g = build_product_graph(&dims, Some(args.limits.cap))?;
            let header = json!({"family": "product", "dims": dims});
            let closed = || Ok(json!(product_report(&dims)?));
            emit_graph(out, &g, header, &args, closed)
        }
        Command::Typegraph { target, strong, out: args } => {
            let cap = Some(args.limits.cap);
            if target.contains(',') {
                let dims = parse_dims(&target).map_err(Failure::Usage)?;
                let g = build_product_type_graph_with(&dims, strong, cap)?;
                let header = json!({"family": "product_type_graph", "dims": dims, "strong": strong});
                emit_graph(out, &g, header, &args, || Ok(Value::Null))
            } else {
                let n: u64 = target
                    .parse()
                    .map_err(|_| Failure::Usage(format!("expected n or comma-separated moduli, got {target:?}")))?;
                factorize(n).map_err(Error::from)?;
                let g = build_type_graph(n, strong)?;
                crate::zn::ensure_within("type graph construction", g.vertex_count() as u64, cap)?;
                let header = json!({"family": "type_graph", "n": n, "strong": strong});
                emit_graph(out, &g, header, &args, || Ok(Value::Null))
            }
        }
        Command::Poset { n, out: args } => {
            let g = build_dn_graph(n, Some(args.limits.cap))?;
            let header = json!({"family": "poset", "n": n});
            let closed = || Ok(json!(dn_report(n)?));
            emit_graph(out, &g, header, &args, closed)
        }
        Command::Survey { kind, from, to, props, format, limits } => {
            survey(out, kind, from, to, &props, format, &limits)
        }
        Command::Verify { claim, from, to, budget, exhaustive } => {
            let opts = RunOptions { from, to, budget, exhaustive };
            let ids: Vec<String> = match claim {
                Some(id) => vec![id],
                None => registry().iter().map(|c| c.id.to_string()).collect(),
            };
            let (mut failed, mut limited) = (false, false);
            for id in ids {
                let o = run_claim(&id, opts)?;
                writeln!(out, "{}", o.to_json_line())?;
                failed |= o.status == Status::Counterexample;
                limited |= o.status == Status::ResourceLimit;
            }
            Ok(if failed {
                EXIT_COUNTEREXAMPLE
            } else if limited {
                EXIT_RESOURCE
            } else {
                EXIT_OK
            })
        }
        Command::Claims => {
            for c in list_claims() {
                writeln!(out, "{}\t{}\t{}", c.id, c.domain, c.description)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn report_options(limits: &Limits, cheap_only: bool) -> ReportOptions {
    ReportOptions {
        oracle_cap: Some(limits.oracle_cap),
        budget: limits.budget,
        cheap_only,
    }
}

/// Edge pairs with i <= j in ascending index order, loops included.
fn edge_pairs(g: &LabeledGraph) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = g.edges().chain(g.loops().map(|v| (v, v))).collect();
    pairs.sort_unstable();
    pairs
}

fn emit_graph(
    out: &mut dyn Write,
    g: &LabeledGraph,
    header: Value,
    args: &OutputArgs,
    closed_form: impl FnOnce() -> crate::Result<Value>,
) -> Result<i32, Failure> {
    let format = match (args.format, args.export) {
        (_, Some(Export::Dot)) => Format::Dot,
        (Some(f), None) => f,
        (None, None) => Format::Json,
    };
    let mut properties = Map::new();
    if args.report {
        let r = property_report(g, report_options(&args.limits, false))?;
        let Value::Object(m) = json!(r) else { unreachable!("reports are objects") };
        properties = m;
        let c = closed_form()?;
        if !c.is_null() {
            properties.insert("closed_form".into(), c);
        }
    } else {
        properties.insert("vertex_count".into(), json!(g.vertex_count()));
        properties.insert("edge_count".into(), json!(g.edge_count()));
    }
    match format {
        Format::Dot => write!(out, "{}", to_dot(g))?,
        Format::Json => {
            let Value::Object(mut doc) = header else { unreachable!("headers are objects") };
            doc.insert("vertices".into(), json!(g.labels()));
            let edges: Vec<[&Label; 2]> =
                edge_pairs(g).into_iter().map(|(i, j)| [g.label(i), g.label(j)]).collect();
            doc.insert("edges".into(), json!(edges));
            doc.insert("properties".into(), Value::Object(properties));
            writeln!(out, "{}", Value::Object(doc))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let fail = |e: csv::Error| Failure::Resource(format!("output error: {e}"));
            if args.report {
                w.write_record(["property", "value"]).map_err(fail)?;
                for (k, v) in &properties {
                    w.write_record([k.as_str(), &csv_cell(v)]).map_err(fail)?;
                }
            } else {
                w.write_record(["u", "v"]).map_err(fail)?;
                for (i, j) in edge_pairs(g) {
                    w.write_record([g.label(i).to_string(), g.label(j).to_string()]).map_err(fail)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

/// Undirected DOT: quoted ids, nodes then edges in ascending label order.
pub fn to_dot(g: &LabeledGraph) -> String {
    let mut s = String::from("graph {\n");
    for l in g.labels() {
        s.push_str(&format!("  \"{l}\";\n"));
    }
    for (i, j) in edge_pairs(g) {
        s.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label(i), g.label(j)));
    }
    s.push_str("}\n");
    s
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn survey(
    out: &mut dyn Write,
    kind: SurveyKind,
    from: u64,
    to: u64,
    props: &[String],
    format: SurveyFormat,
    limits: &Limits,
) -> Result<i32, Failure> {
    for p in props {
        if !CHEAP_PROPS.contains(&p.as_str()) && !EXPENSIVE_PROPS.contains(&p.as_str()) {
            let known = [CHEAP_PROPS, EXPENSIVE_PROPS].concat().join(", ");
            return Err(Failure::Usage(format!("unknown property {p:?}; known: {known}")));
        }
    }
    if from < 2 || from > to {
        return Err(Failure::Usage(format!("need 2 <= from <= to, got [{from}, {to}]")));
    }
    let cheap_only = props.iter().all(|p| CHEAP_PROPS.contains(&p.as_str()));
    let opts = report_options(limits, cheap_only);
    let mut rows = Vec::new();
    for n in from..=to {
        let g = match kind {
            SurveyKind::Ring => build_ring_graph(n, Some(limits.cap))?,
            SurveyKind::Poset => build_dn_graph(n, Some(limits.cap))?,
        };
        let report = json!(property_report(&g, opts)?);
        let row: Vec<Value> = props.iter().map(|p| report.get(p).cloned().unwrap_or(Value::Null)).collect();
        rows.push((n, row));
    }
    match format {
        SurveyFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let fail = |e: csv::Error| Failure::Resource(format!("output error: {e}"));
            let mut head = vec!["n".to_string()];
            head.extend(props.iter().cloned());
            w.write_record(&head).map_err(fail)?;
            for (n, row) in &rows {
                let mut rec = vec![n.to_string()];
                rec.extend(row.iter().map(csv_cell));
                w.write_record(&rec).map_err(fail)?;
            }
            w.flush()?;
        }
        SurveyFormat::Json => {
            let arr: Vec<Value> = rows
                .into_iter()
                .map(|(n, row)| {
                    let mut m = Map::new();
                    m.insert("n".into(), json!(n));
                    for (p, v) in props.iter().zip(row) {
                        m.insert(p.clone(), v);
                    }
                    Value::Object(m)
                })
                .collect();
            writeln!(out, "{}", Value::Array(arr))?;
        }
    }
    Ok(EXIT_OK)
}
