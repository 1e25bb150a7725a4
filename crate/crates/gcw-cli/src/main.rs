//! `gcw`: construct codes in graphs, compute their parameters, verify their
//! symmetry and run the reproduction battery.

mod report;
mod source;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gcw::battery::{criterion_lines, run, select, CRITERIA};
use gcw::codecore::CodeReport;
use gcw::constructions::catalog;
use gcw::graphs::GraphSpec;
use gcw::structure::{is_elusive, verify_quotient_prop, ElusiveSearch};
use gcw::symmetry::{ambient_group, classify_pair, is_s_nt};
use gcw::{Budget, Error, Result};

use report::{Input, Report};
use source::{CodeSource, GroupSource};

#[derive(Debug, Parser)]
#[command(name = "gcw", version, about = "Codes in graphs: constructions, parameters and symmetry")]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest vertex count for the dense distance sweep.
    #[arg(long, global = true, default_value_t = Budget::default().dense_vertices)]
    max_dense_vertices: u64,
    /// Largest number of group elements any enumeration may touch.
    #[arg(long, global = true, default_value_t = Budget::default().group_elements)]
    max_group_elements: u64,
    /// Largest degree for the exhaustive normalizer scan.
    #[arg(long, global = true, default_value_t = Budget::default().normalizer_degree)]
    max_normalizer_degree: usize,
    /// Largest vertex count for exhaustive graph checks.
    #[arg(long, global = true, default_value_t = Budget::default().exhaustive_vertices)]
    max_exhaustive_vertices: u64,
    /// Largest orbit materialized by orbit closures.
    #[arg(long, global = true, default_value_t = Budget::default().orbit_points)]
    max_orbit_points: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            dense_vertices: self.max_dense_vertices,
            group_elements: self.max_group_elements,
            normalizer_degree: self.max_normalizer_degree,
            exhaustive_vertices: self.max_exhaustive_vertices,
            orbit_points: self.max_orbit_points,
        }
    }
}

#[derive(Debug, Args)]
struct CodeArgs {
    /// catalog:<name>, file:<path> or construction:<family>:<k=v,...>.
    #[arg(long)]
    code: String,
    /// Host graph, e.g. hamming:n=8,q=2; required for label files without a
    /// `# graph:` header.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a code as a codeword file.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        /// Output path (default: standard output).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Minimum distance, covering radius, distance partition and regularity.
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// (G, s)-neighbour-transitivity of a code.
    Symmetry {
        #[command(flatten)]
        code: CodeArgs,
        /// builtin:<name> or file:<path> (JSON).
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        s: usize,
    },
    /// Entry-faithful / alphabet-affine / alphabet-almost-simple tag.
    Classify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        group: String,
    },
    /// Normal quotient of a graph and its distance-transitivity.
    Quotient {
        #[arg(long)]
        graph: String,
        /// The vertex-transitive group G.
        #[arg(long)]
        group: String,
        /// The normal subgroup N.
        #[arg(long)]
        normal: String,
        /// Label of α; the code is α^N (default: vertex 0).
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 1)]
        s: usize,
    },
    /// Search for an automorphism fixing the neighbour set and moving the code.
    Elusive {
        #[command(flatten)]
        code: CodeArgs,
        /// Search only the generators of this group.
        #[arg(long, conflicts_with = "ambient")]
        group: Option<String>,
        /// Search every element of the automorphism group of this graph.
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Run the reproduction battery.
    VerifyPaper {
        /// Run only checks whose id contains this text.
        #[arg(long)]
        only: Option<String>,
    },
}

/// Exit status: 0 success, 1 verification failure, 2 usage or input error,
/// 3 mathematical precondition failure.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidParameter(_) | Error::Io(_) | Error::TrivialCode(_) | Error::Unknown(_) | Error::DegreeMismatch(..) => 2,
        Error::Precondition(_) => 3,
        Error::BudgetExceeded { .. } | Error::Contradiction(_) => 1,
    }
}

struct Outcome {
    report: Option<Report>,
    text: String,
    status: u8,
}

fn graph_spec(text: Option<&str>) -> Result<Option<GraphSpec>> {
    text.map(GraphSpec::parse).transpose()
}

fn to_value(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let budget = cli.budget.budget();
    let start = Instant::now();
    let finish = |command, input, result: Value| {
        let report = Report::new(command, input, result, start.elapsed().as_millis());
        let text = report.to_text();
        Ok(Outcome { report: Some(report), text, status: 0 })
    };
    let load = |args: &CodeArgs, fallback: Option<&str>| -> Result<(CodeSource, gcw::codecore::Code)> {
        let source: CodeSource = args.code.parse()?;
        let spec = graph_spec(args.graph.as_deref().or(fallback))?;
        let code = source.load(spec.as_ref(), &budget)?;
        Ok((source, code))
    };
    match &cli.command {
        Command::Construct { code, output } => {
            let (source, code) = load(code, None)?;
            let mut text = format!("# graph: {}\n# source: {source}\n", code.graph().spec());
            for label in code.labels() {
                text.push_str(&label);
                text.push('\n');
            }
            match output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    Ok(Outcome { report: None, text: format!("wrote {} codewords to {}\n", code.len(), path.display()), status: 0 })
                }
                None => Ok(Outcome { report: None, text, status: 0 }),
            }
        }
        Command::Analyze { code } => {
            let (source, code) = load(code, None)?;
            if code.is_empty() {
                return Err(Error::TrivialCode(format!("{source} has no codewords")));
            }
            let mut result = to_value(CodeReport::compute(&code, &budget));
            if let CodeSource::Catalog(name) = &source {
                if let Some(quoted) = catalog().iter().find(|e| e.name == name).and_then(|e| e.quoted_covering_radius) {
                    result["quoted_covering_radius"] = json!(quoted);
                }
            }
            finish("analyze", Input::for_code(source.to_string(), &code), result)
        }
        Command::Symmetry { code, group, s } => {
            let (source, code) = load(code, None)?;
            let group_source: GroupSource = group.parse()?;
            let rep = group_source.load(code.graph())?;
            let report = is_s_nt(&code, &rep, *s, &budget)?;
            let input = Input {
                group: Some(group_source.to_string()),
                group_order: Some(rep.group().order()),
                s: Some(*s),
                ..Input::for_code(source.to_string(), &code)
            };
            finish("symmetry", input, to_value(report))
        }
        Command::Classify { code, group } => {
            let (source, code) = load(code, None)?;
            let group_source: GroupSource = group.parse()?;
            let rep = group_source.load(code.graph())?;
            let result = classify_pair(&code, &rep, &budget)?;
            let input =
                Input { group: Some(group_source.to_string()), group_order: Some(rep.group().order()), ..Input::for_code(source.to_string(), &code) };
            finish("classify", input, to_value(result))
        }
        Command::Quotient { graph, group, normal, alpha, s } => {
            let spec = GraphSpec::parse(graph)?;
            let host = Arc::new(spec.build(&budget)?);
            let group_source: GroupSource = group.parse()?;
            let rep = group_source.load(&host)?;
            let normal_rep = normal.parse::<GroupSource>()?.load(&host)?;
            let alpha = alpha.as_deref().map(|a| host.parse_label(a)).transpose()?.unwrap_or(0);
            let report = verify_quotient_prop(&host, &rep, normal_rep.group().gens(), alpha, *s, &budget)?;
            let input = Input {
                graph: Some(spec.to_string()),
                group: Some(format!("{group_source} / {normal}")),
                group_order: Some(rep.group().order()),
                s: Some(*s),
                ..Input::default()
            };
            finish("quotient", input, to_value(report))
        }
        Command::Elusive { code, group, ambient } => {
            let (source, code) = load(code, ambient.as_deref())?;
            let mut input = Input::for_code(source.to_string(), &code);
            let verdict = match (group, ambient) {
                (Some(g), _) => {
                    let group_source: GroupSource = g.parse()?;
                    let rep = group_source.load(code.graph())?;
                    input.group = Some(group_source.to_string());
                    is_elusive(&code, ElusiveSearch::Generators(&rep), &budget)?
                }
                (None, Some(a)) => {
                    let spec = GraphSpec::parse(a)?;
                    if spec.to_string() != code.graph().spec() {
                        return Err(Error::Parse(format!("--ambient {spec} is not the host {}", code.graph().spec())));
                    }
                    let rep = ambient_group(code.graph())?;
                    input.group = Some(format!("ambient:{spec}"));
                    is_elusive(&code, ElusiveSearch::Ambient(Some(&rep)), &budget)?
                }
                (None, None) => is_elusive(&code, ElusiveSearch::Ambient(None), &budget)?,
            };
            finish("elusive", input, to_value(verdict))
        }
        Command::VerifyPaper { only } => {
            let selected = select(only.as_deref());
            if selected.is_empty() {
                eprintln!("warning: no checks match {:?}", only.as_deref().unwrap_or(""));
            }
            let results = run(only.as_deref(), &budget);
            let mut text = String::new();
            for r in &results {
                let mark = if r.pass { "PASS" } else { "FAIL" };
                text.push_str(&format!("{mark} [{:>2}] {}: expected {}, computed {}\n", r.criterion, r.id, r.expected, r.computed));
            }
            let lines = criterion_lines(&results);
            for (k, pass, _) in &lines {
                text.push_str(&format!("criterion {k:>2} {}: {}\n", if *pass { "PASS" } else { "FAIL" }, CRITERIA[k - 1]));
            }
            let passed = results.iter().filter(|r| r.pass).count();
            text.push_str(&format!("{passed}/{} checks passed\n", results.len()));
            let status = u8::from(passed != results.len());
            let checks: Vec<Value> = results
                .iter()
                .map(|r| json!({"criterion": r.criterion, "id": r.id, "expected": r.expected, "computed": r.computed, "pass": r.pass}))
                .collect();
            let input = Input { filter: only.clone(), ..Input::default() };
            let result = json!({"checks": checks, "passed": passed, "total": results.len()});
            let report = Report::new("verify-paper", input, result, start.elapsed().as_millis());
            Ok(Outcome { report: Some(report), text, status })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(&cli) {
        Ok(outcome) => {
            if let (Some(path), Some(report)) = (&cli.report, &outcome.report) {
                if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            let body = match (&outcome.report, cli.json) {
                (Some(report), true) => report.to_json() + "\n",
                _ => outcome.text,
            };
            let _ = std::io::stdout().write_all(body.as_bytes());
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
