//! `cbo`: generate graphs, build, verify and search for cyclic base orderings.
//!
//! Exit codes: 0 success, 1 semantic failure (not a CBO, no ordering found,
//! sweep disagreement), 2 usage or parse error.

mod manifest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use cbo_core::analysis::analyze;
use cbo_core::constructors::{
    circulant_alternating_cbo, polygon_chain_cbo, series_cbo_density, series_cbo_equal,
    series_cbo_multi, theta_uniform_cbo, CirculantPattern, Construction, SeriesPart,
};
use cbo_core::families::{FamilySpec, FAMILY_GRAMMAR};
use cbo_core::ordering::to_dot;
use cbo_core::search::{
    find_cbo_with_workers, sweep_small_graphs, Budget, SearchStatus, SweepConfig,
};
use cbo_core::{verify_cbo, EdgeOrdering, Error, Graph};

use manifest::RunManifest;

#[derive(Parser)]
#[command(name = "cbo", version, about = "Cyclic base orderings of graphs")]
struct Cli {
    /// Where to write the run manifest (default: next to the output, else stderr).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Stop after this many search nodes.
    #[arg(long)]
    node_budget: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long)]
    time_budget: Option<f64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Make results independent of scheduling when running several workers.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    deterministic: bool,
}

impl SearchArgs {
    fn budget(&self) -> anyhow::Result<Budget> {
        let max_time = self
            .time_budget
            .map(Duration::try_from_secs_f64)
            .transpose()
            .map_err(|e| Error::InvalidParameter(format!("time budget: {e}")))?;
        Ok(Budget {
            max_nodes: self.node_budget,
            max_time,
        })
    }

    fn record(&self, m: &mut RunManifest) {
        if let Some(n) = self.node_budget {
            m.param("node_budget", n);
        }
        if let Some(t) = self.time_budget {
            m.param("time_budget", t);
        }
        m.param("workers", self.workers);
        m.param("deterministic", self.deterministic);
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    ThetaUniform,
    SeriesEqual,
    SeriesDensity,
    SeriesMulti,
    Polygon,
    CirculantAlt,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member as graph JSON.
    Gen {
        /// e.g. `triangular:4`, `theta:1,2,5`, `circulant:9:1,4`.
        spec: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check an ordering; prints the verification report.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short = 'r', long)]
        ordering: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build an ordering with one of the constructions.
    Construct {
        #[arg(value_enum)]
        method: Method,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Polygon sides.
        #[arg(long)]
        g: Option<usize>,
        /// Number of polygons.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        x: Option<usize>,
        /// `GRAPH,ORDERING[,u:v]` for the series methods, in composition order.
        /// `u:v` glues this part's vertex v onto vertex u of what came before.
        #[arg(long)]
        part: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write the constructed graph.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Density, uniform density with witness, minimum degree.
    Analyze {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for an ordering.
    Search {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compare search against uniform density on every small connected graph.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: usize,
        /// Allow up to this many parallel edges per vertex pair.
        #[arg(long, default_value_t = 1)]
        max_multiplicity: usize,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Graphviz DOT, edges labeled by rank when an ordering is given.
    ExportDot {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short = 'r', long)]
        ordering: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

struct Done {
    code: u8,
    outcome: String,
}

impl Done {
    fn ok(outcome: impl Into<String>) -> anyhow::Result<Done> {
        Ok(Done {
            code: 0,
            outcome: outcome.into(),
        })
    }

    fn failed(outcome: impl Into<String>) -> anyhow::Result<Done> {
        Ok(Done {
            code: 1,
            outcome: outcome.into(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut manifest = RunManifest::new(command_name(&cli.command));
    let code = match run(cli.command, &mut manifest) {
        Ok(done) => {
            manifest.outcome = done.outcome;
            done.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            manifest.outcome = format!("error: {e:#}");
            exit_code(&e)
        }
    };
    manifest.exit_code = code;
    if let Err(e) = manifest.emit(cli.manifest.as_deref()) {
        eprintln!("error: writing manifest: {e}");
    }
    ExitCode::from(code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen { .. } => "gen",
        Command::Verify { .. } => "verify",
        Command::Construct { .. } => "construct",
        Command::Analyze { .. } => "analyze",
        Command::Search { .. } => "search",
        Command::Sweep { .. } => "sweep",
        Command::ExportDot { .. } => "export-dot",
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<std::io::Error>().is_some() {
        return 2;
    }
    match e.downcast_ref::<Error>() {
        Some(
            Error::Disconnected
            | Error::UndefinedDensity
            | Error::Precondition(_)
            | Error::NotACbo(_)
            | Error::ClaimViolation { .. },
        ) => 1,
        _ => 2,
    }
}

fn read_graph(path: &Path, m: &mut RunManifest) -> anyhow::Result<Graph> {
    m.input(path);
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_ordering(path: &Path, m: &mut RunManifest) -> anyhow::Result<EdgeOrdering> {
    m.input(path);
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    EdgeOrdering::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Writes to `out`, or stdout when there is none.
fn emit(out: Option<&Path>, text: &str, m: &mut RunManifest) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            m.output(path);
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialises") + "\n"
}

fn run(command: Command, m: &mut RunManifest) -> anyhow::Result<Done> {
    match command {
        Command::Gen { spec, out } => {
            m.param("spec", &spec);
            let family: FamilySpec = spec
                .parse()
                .map_err(|e: Error| anyhow!("{e}\nexpected one of: {FAMILY_GRAMMAR}"))?;
            let g = family.build()?;
            emit(out.as_deref(), &g.to_json(), m)?;
            Done::ok(format!(
                "{} vertices, {} edges",
                g.num_vertices(),
                g.num_edges()
            ))
        }
        Command::Verify {
            graph,
            ordering,
            out,
        } => {
            let g = read_graph(&graph, m)?;
            let o = read_ordering(&ordering, m)?;
            let report = verify_cbo(&g, &o)?;
            emit(out.as_deref(), &json_line(&report), m)?;
            match report.first_failure {
                None => Done::ok("passed"),
                Some(f) => Done::failed(format!("failed: {f}")),
            }
        }
        Command::Construct {
            method,
            k,
            l,
            g,
            t,
            n,
            x,
            part,
            out,
            graph_out,
        } => {
            let need =
                |name: &str, v: Option<usize>, m: &mut RunManifest| -> anyhow::Result<usize> {
                    let v =
                        v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required")))?;
                    m.param(name, v);
                    Ok(v)
                };
            let (c, note) = match method {
                Method::ThetaUniform => {
                    m.param("method", "theta-uniform");
                    (
                        theta_uniform_cbo(need("k", k, m)?, need("l", l, m)?)?,
                        String::new(),
                    )
                }
                Method::Polygon => {
                    m.param("method", "polygon");
                    (
                        polygon_chain_cbo(need("g", g, m)?, need("t", t, m)?)?,
                        String::new(),
                    )
                }
                Method::CirculantAlt => {
                    m.param("method", "circulant-alt");
                    let (n, x) = (need("n", n, m)?, need("x", x, m)?);
                    match circulant_alternating_cbo(n, x)? {
                        Some((c, CirculantPattern::Offsets { a, b })) => {
                            (c, format!(" (offsets a={a} b={b})"))
                        }
                        Some((c, CirculantPattern::Symmetric { stride, .. })) => {
                            (c, format!(" (rotation-symmetric, stride {stride})"))
                        }
                        None => {
                            return Done::failed(format!(
                                "no alternating ordering found for n={n} x={x}"
                            ))
                        }
                    }
                }
                Method::SeriesEqual | Method::SeriesDensity | Method::SeriesMulti => {
                    (construct_series(method, &part, m)?, String::new())
                }
            };
            if let Some(path) = graph_out {
                fs::write(&path, c.graph.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
                m.output(&path);
            }
            emit(out.as_deref(), &c.ordering.to_json(), m)?;
            Done::ok(format!(
                "verified ordering of {} edges{note}",
                c.ordering.len()
            ))
        }
        Command::Analyze { graph, out } => {
            let g = read_graph(&graph, m)?;
            let report = analyze(&g)?;
            emit(out.as_deref(), &json_line(&report), m)?;
            Done::ok(format!(
                "density {}, uniformly dense {}",
                report.density, report.uniformly_dense
            ))
        }
        Command::Search { graph, out, search } => {
            let g = read_graph(&graph, m)?;
            search.record(m);
            let outcome =
                find_cbo_with_workers(&g, &search.budget()?, search.deterministic, search.workers)?;
            let nodes = outcome.nodes_explored;
            match outcome.status {
                SearchStatus::Found => {
                    let o = outcome.ordering.expect("found carries an ordering");
                    emit(out.as_deref(), &o.to_json(), m)?;
                    Done::ok(format!("found after {nodes} nodes"))
                }
                SearchStatus::Exhausted => {
                    println!("exhausted: not cyclically orderable");
                    Done::failed(format!("exhausted after {nodes} nodes"))
                }
                SearchStatus::BudgetExceeded => {
                    println!("budget_exceeded");
                    Done::failed(format!("budget exceeded after {nodes} nodes"))
                }
            }
        }
        Command::Sweep {
            max_n,
            max_m,
            max_multiplicity,
            dedup,
            out,
            search,
        } => {
            m.param("max_n", max_n);
            m.param("max_m", max_m);
            m.param("max_multiplicity", max_multiplicity);
            m.param("dedup", dedup);
            search.record(m);
            if max_multiplicity == 0 {
                bail!(Error::InvalidParameter(
                    "--max-multiplicity must be at least 1".into()
                ));
            }
            let config = SweepConfig {
                max_n,
                max_m,
                max_multiplicity,
                dedup,
                budget: search.budget()?,
                workers: search.workers,
            };
            sweep(&config, out.as_deref(), m)
        }
        Command::ExportDot {
            graph,
            ordering,
            out,
        } => {
            let g = read_graph(&graph, m)?;
            let o = ordering.map(|p| read_ordering(&p, m)).transpose()?;
            emit(out.as_deref(), &to_dot(&g, o.as_ref())?, m)?;
            Done::ok(format!("{} edges", g.num_edges()))
        }
    }
}

fn parse_part(spec: &str, m: &mut RunManifest) -> anyhow::Result<SeriesPart> {
    let fields: Vec<&str> = spec.split(',').collect();
    let usage =
        || Error::InvalidParameter(format!("--part `{spec}`: expected GRAPH,ORDERING[,u:v]"));
    let (graph, ordering, glue) = match fields[..] {
        [g, o] => (g, o, None),
        [g, o, glue] => {
            let (u, v) = glue.split_once(':').ok_or_else(usage)?;
            let u: usize = u.trim().parse().map_err(|_| usage())?;
            let v: usize = v.trim().parse().map_err(|_| usage())?;
            (g, o, Some((u, v)))
        }
        _ => return Err(usage().into()),
    };
    Ok(SeriesPart {
        graph: read_graph(Path::new(graph), m)?,
        ordering: read_ordering(Path::new(ordering), m)?,
        glue,
    })
}

fn construct_series(
    method: Method,
    specs: &[String],
    m: &mut RunManifest,
) -> anyhow::Result<Construction> {
    let parts = specs
        .iter()
        .map(|s| parse_part(s, m))
        .collect::<anyhow::Result<Vec<_>>>()?;
    m.param("parts", specs.join(" "));
    let pair = |name: &str| -> anyhow::Result<(&SeriesPart, &SeriesPart, (usize, usize))> {
        match &parts[..] {
            [a, b] => Ok((a, b, b.glue.unwrap_or((1, 1)))),
            _ => Err(
                Error::InvalidParameter(format!("{name} takes exactly two --part arguments"))
                    .into(),
            ),
        }
    };
    Ok(match method {
        Method::SeriesEqual => {
            m.param("method", "series-equal");
            let (a, b, (u, v)) = pair("series-equal")?;
            series_cbo_equal(&a.graph, &a.ordering, &b.graph, &b.ordering, u, v)?
        }
        Method::SeriesDensity => {
            m.param("method", "series-density");
            let (a, b, (u, v)) = pair("series-density")?;
            series_cbo_density(&a.graph, &a.ordering, &b.graph, &b.ordering, u, v)?
        }
        _ => {
            m.param("method", "series-multi");
            series_cbo_multi(&parts)?
        }
    })
}

fn sweep(config: &SweepConfig, out: Option<&Path>, m: &mut RunManifest) -> anyhow::Result<Done> {
    let rows = sweep_small_graphs(config)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "m",
        "edges",
        "uniformly_dense",
        "cbo_status",
        "nodes_explored",
        "agree",
    ])?;
    for r in &rows {
        let agree = r.agree.map_or(String::new(), |a| a.to_string());
        w.write_record([
            r.graph.num_vertices().to_string(),
            r.graph.num_edges().to_string(),
            r.edges_string(),
            r.uniformly_dense.to_string(),
            r.status.as_str().to_owned(),
            r.nodes_explored.to_string(),
            agree,
        ])?;
    }
    let csv = String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?;
    emit(out, &csv, m)?;

    let decided = rows.iter().filter(|r| r.agree.is_some()).count();
    let agreeing = rows.iter().filter(|r| r.agree == Some(true)).count();
    let rate = if decided == 0 {
        100.0
    } else {
        100.0 * agreeing as f64 / decided as f64
    };
    let summary = format!(
        "{} graphs, {agreeing}/{decided} decided rows agree ({rate:.2}%), {} undecided",
        rows.len(),
        rows.len() - decided
    );
    // keep stdout clean for the CSV when it goes there
    let log = |line: &str| {
        if out.is_some() {
            println!("{line}")
        } else {
            eprintln!("{line}")
        }
    };
    log(&summary);
    for r in rows.iter().filter(|r| r.agree != Some(true)) {
        log(&format!(
            "flagged: n={} edges={} uniformly_dense={} status={}",
            r.graph.num_vertices(),
            r.edges_string(),
            r.uniformly_dense,
            r.status.as_str()
        ));
    }
    if agreeing < decided {
        Done::failed(summary)
    } else {
        Done::ok(summary)
    }
}
