use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trd_core::bounds::{factor_profile, pair_bounds};
use trd_core::catalog::{enumerate_catalog, CATALOG_MAX_ORDER};
use trd_core::classify::{classify_small_product, SmallCase};
use trd_core::construct::{
    product_eod_set, product_trdf_from_factors, product_trdf_from_total_dom_sets,
    small_value_construction_auto,
};
use trd_core::graph::EdgeListJson;
use trd_core::harness::{verify_theorems, VerifyOptions};
use trd_core::solve::{eod_set, gamma_t_exact, gamma_tr_exact, gamma_tr_max_v2, Budget};
use trd_core::{direct_product, emit_graph6, parse_graph6, FamilySpec, Graph, Result, TrdError};

/// Total Roman domination of graphs and direct products.
///
/// Graph arguments accept family shorthand (K3, C4, P4, K2,3, K1,3, W5, F6,
/// prismC3, K5-M), a path to a file holding graph6 or edge-list JSON, or a
/// graph6 string.
#[derive(Parser)]
#[command(name = "trd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the factor profile of a graph.
    Invariants {
        graph: String,
        /// Time limit per exact solve (defaults to TRD_BUDGET_SECS, else none).
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
    },
    /// Build the direct product G x H.
    Product {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
    },
    /// Solve gamma_tR exactly and print a witness.
    Gammatr {
        graph: String,
        /// Maximise |V2| among optimal labelings.
        #[arg(long)]
        max_v2: bool,
        /// Time limit per exact solve (defaults to TRD_BUDGET_SECS, else none).
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
    },
    /// Evaluate every bound on gamma_tR(G x H).
    Bounds {
        g: String,
        h: String,
        /// Also solve the product exactly.
        #[arg(long)]
        exact: bool,
        /// Time limit per exact solve (defaults to TRD_BUDGET_SECS, else none).
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
    },
    /// Decide whether gamma_tR(G x H) is at most 8 and which rule applies.
    Classify { g: String, h: String },
    /// Emit a certified labeling (or set) of G x H.
    ///
    /// Cases: ii, iii_universal, iii_k2, iii_triangle, iv, v, factors,
    /// total_dom, eod.
    Construct {
        case: String,
        g: String,
        h: String,
        /// Time limit per exact solve (defaults to TRD_BUDGET_SECS, else none).
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
    },
    /// Audit all bounds and constructions over a catalog of small graphs.
    Verify {
        /// Largest factor order (4 by default, 5 with --extended).
        #[arg(long)]
        max_n: Option<usize>,
        /// Allow factors on 5 vertices.
        #[arg(long)]
        extended: bool,
        /// Worker threads (0 = automatic).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the JSON report here and a CSV summary next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Time limit per exact solve (defaults to TRD_BUDGET_SECS, else none).
        #[arg(long, value_name = "SECS")]
        budget: Option<f64>,
    },
    /// Generate a graph from a family.
    ///
    /// Kinds: path N, cycle N, complete N, complete-bipartite P Q, star S,
    /// wheel N, fan N, complete-minus-matching N, prism GRAPH,
    /// join GRAPH GRAPH.
    Family {
        kind: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
    },
}

enum Failure {
    Domain(TrdError),
    Usage(String),
    Violations,
}

impl From<TrdError> for Failure {
    fn from(e: TrdError) -> Self {
        Failure::Domain(e)
    }
}

fn budget(secs: Option<f64>) -> std::result::Result<Budget, Failure> {
    match secs {
        None => Ok(Budget::from_env_or(Budget::UNLIMITED)),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Budget(Some(Duration::from_secs_f64(s)))),
        Some(s) => Err(Failure::Usage(format!("invalid budget {s}"))),
    }
}

fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| TrdError::Input(format!("{}: {e}", path.display())))?;
    let text = text.trim();
    if text.starts_with('{') {
        let parsed: EdgeListJson = serde_json::from_str(text)
            .map_err(|e| TrdError::Input(format!("{}: {e}", path.display())))?;
        return Graph::try_from(parsed);
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| TrdError::Input(format!("{} is empty", path.display())))?;
    parse_graph6(line)
}

/// Shorthand first, then an existing file, then graph6.
fn resolve_graph(arg: &str) -> Result<Graph> {
    if let Some(spec) = FamilySpec::parse_shorthand(arg) {
        return spec?.generate();
    }
    let path = Path::new(arg);
    if path.is_file() {
        return read_graph_file(path);
    }
    parse_graph6(arg)
}

fn emit_graph(g: &Graph, emit: Emit) -> String {
    match emit {
        Emit::Graph6 => emit_graph6(g),
        Emit::Json => pretty(&serde_json::to_value(g.to_edge_list_json()).expect("serializes")),
    }
}

/// Prints a line, ignoring a closed stdout.
fn say(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn num(kind: &str, s: &str) -> std::result::Result<usize, Failure> {
    s.parse()
        .map_err(|_| Failure::Usage(format!("{kind}: expected an integer, got {s:?}")))
}

fn family_spec(kind: &str, params: &[String]) -> std::result::Result<FamilySpec, Failure> {
    use FamilySpec::*;
    let arity = |k: usize| -> std::result::Result<(), Failure> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Failure::Usage(format!(
                "{kind} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let one = |f: fn(usize) -> FamilySpec| -> std::result::Result<FamilySpec, Failure> {
        arity(1)?;
        Ok(f(num(kind, &params[0])?))
    };
    match kind {
        "path" => one(Path),
        "cycle" => one(Cycle),
        "complete" => one(Complete),
        "star" => one(Star),
        "wheel" => one(Wheel),
        "fan" => one(Fan),
        "complete-minus-matching" => one(CompleteMinusMatching),
        "complete-bipartite" => {
            arity(2)?;
            Ok(CompleteBipartite(
                num(kind, &params[0])?,
                num(kind, &params[1])?,
            ))
        }
        "prism" => {
            arity(1)?;
            Ok(Prism(Box::new(resolve_graph(&params[0])?)))
        }
        "join" => {
            arity(2)?;
            Ok(Join(
                Box::new(resolve_graph(&params[0])?),
                Box::new(resolve_graph(&params[1])?),
            ))
        }
        _ => Err(Failure::Usage(format!("unknown family {kind:?}"))),
    }
}

fn construct(
    case: &str,
    g: &Graph,
    h: &Graph,
    budget: Budget,
) -> std::result::Result<Value, Failure> {
    let pg = direct_product(g, h)?;
    let product = emit_graph6(pg.graph());
    let labeling = |f: trd_core::LabelFunction| {
        json!({
            "case": case,
            "graph": product,
            "labels": f.labels(),
            "weight": f.weight(),
        })
    };
    let out = match case {
        "factors" => {
            let fg = gamma_tr_max_v2(g, budget)?;
            let fh = gamma_tr_max_v2(h, budget)?;
            let f = product_trdf_from_factors(
                g,
                h,
                fg.labeling().expect("labeling witness"),
                fh.labeling().expect("labeling witness"),
            )?;
            labeling(f)
        }
        "total_dom" => {
            let dg = gamma_t_exact(g)?;
            let dh = gamma_t_exact(h)?;
            let f = product_trdf_from_total_dom_sets(
                g,
                h,
                dg.set().expect("set witness"),
                dh.set().expect("set witness"),
            )?;
            labeling(f)
        }
        "eod" => {
            let missing = |which: &str| {
                TrdError::Hypothesis(format!("{which} is not an efficient open domination graph"))
            };
            let sg = eod_set(g)?.ok_or_else(|| missing("G"))?;
            let sh = eod_set(h)?.ok_or_else(|| missing("H"))?;
            let s = product_eod_set(g, h, &sg, &sh)?;
            json!({
                "case": case,
                "graph": product,
                "members": s.vertices(),
                "role": s.role().as_str(),
            })
        }
        "v" => {
            let verdict = classify_small_product(g, h)?;
            if !verdict.clauses.contains(&SmallCase::V) {
                return Err(TrdError::Precondition(
                    "v: hypotheses do not hold for these factors".into(),
                )
                .into());
            }
            let dg = gamma_t_exact(g)?;
            let dh = gamma_t_exact(h)?;
            let f = product_trdf_from_total_dom_sets(
                g,
                h,
                dg.set().expect("set witness"),
                dh.set().expect("set witness"),
            )?;
            labeling(f)
        }
        other => match SmallCase::parse(other) {
            Some(c) => labeling(small_value_construction_auto(c, g, h)?),
            None => {
                return Err(Failure::Usage(format!(
                    "unknown construction case {other:?}"
                )))
            }
        },
    };
    Ok(out)
}

fn csv_path(out: &Path) -> PathBuf {
    out.with_extension("csv")
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    match cli.command {
        Command::Invariants { graph, budget: b } => {
            let g = resolve_graph(&graph)?;
            say(&pretty(&factor_profile(&g, budget(b)?)?.to_json()));
        }
        Command::Product { g, h, emit } => {
            let pg = direct_product(&resolve_graph(&g)?, &resolve_graph(&h)?)?;
            say(&emit_graph(pg.graph(), emit));
        }
        Command::Gammatr {
            graph,
            max_v2,
            budget: b,
        } => {
            let g = resolve_graph(&graph)?;
            let r = if max_v2 {
                gamma_tr_max_v2(&g, budget(b)?)?
            } else {
                gamma_tr_exact(&g, budget(b)?)?
            };
            say(&pretty(&r.to_json(&g)));
        }
        Command::Bounds {
            g,
            h,
            exact,
            budget: b,
        } => {
            let b = budget(b)?;
            let (g, h) = (resolve_graph(&g)?, resolve_graph(&h)?);
            let mut report = pair_bounds(&factor_profile(&g, b)?, &factor_profile(&h, b)?)?;
            if exact {
                let pg = direct_product(&g, &h)?;
                report.exact = Some(gamma_tr_max_v2(pg.graph(), b)?);
            }
            say(&pretty(&report.to_json()));
        }
        Command::Classify { g, h } => {
            let v = classify_small_product(&resolve_graph(&g)?, &resolve_graph(&h)?)?;
            say(&pretty(&v.to_json()));
        }
        Command::Construct {
            case,
            g,
            h,
            budget: b,
        } => {
            let v = construct(&case, &resolve_graph(&g)?, &resolve_graph(&h)?, budget(b)?)?;
            say(&pretty(&v));
        }
        Command::Verify {
            max_n,
            extended,
            jobs,
            out,
            budget: b,
        } => {
            let max_n = max_n.unwrap_or(if extended { CATALOG_MAX_ORDER } else { 4 });
            if max_n > 4 && !extended {
                return Err(Failure::Usage(format!("--max-n {max_n} needs --extended")));
            }
            if max_n < 2 {
                return Err(Failure::Usage("--max-n must be at least 2".into()));
            }
            let catalog = enumerate_catalog(max_n)?;
            let opts = VerifyOptions {
                budget: budget(b)?,
                jobs,
            };
            let report = verify_theorems(&catalog.graphs, opts)?;
            if let Some(path) = out {
                let write = |p: &Path, text: String| {
                    std::fs::write(p, text)
                        .map_err(|e| TrdError::Input(format!("{}: {e}", p.display())))
                };
                write(&path, pretty(&report.to_json()) + "\n")?;
                write(&csv_path(&path), report.to_csv())?;
            }
            for (pair, v) in report.violations() {
                say(&format!(
                    "violation {} x {}: {}: {}",
                    pair.g, pair.h, v.check, v.detail
                ));
            }
            say(&report.summary_line());
            say(&format!("{} violations", report.violation_count()));
            if report.violation_count() > 0 {
                return Err(Failure::Violations);
            }
        }
        Command::Family { kind, params, emit } => {
            let g = family_spec(&kind, &params)?.generate()?;
            say(&emit_graph(&g, emit));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({"error": e.kind(), "message": e.to_string()}));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            let _ = Cli::command()
                .error(clap::error::ErrorKind::InvalidValue, msg)
                .print();
            ExitCode::from(2)
        }
    }
}
