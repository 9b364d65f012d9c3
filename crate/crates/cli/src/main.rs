//! Command-line front end: every engine operation behind one binary.
//!
//! Exit codes: 0 = run completed (whatever the verdict), 1 = usage or input
//! error, 2 = a construction or claim check failed (a reportable finding).

mod input;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use subpack_core::constructive::ConstructError;
use subpack_core::graph::{average_degree, emit_graph6};
use subpack_core::harness::ledger::Ledger;
use subpack_core::harness::sweep::{sweep, tally, SweepConfig};
use subpack_core::{
    check_paper_claims, classify, color_1sat_12e4, color_30sat_12e5, decide_colorable,
    enumerate_subcubic_up_to, fixtures, ingest_graph6, packing_chromatic, partition_1133,
    phi_weight_experiment, search_counterexample, subdivision_check, verify_coloring,
    ChromaticOutcome, ClassTag, ColorResult, HuntStatus, PackingSequence, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "subpack", version, about = "Exact S-packing coloring engine for subcubic graphs")]
struct Cli {
    /// Worker threads for sweeps, hunts, and claims (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print saturation facts and matching class tags for a graph.
    Classify { graph: String },
    /// Decide one sequence on one graph, printing verdict and certificate.
    Solve {
        #[arg(long)]
        seq: PackingSequence,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        graph: String,
    },
    /// Check a coloring file against a graph and sequence.
    Verify {
        #[arg(long)]
        seq: PackingSequence,
        /// JSON array of 1-based classes, or solver output with "coloring".
        #[arg(long)]
        coloring: PathBuf,
        graph: String,
    },
    /// Run a constructive pipeline and print the verified coloring.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        graph: String,
    },
    /// Dump the built-in graphs or re-verify their stored facts.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
    /// Decide one sequence over an enumerated or ingested batch, ledgered.
    Sweep {
        #[arg(long)]
        class: ClassTag,
        #[arg(long)]
        seq: PackingSequence,
        #[arg(long)]
        nmax: usize,
        /// graph6 file to sweep instead of the built-in enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        ledger: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Re-check every built-in feasibility row, negative fixture, and pipeline at desk scale.
    Claims {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Also write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Search enumeration levels for the first in-class infeasible graph.
    Hunt {
        #[arg(long)]
        class: ClassTag,
        #[arg(long)]
        seq: PackingSequence,
        #[arg(long)]
        nmax: usize,
        /// Graphs to skip (fixture name, graph6, or file); isomorphs match.
        #[arg(long)]
        exclude: Vec<String>,
        #[arg(long)]
        ledger: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Smallest k with (1,2,...,k) feasible, up to a cap.
    Chromatic {
        #[arg(long, default_value_t = 8)]
        cap: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        graph: String,
    },
    /// Check that (1,1,2,2)-colorable graphs lift to (1,2,3,4,5) subdivisions.
    Subdivision {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Rerun the partition pipeline over a grid of objective weights.
    Weights {
        /// Comma-separated rationals, e.g. "7/10,1/2,1".
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        seq: PackingSequence,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Two 1-classes plus two 3-classes via the weighted-set partition.
    #[value(name = "1133")]
    Partition1133,
    /// Greedy distance-2 coloring for 1-saturated graphs, five classes.
    #[value(name = "1sat-12e4")]
    Greedy12e4,
    /// Conflict-graph coloring for graphs with isolated heavy vertices.
    #[value(name = "30sat-12e5")]
    Conflict12e5,
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Print every fixture with its graph6, facts, and stored coloring.
    Export,
    /// Re-derive facts and re-verify stored colorings; fail on drift.
    Check,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful exits.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot size the worker pool: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Classify { graph } => cmd_classify(&graph),
        Command::Solve { seq, budget, graph } => cmd_solve(&seq, budget, &graph),
        Command::Verify { seq, coloring, graph } => cmd_verify(&seq, &coloring, &graph),
        Command::Construct { method, graph } => cmd_construct(method, &graph),
        Command::Fixtures { action } => cmd_fixtures(action),
        Command::Sweep { class, seq, nmax, corpus, ledger, budget } => {
            cmd_sweep(class, &seq, nmax, corpus.as_deref(), &ledger, budget)
        }
        Command::Claims { nmax, budget, json } => cmd_claims(nmax, budget, json.as_deref()),
        Command::Hunt { class, seq, nmax, exclude, ledger, budget } => {
            cmd_hunt(class, &seq, nmax, &exclude, ledger.as_deref(), budget)
        }
        Command::Chromatic { cap, budget, graph } => cmd_chromatic(cap, budget, &graph),
        Command::Subdivision { nmax, budget } => cmd_subdivision(nmax, budget),
        Command::Weights { alpha, beta, seq, nmax } => cmd_weights(&alpha, &beta, &seq, nmax),
    }
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn cmd_classify(graph: &str) -> Result<u8> {
    let g = input::resolve_graph(graph)?;
    let prof = classify::profile(&g)?;
    let tags: Vec<String> =
        classify::matching_tags(&prof).iter().map(|t| t.to_string()).collect();
    emit(&json!({
        "graph6": emit_graph6(&g),
        "n": g.n(),
        "m": g.edge_count(),
        "sat_level": prof.sat_level,
        "heavy_sat_level": prof.heavy_sat_level,
        "cubic": prof.is_cubic(),
        "average_degree": average_degree(&g)?.to_string(),
        "tags": tags,
    }));
    Ok(0)
}

fn cmd_solve(seq: &PackingSequence, budget: u64, graph: &str) -> Result<u8> {
    let g = input::resolve_graph(graph)?;
    let outcome = decide_colorable(&g, seq, budget);
    let coloring = match &outcome.result {
        ColorResult::Feasible(c) => json!(c.classes()),
        _ => serde_json::Value::Null,
    };
    emit(&json!({
        "graph6": emit_graph6(&g),
        "seq": seq.to_string(),
        "verdict": outcome.result.verdict(),
        "nodes": outcome.nodes,
        "coloring": coloring,
    }));
    Ok(0)
}

fn cmd_verify(seq: &PackingSequence, coloring: &std::path::Path, graph: &str) -> Result<u8> {
    let g = input::resolve_graph(graph)?;
    let coloring = input::read_coloring(coloring, g.n())?;
    let violations = verify_coloring(&g, seq, &coloring)?;
    let listed: Vec<_> = violations
        .iter()
        .map(|v| {
            json!({
                "u": v.u, "v": v.v, "class": v.class,
                "dist": v.dist, "required": v.required,
            })
        })
        .collect();
    emit(&json!({
        "graph6": emit_graph6(&g),
        "seq": seq.to_string(),
        "ok": violations.is_empty(),
        "violations": listed,
    }));
    Ok(0)
}

fn cmd_construct(method: Method, graph: &str) -> Result<u8> {
    let g = input::resolve_graph(graph)?;
    let graph6 = emit_graph6(&g);
    let done = |seq: &str, coloring: &subpack_core::PackingColoring,
                checks: usize, failures: &[String], detail: serde_json::Value|
     -> Result<u8> {
        emit(&json!({
            "graph6": graph6,
            "seq": seq,
            "coloring": coloring.classes(),
            "checks_evaluated": checks,
            "claim_failures": failures,
            "detail": detail,
        }));
        Ok(0)
    };
    let outcome = match method {
        Method::Partition1133 => partition_1133(&g).map(|out| {
            done(
                "1,1,3,3",
                &out.coloring,
                out.checks_evaluated,
                &out.claim_failures,
                json!({"components": out.components.len()}),
            )
        }),
        Method::Greedy12e4 => color_1sat_12e4(&g).map(|out| {
            done(
                "1,2^4",
                &out.coloring,
                out.checks_evaluated,
                &out.claim_failures,
                json!({
                    "peeled": out.peeled,
                    "merged": out.merged,
                    "max_near_threes": out.max_near_threes,
                }),
            )
        }),
        Method::Conflict12e5 => color_30sat_12e5(&g).map(|out| {
            done(
                "1,2^5",
                &out.coloring,
                out.checks_evaluated,
                &out.claim_failures,
                json!({
                    "peeled": out.peeled,
                    "merged": out.merged,
                    "class_one_size": out.class_one_size,
                    "conflict_vertices": out.conflict_vertices,
                    "conflict_components": out.conflict_components,
                    "max_conflict_degree": out.max_conflict_degree,
                    "fallbacks": out.fallbacks,
                }),
            )
        }),
    };
    match outcome {
        Ok(result) => result,
        Err(ConstructError::NotInClass { required }) => {
            Err(anyhow!("graph is outside the pipeline's class (needs {required})"))
        }
        Err(ConstructError::Failed(trace)) => {
            emit(&json!({
                "error": "CONSTRUCTION_FAILED",
                "graph6": trace.graph6,
                "violated": trace.violated,
                "report": trace.report,
            }));
            Ok(2)
        }
        Err(e) => {
            emit(&json!({"error": "CONSTRUCTION_FAILED", "graph6": graph6, "report": e.to_string()}));
            Ok(2)
        }
    }
}

fn cmd_fixtures(action: FixturesAction) -> Result<u8> {
    match action {
        FixturesAction::Export => {
            let listed: Vec<_> = fixtures::NAMES
                .iter()
                .map(|name| {
                    let e = fixtures::fixture(name).expect("built-in fixture");
                    let display = e.display.as_ref().map(|d| {
                        json!({"seq": d.seq.to_string(), "coloring": d.coloring.classes()})
                    });
                    json!({
                        "name": e.name,
                        "graph6": emit_graph6(&e.graph),
                        "note": e.note,
                        "order": e.facts.order,
                        "size": e.facts.size,
                        "sat_level": e.facts.sat_level,
                        "heavy_sat_level": e.facts.heavy_sat_level,
                        "cubic": e.facts.cubic,
                        "display": display,
                    })
                })
                .collect();
            emit(&json!(listed));
            Ok(0)
        }
        FixturesAction::Check => {
            let mut all_ok = true;
            let mut rows = Vec::new();
            for name in fixtures::NAMES {
                let e = fixtures::fixture(name).expect("built-in fixture");
                let facts_match = e.derived_facts() == e.facts;
                let display_ok = match &e.display {
                    None => serde_json::Value::Null,
                    Some(d) => {
                        let ok = verify_coloring(&e.graph, &d.seq, &d.coloring)
                            .map(|v| v.is_empty())
                            .unwrap_or(false);
                        json!(ok)
                    }
                };
                all_ok &= facts_match && display_ok != json!(false);
                rows.push(json!({
                    "name": name,
                    "facts_match": facts_match,
                    "display_ok": display_ok,
                }));
            }
            emit(&json!({"ok": all_ok, "fixtures": rows}));
            Ok(if all_ok { 0 } else { 2 })
        }
    }
}

fn cmd_sweep(
    class: ClassTag,
    seq: &PackingSequence,
    nmax: usize,
    corpus: Option<&std::path::Path>,
    ledger_path: &std::path::Path,
    budget: u64,
) -> Result<u8> {
    let graphs = match corpus {
        Some(path) => {
            let mut graphs = ingest_graph6(path)?;
            graphs.retain(|g| g.n() <= nmax);
            graphs
        }
        None => enumerate_subcubic_up_to(nmax)?,
    };
    let cfg = SweepConfig { tag: class, seq: seq.clone(), budget };
    let records = sweep(&graphs, &cfg);
    let config = format!(
        "sweep class={class} seq={seq} nmax={nmax} budget={budget} source={}",
        corpus.map_or("enumeration".into(), |p| p.display().to_string()),
    );
    let mut ledger = Ledger::open(ledger_path, &config)?;
    ledger.append_all(&records)?;
    ledger.finish()?;
    let (feasible, infeasible, over_budget, skip) = tally(&records);
    emit(&json!({
        "class": class.to_string(),
        "seq": seq.to_string(),
        "total": records.len(),
        "feasible": feasible,
        "infeasible": infeasible,
        "budget": over_budget,
        "skip": skip,
        "ledger": ledger_path.display().to_string(),
    }));
    Ok(0)
}

fn cmd_claims(nmax: usize, budget: u64, json_path: Option<&std::path::Path>) -> Result<u8> {
    let report = check_paper_claims(nmax, budget)?;
    print!("{}", report.render_text());
    if let Some(path) = json_path {
        std::fs::write(path, serde_json::to_string_pretty(&report)?)?;
    }
    Ok(if report.all_pass() { 0 } else { 2 })
}

fn cmd_hunt(
    class: ClassTag,
    seq: &PackingSequence,
    nmax: usize,
    exclude: &[String],
    ledger_path: Option<&std::path::Path>,
    budget: u64,
) -> Result<u8> {
    let codes = input::resolve_exclusions(exclude)?;
    let outcome = search_counterexample(class, seq, nmax, budget, &codes)?;
    if let Some(path) = ledger_path {
        let config = format!(
            "hunt class={class} seq={seq} nmax={nmax} budget={budget} excluded={}",
            codes.len()
        );
        let mut ledger = Ledger::open(path, &config)?;
        ledger.append_all(&outcome.records)?;
        ledger.finish()?;
    }
    let status = match &outcome.status {
        HuntStatus::Found { graph6, n } => {
            json!({"kind": "found", "graph6": graph6, "n": n})
        }
        HuntStatus::Exhausted { decided } => {
            json!({"kind": "exhausted", "decided": decided})
        }
        HuntStatus::Inconclusive { decided, budget_hits } => {
            json!({"kind": "inconclusive", "decided": decided, "budget_hits": budget_hits})
        }
    };
    emit(&json!({
        "class": class.to_string(),
        "seq": seq.to_string(),
        "nmax": nmax,
        "status": status,
        "inspected": outcome.records.len(),
    }));
    Ok(0)
}

fn cmd_chromatic(cap: u32, budget: u64, graph: &str) -> Result<u8> {
    let g = input::resolve_graph(graph)?;
    let outcome = packing_chromatic(&g, cap, budget);
    let status = match outcome {
        ChromaticOutcome::Value { k, nodes } => json!({"kind": "value", "k": k, "nodes": nodes}),
        ChromaticOutcome::ExceedsCap { cap, nodes } => {
            json!({"kind": "exceeds_cap", "cap": cap, "nodes": nodes})
        }
        ChromaticOutcome::Budget { at_k, nodes } => {
            json!({"kind": "budget", "at_k": at_k, "nodes": nodes})
        }
    };
    emit(&json!({"graph6": emit_graph6(&g), "result": status}));
    Ok(0)
}

fn cmd_subdivision(nmax: usize, budget: u64) -> Result<u8> {
    let report = subdivision_check(nmax, budget)?;
    emit(&serde_json::to_value(&report)?);
    Ok(if report.holds() { 0 } else { 2 })
}

fn cmd_weights(alpha: &str, beta: &str, seq: &PackingSequence, nmax: usize) -> Result<u8> {
    let alphas = input::parse_grid(alpha)?;
    let betas = input::parse_grid(beta)?;
    let report = phi_weight_experiment(&alphas, &betas, seq, nmax)?;
    emit(&serde_json::to_value(&report)?);
    Ok(0)
}
