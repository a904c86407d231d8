use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use pebbling::io::{parse_certificate, role_code, write_certificate, DemandSpec, Instance};
use pebbling::moves::violations;
use pebbling::numbers::{cover_pebbling_number, pebbling_number, NumberOptions, NumberResult};
use pebbling::reductions::{
    reduce_cover_to_canonical, reduce_to_cover_solvability, reduce_to_number_threshold, x4c_solve, ReducedInstance,
    X4CInstance,
};
use pebbling::solver::{
    is_canonical_solvable, is_cover_solvable, is_reachable, oracle_solvable, OracleOptions, SolveResult, SolverOptions,
};
use pebbling::{gamma, gamma_witness, Configuration, Demand, Graph, PebbleError};

/// Exact graph pebbling: solvability, pebbling numbers and reductions.
#[derive(Parser)]
#[command(name = "pebble", version)]
struct Cli {
    /// Instance file (TOML).
    #[arg(long, global = true)]
    instance: Option<PathBuf>,
    /// Search nodes allowed per solver call.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    node_cap: u64,
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomly generated inputs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the instance's configuration covers its demand.
    Solve {
        /// Also write the certificate to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether one pebble can reach the target vertex.
    Reach {
        #[arg(long)]
        target: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether every vertex is reachable.
    Canonical,
    /// Cover pebbling number of the instance's demand.
    Number {
        /// `unit` or `reach:NAME`; overrides the instance's demand.
        #[arg(long)]
        demand_kind: Option<String>,
        /// Start the sweep just below the stacking bound.
        #[arg(long)]
        warm_start: bool,
    },
    /// Canonical pebbling number of the graph.
    Pi,
    /// Decide solvability by brute-force search over move sequences.
    Oracle {
        #[arg(long, default_value_t = 5_000_000)]
        state_cap: u64,
    },
    /// Check a certificate against the instance.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Build a reduced instance.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        /// Exact-cover input; random when omitted.
        #[arg(long)]
        x4c: Option<PathBuf>,
        /// Universe size / 4 for random exact-cover inputs.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of sets for random exact-cover inputs (default n + 1).
        #[arg(long)]
        m: Option<usize>,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Potential of the configuration at a vertex.
    Gamma {
        #[arg(long)]
        target: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    X4cCover,
    X4cNumber,
    CoverToCanonical,
}

/// Outcome of a command: a report and an exit code.
struct Report {
    code: u8,
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(err) => {
            let code = match err {
                PebbleError::BudgetExceeded { .. } => 3,
                _ => 2,
            };
            if cli.json {
                println!("{}", json!({ "error": err.to_string(), "exit_code": code }));
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, PebbleError> {
    let solver = SolverOptions::with_node_cap(cli.node_cap);
    match &cli.command {
        Command::Solve { output } => {
            let inst = load(cli)?;
            let d = inst.demand().ok_or_else(|| invalid("the instance has no demand"))?;
            let result = is_cover_solvable(&inst.graph, &inst.config, &d, &solver)?;
            solve_report("solve", &inst.graph, &result, output.as_deref())
        }
        Command::Reach { target, output } => {
            let inst = load(cli)?;
            let v = vertex(&inst.graph, target)?;
            let result = is_reachable(&inst.graph, &inst.config, v, &solver)?;
            solve_report("reach", &inst.graph, &result, output.as_deref())
        }
        Command::Canonical => {
            let inst = load(cli)?;
            let result = is_canonical_solvable(&inst.graph, &inst.config, &solver)?;
            let unreachable: Vec<&str> = result.unreachable.iter().map(|&v| inst.graph.name(v)).collect();
            let mut text = format!("{}\n", if result.solvable { "solvable" } else { "unsolvable" });
            if !unreachable.is_empty() {
                text += &format!("unreachable: {}\n", unreachable.join(", "));
            }
            Ok(Report {
                code: if result.solvable { 0 } else { 1 },
                text,
                json: json!({
                    "command": "canonical",
                    "status": if result.solvable { "solvable" } else { "unsolvable" },
                    "unreachable": unreachable,
                    "nodes_expanded": result.stats.nodes_expanded,
                }),
            })
        }
        Command::Number { demand_kind, warm_start } => {
            let inst = load(cli)?;
            let d = match demand_kind {
                Some(kind) => DemandSpec::parse_kind(kind, &inst.graph)?.to_demand(inst.graph.vertex_count()),
                None => inst.demand().ok_or_else(|| invalid("the instance has no demand; pass --demand-kind"))?,
            };
            let opts = NumberOptions { solver, warm_start: *warm_start, ..NumberOptions::default() };
            let result = cover_pebbling_number(&inst.graph, &d, &opts)?;
            Ok(number_report("number", &inst.graph, &result))
        }
        Command::Pi => {
            let inst = load(cli)?;
            let opts = NumberOptions { solver, ..NumberOptions::default() };
            let result = pebbling_number(&inst.graph, &opts)?;
            Ok(number_report("pi", &inst.graph, &result))
        }
        Command::Oracle { state_cap } => {
            let inst = load(cli)?;
            let d = inst.demand().ok_or_else(|| invalid("the instance has no demand"))?;
            let solvable = oracle_solvable(&inst.graph, &inst.config, &d, &OracleOptions { state_cap: *state_cap })?;
            let status = if solvable { "solvable" } else { "unsolvable" };
            Ok(Report {
                code: if solvable { 0 } else { 1 },
                text: format!("{status}\n"),
                json: json!({ "command": "oracle", "status": status }),
            })
        }
        Command::Verify { certificate } => {
            let inst = load(cli)?;
            let d = inst.demand().ok_or_else(|| invalid("the instance has no demand"))?;
            let ml = parse_certificate(&read(certificate)?, &inst.graph)?;
            let bad = violations(&inst.graph, &inst.config, &d, &ml)?;
            let listed: Vec<Value> = bad
                .iter()
                .map(|&(v, balance, demand)| {
                    json!({ "vertex": inst.graph.name(v), "balance": balance as i64, "demand": demand })
                })
                .collect();
            let mut text = String::new();
            if bad.is_empty() {
                text.push_str("verified\n");
            }
            for &(v, balance, demand) in &bad {
                text += &format!("violated at {}: {balance} pebbles left, {demand} required\n", inst.graph.name(v));
            }
            Ok(Report {
                code: if bad.is_empty() { 0 } else { 1 },
                text,
                json: json!({ "command": "verify", "verified": bad.is_empty(), "violations": listed }),
            })
        }
        Command::Reduce { kind, x4c, n, m, output } => {
            let (reduced, source) = match kind {
                ReduceKind::CoverToCanonical => {
                    let inst = load(cli)?;
                    (reduce_cover_to_canonical(&inst.graph, &inst.config)?, None)
                }
                ReduceKind::X4cCover | ReduceKind::X4cNumber => {
                    let source = match x4c {
                        Some(path) => X4CInstance::parse(&read(path)?)?,
                        None => random_x4c(*n, m.unwrap_or(n + 1), cli.seed.unwrap_or(0))?,
                    };
                    let reduced = match kind {
                        ReduceKind::X4cCover => reduce_to_cover_solvability(&source)?,
                        _ => reduce_to_number_threshold(&source)?,
                    };
                    (reduced, Some(source))
                }
            };
            reduce_report(&reduced, source.as_ref(), output.as_deref())
        }
        Command::Gamma { target } => {
            let inst = load(cli)?;
            let d = inst.demand().unwrap_or_else(|| Demand::zero(inst.graph.vertex_count()));
            let v = vertex(&inst.graph, target)?;
            let value = gamma(&inst.graph, &inst.config, &d, v)?.reduced();
            let witness = gamma_witness(&inst.graph, &inst.config, &d)?.map(|w| inst.graph.name(w).to_string());
            let mut text = format!("gamma({target}) = {value}\n");
            if let Some(w) = &witness {
                text += &format!("unsolvable: gamma is negative at {w}\n");
            }
            Ok(Report {
                code: 0,
                text,
                json: json!({
                    "command": "gamma",
                    "target": target,
                    "value": value.to_string(),
                    "numerator": value.numerator.to_string(),
                    "log2_denominator": value.log2_denominator,
                    "negative": value.is_negative(),
                    "witness": witness,
                }),
            })
        }
    }
}

fn solve_report(command: &str, g: &Graph, result: &SolveResult, output: Option<&Path>) -> Result<Report, PebbleError> {
    let witness = result.witness.map(|w| g.name(w).to_string());
    let mut text = String::new();
    let status = if result.is_solvable() { "solvable" } else { "unsolvable" };
    text += status;
    if let Some(w) = &witness {
        text += &format!(" (gamma is negative at {w})");
    }
    text.push('\n');
    let mut moves = Vec::new();
    if let Some(ml) = &result.certificate {
        for ((from, to), count) in ml.iter() {
            text += &format!("{} -> {}: {count}\n", g.name(from), g.name(to));
            moves.push(json!({ "from": g.name(from), "to": g.name(to), "count": count }));
        }
        if let Some(path) = output {
            write(path, &write_certificate(g, ml))?;
        }
    }
    Ok(Report {
        code: if result.is_solvable() { 0 } else { 1 },
        text,
        json: json!({
            "command": command,
            "status": status,
            "certificate": result.certificate.as_ref().map(|_| moves),
            "witness": witness,
            "nodes_expanded": result.stats.nodes_expanded,
            "max_depth": result.stats.max_depth,
        }),
    })
}

fn number_report(command: &str, g: &Graph, result: &NumberResult) -> Report {
    let config = named_counts(g, &result.extremal_config);
    let listed: Vec<String> = config.iter().map(|(k, v)| format!("{k}={v}")).collect();
    Report {
        code: 0,
        text: format!("{}\nextremal configuration: {}\n", result.value, listed.join(" ")),
        json: json!({
            "command": command,
            "value": result.value,
            "extremal_config": config,
            "configs_checked": result.configs_checked,
        }),
    }
}

fn reduce_report(r: &ReducedInstance, source: Option<&X4CInstance>, output: Option<&Path>) -> Result<Report, PebbleError> {
    let file = Instance::from_reduced(r);
    let text = file.to_toml();
    if let Some(path) = output {
        write(path, &text)?;
    }
    let g = &r.graph;
    let edges: Vec<[&str; 2]> = g.edges().iter().map(|&(a, b)| [g.name(a), g.name(b)]).collect();
    let roles: Vec<String> = r.roles.iter().map(role_code).collect();
    let mut doc = json!({
        "command": "reduce",
        "vertices": g.names(),
        "edges": edges,
        "config": named_counts(g, &r.config),
        "threshold": r.threshold,
        "roles": roles,
        "trivial": r.trivial,
    });
    match r.target() {
        Some(v) => doc["target"] = json!(g.name(v)),
        None => doc["demand"] = json!(named_counts(g, &Configuration::extended(r.demand().counts().to_vec()))),
    }
    if let Some(src) = source {
        doc["x4c"] = json!(src.to_string());
        doc["exact_cover"] = json!(x4c_solve(src).map(|c| c.iter().map(|i| i + 1).collect::<Vec<_>>()));
    }
    Ok(Report { code: 0, text: if output.is_some() { String::new() } else { text }, json: doc })
}

/// Random exact-cover input in which every element lies in some set, so
/// that the constructions stay connected.
fn random_x4c(n: usize, m: usize, seed: u64) -> Result<X4CInstance, PebbleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let inst = X4CInstance::random(n, m, &mut rng)?;
        let mut used = vec![false; inst.universe_size()];
        inst.sets().iter().flatten().for_each(|&e| used[e] = true);
        if used.iter().all(|&u| u) {
            return Ok(inst);
        }
    }
    Err(invalid(&format!("could not draw {m} sets covering all {} elements", 4 * n)))
}

fn named_counts(g: &Graph, c: &Configuration) -> Map<String, Value> {
    c.counts().iter().enumerate().map(|(v, &k)| (g.name(v).to_string(), json!(k))).collect()
}

fn load(cli: &Cli) -> Result<Instance, PebbleError> {
    let path = cli.instance.as_ref().ok_or_else(|| invalid("--instance FILE is required"))?;
    Instance::parse(&read(path)?)
}

fn vertex(g: &Graph, name: &str) -> Result<usize, PebbleError> {
    g.index_of(name).ok_or_else(|| invalid(&format!("no vertex named \"{name}\"")))
}

fn read(path: &Path) -> Result<String, PebbleError> {
    fs::read_to_string(path).map_err(|e| invalid(&format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), PebbleError> {
    fs::write(path, text).map_err(|e| invalid(&format!("{}: {e}", path.display())))
}

fn invalid(msg: &str) -> PebbleError {
    PebbleError::InvalidInput(msg.to_string())
}
