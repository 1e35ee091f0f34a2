//! The `rca` command line: solve, verify, generate, oracle, expand.
//!
//! Exit codes: 0 = yes / accept, 1 = no / reject, 2 = error or refusal.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::flow::{expand, write_network};
use crate::format::{parse_graph, parse_instance, parse_routes, parse_set_cover, write_instance, write_routes};
use crate::generators::{
    gen_dp23hc_trail, gen_pchc_path, gen_pchc_trail, gen_setcover, GeneratedInstance, Orientation, OuterTriple,
};
use crate::oracle::{min_shared, OracleOptions, DEFAULT_BUDGET};
use crate::solve::{horizon, solve, SolveOptions};
use crate::verify::{verify_solution, Verdict};

/// Environment variable overriding the exhaustive-search size guard.
pub const BUDGET_ENV: &str = "RCA_ORACLE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "rca", version, about = "Routing with collision avoidance: solve, verify, generate")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide an instance.
    Solve {
        instance: PathBuf,
        /// Print the routes of a yes answer.
        #[arg(long)]
        witness: bool,
        /// Print a JSON record instead of text.
        #[arg(long)]
        json: bool,
        /// Threads for the shared-arc enumeration.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a route file against an instance.
    Verify { instance: PathBuf, routes: PathBuf },
    /// Build an instance from a source problem.
    Generate {
        #[arg(value_enum)]
        construction: Construction,
        source: PathBuf,
        /// Write the instance here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Name-map file; defaults to `<output>.names` when -o is given.
        #[arg(long)]
        names: Option<PathBuf>,
        /// Outer vertex x1 (pchc-path).
        #[arg(long)]
        x1: Option<usize>,
        /// Neighbour x2 of x1 (pchc-path); defaults to the first neighbour.
        #[arg(long)]
        x2: Option<usize>,
        /// Neighbour x3 of x1 (pchc-path); defaults to the second neighbour.
        #[arg(long)]
        x3: Option<usize>,
        /// Attachment vertex (pchc-trail, dp23hc-trail).
        #[arg(long, default_value_t = 0)]
        x: usize,
        /// Directed orientation (pchc-path).
        #[arg(long)]
        directed: bool,
        /// Length of the padding chain in front of s (pchc-path).
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Exact minimum sharing by exhaustive search.
    Oracle {
        instance: PathBuf,
        /// Route length cap; defaults to alpha, n-1, m or p*d_t by kind.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Dump the time-expanded network.
    Expand {
        instance: PathBuf,
        /// Horizon; defaults to the solver's horizon.
        #[arg(long)]
        tau: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    SetcoverDag,
    SetcoverUndirected,
    PchcPath,
    PchcTrail,
    Dp23hcTrail,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SolveRecord {
    decision: &'static str,
    shared_edges: Option<Vec<usize>>,
    routes: Option<Vec<String>>,
    solver_used: &'static str,
    horizon: Option<usize>,
}

type CmdResult = Result<ExitCode, String>;

/// Parses `args` and runs the command, printing to stdout/stderr.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Solve { instance, witness, json, jobs } => cmd_solve(&instance, witness, json, jobs),
        Command::Verify { instance, routes } => cmd_verify(&instance, &routes),
        Command::Generate { construction, source, output, names, x1, x2, x3, x, directed, pad } => {
            let gen = build(construction, &source, (x1, x2, x3), x, directed, pad)?;
            emit_generated(&gen, output.as_deref(), names.as_deref())
        }
        Command::Oracle { instance, cap } => cmd_oracle(&instance, cap),
        Command::Expand { instance, tau } => cmd_expand(&instance, tau),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_instance(path: &Path) -> Result<crate::Instance, String> {
    parse_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn oracle_budget() -> Result<u64, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{BUDGET_ENV} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn exit(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_solve(path: &Path, witness: bool, json: bool, jobs: usize) -> CmdResult {
    let inst = load_instance(path)?;
    let opts = SolveOptions { oracle_budget: oracle_budget()?, jobs: jobs.max(1) };
    let r = solve(&inst, &opts).map_err(|e| e.to_string())?;
    let decision = if r.decision { "yes" } else { "no" };
    let mut out = std::io::stdout().lock();
    if json {
        let record = SolveRecord {
            decision,
            shared_edges: r.shared_edges.as_ref().map(|s| s.as_slice().to_vec()),
            routes: r.witness.as_ref().map(|ws| write_routes(&inst.graph, ws).lines().map(str::to_owned).collect()),
            solver_used: r.solver.as_str(),
            horizon: r.horizon,
        };
        let text = serde_json::to_string(&record).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(|e| e.to_string())?;
    } else {
        writeln!(out, "{decision}").map_err(|e| e.to_string())?;
        if let (true, Some(routes)) = (witness, &r.witness) {
            write!(out, "{}", write_routes(&inst.graph, routes)).map_err(|e| e.to_string())?;
        }
    }
    Ok(exit(r.decision))
}

fn cmd_verify(inst_path: &Path, routes_path: &Path) -> CmdResult {
    let inst = load_instance(inst_path)?;
    let routes = parse_routes(&read(routes_path)?).map_err(|e| format!("{}: {e}", routes_path.display()))?;
    match verify_solution(&inst, &routes) {
        Verdict::Accept { shared } => {
            let list: Vec<String> = shared.iter().map(|e| e.to_string()).collect();
            println!(
                "accept ({} shared edges{}{})",
                shared.len(),
                if list.is_empty() { "" } else { ": " },
                list.join(" ")
            );
            Ok(ExitCode::SUCCESS)
        }
        Verdict::Reject(reason) => {
            println!("reject {reason}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_oracle(path: &Path, cap: Option<usize>) -> CmdResult {
    let inst = load_instance(path)?;
    let mut opts = OracleOptions::default().with_budget(oracle_budget()?);
    opts.length_cap = cap;
    let r = min_shared(&inst, &opts).map_err(|e| e.to_string())?;
    match r.min_shared {
        Some(min) => println!("min-shared {min}"),
        None => println!("min-shared unreachable"),
    }
    println!("{}", if r.decision { "yes" } else { "no" });
    // the optimum is reported even when it exceeds k
    if let Some(min) = r.min_shared {
        let relaxed = min_shared(&inst.with_budget(min), &opts).map_err(|e| e.to_string())?;
        if let Some(routes) = relaxed.witness {
            print!("{}", write_routes(&inst.graph, &routes));
        }
    }
    Ok(exit(r.decision))
}

fn cmd_expand(path: &Path, tau: Option<usize>) -> CmdResult {
    let inst = load_instance(path)?;
    let tau = tau.unwrap_or_else(|| horizon(&inst));
    let net = expand(&inst.graph, inst.source, inst.sink, tau, inst.route_count).map_err(|e| e.to_string())?;
    print!("{}", write_network(&net));
    Ok(ExitCode::SUCCESS)
}

fn build(
    construction: Construction,
    source: &Path,
    triple: (Option<usize>, Option<usize>, Option<usize>),
    x: usize,
    directed: bool,
    pad: usize,
) -> Result<GeneratedInstance, String> {
    let text = read(source)?;
    let ctx = |e: &dyn std::fmt::Display| format!("{}: {e}", source.display());
    let gen = match construction {
        Construction::SetcoverDag | Construction::SetcoverUndirected => {
            let sc = parse_set_cover(&text).map_err(|e| ctx(&e))?;
            let orientation = match construction {
                Construction::SetcoverDag => Orientation::Directed,
                _ => Orientation::Undirected,
            };
            gen_setcover(&sc, orientation)
        }
        Construction::PchcPath => {
            let g = parse_graph(&text).map_err(|e| ctx(&e))?;
            let x1 = triple.0.unwrap_or(0);
            if x1 >= g.vertex_count() {
                return Err(ctx(&format!("vertex {x1} does not exist")));
            }
            let mut nbrs: Vec<usize> = g.steps(x1).map(|(_, w)| w).collect();
            nbrs.dedup();
            let pick = |given: Option<usize>, i: usize| {
                given.or(nbrs.get(i).copied()).ok_or_else(|| ctx(&"x1 has fewer than two neighbours"))
            };
            let triple = OuterTriple { x1, x2: pick(triple.1, 0)?, x3: pick(triple.2, 1)? };
            let orientation = if directed { Orientation::Directed } else { Orientation::Undirected };
            gen_pchc_path(&g, triple, orientation, pad)
        }
        Construction::PchcTrail => gen_pchc_trail(&parse_graph(&text).map_err(|e| ctx(&e))?, x),
        Construction::Dp23hcTrail => gen_dp23hc_trail(&parse_graph(&text).map_err(|e| ctx(&e))?, x),
    };
    gen.map_err(|e| ctx(&e))
}

fn emit_generated(gen: &GeneratedInstance, output: Option<&Path>, names: Option<&Path>) -> CmdResult {
    let text = write_instance(&gen.instance);
    let names_path = names.map(Path::to_path_buf).or_else(|| {
        output.map(|o| {
            let mut p = o.as_os_str().to_owned();
            p.push(".names");
            PathBuf::from(p)
        })
    });
    match output {
        Some(o) => fs::write(o, &text).map_err(|e| format!("{}: {e}", o.display()))?,
        None => print!("{text}"),
    }
    if let Some(p) = names_path {
        fs::write(&p, gen.names.to_text()).map_err(|e| format!("{}: {e}", p.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}
