//! Command-line front end for HG(2) instance files.
//!
//! Exit codes: 0 on success or a valid route, 1 when a route is invalid or
//! no route exists, 2 on usage, load, or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use hg2_core::io::{export_dot, load, weight_number};
use hg2_core::{CostedPath, Hg2, Hg2Route, Hyperpath, RouteValidity};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hg2", version, about = "Query two-layer hypergraph/graph (HG(2)) instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load an instance and report whether it is well formed.
    Validate { file: PathBuf },
    /// List the valid routes between two hypernodes.
    Routes {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        json: bool,
    },
    /// Check one hyperpath, given as `1,E1,3,...`, as a route.
    Check {
        file: PathBuf,
        #[arg(long)]
        route: String,
    },
    /// Find the least-cost route and trace between two hypernodes.
    Mincost {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify the graph nodes on a route's trace.
    Classify {
        file: PathBuf,
        #[arg(long)]
        route: String,
        /// Graph walk `a,c,b`; defaults to the route's first trace.
        #[arg(long)]
        gpath: Option<String>,
    },
    /// Render the instance as a DOT digraph.
    Dot {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// Failure that ends a command with a message and an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn invalid(message: impl ToString) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Routes { file, from, to, json } => routes(&read(&file)?, &from, &to, json, out),
        Command::Check { file, route } => check(&read(&file)?, &route, out),
        Command::Mincost { file, from, to, json } => mincost(&read(&file)?, &from, &to, json, out),
        Command::Classify { file, route, gpath } => classify(&read(&file)?, &route, gpath.as_deref(), out),
        Command::Dot { file, output } => dot(&read(&file)?, output.as_deref(), out),
    }
}

fn read(path: &Path) -> Result<Hg2, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("error: cannot read {}: {e}", path.display())))?;
    load(&text).map_err(|e| Failure::usage(format!("error: {}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("error: write failed: {e}")))?;
    Ok(EXIT_OK)
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Outcome {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    emit(out, &text)
}

fn validate(file: &Path, out: &mut dyn Write) -> Outcome {
    let hg = read(file)?;
    let h = hg.hypergraph();
    let g = hg.graph();
    emit(
        out,
        &format!(
            "OK: {} hypernodes, {} hyperedges, {} graph nodes, {} graph edges, {} connectors\n",
            h.node_count(),
            h.edge_count(),
            g.node_count(),
            g.edges().len(),
            hg.connectors().len()
        ),
    )
}

fn route_json(route: &Hg2Route) -> Value {
    json!({
        "hyperpath": route.hyperpath().to_sequence(),
        "route": route.pair_labels(),
    })
}

fn routes(hg: &Hg2, from: &str, to: &str, as_json: bool, out: &mut dyn Write) -> Outcome {
    let routes = hg
        .enumerate_routes(from, to)
        .map_err(|e| Failure::usage(format!("error: {e}")))?;
    if as_json {
        let list: Vec<Value> = routes.iter().map(route_json).collect();
        emit_json(out, &json!({ "routes": list }))?;
    } else if routes.is_empty() {
        emit(out, &format!("no route from {from} to {to}\n"))?;
    } else {
        let text: String = routes.iter().map(|r| format!("{r}\n")).collect();
        emit(out, &text)?;
    }
    Ok(if routes.is_empty() { EXIT_INVALID } else { EXIT_OK })
}

fn parse_route(hg: &Hg2, text: &str) -> Result<Hg2Route, Failure> {
    let path = Hyperpath::parse(text).map_err(|e| Failure::usage(format!("error: --route: {e}")))?;
    hg.route_of(&path).map_err(|e| Failure::invalid(format!("Invalid: {e}")))
}

fn check(hg: &Hg2, route: &str, out: &mut dyn Write) -> Outcome {
    let path = Hyperpath::parse(route).map_err(|e| Failure::usage(format!("error: --route: {e}")))?;
    let verdict = match hg.route_of(&path) {
        Ok(route) => hg.validate_route(&route).to_string(),
        Err(e) => format!("Invalid: {e}"),
    };
    emit(out, &format!("{verdict}\n"))?;
    Ok(if verdict == RouteValidity::Valid.to_string() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

fn mincost(hg: &Hg2, from: &str, to: &str, as_json: bool, out: &mut dyn Write) -> Outcome {
    let best = hg
        .min_cost_path(from, to)
        .map_err(|e| Failure::usage(format!("error: {e}")))?;
    match (best, as_json) {
        (Some(c), true) => emit_json(out, &costed_json(&c)).map(|_| EXIT_OK),
        (Some(c), false) => emit(out, &costed_text(&c)).map(|_| EXIT_OK),
        (None, true) => {
            let empty = json!({
                "connector_cost": null,
                "gpath": null,
                "gpath_cost": null,
                "hyperpath": null,
                "route": null,
                "route_cost": null,
                "total": null,
            });
            emit_json(out, &empty).map(|_| EXIT_INVALID)
        }
        (None, false) => emit(out, &format!("no route from {from} to {to}\n")).map(|_| EXIT_INVALID),
    }
}

fn costed_json(c: &CostedPath) -> Value {
    let b = &c.breakdown;
    let gpath: Vec<&str> = c.trace.nodes.iter().map(|n| n.as_str()).collect();
    json!({
        "connector_cost": weight_number(b.connector_cost),
        "gpath": gpath,
        "gpath_cost": weight_number(b.gpath_cost),
        "hyperpath": c.route.hyperpath().to_sequence(),
        "route": c.route.pair_labels(),
        "route_cost": weight_number(b.route_cost),
        "total": weight_number(b.total),
    })
}

fn costed_text(c: &CostedPath) -> String {
    let b = &c.breakdown;
    let gpath: Vec<&str> = c.trace.nodes.iter().map(|n| n.as_str()).collect();
    format!(
        "route: {}\ngpath: {}\nroute_cost: {}\ngpath_cost: {}\nconnector_cost: {}\ntotal: {}\n",
        c.route,
        gpath.join(", "),
        b.route_cost,
        b.gpath_cost,
        b.connector_cost,
        b.total
    )
}

fn classify(hg: &Hg2, route: &str, gpath: Option<&str>, out: &mut dyn Write) -> Outcome {
    let route = parse_route(hg, route)?;
    let validity = hg.validate_route(&route);
    if !validity.is_valid() {
        return Err(Failure::invalid(validity));
    }
    let trace = match gpath {
        Some(text) => {
            let walk: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            hg.trace_from_nodes(&route, &walk)
                .map_err(|e| Failure::invalid(format!("Invalid: {e}")))?
        }
        None => hg
            .trace_gpaths(&route, hg.graph().node_count())
            .map_err(|e| Failure::invalid(format!("Invalid: {e}")))?
            .into_iter()
            .next()
            .ok_or_else(|| Failure::invalid("Invalid: route has no trace"))?,
    };
    let roles = hg
        .classify_nodes(&route, &trace)
        .map_err(|e| Failure::invalid(format!("Invalid: {e}")))?;
    let mut seen = std::collections::HashSet::new();
    let mut text = String::new();
    for n in trace.nodes.iter().filter(|n| seen.insert(*n)) {
        text.push_str(&format!("{n}: {}\n", roles[n]));
    }
    emit(out, &text)
}

fn dot(hg: &Hg2, output: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let text = export_dot(hg);
    match output {
        Some(path) => std::fs::write(path, text)
            .map(|_| EXIT_OK)
            .map_err(|e| Failure::usage(format!("error: cannot write {}: {e}", path.display()))),
        None => emit(out, &text),
    }
}
