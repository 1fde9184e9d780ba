//! Command-line front end. Every subcommand reads graphs as
//! `{"vertices": [...], "edges": [[u, v], ...]}` and prints JSON.
//!
//! Exit codes: 0 success (and "property holds" for `verify`, "positive" for
//! `search`), 1 property fails, 2 nonpositive within pool, 3 budget
//! exhausted, 64 usage, 65 malformed input data, 66 unreadable input,
//! 70 internal failure, 74 output failure.

use crate::builders::{self, barycentric, kuenneth_product};
use crate::config::{Budgets, RunConfig, DEFAULT_SEED};
use crate::curvature::{levitt_curvature_vector, uniform_curvature, CurvatureVector, UniformCurvature, UniformMode};
use crate::geodesy::{crofton_distance, enumerate_geodesic_wheels, GeodesicMode};
use crate::graph::{euler_characteristic, Graph, GraphJson};
use crate::json::{coloring_from_value, curvature_to_value, index_vector_to_value, measure_from_value, rational_value};
use crate::lp::{positive_curvature_search, LpError, SearchConfig, SearchStatus, SiteMode};
use crate::morse::{random_coloring, symmetric_index, IndexVector, OrderType};
use crate::topology::{classify, Check, PunctureMode, Recognizer, TopologyError, Witness};
use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_SOFTWARE: i32 = 70;
pub const EXIT_IO: i32 = 74;

#[derive(Parser, Debug)]
#[command(name = "graphcurv", version, about = "Index-expectation curvature on finite simple graphs")]
struct Cli {
    /// Worker threads; defaults to the available parallelism. Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Root seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph: a named family, a Barycentric refinement or a Künneth product.
    Build(BuildArgs),
    /// Decide contractibility, the d-sphere or the d-graph property (exit 0 holds, 1 fails).
    Verify(VerifyArgs),
    /// Euler characteristic of the clique complex.
    Chi(ChiArgs),
    /// Curvature of a measure, the uniform measure, or the Levitt formula.
    Curvature(CurvatureArgs),
    /// Poincaré–Hopf indices of a coloring.
    Indices(IndicesArgs),
    /// Geodesic wheels at a vertex.
    Wheels(WheelsArgs),
    /// Search for a measure with positive curvature (exit 0 positive, 2 nonpositive within pool, 3 budget).
    Search(SearchArgs),
    /// Crofton distance between two vertices for a signed measure.
    Distance(DistanceArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Write JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BuildKind {
    Cycle,
    Wheel,
    Cross,
    Icosa,
    Rp2,
    Barycentric,
    Product,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long)]
    kind: BuildKind,
    /// Cycle length or wheel boundary length.
    #[arg(long)]
    n: Option<usize>,
    /// Cross-polytope dimension.
    #[arg(long)]
    d: Option<usize>,
    /// Input graph for barycentric and product.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Second factor for product.
    #[arg(long = "in2")]
    input2: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyKind {
    Contractible,
    Sphere,
    Dgraph,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    kind: VerifyKind,
    #[arg(long, allow_negative_numbers = true)]
    dim: Option<i64>,
    /// Puncture at every vertex instead of only the smallest.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    node_budget: Option<u64>,
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct ChiArgs {
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["measure", "uniform", "levitt"])))]
struct CurvatureArgs {
    /// Measure JSON: {"weights": [...], "colorings": [...]}.
    #[arg(long)]
    measure: Option<PathBuf>,
    /// Uniform measure over vertex orders; exact unless --samples is given.
    #[arg(long)]
    uniform: bool,
    #[arg(long)]
    levitt: bool,
    /// Estimate the uniform curvature from this many seeded random orders.
    #[arg(long, requires = "uniform")]
    samples: Option<usize>,
    #[arg(long)]
    exhaustive_limit: Option<usize>,
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct IndicesArgs {
    /// Coloring JSON; a seeded random coloring when absent.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Average of the indices of f and -f instead.
    #[arg(long)]
    symmetric: bool,
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Existential,
    Universal,
}

impl From<ModeArg> for GeodesicMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Existential => GeodesicMode::Existential,
            ModeArg::Universal => GeodesicMode::Universal,
        }
    }
}

#[derive(Args, Debug)]
struct WheelsArgs {
    /// Vertex id.
    #[arg(long)]
    vertex: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Existential)]
    mode: ModeArg,
    #[arg(long)]
    max: Option<usize>,
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SiteArg {
    Euler,
    Sectional,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = SiteArg::Euler)]
    mode: SiteArg,
    #[arg(long, default_value_t = SearchConfig::default().rounds)]
    rounds: usize,
    /// Random colorings in the initial pool.
    #[arg(long, default_value_t = SearchConfig::default().initial_pool)]
    pool: usize,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    evaluations: Option<u64>,
    #[arg(long)]
    pivot_budget: Option<u64>,
    #[arg(long)]
    wheel_cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Existential)]
    geodesic: ModeArg,
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct DistanceArgs {
    #[arg(long)]
    measure: PathBuf,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

/// Failure with its exit code; the message goes to stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn data(message: impl Into<String>) -> Self {
        Failure { code: EXIT_DATA, message: message.into() }
    }

    fn software(message: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_SOFTWARE, message: message.to_string() }
    }
}

impl From<TopologyError> for Failure {
    fn from(e: TopologyError) -> Self {
        match e {
            TopologyError::UndecidedBudget { .. } => Failure { code: EXIT_BUDGET, message: e.to_string() },
            other => Failure::data(other.to_string()),
        }
    }
}

impl From<LpError> for Failure {
    fn from(e: LpError) -> Self {
        match e {
            LpError::PivotBudget(_) => Failure { code: EXIT_BUDGET, message: e.to_string() },
            LpError::NoWheels | LpError::NoSites | LpError::EmptyPool => Failure::data(e.to_string()),
            other => Failure::software(other),
        }
    }
}

/// A finished command: JSON to print and the exit code to return.
struct Outcome {
    value: Value,
    code: i32,
    out: Option<PathBuf>,
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_NO_INPUT, message: format!("{}: {e}", path.display()) })
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::data(format!("{}:{}:{}: malformed JSON: {e}", path.display(), e.line(), e.column()))
    })
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let raw: GraphJson = parse_json(path)?;
    raw.into_graph().map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn vertex(g: &Graph, id: &str) -> Result<usize, Failure> {
    g.find_label(id).ok_or_else(|| Failure::data(format!("unknown vertex id {id:?}")))
}

fn labels(g: &Graph, vs: &[usize]) -> Vec<Value> {
    vs.iter().map(|&v| json!(g.label(v))).collect()
}

fn build(args: BuildArgs) -> Result<Outcome, Failure> {
    let need = |x: Option<usize>, flag: &str| {
        x.ok_or_else(|| Failure { code: EXIT_USAGE, message: format!("--kind needs {flag}") })
    };
    let input = |p: &Option<PathBuf>, flag: &str| match p {
        Some(p) => load_graph(p),
        None => Err(Failure { code: EXIT_USAGE, message: format!("--kind needs {flag}") }),
    };
    let g = match args.kind {
        BuildKind::Cycle => builders::cycle(need(args.n, "--n")?),
        BuildKind::Wheel => builders::wheel(need(args.n, "--n")?),
        BuildKind::Cross => builders::cross_polytope(need(args.d, "--d")?),
        BuildKind::Icosa => Ok(builders::icosahedron()),
        BuildKind::Rp2 => Ok(builders::projective_plane()),
        BuildKind::Barycentric => Ok(barycentric(&input(&args.input, "--in")?)),
        BuildKind::Product => kuenneth_product(&input(&args.input, "--in")?, &input(&args.input2, "--in2")?),
    }
    .map_err(|e| Failure::data(e.to_string()))?;
    let value = serde_json::to_value(GraphJson::from_graph(&g)).map_err(Failure::software)?;
    Ok(Outcome { value, code: EXIT_OK, out: args.output.out })
}

fn verify(args: VerifyArgs, budgets: &Budgets) -> Result<Outcome, Failure> {
    let g = load_graph(&args.graph)?;
    let check = match (args.kind, args.dim) {
        (VerifyKind::Contractible, _) => Check::Contractible,
        (VerifyKind::Sphere, Some(d)) => Check::Sphere(d),
        (VerifyKind::Dgraph, Some(d)) => Check::DGraph(d),
        (_, None) => return Err(Failure { code: EXIT_USAGE, message: "--kind sphere|dgraph needs --dim".into() }),
    };
    let puncture = if args.exhaustive { PunctureMode::Exhaustive } else { PunctureMode::Smallest };
    let rec = Recognizer::new(&g).with_budget(args.node_budget.unwrap_or(budgets.node_budget)).with_puncture(puncture);
    let (holds, report) = classify(&g, check, &rec)?;
    let witness = match &report.witness {
        Some(Witness::CollapseOrder(order)) => json!({ "collapse_order": labels(&g, order) }),
        Some(Witness::FailingVertex(v)) => json!({ "failing_vertex": g.label(*v) }),
        None => Value::Null,
    };
    let mut value = json!({ "holds": holds });
    let kind = serde_json::to_value(report.kind).map_err(Failure::software)?;
    if let (Some(obj), Value::Object(kind)) = (value.as_object_mut(), kind) {
        obj.extend(kind);
        obj.insert("witness".into(), witness);
    }
    Ok(Outcome { value, code: if holds { EXIT_OK } else { EXIT_FALSE }, out: args.output.out })
}

fn chi(args: ChiArgs) -> Result<Outcome, Failure> {
    let g = load_graph(&args.graph)?;
    let chi = euler_characteristic(&g).map_err(|e| Failure::data(e.to_string()))?;
    Ok(Outcome { value: json!({ "chi": chi }), code: EXIT_OK, out: args.output.out })
}

fn curvature_value(g: &Graph, k: &CurvatureVector) -> Value {
    let mut value = curvature_to_value(g, k);
    value["total"] = rational_value(&k.total());
    value
}

fn curvature(args: CurvatureArgs, seed: u64, budgets: &Budgets) -> Result<Outcome, Failure> {
    let g = load_graph(&args.graph)?;
    let value = if let Some(path) = &args.measure {
        let raw: Value = parse_json(path)?;
        let mu = measure_from_value(&g, &raw).map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
        curvature_value(&g, &crate::curvature::expectation_curvature(&g, &mu))
    } else if args.levitt {
        curvature_value(&g, &levitt_curvature_vector(&g))
    } else {
        let mode = match args.samples {
            Some(samples) => UniformMode::Sampling { samples, seed },
            None => UniformMode::Exact { limit: args.exhaustive_limit.unwrap_or(budgets.exhaustive_limit) },
        };
        match uniform_curvature(&g, mode) {
            Ok(UniformCurvature::Exact(k)) => curvature_value(&g, &k),
            Ok(UniformCurvature::Sampled { estimate, std_error, samples }) => {
                let mut value = curvature_value(&g, &estimate);
                let errors: serde_json::Map<String, Value> =
                    g.labels().iter().map(|l| l.to_string()).zip(std_error.into_iter().map(Value::from)).collect();
                value["std_error"] = Value::Object(errors);
                value["samples"] = json!(samples);
                value
            }
            Err(e @ crate::curvature::CurvatureError::ExhaustiveBudget { .. }) => {
                return Err(Failure { code: EXIT_BUDGET, message: format!("{e}; pass --samples N to estimate") })
            }
            Err(e) => return Err(Failure::data(e.to_string())),
        }
    };
    Ok(Outcome { value, code: EXIT_OK, out: args.output.out })
}

fn indices(args: IndicesArgs, seed: u64) -> Result<Outcome, Failure> {
    let g = load_graph(&args.graph)?;
    let f = match &args.coloring {
        Some(path) => {
            let raw: Value = parse_json(path)?;
            coloring_from_value(&g, &raw).map_err(|e| Failure::data(format!("{}: {e}", path.display())))?
        }
        None => random_coloring(&g, seed),
    };
    let value = if args.symmetric {
        let values = (0..g.vertex_count())
            .map(|v| symmetric_index(&g, &f, v).map(|j| rational_value(&j)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::data(e.to_string()))?;
        let map: serde_json::Map<String, Value> = g.labels().iter().map(|l| l.to_string()).zip(values).collect();
        json!({ "values": map })
    } else {
        let order = OrderType::new(&g, &f).map_err(|e| Failure::data(e.to_string()))?;
        let iv: IndexVector = order.index_vector(&g);
        let mut value = index_vector_to_value(&g, &iv);
        value["sum"] = json!(iv.sum());
        value
    };
    Ok(Outcome { value, code: EXIT_OK, out: args.output.out })
}

fn wheels(args: WheelsArgs, budgets: &Budgets) -> Result<Outcome, Failure> {
    let g = load_graph(&args.graph)?;
    let x = vertex(&g, &args.vertex)?;
    let mode: GeodesicMode = args.mode.into();
    let found = enumerate_geodesic_wheels(&g, x, args.max.unwrap_or(budgets.max_wheels), mode)
        .map_err(|e| Failure::data(e.to_string()))?;
    let list: Vec<Value> = found
        .wheels
        .iter()
        .map(|w| json!({ "center": g.label(w.center()), "boundary": labels(&g, w.boundary()) }))
        .collect();
    let value = json!({
        "center": g.label(x),
        "mode": mode,
        "count": list.len(),
        "truncated": found.truncated,
        "wheels": list,
    });
    Ok(Outcome { value, code: EXIT_OK, out: args.output.out })
}

fn search(args: SearchArgs, seed: u64, budgets: &Budgets) -> Result<Outcome, Failure> {
    let g = load_graph(&args.graph)?;
    let config = SearchConfig {
        mode: match args.mode {
            SiteArg::Euler => SiteMode::Euler,
            SiteArg::Sectional => SiteMode::Sectional,
        },
        seed,
        rounds: args.rounds,
        initial_pool: args.pool,
        restarts: args.restarts.unwrap_or(budgets.restarts),
        evaluations: args.evaluations.unwrap_or(budgets.evaluations),
        pivot_budget: args.pivot_budget.unwrap_or(budgets.pivot_budget),
        wheel_cap: args.wheel_cap.unwrap_or(budgets.wheel_cap),
        geodesic: args.geodesic.into(),
    };
    let report = positive_curvature_search(&g, &config)?;
    let code = report.status.exit_code();
    debug_assert!(code != EXIT_OK || report.status == SearchStatus::Positive);
    let value = serde_json::to_value(&report).map_err(Failure::software)?;
    Ok(Outcome { value, code, out: args.output.out })
}

fn distance(args: DistanceArgs) -> Result<Outcome, Failure> {
    let g = load_graph(&args.graph)?;
    let raw: Value = parse_json(&args.measure)?;
    let mu = measure_from_value(&g, &raw).map_err(|e| Failure::data(format!("{}: {e}", args.measure.display())))?;
    let (a, b) = (vertex(&g, &args.from)?, vertex(&g, &args.to)?);
    let d = crofton_distance(&g, &mu, a, b).map_err(|e| Failure::data(e.to_string()))?;
    let value = json!({
        "from": g.label(a),
        "to": g.label(b),
        "distance": d.as_ref().map_or(Value::Null, rational_value),
    });
    Ok(Outcome { value, code: EXIT_OK, out: args.output.out })
}

fn run_config(cli: &Cli, budgets: Budgets) -> RunConfig {
    let (command, inputs, output): (&str, Vec<PathBuf>, Option<PathBuf>) = match &cli.command {
        Command::Build(a) => {
            ("build", a.input.iter().chain(&a.input2).cloned().collect(), a.output.out.clone())
        }
        Command::Verify(a) => ("verify", vec![a.graph.clone()], a.output.out.clone()),
        Command::Chi(a) => ("chi", vec![a.graph.clone()], a.output.out.clone()),
        Command::Curvature(a) => {
            ("curvature", a.measure.iter().chain([&a.graph]).cloned().collect(), a.output.out.clone())
        }
        Command::Indices(a) => {
            ("indices", a.coloring.iter().chain([&a.graph]).cloned().collect(), a.output.out.clone())
        }
        Command::Wheels(a) => ("wheels", vec![a.graph.clone()], a.output.out.clone()),
        Command::Search(a) => ("search", vec![a.graph.clone()], a.output.out.clone()),
        Command::Distance(a) => ("distance", vec![a.measure.clone(), a.graph.clone()], a.output.out.clone()),
    };
    RunConfig { command: command.into(), inputs, output, seed: cli.seed, threads: cli.threads, budgets }
}

fn execute(cli: Cli, config: &RunConfig) -> Result<Outcome, Failure> {
    let (seed, budgets) = (config.seed, &config.budgets);
    match cli.command {
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a, budgets),
        Command::Chi(a) => chi(a),
        Command::Curvature(a) => curvature(a, seed, budgets),
        Command::Indices(a) => indices(a, seed),
        Command::Wheels(a) => wheels(a, budgets),
        Command::Search(a) => search(a, seed, budgets),
        Command::Distance(a) => distance(a),
    }
}

fn emit(outcome: &Outcome, stdout: &mut dyn Write) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(&outcome.value).map_err(Failure::software)?;
    text.push('\n');
    let io = |e: std::io::Error| Failure { code: EXIT_IO, message: e.to_string() };
    match &outcome.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) }),
        None => stdout.write_all(text.as_bytes()).map_err(io),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn dispatch<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let budgets = match Budgets::from_env() {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(stderr, "graphcurv: {e}");
            return EXIT_USAGE;
        }
    };
    let config = run_config(&cli, budgets);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(config.threads.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "graphcurv: {e}");
            return EXIT_SOFTWARE;
        }
    };
    let result = pool.install(|| execute(cli, &config)).and_then(|outcome| {
        emit(&outcome, stdout)?;
        Ok(outcome.code)
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "graphcurv {}: {}", config.command, f.message);
            f.code
        }
    }
}
