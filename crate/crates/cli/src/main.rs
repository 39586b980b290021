mod dot;
mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use smoothcut::families::{generate, random_geometric_connected, FamilySpec};
use smoothcut::l1::{export_complementarity_model, DEFAULT_CAP};
use smoothcut::spectral::{JacobiOptions, SpectralOptions, DEFAULT_TOL};
use smoothcut::{parse_edge_list, Error, Graph};

use report::{Analysis, Method};

/// Graph smoothing: algebraic connectivity, exact sparsest cuts (b), the
/// l-infinity optimum (gamma), and the bounds relating them.
///
/// Graphs are read as edge lists (see FORMATS.md) from --input or stdin.
/// Exit codes: 0 success, 1 usage error, 2 input or format error (including
/// disconnected graphs), 3 graph above the exact-computation cap, 4
/// numerical failure.
#[derive(Parser, Debug)]
#[command(name = "smoothcut", version)]
struct Cli {
    /// Read the graph from this file instead of stdin.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Seed for random generators.
    #[arg(long, global = true, value_name = "U64", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family graph or a connected random geometric graph as an edge list.
    Gen(GenArgs),
    /// Compute a, b, gamma and/or the bounds report as JSON.
    Compute(ComputeArgs),
    /// Render a two-way partition as DOT; a summary goes to stderr.
    Partition(PartitionArgs),
    /// The bounds report as JSON.
    Bounds(CapArgs),
    /// Compare the l1 (sparsest cut) and l2 (Fiedler sign) partitions as JSON.
    Compare(CapArgs),
    /// Write the l1 smoothing problem as a linear program with complementarity constraints.
    ExportModel,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Wheel,
    Cube,
    Broom,
    Starlike,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, conflicts_with = "rgg", required_unless_present = "rgg")]
    family: Option<Family>,
    /// Random geometric graph: seeded uniform points in the unit square,
    /// edges between points closer than --radius.
    #[arg(long)]
    rgg: bool,
    /// Number of vertices (all families but cube and starlike, and --rgg).
    #[arg(long)]
    n: Option<usize>,
    /// Broom path length.
    #[arg(long)]
    l: Option<usize>,
    /// Starlike star sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long, requires = "rgg")]
    radius: Option<f64>,
    /// Seeds tried (incrementing from --seed) before giving up on connectivity.
    #[arg(long, default_value_t = 1000)]
    max_attempts: u32,
}

#[derive(Args, Debug, Clone, Copy)]
struct CapArgs {
    /// Largest order for exact enumeration of b.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Above the cap, fall back to the minimum-cut upper estimate of b.
    #[arg(long)]
    heuristic: bool,
    /// Jacobi off-diagonal tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    caps: CapArgs,
    /// Quantities to compute.
    #[arg(long, value_delimiter = ',', default_value = "a,b,gamma,bounds")]
    what: Vec<Quantity>,
    /// Include wall-clock timings (makes the output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    A,
    B,
    Gamma,
    Bounds,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    #[command(flatten)]
    caps: CapArgs,
    #[arg(long, value_enum, default_value_t = Method::L1)]
    method: Method,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::Parse(_)
            | Error::InvalidGraph(_)
            | Error::Disconnected
            | Error::TooSmall { .. }
            | Error::RetriesExhausted { .. } => 2,
            Error::InvalidFamily(_) => 1,
            _ => 4,
        };
        let message = match e {
            Error::Disconnected => {
                "graph is disconnected; every quantity here is defined for connected graphs only"
                    .to_string()
            }
            Error::CapExceeded { n, cap } => format!(
                "graph has {n} vertices, above the exact cap of {cap}; raise --cap or pass --heuristic"
            ),
            e => e.to_string(),
        };
        Failure { code, message }
    }
}

fn io_failure(what: &str, e: io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{what}: {e}"),
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 1, message }
}

fn read_graph(cli: &Cli) -> Result<Graph, Failure> {
    let mut text = String::new();
    match &cli.input {
        Some(path) => {
            text = fs::read_to_string(path)
                .map_err(|e| io_failure(&format!("cannot read {}", path.display()), e))?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| io_failure("cannot read stdin", e))?;
        }
    }
    parse_edge_list(&text).map_err(|e| Failure::from(Error::from(e)))
}

fn write_output(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| io_failure(&format!("cannot write {}", path.display()), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| io_failure("cannot write stdout", e)),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn family_spec(args: &GenArgs, family: Family) -> Result<FamilySpec, Failure> {
    let n = || {
        args.n
            .ok_or_else(|| usage(format!("--family {family:?} needs --n").to_lowercase()))
    };
    Ok(match family {
        Family::Path => FamilySpec::Path { n: n()? },
        Family::Cycle => FamilySpec::Cycle { n: n()? },
        Family::Star => FamilySpec::Star { n: n()? },
        Family::Complete => FamilySpec::Complete { n: n()? },
        Family::Wheel => FamilySpec::Wheel { n: n()? },
        Family::Cube => FamilySpec::Cube,
        Family::Broom => FamilySpec::Broom {
            path_len: args
                .l
                .ok_or_else(|| usage("--family broom needs --l".into()))?,
            n: n()?,
        },
        Family::Starlike => {
            if args.parts.is_empty() {
                return Err(usage("--family starlike needs --parts".into()));
            }
            FamilySpec::Starlike {
                parts: args.parts.clone(),
            }
        }
    })
}

fn cmd_gen(cli: &Cli, args: &GenArgs) -> Result<(), Failure> {
    let text = if args.rgg {
        let n = args.n.ok_or_else(|| usage("--rgg needs --n".into()))?;
        let radius = args
            .radius
            .ok_or_else(|| usage("--rgg needs --radius".into()))?;
        let g = random_geometric_connected(n, radius, cli.seed, args.max_attempts)?;
        eprintln!("seed used: {}", g.seed);
        format!(
            "# random geometric graph: n = {n}, radius = {radius}, seed = {}\n{}",
            g.seed,
            g.graph.to_edge_list()
        )
    } else {
        let family = args.family.expect("clap requires --family without --rgg");
        let spec = family_spec(args, family)?;
        let g = generate(&spec)?;
        format!("# {spec}\n{}", g.to_edge_list())
    };
    write_output(cli, &text)
}

fn spectral_options(caps: &CapArgs) -> SpectralOptions {
    SpectralOptions {
        jacobi: JacobiOptions {
            tol: caps.tol,
            ..JacobiOptions::default()
        },
        ..SpectralOptions::default()
    }
}

fn cmd_compute(cli: &Cli, args: &ComputeArgs) -> Result<(), Failure> {
    let g = read_graph(cli)?;
    let analysis = Analysis::new(
        &g,
        args.caps.cap,
        args.caps.heuristic,
        spectral_options(&args.caps),
    );
    let mut timings = Vec::new();
    let mut report = report::ComputeReport::new(&g);
    let mut timed = |name: &'static str, f: &mut dyn FnMut() -> Result<(), Error>| {
        let start = Instant::now();
        f()?;
        timings.push((name, start.elapsed().as_secs_f64() * 1e3));
        Ok::<(), Error>(())
    };
    for q in [Quantity::A, Quantity::B, Quantity::Gamma, Quantity::Bounds] {
        if !args.what.contains(&q) {
            continue;
        }
        match q {
            Quantity::A => timed("a", &mut || {
                report.a = Some(analysis.a_report()?);
                Ok(())
            })?,
            Quantity::B => timed("b", &mut || {
                report.b = Some(analysis.b_report()?);
                Ok(())
            })?,
            Quantity::Gamma => timed("gamma", &mut || {
                report.gamma = Some(analysis.gamma_report()?);
                Ok(())
            })?,
            Quantity::Bounds => timed("bounds", &mut || {
                report.bounds = Some(analysis.bounds()?);
                Ok(())
            })?,
        }
    }
    if args.timings {
        report.timings_ms = Some(
            timings
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        );
    }
    write_output(cli, &to_json(&report))
}

fn cmd_partition(cli: &Cli, args: &PartitionArgs) -> Result<(), Failure> {
    let g = read_graph(cli)?;
    let analysis = Analysis::new(
        &g,
        args.caps.cap,
        args.caps.heuristic,
        spectral_options(&args.caps),
    );
    let side = analysis.partition(args.method)?;
    let summary = side.summary();
    eprintln!(
        "method {}: parts {}|{}, cut edges {}, density {}",
        args.method.name(),
        summary.sizes[0],
        summary.sizes[1],
        summary.cut_size,
        summary.density.value
    );
    write_output(cli, &dot::render(&g, &side.cut.set))
}

fn cmd_bounds(cli: &Cli, caps: &CapArgs) -> Result<(), Failure> {
    let g = read_graph(cli)?;
    let analysis = Analysis::new(&g, caps.cap, caps.heuristic, spectral_options(caps));
    write_output(cli, &to_json(&analysis.bounds()?))
}

fn cmd_compare(cli: &Cli, caps: &CapArgs) -> Result<(), Failure> {
    let g = read_graph(cli)?;
    let analysis = Analysis::new(&g, caps.cap, caps.heuristic, spectral_options(caps));
    let comparison = analysis.compare()?;
    if comparison.l1.exact && !comparison.l1_not_worse {
        return Err(Failure {
            code: 4,
            message: "exact l1 cut is denser than the spectral cut; this is a bug".into(),
        });
    }
    write_output(cli, &to_json(&comparison))
}

fn cmd_export_model(cli: &Cli) -> Result<(), Failure> {
    let g = read_graph(cli)?;
    write_output(cli, &export_complementarity_model(&g).render())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(cli, args),
        Command::Compute(args) => cmd_compute(cli, args),
        Command::Partition(args) => cmd_partition(cli, args),
        Command::Bounds(caps) => cmd_bounds(cli, caps),
        Command::Compare(caps) => cmd_compare(cli, caps),
        Command::ExportModel => cmd_export_model(cli),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
