use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use sb2v::bench::{run_bench, write_csv, BenchConfig};
use sb2v::connectivity::{is_2vc_digraph, is_3vc_ugraph, is_biconnected, is_strongly_connected};
use sb2v::{
    approximate, b_articulation_points, dot, exact_m2vsbss, generate, is_2vsb,
    is_strongly_biconnected, sbcc, DeletionOrder, Digraph, Error, ExactLimits, Fixture, Method,
    OrderMode,
};

const EXIT_HOLDS: u8 = 0;
const EXIT_FAILS: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNPROVEN: u8 = 3;

/// Strong biconnectivity tools for directed graphs in edge-list format.
///
/// INPUT arguments name an edge-list file, `-` for standard input, or one
/// of the bundled fixtures (fig1a, fig1b, fig1c, tri, k4bi) when no file of
/// that name exists.
#[derive(Parser)]
#[command(name = "sb2v", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Sc,
    Bicon,
    Sb,
    #[value(name = "2vc")]
    TwoVc,
    #[value(name = "2vsb")]
    TwoVsb,
    #[value(name = "3vc-underlying")]
    ThreeVcUnderlying,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Alg1,
    Union,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Alg1 => Method::Alg1,
            MethodArg::Union => Method::Union,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Input,
    Lex,
    Random,
}

impl From<OrderArg> for OrderMode {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Input => OrderMode::Input,
            OrderArg::Lex => OrderMode::Lexicographic,
            OrderArg::Random => OrderMode::Random,
        }
    }
}

#[derive(clap::Args)]
struct Limits {
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value_t = 32)]
    max_m: usize,
    /// Search budget in milliseconds; unlimited when omitted.
    #[arg(long)]
    time_limit_ms: Option<u64>,
}

impl From<&Limits> for ExactLimits {
    fn from(l: &Limits) -> Self {
        ExactLimits {
            max_n: l.max_n,
            max_m: l.max_m,
            time_limit: l.time_limit_ms.map(Duration::from_millis),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test a graph property. Exit 0 if it holds, 1 if not, 2 on bad input.
    Check {
        input: String,
        #[arg(long, short)]
        property: Property,
    },
    /// Print the strongly biconnected components, one per line.
    Sbcc {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the b-articulation points of a strongly biconnected graph.
    Bap {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Approximate a minimum 2-vertex strongly biconnected spanning subgraph.
    Approx {
        input: String,
        #[arg(long, value_enum, default_value = "alg1")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve exactly by branch-and-bound. Exit 3 if optimality is not proven.
    Exact {
        input: String,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a fixture or a seeded random 2-vertex strongly biconnected graph.
    Gen {
        /// A fixture name or `random2vsb`.
        kind: String,
        #[arg(long, short, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        extra_arcs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the approximations over every edge-list file in a directory.
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "alg1,union")]
        method: Vec<MethodArg>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "lex")]
        order: Vec<OrderArg>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        seed: Vec<u64>,
        #[arg(long)]
        with_exact: bool,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a graph as Graphviz DOT.
    Dot {
        input: String,
        /// Arcs to emphasise, given like INPUT.
        #[arg(long)]
        highlight: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(input: &str) -> Result<Digraph, Error> {
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Digraph::from_edge_list(&text);
    }
    let path = Path::new(input);
    if !path.exists() {
        if let Ok(fixture) = input.parse::<Fixture>() {
            return Ok(fixture.digraph());
        }
    }
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {input}: {e}")))?;
    Digraph::from_edge_list(&text)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Check { input, property } => {
            let g = load(&input)?;
            let holds = match property {
                Property::Sc => is_strongly_connected(&g),
                Property::Bicon => is_biconnected(&g.underlying()),
                Property::Sb => is_strongly_biconnected(&g),
                Property::TwoVc => is_2vc_digraph(&g),
                Property::TwoVsb => is_2vsb(&g),
                Property::ThreeVcUnderlying => is_3vc_ugraph(&g.underlying()),
            };
            println!("{holds}");
            Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
        }
        Command::Sbcc { input, out } => {
            let d = sbcc(&load(&input)?);
            let mut text = format!("t={}\n", d.t());
            for c in &d.components {
                let line: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                text.push_str(&line.join(" "));
                text.push('\n');
            }
            emit(out.as_deref(), &text)?;
            Ok(EXIT_HOLDS)
        }
        Command::Bap { input, out } => {
            let report = b_articulation_points(&load(&input)?)?;
            let points: Vec<String> = report.points.iter().map(|v| v.to_string()).collect();
            emit(
                out.as_deref(),
                &format!("l={}\n{}\n", report.l, points.join(" ")),
            )?;
            Ok(EXIT_HOLDS)
        }
        Command::Approx {
            input,
            method,
            order,
            seed,
            out,
        } => {
            let g = load(&input)?;
            let order = DeletionOrder {
                mode: order.into(),
                seed,
            };
            let r = approximate(&g, method.into(), order)?;
            let sub = g.subgraph_with_arcs(&r.arcs)?;
            emit(out.as_deref(), &sub.to_edge_list())?;
            eprintln!(
                "n={} m={} l={} result={} bound={} lb={}",
                r.n,
                r.m,
                r.l,
                r.arcs.len(),
                r.bound,
                2 * r.n
            );
            Ok(EXIT_HOLDS)
        }
        Command::Exact { input, limits, out } => {
            let g = load(&input)?;
            let r = exact_m2vsbss(&g, (&limits).into())?;
            emit(
                out.as_deref(),
                &g.subgraph_with_arcs(&r.arcs)?.to_edge_list(),
            )?;
            eprintln!("size={} proven={}", r.size, r.proven_optimal);
            Ok(if r.proven_optimal {
                EXIT_HOLDS
            } else {
                EXIT_UNPROVEN
            })
        }
        Command::Gen {
            kind,
            n,
            extra_arcs,
            seed,
            out,
        } => {
            let text = if kind == "random2vsb" {
                generate::random_2vsb(n, extra_arcs, seed)?.to_edge_list()
            } else {
                kind.parse::<Fixture>()?.edge_list()
            };
            emit(out.as_deref(), &text)?;
            Ok(EXIT_HOLDS)
        }
        Command::Bench {
            dir,
            method,
            order,
            seed,
            with_exact,
            limits,
            out,
        } => {
            let config = BenchConfig {
                methods: method.into_iter().map(Method::from).collect(),
                orders: order.into_iter().map(OrderMode::from).collect(),
                seeds: seed,
                with_exact,
                exact_limits: (&limits).into(),
            };
            let rows = run_bench(&dir, &config)?;
            for row in &rows {
                if let Err(msg) = &row.outcome {
                    eprintln!("{}: {msg}", row.name);
                }
            }
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(out.as_deref(), &String::from_utf8_lossy(&buf))?;
            Ok(EXIT_HOLDS)
        }
        Command::Dot {
            input,
            highlight,
            out,
        } => {
            let g = load(&input)?;
            let hl = highlight
                .map(|h| load(&h))
                .transpose()?
                .map(|h| h.arc_set());
            emit(out.as_deref(), &dot::to_dot(&g, hl.as_ref()))?;
            Ok(EXIT_HOLDS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
