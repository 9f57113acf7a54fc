use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use monosep::convexity::{
    caratheodory_number, generic_separable, hypergraph_hull, parse_hypergraph, two_colorable, CARATHEODORY_CAP,
};
use monosep::graph::{parse_graph, Graph, VertexSet};
use monosep::harness::{run_fuzz, FuzzConfig};
use monosep::monophonic::{hull, is_convex};
use monosep::separation::{decide, two_partition, verify_witness, SeparationResult};

/// Half-space separation in the monophonic convexity of graphs.
///
/// Exit status: 0 when a decision completed (either answer), 1 when a fuzz
/// run or an equivalence check found a mismatch, 2 on input or configuration
/// errors.
#[derive(Parser)]
#[command(name = "monosep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether A and B are separated by complementary convex sets.
    Separate {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertex ids of A.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Comma-separated vertex ids of B.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Convex hull of a vertex set, with the repair steps taken.
    Hull {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Whether a vertex set is convex.
    ConvexCheck {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Split the vertices into two non-empty convex sets, if possible.
    TwoPartition {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cross-check the decision procedure against brute force on random graphs.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Vertex count range, inclusive, as LO..HI.
        #[arg(long, default_value = "4..10", value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        /// Comma-separated edge probabilities.
        #[arg(long, value_delimiter = ',', default_value = "0.2,0.35,0.5")]
        p: Vec<f64>,
        /// Sizes of A and B, inclusive, as LO..HI.
        #[arg(long, default_value = "1..2", value_parser = parse_range)]
        set_size: RangeInclusive<usize>,
        /// Largest graph handed to the brute-force separation oracle.
        #[arg(long, default_value_t = 20)]
        oracle_cap: usize,
        /// Largest graph on which hulls are compared with path enumeration.
        #[arg(long, default_value_t = 9)]
        hull_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the 2-coloring reduction on a 3-uniform hypergraph.
    Hypergraph {
        /// Hypergraph file: "n m" then m lines of three vertex ids.
        #[arg(long, alias = "graph")]
        hypergraph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Edge-list file: "n m" then m lines "u v".
    #[arg(long = "graph")]
    path: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Plain,
}

enum Failure {
    /// Bad input or configuration; exit 2.
    Input(String),
    /// A cross-check disagreed; exit 1. The report is already printed.
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a number: {t:?}"));
    Ok(num(lo)?..=num(hi)?)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(arg: &GraphArg) -> Result<Graph, Failure> {
    parse_graph(&read(&arg.path)?).map_err(|e| Failure::Input(format!("{}: {e}", arg.path.display())))
}

fn ids(text: &str, g: &Graph) -> Result<VertexSet, Failure> {
    Ok(VertexSet::parse_ids(text, g.order())?)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn join(x: &VertexSet) -> String {
    x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn dot(g: &Graph, a: &VertexSet, b: &VertexSet, result: &SeparationResult) -> String {
    let mut out = String::from("graph separation {\n");
    match &result.witness {
        Some(_) => out.push_str("  // green: H, blue: complement; double circles mark A and B\n"),
        None => out.push_str("  // not separable; green: A, blue: B\n"),
    }
    out.push_str("  node [style=filled, fillcolor=white];\n");
    for v in 0..g.order() {
        let side = match &result.witness {
            Some(h) if h.contains(v) => Some("palegreen"),
            Some(_) => Some("lightblue"),
            None if a.contains(v) => Some("palegreen"),
            None if b.contains(v) => Some("lightblue"),
            None => None,
        };
        let mut attrs = Vec::new();
        if let Some(color) = side {
            attrs.push(format!("fillcolor={color}"));
        }
        if a.contains(v) || b.contains(v) {
            attrs.push("shape=doublecircle".into());
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn separate(graph: &GraphArg, a: &str, b: &str, format: Format) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let (a, b) = (ids(a, &g)?, ids(b, &g)?);
    let result = decide(&g, &a, &b)?;
    if let Some(h) = &result.witness {
        assert!(verify_witness(&g, &a, &b, h), "decide returns verified witnesses");
    }
    match format {
        Format::Json => print_json(&result),
        Format::Dot => print!("{}", dot(&g, &a, &b, &result)),
        Format::Plain => match &result.witness {
            Some(h) => println!("separable\nH: {}\ncomplement: {}", join(h), join(&h.complement())),
            None => println!("not separable"),
        },
    }
    Ok(())
}

fn hull_cmd(graph: &GraphArg, set: &str, format: Format) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let x = ids(set, &g)?;
    let (h, trace) = hull(&g, &x)?;
    match format {
        Format::Plain => {
            println!("{}", join(&h));
            for s in &trace.steps {
                let added: Vec<String> = s.added.iter().map(|v| v.to_string()).collect();
                println!(
                    "component {} pair ({}, {}) added {}",
                    s.component,
                    s.pair.0,
                    s.pair.1,
                    added.join(",")
                );
            }
        }
        _ => print_json(&json!({ "hull": h, "steps": trace.steps })),
    }
    Ok(())
}

fn convex_check(graph: &GraphArg, set: &str, format: Format) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let c = ids(set, &g)?;
    let convex = is_convex(&g, &c);
    match format {
        Format::Plain => println!("{}", if convex { "convex" } else { "not convex" }),
        _ => print_json(&json!({ "set": c, "convex": convex })),
    }
    Ok(())
}

fn two_partition_cmd(graph: &GraphArg, format: Format) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let found = two_partition(&g)?;
    match (format, found) {
        (Format::Plain, Some((h, rest))) => println!("{} | {}", join(&h), join(&rest)),
        (Format::Plain, None) => println!("none"),
        (_, Some((h, rest))) => print_json(&json!([h, rest])),
        (_, None) => print_json(&json!("none")),
    }
    Ok(())
}

fn fuzz(config: FuzzConfig, format: Format) -> Result<(), Failure> {
    let report = run_fuzz(&config)?;
    match format {
        Format::Plain => print!("{report}"),
        _ => print_json(&report),
    }
    if report.all_agree() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

#[derive(Serialize)]
struct HypergraphReport {
    vertices: usize,
    edges: usize,
    colorable: bool,
    separable: bool,
    witness: Option<VertexSet>,
    /// Omitted when the extended ground set exceeds the enumeration cap.
    caratheodory: Option<usize>,
    equivalent: bool,
}

fn hypergraph_cmd(path: &Path, format: Format) -> Result<(), Failure> {
    let h3 = parse_hypergraph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let o = hypergraph_hull(&h3);
    let ground = h3.order() + 2;
    let colorable = two_colorable(&h3)?;
    let witness = generic_separable(
        &o,
        &VertexSet::from_ids(ground, [o.a()]),
        &VertexSet::from_ids(ground, [o.b()]),
    )?;
    let caratheodory = if ground <= CARATHEODORY_CAP {
        Some(caratheodory_number(&o)?)
    } else {
        None
    };
    let report = HypergraphReport {
        vertices: h3.order(),
        edges: h3.edges().len(),
        colorable,
        separable: witness.is_some(),
        equivalent: colorable == witness.is_some(),
        witness,
        caratheodory,
    };
    match format {
        Format::Plain => {
            println!("colorable: {}", report.colorable);
            println!("separable: {}", report.separable);
            match report.caratheodory {
                Some(d) => println!("caratheodory: {d}"),
                None => println!("caratheodory: skipped"),
            }
        }
        _ => print_json(&report),
    }
    if report.equivalent {
        Ok(())
    } else {
        eprintln!("error: colorability and separability disagree");
        Err(Failure::Mismatch)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Separate { graph, a, b, format } => separate(&graph, &a, &b, format),
        Command::Hull { graph, set, format } => hull_cmd(&graph, &set, format),
        Command::ConvexCheck { graph, set, format } => convex_check(&graph, &set, format),
        Command::TwoPartition { graph, format } => two_partition_cmd(&graph, format),
        Command::Fuzz {
            seed,
            count,
            n_range,
            p,
            set_size,
            oracle_cap,
            hull_cap,
            format,
        } => fuzz(
            FuzzConfig {
                seed,
                count,
                n_range,
                p_values: p,
                set_size,
                oracle_cap,
                hull_cap,
                ..FuzzConfig::default()
            },
            format,
        ),
        Command::Hypergraph { hypergraph, format } => hypergraph_cmd(&hypergraph, format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
