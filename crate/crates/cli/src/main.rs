//! `planeproj`: build, check, saturate and draw plane-projecting embeddings.
//!
//! Exit codes: 0 success, 1 semantic failure (the input does not verify or
//! a randomized search gave up), 2 usage, parse or construction errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use planeproj::bounds::BoundQuery;
use planeproj::constructors::{
    complete_graph_embedding, convex_projection_points, extremal_two_plane, forests_to_embedding,
    lift_geometric_thickness, planar_plus_paths, straight_line_planar_drawing, GeomThicknessLayout, LiftMode,
    RotationSystem,
};
use planeproj::forests::{decompose_forests, ForestKind, SearchMode};
use planeproj::geometry::{Point2, Rational};
use planeproj::graph::{edge, Edge, Graph};
use planeproj::ppe::{parse_rational, read_ppe, write_ppe};
use planeproj::projection::{saturate_counting, verify, Failure, PlanePair, PlaneProjection, Witness};
use planeproj::svg::export_svg;
use planeproj::Error;

#[derive(Parser)]
#[command(name = "planeproj", version, about = "Plane-projecting embeddings of graphs")]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an embedding and write it as a PPE file.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Check every plane drawing and edge coverage.
    Verify { input: PathBuf },
    /// Add every non-crossing edge to one plane.
    Saturate {
        input: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
        plane: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a dimension or edge-count bound.
    Bounds { query: String, value: u64 },
    /// Draw one plane as SVG.
    ExportSvg {
        input: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
        plane: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Common {
    /// Seed for randomized constructors.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Linear,
    Caterpillar,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchArg {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Guaranteed,
    PaperPlanes,
}

#[derive(Subcommand)]
enum Construct {
    /// K_n covered by zigzag paths on two concentric circles.
    Complete {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Two planes sharing an axis carrying 6n - 15 edges (n >= 14).
    Extremal {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decompose an edge list into k forests and give each its own plane.
    FromForests {
        /// Edge list: `n m` then one `u v` per line.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "linear")]
        forest_kind: KindArg,
        #[arg(long, value_enum, default_value = "exact")]
        search: SearchArg,
        #[arg(long, value_enum, default_value = "guaranteed")]
        mode: ModeArg,
        #[command(flatten)]
        common: Common,
    },
    /// Planar graph drawn in one plane, each extra path in its own plane.
    PlanarPlusPaths {
        /// Edge list of the planar part.
        #[arg(long)]
        planar: PathBuf,
        /// Lines `v n1 n2 ...` giving each vertex's neighbours counterclockwise.
        #[arg(long)]
        rotation: PathBuf,
        /// One path per line as a vertex sequence.
        #[arg(long)]
        paths: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// n points whose projections to every coordinate plane are convex
    /// with the same cyclic order.
    ConvexPoints {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Lift a drawing with planar edge layers to one layer per plane.
    Lift {
        /// JSON `{"positions": [[x, y], ...], "layers": [[[u, v], ...], ...]}`;
        /// coordinates are integers or `[num, den]` pairs.
        #[arg(long)]
        layout: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn plane_arg(v: &[usize]) -> anyhow::Result<PlanePair> {
    Ok(PlanePair::new(v[0], v[1])?)
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load(path: &Path) -> anyhow::Result<PlaneProjection> {
    read_ppe(&read(path)?).with_context(|| format!("reading {}", path.display()))
}

fn pair_json(p: PlanePair) -> Value {
    json!([p.i, p.j])
}

fn edge_json(e: Edge) -> Value {
    json!([e.0, e.1])
}

fn summary(pp: &PlaneProjection) -> Value {
    let planes: Vec<Value> = pp
        .used_planes()
        .into_iter()
        .map(|p| json!({"plane": pair_json(p), "edges": pp.edges_in_plane(p).len()}))
        .collect();
    json!({
        "dimension": pp.dimension(),
        "vertices": pp.graph().n(),
        "edges": pp.graph().edge_count(),
        "covered_edges": pp.assignment().len(),
        "planes": planes,
    })
}

fn print_summary(pp: &PlaneProjection) {
    println!("dimension {}", pp.dimension());
    println!("vertices {}", pp.graph().n());
    println!("edges {} ({} covered)", pp.graph().edge_count(), pp.assignment().len());
    for p in pp.used_planes() {
        println!("plane {p}: {} edges", pp.edges_in_plane(p).len());
    }
}

fn failure_json(f: &Failure) -> Value {
    let witness = match &f.witness {
        Witness::Vertices(a, b) => json!({"vertices": [a, b]}),
        Witness::VertexOnEdge { vertex, edge } => {
            json!({"vertex": vertex, "edge": edge_json(*edge)})
        }
        Witness::Edges(a, b) => json!({"edges": [edge_json(*a), edge_json(*b)]}),
        Witness::Edge(e) => json!({"edge": edge_json(*e)}),
    };
    json!({
        "plane": f.plane.map(pair_json),
        "kind": f.kind.as_str(),
        "witness": witness,
    })
}

fn rational_or_int(v: &Value, ctx: &str) -> anyhow::Result<Rational> {
    match v {
        Value::Number(n) => {
            Ok(n.to_string().parse::<Rational>().map_err(|_| anyhow!("{ctx}: expected an integer, got {n}"))?)
        }
        _ => Ok(parse_rational(v, ctx)?),
    }
}

fn parse_layout(text: &str) -> anyhow::Result<GeomThicknessLayout> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let positions = v["positions"]
        .as_array()
        .ok_or_else(|| Error::Parse("layout needs a \"positions\" array".into()))?
        .iter()
        .enumerate()
        .map(|(i, p)| match p.as_array().map(Vec::as_slice) {
            Some([x, y]) => {
                let ctx = format!("position {i}");
                Ok(Point2::new(rational_or_int(x, &ctx)?, rational_or_int(y, &ctx)?))
            }
            _ => Err(anyhow::Error::from(Error::Parse(format!("position {i} must be [x, y]")))),
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let layers = v["layers"]
        .as_array()
        .ok_or_else(|| Error::Parse("layout needs a \"layers\" array".into()))?
        .iter()
        .map(|layer| {
            layer
                .as_array()
                .ok_or_else(|| Error::Parse("each layer is an array of [u, v] pairs".into()))?
                .iter()
                .map(|e| match e.as_array().map(Vec::as_slice) {
                    Some([u, v]) => match (u.as_u64(), v.as_u64()) {
                        (Some(u), Some(v)) => Ok(edge(u as usize, v as usize)),
                        _ => Err(Error::Parse(format!("bad edge {e}"))),
                    },
                    _ => Err(Error::Parse(format!("bad edge {e}"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeomThicknessLayout { positions, layers })
}

fn parse_paths(text: &str) -> anyhow::Result<Vec<Vec<usize>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| anyhow::Error::from(Error::Parse(format!("{l:?}: {e}")))))
                .collect()
        })
        .collect()
}

fn construct(kind: &Construct) -> anyhow::Result<(PlaneProjection, &Common, &'static str)> {
    Ok(match kind {
        Construct::Complete { n, common } => (complete_graph_embedding(*n)?, common, "complete"),
        // deterministic; --seed is accepted for a uniform interface
        Construct::Extremal { n, common } => (extremal_two_plane(*n)?, common, "extremal"),
        Construct::ConvexPoints { n, d, common } => {
            let emb = convex_projection_points(*n, *d)?;
            (PlaneProjection::new(Graph::new(*n), emb, Default::default())?, common, "convex-points")
        }
        Construct::FromForests { graph, k, forest_kind, search, mode, common } => {
            let g = Graph::parse_edge_list(&read(graph)?)?;
            let fk = match forest_kind {
                KindArg::Linear => ForestKind::Linear,
                KindArg::Caterpillar => ForestKind::Caterpillar,
            };
            let sm = match search {
                SearchArg::Exact => SearchMode::Exact,
                SearchArg::Heuristic => SearchMode::Heuristic,
            };
            let lm = match mode {
                ModeArg::Guaranteed => LiftMode::Guaranteed,
                ModeArg::PaperPlanes => LiftMode::PaperPlanes,
            };
            let Some(dec) = decompose_forests(&g, *k, fk, sm)? else {
                return Err(anyhow!(NoDecomposition(*k)));
            };
            (forests_to_embedding(&g, &dec, lm, common.seed)?, common, "from-forests")
        }
        Construct::PlanarPlusPaths { planar, rotation, paths, common } => {
            let g = Graph::parse_edge_list(&read(planar)?)?;
            let rot = RotationSystem::parse(&g, &read(rotation)?)?;
            let drawing = straight_line_planar_drawing(&g, &rot)?;
            let paths = parse_paths(&read(paths)?)?;
            (planar_plus_paths(&g, &drawing, &paths)?, common, "planar-plus-paths")
        }
        Construct::Lift { layout, common } => {
            (lift_geometric_thickness(&parse_layout(&read(layout)?)?)?, common, "lift")
        }
    })
}

#[derive(Debug)]
struct NoDecomposition(usize);

impl std::fmt::Display for NoDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "no decomposition into {} forests found", self.0)
    }
}

impl std::error::Error for NoDecomposition {}

/// Exit code of a completed run; errors are mapped by [`exit_code`].
fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Construct { kind } => {
            let (pp, common, name) = construct(kind)?;
            write(&common.out, &write_ppe(&pp))?;
            if cli.json {
                let mut v = summary(&pp);
                v["construct"] = json!(name);
                v["out"] = json!(common.out.display().to_string());
                println!("{v}");
            } else {
                print_summary(&pp);
                println!("wrote {}", common.out.display());
            }
            Ok(0)
        }
        Command::Verify { input } => {
            let pp = load(input)?;
            let report = verify(&pp);
            if cli.json {
                let failures: Vec<Value> = report.failures.iter().map(failure_json).collect();
                println!("{}", json!({"ok": report.ok(), "failures": failures}));
            } else if report.ok() {
                println!("OK");
            } else {
                for f in &report.failures {
                    println!("{f}");
                }
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Saturate { input, plane, out } => {
            let pp = load(input)?;
            let (sat, added) = saturate_counting(&pp, plane_arg(plane)?)?;
            write(out, &write_ppe(&sat))?;
            if cli.json {
                let mut v = summary(&sat);
                v["added"] = json!(added.iter().copied().map(edge_json).collect::<Vec<_>>());
                v["out"] = json!(out.display().to_string());
                println!("{v}");
            } else {
                println!("{} edges added", added.len());
                print_summary(&sat);
            }
            Ok(0)
        }
        Command::Bounds { query, value } => {
            let q: BoundQuery = query.parse()?;
            let r = q.evaluate(*value)?;
            if cli.json {
                println!(
                    "{}",
                    json!({"query": q.name(), "input": value, "value": r.value, "kind": r.kind.to_string(),
                           "quantity": r.quantity, "source": r.source})
                );
            } else {
                println!("{}", r.value);
                println!("{} bound on {}: {}", r.kind, r.quantity, r.source);
            }
            Ok(0)
        }
        Command::ExportSvg { input, plane, out } => {
            let pp = load(input)?;
            let p = plane_arg(plane)?;
            let svg = export_svg(&pp, p)?;
            write(out, &svg)?;
            let edges = pp.edges_in_plane(p).len();
            if cli.json {
                println!(
                    "{}",
                    json!({"plane": pair_json(p), "vertices": pp.graph().n(), "edges": edges,
                                      "out": out.display().to_string()})
                );
            } else {
                println!("plane {p}: {} vertices, {edges} edges, wrote {}", pp.graph().n(), out.display());
            }
            Ok(0)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<NoDecomposition>().is_some() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::NotVerified | Error::FailedHeuristic { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let code = exit_code(&err);
            if cli.json {
                println!("{}", json!({"error": format!("{err:#}"), "exit_code": code}));
            }
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
