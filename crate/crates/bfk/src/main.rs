use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bfk::formats::{self, GraphJson, LatticeJson};
use bfk::{dot, parallel};
use bfk_core::constructions::ConstructionError;
use bfk_core::enumeration::{self, Claim, SearchOptions};
use bfk_core::types::{self, Flags};
use bfk_core::{faces, reduction, FaceGraph, GraphError, MultiGraph};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

const AFTER_HELP: &str = "Exit codes: 0 success, 2 usage or parse error, 3 invalid input graph, \
4 construction precondition failed.";

#[derive(Parser)]
#[command(name = "bfk", version, about = "Faces of Birkhoff polytopes as elementary bipartite graphs", after_help = AFTER_HELP)]
struct Cli {
    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "BFK_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Largest face lattice to build.
    #[arg(long, global = true, default_value_t = faces::DEFAULT_FACE_CAP as u64, value_parser = clap::value_parser!(u64).range(1000..))]
    cap: u64,
    /// Output file (output directory for `classify`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Jsonl,
    Dot,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Structure of one face graph.
    Analyze {
        path: PathBuf,
        /// Include the face lattice in JSON output.
        #[arg(long)]
        lattice: bool,
    },
    /// All connected irreducible face graphs with n nodes per layer and dimension d.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        extended: bool,
        /// Search without the degree and partner bounds.
        #[arg(long)]
        no_prune: bool,
    },
    /// Classify all combinatorial types up to dimension d.
    Classify {
        #[arg(long)]
        d: usize,
        /// Allow dimensions 7 and 8.
        #[arg(long)]
        extended: bool,
        /// Check the classification theorems on the result.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        no_prune: bool,
    },
    /// Apply a construction recipe.
    Construct { recipe: PathBuf },
    /// Graphviz rendering of a graph.
    ExportDot { path: PathBuf },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] formats::FormatError),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Construction(#[from] ConstructionError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Graph(_) => 3,
            CliError::Construction(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let jobs = cli.jobs.map(|j| j as usize).unwrap_or_else(parallel::default_jobs);
    match &cli.command {
        Command::Analyze { path, lattice } => analyze(cli, path, *lattice),
        Command::Enumerate { n, d, extended, no_prune } => enumerate(cli, *n, *d, *extended, !*no_prune, jobs),
        Command::Classify { d, extended, verify, no_prune } => classify(cli, *d, *extended, *verify, !*no_prune, jobs),
        Command::Construct { recipe } => construct(cli, recipe),
        Command::ExportDot { path } => {
            let g = read_graph(path)?;
            emit(cli.out.as_deref(), &dot::to_dot(&g))
        }
    }
}

fn read_graph(path: &Path) -> Result<MultiGraph, CliError> {
    Ok(formats::parse_graph(&std::fs::read_to_string(path)?)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A simple graph as given, a multigraph through its resolution.
fn face_graph(m: &MultiGraph) -> Result<FaceGraph, GraphError> {
    if m.is_simple() {
        FaceGraph::new(m.support())
    } else {
        m.resolution()
    }
}

#[derive(Serialize)]
struct MinimalNode {
    node: String,
    partners: Vec<String>,
}

#[derive(Serialize)]
struct Analysis {
    graph: GraphJson,
    resolved: bool,
    n: usize,
    m: usize,
    components: usize,
    dimension: usize,
    ears: usize,
    vertices: usize,
    irreducible: bool,
    minimal_nodes: Vec<MinimalNode>,
    facets: usize,
    fvec: Option<Vec<usize>>,
    pyramid: bool,
    product: bool,
    cube: bool,
    digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lattice: Option<LatticeJson>,
}

fn analysis(input: &MultiGraph, g: &FaceGraph, cap: usize, with_lattice: bool) -> Analysis {
    let minimal_nodes = reduction::minimal_nodes(g)
        .into_iter()
        .map(|v| MinimalNode {
            node: v.to_string(),
            partners: reduction::partners(g, v).map(|p| p.partners.iter().map(|x| x.to_string()).collect()).unwrap_or_default(),
        })
        .collect();
    let lattice = faces::all_faces(g, cap).ok();
    let flags: Flags = types::compute_flags(g);
    Analysis {
        graph: GraphJson::from_multigraph(input),
        resolved: !input.is_simple(),
        n: g.n(),
        m: g.edge_count(),
        components: g.component_count(),
        dimension: g.dimension(),
        ears: g.ear_count(),
        vertices: g.count_perfect_matchings_up_to(usize::MAX),
        irreducible: reduction::is_irreducible(g),
        minimal_nodes,
        facets: faces::facets(g).len(),
        fvec: lattice.as_ref().map(|l| l.f_vector()),
        pyramid: flags.is_pyramid,
        product: flags.is_product,
        cube: flags.is_cube,
        digest: types::try_type_key(g).ok().map(|k| formats::digest(&k)),
        lattice: if with_lattice { lattice.as_ref().map(|l| formats::lattice_json(g, l)) } else { None },
    }
}

fn analysis_table(a: &Analysis) -> String {
    let mut s = String::new();
    let fvec = a.fvec.as_ref().map(|f| format!("{f:?}")).unwrap_or_else(|| "over cap".into());
    let minimal: Vec<String> =
        a.minimal_nodes.iter().map(|m| format!("{} (partners: {})", m.node, m.partners.join(" "))).collect();
    let _ = writeln!(s, "n: {}\nm: {}\ncomponents: {}", a.n, a.m, a.components);
    let _ = writeln!(s, "dimension: {}\nears: {}\nvertices: {}", a.dimension, a.ears, a.vertices);
    let _ = writeln!(s, "irreducible: {}\nminimal nodes: {}", a.irreducible, minimal.join(", "));
    let _ = writeln!(s, "facets: {}\nf-vector: {}", a.facets, fvec);
    let _ = writeln!(s, "pyramid: {}\nproduct: {}\ncube: {}", a.pyramid, a.product, a.cube);
    let _ = writeln!(s, "digest: {}", a.digest.as_deref().unwrap_or("n/a"));
    s
}

fn analyze(cli: &Cli, path: &Path, lattice: bool) -> Result<(), CliError> {
    let input = read_graph(path)?;
    let g = face_graph(&input)?;
    let a = analysis(&input, &g, cli.cap as usize, lattice);
    let text = match cli.format.unwrap_or(Format::Table) {
        Format::Json | Format::Jsonl => serde_json::to_string(&a).expect("analysis serializes") + "\n",
        Format::Dot => dot::to_dot(&input),
        Format::Table => analysis_table(&a),
    };
    emit(cli.out.as_deref(), &text)
}

#[derive(Serialize)]
struct EnumeratedLine {
    n: usize,
    d: usize,
    digest: String,
    fvec: Vec<usize>,
    graph: GraphJson,
}

fn check_dim(d: usize, extended: bool) -> Result<(), CliError> {
    if d == 0 || d > 8 {
        return Err(CliError::Usage(format!("dimension must be between 1 and 8, got {d}")));
    }
    if d > 6 && !extended {
        return Err(CliError::Usage("dimensions 7 and 8 need --extended".into()));
    }
    Ok(())
}

fn enumerate(cli: &Cli, n: usize, d: usize, extended: bool, prune: bool, jobs: usize) -> Result<(), CliError> {
    check_dim(d, extended)?;
    if n == 0 || n > 2 * d {
        return Err(CliError::Usage(format!("need 1 <= n <= 2d, got n = {n}, d = {d}")));
    }
    let graphs = parallel::generate(n, d, SearchOptions { prune }, jobs);
    let mut text = String::new();
    for g in &graphs {
        let fp = types::fingerprint(g).map_err(|e| CliError::Usage(e.to_string()))?;
        let line = EnumeratedLine { n, d, digest: formats::digest(&fp.key), fvec: fp.fvec, graph: GraphJson::from_graph(g) };
        text.push_str(&serde_json::to_string(&line).expect("line serializes"));
        text.push('\n');
    }
    match &cli.out {
        Some(p) => {
            std::fs::write(p, text)?;
            println!("count: {}", graphs.len());
        }
        None => {
            print!("{text}");
            eprintln!("count: {}", graphs.len());
        }
    }
    Ok(())
}

fn classify(cli: &Cli, d: usize, extended: bool, verify: bool, prune: bool, jobs: usize) -> Result<(), CliError> {
    check_dim(d, extended)?;
    let start = Instant::now();
    let c = parallel::classify(d, SearchOptions { prune }, jobs);
    let elapsed = start.elapsed();
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("catalog.jsonl"), formats::catalog_jsonl(&c.catalog()))?;
        std::fs::write(dir.join("report.json"), formats::report_json(&c.report))?;
    }
    match cli.format.unwrap_or(Format::Table) {
        Format::Json => print!("{}", formats::report_json(&c.report)),
        Format::Jsonl => print!("{}", formats::catalog_jsonl(&c.catalog())),
        Format::Table | Format::Dot => {
            println!("{:>4} {:>12} {:>8} {:>9}", "dim", "non-product", "product", "pyramids");
            for (k, v) in &c.report.dims {
                println!("{k:>4} {:>12} {:>8} {:>9}", v.non_product, v.product, v.pyramids);
            }
        }
    }
    if verify {
        let verdicts = enumeration::verify_theorems(&c);
        let claims = [
            Claim::BdimAtMostTwiceDim,
            Claim::CubeAtTwiceDim,
            Claim::CubeTriangle,
            Claim::TwiceDimMinusTwo,
            Claim::TwiceDimMinusThree,
            Claim::WedgeOrProduct,
            Claim::FacetBound,
        ];
        for claim in claims {
            let all: Vec<_> = verdicts.iter().filter(|v| v.claim == claim).collect();
            let passed = all.iter().filter(|v| v.passed).count();
            eprintln!("{claim:?}: {passed}/{} passed", all.len());
        }
    }
    eprintln!("elapsed: {:.2}s with {jobs} worker(s)", elapsed.as_secs_f64());
    Ok(())
}

#[derive(Serialize)]
struct FaceSummary {
    n: usize,
    face_graph: bool,
    dimension: Option<usize>,
    vertices: usize,
    fvec: Option<Vec<usize>>,
    digest: Option<String>,
}

fn summary(g: &bfk_core::Graph, cap: usize) -> FaceSummary {
    let vertices = g.count_perfect_matchings_up_to(usize::MAX);
    match FaceGraph::new(g.clone()) {
        Ok(f) => FaceSummary {
            n: f.n(),
            face_graph: true,
            dimension: Some(f.dimension()),
            vertices,
            fvec: faces::f_vector(&f, cap).ok(),
            digest: types::try_type_key(&f).ok().map(|k| formats::digest(&k)),
        },
        Err(_) => FaceSummary { n: g.n(), face_graph: false, dimension: None, vertices, fvec: None, digest: None },
    }
}

#[derive(Serialize)]
struct Constructed {
    kind: String,
    graph: GraphJson,
    operands: Vec<FaceSummary>,
    result: FaceSummary,
}

fn construct(cli: &Cli, path: &Path) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)?;
    let recipe_json: formats::RecipeJson = serde_json::from_str(&text).map_err(formats::FormatError::from)?;
    let recipe = recipe_json.to_recipe()?;
    let g = recipe.apply()?;
    let cap = cli.cap as usize;
    let operands = recipe_json
        .operands
        .iter()
        .map(|o| {
            let m = o.to_multigraph()?;
            let g = face_graph(&m).map(|f| f.into_graph()).unwrap_or_else(|_| m.support());
            Ok(summary(&g, cap))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let out = Constructed { kind: recipe.kind().to_string(), graph: GraphJson::from_graph(&g), operands, result: summary(&g, cap) };
    let json = serde_json::to_string(&out).expect("construction serializes") + "\n";
    if let Some(p) = &cli.out {
        std::fs::write(p, &json)?;
    }
    match cli.format.unwrap_or(Format::Table) {
        Format::Table => {
            let r = &out.result;
            for (i, o) in out.operands.iter().enumerate() {
                println!("operand {i}: n {} dim {:?} vertices {}", o.n, o.dimension, o.vertices);
            }
            println!("{}: n {} face graph {} dim {:?} vertices {}", out.kind, r.n, r.face_graph, r.dimension, r.vertices);
            if let Some(f) = &r.fvec {
                println!("f-vector: {f:?}");
            }
        }
        Format::Dot => print!("{}", dot::to_dot(&MultiGraph::from(&g))),
        Format::Json | Format::Jsonl => {
            if cli.out.is_none() {
                print!("{json}");
            }
        }
    }
    Ok(())
}
