//! `latgraph`: power-type graphs and cyclic subgroup lattices of finite
//! groups from the command line.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use latgraph_core::catalog::{from_cayley_csv, group_from_str, named_catalog, CatalogError, Limits, NamedGroup};
use latgraph_core::format::{
    digraph_summary, digraph_to_dot, graph_summary, graph_to_dot, lattice_summary, lattice_to_dot, GraphDoc,
    LatticeDoc,
};
use latgraph_core::iso::{census, compare_groups_with_budget, CensusKind, IsoError, DEFAULT_BUDGET};
use latgraph_core::reconstruct::{
    diff_from_lattice, dirpow_from_lattice, epow_from_lattice, lattice_from_epow, pow_from_lattice, roundtrip,
    LabeledDigraph, LabeledGraph, ReconstructError,
};
use latgraph_core::{build_lattice, diff_oracle, dirpow_oracle, epow_oracle, pow_oracle, CyclicLattice};

#[derive(Parser)]
#[command(name = "latgraph", version, about = "Power-type graphs and cyclic subgroup lattices of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Summary)]
    format: Format,

    /// Node-expansion budget for isomorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Largest group order that may be constructed.
    #[arg(long, global = true, env = "LATGRAPH_MAX_ORDER")]
    max_order: Option<usize>,

    /// Accepted for compatibility and ignored: every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a power-type graph of a group.
    Graph {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_enum)]
        kind: GraphKindArg,
    },
    /// Print the cyclic subgroup lattice of a group.
    Lattice {
        #[command(flatten)]
        source: GroupSource,
    },
    /// Run a reconstruction on a graph or lattice JSON file.
    Reconstruct {
        #[arg(long, visible_alias = "direction", value_enum)]
        kind: Direction,
        #[arg(long)]
        from: PathBuf,
    },
    /// Check every reconstruction against the group oracles.
    Roundtrip {
        #[arg(long, conflicts_with = "catalog", required_unless_present = "catalog")]
        group: Option<String>,
        /// Run over a whole catalog (order16 or corpus).
        #[arg(long)]
        catalog: Option<String>,
    },
    /// Compare the lattices and power-type graphs of two groups.
    Compare {
        #[arg(long)]
        group_a: String,
        #[arg(long)]
        group_b: String,
    },
    /// Count isomorphism classes of a structure over a catalog.
    Census {
        #[arg(long)]
        catalog: String,
        #[arg(long, value_enum, default_value_t = CensusKindArg::Pow)]
        kind: CensusKindArg,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// Group expression such as "Z(2)xZ(6)" or "SD(16)".
    #[arg(long)]
    group: Option<String>,
    /// Cayley table file.
    #[arg(long)]
    from: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Summary,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKindArg {
    Epow,
    Pow,
    Dirpow,
    Diff,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusKindArg {
    Epow,
    Pow,
    Dirpow,
    Diff,
    Lattice,
}

impl From<CensusKindArg> for CensusKind {
    fn from(k: CensusKindArg) -> Self {
        match k {
            CensusKindArg::Epow => CensusKind::Epow,
            CensusKindArg::Pow => CensusKind::Pow,
            CensusKindArg::Dirpow => CensusKind::Dirpow,
            CensusKindArg::Diff => CensusKind::Diff,
            CensusKindArg::Lattice => CensusKind::Lattice,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    LatticeFromEpow,
    EpowFromLattice,
    PowFromLattice,
    DirpowFromLattice,
    DiffFromLattice,
}

/// Failure classes, each with its exit code.
enum Failure {
    Verification(String),
    Usage(String),
    TooLarge(String),
    InvalidInput(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::TooLarge(_) => 3,
            Failure::InvalidInput(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::TooLarge(m) | Failure::InvalidInput(m) => m,
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        if e.is_too_large() {
            Failure::TooLarge(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<IsoError> for Failure {
    fn from(e: IsoError) -> Self {
        Failure::TooLarge(e.to_string())
    }
}

impl From<ReconstructError> for Failure {
    fn from(e: ReconstructError) -> Self {
        match e {
            ReconstructError::Timeout(t) => t.into(),
            other => Failure::InvalidInput(other.to_string()),
        }
    }
}

struct Ctx {
    format: Format,
    budget: u64,
    limits: Limits,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::default();
    if let Some(m) = cli.max_order {
        limits.max_order = m;
    }
    let ctx = Ctx {
        format: cli.format,
        budget: cli.budget,
        limits,
    };
    match run(cli.command, &ctx) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            print!("{out}");
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

/// Output printed so far, and the failure if any.
type Outcome = Result<String, (String, Failure)>;

fn run(command: Command, ctx: &Ctx) -> Outcome {
    let plain = |r: Result<String, Failure>| r.map_err(|f| (String::new(), f));
    match command {
        Command::Graph { source, kind } => plain(cmd_graph(&source, kind, ctx)),
        Command::Lattice { source } => plain(cmd_lattice(&source, ctx)),
        Command::Reconstruct { kind, from } => plain(cmd_reconstruct(kind, &from, ctx)),
        Command::Roundtrip { group, catalog } => cmd_roundtrip(group, catalog, ctx),
        Command::Compare { group_a, group_b } => cmd_compare(&group_a, &group_b, ctx),
        Command::Census { catalog, kind } => plain(cmd_census(&catalog, kind.into(), ctx)),
    }
}

fn load_group(source: &GroupSource, limits: &Limits) -> Result<NamedGroup, Failure> {
    match (&source.group, &source.from) {
        (Some(expr), _) => Ok(group_from_str(expr, limits)?),
        (None, Some(path)) => Ok(from_cayley_csv(path, limits)?),
        (None, None) => Err(Failure::Usage("either --group or --from is required".into())),
    }
}

fn render_graph(g: &LabeledOrPlain, name: &str, format: Format) -> String {
    match (g, format) {
        (LabeledOrPlain::Simple(g, _, _), Format::Summary) => graph_summary(g),
        (LabeledOrPlain::Directed(d, _), Format::Summary) => digraph_summary(d),
        (LabeledOrPlain::Simple(g, names, _), Format::Dot) => graph_to_dot(g, name, names.as_deref()),
        (LabeledOrPlain::Directed(d, names), Format::Dot) => digraph_to_dot(d, name, names.as_deref()),
        (LabeledOrPlain::Simple(g, _, elements), Format::Json) => {
            let doc = GraphDoc::simple(g);
            match elements {
                Some(e) => doc.with_elements(e.clone()).to_json(),
                None => doc.to_json(),
            }
        }
        (LabeledOrPlain::Directed(d, _), Format::Json) => GraphDoc::directed(d).to_json(),
    }
}

/// A graph with optional vertex names and, for difference graphs, the
/// element ids of the kept vertices.
enum LabeledOrPlain {
    Simple(latgraph_core::SimpleGraph, Option<Vec<String>>, Option<Vec<usize>>),
    Directed(latgraph_core::Digraph, Option<Vec<String>>),
}

fn line(s: String) -> String {
    if s.ends_with('\n') {
        s
    } else {
        s + "\n"
    }
}

fn cmd_graph(source: &GroupSource, kind: GraphKindArg, ctx: &Ctx) -> Result<String, Failure> {
    let g = load_group(source, &ctx.limits)?;
    let names = Some(g.element_names.clone());
    let (graph, name) = match kind {
        GraphKindArg::Epow => (LabeledOrPlain::Simple(epow_oracle(&g), names, None), "epow"),
        GraphKindArg::Pow => (LabeledOrPlain::Simple(pow_oracle(&g), names, None), "pow"),
        GraphKindArg::Dirpow => (LabeledOrPlain::Directed(dirpow_oracle(&g), names), "dirpow"),
        GraphKindArg::Diff => {
            let d = diff_oracle(&g);
            let kept: Vec<usize> = d.retained.iter().map(|x| x.0).collect();
            let kept_names = kept.iter().map(|&x| g.element_names[x].clone()).collect();
            (LabeledOrPlain::Simple(d.graph, Some(kept_names), Some(kept)), "diff")
        }
    };
    Ok(line(render_graph(&graph, name, ctx.format)))
}

fn render_lattice(l: &CyclicLattice, format: Format) -> String {
    line(match format {
        Format::Summary => lattice_summary(l),
        Format::Json => LatticeDoc::of(l).to_json(),
        Format::Dot => lattice_to_dot(l),
    })
}

fn cmd_lattice(source: &GroupSource, ctx: &Ctx) -> Result<String, Failure> {
    let g = load_group(source, &ctx.limits)?;
    Ok(render_lattice(&build_lattice(&g).lattice, ctx.format))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn labeled_names(labels: &[latgraph_core::CanonicalLabel]) -> Option<Vec<String>> {
    Some(labels.iter().map(ToString::to_string).collect())
}

fn render_labeled(g: &LabeledGraph, name: &str, format: Format) -> String {
    line(match format {
        Format::Json => GraphDoc::labeled(g).to_json(),
        _ => render_graph(
            &LabeledOrPlain::Simple(g.graph.clone(), labeled_names(&g.labels), None),
            name,
            format,
        ),
    })
}

fn render_labeled_directed(d: &LabeledDigraph, format: Format) -> String {
    line(match format {
        Format::Json => GraphDoc::labeled_directed(d).to_json(),
        _ => render_graph(
            &LabeledOrPlain::Directed(d.graph.clone(), labeled_names(&d.labels)),
            "dirpow",
            format,
        ),
    })
}

fn parse_lattice_file(text: &str) -> Result<CyclicLattice, Failure> {
    use latgraph_core::format::{FormatError, LatticeDoc};
    LatticeDoc::parse_lattice(text).map_err(|e| match e {
        FormatError::Lattice(_) => Failure::InvalidInput(e.to_string()),
        other => Failure::Usage(other.to_string()),
    })
}

fn cmd_reconstruct(kind: Direction, from: &Path, ctx: &Ctx) -> Result<String, Failure> {
    let text = read_input(from)?;
    match kind {
        Direction::LatticeFromEpow => {
            let doc = GraphDoc::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            let g = doc.to_simple().map_err(|e| Failure::Usage(e.to_string()))?;
            if g.vertex_count() > ctx.limits.max_order {
                return Err(Failure::TooLarge(format!(
                    "graph with {} vertices exceeds the cap {}",
                    g.vertex_count(),
                    ctx.limits.max_order
                )));
            }
            Ok(render_lattice(&lattice_from_epow(&g)?, ctx.format))
        }
        Direction::EpowFromLattice => {
            let l = parse_lattice_file(&text)?;
            Ok(render_labeled(&epow_from_lattice(&l)?, "epow", ctx.format))
        }
        Direction::PowFromLattice => {
            let l = parse_lattice_file(&text)?;
            Ok(render_labeled(&pow_from_lattice(&l)?, "pow", ctx.format))
        }
        Direction::DirpowFromLattice => {
            let l = parse_lattice_file(&text)?;
            Ok(render_labeled_directed(&dirpow_from_lattice(&l)?, ctx.format))
        }
        Direction::DiffFromLattice => {
            let l = parse_lattice_file(&text)?;
            Ok(render_labeled(&diff_from_lattice(&l)?, "diff", ctx.format))
        }
    }
}

fn roundtrip_one(g: &NamedGroup, ctx: &Ctx, out: &mut String) -> Result<bool, Failure> {
    let report = roundtrip(g, ctx.budget)?;
    out.push_str(&format!("group: {} (order {})\n", g.name, g.order()));
    for c in &report.checks {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{}: {verdict} ({})\n", c.name, c.detail));
    }
    let verdict = if report.all_passed() { "PASS" } else { "FAIL" };
    out.push_str(&format!("{}/{} {verdict}\n", report.passed(), report.checks.len()));
    Ok(report.all_passed())
}

fn cmd_roundtrip(group: Option<String>, catalog: Option<String>, ctx: &Ctx) -> Outcome {
    let groups = match (group, catalog) {
        (Some(expr), _) => vec![group_from_str(&expr, &ctx.limits).map_err(|e| (String::new(), e.into()))?],
        (None, Some(name)) => named_catalog(&name, &ctx.limits).map_err(|e| (String::new(), e.into()))?,
        (None, None) => return Err((String::new(), Failure::Usage("--group or --catalog is required".into()))),
    };
    let mut out = String::new();
    let mut failed = Vec::new();
    for g in &groups {
        match roundtrip_one(g, ctx, &mut out) {
            Ok(true) => {}
            Ok(false) => failed.push(g.name.clone()),
            Err(f) => return Err((out, f)),
        }
    }
    if failed.is_empty() {
        Ok(out)
    } else {
        let msg = format!("reconstruction mismatch for {}", failed.join(", "));
        Err((out, Failure::Verification(msg)))
    }
}

fn stats_text(s: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = s.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_compare(a: &str, b: &str, ctx: &Ctx) -> Outcome {
    let load = |e: &str| group_from_str(e, &ctx.limits).map_err(|err| (String::new(), Failure::from(err)));
    let (ga, gb) = (load(a)?, load(b)?);
    let p = compare_groups_with_budget(&ga, &gb, ctx.budget).map_err(|e| (String::new(), e.into()))?;
    let mut out = String::new();
    out.push_str(&format!("lattice_iso={}\n", p.lattice_iso));
    out.push_str(&format!("dirpow_iso={}\n", p.dirpow_iso));
    out.push_str(&format!("epow_iso={}\n", p.epow_iso));
    out.push_str(&format!("pow_iso={}\n", p.pow_iso));
    out.push_str(&format!("abelian: A={} B={}\n", ga.is_abelian(), gb.is_abelian()));
    let (sa, sb) = (ga.order_statistics(), gb.order_statistics());
    out.push_str(&format!("order statistics: A={} B={}\n", stats_text(&sa), stats_text(&sb)));
    let mut differ = Vec::new();
    if ga.order() != gb.order() {
        differ.push("order");
    }
    if ga.is_abelian() != gb.is_abelian() {
        differ.push("abelianness");
    }
    if sa != sb {
        differ.push("order statistics");
    }
    if differ.is_empty() {
        out.push_str("groups agree on order, abelianness and order statistics\n");
    } else {
        out.push_str(&format!("groups differ: {}\n", differ.join(", ")));
    }
    if p.is_consistent() {
        Ok(out)
    } else {
        Err((out, Failure::Verification("the four flags disagree".into())))
    }
}

fn cmd_census(catalog: &str, kind: CensusKind, ctx: &Ctx) -> Result<String, Failure> {
    let groups = named_catalog(catalog, &ctx.limits).map_err(|e| match e {
        CatalogError::UnknownCatalog(_) => Failure::Usage(e.to_string()),
        other => other.into(),
    })?;
    let c = census(&groups, kind, ctx.budget)?;
    let mut out = format!(
        "catalog={catalog} kind={} groups={} classes={}\n",
        kind.name(),
        groups.len(),
        c.classes.len()
    );
    for class in &c.classes {
        let names: Vec<&str> = class.iter().map(|&i| groups[i].name.as_str()).collect();
        out.push_str(&format!("{}\n", names.join(" ~ ")));
    }
    Ok(out)
}
