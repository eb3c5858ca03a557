//! The batch commands behind the `coxhull` binary.
//!
//! Every command produces a JSON report (stdout or `--out`) and a short
//! human summary (stderr). Exit codes: 0 when the checked statement holds,
//! 2 when a counterexample was found, 1 on usage or input errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::convexity::{self, HullReport, InversionTable, Property, Scope};
use crate::coxeter::{CoxeterMatrix, CoxeterType, Word};
use crate::finite::{GroupTable, DEFAULT_ROOT_CAP};
use crate::graphical::{self, Classification, OrientationTable, SimpleGraph};
use crate::perm::{Permutation, PermutationTable};
use crate::poset::Poset;
use crate::right_angled::{RightAngledGroup, DEFAULT_SEED};
use crate::signed::{SignedPermutation, SignedPermutationTable};
use crate::type_a;
use crate::type_b::{self, TypeBPoset};
use crate::{Error, Result};

/// Largest `n` for `S_n` sweeps without `--unsafe`.
pub const CAP_A: usize = 6;
/// Largest `n` for `B_n` sweeps without `--unsafe`.
pub const CAP_B: usize = 4;
/// Largest right-angled ball radius without `--unsafe`.
pub const CAP_RA_LENGTH: usize = 8;

const FINITE_DEFAULT_TYPES: [&str; 10] = ["A2", "A3", "A4", "A5", "B2", "B3", "D4", "F4", "G2", "H3"];

#[derive(Debug, Parser)]
#[command(name = "coxhull", version, about = "Convex hulls and hull-property checks for Coxeter groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Lift the safety caps on group and ball sizes.
    #[arg(long = "unsafe", global = true)]
    pub allow_unsafe: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Strong hull (or hull) property for a whole finite Coxeter group.
    VerifyFinite(VerifyFiniteArgs),
    /// Strong hull property on a ball of a right-angled group, plus a
    /// seeded sample of meet-pair injections.
    VerifyRa(VerifyRaArgs),
    /// Convex hull of a few elements.
    Hull(HullArgs),
    /// Type A insertion of a permutation into a poset.
    Insert(InsertArgs),
    /// Type B insertion of a signed permutation into a symmetric poset.
    InsertB(InsertBArgs),
    /// Extension-count product bound over a whole group.
    Sidorenko(SidorenkoArgs),
    /// Block classification and brute-force hull check for ac(G).
    Graphical(GraphicalArgs),
    /// Checks that ac(K_n) is the Cayley graph of S_n.
    IsoCheck(IsoCheckArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct PropertyFlags {
    /// Check the strong hull property.
    #[arg(long, conflicts_with = "weak")]
    pub strong: bool,
    /// Check the plain hull property.
    #[arg(long)]
    pub weak: bool,
}

impl PropertyFlags {
    fn property(self, default: Property) -> Property {
        match (self.strong, self.weak) {
            (true, _) => Property::Strong,
            (_, true) => Property::Hull,
            _ => default,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyFiniteArgs {
    /// Named type such as A4, B3, D4, F4, G2, H3.
    #[arg(long = "type", conflicts_with = "matrix", required_unless_present = "matrix")]
    pub kind: Option<String>,
    /// Coxeter matrix JSON of finite type.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    #[command(flatten)]
    pub property: PropertyFlags,
}

#[derive(Debug, Args)]
pub struct VerifyRaArgs {
    /// Right-angled Coxeter matrix JSON (entries 1, 2 or 0 for infinity).
    #[arg(long)]
    pub matrix: PathBuf,
    /// Radius of the ball swept.
    #[arg(long, default_value_t = 4)]
    pub max_length: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random pairs for the injection check.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[command(flatten)]
    pub property: PropertyFlags,
}

#[derive(Debug, Args)]
pub struct HullArgs {
    /// Named finite type; elements given with --word.
    #[arg(long = "type", conflicts_with_all = ["matrix", "perm"])]
    pub kind: Option<String>,
    /// Finite or right-angled matrix JSON; elements given with --word.
    #[arg(long, conflicts_with = "perm")]
    pub matrix: Option<PathBuf>,
    /// Elements as words in the generators (`"1 2 1"`, `id`).
    #[arg(long)]
    pub word: Vec<String>,
    /// Elements as (signed) permutations in one-line notation.
    #[arg(long, allow_hyphen_values = true)]
    pub perm: Vec<String>,
}

#[derive(Debug, Args)]
pub struct InsertArgs {
    /// Poset JSON `{"n", "covers"}`.
    #[arg(long)]
    pub poset: PathBuf,
    #[arg(long)]
    pub perm: String,
}

#[derive(Debug, Args)]
pub struct InsertBArgs {
    /// Type B poset JSON with signed labels.
    #[arg(long)]
    pub poset: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub perm: String,
    /// Add the mirror image of every cover.
    #[arg(long)]
    pub symmetrize: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    A,
    B,
}

#[derive(Debug, Args)]
pub struct SidorenkoArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "type", value_enum, ignore_case = true, default_value = "a")]
    pub family: Family,
}

#[derive(Debug, Args)]
pub struct GraphicalArgs {
    /// Edge list (`u v` per line) or JSON `{"n", "edges"}`.
    #[arg(long)]
    pub graph: PathBuf,
    /// Classify by blocks.
    #[arg(long)]
    pub classify: bool,
    /// Brute-force hull check over ac(G).
    #[arg(long)]
    pub check: bool,
    #[command(flatten)]
    pub property: PropertyFlags,
}

#[derive(Debug, Args)]
pub struct IsoCheckArgs {
    #[arg(long)]
    pub n: usize,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub json: String,
    pub summary: String,
    pub exit_code: i32,
}

impl Outcome {
    fn new(report: &impl Serialize, summary: String, holds: bool) -> Self {
        Outcome {
            json: serde_json::to_string_pretty(report).expect("report serializes"),
            summary,
            exit_code: if holds { 0 } else { 2 },
        }
    }
}

fn cap(value: usize, limit: usize, what: &str, allow: bool) -> Result<()> {
    if value > limit && !allow {
        return Err(Error::CapExceeded(format!("{what} = {value} exceeds {limit}; pass --unsafe to override")));
    }
    Ok(())
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let unsafe_ok = cli.allow_unsafe;
    match &cli.command {
        Command::VerifyFinite(args) => verify_finite(args, unsafe_ok),
        Command::VerifyRa(args) => verify_ra(args, unsafe_ok),
        Command::Hull(args) => hull(args, unsafe_ok),
        Command::Insert(args) => insert(args),
        Command::InsertB(args) => insert_b(args),
        Command::Sidorenko(args) => sidorenko(args, unsafe_ok),
        Command::Graphical(args) => graphical(args),
        Command::IsoCheck(args) => iso_check(args, unsafe_ok),
    }
}

fn verify_finite(args: &VerifyFiniteArgs, unsafe_ok: bool) -> Result<Outcome> {
    let (label, matrix) = match (&args.kind, &args.matrix) {
        (Some(kind), _) => {
            let t: CoxeterType = kind.parse()?;
            let label = t.to_string();
            if !FINITE_DEFAULT_TYPES.contains(&label.as_str()) && !unsafe_ok {
                return Err(Error::CapExceeded(format!("type {label} is outside the default set; pass --unsafe")));
            }
            (label, t.matrix())
        }
        (None, Some(path)) => (path.display().to_string(), CoxeterMatrix::from_json_file(path)?),
        (None, None) => return Err(Error::UnknownType("give --type or --matrix".into())),
    };
    let table = GroupTable::from_matrix(&matrix, DEFAULT_ROOT_CAP)?;
    let property = args.property.property(Property::Strong);
    let report = convexity::sweep(&table, Scope::Group, property, &label);
    let summary = hull_summary(&format!("{label} (order {})", table.order()), &report);
    Ok(Outcome::new(&report, summary, report.holds()))
}

fn hull_summary(what: &str, report: &HullReport) -> String {
    let name = match report.property {
        Property::Strong => "strong hull property",
        Property::Hull => "hull property",
    };
    match &report.witness {
        None => format!("{what}: {name} holds ({} pairs)", report.pairs_checked),
        Some(w) => format!(
            "{what}: {name} FAILS at u = {}, v = {}, w = {} with sizes {:?}",
            w.u, w.v, w.w, w.sizes
        ),
    }
}

#[derive(Serialize)]
struct RaReport {
    rank: usize,
    max_length: usize,
    sweep: HullReport,
    seed: u64,
    injection_samples: usize,
    injection_collisions: usize,
    codomain_ok: bool,
}

fn verify_ra(args: &VerifyRaArgs, unsafe_ok: bool) -> Result<Outcome> {
    cap(args.max_length, CAP_RA_LENGTH, "--max-length", unsafe_ok)?;
    let group = RightAngledGroup::new(CoxeterMatrix::from_json_file(&args.matrix)?)?;
    let property = args.property.property(Property::Strong);
    let sweep = group.verify(args.max_length, property);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let (mut collisions, mut codomain_ok) = (0, true);
    for _ in 0..args.samples {
        let u = group.random_element(args.max_length, &mut rng);
        let v = group.random_element(args.max_length, &mut rng);
        let check = group.injection_check(&u, &v)?;
        collisions += usize::from(!check.is_injective());
        codomain_ok &= check.codomain_ok;
    }
    let holds = sweep.holds() && collisions == 0 && codomain_ok;
    let summary = format!(
        "{}; meet-pair map injective on {}/{} sampled pairs",
        hull_summary(&format!("right-angled rank {}", group.rank()), &sweep),
        args.samples - collisions,
        args.samples
    );
    let report = RaReport {
        rank: group.rank(),
        max_length: args.max_length,
        sweep,
        seed: args.seed,
        injection_samples: args.samples,
        injection_collisions: collisions,
        codomain_ok,
    };
    Ok(Outcome::new(&report, summary, holds))
}

#[derive(Serialize)]
struct HullOutput {
    backend: String,
    generators: Vec<String>,
    size: usize,
    members: Vec<String>,
}

fn table_hull<T: InversionTable>(table: &T, backend: String, idx: &[usize]) -> Result<HullOutput> {
    let h = convexity::hull(table, idx)?;
    Ok(HullOutput {
        backend,
        generators: idx.iter().map(|&i| table.label(i)).collect(),
        size: h.len(),
        members: h.members.iter().map(|&i| table.label(i)).collect(),
    })
}

fn hull(args: &HullArgs, unsafe_ok: bool) -> Result<Outcome> {
    let output = if !args.perm.is_empty() {
        if args.perm.iter().any(|p| p.contains('-')) {
            let perms = args.perm.iter().map(|p| p.parse()).collect::<Result<Vec<SignedPermutation>>>()?;
            let n = perms[0].n();
            cap(n, CAP_B, "n", unsafe_ok)?;
            let table = SignedPermutationTable::new(n);
            let idx = perms
                .iter()
                .map(|p| table.index_of(p).ok_or_else(|| Error::InvalidPermutation(format!("{p} is not in B_{n}"))))
                .collect::<Result<Vec<_>>>()?;
            table_hull(&table, format!("B{n}"), &idx)?
        } else {
            let perms = args.perm.iter().map(|p| p.parse()).collect::<Result<Vec<Permutation>>>()?;
            let n = perms[0].n();
            cap(n, CAP_A, "n", unsafe_ok)?;
            let table = PermutationTable::new(n);
            let idx = perms
                .iter()
                .map(|p| table.index_of(p).ok_or_else(|| Error::InvalidPermutation(format!("{p} is not in S_{n}"))))
                .collect::<Result<Vec<_>>>()?;
            table_hull(&table, format!("S{n}"), &idx)?
        }
    } else {
        let words = args.word.iter().map(|w| Word::parse(w)).collect::<Result<Vec<_>>>()?;
        if words.is_empty() {
            return Err(Error::Empty("hull needs --word or --perm elements"));
        }
        let (label, matrix) = match (&args.kind, &args.matrix) {
            (Some(kind), _) => {
                let t: CoxeterType = kind.parse()?;
                (t.to_string(), t.matrix())
            }
            (None, Some(path)) => (path.display().to_string(), CoxeterMatrix::from_json_file(path)?),
            (None, None) => return Err(Error::UnknownType("give --type, --matrix or --perm".into())),
        };
        match GroupTable::from_matrix(&matrix, DEFAULT_ROOT_CAP) {
            Ok(table) => {
                let idx = words.iter().map(|w| table.element(w)).collect::<Result<Vec<_>>>()?;
                table_hull(&table, label, &idx)?
            }
            Err(Error::NotFiniteType { .. }) if matrix.is_right_angled() => {
                let group = RightAngledGroup::new(matrix)?;
                let xs = words.iter().map(|w| group.element(w)).collect::<Result<Vec<_>>>()?;
                let members = group.hull(&xs)?;
                HullOutput {
                    backend: format!("right-angled {label}"),
                    generators: xs.iter().map(|x| x.to_string()).collect(),
                    size: members.len(),
                    members: members.iter().map(|x| x.to_string()).collect(),
                }
            }
            Err(e) => return Err(e),
        }
    };
    let summary = format!("{}: hull of {} elements has {} members", output.backend, output.generators.len(), output.size);
    Ok(Outcome::new(&output, summary, true))
}

fn insert(args: &InsertArgs) -> Result<Outcome> {
    let poset = Poset::from_json_file(&args.poset)?;
    let w: Permutation = args.perm.parse()?;
    let ext = type_a::insert(&poset, &w)?;
    let pi = ext.permutation();
    let report = json!({
        "n": poset.n(),
        "perm": w.to_string(),
        "values": ext.values(),
        "pi": pi.to_string(),
    });
    let summary = format!("f_P({w}) has values {:?}, π = {pi}", ext.values());
    Ok(Outcome::new(&report, summary, true))
}

fn insert_b(args: &InsertBArgs) -> Result<Outcome> {
    let poset = TypeBPoset::from_json_file(&args.poset, args.symmetrize)?;
    let w: SignedPermutation = args.perm.parse()?;
    let ext = type_b::typeb_insert(&poset, &w)?;
    let pi = ext.permutation();
    let values: Vec<[i32; 2]> = ext.assignments().into_iter().map(|(x, v)| [x, v]).collect();
    let report = json!({
        "n": poset.n(),
        "perm": w.to_string(),
        "values": values,
        "pi": pi.to_string(),
    });
    let positive: Vec<String> = (1..=poset.n() as i32)
        .map(|v| format!("p{} = {v}", ext.element_with_value(v)))
        .collect();
    let summary = format!("f_P({w}): {}; π = {pi}", positive.join(", "));
    Ok(Outcome::new(&report, summary, true))
}

fn sidorenko(args: &SidorenkoArgs, unsafe_ok: bool) -> Result<Outcome> {
    let report = match args.family {
        Family::A => {
            cap(args.n, CAP_A, "--n", unsafe_ok)?;
            type_a::sidorenko_check(args.n)
        }
        Family::B => {
            cap(args.n, CAP_B, "--n", unsafe_ok)?;
            type_b::typeb_sidorenko_check(args.n)
        }
    };
    let summary = format!(
        "{}: min product {} vs bound {} (ratio {:.4}, at {}) over {} elements: {}",
        report.group,
        report.min_product,
        report.bound,
        report.min_ratio,
        report.minimizer,
        report.checked,
        if report.holds { "holds" } else { "FAILS" }
    );
    Ok(Outcome::new(&report, summary, report.holds))
}

/// An induced subgraph that forces a violation, with the figure
/// orientations placed on it and their hull sizes there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    /// `"diamond"` or `"cycle"`.
    pub kind: String,
    /// 1-based vertices of `G`, in the order of the model graph's labels.
    pub vertices: Vec<usize>,
    /// `|conv(o,o')|`, `|conv(o',o'')|`, `|conv(o,o'')|` inside the
    /// induced subgraph.
    pub sizes: [usize; 3],
}

/// Searches the incomplete blocks for an induced diamond (two triangles on
/// a shared edge) or an induced cycle of length at least 4, smallest
/// vertex sets first.
pub fn find_obstruction(graph: &SimpleGraph) -> Option<Obstruction> {
    let class = graphical::classify_good(graph);
    for block in &class.incomplete_blocks {
        let block: Vec<usize> = block.iter().map(|v| v - 1).collect();
        if block.len() > 20 {
            continue;
        }
        let mut subsets: Vec<u32> = (0u32..1 << block.len()).filter(|s| s.count_ones() >= 4).collect();
        subsets.sort_by_key(|s| (s.count_ones(), *s));
        for s in subsets {
            let vs: Vec<usize> = (0..block.len()).filter(|&i| s >> i & 1 == 1).map(|i| block[i]).collect();
            if let Some(found) = model_obstruction(graph, &vs) {
                return Some(found);
            }
        }
    }
    None
}

fn model_obstruction(graph: &SimpleGraph, vs: &[usize]) -> Option<Obstruction> {
    let deg = |v: usize| vs.iter().filter(|&&u| graph.has_edge(u, v)).count();
    let edges: usize = vs.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    let (kind, order, figure) = if vs.len() == 4 && edges == 5 {
        let hubs: Vec<usize> = vs.iter().copied().filter(|&v| deg(v) == 3).collect();
        let rims: Vec<usize> = vs.iter().copied().filter(|&v| deg(v) == 2).collect();
        // model labels a b c d with ad the shared edge
        ("diamond", vec![hubs[0], rims[0], rims[1], hubs[1]], graphical::fig4())
    } else if edges == vs.len() && vs.iter().all(|&v| deg(v) == 2) {
        let mut order = vec![vs[0]];
        while order.len() < vs.len() {
            let last = *order.last().expect("nonempty");
            let next = vs
                .iter()
                .copied()
                .filter(|&u| graph.has_edge(last, u) && !order.contains(&u))
                .min()?;
            order.push(next);
        }
        ("cycle", order, graphical::fig5(vs.len(), 1).ok()?)
    } else {
        return None;
    };
    let induced = graph.induced(&order);
    if induced != figure.graph {
        return None;
    }
    let (a, b, c) = figure.hull_sizes();
    Some(Obstruction {
        kind: kind.into(),
        vertices: order.iter().map(|v| v + 1).collect(),
        sizes: [a, b, c],
    })
}

#[derive(Serialize)]
struct GraphicalReport {
    vertices: usize,
    edges: usize,
    orientations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<Obstruction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<HullReport>,
}

fn graphical(args: &GraphicalArgs) -> Result<Outcome> {
    let graph = SimpleGraph::from_file(&args.graph)?;
    let (classify, check) = if args.classify || args.check { (args.classify, args.check) } else { (true, true) };
    let table = OrientationTable::new(&graph);
    let mut lines = Vec::new();
    let mut good = true;
    let mut classification = None;
    let mut obstruction = None;
    if classify {
        let class = graphical::classify_good(&graph);
        good &= class.good;
        lines.push(format!("{}: {}", if class.good { "good" } else { "bad" }, class.reason));
        if !class.good {
            obstruction = find_obstruction(&graph);
            if let Some(o) = &obstruction {
                lines.push(format!("induced {} on {:?} gives hull sizes {:?}", o.kind, o.vertices, o.sizes));
            }
        }
        classification = Some(class);
    }
    let mut sweep = None;
    if check {
        let property = args.property.property(Property::Hull);
        let report = convexity::sweep(&table, Scope::AllTriples, property, "ac(G)");
        good &= report.holds();
        lines.push(hull_summary(&format!("ac(G) with {} orientations", table.len()), &report));
        sweep = Some(report);
    }
    let report = GraphicalReport {
        vertices: graph.n(),
        edges: graph.edges().len(),
        orientations: table.len(),
        classification,
        obstruction,
        check: sweep,
    };
    Ok(Outcome::new(&report, lines.join("\n"), good))
}

fn iso_check(args: &IsoCheckArgs, unsafe_ok: bool) -> Result<Outcome> {
    cap(args.n, 5, "--n", unsafe_ok)?;
    let report = graphical::ac_iso_check(args.n);
    let summary = format!(
        "ac(K_{}) vs Cayley graph of S_{}: {} vertices, {} edges, {}",
        args.n,
        args.n,
        report.vertices,
        report.edges,
        if report.ok { "isomorphic" } else { "NOT isomorphic" }
    );
    Ok(Outcome::new(&report, summary, report.ok))
}

/// Full CLI entry point: parses `args`, runs the command, writes the report
/// and summary, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, format!("{}\n", outcome.json)),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{}", outcome.json).and_then(|_| stdout.flush())
        }
    };
    if let Err(e) = written.filter_broken_pipe() {
        eprintln!("error: {e}");
        return 1;
    }
    eprintln!("{}", outcome.summary);
    outcome.exit_code
}

trait BrokenPipe {
    fn filter_broken_pipe(self) -> io::Result<()>;
}

impl BrokenPipe for io::Result<()> {
    /// A closed pipe downstream (`| head`) is not an error.
    fn filter_broken_pipe(self) -> io::Result<()> {
        match self {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        }
    }
}
