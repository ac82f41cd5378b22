//! `modflow`: compute flow, tension, chromatic, Tutte and Ehrhart
//! polynomials of oriented multigraphs and check their reciprocity laws.
//!
//! Exit status: 0 when every check passes, 1 for usage and parse errors,
//! 2 when a check fails, 3 when a computation would exceed a cap.

use clap::{Args, Parser, Subcommand, ValueEnum};
use modflow::checks::{run_check, CheckKind, IdentityCheck};
use modflow::corpus::{exhaustive, random, run_corpus};
use modflow::flows::flow_polynomial;
use modflow::format::parse_graph;
use modflow::geometry::{
    count_fiber_points_box_scan, ehrhart_macdonald_sides, ehrhart_polynomial, feasible_b_set, indegree_map,
    inside_out_flow_count, inside_out_tension_count, FeasibleRhs, Openness,
};
use modflow::report::RunReport;
use modflow::tensions::{chromatic_polynomial, tension_polynomial, validate_forest};
use modflow::tutte::{tutte_corank_nullity, tutte_polynomial};
use modflow::{Caps, EdgeId, EdgeSet, Method, OrientedMultigraph, Polynomial, Rational};
use std::process::ExitCode;
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: modflow::Error },
    #[error("{0}")]
    Cap(String),
    #[error(transparent)]
    Library(modflow::Error),
}

impl From<modflow::Error> for CliError {
    fn from(e: modflow::Error) -> Self {
        match e {
            modflow::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Library(other),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Cap(_) => 3,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "modflow", version, about = "Exact modular flow, tension and Tutte polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Print the report as a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest edge count for which 2^|E| subset scans are allowed.
    #[arg(long, global = true, default_value_t = 24)]
    cap_subsets: u32,
    /// Largest number of residue vectors a single scan may visit.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    cap_assignments: u64,
    /// Largest modulus accepted for --k and --l.
    #[arg(long, global = true, default_value_t = 6)]
    cap_modulus: u32,
}

impl GlobalOpts {
    fn caps(&self) -> Caps {
        Caps {
            max_subset_edges: self.cap_subsets,
            max_assignments: self.cap_assignments,
        }
    }

    fn modulus(&self, flag: &str, value: u32) -> CliResult<u32> {
        if value > self.cap_modulus {
            return Err(CliError::Cap(format!(
                "--{flag} {value} exceeds the modulus cap {}",
                self.cap_modulus
            )));
        }
        Ok(value)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a polynomial of a graph file.
    Poly(PolyArgs),
    /// Check one identity on a graph file.
    Check(CheckArgs),
    /// Lattice-point data: feasible right-hand sides, in-degree map, inside-out counts.
    Geom(GeomArgs),
    /// Run one identity over every small graph and a seeded random family.
    Corpus(CorpusArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Flow,
    Tension,
    Chromatic,
    Tutte,
    Ehrhart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Count at enough moduli and interpolate (corank-nullity expansion for tutte).
    Enumerate,
    DeletionContraction,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Enumerate => Method::Enumerate,
            MethodArg::DeletionContraction => Method::DeletionContraction,
        }
    }
}

#[derive(Debug, Args)]
struct PolyArgs {
    which: PolyKind,
    file: String,
    #[arg(long, value_enum, default_value_t = MethodArg::DeletionContraction)]
    method: MethodArg,
    /// Spanning forest as comma-separated edge identities (flow and tension).
    #[arg(long)]
    forest: Option<String>,
    /// Right-hand side as comma-separated integers, e.g. `-1,1` (ehrhart only).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Also compute by an independent route and report agreement.
    #[arg(long)]
    verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    FlowReciprocity,
    TensionReciprocity,
    Stanley,
    TutteTriples,
    Convolution,
    Reiner,
    EhrhartMacdonald,
    AppendixRecursion,
}

impl From<CheckArg> for CheckKind {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::FlowReciprocity => CheckKind::FlowReciprocity,
            CheckArg::TensionReciprocity => CheckKind::TensionReciprocity,
            CheckArg::Stanley => CheckKind::Stanley,
            CheckArg::TutteTriples => CheckKind::TutteTriples,
            CheckArg::Convolution => CheckKind::Convolution,
            CheckArg::Reiner => CheckKind::Reiner,
            CheckArg::EhrhartMacdonald => CheckKind::EhrhartMacdonald,
            CheckArg::AppendixRecursion => CheckKind::AppendixRecursion,
        }
    }
}

#[derive(Debug, Args)]
struct CheckArgs {
    which: CheckArg,
    file: String,
    /// Flow modulus.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    /// Tension modulus (number of colors).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    l: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeomKind {
    FeasibleB,
    IndegreeMap,
    InsideOut,
}

#[derive(Debug, Args)]
struct GeomArgs {
    which: GeomKind,
    file: String,
    /// Modulus for inside-out counts; without it, 1 through 4.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: Option<u32>,
    /// Spanning forest as comma-separated edge identities (inside-out only).
    #[arg(long)]
    forest: Option<String>,
}

#[derive(Debug, Args)]
struct CorpusArgs {
    which: CheckArg,
    /// Exhaustive family: largest vertex count.
    #[arg(long, default_value_t = 3)]
    max_vertices: u32,
    /// Exhaustive and random families: largest edge count.
    #[arg(long, default_value_t = 4)]
    max_edges: usize,
    /// Seed of the random family.
    #[arg(long, default_value_t = 20240611)]
    seed: u64,
    /// Size of the random family.
    #[arg(long, default_value_t = 50)]
    random: usize,
    /// Single flow modulus; without it, 1 through 3.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: Option<u32>,
    /// Single tension modulus; without it, 1 through 3.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    l: Option<u32>,
    /// Largest --max-vertices accepted.
    #[arg(long, default_value_t = 4)]
    cap_vertices: u32,
    /// Largest --max-edges accepted.
    #[arg(long, default_value_t = 6)]
    cap_edges: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.global.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(if report.passed() { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("modflow: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> CliResult<RunReport> {
    match &cli.command {
        Command::Poly(args) => cmd_poly(args, &cli.global),
        Command::Check(args) => cmd_check(args, &cli.global),
        Command::Geom(args) => cmd_geom(args, &cli.global),
        Command::Corpus(args) => cmd_corpus(args, &cli.global),
    }
}

fn read_graph(path: &str) -> CliResult<OrientedMultigraph> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.to_string(),
        source,
    })
}

fn parse_integers(flag: &str, text: &str) -> CliResult<Vec<i64>> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("--{flag}: expected an integer, found `{}`", s.trim())))
        })
        .collect()
}

fn parse_forest(g: &OrientedMultigraph, text: &str) -> CliResult<EdgeSet> {
    let forest = parse_integers("forest", text)?
        .into_iter()
        .map(|x| {
            u32::try_from(x)
                .map(EdgeId)
                .map_err(|_| CliError::Usage(format!("--forest: `{x}` is not an edge identity")))
        })
        .collect::<CliResult<EdgeSet>>()?;
    g.check_edges(&forest)?;
    validate_forest(g, &forest)?;
    Ok(forest)
}

fn vector(values: &[i64]) -> String {
    FeasibleRhs(values.to_vec()).to_string()
}

fn cmd_poly(args: &PolyArgs, opts: &GlobalOpts) -> CliResult<RunReport> {
    let g = read_graph(&args.file)?;
    let caps = opts.caps();
    if args.b.is_some() && args.which != PolyKind::Ehrhart {
        return Err(CliError::Usage("--b is only accepted by `poly ehrhart`".into()));
    }
    if args.forest.is_some() && !matches!(args.which, PolyKind::Flow | PolyKind::Tension) {
        return Err(CliError::Usage("--forest is only accepted by `poly flow` and `poly tension`".into()));
    }
    let forest = args.forest.as_deref().map(|f| parse_forest(&g, f)).transpose()?;
    let method = Method::from(args.method);
    let mut report = RunReport::new(format!("poly {}", args.which.name()), Some(&g));
    if args.which != PolyKind::Ehrhart {
        report.result("method", method_label(args.which, method));
    }
    let other = match method {
        Method::Enumerate => Method::DeletionContraction,
        Method::DeletionContraction => Method::Enumerate,
    };

    match args.which {
        PolyKind::Flow | PolyKind::Tension => {
            let flow = args.which == PolyKind::Flow;
            let (name, var) = if flow { ("flow", "k") } else { ("tension", "l") };
            let compute = |m| {
                if flow {
                    flow_polynomial(&g, m, &caps)
                } else {
                    tension_polynomial(&g, m, &caps)
                }
            };
            let p = compute(method)?;
            report.result(name, p.render(var));
            if args.verify {
                let q = compute(other)?;
                report.check(IdentityCheck::new(
                    format!("{name} {} = {}", method.name(), other.name()),
                    p.render(var),
                    q.render(var),
                ));
                for k in 1..=opts.cap_modulus.min(4) {
                    let count = if flow {
                        inside_out_flow_count(&g, forest.as_ref(), k, &caps)?
                    } else {
                        inside_out_tension_count(&g, forest.as_ref(), k, &caps)?
                    };
                    report.check(IdentityCheck::new(
                        format!("{name} inside-out {var}={k}"),
                        count,
                        p.eval_i64(k.into()),
                    ));
                }
            }
        }
        PolyKind::Chromatic => {
            let chi = chromatic(&g, method, &caps)?;
            report.result("chromatic", chi.render("l"));
            if args.verify {
                let other_chi = chromatic(&g, other, &caps)?;
                report.check(IdentityCheck::new(
                    format!("chromatic {} = {}", method.name(), other.name()),
                    chi.render("l"),
                    other_chi.render("l"),
                ));
            }
        }
        PolyKind::Tutte => {
            let compute = |m| match m {
                Method::DeletionContraction => Ok(tutte_polynomial(&g)),
                Method::Enumerate => tutte_corank_nullity(&g, &caps),
            };
            let t = compute(method)?;
            report.result("tutte", t.render());
            if args.verify {
                report.check(IdentityCheck::new(
                    format!("tutte {} = {}", method_label(PolyKind::Tutte, method), method_label(PolyKind::Tutte, other)),
                    t.render(),
                    compute(other)?.render(),
                ));
            }
        }
        PolyKind::Ehrhart => {
            let bs = match &args.b {
                Some(text) => vec![FeasibleRhs(parse_integers("b", text)?)],
                None => feasible_b_set(&g, &caps)?,
            };
            if bs.is_empty() {
                report.result("feasible-b", "none");
            }
            for b in &bs {
                let ehr = ehrhart_polynomial(&g, b, &caps)?;
                report.result(format!("ehrhart b={b}"), ehr.render("k"));
                if args.verify {
                    verify_ehrhart(&g, b, &ehr, opts, &mut report)?;
                }
            }
        }
    }
    Ok(report)
}

fn method_label(which: PolyKind, method: Method) -> &'static str {
    match (which, method) {
        (PolyKind::Tutte, Method::Enumerate) => "corank-nullity",
        _ => method.name(),
    }
}

/// `l^c` times the tension polynomial when enumerating; the recursion otherwise.
fn chromatic(g: &OrientedMultigraph, method: Method, caps: &Caps) -> CliResult<Polynomial<Rational>> {
    Ok(match method {
        Method::DeletionContraction => chromatic_polynomial(g),
        Method::Enumerate => {
            let tau = tension_polynomial(g, Method::Enumerate, caps)?;
            let lc = Polynomial::monomial(Rational::from_integer(1.into()), g.component_count());
            &lc * &tau
        }
    })
}

fn verify_ehrhart(
    g: &OrientedMultigraph,
    b: &FeasibleRhs,
    ehr: &Polynomial<Rational>,
    opts: &GlobalOpts,
    report: &mut RunReport,
) -> CliResult<()> {
    let caps = opts.caps();
    let top = (g.cyclotomic_number() as u32 + 1).min(opts.cap_modulus);
    for k in 0..=top {
        let scanned = count_fiber_points_box_scan(g, b, k, Openness::Closed, &caps)?;
        report.check(IdentityCheck::new(
            format!("ehrhart box-scan b={b} k={k}"),
            scanned,
            ehr.eval_i64(k.into()),
        ));
    }
    for k in 1..=top.max(1) {
        let (open, reflected) = ehrhart_macdonald_sides(g, b, k, &caps)?;
        report.check(IdentityCheck::new(format!("ehrhart-macdonald b={b} k={k}"), open, reflected));
    }
    Ok(())
}

fn cmd_check(args: &CheckArgs, opts: &GlobalOpts) -> CliResult<RunReport> {
    let g = read_graph(&args.file)?;
    let k = opts.modulus("k", args.k)?;
    let l = opts.modulus("l", args.l)?;
    let kind = CheckKind::from(args.which);
    let mut report = RunReport::new(format!("check {kind}"), Some(&g));
    for check in run_check(&g, kind, k, l, &opts.caps())? {
        report.check(check);
    }
    Ok(report)
}

fn cmd_geom(args: &GeomArgs, opts: &GlobalOpts) -> CliResult<RunReport> {
    let g = read_graph(&args.file)?;
    let caps = opts.caps();
    if args.which != GeomKind::InsideOut && (args.k.is_some() || args.forest.is_some()) {
        return Err(CliError::Usage("--k and --forest are only accepted by `geom inside-out`".into()));
    }
    let mut report = RunReport::new(format!("geom {}", args.which.name()), Some(&g));
    match args.which {
        GeomKind::FeasibleB => {
            let bs = feasible_b_set(&g, &caps)?;
            report.result("count", bs.len());
            for b in bs {
                report.result("b", b);
            }
        }
        GeomKind::IndegreeMap => {
            let map = indegree_map(&g, &caps)?;
            report.result("count", map.len());
            for (b, indegree) in map {
                report.result(format!("b={b}"), format!("indegree={}", vector(&indegree)));
            }
        }
        GeomKind::InsideOut => {
            let forest = args.forest.as_deref().map(|f| parse_forest(&g, f)).transpose()?;
            let ks: Vec<u32> = match args.k {
                Some(k) => vec![opts.modulus("k", k)?],
                None => (1..=opts.cap_modulus.min(4)).collect(),
            };
            for k in ks {
                report.result(
                    format!("flows k={k}"),
                    inside_out_flow_count(&g, forest.as_ref(), k, &caps)?,
                );
                report.result(
                    format!("tensions k={k}"),
                    inside_out_tension_count(&g, forest.as_ref(), k, &caps)?,
                );
            }
        }
    }
    Ok(report)
}

fn cmd_corpus(args: &CorpusArgs, opts: &GlobalOpts) -> CliResult<RunReport> {
    if args.max_vertices > args.cap_vertices {
        return Err(CliError::Cap(format!(
            "--max-vertices {} exceeds the cap {}",
            args.max_vertices, args.cap_vertices
        )));
    }
    if args.max_edges > args.cap_edges {
        return Err(CliError::Cap(format!(
            "--max-edges {} exceeds the cap {}",
            args.max_edges, args.cap_edges
        )));
    }
    let kind = CheckKind::from(args.which);
    let (uses_k, uses_l) = kind.uses();
    let range = |fixed: Option<u32>, flag: &str, used: bool| -> CliResult<Vec<u32>> {
        match (fixed, used) {
            (Some(v), _) => Ok(vec![opts.modulus(flag, v)?]),
            (None, true) => Ok((1..=opts.cap_modulus.min(3)).collect()),
            (None, false) => Ok(vec![1]),
        }
    };
    let ks = range(args.k, "k", uses_k)?;
    let ls = range(args.l, "l", uses_l)?;
    let moduli: Vec<(u32, u32)> = ls.iter().flat_map(|&l| ks.iter().map(move |&k| (l, k))).collect();

    let mut graphs = exhaustive(args.max_vertices, args.max_edges);
    let exhaustive_count = graphs.len();
    graphs.extend(random(args.seed, args.random, args.max_vertices.max(1), args.max_edges));
    let outcome = run_corpus(&graphs, kind, &moduli, &opts.caps())?;

    let mut report = RunReport::new(format!("corpus {kind}"), None);
    report.result("exhaustive", format!("max-vertices={} max-edges={}", args.max_vertices, args.max_edges));
    report.result("random", format!("seed={} count={}", args.seed, args.random));
    let render = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    if uses_k {
        report.result("k", render(&ks));
    }
    if uses_l {
        report.result("l", render(&ls));
    }
    report.result("graphs", format!("{} ({exhaustive_count} exhaustive)", outcome.graphs));
    report.result("checks", outcome.checks);
    report.result("passed", outcome.passed);
    report.check(IdentityCheck::new(format!("corpus {kind} passed"), outcome.passed, outcome.checks));
    if let Some((graph, check)) = outcome.first_failure {
        report.result("first-failure", graph.trim_end().replace('\n', "; "));
        report.check(check);
    }
    Ok(report)
}

trait Named {
    fn name(self) -> String;
}

impl<T: ValueEnum> Named for T {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}
