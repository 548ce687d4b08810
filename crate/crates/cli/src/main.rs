//! `hypercolor`: command-line front end.
//!
//! Exit codes: 0 success, 1 violation or infeasible, 2 usage or input error,
//! 3 inconclusive (search budget exhausted).

mod corpus;

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use hypercolor::coloring::{exact_chromatic_index, greedy_color, ColoringError};
use hypercolor::conjectures::{
    brooks_exception, color_by_rank_induction, critical_check, deficit_excess, extend_coloring,
    h2_degree_fits_palette, h3_clique_degree_dominates, h3_is_regular, split_h3_h2,
    verify_conjectures, BrooksException, ConjectureError, ConjectureId, ExceptionClause,
    ExtensionReport, Status,
};
use hypercolor::constructions::{
    affine_plane, bibd_dual, plane_with_copies, projective_plane, ConstructionSpec,
};
use hypercolor::design::{is_bibd, is_projective_design, DesignParams};
use hypercolor::enumeration::{canonical_form, enumerate, EnumSpec, MAX_CANON_VERTICES};
use hypercolor::io::{coloring_to_text, parse_coloring_text, parse_hyp, to_hyp};
use hypercolor::random::random_hypergraph;
use hypercolor::{count_triangles, stats, Coloring, Hypergraph, StatsProfile, DEFAULT_BUDGET};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hypercolor",
    version,
    about = "Edge coloring of small hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, rank, clique degree and clique rank profile.
    Stats { file: String },
    /// Color the edges; prints {q, colors, nodes_expanded, status}.
    #[command(group(ArgGroup::new("method").args(["exact", "greedy", "induction"])))]
    Color {
        file: String,
        /// Minimum number of colors (default).
        #[arg(long)]
        exact: bool,
        /// First-fit in edge order.
        #[arg(long)]
        greedy: bool,
        /// Peel low-rank edges, solve the rest exactly, color within n.
        #[arg(long)]
        induction: bool,
        /// Print `edge color` lines instead of JSON.
        #[arg(long)]
        text: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Transpose: vertices and edges swap roles.
    Dual { file: String },
    /// Exit 0 if every two edges share at most one vertex, 1 otherwise.
    CheckLinear { file: String },
    /// Build plane:p, affine:p, thm13ii:r,delta, dual:<file> or random:n,m,lo,hi.
    Construct {
        spec: String,
        /// Seed for random:.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Stream one hypergraph per isomorphism class on exactly n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Allow edges meeting in two or more vertices.
        #[arg(long)]
        non_linear: bool,
        /// Require every vertex to lie on an edge.
        #[arg(long)]
        no_isolated: bool,
        #[arg(long)]
        count_only: bool,
        /// Worker threads (0: all cores).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check chromatic-index bounds over a corpus; one JSON line per
    /// instance and bound.
    Verify {
        /// Comma-separated ids, e.g. C1,C2,C5.
        #[arg(long, value_delimiter = ',', default_value = "C1,C2,C3,C4,C5")]
        conjectures: Vec<ConjectureId>,
        /// `n<=K[,rank<=P][,deg<=D]` or a file of .hyp records.
        #[arg(long)]
        corpus: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads (0: all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Necessary conditions for a minimal counterexample to the k + 1 bound.
    Critical {
        file: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Extend an n-coloring of the rank >= 3 edges to the rank-2 edges.
    Extend {
        file: String,
        /// `edge color` lines indexed over the rank >= 3 edges in file order.
        /// Without it the rank >= 3 layer is colored exactly.
        #[arg(long)]
        coloring: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Triangle counts (common point / pairwise) with each edge as a side.
    Triangles {
        file: String,
        #[arg(long)]
        edge: Option<usize>,
    },
}

/// Ordered so that a violation outranks an abandoned search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Outcome {
    Ok,
    Inconclusive,
    Violation,
}

impl Outcome {
    fn code(self) -> ExitCode {
        match self {
            Outcome::Ok => ExitCode::SUCCESS,
            Outcome::Violation => ExitCode::from(1),
            Outcome::Inconclusive => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(outcome), Ok(())) => outcome.code(),
        (Err(e), _) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load(path: &str) -> Result<Hypergraph> {
    let h = parse_hyp(&read_input(path)?).with_context(|| format!("parsing {path}"))?;
    let report = h.validate();
    if !report.rank_one_edges.is_empty() {
        eprintln!("warning: rank-1 edges at {:?}", report.rank_one_edges);
    }
    if !report.empty_edges.is_empty() {
        eprintln!("warning: empty edges at {:?}", report.empty_edges);
    }
    if !report.duplicate_edges.is_empty() {
        eprintln!("warning: duplicate edges {:?}", report.duplicate_edges);
    }
    Ok(h)
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(f))
}

fn run(command: Command, out: &mut impl Write) -> Result<Outcome> {
    match command {
        Command::Stats { file } => cmd_stats(&load(&file)?, out),
        Command::Color {
            file,
            greedy,
            induction,
            text,
            budget,
            ..
        } => cmd_color(&load(&file)?, greedy, induction, text, budget, out),
        Command::Dual { file } => {
            write!(out, "{}", to_hyp(&load(&file)?.dual()))?;
            Ok(Outcome::Ok)
        }
        Command::CheckLinear { file } => cmd_check_linear(&load(&file)?, out),
        Command::Construct { spec, seed } => {
            write!(out, "{}", to_hyp(&construct(&spec, seed)?))?;
            Ok(Outcome::Ok)
        }
        Command::Enumerate {
            n,
            max_rank,
            max_degree,
            non_linear,
            no_isolated,
            count_only,
            jobs,
        } => {
            let mut spec = EnumSpec::new(n)
                .linear(!non_linear)
                .isolated(!no_isolated)
                .max_rank(max_rank.unwrap_or(n.max(2)));
            if let Some(d) = max_degree {
                spec = spec.max_degree(d);
            }
            cmd_enumerate(&spec, count_only, jobs, out)
        }
        Command::Verify {
            conjectures,
            corpus,
            budget,
            jobs,
        } => cmd_verify(&conjectures, &corpus, budget, jobs, out),
        Command::Critical { file, budget } => cmd_critical(&load(&file)?, budget, out),
        Command::Extend {
            file,
            coloring,
            budget,
        } => cmd_extend(&load(&file)?, coloring.as_deref(), budget, out),
        Command::Triangles { file, edge } => cmd_triangles(&load(&file)?, edge, out),
    }
}

#[derive(Serialize)]
struct StatsRecord {
    #[serde(flatten)]
    profile: StatsProfile,
    linear: bool,
    uniform: bool,
    regular: bool,
    bibd: Option<DesignParams>,
    projective_design: Option<DesignParams>,
    line_graph_exception: BrooksException,
}

fn cmd_stats(h: &Hypergraph, out: &mut impl Write) -> Result<Outcome> {
    let record = StatsRecord {
        profile: stats(h),
        linear: h.is_linear(),
        uniform: h.is_uniform(),
        regular: h.is_regular(),
        bibd: is_bibd(h),
        projective_design: is_projective_design(h),
        line_graph_exception: brooks_exception(h),
    };
    json_line(out, &record)?;
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct ColorRecord {
    q: Option<usize>,
    colors: Option<Vec<usize>>,
    nodes_expanded: Option<u64>,
    status: &'static str,
}

fn cmd_color(
    h: &Hypergraph,
    greedy: bool,
    induction: bool,
    text: bool,
    budget: u64,
    out: &mut impl Write,
) -> Result<Outcome> {
    let (record, outcome) = if greedy {
        let c = greedy_color(h);
        let record = ColorRecord {
            q: Some(c.colors_used()),
            colors: Some(c.colors),
            nodes_expanded: None,
            status: "greedy",
        };
        (record, Outcome::Ok)
    } else if induction {
        match color_by_rank_induction(h, budget) {
            Ok(r) => match r.coloring {
                Some(c) => (
                    ColorRecord {
                        q: Some(c.colors_used()),
                        colors: Some(c.colors),
                        nodes_expanded: None,
                        status: "within-n",
                    },
                    Outcome::Ok,
                ),
                None => (
                    ColorRecord {
                        q: None,
                        colors: None,
                        nodes_expanded: None,
                        status: "infeasible",
                    },
                    Outcome::Violation,
                ),
            },
            Err(e) => inconclusive(e)?,
        }
    } else {
        match exact_chromatic_index(h, budget) {
            Ok(r) => (
                ColorRecord {
                    q: Some(r.q),
                    colors: Some(r.coloring.colors),
                    nodes_expanded: Some(r.stats.nodes_expanded),
                    status: "optimal",
                },
                Outcome::Ok,
            ),
            Err(e) => inconclusive(e)?,
        }
    };
    match (&record.colors, text) {
        (Some(colors), true) => write!(out, "{}", coloring_to_text(colors))?,
        _ => json_line(out, &record)?,
    }
    Ok(outcome)
}

fn inconclusive(e: ColoringError) -> Result<(ColorRecord, Outcome)> {
    let ColoringError::BudgetExceeded { budget, .. } = e else {
        return Err(e.into());
    };
    eprintln!("{e}");
    let record = ColorRecord {
        q: None,
        colors: None,
        nodes_expanded: Some(budget),
        status: "inconclusive",
    };
    Ok((record, Outcome::Inconclusive))
}

#[derive(Serialize)]
struct LinearRecord {
    linear: bool,
    /// `[e, f, |e ∩ f|]` for every pair sharing two or more vertices.
    offending_pairs: Vec<[usize; 3]>,
}

fn cmd_check_linear(h: &Hypergraph, out: &mut impl Write) -> Result<Outcome> {
    let offending_pairs: Vec<[usize; 3]> = (0..h.m())
        .flat_map(|e| (e + 1..h.m()).map(move |f| (e, f)))
        .filter_map(|(e, f)| {
            let k = h.intersection_len(e, f);
            (k >= 2).then_some([e, f, k])
        })
        .collect();
    let linear = offending_pairs.is_empty();
    json_line(
        out,
        &LinearRecord {
            linear,
            offending_pairs,
        },
    )?;
    Ok(if linear {
        Outcome::Ok
    } else {
        Outcome::Violation
    })
}

fn construct(spec: &str, seed: u64) -> Result<Hypergraph> {
    let h = match spec.parse::<ConstructionSpec>()? {
        ConstructionSpec::ProjectivePlane { order } => projective_plane(order)?,
        ConstructionSpec::AffinePlane { order } => affine_plane(order)?,
        ConstructionSpec::PlaneWithCopies { rank, degree } => plane_with_copies(rank, degree)?,
        ConstructionSpec::Dual { path } => bibd_dual(&load(&path)?)?.0,
        ConstructionSpec::Random {
            n,
            m,
            min_rank,
            max_rank,
        } => random_hypergraph(seed, n, m, min_rank..=max_rank, true)?,
    };
    Ok(h)
}

fn cmd_enumerate(
    spec: &EnumSpec,
    count_only: bool,
    jobs: usize,
    out: &mut impl Write,
) -> Result<Outcome> {
    if jobs == 1 {
        let classes = enumerate(spec)?;
        if count_only {
            writeln!(out, "{}", classes.count())?;
            return Ok(Outcome::Ok);
        }
        for (i, h) in classes.enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            write!(out, "{}", to_hyp(&h))?;
        }
    } else {
        let classes = with_jobs(jobs, || hypercolor::enumeration::enumerate_parallel(spec))??;
        if count_only {
            writeln!(out, "{}", classes.len())?;
            return Ok(Outcome::Ok);
        }
        write!(out, "{}", hypercolor::io::to_hyp_many(&classes))?;
    }
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct VerifyRecord {
    canonical_form: Option<String>,
    id: ConjectureId,
    bound: Option<usize>,
    q: Option<usize>,
    status: Status,
    exception: Option<ExceptionClause>,
}

fn cmd_verify(
    ids: &[ConjectureId],
    corpus: &str,
    budget: u64,
    jobs: usize,
    out: &mut impl Write,
) -> Result<Outcome> {
    if ids.is_empty() {
        bail!("no conjecture ids given");
    }
    let instances = corpus::load(corpus)?;
    let results: Vec<_> = with_jobs(jobs, || {
        instances
            .par_iter()
            .map(|h| {
                let form = (h.n() <= MAX_CANON_VERTICES)
                    .then(|| canonical_form(h).ok())
                    .flatten()
                    .map(|f| f.to_string());
                (form, verify_conjectures(h, ids, budget))
            })
            .collect()
    })?;
    let mut outcome = Outcome::Ok;
    for (form, reports) in results {
        for r in reports {
            outcome = outcome.max(match r.status {
                Status::Violation => Outcome::Violation,
                Status::Inconclusive => Outcome::Inconclusive,
                _ => Outcome::Ok,
            });
            json_line(
                out,
                &VerifyRecord {
                    canonical_form: form.clone(),
                    id: r.id,
                    bound: r.bound,
                    q: r.q,
                    status: r.status,
                    exception: r.exception,
                },
            )?;
        }
    }
    Ok(outcome)
}

fn conjecture_error(e: ConjectureError) -> Result<Outcome> {
    match e {
        ConjectureError::Inconclusive(inner) => {
            eprintln!("inconclusive: {inner}");
            Ok(Outcome::Inconclusive)
        }
        other => Err(other.into()),
    }
}

fn cmd_critical(h: &Hypergraph, budget: u64, out: &mut impl Write) -> Result<Outcome> {
    match critical_check(h, budget) {
        Ok(report) => {
            json_line(out, &report)?;
            Ok(Outcome::Ok)
        }
        Err(e) => conjecture_error(e),
    }
}

#[derive(Serialize)]
struct ExtendRecord {
    #[serde(flatten)]
    report: ExtensionReport,
    h2_degree_fits_palette: bool,
    h3_clique_degree_dominates: bool,
    h3_is_regular: bool,
    excess_covers_deficit: bool,
}

fn cmd_extend(
    h: &Hypergraph,
    coloring: Option<&str>,
    budget: u64,
    out: &mut impl Write,
) -> Result<Outcome> {
    let h3 = split_h3_h2(h)?.h3;
    let base = match coloring {
        Some(path) => {
            let colors = parse_coloring_text(&read_input(path)?, h3.m())
                .with_context(|| format!("parsing {path}"))?;
            Coloring::from_colors(colors)
        }
        None => match exact_chromatic_index(&h3, budget) {
            Ok(r) if r.q <= h.n() => r.coloring,
            Ok(r) => {
                eprintln!("rank >= 3 layer needs {} > n = {} colors", r.q, h.n());
                return Ok(Outcome::Violation);
            }
            Err(e) => return conjecture_error(e.into()),
        },
    };
    let report = extend_coloring(h, &base)?;
    let extended = report.coloring.is_some();
    json_line(
        out,
        &ExtendRecord {
            report,
            h2_degree_fits_palette: h2_degree_fits_palette(h),
            h3_clique_degree_dominates: h3_clique_degree_dominates(h),
            h3_is_regular: h3_is_regular(h),
            excess_covers_deficit: deficit_excess(h).hypothesis_holds,
        },
    )?;
    Ok(if extended {
        Outcome::Ok
    } else {
        Outcome::Violation
    })
}

#[derive(Serialize)]
struct TriangleRecord {
    edge: usize,
    t1: usize,
    t2: usize,
    total: usize,
}

fn cmd_triangles(h: &Hypergraph, edge: Option<usize>, out: &mut impl Write) -> Result<Outcome> {
    let edges: Vec<usize> = match edge {
        Some(e) => vec![e],
        None => (0..h.m()).collect(),
    };
    for e in edges {
        let t = count_triangles(h, e)?;
        json_line(
            out,
            &TriangleRecord {
                edge: e,
                t1: t.t1,
                t2: t.t2,
                total: t.total,
            },
        )?;
    }
    Ok(Outcome::Ok)
}
