//! `apud` — compile monotone NAE3SAT formulas into unit-disk instances on
//! axes-parallel lines, build and verify exact witness placements, run the
//! recognition procedures, and render placements to SVG.
//!
//! Exit codes: 0 success/member, 1 verified negative (not in class, no NAE
//! assignment, invalid realization, pattern absent), 2 inconclusive or
//! budget exhausted, 64 usage/parse errors, 65 rejected input data,
//! 66 unreadable input file.

mod render;

use apud_geometry::rational::parse_rat;
use apud_geometry::{verify_realization, LineConfig, Placement, Rat};
use apud_graph::{find_induced, Graph, PatternKind};
use apud_recognize::{
    apud11_obstructions, apud11_sufficient, apud_gt2_sufficient, is_unit_interval,
    solve_placement_grid_with_jobs, GridOutcome, SearchBudget, Verdict,
};
use apud_reduce::{
    reduce, reduce_skeleton, solve_nae_bruteforce, witness_embedding, Assignment, LayoutProfile,
    NaeFormula, ReduceError, ReductionInstance,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "apud",
    version,
    about = "Unit disk instances on axes-parallel lines: compiler, exact verifier, recognizers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Uig,
    Apud11,
    Gt2,
}

#[derive(Args)]
struct BudgetArgs {
    /// Grid pitch for placement search, as an exact rational
    #[arg(long, default_value = "1/20")]
    step: String,
    /// Half-width of the per-line search box
    #[arg(long, default_value = "4")]
    window: String,
    /// Search-node budget before giving up with an Exhausted outcome
    #[arg(long, default_value_t = 4_000_000_000)]
    max_nodes: u64,
    /// Parallel first-vertex branches for the grid search
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compile a NAE3SAT formula (or a bare skeleton) into an instance bundle
    Reduce {
        /// Formula file: `p nae <n> <m>` header, then one clause per line
        formula: Option<PathBuf>,
        /// Build the formula-independent skeleton for N literals, M clauses
        #[arg(long, num_args = 2, value_names = ["N", "M"], conflicts_with = "formula")]
        skeleton: Option<Vec<usize>>,
        /// Output bundle path (JSON)
        #[arg(short, long)]
        output: PathBuf,
        /// Layout flexibility constant, e.g. 1/10
        #[arg(long)]
        epsilon: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustively decide a NAE3SAT formula
    SolveNae {
        formula: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build and exactly verify a witness placement from an instance bundle
    Witness {
        bundle: PathBuf,
        /// Output placement path (JSON)
        #[arg(short, long)]
        output: PathBuf,
        /// Explicit assignment like TFFT or 1001 (default: brute-force search)
        #[arg(long)]
        assignment: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check a placement against a graph and a line configuration
    Verify {
        graph: PathBuf,
        lines: PathBuf,
        placement: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recognition procedures: uig, apud11 (1 horizontal + 1 vertical), gt2
    Recognize {
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Horizontal line count for gt2 mode
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Vertical line count for gt2 mode
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List induced occurrences of a pattern (c5, star4, sun3, sunlet4, claw, net, diamond)
    FindPattern {
        graph: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render a placement and its lines to SVG
    Render {
        placement: PathBuf,
        lines: PathBuf,
        /// Output SVG path
        #[arg(short, long)]
        output: PathBuf,
        /// Instance bundle providing vertex roles for coloring
        #[arg(long)]
        instance: Option<PathBuf>,
    },
}

struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: 64,
            msg: msg.into(),
        }
    }

    fn data(msg: impl Into<String>) -> Self {
        CliError {
            code: 65,
            msg: msg.into(),
        }
    }

    fn no_input(path: &Path, err: std::io::Error) -> Self {
        CliError {
            code: 66,
            msg: format!("cannot read {}: {}", path.display(), err),
        }
    }
}

impl From<ReduceError> for CliError {
    fn from(e: ReduceError) -> Self {
        match e {
            ReduceError::Parse { .. } => CliError::usage(e.to_string()),
            _ => CliError::data(e.to_string()),
        }
    }
}

impl From<apud_graph::GraphError> for CliError {
    fn from(e: apud_graph::GraphError) -> Self {
        match e {
            apud_graph::GraphError::Parse { .. } => CliError::usage(e.to_string()),
            _ => CliError::data(e.to_string()),
        }
    }
}

impl From<apud_geometry::GeometryError> for CliError {
    fn from(e: apud_geometry::GeometryError) -> Self {
        CliError::data(e.to_string())
    }
}

impl From<apud_recognize::RecognizeError> for CliError {
    fn from(e: apud_recognize::RecognizeError) -> Self {
        CliError::data(e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::no_input(path, e))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes)
        .map_err(|e| CliError::data(format!("cannot write {}: {}", path.display(), e)))
}

/// Graph files may be the `graph <n> <m>` text form or the JSON form.
fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {}", path.display(), e)))
    } else {
        Ok(Graph::from_text(&text)?)
    }
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {}", path.display(), e)))
}

fn parse_rat_arg(s: &str, what: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::usage(format!("bad {}: {}", what, e)))
}

fn budget_from(args: &BudgetArgs) -> Result<(SearchBudget, usize), CliError> {
    Ok((
        SearchBudget {
            step: parse_rat_arg(&args.step, "--step")?,
            window: parse_rat_arg(&args.window, "--window")?,
            max_nodes: args.max_nodes,
        },
        args.jobs.max(1),
    ))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reports --help/--version through the error path.
            if e.use_stderr() {
                eprint!("{}", e);
                return ExitCode::from(64);
            }
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Reduce {
            formula,
            skeleton,
            output,
            epsilon,
            format,
        } => cmd_reduce(formula, skeleton, output, epsilon, format),
        Cmd::SolveNae { formula, format } => cmd_solve_nae(&formula, format),
        Cmd::Witness {
            bundle,
            output,
            assignment,
            format,
        } => cmd_witness(&bundle, &output, assignment, format),
        Cmd::Verify {
            graph,
            lines,
            placement,
            format,
        } => cmd_verify(&graph, &lines, &placement, format),
        Cmd::Recognize {
            graph,
            mode,
            k,
            m,
            budget,
            format,
        } => cmd_recognize(&graph, mode, k, m, &budget, format),
        Cmd::FindPattern {
            graph,
            pattern,
            format,
        } => cmd_find_pattern(&graph, &pattern, format),
        Cmd::Render {
            placement,
            lines,
            output,
            instance,
        } => cmd_render(&placement, &lines, &output, instance.as_deref()),
    }
}

fn profile_from(epsilon: Option<String>) -> Result<LayoutProfile, CliError> {
    match epsilon {
        None => Ok(LayoutProfile::default()),
        Some(e) => Ok(LayoutProfile::with_epsilon(parse_rat_arg(&e, "--epsilon")?)?),
    }
}

fn cmd_reduce(
    formula: Option<PathBuf>,
    skeleton: Option<Vec<usize>>,
    output: PathBuf,
    epsilon: Option<String>,
    format: Format,
) -> Result<u8, CliError> {
    let profile = profile_from(epsilon)?;
    let inst = match (formula, skeleton) {
        (Some(path), None) => {
            let f = NaeFormula::parse(&read_file(&path)?)?;
            reduce(&f, &profile)?
        }
        (None, Some(nm)) => reduce_skeleton(nm[0], nm[1], &profile)?,
        _ => {
            return Err(CliError::usage(
                "reduce needs a formula file or --skeleton N M",
            ))
        }
    };
    let bytes = serde_json::to_vec_pretty(&inst).expect("instance serializes");
    write_file(&output, &bytes)?;
    let summary = json!({
        "n": inst.params.n,
        "m": inst.params.m,
        "vertices": inst.graph.vertex_count(),
        "edges": inst.graph.edge_count(),
        "horizontal_lines": inst.lines.horizontals().len(),
        "vertical_lines": inst.lines.verticals().len(),
        "flags": inst.flag_count(),
        "bundle": output.display().to_string(),
    });
    match format {
        Format::Json => println!("{}", summary),
        Format::Text => println!(
            "reduced n={} m={}: {} vertices, {} edges, {} horizontal lines, {} vertical lines -> {}",
            inst.params.n,
            inst.params.m,
            inst.graph.vertex_count(),
            inst.graph.edge_count(),
            inst.lines.horizontals().len(),
            inst.lines.verticals().len(),
            output.display()
        ),
    }
    Ok(0)
}

fn cmd_solve_nae(path: &Path, format: Format) -> Result<u8, CliError> {
    let f = NaeFormula::parse(&read_file(path)?)?;
    match solve_nae_bruteforce(&f)? {
        Some(a) => {
            match format {
                Format::Json => println!("{}", json!({"satisfiable": true, "assignment": a.to_string()})),
                Format::Text => println!("NAE-satisfiable: {}", a),
            }
            Ok(0)
        }
        None => {
            match format {
                Format::Json => println!("{}", json!({"satisfiable": false})),
                Format::Text => println!("NAE-unsatisfiable"),
            }
            Ok(1)
        }
    }
}

fn cmd_witness(
    bundle: &Path,
    output: &Path,
    assignment: Option<String>,
    format: Format,
) -> Result<u8, CliError> {
    let inst: ReductionInstance = load_json(bundle)?;
    let a = match assignment {
        Some(s) => Assignment::parse(&s)?,
        None => match &inst.params.formula {
            Some(f) => match solve_nae_bruteforce(f)? {
                Some(a) => a,
                None => {
                    match format {
                        Format::Json => println!("{}", json!({"satisfiable": false})),
                        Format::Text => println!("NAE-unsatisfiable"),
                    }
                    return Ok(1);
                }
            },
            None => Assignment::new(vec![true; inst.params.n]),
        },
    };
    let placement = match witness_embedding(&inst, &a) {
        Ok(p) => p,
        Err(ReduceError::NotNaeSatisfying { clause }) => {
            match format {
                Format::Json => {
                    println!("{}", json!({"accepted": false, "violating_clause": clause + 1}))
                }
                Format::Text => println!(
                    "rejected: clause {} has all-equal literals under {}",
                    clause + 1,
                    a
                ),
            }
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let report = verify_realization(&inst.graph, &inst.lines, &placement)?;
    if !report.is_valid() {
        // A generated witness must verify; anything else is an internal bug.
        return Err(CliError {
            code: 70,
            msg: format!("internal: witness failed verification: {}", report.summary()),
        });
    }
    write_file(output, &serde_json::to_vec_pretty(&placement).expect("placement serializes"))?;
    match format {
        Format::Json => println!(
            "{}",
            json!({"accepted": true, "assignment": a.to_string(), "valid": true,
                   "disks": placement.len(), "placement": output.display().to_string()})
        ),
        Format::Text => println!(
            "witness for {}: valid realization of {} disks -> {}",
            a,
            placement.len(),
            output.display()
        ),
    }
    Ok(0)
}

fn cmd_verify(
    graph: &Path,
    lines: &Path,
    placement: &Path,
    format: Format,
) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let cfg: LineConfig = load_json(lines)?;
    let pl: Placement = load_json(placement)?;
    let report = verify_realization(&g, &cfg, &pl)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&report).expect("report serializes")),
        Format::Text => {
            println!("{}", report.summary());
            for v in &report.line_violations {
                println!(
                    "  vertex {} is not on {:?} line {}",
                    v.vertex, v.line.axis, v.line.index
                );
            }
            for (u, v) in &report.missing_edges {
                println!("  missing edge: disks {} and {} do not intersect", u, v);
            }
            for (u, v) in &report.excess_edges {
                println!("  excess edge: disks {} and {} intersect", u, v);
            }
        }
    }
    Ok(if report.is_valid() { 0 } else { 1 })
}

fn print_report(report: &apud_recognize::ObstructionReport, format: Format, extra: &str) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(report).expect("report serializes")
        ),
        Format::Text => {
            println!("verdict: {:?}{}", report.verdict, extra);
            for occ in &report.found {
                println!("  induced {} on {:?}", occ.pattern, occ.vertices);
            }
        }
    }
}

fn cmd_recognize(
    graph: &Path,
    mode: Mode,
    k: usize,
    m: usize,
    budget_args: &BudgetArgs,
    format: Format,
) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    match mode {
        Mode::Uig => {
            let member = is_unit_interval(&g)?;
            match format {
                Format::Json => println!("{}", json!({"mode": "uig", "member": member})),
                Format::Text => println!(
                    "unit interval: {}",
                    if member { "yes" } else { "no (forbidden induced subgraph present)" }
                ),
            }
            Ok(if member { 0 } else { 1 })
        }
        Mode::Apud11 => {
            let obs = apud11_obstructions(&g);
            if obs.verdict == Verdict::NotInClass {
                print_report(&obs, format, " (obstruction found)");
                return Ok(1);
            }
            let suff = apud11_sufficient(&g)?;
            if suff.verdict == Verdict::SufficientMember {
                print_report(&suff, format, " (unit interval after one exceptional copy)");
                return Ok(0);
            }
            // Neither side decides; fall back to the resolution-bounded
            // grid search on one horizontal and one vertical line.
            let (budget, jobs) = budget_from(budget_args)?;
            if g.vertex_count() > 12 {
                print_report(&suff, format, " (too large for grid search)");
                return Ok(2);
            }
            let cross = LineConfig::origin_cross();
            match solve_placement_grid_with_jobs(&g, &cross, &budget, jobs)? {
                GridOutcome::Found { placement, nodes } => {
                    match format {
                        Format::Json => println!(
                            "{}",
                            json!({"verdict": "Member", "nodes": nodes,
                                   "placement": serde_json::to_value(&placement).unwrap()})
                        ),
                        Format::Text => println!(
                            "verdict: Member (grid placement found and verified, {} nodes)",
                            nodes
                        ),
                    }
                    Ok(0)
                }
                GridOutcome::NotFound { nodes } => {
                    match format {
                        Format::Json => println!(
                            "{}",
                            json!({"verdict": "Inconclusive", "grid": "NotFound", "nodes": nodes,
                                   "step": budget_args.step, "window": budget_args.window})
                        ),
                        Format::Text => println!(
                            "verdict: Inconclusive (no grid placement at step {} window {}, {} nodes)",
                            budget_args.step, budget_args.window, nodes
                        ),
                    }
                    Ok(2)
                }
                GridOutcome::Exhausted { nodes } => {
                    match format {
                        Format::Json => println!(
                            "{}",
                            json!({"verdict": "Exhausted", "nodes": nodes})
                        ),
                        Format::Text => {
                            println!("verdict: Exhausted (budget of {} nodes)", budget_args.max_nodes)
                        }
                    }
                    Ok(2)
                }
            }
        }
        Mode::Gt2 => {
            if k < 1 || m < 1 {
                return Err(CliError::usage("gt2 mode needs --k >= 1 and --m >= 1"));
            }
            let rep = apud_gt2_sufficient(&g, k, m)?;
            print_report(&rep, format, "");
            Ok(if rep.verdict == Verdict::SufficientMember {
                0
            } else {
                2
            })
        }
    }
}

fn cmd_find_pattern(graph: &Path, pattern: &str, format: Format) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let kind: PatternKind = pattern.parse().map_err(CliError::usage)?;
    let occs = find_induced(&g, kind)?;
    match format {
        Format::Json => println!(
            "{}",
            json!({"pattern": kind.to_string(), "count": occs.len(), "occurrences": occs})
        ),
        Format::Text => {
            println!("{} induced occurrence(s) of {}", occs.len(), kind);
            for occ in &occs {
                println!("  {:?}", occ.vertices);
            }
        }
    }
    Ok(if occs.is_empty() { 1 } else { 0 })
}

fn cmd_render(
    placement: &Path,
    lines: &Path,
    output: &Path,
    instance: Option<&Path>,
) -> Result<u8, CliError> {
    let pl: Placement = load_json(placement)?;
    let cfg: LineConfig = load_json(lines)?;
    let roles: Option<Vec<apud_reduce::Role>> = match instance {
        Some(path) => {
            let inst: ReductionInstance = load_json(path)?;
            Some(inst.roles)
        }
        None => None,
    };
    let svg = render::render_svg(&pl, &cfg, roles.as_deref());
    write_file(output, svg.as_bytes())?;
    println!("rendered {} disks -> {}", pl.len(), output.display());
    Ok(0)
}
