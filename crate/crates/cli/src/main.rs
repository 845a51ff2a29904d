//! Command-line front end: load a digraph from an edge list or a built-in
//! fixture, inspect it, build short-move graphs, chain bases, homology
//! summaries and integral cochain structure, or replay the verification
//! suite.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or input errors. All reports are deterministic; repeated runs produce
//! byte-identical output.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use pathhom::chain::{homology_summary, omega_class_basis, omega_general, HomologySummary};
use pathhom::cochain::{cochain_structure_classes, cochain_structure_snf};
use pathhom::digraph::Digraph;
use pathhom::field::{FieldDescriptor, PrimeField, Rationals};
use pathhom::fixtures::{builtin_fixture, FIXTURE_NAMES};
use pathhom::random::CorpusConfig;
use pathhom::report::{BasisReport, CochainLevelReport, InfoReport, SmovesReport, VerifyReport};
use pathhom::smoves::{build_smoves, classify_components, export_dot};
use pathhom::verify;

/// Hard ceiling for automatically chosen level ranges.
const LEVEL_CAP: usize = 16;

#[derive(Parser)]
#[command(
    name = "pathhom",
    version,
    about = "Path chain complexes, path homology and cochain torsion of finite digraphs, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex and arrow counts, the distance-two pair census and the
    /// multisquare check
    Info(InfoArgs),
    /// Short-move graphs per level with their class census
    Smoves(SmovesArgs),
    /// An explicit basis of the chain space at one level
    Basis(BasisArgs),
    /// Chain dimensions, path homology and Euler characteristics per field
    Homology(HomologyArgs),
    /// Integral structure of the cochain quotient via Smith normal form
    Cochain(CochainArgs),
    /// Replay the built-in verification suite; nonzero exit on any failure
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file, or `fixture:NAME` with NAME one of the built-ins
    #[arg(short, long)]
    input: String,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct InfoArgs {
    #[command(flatten)]
    common: InputArgs,
}

#[derive(Args)]
struct SmovesArgs {
    #[command(flatten)]
    common: InputArgs,
    /// Level, or the lower end of a level range
    #[arg(short, long)]
    n: usize,
    /// Upper end of the level range (defaults to --n)
    #[arg(long)]
    n_max: Option<usize>,
    /// Write the short-move graph in Graphviz format (single level only)
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct BasisArgs {
    #[command(flatten)]
    common: InputArgs,
    #[arg(short, long)]
    n: usize,
    /// Coefficient field: Q or F<p> (repeatable)
    #[arg(long = "field", default_values = ["Q"])]
    fields: Vec<String>,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    common: InputArgs,
    /// Highest level to compute; defaults to the longest path length plus
    /// one, capped at 16
    #[arg(long)]
    n_max: Option<usize>,
    /// Coefficient field: Q or F<p> (repeatable)
    #[arg(long = "field", default_values = ["Q", "F2"])]
    fields: Vec<String>,
}

#[derive(Args)]
struct CochainArgs {
    #[command(flatten)]
    common: InputArgs,
    /// Lowest level to report
    #[arg(short, long, default_value_t = 0)]
    n: usize,
    /// Highest level to report; defaults to the longest path length,
    /// capped at 16
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of randomized corpus digraphs
    #[arg(long, default_value_t = 200)]
    corpus_size: usize,
    /// Corpus seed
    #[arg(long)]
    seed: Option<u64>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Info(args) => cmd_info(args),
        Command::Smoves(args) => cmd_smoves(args),
        Command::Basis(args) => cmd_basis(args),
        Command::Homology(args) => cmd_homology(args),
        Command::Cochain(args) => cmd_cochain(args),
        Command::VerifyPaper(args) => cmd_verify_paper(args),
    }
}

fn load_digraph(input: &str) -> anyhow::Result<Digraph> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return builtin_fixture(name)
            .map_err(|e| anyhow!("{e}; available fixtures: {}", FIXTURE_NAMES.join(", ")));
    }
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    Ok(Digraph::parse(&text)?)
}

fn parse_fields(raw: &[String]) -> anyhow::Result<Vec<FieldDescriptor>> {
    if raw.is_empty() {
        return Err(anyhow!("at least one --field is required"));
    }
    raw.iter()
        .map(|s| s.parse::<FieldDescriptor>().map_err(|e| anyhow!(e)))
        .collect()
}

fn default_n_max(g: &Digraph, extra: usize) -> usize {
    g.longest_path_length()
        .map(|l| (l + extra).min(LEVEL_CAP))
        .unwrap_or(LEVEL_CAP)
        .max(1)
}

fn emit<T: serde::Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_info(args: InfoArgs) -> anyhow::Result<ExitCode> {
    let g = load_digraph(&args.common.input)?;
    let report = InfoReport::new(&g);
    if args.common.json {
        emit(&report)?;
    } else {
        let multisquares = if report.multisquare_free {
            "multisquare-free"
        } else {
            "has multisquares"
        };
        println!(
            "{} vertices, {} arrows, {multisquares}",
            report.vertices, report.arrows
        );
        println!(
            "distance-2 pairs: {} thin pairs, {} thick pairs, {} multi pairs",
            report.thin_pairs, report.thick_pairs, report.multi_pairs
        );
        match report.longest_path {
            Some(l) => println!("longest path length: {l}"),
            None => println!("longest path length: unbounded (directed cycle)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_smoves(args: SmovesArgs) -> anyhow::Result<ExitCode> {
    let g = load_digraph(&args.common.input)?;
    let n_max = args.n_max.unwrap_or(args.n);
    if n_max < args.n {
        return Err(anyhow!("--n-max must be at least --n"));
    }
    if args.dot.is_some() && n_max != args.n {
        return Err(anyhow!("--dot requires a single level"));
    }
    let mut reports = Vec::new();
    for level in args.n..=n_max {
        let smg = build_smoves(&g, level);
        let classes = classify_components(&smg, &g);
        if let Some(path) = &args.dot {
            std::fs::write(path, export_dot(&smg, &classes, &g))
                .with_context(|| format!("writing {}", path.display()))?;
        }
        if args.common.json {
            reports.push(SmovesReport::new(&g, &smg, &classes));
        } else {
            let plural = if classes.len() == 1 {
                "class"
            } else {
                "classes"
            };
            println!(
                "level {level}: {} nodes, {} edges, {} {plural}",
                smg.node_count(),
                smg.edge_count(),
                classes.len()
            );
            for (i, class) in classes.iter().enumerate() {
                let mut line = format!(
                    "  class {i}: {} nodes, {}",
                    class.members.len(),
                    if class.is_thin { "thin" } else { "thick" }
                );
                if class.is_bipartite {
                    let (plus, minus) = class.parts.as_ref().expect("bipartite parts");
                    write!(line, ", bipartite ({}+{})", plus.len(), minus.len())?;
                } else {
                    let witness = class.odd_cycle_witness.as_ref().expect("odd cycle");
                    write!(line, ", NON-bipartite (odd cycle length {})", witness.len())?;
                }
                println!("{line}");
            }
        }
    }
    if args.common.json {
        emit(&reports)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn basis_report(g: &Digraph, fd: FieldDescriptor, n: usize) -> anyhow::Result<BasisReport> {
    // The class basis is the preferred presentation; it only exists on
    // multisquare-free digraphs, so fall back to the kernel basis.
    if g.is_multisquare_free() {
        let classes = classify_components(&build_smoves(g, n), g);
        let report = match fd {
            FieldDescriptor::Rational => BasisReport::new(
                g,
                &Rationals,
                &omega_class_basis(g, n, &Rationals, &classes)?,
            ),
            FieldDescriptor::Prime(p) => {
                let f = PrimeField::new(p);
                BasisReport::new(g, &f, &omega_class_basis(g, n, &f, &classes)?)
            }
        };
        Ok(report)
    } else {
        let report = match fd {
            FieldDescriptor::Rational => {
                BasisReport::new(g, &Rationals, &omega_general(g, n, &Rationals))
            }
            FieldDescriptor::Prime(p) => {
                let f = PrimeField::new(p);
                BasisReport::new(g, &f, &omega_general(g, n, &f))
            }
        };
        Ok(report)
    }
}

fn cmd_basis(args: BasisArgs) -> anyhow::Result<ExitCode> {
    let g = load_digraph(&args.common.input)?;
    let fields = parse_fields(&args.fields)?;
    let mut reports = Vec::new();
    for fd in fields {
        let report = basis_report(&g, fd, args.n)?;
        if args.common.json {
            reports.push(report);
        } else {
            println!(
                "level {} over {} ({:?}): dimension {}",
                report.level, report.field, report.method, report.dimension
            );
            for (i, vector) in report.vectors.iter().enumerate() {
                let mut line = format!("  [{i}]");
                for term in vector {
                    let coeff = term.coeff.as_str();
                    if let Some(rest) = coeff.strip_prefix('-') {
                        if rest == "1" {
                            write!(line, " - ({})", term.path)?;
                        } else {
                            write!(line, " - {rest}*({})", term.path)?;
                        }
                    } else if coeff == "1" {
                        write!(line, " + ({})", term.path)?;
                    } else {
                        write!(line, " + {coeff}*({})", term.path)?;
                    }
                }
                println!("{line}");
            }
        }
    }
    if args.common.json {
        emit(&reports)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn summary_for(g: &Digraph, fd: FieldDescriptor, n_max: usize) -> HomologySummary {
    match fd {
        FieldDescriptor::Rational => homology_summary(g, &Rationals, n_max),
        FieldDescriptor::Prime(p) => homology_summary(g, &PrimeField::new(p), n_max),
    }
}

fn cmd_homology(args: HomologyArgs) -> anyhow::Result<ExitCode> {
    let g = load_digraph(&args.common.input)?;
    let fields = parse_fields(&args.fields)?;
    let n_max = args.n_max.unwrap_or_else(|| default_n_max(&g, 1));
    let summaries: Vec<HomologySummary> = fields
        .into_iter()
        .map(|fd| summary_for(&g, fd, n_max))
        .collect();
    if args.common.json {
        emit(&summaries)?;
    } else {
        for s in &summaries {
            println!("field {}:", s.field);
            println!("  omega dims: {:?}", s.omega_dims);
            println!("  ph dims:    {:?}", s.ph_dims);
            match s.euler {
                Some(e) => println!("  euler characteristic: {e}"),
                None => {
                    println!("  euler characteristic: undefined (not bounded by level {n_max})")
                }
            }
            match s.method_agreement {
                Some(true) => println!("  methods agree: yes"),
                Some(false) => println!("  methods agree: NO"),
                None => println!("  methods agree: n/a (multisquares present)"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cochain(args: CochainArgs) -> anyhow::Result<ExitCode> {
    let g = load_digraph(&args.common.input)?;
    let n_max = args.n_max.unwrap_or_else(|| default_n_max(&g, 0));
    if n_max < args.n {
        return Err(anyhow!("--n-max must be at least --n"));
    }
    let class_data = g.is_multisquare_free();
    let mut reports = Vec::new();
    for level in args.n..=n_max {
        let by_snf = cochain_structure_snf(&g, level);
        let methods_agree = if class_data {
            let classes = classify_components(&build_smoves(&g, level), &g);
            let by_classes = cochain_structure_classes(&g, level, &classes)?;
            Some(by_snf.free_rank == by_classes.free_rank && by_snf.torsion == by_classes.torsion)
        } else {
            None
        };
        if args.common.json {
            reports.push(CochainLevelReport::new(&by_snf, methods_agree));
        } else {
            let mut line = format!("level {level}: Z-structure: ");
            if by_snf.free_rank > 0 {
                write!(line, "Z^{}", by_snf.free_rank)?;
            }
            if !by_snf.torsion.is_empty() {
                if by_snf.free_rank > 0 {
                    line.push_str(" + ");
                }
                let parts: Vec<String> = by_snf.torsion.iter().map(|t| format!("Z/{t}Z")).collect();
                write!(line, "{} (torsion!)", parts.join(" + "))?;
            } else if by_snf.free_rank == 0 {
                line.push('0');
            }
            if by_snf.torsion.is_empty() {
                line.push_str(", torsion-free");
            }
            match methods_agree {
                Some(true) => line.push_str("  [snf and class methods agree]"),
                Some(false) => line.push_str("  [METHOD DISAGREEMENT]"),
                None => {}
            }
            println!("{line}");
        }
    }
    if args.common.json {
        emit(&reports)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_paper(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let config = CorpusConfig {
        count: args.corpus_size,
        seed: args.seed.unwrap_or_else(|| CorpusConfig::default().seed),
        ..CorpusConfig::default()
    };
    let corpus = pathhom::random::multisquare_free_corpus(&config);
    let report: VerifyReport = verify::run_all(&corpus);
    if args.json {
        emit(&report)?;
    } else {
        for check in &report.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            println!("[{status}] {}: {}", check.name, check.details);
        }
        if report.passed {
            println!("all {} checks passed", report.checks.len());
        } else {
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            println!("{failed} of {} checks FAILED", report.checks.len());
        }
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
