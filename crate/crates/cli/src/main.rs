//! `ainf`: command-line front end for the Borel, co-Borel, twisted Borel and
//! Tate complexes, the relation checkers and the tree census.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use ainf_core::ainfty::*;
use ainf_core::bar::{borel, coborel, TruncationPolicy};
use ainf_core::f2::{exactness_check, ChainComplex, DegreeRange, NodeStatus};
use ainf_core::library::{example_with, ModuleChoice};
use ainf_core::presentation::{self, Presentation};
use ainf_core::tate::{tate_from_parts, verify_dualizing_bimodule, verify_norm, TateInput};
use ainf_core::trees::{count_by_codim, enumerate_trees, wall_adjacency};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use report::{betti_rows, Check, Range, Report, Status};

#[derive(Parser)]
#[command(name = "ainf", version, about = "Bar/cobar homology of A∞-modules over F2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the relations of a structure, its dual, and the dualizing bimodule.
    Verify(VerifyArgs),
    /// Print the dual presentation.
    Dualize(DualizeArgs),
    /// Homology of the Borel complex B(k, A, M).
    Borel(ComplexArgs),
    /// Homology of the co-Borel complex Ω(k, A*, M).
    Coborel(ComplexArgs),
    /// Homology of the twisted Borel complex.
    TwistedBorel(ComplexArgs),
    /// Homology of the Tate complex, the cone of the norm map.
    Tate(ComplexArgs),
    /// Exactness of the long exact sequence of the norm map.
    LesCheck(ComplexArgs),
    /// Census of rooted ribbon trees with n leaves.
    Trees(TreesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModuleKind {
    Default,
    Trivial,
    Regular,
}

#[derive(Args)]
struct InputArgs {
    /// Built-in example: z2, z3, trivial, exterior1, s3, massey.
    #[arg(long, conflicts_with_all = ["algebra", "module"])]
    example: Option<String>,
    /// Algebra presentation file.
    #[arg(long, conflicts_with = "module")]
    algebra: Option<PathBuf>,
    /// Module presentation file; its algebra comes from the file.
    #[arg(long)]
    module: Option<PathBuf>,
    /// Module to pair with an algebra when no module file is given.
    #[arg(long, value_enum, default_value_t = ModuleKind::Default)]
    module_kind: ModuleKind,
}

#[derive(Args)]
struct ComplexArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Maximal number of bar letters.
    #[arg(long, default_value_t = 6)]
    kmax: usize,
    /// Maximal number of cobar letters.
    #[arg(long, default_value_t = 6)]
    lmax: usize,
    /// Degrees to report, as `a..b`; must lie in the trusted range.
    #[arg(long, value_parser = parse_degrees, allow_hyphen_values = true)]
    degrees: Option<DegreeRange>,
    /// Check that the boundary squares to zero (the default).
    #[arg(long = "check-d2", overrides_with = "no_check_d2")]
    _check_d2: bool,
    /// Skip the square-zero check.
    #[arg(long = "no-check-d2")]
    no_check_d2: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Any presentation file: algebra, module, coalgebra or comodule.
    #[arg(long, conflicts_with_all = ["example", "algebra", "module"])]
    file: Option<PathBuf>,
    /// Highest arity at which relations are checked.
    #[arg(long, default_value_t = 5)]
    kcheck: usize,
}

#[derive(Args)]
struct DualizeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Any presentation file: algebra, module, coalgebra or comodule.
    #[arg(long, conflicts_with_all = ["example", "algebra", "module"])]
    file: Option<PathBuf>,
    /// For modules: the comodule with the same basis, or the dual module as a comodule.
    #[arg(long, value_enum, default_value_t = DualTarget::Comodule)]
    target: DualTarget,
}

#[derive(Clone, Copy, ValueEnum)]
enum DualTarget {
    Coalgebra,
    Comodule,
    DualComodule,
}

#[derive(Args)]
struct TreesArgs {
    /// Number of leaves.
    #[arg(long)]
    n: usize,
    /// List every tree as a bracketing.
    #[arg(long)]
    dump: bool,
}

const MAX_LEAVES: usize = 9;

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn parse_degrees(s: &str) -> Result<DegreeRange, String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("`{a}`: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("`{b}`: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(DegreeRange::new(a, b))
}

/// An augmented algebra and a left module, plus a description of where they came from.
struct Loaded {
    algebra: AInfAlgebra,
    module: AInfModule,
    echo: serde_json::Value,
}

fn choice(k: ModuleKind) -> ModuleChoice {
    match k {
        ModuleKind::Default => ModuleChoice::Default,
        ModuleKind::Trivial => ModuleChoice::Trivial,
        ModuleKind::Regular => ModuleChoice::Regular,
    }
}

fn module_of(a: &AInfAlgebra, k: ModuleKind) -> Result<AInfModule, InputError> {
    Ok(match k {
        ModuleKind::Default | ModuleKind::Trivial => AInfModule::trivial(a, Side::Left)?,
        ModuleKind::Regular => AInfModule::regular(a, Side::Left),
    })
}

fn load_input(args: &InputArgs) -> Result<Loaded, InputError> {
    if let Some(name) = &args.example {
        let ex = example_with(name, choice(args.module_kind))?;
        return Ok(Loaded {
            algebra: ex.algebra,
            module: ex.module,
            echo: json!({"example": ex.name, "description": ex.description, "module": format!("{:?}", args.module_kind).to_lowercase()}),
        });
    }
    if let Some(path) = &args.module {
        return match presentation::load(path)? {
            Presentation::Module { algebra, module } => Ok(Loaded {
                algebra,
                module,
                echo: json!({"module_file": path.display().to_string()}),
            }),
            p => Err(wrong_kind(path, "a module", &p)),
        };
    }
    if let Some(path) = &args.algebra {
        return match presentation::load(path)? {
            Presentation::Algebra(algebra) => Ok(Loaded {
                module: module_of(&algebra, args.module_kind)?,
                algebra,
                echo: json!({"algebra_file": path.display().to_string(), "module": format!("{:?}", args.module_kind).to_lowercase()}),
            }),
            p => Err(wrong_kind(path, "an algebra", &p)),
        };
    }
    Err(InputError("give --example, --algebra or --module".into()))
}

fn wrong_kind(path: &std::path::Path, want: &str, p: &Presentation) -> InputError {
    let found = format!("{:?}", p.kind()).to_lowercase();
    InputError(format!("{}: expected {want}, found a {found}", path.display()))
}

/// Like [`load_input`], but any kind of structure, and relation checks are left to the caller.
fn load_any(input: &InputArgs, file: &Option<PathBuf>) -> Result<(Presentation, serde_json::Value), InputError> {
    match file {
        Some(path) => Ok((presentation::load_unchecked(path)?, json!({"file": path.display().to_string()}))),
        None if input.example.is_some() => {
            let l = load_input(input)?;
            Ok((
                Presentation::Module {
                    algebra: l.algebra,
                    module: l.module,
                },
                l.echo,
            ))
        }
        None => {
            let path = input.module.as_ref().or(input.algebra.as_ref());
            let Some(path) = path else {
                return Err(InputError("give --example, --algebra, --module or --file".into()));
            };
            let p = presentation::load_unchecked(path)?;
            Ok((p, json!({"file": path.display().to_string()})))
        }
    }
}

fn relation_check(r: RelationReport) -> Check {
    let detail = match r.k_check {
        0 => format!("{} tuples", r.tuples_checked),
        k => format!("{} tuples up to arity {k}", r.tuples_checked),
    };
    match r.witness {
        None => Check::new(r.structure, Status::Pass, Some(detail)),
        Some(w) => Check::new(r.structure, Status::Fail, Some(w.to_string())),
    }
}

fn run_verify(args: &VerifyArgs, report: &mut Report) -> Result<(), InputError> {
    let (p, echo) = load_any(&args.input, &args.file)?;
    report.input = Some(echo);
    let k = args.kcheck;
    let mut checks = Vec::new();
    match &p {
        Presentation::Algebra(a) | Presentation::Module { algebra: a, .. } => {
            let a_ok = verify_algebra_relations(a, k);
            let passed = a_ok.passed();
            checks.push(relation_check(a_ok));
            if a.augmentation().is_some() {
                checks.push(relation_check(verify_augmentation(a)));
            }
            if passed {
                let c = dualize_algebra(a);
                checks.push(relation_check(verify_coalgebra_relations(&c)));
                checks.push(relation_check(verify_dualizing_bimodule(a, k)));
                if let Presentation::Module { module: m, .. } = &p {
                    checks.push(relation_check(verify_module_relations(a, m, k)));
                    let mut r = verify_comodule_relations(&c, &module_to_comodule(a, m));
                    r.structure = format!("{} (same basis)", r.structure);
                    checks.push(relation_check(r));
                    let mut r = verify_comodule_relations(&c, &dual_module_as_comodule(a, m));
                    r.structure = format!("{} (dual module)", r.structure);
                    checks.push(relation_check(r));
                }
            } else {
                checks.push(Check::new("dual and module checks", Status::Skipped, Some("the algebra fails".into())));
            }
        }
        Presentation::Coalgebra(c) | Presentation::Comodule { coalgebra: c, .. } => {
            let c_ok = verify_coalgebra_relations(c);
            let passed = c_ok.passed();
            checks.push(relation_check(c_ok));
            if passed {
                let a = dualize_coalgebra(c);
                let mut r = verify_algebra_relations(&a, k);
                r.structure = format!("dual {}", r.structure);
                checks.push(relation_check(r));
                if let Presentation::Comodule { comodule: n, .. } = &p {
                    checks.push(relation_check(verify_comodule_relations(c, n)));
                    let m = comodule_to_module(c, n)?;
                    let mut r = verify_module_relations(&a, &m, k);
                    r.structure = format!("dual {}", r.structure);
                    checks.push(relation_check(r));
                }
            }
        }
    }
    report.table = Some((
        vec!["check", "status", "detail"],
        checks
            .iter()
            .map(|c| {
                vec![
                    c.name.clone(),
                    serde_json::to_value(c.status).unwrap().as_str().unwrap().to_string(),
                    c.detail.clone().unwrap_or_default(),
                ]
            })
            .collect(),
    ));
    report.checks = checks;
    Ok(())
}

fn run_dualize(args: &DualizeArgs) -> Result<String, InputError> {
    let (p, _) = load_any(&args.input, &args.file)?;
    // Dualizing something that fails its relations gives garbage; refuse.
    match &p {
        Presentation::Algebra(a) | Presentation::Module { algebra: a, .. } => {
            verify_algebra_relations(a, algebra_relation_bound(a)).into_result()?;
        }
        Presentation::Coalgebra(c) | Presentation::Comodule { coalgebra: c, .. } => {
            verify_coalgebra_relations(c).into_result()?;
        }
    }
    let out = match (p, args.target) {
        (Presentation::Algebra(a), _) | (Presentation::Module { algebra: a, .. }, DualTarget::Coalgebra) => {
            Presentation::Coalgebra(dualize_algebra(&a))
        }
        (Presentation::Module { algebra, module }, t) => {
            let comodule = match t {
                DualTarget::DualComodule => dual_module_as_comodule(&algebra, &module),
                _ => module_to_comodule(&algebra, &module),
            };
            Presentation::Comodule {
                coalgebra: dualize_algebra(&algebra),
                comodule,
            }
        }
        (Presentation::Coalgebra(c), _) => Presentation::Algebra(dualize_coalgebra(&c)),
        (Presentation::Comodule { coalgebra, comodule }, _) => Presentation::Module {
            algebra: dualize_coalgebra(&coalgebra),
            module: comodule_to_module(&coalgebra, &comodule)?,
        },
    };
    Ok(presentation::dump(&out))
}

fn policy(args: &ComplexArgs) -> Result<TruncationPolicy, InputError> {
    Ok(TruncationPolicy::new(args.kmax, args.lmax)?)
}

fn requested(args: &ComplexArgs, c: &ChainComplex) -> Result<Option<DegreeRange>, InputError> {
    let Some(d) = args.degrees else { return Ok(None) };
    let t = c.trusted_range();
    if t.intersect(&d) != d {
        return Err(InputError(format!(
            "degrees {d} are not all trusted; the trusted range at this truncation is {t}"
        )));
    }
    Ok(Some(d))
}

fn homology_report(args: &ComplexArgs, c: &ChainComplex, report: &mut Report) -> Result<(), InputError> {
    let degrees = requested(args, c)?;
    let (rows, d2) = betti_rows(c, degrees, !args.no_check_d2);
    report.trusted_range = Some(Range::of(c.trusted_range()));
    report.betti = Some(rows);
    report.extra("chains", c.total_dim());
    report.check(d2);
    Ok(())
}

fn run_complex(cmd: &Command, args: &ComplexArgs, report: &mut Report) -> Result<(), InputError> {
    let l = load_input(&args.input)?;
    let t = policy(args)?;
    report.input = Some(l.echo.clone());
    report.policy = Some(t);
    match cmd {
        Command::Borel(_) => {
            let b = borel(&l.algebra, &l.module, &t)?;
            homology_report(args, b.complex(), report)
        }
        Command::Coborel(_) => {
            let c = coborel(&l.algebra, &l.module, &t)?;
            homology_report(args, c.complex(), report)
        }
        Command::TwistedBorel(_) => {
            let tw = TateInput::new(&l.algebra, &l.module)?.twisted_borel(&t)?;
            homology_report(args, tw.complex(), report)
        }
        Command::Tate(_) | Command::LesCheck(_) => run_tate(matches!(cmd, Command::LesCheck(_)), args, &l, &t, report),
        _ => unreachable!("not a complex command"),
    }
}

fn run_tate(les: bool, args: &ComplexArgs, l: &Loaded, t: &TruncationPolicy, report: &mut Report) -> Result<(), InputError> {
    let input = TateInput::new(&l.algebra, &l.module)?;
    let twisted = input.twisted_borel(t)?;
    let cob = input.coborel(t)?;
    let norm = input.norm(&twisted, t.l_max);
    let nr = verify_norm(&input, &twisted, &norm)?;
    report.check(Check::from_result(
        "norm",
        match (&nr.chain_map_failure, &nr.equivariance_failure) {
            (None, None) => Ok(format!(
                "chain map on {} words, equivariant on {} pairs",
                nr.words_checked, nr.equivariance_checked
            )),
            (Some(f), _) | (None, Some(f)) => Err(f.clone()),
        },
    ));
    let comp = tate_from_parts(twisted, cob, norm, nr)?;
    let tate = comp.tate();
    if !les {
        homology_report(args, tate, report)?;
    } else {
        report.trusted_range = Some(Range::of(tate.trusted_range()));
    }

    // The three positions of the sequence, each checked on every degree in the window.
    let n = &comp.norm_map;
    let s = &comp.sequence;
    let window = [&n.source, &n.target, &s.cone]
        .iter()
        .map(|c| DegreeRange::new(c.min_degree() - 1, c.max_degree() + 1))
        .reduce(|a, b| DegreeRange::new(a.lo.min(b.lo), a.hi.max(b.hi)))
        .expect("three complexes");
    let window = args.degrees.unwrap_or(window);
    let mut nodes = Vec::new();
    for (at, f, g) in [
        ("coborel", n, &s.inclusion),
        ("tate", &s.inclusion, &s.projection),
        ("twisted", &s.projection, n),
    ] {
        for r in exactness_check(f, g, window)?.nodes {
            nodes.push((at, r));
        }
    }
    let checked = nodes.iter().filter(|(_, r)| r.status != NodeStatus::Skipped).count();
    let bad: Vec<String> = nodes
        .iter()
        .filter(|(_, r)| !matches!(r.status, NodeStatus::Exact { .. } | NodeStatus::Skipped))
        .map(|(at, r)| format!("{at} {}", r.degree))
        .collect();
    report.check(if checked == 0 {
        Check::new("exactness", Status::Skipped, Some("no node has all its degrees trusted".into()))
    } else if bad.is_empty() {
        Check::new("exactness", Status::Pass, Some(format!("{checked} nodes exact")))
    } else {
        Check::new("exactness", Status::Fail, Some(format!("not exact at {}", bad.join(", "))))
    });
    if les {
        let listed: Vec<_> = nodes
            .iter()
            .filter(|(_, r)| r.status != NodeStatus::Skipped)
            .map(|(at, r)| {
                let mut v = serde_json::to_value(r).expect("node serializes");
                v["position"] = json!(at);
                v
            })
            .collect();
        report.table = Some((
            vec!["position", "degree", "status"],
            listed
                .iter()
                .map(|v| {
                    vec![
                        v["position"].as_str().unwrap_or_default().to_string(),
                        v["degree"].to_string(),
                        v["status"].as_str().unwrap_or_default().to_string(),
                    ]
                })
                .collect(),
        ));
        report.extra("nodes", listed);
    }
    Ok(())
}

fn run_trees(args: &TreesArgs, report: &mut Report) -> Result<(), InputError> {
    if args.n > MAX_LEAVES {
        return Err(InputError(format!("--n is at most {MAX_LEAVES}")));
    }
    let census = count_by_codim(args.n)?;
    let trees = enumerate_trees(args.n)?;
    let graph = wall_adjacency(args.n)?;
    let total: usize = census.values().sum();
    let rows: Vec<_> = census.iter().map(|(c, k)| json!({"codim": c, "count": k})).collect();
    report.extra("n", args.n);
    report.extra("census", &rows);
    report.extra("total", total);
    report.extra("chambers", graph.chambers.len());
    report.extra("walls", graph.walls.len());
    if args.dump {
        report.extra("trees", trees.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    }
    report.check(Check::from_result(
        "enumeration",
        if trees.iter().all(|t| t.leaves() == args.n && t.is_valid()) && trees.len() == total {
            Ok(format!("{total} valid trees"))
        } else {
            Err("an enumerated tree is invalid".into())
        },
    ));
    report.check(Check::from_result(
        "walls",
        if graph.walls.iter().all(|w| w.chambers.len() == 2) {
            Ok(format!("each of {} walls separates two chambers", graph.walls.len()))
        } else {
            Err("a wall does not separate exactly two chambers".into())
        },
    ));
    report.table = Some((
        vec!["codim", "count"],
        census.iter().map(|(c, k)| vec![c.to_string(), k.to_string()]).collect(),
    ));
    Ok(())
}

fn emit(cli: &Cli, text: &str) -> Result<(), InputError> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool, InputError> {
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let mut report = Report::new(echo);
    match &cli.command {
        Command::Dualize(args) => {
            if matches!(cli.format, Format::Csv) {
                return Err(InputError("dualize writes JSON presentations only".into()));
            }
            emit(cli, &run_dualize(args)?)?;
            return Ok(true);
        }
        Command::Verify(args) => run_verify(args, &mut report)?,
        Command::Trees(args) => run_trees(args, &mut report)?,
        cmd @ (Command::Borel(a)
        | Command::Coborel(a)
        | Command::TwistedBorel(a)
        | Command::Tate(a)
        | Command::LesCheck(a)) => run_complex(cmd, a, &mut report)?,
    }
    let report = report.finish();
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    emit(cli, &text)?;
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        eprintln!("check failed: {}: {}", c.name, c.detail.as_deref().unwrap_or(""));
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    eprintln!("time: {:.3}s", start.elapsed().as_secs_f64());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
