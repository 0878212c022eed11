use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use unichrom::{
    parse_graph, run_jobs, thread_count, ClassFnJson, GraphJson, ReportJson, SymFuncJson, THREADS_VAR,
};
use unichrom_core::bridge::{default_plan, p_brace1, p_one, Check, Job};
use unichrom_core::chromallt::{as_expansion, csf, d_coeffs, e_expansion_x, llt_vertical};
use unichrom_core::combinatorics::{IndiffGraph, SchroderPath};
use unichrom_core::fqoracle::{hessenberg_count, induce_to_gl, superclass_sizes, ClassFnUT, Fq, Mat};
use unichrom_core::symfunc::{Basis, BasisTables, SymFunc};

#[derive(Parser)]
#[command(name = "unichrom", version, about = "Chromatic quasisymmetric functions, LLT polynomials and GL_n(F_q) checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object and print it as JSON.
    #[command(subcommand)]
    Compute(Compute),
    /// Run theorem checks. `all` runs every check.
    #[command(after_help = format!("Worker threads are read from {THREADS_VAR}."))]
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GraphArg {
    /// Dyck word such as `EESESS`, or an edge list such as `1-2 2-3`.
    #[arg(long)]
    graph: String,
    /// Vertex count, needed for edge lists.
    #[arg(long)]
    n: Option<usize>,
}

impl GraphArg {
    fn get(&self) -> Result<IndiffGraph> {
        parse_graph(&self.graph, self.n)
    }
}

#[derive(Args)]
struct PathArg {
    /// Tall Schröder path such as `EEDSS`.
    #[arg(long)]
    path: String,
}

impl PathArg {
    fn get(&self) -> Result<SchroderPath> {
        self.path.parse().map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Permutation character of the pattern group coset space.
    ChiBar,
    /// Supercharacter.
    Chi,
    /// Superclass indicator.
    Delta,
    /// Indicator of the pattern subgroup.
    DeltaBar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Image {
    /// Values on unipotent classes only.
    None,
    /// `Σ φ(J_λ) P̃_λ(x; q)` in the monomial basis.
    P1,
    /// Unipotent constituents in the Schur basis.
    POne,
}

#[derive(Subcommand)]
enum Compute {
    /// `X_γ(x; t)` in the monomial basis.
    Csf(GraphArg),
    /// `G_σ(x; t)` in the monomial basis.
    Llt(PathArg),
    /// The orientation e-expansion of `G_σ`.
    AsExpand(PathArg),
    /// Coefficients of `X_γ` in the modified Hall–Littlewood basis.
    DCoeffs(GraphArg),
    /// `X_γ` in the elementary basis.
    EExpand(GraphArg),
    /// Induce a superclass function of `UT_n(F_q)` to `GL_n(F_q)`.
    Induce {
        #[arg(long)]
        q: u64,
        /// Pattern graph; selects the function with `--kind`.
        #[arg(long, conflicts_with = "path", required_unless_present = "path")]
        graph: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "chi-bar")]
        kind: Kind,
        /// Tall Schröder path; induces the pseudosupercharacter.
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value = "none")]
        image: Image,
        /// Raise the GL enumeration guard.
        #[arg(long)]
        allow_large: bool,
    },
    /// Points of the Hessenberg variety of a matrix over `F_q`.
    HessCount {
        #[command(flatten)]
        graph: GraphArg,
        /// Rows as digit strings separated by `/`, e.g. `110/011/001`.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        q: u64,
    },
    /// Sizes of the superclasses of `UT_n(F_q)`.
    SuperclassSizes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or a check name such as `check_cqs` or `cqs`.
    target: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    /// Extend the default ranges.
    #[arg(long)]
    deep: bool,
    /// Print a JSON array of reports.
    #[arg(long)]
    json: bool,
    /// Raise the GL enumeration guard.
    #[arg(long)]
    allow_large: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(c) => compute(c).map(|v| {
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            ExitCode::SUCCESS
        }),
        Command::Verify(args) => verify(args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}

fn core<T>(r: unichrom_core::Result<T>) -> Result<T> {
    r.map_err(|e| anyhow!("{e}"))
}

fn compute(c: Compute) -> Result<serde_json::Value> {
    let tables = BasisTables::new();
    let v = match c {
        Compute::Csf(g) => json!(SymFuncJson::from_monomial(&core(csf(&g.get()?))?)),
        Compute::Llt(p) => json!(SymFuncJson::from_monomial(&core(llt_vertical(&p.get()?))?)),
        Compute::AsExpand(p) => json!(SymFuncJson::from_basis(&core(as_expansion(&p.get()?))?)),
        Compute::DCoeffs(g) => {
            let gamma = g.get()?;
            let d = core(d_coeffs(&tables, &gamma))?;
            json!(SymFuncJson::from_basis(&core(SymFunc::new(gamma.n(), Basis::PT, d))?))
        }
        Compute::EExpand(g) => json!(SymFuncJson::from_basis(&core(e_expansion_x(&tables, &g.get()?))?)),
        Compute::Induce { q, graph, n, kind, path, image, allow_large } => {
            let phi = match (graph, path) {
                (Some(g), _) => {
                    let gamma = parse_graph(&g, n)?;
                    core(match kind {
                        Kind::ChiBar => ClassFnUT::chi_bar(q, &gamma),
                        Kind::Chi => ClassFnUT::chi_super(q, &gamma),
                        Kind::Delta => ClassFnUT::delta(q, &gamma),
                        Kind::DeltaBar => ClassFnUT::delta_bar(q, &gamma),
                    })?
                }
                (None, Some(p)) => {
                    let sigma: SchroderPath = p.parse().map_err(|e| anyhow!("{e}"))?;
                    core(ClassFnUT::psi_pseudo(q, &sigma))?
                }
                (None, None) => bail!("give --graph or --path"),
            };
            let ind = core(induce_to_gl(&phi, allow_large))?;
            let mut out = json!(ClassFnJson::from(&ind));
            match image {
                Image::None => {}
                Image::P1 => out["image"] = json!(SymFuncJson::from_monomial(&core(p_brace1(&tables, &ind))?)),
                Image::POne => out["image"] = json!(SymFuncJson::from_basis(&core(p_one(&tables, &ind))?)),
            }
            out
        }
        Compute::HessCount { graph, matrix, q } => {
            let gamma = graph.get()?;
            let f = core(Fq::new(q))?;
            let a = core(Mat::parse(&f, &matrix)).with_context(|| format!("matrix `{matrix}`"))?;
            let count = core(hessenberg_count(&f, &gamma, &a))?;
            json!({ "graph": GraphJson::from(&gamma), "matrix": a.to_digit_string(), "q": q, "count": count })
        }
        Compute::SuperclassSizes { n, q } => {
            let sizes = core(superclass_sizes(&core(Fq::new(q))?, n))?;
            let rows: Vec<_> =
                sizes.iter().map(|(g, k)| json!({ "graph": GraphJson::from(g), "size": k })).collect();
            json!({ "n": n, "q": q, "superclasses": rows })
        }
    };
    Ok(v)
}

fn plan(args: &VerifyArgs) -> Result<Vec<Job>> {
    let checks: Vec<Check> = if args.target.eq_ignore_ascii_case("all") {
        Check::ALL.to_vec()
    } else {
        vec![args.target.parse().map_err(|e| anyhow!("{e}"))?]
    };
    let mut jobs: Vec<Job> = match args.n {
        Some(n) => checks.iter().map(|&c| Job::new(c, n, args.q)).collect(),
        None => default_plan(args.deep)
            .into_iter()
            .filter(|j| checks.contains(&j.check))
            .filter(|j| args.q.is_none() || j.q.is_none() || j.q == args.q)
            .collect(),
    };
    jobs.sort();
    jobs.dedup();
    Ok(jobs)
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let jobs = plan(&args)?;
    if jobs.is_empty() {
        bail!("nothing to run for `{}`", args.target);
    }
    let results = run_jobs(&jobs, args.allow_large, thread_count()?)?;
    let (mut failed, mut errors) = (0, 0);
    let mut reports = Vec::new();
    for r in &results {
        match r {
            Ok(rep) => {
                failed += usize::from(!rep.passed());
                if args.json {
                    reports.push(ReportJson::from(rep));
                } else {
                    println!("{rep}");
                }
            }
            Err(e) => {
                errors += 1;
                eprintln!("error: {e:#}");
            }
        }
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        let passed = results.len() - failed - errors;
        println!("{passed} passed, {failed} failed, {errors} errors");
    }
    Ok(match (failed, errors) {
        (0, 0) => ExitCode::SUCCESS,
        (_, 0) => ExitCode::FAILURE,
        _ => ExitCode::from(2),
    })
}
