//! Thin command-line front end over the library.
//!
//! Exit codes: 0 all checks pass, 1 an identity check failed, 2 input error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use movsurf::error::Error;
use movsurf::implicitize::{
    implicit_direct_resultant, implicit_moving_quadrics, validate_on_surface, Method,
};
use movsurf::input::{parse_surface, parse_triple};
use movsurf::moving::{
    build_mp, build_mqd, build_msd, build_mtd, choose_index_set, moving_space_basis, Sigma,
};
use movsurf::resultant::{dixon_matrix, macaulay_res, res_bihom, res_tri};
use movsurf::surface::{ParamSurface, SurfaceKind};
use movsurf::verify::{render_matrix, run_fixed, run_suite, IdentityKind, SuiteParams};

#[derive(Parser)]
#[command(
    name = "movsurf",
    about = "Implicitization of rational surfaces by moving planes and quadrics, with exact resultant identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a moving-surface coefficient matrix with its labels.
    Matrices(MatricesArgs),
    /// Print a basis of the moving d-surfaces that follow a surface.
    Spaces(SpacesArgs),
    /// Compute the resultant of x1, x2, x3 from an input file.
    Resultant(ResultantArgs),
    /// Compute the implicit equation of a surface.
    Implicitize(ImplicitizeArgs),
    /// Check a determinant identity on random or fixed instances.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct MatricesArgs {
    /// Surface description file (key=value lines).
    #[arg(long)]
    input: String,
    /// Which matrix to build.
    #[arg(long, value_enum)]
    which: Which,
    /// Moving-surface degree d.
    #[arg(long, default_value_t = 2)]
    d: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Mp,
    Mq,
    Ms,
    Mt,
}

#[derive(Args)]
struct SpacesArgs {
    #[arg(long)]
    input: String,
    /// Moving-surface degree d (1 = planes, 2 = quadrics).
    #[arg(long, default_value_t = 2)]
    d: u32,
    /// Parameter degree: "1,1" (tensor) or "2" (triangular).
    #[arg(long)]
    sigma: String,
}

#[derive(Args)]
struct ResultantArgs {
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value_t = Engine::Koszul)]
    engine: Engine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Koszul,
    Dixon,
    Macaulay,
}

#[derive(Args)]
struct ImplicitizeArgs {
    #[arg(long)]
    input: String,
    /// mq = moving quadrics, res = direct resultant.
    #[arg(long, value_enum, default_value_t = MethodArg::Mq)]
    method: MethodArg,
    /// Validate the result at this many random surface points.
    #[arg(long, default_value_t = 25)]
    validate: u32,
    /// Seed for the validation points.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Mq,
    Res,
}

#[derive(Args)]
struct VerifyArgs {
    /// Fixed instance file; otherwise random instances are drawn.
    #[arg(long)]
    input: Option<String>,
    /// tensor | triangular (random suites).
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Identity to check: thm-mt, lemma-mt, conj-61, conj-62, thm-mth,
    /// remark-pm, dim-formula.
    #[arg(long)]
    identity: String,
    #[arg(long, default_value_t = 2)]
    d: u32,
    #[arg(long, default_value_t = 10)]
    trials: u32,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Emit the report as JSON instead of text.
    #[arg(long, default_value_t = false)]
    json: bool,
}

fn read_surface(path: &str) -> Result<ParamSurface, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {}", path, e)))?;
    parse_surface(&text)
}

fn cmd_matrices(args: &MatricesArgs) -> Result<bool, Error> {
    let s = read_surface(&args.input)?;
    let triangular = matches!(s.kind(), SurfaceKind::Triangular { .. });
    let index_set = if triangular && matches!(args.which, Which::Ms | Which::Mt) {
        Some(choose_index_set(&s)?)
    } else {
        None
    };
    let (title, m) = match args.which {
        Which::Mp => ("MP".to_string(), build_mp(&s)),
        Which::Mq => (format!("MQ^{}", args.d), build_mqd(&s, args.d)?),
        Which::Ms => {
            let t = match &index_set {
                Some(i) => format!("MS^{} I={}", args.d, i),
                None => format!("MS^{}", args.d),
            };
            (t, build_msd(&s, args.d, index_set.as_ref())?)
        }
        Which::Mt => {
            let t = match &index_set {
                Some(i) => format!("MT^{} I={}", args.d, i),
                None => format!("MT^{}", args.d),
            };
            (t, build_mtd(&s, args.d, index_set.as_ref())?)
        }
    };
    print!("{}", render_matrix(&title, &m));
    Ok(true)
}

fn parse_sigma(text: &str, kind: SurfaceKind) -> Result<Sigma, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    let parse = |p: &str| -> Result<u32, Error> {
        p.trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad sigma component `{}`", p)))
    };
    match (kind, parts.as_slice()) {
        (SurfaceKind::Tensor { .. }, [a, b]) => Ok(Sigma::Bi(parse(a)?, parse(b)?)),
        (SurfaceKind::Triangular { .. }, [a]) => Ok(Sigma::Tri(parse(a)?)),
        (SurfaceKind::Tensor { .. }, _) => {
            Err(Error::Input("tensor surfaces need --sigma S1,S2".into()))
        }
        (SurfaceKind::Triangular { .. }, _) => {
            Err(Error::Input("triangular surfaces need --sigma S".into()))
        }
    }
}

fn cmd_spaces(args: &SpacesArgs) -> Result<bool, Error> {
    let s = read_surface(&args.input)?;
    let sigma = parse_sigma(&args.sigma, s.kind())?;
    let basis = moving_space_basis(&s, args.d, sigma)?;
    println!("dimension {}", basis.len());
    for (i, b) in basis.iter().enumerate() {
        println!("b{}: {}", i + 1, b);
    }
    Ok(true)
}

fn cmd_resultant(args: &ResultantArgs) -> Result<bool, Error> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Error::Input(format!("{}: {}", args.input, e)))?;
    let (kind, fs) = parse_triple(&text)?;
    let value = match (args.engine, kind) {
        (Engine::Koszul, SurfaceKind::Tensor { .. }) => res_bihom(&fs[0], &fs[1], &fs[2])?,
        (Engine::Koszul, SurfaceKind::Triangular { .. }) => res_tri(&fs[0], &fs[1], &fs[2])?,
        (Engine::Dixon, SurfaceKind::Tensor { .. }) => {
            dixon_matrix(&fs[0], &fs[1], &fs[2])?.det()?
        }
        (Engine::Dixon, SurfaceKind::Triangular { .. }) => {
            return Err(Error::Input(
                "the Dixon engine takes the tensor case; use koszul or macaulay".into(),
            ))
        }
        (Engine::Macaulay, SurfaceKind::Triangular { .. }) => {
            match macaulay_res(&fs[0], &fs[1], &fs[2]) {
                Ok(v) => v,
                Err(Error::MacaulayDegenerate) => {
                    eprintln!("note: every Macaulay denominator vanished; falling back to the Koszul engine");
                    res_tri(&fs[0], &fs[1], &fs[2])?
                }
                Err(e) => return Err(e),
            }
        }
        (Engine::Macaulay, SurfaceKind::Tensor { .. }) => {
            return Err(Error::Input(
                "the Macaulay engine takes the triangular case; use koszul or dixon".into(),
            ))
        }
    };
    println!("{}", movsurf::rat::rat_string(&value));
    Ok(true)
}

fn cmd_implicitize(args: &ImplicitizeArgs) -> Result<bool, Error> {
    let s = read_surface(&args.input)?;
    let result = match args.method {
        MethodArg::Mq => implicit_moving_quadrics(&s)?,
        MethodArg::Res => implicit_direct_resultant(&s)?,
    };
    let tag = match result.method {
        Method::MovingQuadrics => "moving-quadrics",
        Method::DirectResultant => "direct-resultant",
    };
    println!("method: {}", tag);
    println!("F = {}", result.f);
    if result.exponent > 1 {
        println!("F = constant * ({})^{}", result.base, result.exponent);
    }
    if args.validate > 0 {
        let report = validate_on_surface(&result.f, &s, args.validate, args.seed)?;
        println!(
            "validation: {}/{} image points vanish",
            report.zeros, report.trials
        );
        if !report.all_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Error> {
    let identity: IdentityKind = args.identity.parse()?;
    let report = match &args.input {
        Some(path) => {
            let s = read_surface(path)?;
            run_fixed(identity, args.d, &s)?
        }
        None => {
            let case = args
                .case
                .as_deref()
                .ok_or_else(|| Error::Input("random suites need --case (or use --input)".into()))?;
            let kind = match case {
                "tensor" => SurfaceKind::Tensor {
                    m: args
                        .m
                        .ok_or_else(|| Error::Input("tensor suites need --m".into()))?,
                    n: args
                        .n
                        .ok_or_else(|| Error::Input("tensor suites need --n".into()))?,
                },
                "triangular" => SurfaceKind::Triangular {
                    n: args
                        .n
                        .ok_or_else(|| Error::Input("triangular suites need --n".into()))?,
                },
                other => {
                    return Err(Error::Input(format!(
                        "case must be tensor or triangular, got `{}`",
                        other
                    )))
                }
            };
            run_suite(SuiteParams {
                identity,
                kind,
                d: args.d,
                trials: args.trials,
                seed: args.seed,
            })?
        }
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print!("{}", report.render_text());
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let outcome = match &cli.command {
        Command::Matrices(args) => cmd_matrices(args),
        Command::Spaces(args) => cmd_spaces(args),
        Command::Resultant(args) => cmd_resultant(args),
        Command::Implicitize(args) => cmd_implicitize(args),
        Command::Verify(args) => cmd_verify(args),
    };
    // Timing goes to stderr so stdout stays byte-deterministic per seed.
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
