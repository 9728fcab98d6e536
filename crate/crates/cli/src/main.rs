//! Batch frontend: one job per invocation, deterministic output on stdout,
//! timings on stderr.
//!
//! Exit codes: 0 success, 2 malformed input or options, 3 degenerate input,
//! 4 internal tripwire (including a failed `--cross-check`).

mod error;
mod input;
mod jobs;
mod report;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use eigendisc_core::eigen::{index_choices, polar_map, random_direction, tensor_to_map, EigenOptions};
use eigendisc_core::mpoly::{parse_poly, RationalMapData};

use error::CliError;
use input::{form_degrees, parameters_of, parse_forms, read_tensor};
use jobs::{DiscriminantJob, EigenJob, ResultantJob};
use report::Report;
use run::{evaluate, Mode};

#[derive(Parser)]
#[command(name = "eigendisc", version, about = "Exact resultants, discriminants and eigendiscriminants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resultant of n homogeneous forms in n variables.
    Resultant(FormArgs),
    /// Discriminant of n-1 homogeneous forms in n variables.
    Discriminant(FormArgs),
    /// Eigendiscriminant of a rational map, tensor or symmetric form.
    Eigendisc(EigenArgs),
}

#[derive(Args)]
struct Common {
    /// Work modulo these primes instead of over the integers.
    #[arg(long = "mod", value_name = "P", value_delimiter = ',')]
    moduli: Vec<u64>,
    /// Parameter to interpolate in (u, v, w or t); pair with --bound.
    #[arg(long = "param", value_name = "NAME")]
    params: Vec<String>,
    /// Degree bound for the matching --param.
    #[arg(long = "bound", value_name = "K")]
    bounds: Vec<u32>,
    /// Seed for every random coordinate change.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the data that certifies the value.
    #[arg(long)]
    certificate: bool,
    /// Recompute through every alternative path and compare.
    #[arg(long = "cross-check")]
    cross_check: bool,
    /// Emit JSON instead of key=value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FormArgs {
    #[arg(long, num_args = 1.., required = true, value_name = "FORM")]
    forms: Vec<String>,
    /// Declared degrees, needed only when a form is zero.
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<u32>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["poly", "tensor_file", "forms"])))]
struct EigenArgs {
    /// Number of projective coordinates.
    #[arg(long)]
    n: Option<usize>,
    /// Tensor order; the map has degree d-1.
    #[arg(long)]
    d: Option<u32>,
    /// Input is symmetric: --poly is a form whose polar map is used, and a
    /// tensor file may list only sorted index tuples.
    #[arg(long)]
    symmetric: bool,
    /// A form of degree d in x0..x{n-1}; the map is its gradient.
    #[arg(long)]
    poly: Option<String>,
    /// JSON tensor file with n, d, symmetric and (index, value) entries.
    #[arg(long = "tensor-file", value_name = "PATH")]
    tensor_file: Option<PathBuf>,
    /// The n coordinate forms of the map, each of degree d-1.
    #[arg(long, num_args = 1.., value_name = "FORM")]
    forms: Vec<String>,
    /// Index tuple tried first: i,j,k for n=3 or k,i,j,l for n=4.
    #[arg(long, value_delimiter = ',')]
    index: Vec<usize>,
    /// Conjugate by random unimodular matrices when every index tuple
    /// degenerates (the default).
    #[arg(long, conflicts_with = "no_robust")]
    robust: bool,
    /// Fail with exit code 3 instead of changing coordinates.
    #[arg(long = "no-robust")]
    no_robust: bool,
    /// Compute the value as the t = 0 member of the family map + t*direction.
    #[arg(long)]
    perturb: bool,
    /// Direction for --perturb: n forms, or one form whose polar map is
    /// used. Defaults to a seeded random map.
    #[arg(long, num_args = 1.., requires = "perturb", value_name = "FORM")]
    direction: Vec<String>,
    #[command(flatten)]
    common: Common,
}

struct Finished {
    report: Report,
    json: bool,
    mismatch: bool,
}

fn echo_forms(report: &mut Report, key: &str, forms: &[eigendisc_core::mpoly::MPoly<num_bigint::BigInt>]) {
    for (i, f) in forms.iter().enumerate() {
        report.push(format!("{key}.{i}"), f);
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn run_forms(args: FormArgs, discriminant: bool) -> Result<Finished, CliError> {
    let nvars = args.forms.len() + usize::from(discriminant);
    if nvars > eigendisc_core::mpoly::MAX_PROJECTIVE {
        return Err(CliError::Input(format!("at most {} variables are supported", eigendisc_core::mpoly::MAX_PROJECTIVE)));
    }
    let forms = parse_forms(&args.forms, nvars)?;
    let degrees = form_degrees(&forms, &args.degrees)?;
    let c = &args.common;
    let mode = Mode::choose(&c.moduli, &c.params, &c.bounds, &parameters_of(&forms))?;

    let mut report = Report::new();
    report.push("command", if discriminant { "discriminant" } else { "resultant" });
    report.push("variables", nvars);
    report.push("degrees", join(&degrees));
    report.push("seed", c.seed);
    echo_forms(&mut report, "form", &forms);
    mode.describe(&mut report);
    let mismatch = if discriminant {
        evaluate(&DiscriminantJob { forms, degrees, seed: c.seed }, &mode, c.cross_check, &mut report)?
    } else {
        evaluate(&ResultantJob { forms, degrees, seed: c.seed }, &mode, c.cross_check, &mut report)?
    };
    Ok(Finished { report, json: c.json, mismatch })
}

fn run_eigendisc(args: EigenArgs) -> Result<Finished, CliError> {
    let (map, source) = if let Some(poly) = &args.poly {
        let n = args.n.ok_or_else(|| CliError::Input("--poly needs --n".into()))?;
        if !(2..=4).contains(&n) {
            return Err(CliError::Input(format!("n = {n} is not supported; use 2, 3 or 4")));
        }
        (polar_map(&parse_poly(poly, Some(n))?, n)?, "polar")
    } else if let Some(path) = &args.tensor_file {
        (tensor_to_map(&read_tensor(path, args.symmetric)?)?, "tensor")
    } else {
        let n = args.forms.len();
        if !(2..=4).contains(&n) {
            return Err(CliError::Input(format!("{n} forms given; a map needs 2, 3 or 4")));
        }
        let forms = parse_forms(&args.forms, n)?;
        let deg = form_degrees(&forms, &[])?;
        if deg.iter().any(|&e| e != deg[0]) {
            return Err(CliError::Input(format!("forms have different degrees {}", join(&deg))));
        }
        (RationalMapData::new(n, deg[0] + 1, forms)?, "forms")
    };
    if args.n.is_some_and(|n| n != map.n()) {
        return Err(CliError::Input(format!("--n does not match the input (n = {})", map.n())));
    }
    if args.d.is_some_and(|d| d != map.d()) {
        return Err(CliError::Input(format!("--d does not match the input (d = {})", map.d())));
    }
    let (n, d) = (map.n(), map.d());
    let c = &args.common;
    if !args.index.is_empty() && !index_choices(n).contains(&args.index) {
        return Err(CliError::Input(format!("--index must be a permutation of 0..{n}")));
    }

    let perturb = if !args.perturb {
        None
    } else if args.direction.is_empty() {
        Some(random_direction(n, d, c.seed)?)
    } else if args.direction.len() == 1 && n > 1 {
        Some(polar_map(&parse_poly(&args.direction[0], Some(n))?, n)?)
    } else {
        Some(RationalMapData::new(n, d, parse_forms(&args.direction, n)?)?)
    };
    if perturb.as_ref().is_some_and(|p| p.d() != d) {
        return Err(CliError::Input("perturbation direction has the wrong degree".into()));
    }

    let mode = Mode::choose(&c.moduli, &c.params, &c.bounds, &map.parameters())?;
    let opts = EigenOptions {
        index: (!args.index.is_empty()).then(|| args.index.clone()),
        fallback: true,
        robust: !args.no_robust,
        seed: c.seed,
    };

    let mut report = Report::new();
    report.push("command", "eigendisc");
    report.push("n", n);
    report.push("d", d);
    report.push("seed", c.seed);
    report.push("source", source);
    if let Some(p) = &args.poly {
        report.push("poly", parse_poly(p, Some(n))?);
    }
    echo_forms(&mut report, "psi", map.forms());
    if let Some(dir) = &perturb {
        echo_forms(&mut report, "direction", dir.forms());
    }
    if let Some(idx) = &opts.index {
        report.push("index.requested", join(idx));
    }
    report.push("robust", opts.robust);
    mode.describe(&mut report);
    let job = EigenJob { map, opts, perturb, certificate: c.certificate };
    let mismatch = evaluate(&job, &mode, c.cross_check, &mut report)?;
    Ok(Finished { report, json: c.json, mismatch })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match cli.command {
        Command::Resultant(a) => run_forms(a, false),
        Command::Discriminant(a) => run_forms(a, true),
        Command::Eigendisc(a) => run_eigendisc(a),
    };
    eprintln!("time_ms={}", start.elapsed().as_millis());
    match outcome {
        Ok(done) => {
            print!("{}", done.report.render(done.json));
            if done.mismatch {
                eprintln!("error: cross-check found disagreeing values");
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
