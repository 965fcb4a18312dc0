use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use shifted_symfun::checks::{run_check, Check, CheckConfig, RMode};
use shifted_symfun::interpolation::{
    check_r_dominant, factorial_schur, interpolation_basis, one_row, solve_p, special_1k, RhoVector,
};
use shifted_symfun::jack::{
    conjecture_from, jack_j, jack_p, shifted_j, shifted_j_from, symbolic_rho, ConjectureReport,
};
use shifted_symfun::partitions::Partition;
use shifted_symfun::scalars::{parse_rational, Field, Param, RatFunc, Rational};
use shifted_symfun::sympoly::MSymPoly;
use shifted_symfun::Error;

#[derive(Parser)]
#[command(
    name = "shifted-symfun",
    version,
    about = "Exact interpolation Jack polynomials and their difference operators"
)]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "SHIFTED_SYMFUN_WORKERS", default_value_t = 0)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial.
    Compute(ComputeArgs),
    /// Run verification suites; exits 1 if any fails.
    Verify(VerifyArgs),
    /// Scan the integral forms for integrality and positivity of coefficients.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    #[value(name = "P")]
    P,
    #[value(name = "P1k")]
    P1k,
    #[value(name = "factorial-schur")]
    FactorialSchur,
    #[value(name = "one-row")]
    OneRow,
    #[value(name = "jackP")]
    JackP,
    #[value(name = "jackJ")]
    JackJ,
    #[value(name = "shiftedJ")]
    ShiftedJ,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args)]
struct RArgs {
    /// Rational value of r, as p/q.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "symbolic")]
    r: Option<String>,
    /// Keep the parameter symbolic.
    #[arg(long)]
    symbolic: bool,
}

impl RArgs {
    fn mode(&self, n: usize) -> Result<Option<RMode>, Error> {
        match (&self.r, self.symbolic) {
            (Some(s), _) => {
                let q = parse_rational(s)?;
                check_r_dominant(&q, n)?;
                Ok(Some(RMode::Value(q)))
            }
            (None, true) => Ok(Some(RMode::Symbolic)),
            (None, false) => Ok(None),
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    what: What,
    /// Comma-separated parts, padded with zeros to n.
    #[arg(long, default_value = "")]
    lambda: String,
    /// Number of variables; defaults to the length of lambda.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    r: RArgs,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check to run; repeatable, all checks when omitted.
    #[arg(long = "check")]
    checks: Vec<String>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    dmax: u32,
    #[command(flatten)]
    r: RArgs,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    dmax: u32,
    /// Accepted for symmetry; the scan is always symbolic in α.
    #[arg(long)]
    symbolic: bool,
    /// Exit 1 when any report fails.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

enum Failure {
    Config(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonDominantR { .. }
            | Error::NonDominant(_)
            | Error::InvalidArgument(_)
            | Error::NotAPartition(_)
            | Error::BadRational(_)
            | Error::LengthMismatch { .. }
            | Error::BadValues(_) => Failure::Config(e),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn parse_lambda(s: &str, n: Option<usize>) -> Result<Partition, Error> {
    let parts: Vec<u32> = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u32>()
                .map_err(|_| Error::InvalidArgument(format!("bad part {p:?} in lambda")))
        })
        .collect::<Result<_, _>>()?;
    let n = n.unwrap_or(parts.len());
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Partition::padded(&parts, n)
}

fn render<F: Field>(p: &MSymPoly<F>, output: Output) -> String {
    match output {
        Output::Json => p.to_json().to_string(),
        Output::Text => p.to_string(),
    }
}

fn need_r(mode: Option<RMode>) -> Result<RMode, Error> {
    mode.ok_or_else(|| Error::InvalidArgument("pass --r p/q or --symbolic".into()))
}

fn compute_shifted<F: Field>(what: What, lambda: &Partition, r: F, output: Output) -> Result<String, Failure> {
    let n = lambda.n();
    let rho = RhoVector::r_delta(r.clone(), n);
    let poly = match what {
        What::P => solve_p(lambda, &rho)?,
        What::P1k => {
            let k = lambda.length();
            if lambda != &Partition::column(k, n) || k == 0 {
                return Err(
                    Error::InvalidArgument(format!("P1k needs lambda = 1^k, got {}", lambda.bracketed())).into(),
                );
            }
            let (p1, p2) = special_1k(k, &rho)?;
            if p1 != p2 {
                return Err(Failure::Internal(format!("the two 1^k forms disagree:\n{p1}\n{p2}")));
            }
            p1
        }
        What::OneRow => {
            if lambda.length() > 1 {
                return Err(
                    Error::InvalidArgument(format!("one-row needs a single part, got {}", lambda.bracketed())).into(),
                );
            }
            one_row(lambda.size(), &r, n)?
        }
        _ => unreachable!("jack-side and r = 1 forms are handled by the caller"),
    };
    Ok(render(&poly, output))
}

fn compute(args: &ComputeArgs) -> Result<String, Failure> {
    let lambda = parse_lambda(&args.lambda, args.n)?;
    let mode = args.r.mode(lambda.n())?;
    match args.what {
        What::P | What::P1k | What::OneRow => match need_r(mode)? {
            RMode::Symbolic => compute_shifted(args.what, &lambda, RatFunc::param(Param::R), args.output),
            RMode::Value(q) => compute_shifted(args.what, &lambda, q, args.output),
        },
        What::FactorialSchur => {
            if matches!(&mode, Some(RMode::Value(q)) if *q != Rational::from_int(1)) {
                return Err(Error::InvalidArgument("factorial-schur is the r = 1 form".into()).into());
            }
            Ok(render(&factorial_schur::<Rational>(&lambda)?, args.output))
        }
        What::JackP | What::JackJ | What::ShiftedJ => {
            if matches!(mode, Some(RMode::Value(_))) {
                return Err(Error::InvalidArgument("Jack-side forms are symbolic in α".into()).into());
            }
            let poly = match args.what {
                What::JackP => jack_p(&lambda)?,
                What::JackJ => jack_j(&lambda)?,
                _ => shifted_j(&lambda)?,
            };
            Ok(render(&poly, args.output))
        }
    }
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Result<bool, Failure> {
    let mode = args.r.mode(args.n)?.unwrap_or(RMode::Symbolic);
    let cfg = CheckConfig::new(args.n, args.dmax, mode)?;
    let checks: Vec<Check> = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let mut all = true;
    for check in checks {
        let report = run_check(check, &cfg)?;
        all &= report.passed();
        let line = match args.output {
            Output::Json => report.to_json().to_string(),
            Output::Text => match &report.witness {
                None => format!("{check}: pass"),
                Some(w) => format!("{check}: fail {w}"),
            },
        };
        writeln!(out, "{line}").map_err(|e| Failure::Internal(e.to_string()))?;
    }
    Ok(all)
}

fn scan_reports(n: usize, d: u32, inject_fault: bool) -> Result<Vec<ConjectureReport>, Error> {
    let family = interpolation_basis(n, d, &symbolic_rho(n))?;
    let reports = family
        .par_iter()
        .map(|(lambda, p)| {
            let mut j = shifted_j_from(lambda, p);
            if inject_fault && lambda.size() == 0 {
                j.add_term(
                    lambda.clone(),
                    RatFunc::from_rational(&Rational::new(1.into(), 2.into())),
                );
            }
            conjecture_from(lambda, &j)
        })
        .collect();
    Ok(reports)
}

fn scan(args: &ScanArgs, out: &mut impl Write) -> Result<bool, Failure> {
    if args.n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()).into());
    }
    let reports = scan_reports(args.n, args.dmax, args.inject_fault)?;
    let passing = reports.iter().filter(|r| r.passes()).count();
    let failing = reports.len() - passing;
    let io = |e: io::Error| Failure::Internal(e.to_string());
    for report in &reports {
        let line = match args.output {
            Output::Json => report.to_json().to_string(),
            Output::Text => format!(
                "{} {} ({} terms)",
                report.lambda.bracketed(),
                report.verdict(),
                report.rows.len()
            ),
        };
        writeln!(out, "{line}").map_err(io)?;
    }
    let summary = match args.output {
        Output::Json => json!({"summary": {"reports": reports.len(), "pass": passing, "fail": failing}}).to_string(),
        Output::Text => format!("reports: {}, pass: {passing}, fail: {failing}", reports.len()),
    };
    writeln!(out, "{summary}").map_err(io)?;
    Ok(failing == 0 || !args.strict)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Compute(args) => compute(args).and_then(|s| {
            writeln!(out, "{s}").map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(true)
        }),
        Command::Verify(args) => verify(args, &mut out),
        Command::Scan(args) => scan(args, &mut out),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
