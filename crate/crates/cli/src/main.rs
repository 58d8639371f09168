//! `progibbs`: Gibbs ensembles over program-length spectra from the command line.
//!
//! Exit codes: 0 success, 1 verification (or convergence) failure, 2 usage or
//! input error, 3 target mean length out of range, 4 divergent sum.

mod fmt;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use progibbs::extremum::{hessian_at_scaled_gibbs, VerifyConfig};
use progibbs::gibbs::{GibbsState, TemperatureParam};
use progibbs::inverse::{solve_lambda, SolveConfig, DEFAULT_MAX_ITER};
use progibbs::spectrum::{tail_cutoff, LengthSpectrum, TailPolicy};
use progibbs::{verify_maximum, Error, StructuredMatrix};

use crate::fmt::num;

const CSV_HEADER: &str = "lambda,temperature,logZ,L,S_nats,S_bits,F,var_length";

#[derive(Parser)]
#[command(
    name = "progibbs",
    version,
    about = "Gibbs ensembles over program-length spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ensemble statistics at one temperature.
    Stats(StatsArgs),
    /// Statistics over a lambda grid, as CSV or JSON records.
    Sweep(SweepArgs),
    /// Check that the Gibbs weights maximize F = lambda L + S.
    Verify(VerifyArgs),
    /// Find lambda with a given mean length.
    Solve(SolveArgs),
    /// Determinant of the matrix with diagonal r, a above and b below.
    Det(DetArgs),
    /// Write the spectrum of binary programs: 2^l strings of each length l.
    GenBinary(GenBinaryArgs),
}

#[derive(Args)]
struct TempArgs {
    /// Lagrange parameter lambda = -beta.
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Temperature T, mapped to lambda = -1/(kconst T), or -ln2/T with --base2.
    #[arg(long, allow_negative_numbers = true)]
    temp: Option<f64>,
    #[arg(long, default_value_t = 1.0, conflicts_with = "base2")]
    kconst: f64,
    /// Weights read 2^(-l/T).
    #[arg(long)]
    base2: bool,
}

impl TempArgs {
    fn resolve(&self) -> Result<TemperatureParam, CliError> {
        let param = match (self.lambda, self.temp) {
            (Some(lambda), None) if self.base2 => TemperatureParam::from_lambda_base2(lambda)?,
            (Some(lambda), None) => TemperatureParam::from_lambda_with(lambda, self.kconst)?,
            (None, Some(t)) if self.base2 => TemperatureParam::from_temperature_base2(t)?,
            (None, Some(t)) => TemperatureParam::from_temperature(t, self.kconst)?,
            _ => {
                return Err(CliError::Usage(
                    "exactly one of --lambda or --temp is required".into(),
                ))
            }
        };
        Ok(param)
    }
}

#[derive(Args)]
struct OutArg {
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    spectrum: PathBuf,
    #[command(flatten)]
    temp: TempArgs,
    /// Treat the spectrum as growing like G^l and certify the tail sum.
    #[arg(long, value_name = "G")]
    tail_check: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tail_eps: f64,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    spectrum: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    lambda_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    lambda_max: f64,
    #[arg(long)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
    format: SweepFormat,
    #[arg(long, default_value_t = 1.0, conflicts_with = "base2")]
    kconst: f64,
    #[arg(long)]
    base2: bool,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    spectrum: PathBuf,
    #[command(flatten)]
    temp: TempArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Also report the Hessian determinant of the first N coordinates.
    #[arg(long, value_name = "N")]
    subset: Option<usize>,
    #[arg(long, default_value_t = 1e-6)]
    fd_step: f64,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    spectrum: PathBuf,
    #[arg(long = "target-L", allow_negative_numbers = true)]
    target_l: f64,
    /// Absolute tolerance on L (default 1e-10 * l_max).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct DetArgs {
    /// Diagonal entries, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    r: Vec<f64>,
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
    /// Also print the dense elimination determinant.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct GenBinaryArgs {
    #[arg(long, required_unless_present = "lambda")]
    max_len: Option<u64>,
    /// Choose the length cutoff so Z at this lambda is within --eps of the infinite sum.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "max_len")]
    lambda: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    eps: f64,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
    Core(Error),
    VerificationFailed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                Error::NoConvergence(_) => 1,
                Error::TargetOutOfRange { .. } | Error::DegenerateSpectrum { .. } => 3,
                Error::DivergentSum { .. } => 4,
                _ => 2,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::VerificationFailed => f.write_str("verification failed"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(args) => cmd_stats(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Det(args) => cmd_det(args),
        Command::GenBinary(args) => cmd_gen_binary(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load(path: &Path) -> Result<LengthSpectrum, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    LengthSpectrum::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: &OutArg, body: &str) -> Result<(), CliError> {
    match &out.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn temperature_of(param: &TemperatureParam) -> f64 {
    param.temperature().unwrap_or(f64::INFINITY)
}

fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    let spectrum = load(&args.spectrum)?;
    let param = args.temp.resolve()?;
    let cutoff = match args.tail_check {
        Some(g) => Some(tail_cutoff(
            &TailPolicy::new(g, args.tail_eps)?,
            param.lambda(),
        )?),
        None => None,
    };
    let s = GibbsState::new(&spectrum, param.lambda())?.stats();
    let mut body = String::new();
    let mut line = |k: &str, v: String| {
        body.push_str(k);
        body.push_str(" = ");
        body.push_str(&v);
        body.push('\n');
    };
    line("lambda", num(param.lambda()));
    line("temperature", num(temperature_of(&param)));
    line("logZ", num(s.log_z));
    line("L", num(s.mean_length));
    line("S_nats", num(s.entropy));
    line("S_bits", num(s.entropy_bits()));
    line("F", num(s.compromise));
    line("var_length", num(s.var_length));
    if let Some(n) = cutoff {
        line("tail_cutoff", n.to_string());
    }
    emit(&args.out, &body)
}

#[derive(Serialize)]
struct SweepRecord {
    lambda: f64,
    temperature: Option<f64>,
    #[serde(rename = "logZ")]
    log_z: f64,
    #[serde(rename = "L")]
    mean_length: f64,
    #[serde(rename = "S_nats")]
    entropy: f64,
    #[serde(rename = "S_bits")]
    entropy_bits: f64,
    #[serde(rename = "F")]
    compromise: f64,
    var_length: f64,
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    if !(args.lambda_min.is_finite() && args.lambda_max.is_finite())
        || args.lambda_min >= args.lambda_max
    {
        return Err(CliError::Usage(format!(
            "need lambda-min < lambda-max, got [{}, {}]",
            args.lambda_min, args.lambda_max
        )));
    }
    if args.steps < 2 {
        return Err(CliError::Usage("steps must be at least 2".into()));
    }
    let spectrum = load(&args.spectrum)?;
    let span = args.lambda_max - args.lambda_min;
    let last = args.steps - 1;
    let mut rows = Vec::with_capacity(args.steps);
    for i in 0..args.steps {
        let lambda = if i == last {
            args.lambda_max
        } else {
            args.lambda_min + span * (i as f64 / last as f64)
        };
        let param = if args.base2 {
            TemperatureParam::from_lambda_base2(lambda)?
        } else {
            TemperatureParam::from_lambda_with(lambda, args.kconst)?
        };
        let s = GibbsState::new(&spectrum, lambda)?.stats();
        rows.push(SweepRecord {
            lambda,
            temperature: param.temperature(),
            log_z: s.log_z,
            mean_length: s.mean_length,
            entropy: s.entropy,
            entropy_bits: s.entropy_bits(),
            compromise: s.compromise,
            var_length: s.var_length,
        });
    }
    let body = match args.format {
        SweepFormat::Csv => {
            let mut body = String::from(CSV_HEADER);
            body.push('\n');
            for r in &rows {
                let fields = [
                    r.lambda,
                    r.temperature.unwrap_or(f64::INFINITY),
                    r.log_z,
                    r.mean_length,
                    r.entropy,
                    r.entropy_bits,
                    r.compromise,
                    r.var_length,
                ];
                let line: Vec<String> = fields.iter().map(|&x| num(x)).collect();
                body.push_str(&line.join(","));
                body.push('\n');
            }
            body
        }
        SweepFormat::Json => {
            let mut body =
                serde_json::to_string_pretty(&rows).map_err(|e| CliError::Io(e.to_string()))?;
            body.push('\n');
            body
        }
    };
    emit(&args.out, &body)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let spectrum = load(&args.spectrum)?;
    let param = args.temp.resolve()?;
    let lambda = param.lambda();
    let m = spectrum.len();
    if let Some(n) = args.subset {
        if n == 0 || n > m {
            return Err(Error::SubsetOutOfRange { n, m }.into());
        }
    }
    let cfg = VerifyConfig::new(args.fd_step, args.samples, args.seed)?;
    let report = verify_maximum(&spectrum, lambda, &cfg)?;

    let mut body = String::new();
    body.push_str(&format!("lambda = {}\n", num(lambda)));
    body.push_str(&format!("m = {m}\n"));
    body.push_str(&format!("logZ = {}\n", num(report.log_z)));
    body.push_str(&format!(
        "[{}] gradient_at_gibbs max_abs = {} tol = {}\n",
        mark(report.grad_ok()),
        num(report.grad_at_gibbs),
        num(report.grad_tol)
    ));
    body.push_str(&format!(
        "[{}] fd_gradient max_dev = {} tol = {}\n",
        mark(report.fd_ok()),
        num(report.fd_gradient_dev),
        num(report.fd_tol)
    ));
    for c in &report.hessian_signs {
        body.push_str(&format!(
            "[{}] hessian_sign n = {} sign = {} expected = {} det = {} closed_form = {}\n",
            mark(c.passed()),
            c.n,
            c.sign,
            c.expected,
            num(c.kernel_det),
            num(c.closed_form_det)
        ));
    }
    body.push_str(&format!(
        "[{}] simplex_max samples = {} max(F - logZ) = {} tol = {}\n",
        mark(report.simplex_ok()),
        report.samples,
        num(report.simplex_excess),
        num(report.simplex_tol)
    ));

    let mut ok = report.passed();
    if let Some(n) = args.subset {
        let top = GibbsState::new(&spectrum, lambda)?
            .log_weights()
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let h = hessian_at_scaled_gibbs(&spectrum, lambda, n, -top)?;
        if h.is_degenerate() {
            let subset_ok = h.det_deviation() <= 1e-10;
            ok &= subset_ok;
            body.push_str(&format!(
                "[{}] subset n = {} det = {} natural_scale = {} degenerate: n = m, det vanishes by scale invariance\n",
                mark(subset_ok),
                n,
                num(h.det),
                num(h.natural_scale)
            ));
        } else {
            let subset_ok = h.sign == h.expected_sign();
            ok &= subset_ok;
            body.push_str(&format!(
                "[{}] subset n = {} sign = {} det = {} closed_form = {}\n",
                mark(subset_ok),
                n,
                h.sign,
                num(h.det),
                num(h.closed_form_det)
            ));
        }
    }
    body.push_str(&format!("result = {}\n", mark(ok)));
    emit(&args.out, &body)?;
    if ok {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    let spectrum = load(&args.spectrum)?;
    let defaults = SolveConfig::for_spectrum(&spectrum);
    let cfg = SolveConfig::new(args.tol.unwrap_or(defaults.tol), args.max_iter, None)?;
    let lambda = solve_lambda(&spectrum, args.target_l, &cfg)?;
    emit(&args.out, &format!("{}\n", num(lambda)))
}

fn cmd_det(args: DetArgs) -> Result<(), CliError> {
    let mat = StructuredMatrix::new(args.r, args.a, args.b)?;
    let mut body = format!("{}\n", num(mat.det()));
    if args.oracle {
        let dense = progibbs::dense_det_oracle(&mat.to_dense(), mat.dim())?;
        body.push_str(&format!("oracle = {}\n", num(dense)));
    }
    emit(&args.out, &body)
}

fn cmd_gen_binary(args: GenBinaryArgs) -> Result<(), CliError> {
    let max_len = match (args.max_len, args.lambda) {
        (Some(n), _) => n,
        (None, Some(lambda)) => tail_cutoff(&TailPolicy::new(2.0, args.eps)?, lambda)?,
        (None, None) => return Err(CliError::Usage("--max-len or --lambda required".into())),
    };
    let spectrum = LengthSpectrum::binary_programs(max_len)?;
    emit(&args.out, &spectrum.to_text())
}
