//! Command line front end: point evaluation, bound certification, and
//! beta sweeps, all emitting one JSON (or CSV) record per result.
//!
//! Exit codes: 0 when every check passes (or the evaluation succeeds),
//! 1 when any check fails its bound, 2 on invalid input, 3 when every
//! produced report was hypothesis-violated (the inputs were outside the
//! stated ranges, so nothing was actually certified).

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ml_partial::verify::{
    scan_beta, univalence_spot_check, verify_corollary, verify_lemma, verify_theorem,
    BoundReport, CorollaryId, Status, VerifyConfig, SERIES_TOL,
};
use ml_partial::{build_table, Error, MLParams, RatioCase, RatioKind};
use num_complex::Complex64;

use config::FileConfig;
use output::{Emitter, EvalRecord, Manifest, OutputFormat};

#[derive(Parser)]
#[command(
    name = "ml-partial",
    version,
    about = "Evaluate the normalized Mittag-Leffler function and certify its partial-sum bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Boundary samples per circle scan.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Golden-section iterations per refinement bracket.
    #[arg(long, global = true)]
    refine: Option<usize>,
    /// Margin below this counts as a failure.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Radius of the scanned circle, in (0, 1].
    #[arg(long, global = true)]
    radius: Option<f64>,
    /// Seed for interior spot checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// TOML file with defaults for the flags above.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the function, its derivative, a partial sum, or a ratio.
    Eval(EvalArgs),
    /// Certify a published bound by scanning the closed unit disk.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Sweep a ratio's empirical infimum across a range of beta.
    ScanBeta(ScanBetaArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum What {
    /// Classical two-parameter function E_{alpha,beta}(z).
    Ml,
    /// Normalized function Gamma(beta) z E_{alpha,beta}(z).
    Normalized,
    /// Derivative of the normalized function.
    Derivative,
    /// Partial sum of the normalized function through degree m+1.
    Partial,
    /// One of the four bound ratios (see --case).
    Ratio,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::Ml => "ml",
            What::Normalized => "normalized",
            What::Derivative => "derivative",
            What::Partial => "partial",
            What::Ratio => "ratio",
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Partial-sum index.
    #[arg(long, default_value_t = 0)]
    m: usize,
    /// Evaluation point, real and imaginary parts.
    #[arg(long, num_args = 2, value_names = ["RE", "IM"], allow_negative_numbers = true)]
    z: Vec<f64>,
    #[arg(long, value_enum)]
    what: What,
    /// Ratio to evaluate when --what ratio.
    #[arg(long)]
    case: Option<RatioKind>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Modulus bounds for the function and its derivative.
    Lemma(LemmaArgs),
    /// One of the four partial-sum ratio bounds.
    Theorem(TheoremArgs),
    /// The published special-case constants at alpha = 2.
    Corollary(CorollaryArgs),
    /// Positivity of Re NE'(z) past the derivative threshold.
    Univalence(LemmaArgs),
}

#[derive(Args)]
struct LemmaArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    case: RatioKind,
    /// Partial-sum index.
    #[arg(long, default_value_t = 0)]
    m: usize,
}

#[derive(Args)]
struct CorollaryArgs {
    /// c31a..c31d, c32a..c32d, or all.
    #[arg(long)]
    id: String,
}

#[derive(Args)]
struct ScanBetaArgs {
    #[arg(long)]
    case: RatioKind,
    #[arg(long)]
    alpha: f64,
    /// Partial-sum index.
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long)]
    beta_min: f64,
    #[arg(long)]
    beta_max: f64,
    /// Number of evenly spaced beta values, endpoints included.
    #[arg(long)]
    steps: usize,
}

/// Failure that carries its process exit code.
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::HypothesisViolated { .. } => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError {
            message: format!("output error: {e}"),
            code: 2,
        }
    }
}

/// Tracks produced reports to derive the exit code.
#[derive(Default)]
struct Tally {
    total: usize,
    failed: usize,
    violated: usize,
}

impl Tally {
    fn record(&mut self, report: &BoundReport) {
        self.total += 1;
        match report.status {
            Status::Pass => {}
            Status::Fail => self.failed += 1,
            Status::HypothesisViolated => self.violated += 1,
        }
    }

    fn code(&self) -> u8 {
        if self.failed > 0 {
            1
        } else if self.total > 0 && self.violated == self.total {
            3
        } else {
            0
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("ML_PARTIAL_LOG")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ml-partial: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let file = match &cli.common.config {
        Some(path) => FileConfig::load(path).map_err(CliError::invalid)?,
        None => FileConfig::default(),
    };
    let cfg = config::resolve(
        &file,
        cli.common.samples,
        cli.common.refine,
        cli.common.tol,
        cli.common.radius,
        cli.common.seed,
    );
    cfg.validate().map_err(CliError::from)?;
    let format = match cli.common.format {
        Some(f) => f,
        None => file
            .format()
            .map_err(CliError::invalid)?
            .unwrap_or(OutputFormat::Json),
    };
    let mut emitter = Emitter::new(format);

    match &cli.command {
        Command::Eval(args) => cmd_eval(args, cfg, &mut emitter),
        Command::Verify(sub) => cmd_verify(sub, cfg, &mut emitter),
        Command::ScanBeta(args) => cmd_scan_beta(args, cfg, &mut emitter),
    }
}

fn cmd_eval(args: &EvalArgs, cfg: VerifyConfig, emitter: &mut Emitter) -> Result<u8, CliError> {
    let z = Complex64::new(args.z[0], args.z[1]);
    let params = MLParams::new(args.alpha, args.beta)?;
    let table = build_table(params, SERIES_TOL)?;
    log::debug!(
        "table for alpha={}, beta={} truncated at {} terms",
        args.alpha,
        args.beta,
        table.truncation_index()
    );
    let (value, case_name) = match args.what {
        What::Ml => (ml_partial::eval::eval_ml(&table, z)?, None),
        What::Normalized => (ml_partial::eval::eval_normalized(&table, z)?, None),
        What::Derivative => (
            ml_partial::eval::eval_normalized_derivative(&table, z)?,
            None,
        ),
        What::Partial => (
            ml_partial::eval::eval_partial_sum(&table, args.m, z)?,
            None,
        ),
        What::Ratio => {
            let kind = args.case.ok_or_else(|| {
                CliError::invalid("--what ratio requires --case")
            })?;
            (
                ml_partial::eval::eval_ratio(&table, RatioCase::new(kind, args.m), z)?,
                Some(kind.name()),
            )
        }
    };
    let manifest = Manifest::new("eval", Some(args.alpha), Some(args.beta), Some(args.m), cfg);
    emitter.eval_record(&EvalRecord {
        what: args.what.name(),
        case: case_name,
        alpha: args.alpha,
        beta: args.beta,
        m: args.m,
        z: [z.re, z.im],
        value: [value.re, value.im],
        manifest: &manifest,
    })?;
    Ok(0)
}

fn cmd_verify(
    sub: &VerifyCommand,
    cfg: VerifyConfig,
    emitter: &mut Emitter,
) -> Result<u8, CliError> {
    let mut tally = Tally::default();
    match sub {
        VerifyCommand::Lemma(args) => {
            let params = MLParams::new(args.alpha, args.beta)?;
            let manifest = Manifest::new(
                "verify lemma",
                Some(args.alpha),
                Some(args.beta),
                None,
                cfg,
            );
            for report in verify_lemma(params, &cfg)? {
                tally.record(&report);
                emitter.verify_record(&report, &manifest)?;
            }
        }
        VerifyCommand::Theorem(args) => {
            let params = MLParams::new(args.alpha, args.beta)?;
            let case = RatioCase::new(args.case, args.m);
            let manifest = Manifest::new(
                "verify theorem",
                Some(args.alpha),
                Some(args.beta),
                Some(args.m),
                cfg,
            );
            let report = verify_theorem(params, case, &cfg)?;
            tally.record(&report);
            emitter.verify_record(&report, &manifest)?;
        }
        VerifyCommand::Corollary(args) => {
            let ids = parse_corollary_ids(&args.id)?;
            let manifest = Manifest::new("verify corollary", None, None, Some(0), cfg);
            for id in ids {
                let report = verify_corollary(id, &cfg)?;
                tally.record(&report);
                emitter.verify_record(&report, &manifest)?;
            }
        }
        VerifyCommand::Univalence(args) => {
            let params = MLParams::new(args.alpha, args.beta)?;
            let manifest = Manifest::new(
                "verify univalence",
                Some(args.alpha),
                Some(args.beta),
                None,
                cfg,
            );
            let report = univalence_spot_check(params, &cfg)?;
            tally.record(&report);
            emitter.verify_record(&report, &manifest)?;
        }
    }
    Ok(tally.code())
}

fn parse_corollary_ids(raw: &str) -> Result<Vec<CorollaryId>, CliError> {
    if raw.eq_ignore_ascii_case("all") {
        return Ok(CorollaryId::ALL.to_vec());
    }
    for id in CorollaryId::ALL {
        if raw.eq_ignore_ascii_case(id.name()) {
            return Ok(vec![id]);
        }
    }
    Err(CliError::invalid(format!(
        "unknown corollary id {raw:?}; expected c31a..c31d, c32a..c32d, or all"
    )))
}

fn cmd_scan_beta(
    args: &ScanBetaArgs,
    cfg: VerifyConfig,
    emitter: &mut Emitter,
) -> Result<u8, CliError> {
    if args.steps < 2 {
        return Err(CliError::invalid("--steps must be at least 2"));
    }
    if !(args.beta_min.is_finite() && args.beta_max.is_finite() && args.beta_min < args.beta_max) {
        return Err(CliError::invalid(
            "--beta-min must be finite and strictly below --beta-max",
        ));
    }
    let betas: Vec<f64> = (0..args.steps)
        .map(|i| {
            args.beta_min
                + (args.beta_max - args.beta_min) * i as f64 / (args.steps - 1) as f64
        })
        .collect();
    log::info!(
        "sweeping {} beta values in [{}, {}]",
        betas.len(),
        args.beta_min,
        args.beta_max
    );
    let manifest = Manifest::new("scan-beta", Some(args.alpha), None, Some(args.m), cfg);
    let reports = scan_beta(args.case, args.alpha, args.m, &betas, &cfg)?;
    let mut tally = Tally::default();
    for report in &reports {
        tally.record(report);
        emitter.verify_record(report, &manifest)?;
    }
    Ok(tally.code())
}
