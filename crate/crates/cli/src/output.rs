//! Record emission. Every run prints one JSON object (or CSV row) per
//! result, with floats rendered at 17 significant digits so piping the
//! output through a parser reproduces the exact doubles.

use std::io::{self, Write};

use clap::ValueEnum;
use ml_partial::verify::{BoundReport, VerifyConfig};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Provenance block attached to every record.
#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub command: String,
    pub params: ManifestParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub config: VerifyConfig,
    pub tool_version: &'static str,
    pub timestamp: String,
}

/// Inputs as given on the command line; a field is null when the
/// subcommand varies it per record (scan-beta, corollary --id all).
#[derive(Debug, Clone, Serialize)]
pub struct ManifestParams {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

impl Manifest {
    pub fn new(
        command: &str,
        alpha: Option<f64>,
        beta: Option<f64>,
        m: Option<usize>,
        config: VerifyConfig,
    ) -> Manifest {
        Manifest {
            command: command.to_string(),
            params: ManifestParams { alpha, beta },
            m,
            config,
            tool_version: env!("CARGO_PKG_VERSION"),
            timestamp: chrono::Utc::now().to_rfc3339(),
        }
    }
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    #[serde(flatten)]
    report: &'a BoundReport,
    manifest: &'a Manifest,
}

/// One point evaluation.
#[derive(Serialize)]
pub struct EvalRecord<'a> {
    pub what: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<&'static str>,
    pub alpha: f64,
    pub beta: f64,
    pub m: usize,
    pub z: [f64; 2],
    pub value: [f64; 2],
    pub manifest: &'a Manifest,
}

/// serde_json formatter that prints every float as `{:.16e}`: 17
/// significant digits, enough to round-trip any f64.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

fn print_json<T: Serialize>(record: &T) -> io::Result<()> {
    let stdout = io::stdout();
    let mut handle = stdout.lock();
    let mut ser = serde_json::Serializer::with_formatter(&mut handle, SciFormatter);
    record
        .serialize(&mut ser)
        .map_err(io::Error::other)?;
    handle.write_all(b"\n")
}

fn sci(value: f64) -> String {
    format!("{value:.16e}")
}

fn sci_opt(value: Option<f64>) -> String {
    value.map(sci).unwrap_or_default()
}

const VERIFY_HEADER: &str = "case,alpha,beta,m,paper_bound,empirical_inf,argmin_theta,margin,\
                             samples_used,status,command,tool_version,timestamp";

fn status_name(report: &BoundReport) -> &'static str {
    use ml_partial::verify::Status;
    match report.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::HypothesisViolated => "hypothesis-violated",
    }
}

/// Emits verify/scan records in the chosen format. CSV prints the header
/// once per invocation, before the first row.
pub struct Emitter {
    format: OutputFormat,
    rows: usize,
}

impl Emitter {
    pub fn new(format: OutputFormat) -> Emitter {
        Emitter { format, rows: 0 }
    }

    pub fn verify_record(&mut self, report: &BoundReport, manifest: &Manifest) -> io::Result<()> {
        match self.format {
            OutputFormat::Json => print_json(&VerifyRecord { report, manifest }),
            OutputFormat::Csv => {
                let stdout = io::stdout();
                let mut w = stdout.lock();
                if self.rows == 0 {
                    writeln!(w, "{VERIFY_HEADER}")?;
                }
                self.rows += 1;
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    report.case.name(),
                    sci(report.alpha),
                    sci(report.beta),
                    report.m,
                    sci(report.paper_bound),
                    sci_opt(report.empirical_inf),
                    sci_opt(report.argmin_theta),
                    sci_opt(report.margin),
                    report.samples_used,
                    status_name(report),
                    manifest.command,
                    manifest.tool_version,
                    manifest.timestamp,
                )
            }
        }
    }

    pub fn eval_record(&mut self, record: &EvalRecord) -> io::Result<()> {
        match self.format {
            OutputFormat::Json => print_json(record),
            OutputFormat::Csv => {
                let stdout = io::stdout();
                let mut w = stdout.lock();
                if self.rows == 0 {
                    writeln!(
                        w,
                        "what,case,alpha,beta,m,z_re,z_im,value_re,value_im,command,\
                         tool_version,timestamp"
                    )?;
                }
                self.rows += 1;
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    record.what,
                    record.case.unwrap_or(""),
                    sci(record.alpha),
                    sci(record.beta),
                    record.m,
                    sci(record.z[0]),
                    sci(record.z[1]),
                    sci(record.value[0]),
                    sci(record.value[1]),
                    record.manifest.command,
                    record.manifest.tool_version,
                    record.manifest.timestamp,
                )
            }
        }
    }
}
