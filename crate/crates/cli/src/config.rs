//! Optional TOML defaults for the scan flags. Command-line flags win
//! over file values, which win over the built-in defaults.

use std::path::Path;

use ml_partial::verify::VerifyConfig;
use serde::Deserialize;

use crate::output::OutputFormat;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub samples: Option<usize>,
    pub refine: Option<usize>,
    pub tol: Option<f64>,
    pub radius: Option<f64>,
    pub seed: Option<u64>,
    pub format: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }

    pub fn format(&self) -> Result<Option<OutputFormat>, String> {
        match self.format.as_deref() {
            None => Ok(None),
            Some("json") => Ok(Some(OutputFormat::Json)),
            Some("csv") => Ok(Some(OutputFormat::Csv)),
            Some(other) => Err(format!(
                "bad config format value {other:?}; expected \"json\" or \"csv\""
            )),
        }
    }
}

/// Folds the file config and the flags into the scan configuration.
pub fn resolve(
    file: &FileConfig,
    samples: Option<usize>,
    refine: Option<usize>,
    tol: Option<f64>,
    radius: Option<f64>,
    seed: Option<u64>,
) -> VerifyConfig {
    let defaults = VerifyConfig::default();
    VerifyConfig {
        radius: radius.or(file.radius).unwrap_or(defaults.radius),
        boundary_samples: samples.or(file.samples).unwrap_or(defaults.boundary_samples),
        refine_iters: refine.or(file.refine).unwrap_or(defaults.refine_iters),
        tol: tol.or(file.tol).unwrap_or(defaults.tol),
        seed: seed.or(file.seed).unwrap_or(defaults.seed),
    }
}
