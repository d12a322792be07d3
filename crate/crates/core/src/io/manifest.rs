//! The run manifest: configuration, per-depth metrics, claim reports and the
//! hashes of the per-depth curve files, stored as JSON.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{SamplingOptions, SeedSpec};
use crate::metrics::{CurveMetrics, MetricsOptions};
use crate::verify::{RunConfig, TheoremReport, Tolerances, UnitrackRun};

pub const MANIFEST_FORMAT: u32 = 1;
pub const TOOL_NAME: &str = "unitrack";

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("manifest is not valid JSON for this schema: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported manifest format {found}, expected {MANIFEST_FORMAT}")]
    Format { found: u32 },
    #[error("inconsistent manifest: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub depth: usize,
    pub file: String,
    pub samples: usize,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub format: u32,
    pub seed: SeedSpec,
    pub depth_max: usize,
    pub theta_max: f64,
    pub min_samples: usize,
    pub max_samples: usize,
    pub jet_budget: usize,
    pub grid: usize,
    pub zero_eps_rel: f64,
    pub quad_tol: f64,
    pub tolerances: Tolerances,
    pub first_non_graph_depth: Option<usize>,
    pub curves: Vec<CurveFile>,
    pub metrics: Vec<CurveMetrics>,
    pub reports: Vec<TheoremReport>,
    pub wall_clock_seconds: Vec<f64>,
}

impl RunManifest {
    pub fn new(
        run: &UnitrackRun,
        reports: Vec<TheoremReport>,
        curves: Vec<CurveFile>,
    ) -> RunManifest {
        let cfg = &run.config;
        RunManifest {
            tool: TOOL_NAME.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            format: MANIFEST_FORMAT,
            seed: cfg.seed,
            depth_max: cfg.depth_max,
            theta_max: cfg.sampling.theta_max,
            min_samples: cfg.sampling.min_samples,
            max_samples: cfg.sampling.max_samples,
            jet_budget: cfg.jet_budget,
            grid: cfg.grid,
            zero_eps_rel: cfg.metrics.zero_eps_rel,
            quad_tol: cfg.metrics.quad_tol,
            tolerances: cfg.tolerances,
            first_non_graph_depth: crate::verify::first_non_graph_depth(run),
            curves,
            metrics: run.depths.iter().map(|d| d.metrics.clone()).collect(),
            reports,
            wall_clock_seconds: run.depths.iter().map(|d| d.seconds).collect(),
        }
    }

    /// The configuration that reproduces this run.
    pub fn config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            depth_max: self.depth_max,
            jet_budget: self.jet_budget,
            sampling: SamplingOptions {
                theta_max: self.theta_max,
                min_samples: self.min_samples,
                max_samples: self.max_samples,
            },
            metrics: MetricsOptions {
                zero_eps_rel: self.zero_eps_rel,
                quad_tol: self.quad_tol,
            },
            grid: self.grid,
            tolerances: self.tolerances,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest fields are serializable")
    }

    /// Parses and checks a manifest.
    pub fn parse(text: &str) -> Result<RunManifest, ManifestError> {
        let m: RunManifest = serde_json::from_str(text)?;
        if m.format != MANIFEST_FORMAT {
            return Err(ManifestError::Format { found: m.format });
        }
        m.config()
            .validate()
            .map_err(|e| ManifestError::Invalid(e.to_string()))?;
        if !m.curves.is_empty() && m.curves.len() != m.depth_max + 1 {
            return Err(ManifestError::Invalid(format!(
                "{} curve files for depth_max {}",
                m.curves.len(),
                m.depth_max
            )));
        }
        for (k, c) in m.curves.iter().enumerate() {
            if c.depth != k {
                return Err(ManifestError::Invalid(format!(
                    "curve file {k} is labelled depth {}",
                    c.depth
                )));
            }
            if c.file.contains('/') || c.file.contains('\\') || c.file.starts_with('.') {
                return Err(ManifestError::Invalid(format!(
                    "curve file name `{}` must be a plain file name",
                    c.file
                )));
            }
            if c.sha256.len() != 64 || !c.sha256.bytes().all(|b| b.is_ascii_hexdigit()) {
                return Err(ManifestError::Invalid(format!("bad sha256 for depth {k}")));
            }
        }
        Ok(m)
    }
}

/// File name of the curve CSV for one depth.
pub fn curve_file_name(depth: usize) -> String {
    format!("depth_{depth}.csv")
}
