//! Experiment configuration, dispatch and reports.
//!
//! A run is described by one JSON document ([`ExperimentConfig`]) and produces
//! an [`ExperimentReport`] plus optional CSV artifacts. Failures map onto the
//! process exit codes through [`HarnessError::exit_code`].

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bisector::{bisector_intercept_set, intercept_polynomial, BisectorSummary, PlanarPoint};
use crate::error::Error;
use crate::exact::Rational;
use crate::generate::{generate_set, SetSpec};
use crate::ground::GroundSet;
use crate::incidence::{build_lines, write_points_csv, IncidenceReport, RichPointReport};
use crate::parallel::{ComputeOptions, DEFAULT_MEMORY_CAP};
use crate::poly::{degeneracy_test, difference_polynomial, divide_by_linear, slope_gap, BivariatePolynomial, DegeneracyVerdict};
use crate::quotient::{
    exponent_scan, quadruple_histogram, quotient_set, verify_chain, write_histogram_csv, write_scan_csv,
    write_values_csv, ChainReport, ScanOptions, ScanReport,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest `|A|` accepted by the quartic-cost experiments without
/// `allow_large`.
pub const DESK_SCALE_LIMIT: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Degeneracy,
    Quotient,
    Chain,
    RichPoints,
    Incidences,
    ExponentScan,
    Bisector,
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        f.write_str(&s)
    }
}

fn default_memory_cap() -> usize {
    DEFAULT_MEMORY_CAP
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<BivariatePolynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<SetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thresholds: Option<Vec<u64>>,
    /// Point set for `incidences`; defaults to the grid `A x A`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<(Rational, Rational)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub workers: usize,
    #[serde(default = "default_memory_cap")]
    pub memory_cap: usize,
    /// Overrides the seed of a random set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub allow_degenerate: bool,
    #[serde(default)]
    pub allow_large: bool,
}

impl ExperimentConfig {
    pub fn new(experiment: Experiment) -> Self {
        ExperimentConfig {
            experiment,
            g: None,
            set: None,
            sizes: None,
            thresholds: None,
            points: None,
            output: None,
            workers: 0,
            memory_cap: DEFAULT_MEMORY_CAP,
            seed: None,
            allow_degenerate: false,
            allow_large: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn compute(&self) -> ComputeOptions {
        ComputeOptions { workers: self.workers, memory_cap: self.memory_cap }
    }

    fn require_g(&self) -> Result<&BivariatePolynomial, HarnessError> {
        self.g.as_ref().ok_or_else(|| missing("g", self.experiment))
    }

    fn require_set(&self) -> Result<GroundSet, HarnessError> {
        let spec = self.set.as_ref().ok_or_else(|| missing("set", self.experiment))?;
        let spec = match self.seed {
            Some(seed) => spec.with_seed(seed),
            None => spec.clone(),
        };
        generate_set(&spec).map_err(|e| HarnessError::Config(format!("field `set`: {e}")))
    }

    fn require_sizes(&self) -> Result<&[usize], HarnessError> {
        self.sizes.as_deref().ok_or_else(|| missing("sizes", self.experiment))
    }

    fn guard_size(&self, n: usize) -> Result<(), HarnessError> {
        if n > DESK_SCALE_LIMIT && !self.allow_large {
            return Err(HarnessError::Guardrail(format!(
                "|A| = {n} exceeds {DESK_SCALE_LIMIT}; pass --allow-large to run anyway"
            )));
        }
        Ok(())
    }

    fn gate_degenerate(&self, g: &BivariatePolynomial, allow: bool) -> Result<DegeneracyVerdict, HarnessError> {
        let verdict = degeneracy_test(g);
        if verdict.degenerate && !allow {
            return Err(HarnessError::Hypothesis(verdict.describe()));
        }
        Ok(verdict)
    }
}

fn missing(field: &str, experiment: Experiment) -> HarnessError {
    HarnessError::Config(format!("field `{field}` is required for experiment `{experiment}`"))
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("theorem hypotheses violated: {0}")]
    Hypothesis(String),
    #[error("{0}")]
    Guardrail(String),
    #[error(transparent)]
    Compute(Error),
    #[error("i/o error: {0}")]
    Io(String),
}

impl HarnessError {
    /// 1 usage/input error, 2 hypothesis violation, 3 resource cap exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Hypothesis(_) | HarnessError::Compute(Error::HypothesisViolated(_)) => 2,
            HarnessError::Guardrail(_) | HarnessError::Compute(Error::ResourceCap { .. }) => 3,
            _ => 1,
        }
    }
}

impl From<Error> for HarnessError {
    fn from(e: Error) -> Self {
        HarnessError::Compute(e)
    }
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegeneracyResult {
    pub polynomial: String,
    pub degree: Option<u32>,
    pub verdict: DegeneracyVerdict,
    /// Whether long division by `y2 - y1` agrees with the verdict.
    pub division_oracle_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientResult {
    pub polynomial: String,
    pub degenerate: bool,
    pub set_size: usize,
    pub quotient_size: usize,
    pub min: Option<Rational>,
    pub max: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RichPointsResult {
    pub polynomial: String,
    pub degree: u32,
    pub set_size: usize,
    pub total_weight: u64,
    pub distinct_lines: usize,
    pub max_line_multiplicity: u64,
    /// Distinct lines with multiplicity above the degree.
    pub multiplicity_violations: usize,
    pub point_count: usize,
    pub max_point_multiplicity: u64,
    /// `d min(|A|, |B|)`.
    pub pointwise_bound: u64,
    pub pointwise_bound_holds: bool,
    /// Ordered distinct-slope instance pairs summed over all points.
    pub distinct_slope_pairs: u64,
    /// `|A|^2 |B| (|B| - 1)`.
    pub distinct_slope_pairs_expected: u64,
    pub thresholds: Vec<RichPointReport>,
    pub non_increasing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IncidencesResult {
    pub polynomial: String,
    pub set_size: usize,
    #[serde(flatten)]
    pub report: IncidenceReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BisectorResult {
    #[serde(flatten)]
    pub summary: BisectorSummary,
    pub quotient_polynomial: String,
    /// Intercept set equals the quotient set of `-(x^2 + y^2)/2`.
    pub matches_quotient_set: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ExperimentResult {
    Degeneracy(DegeneracyResult),
    Quotient(QuotientResult),
    Chain(ChainReport),
    RichPoints(RichPointsResult),
    Incidences(IncidencesResult),
    ExponentScan(ScanReport),
    Bisector(BisectorResult),
}

/// A CSV artifact; written next to the JSON report as `<stem>.<name>.csv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub name: &'static str,
    pub contents: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub schema: u32,
    pub tool_version: &'static str,
    pub experiment: Experiment,
    pub config: ExperimentConfig,
    pub elapsed_ms: f64,
    pub result: ExperimentResult,
    #[serde(skip)]
    pub artifacts: Vec<Artifact>,
}

impl ExperimentReport {
    /// The result section alone: every count, free of timing and config echo.
    pub fn counts_json(&self) -> String {
        serde_json::to_string(&self.result).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Writes the JSON report to `path` and each artifact beside it.
    pub fn write(&self, path: &Path) -> Result<Vec<PathBuf>, HarnessError> {
        std::fs::write(path, self.to_json_pretty() + "\n")?;
        let mut written = vec![path.to_path_buf()];
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("report");
        for a in &self.artifacts {
            let p = path.with_file_name(format!("{stem}.{}.csv", a.name));
            std::fs::write(&p, &a.contents)?;
            written.push(p);
        }
        Ok(written)
    }
}

fn csv_artifact(
    name: &'static str,
    f: impl FnOnce(&mut Vec<u8>) -> crate::error::Result<()>,
) -> Result<Artifact, HarnessError> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    Ok(Artifact { name, contents: String::from_utf8(buf).expect("csv output is utf-8") })
}

/// Runs one experiment. Writes nothing; see [`ExperimentReport::write`].
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let started = Instant::now();
    let opts = config.compute();
    let mut artifacts = Vec::new();
    let result = match config.experiment {
        Experiment::Degeneracy => {
            let g = config.require_g()?;
            let verdict = degeneracy_test(g);
            let (_, rem) = divide_by_linear(&difference_polynomial(g), &slope_gap())?;
            ExperimentResult::Degeneracy(DegeneracyResult {
                polynomial: g.to_string(),
                degree: g.total_degree(),
                division_oracle_agrees: rem.is_zero() == verdict.degenerate,
                verdict,
            })
        }
        Experiment::Quotient => {
            let g = config.require_g()?;
            let set = config.require_set()?;
            config.guard_size(set.len())?;
            let verdict = config.gate_degenerate(g, config.allow_degenerate)?;
            let x = quotient_set(g, &set, &opts)?;
            artifacts.push(csv_artifact("quotient", |b| write_values_csv("x", x.values(), b))?);
            ExperimentResult::Quotient(QuotientResult {
                polynomial: g.to_string(),
                degenerate: verdict.degenerate,
                set_size: set.len(),
                quotient_size: x.len(),
                min: x.values().first().cloned(),
                max: x.values().last().cloned(),
            })
        }
        Experiment::Chain => {
            let g = config.require_g()?;
            let set = config.require_set()?;
            config.guard_size(set.len())?;
            config.gate_degenerate(g, false)?;
            let degree = g.total_degree().unwrap_or(0);
            let report = verify_chain(g, &set, degree, &opts)?;
            let hist = quadruple_histogram(g, &set, &opts)?;
            artifacts.push(csv_artifact("histogram", |b| write_histogram_csv(&hist, b))?);
            ExperimentResult::Chain(report)
        }
        Experiment::RichPoints => {
            let g = config.require_g()?;
            let set = config.require_set()?;
            config.guard_size(set.len())?;
            config.gate_degenerate(g, false)?;
            let degree = g.total_degree().unwrap_or(0);
            let lines = build_lines(g, &set, &set)?;
            let points = lines.intersection_points(&opts)?;
            let max_n = points.iter().map(|p| p.count).max().unwrap_or(0);
            let thresholds = match &config.thresholds {
                Some(ts) => ts.clone(),
                None => (2..=max_n.max(2)).collect(),
            };
            let reports = thresholds
                .iter()
                .map(|&t| RichPointReport::from_points(&points, t, lines.total_weight()))
                .collect::<Result<Vec<_>, _>>()?;
            let mut sorted = reports.clone();
            sorted.sort_by_key(|r| r.threshold);
            let n = set.len() as u64;
            let pointwise_bound = degree as u64 * n;
            artifacts.push(csv_artifact("points", |b| write_points_csv(&points, b))?);
            ExperimentResult::RichPoints(RichPointsResult {
                polynomial: g.to_string(),
                degree,
                set_size: set.len(),
                total_weight: lines.total_weight(),
                distinct_lines: lines.lines().len(),
                max_line_multiplicity: lines.max_multiplicity(),
                multiplicity_violations: lines.multiplicity_violations(degree as u64).len(),
                point_count: points.len(),
                max_point_multiplicity: max_n,
                pointwise_bound,
                pointwise_bound_holds: max_n <= pointwise_bound,
                distinct_slope_pairs: points.iter().map(|p| p.distinct_slope_pairs()).sum(),
                distinct_slope_pairs_expected: n * n * n * n.saturating_sub(1),
                non_increasing: sorted.windows(2).all(|w| w[0].count >= w[1].count),
                thresholds: reports,
            })
        }
        Experiment::Incidences => {
            let g = config.require_g()?;
            let set = config.require_set()?;
            let lines = build_lines(g, &set, &set)?;
            let points: Vec<PlanarPoint> = match &config.points {
                Some(ps) => ps.iter().map(|(x, y)| PlanarPoint::new(x.clone(), y.clone())).collect(),
                None => set
                    .iter()
                    .flat_map(|x| set.iter().map(move |y| PlanarPoint::new(x.clone(), y.clone())))
                    .collect(),
            };
            let report = opts.install(|| lines.incidences(&points));
            ExperimentResult::Incidences(IncidencesResult { polynomial: g.to_string(), set_size: set.len(), report })
        }
        Experiment::ExponentScan => {
            let g = config.require_g()?;
            let family = config.set.as_ref().ok_or_else(|| missing("set", config.experiment))?;
            let family = match config.seed {
                Some(seed) => family.with_seed(seed),
                None => family.clone(),
            };
            let sizes = config.require_sizes()?;
            if let Some(&largest) = sizes.iter().max() {
                config.guard_size(largest)?;
            }
            config.gate_degenerate(g, false)?;
            let scan = exponent_scan(g, &family, sizes, &ScanOptions { compute: opts, allow_degenerate: false })
                .map_err(|e| match e {
                    Error::TooFewSizes | Error::SizesNotIncreasing => HarnessError::Config(format!("field `sizes`: {e}")),
                    other => other.into(),
                })?;
            artifacts.push(csv_artifact("scan", |b| write_scan_csv(&scan, b))?);
            ExperimentResult::ExponentScan(scan)
        }
        Experiment::Bisector => {
            let set = config.require_set()?;
            if set.len() < 2 {
                return Err(HarnessError::Config("field `set`: bisector experiment needs |A| >= 2".into()));
            }
            let out = opts.install(|| bisector_intercept_set(&set));
            let g = intercept_polynomial();
            let x = quotient_set(&g, &set, &opts)?;
            artifacts.push(csv_artifact("intercepts", |b| write_values_csv("y", &out.values, b))?);
            ExperimentResult::Bisector(BisectorResult {
                summary: out.summary,
                quotient_polynomial: g.to_string(),
                matches_quotient_set: x.values() == out.values.as_slice(),
            })
        }
    };
    Ok(ExperimentReport {
        schema: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        experiment: config.experiment,
        config: config.clone(),
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        result,
        artifacts,
    })
}
