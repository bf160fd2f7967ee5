//! Run configuration: one TOML or JSON file, overridden by flags.

use std::path::Path;

use clap::ValueEnum;
use nearzero::search::{ColoringSpec, JsetTarget, SearchBounds, VdwProblem};
use nearzero::{GroundRing, IntPolynomial, PartialSequence, Rational};
use serde::Deserialize;

pub const DEFAULT_MAX_INDEX: u32 = 12;
pub const DEFAULT_GRID_SCALE: u32 = 10;
pub const DEFAULT_ITERATIONS: u64 = 10_000;
pub const DEFAULT_K: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Witness,
    Jset,
    Laws,
    OracleCompare,
    Eval,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] nearzero::Error),
}

/// The file as written; every field optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub mode: Option<Mode>,
    pub ground: Option<GroundRing>,
    pub sequence: Option<PartialSequence>,
    /// Sequences for `jset`; defaults to `[sequence]`.
    pub sequences: Option<Vec<PartialSequence>>,
    /// Coefficients of `x, x^2, ...` for each polynomial.
    pub polynomials: Option<Vec<IntPolynomial>>,
    pub coloring: Option<ColoringSpec>,
    pub target: Option<JsetTarget>,
    #[serde(default)]
    pub bounds: BoundsConfig,
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub iterations: Option<u64>,
    pub variants: Option<u32>,
    pub expr: Option<String>,
    pub k: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsConfig {
    pub max_index: Option<u32>,
    pub max_set_size: Option<usize>,
    /// Grid spacing `2^-grid_scale`.
    pub grid_scale: Option<u32>,
    pub grid_denominator: Option<u64>,
    pub max_candidates: Option<u64>,
    pub time_limit_ms: Option<u64>,
}

impl FileConfig {
    /// Reads a config file. `.json` and `.toml` are taken at their word;
    /// anything else is JSON if it starts with `{`, TOML otherwise.
    pub fn load(path: &Path) -> Result<FileConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        let json = match path.extension().and_then(|e| e.to_str()) {
            Some("json") => true,
            Some("toml") => false,
            _ => text.trim_start().starts_with('{'),
        };
        FileConfig::parse(&text, json).map_err(|msg| ConfigError::Parse {
            path: path.display().to_string(),
            msg,
        })
    }

    pub fn parse(text: &str, json: bool) -> Result<FileConfig, String> {
        if json {
            serde_json::from_str(text).map_err(|e| e.to_string())
        } else {
            toml::from_str(text).map_err(|e| e.to_string())
        }
    }
}

/// Values given on the command line.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub mode: Option<Mode>,
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub max_index: Option<u32>,
    pub grid_scale: Option<u32>,
    pub iterations: Option<u64>,
    pub variants: Option<u32>,
    pub expr: Option<String>,
    pub k: Option<usize>,
}

/// A fully resolved, validated run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mode: Mode,
    pub ground: GroundRing,
    pub sequence: PartialSequence,
    pub sequences: Vec<PartialSequence>,
    pub polys: Vec<IntPolynomial>,
    pub coloring: Option<ColoringSpec>,
    pub target: JsetTarget,
    pub bounds: SearchBounds,
    pub seed: u64,
    pub workers: usize,
    pub iterations: u64,
    pub variants: u32,
    pub expr: Option<String>,
    pub k: usize,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl RunConfig {
    /// Merges flags over the file over defaults and validates the result
    /// for the selected mode.
    pub fn resolve(file: FileConfig, flags: &Overrides) -> Result<RunConfig, ConfigError> {
        let mode = flags.mode.or(file.mode).ok_or_else(|| {
            ConfigError::Invalid("no mode: pick a subcommand or set `mode` in the config".into())
        })?;
        let sequence = match file.sequence {
            Some(s) => s,
            None => PartialSequence::geometric(Rational::new(1, 2), Rational::new(1, 2))?,
        };
        let sequences = file.sequences.unwrap_or_else(|| vec![sequence.clone()]);

        let b = file.bounds;
        let max_index = flags.max_index.or(b.max_index).unwrap_or(DEFAULT_MAX_INDEX);
        let grid_denominator = match (flags.grid_scale, b.grid_scale, b.grid_denominator) {
            (Some(j), _, _) => pow2(j)?,
            (None, Some(_), Some(_)) => {
                return Err(ConfigError::Invalid(
                    "bounds: give grid_scale or grid_denominator, not both".into(),
                ))
            }
            (None, Some(j), None) => pow2(j)?,
            (None, None, Some(d)) => d,
            (None, None, None) => pow2(DEFAULT_GRID_SCALE)?,
        };
        let bounds = SearchBounds {
            max_index,
            max_set_size: b.max_set_size.unwrap_or(max_index as usize),
            grid_denominator,
            max_candidates: b.max_candidates,
            time_limit_ms: b.time_limit_ms,
        };

        let cfg = RunConfig {
            mode,
            ground: file.ground.unwrap_or(GroundRing::Dyadic { max_scale: 24 }),
            sequence,
            sequences,
            polys: file.polynomials.unwrap_or_default(),
            coloring: file.coloring,
            target: file.target.unwrap_or(JsetTarget::Ground),
            bounds,
            seed: flags.seed.or(file.seed).unwrap_or(0),
            workers: flags
                .workers
                .or(file.workers)
                .unwrap_or_else(default_workers),
            iterations: flags
                .iterations
                .or(file.iterations)
                .unwrap_or(DEFAULT_ITERATIONS),
            variants: flags.variants.or(file.variants).unwrap_or(1),
            expr: flags.expr.clone().or(file.expr),
            k: flags.k.or(file.k).unwrap_or(DEFAULT_K),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.workers == 0 {
            return Err(ConfigError::Invalid("workers must be at least 1".into()));
        }
        self.ground.validate()?;
        match self.mode {
            Mode::Witness | Mode::OracleCompare => {
                self.bounds.validate()?;
                self.problem()?.validate()?;
                self.check_sequence_length(&self.sequence)?;
            }
            Mode::Jset => {
                self.bounds.validate()?;
                if self.sequences.is_empty() {
                    return Err(ConfigError::Invalid("jset: `sequences` is empty".into()));
                }
                for f in &self.sequences {
                    self.check_sequence_length(f)?;
                }
                if let JsetTarget::Cell { coloring, color } = &self.target {
                    coloring.validate()?;
                    if *color >= coloring.color_count() {
                        return Err(ConfigError::Invalid(format!(
                            "target color {color} out of range for {} colors",
                            coloring.color_count()
                        )));
                    }
                }
            }
            Mode::Laws => {
                if self.iterations == 0 {
                    return Err(ConfigError::Invalid("iterations must be positive".into()));
                }
            }
            Mode::Eval => {
                if self.expr.is_none() {
                    return Err(ConfigError::Invalid("eval: no expression given".into()));
                }
                if self.k == 0 {
                    return Err(ConfigError::Invalid("k must be at least 1".into()));
                }
            }
        }
        Ok(())
    }

    fn check_sequence_length(&self, f: &PartialSequence) -> Result<(), ConfigError> {
        match f.len_bound() {
            Some(len) if len < self.bounds.max_index => Err(ConfigError::Invalid(format!(
                "explicit sequence has {len} terms but max_index is {}",
                self.bounds.max_index
            ))),
            _ => Ok(()),
        }
    }

    /// The van der Waerden instance; needs `polynomials` and `coloring`.
    pub fn problem(&self) -> Result<VdwProblem, ConfigError> {
        if self.polys.is_empty() {
            return Err(ConfigError::Invalid(
                "`polynomials` is missing or empty".into(),
            ));
        }
        let coloring = self
            .coloring
            .clone()
            .ok_or_else(|| ConfigError::Invalid("`coloring` is missing".into()))?;
        Ok(VdwProblem {
            ground: self.ground.clone(),
            polys: self.polys.clone(),
            sequence: self.sequence.clone(),
            coloring,
        })
    }
}

fn pow2(j: u32) -> Result<u64, ConfigError> {
    if (1..=62).contains(&j) {
        Ok(1 << j)
    } else {
        Err(ConfigError::Invalid(format!(
            "grid scale {j} outside 1..=62"
        )))
    }
}
