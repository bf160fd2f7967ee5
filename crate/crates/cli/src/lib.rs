//! Command-line front end for `nearzero`: witness and J-set searches, the
//! law suites, oracle comparison and expression evaluation.

pub mod config;
pub mod run;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use config::{ConfigError, FileConfig, Mode, Overrides, RunConfig};
use run::{Format, Outcome, EXIT_CONFIG};

#[derive(Debug, Parser)]
#[command(
    name = "nearzero",
    version,
    about = "Certified search for monochromatic polynomial configurations near zero"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Run configuration (TOML or JSON).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,
    /// Search threads [default: available parallelism].
    #[arg(long, global = true, value_name = "N")]
    pub workers: Option<usize>,
    /// JSON report (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable report.
    #[arg(long, global = true)]
    pub text: bool,
    /// Index sets are drawn from 1..=N.
    #[arg(long, global = true, value_name = "N")]
    pub max_index: Option<u32>,
    /// Grid spacing 2^-J for the base point a.
    #[arg(long, global = true, value_name = "J")]
    pub grid_scale: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a monochromatic {a + p_i(sigma_F)} and verify it.
    Witness,
    /// Search for a common shift pattern inside a target set.
    Jset,
    /// Run the algebraic law suites.
    Laws {
        /// Random cases per law.
        #[arg(long)]
        iterations: Option<u64>,
    },
    /// Compare the search engine with the brute-force oracle.
    OracleCompare {
        /// Number of colorings: the configured one, then seeded random ones.
        #[arg(long)]
        variants: Option<u32>,
    },
    /// Parse a symbolic polynomial and print pi and its polynomial image.
    Eval {
        expr: Option<String>,
        /// Largest allowed term length.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Use the mode named in the config file.
    Run,
}

impl Cli {
    fn overrides(&self) -> Overrides {
        let c = &self.common;
        let mut o = Overrides {
            seed: c.seed,
            workers: c.workers,
            max_index: c.max_index,
            grid_scale: c.grid_scale,
            ..Default::default()
        };
        match &self.command {
            Command::Witness => o.mode = Some(Mode::Witness),
            Command::Jset => o.mode = Some(Mode::Jset),
            Command::Laws { iterations } => {
                o.mode = Some(Mode::Laws);
                o.iterations = *iterations;
            }
            Command::OracleCompare { variants } => {
                o.mode = Some(Mode::OracleCompare);
                o.variants = *variants;
            }
            Command::Eval { expr, k } => {
                o.mode = Some(Mode::Eval);
                o.expr = expr.clone();
                o.k = *k;
            }
            Command::Run => {}
        }
        o
    }

    pub fn format(&self) -> Format {
        if self.common.text {
            Format::Text
        } else {
            Format::Json
        }
    }

    pub fn execute(&self) -> Result<Outcome, ConfigError> {
        let file = match &self.common.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let cfg = RunConfig::resolve(file, &self.overrides())?;
        run::run(&cfg, self.format())
    }
}

/// Parses `args`, runs, prints the report, and returns the exit status.
pub fn main_with(args: impl IntoIterator<Item = impl Into<OsString> + Clone>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { 0 };
        }
    };
    match cli.execute() {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", out.report);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CONFIG
        }
    }
}
