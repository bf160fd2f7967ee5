//! Dispatch of a resolved [`RunConfig`] and rendering of its report.

use std::fmt::Write as _;

use nearzero::laws::{self, Gen, LawResult};
use nearzero::search::{
    brute_oracle, candidate_values, enumeration_min, find_jset_witness, find_vdw_witness,
    verify_witness, ColoringSpec, JsetWitness, SearchOutcome, SearchReport, SearchStats,
    WitnessVdW,
};
use nearzero::syntax::parse_sympoly;
use nearzero::{RatPolynomial, Rational, SymPoly};
use serde::Serialize;

use crate::config::{ConfigError, Mode, RunConfig};

pub const EXIT_FOUND: i32 = 0;
/// A law, oracle comparison or verification failed.
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NONE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Rendered report and exit status.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
    pub warnings: Vec<String>,
}

pub fn run(cfg: &RunConfig, format: Format) -> Result<Outcome, ConfigError> {
    match cfg.mode {
        Mode::Witness => witness(cfg, format),
        Mode::Jset => jset(cfg, format),
        Mode::Laws => law_suite(cfg, format),
        Mode::OracleCompare => oracle_compare(cfg, format),
        Mode::Eval => eval(cfg, format),
    }
}

fn outcome_name<W>(o: &SearchOutcome<W>) -> &'static str {
    match o {
        SearchOutcome::Found(_) => "found",
        SearchOutcome::NotFound => "none",
        SearchOutcome::BudgetExceeded => "budget_exceeded",
    }
}

fn search_code<W>(o: &SearchOutcome<W>) -> i32 {
    match o {
        SearchOutcome::Found(_) => EXIT_FOUND,
        SearchOutcome::NotFound => EXIT_NONE,
        SearchOutcome::BudgetExceeded => EXIT_BUDGET,
    }
}

fn render<T: Serialize>(report: &T, format: Format, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        Format::Text => text(),
    }
}

fn join(xs: &[Rational]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn stats_line(s: &SearchStats) -> String {
    format!(
        "stats: {} examined, {} pruned, {} ms\n",
        s.candidates_examined, s.pruned, s.elapsed_ms
    )
}

#[derive(Serialize)]
struct WitnessReport<'a> {
    mode: &'static str,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(flatten)]
    witness: Option<&'a WitnessVdW>,
    stats: &'a SearchStats,
    warnings: &'a [String],
}

fn witness(cfg: &RunConfig, format: Format) -> Result<Outcome, ConfigError> {
    let problem = cfg.problem()?;
    let warnings = problem.warnings(&cfg.bounds);
    let SearchReport { outcome, stats } = find_vdw_witness(&problem, &cfg.bounds, cfg.workers)?;
    let verified = outcome.found().map(|w| verify_witness(w, &problem));
    let report = WitnessReport {
        mode: "witness",
        outcome: outcome_name(&outcome),
        verified,
        witness: outcome.found(),
        stats: &stats,
        warnings: &warnings,
    };
    let code = match verified {
        Some(false) => EXIT_MISMATCH,
        _ => search_code(&outcome),
    };
    let text = || {
        let mut s = format!("outcome: {}\n", report.outcome);
        if let Some(w) = outcome.found() {
            let _ = writeln!(s, "a = {}", w.a);
            let _ = writeln!(s, "F = {:?}", w.index_set.to_vec());
            let _ = writeln!(s, "sigma = {}", w.sigma);
            let _ = writeln!(s, "color = {}", w.color);
            let _ = writeln!(s, "values = {}", join(&w.values));
            if let Some(t) = &w.trace {
                let _ = writeln!(s, "x = {}", t.x);
                for (i, (img, pi)) in t.images.iter().zip(&t.pis).enumerate() {
                    let _ = writeln!(s, "T_F^eta{} f(x) = {img}  (pi = {pi})", i + 1);
                }
            }
            let _ = writeln!(s, "verified: {}", verified == Some(true));
        }
        s + &stats_line(&stats)
    };
    Ok(Outcome {
        code,
        report: render(&report, format, text),
        warnings,
    })
}

#[derive(Serialize)]
struct JsetReport<'a> {
    mode: &'static str,
    outcome: &'static str,
    #[serde(flatten)]
    witness: Option<&'a JsetWitness>,
    stats: &'a SearchStats,
}

fn jset(cfg: &RunConfig, format: Format) -> Result<Outcome, ConfigError> {
    let target = &cfg.target;
    let SearchReport { outcome, stats } = find_jset_witness(
        &cfg.ground,
        &cfg.sequences,
        &|x| target.contains(x),
        &cfg.bounds,
        cfg.workers,
    )?;
    let report = JsetReport {
        mode: "jset",
        outcome: outcome_name(&outcome),
        witness: outcome.found(),
        stats: &stats,
    };
    let text = || {
        let mut s = format!("outcome: {}\n", report.outcome);
        if let Some(w) = outcome.found() {
            let _ = writeln!(s, "a = {}", w.a);
            let _ = writeln!(s, "F = {:?}", w.index_set.to_vec());
            let _ = writeln!(s, "sigmas = {}", join(&w.sigmas));
            let _ = writeln!(s, "values = {}", join(&w.values));
        }
        s + &stats_line(&stats)
    };
    Ok(Outcome {
        code: search_code(&outcome),
        report: render(&report, format, text),
        warnings: Vec::new(),
    })
}

#[derive(Serialize)]
struct LawsReport<'a> {
    mode: &'static str,
    seed: u64,
    iterations: u64,
    passed: bool,
    laws: &'a [LawResult],
}

fn law_suite(cfg: &RunConfig, format: Format) -> Result<Outcome, ConfigError> {
    let results = laws::run_suite(cfg.seed, cfg.iterations);
    let passed = results.iter().all(LawResult::passed);
    let report = LawsReport {
        mode: "laws",
        seed: cfg.seed,
        iterations: cfg.iterations,
        passed,
        laws: &results,
    };
    let text = || {
        let mut s = String::new();
        for r in &results {
            let mark = if r.passed() { "ok  " } else { "FAIL" };
            let _ = writeln!(
                s,
                "{mark} {} ({} checked, {} skipped, {} failed)",
                r.name, r.checked, r.skipped, r.failures
            );
            if let Some(f) = &r.first_failure {
                let _ = writeln!(s, "     first failure: {f}");
            }
        }
        s
    };
    Ok(Outcome {
        code: if passed { EXIT_FOUND } else { EXIT_MISMATCH },
        report: render(&report, format, text),
        warnings: Vec::new(),
    })
}

#[derive(Serialize)]
struct Comparison {
    coloring: ColoringSpec,
    oracle_witnesses: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_min: Option<WitnessVdW>,
    #[serde(skip_serializing_if = "Option::is_none")]
    engine: Option<WitnessVdW>,
    agree: bool,
}

#[derive(Serialize)]
struct OracleReport<'a> {
    mode: &'static str,
    seed: u64,
    mismatches: usize,
    variants: &'a [Comparison],
}

/// Engine versus brute force on the configured coloring and then on
/// seeded random colorings, up to `variants` instances in total.
fn oracle_compare(cfg: &RunConfig, format: Format) -> Result<Outcome, ConfigError> {
    let base = cfg.problem()?;
    let mut gen = Gen::new(cfg.seed);
    let mut points = None;
    let mut rows = Vec::new();
    for i in 0..cfg.variants.max(1) {
        let mut problem = base.clone();
        if i > 0 {
            // only reached once the oracle has accepted the universe size
            if points.is_none() {
                points = Some(candidate_values(&base, &cfg.bounds)?);
            }
            problem.coloring = gen.coloring(points.as_deref().unwrap_or_default());
        }
        let all = brute_oracle(&problem, &cfg.bounds)?;
        let oracle_min = enumeration_min(&all).cloned();
        let report = find_vdw_witness(&problem, &cfg.bounds, cfg.workers)?;
        let engine = report.outcome.found().cloned().map(|mut w| {
            w.trace = None;
            w
        });
        let agree = match (&engine, &oracle_min) {
            (Some(e), Some(o)) => e.same_configuration(o),
            (None, None) => report.outcome == SearchOutcome::NotFound,
            _ => false,
        };
        rows.push(Comparison {
            coloring: problem.coloring,
            oracle_witnesses: all.len(),
            oracle_min,
            engine,
            agree,
        });
    }
    let mismatches = rows.iter().filter(|r| !r.agree).count();
    let report = OracleReport {
        mode: "oracle-compare",
        seed: cfg.seed,
        mismatches,
        variants: &rows,
    };
    let text = || {
        let mut s = String::new();
        for (i, r) in rows.iter().enumerate() {
            let first = r.engine.as_ref().map_or("none".to_string(), |w| {
                format!("a = {}, F = {:?}", w.a, w.index_set.to_vec())
            });
            let _ = writeln!(
                s,
                "{} variant {i}: {} oracle witnesses, engine {first}",
                if r.agree { "ok  " } else { "FAIL" },
                r.oracle_witnesses
            );
        }
        let _ = writeln!(s, "mismatches: {mismatches}");
        s
    };
    Ok(Outcome {
        code: if mismatches == 0 {
            EXIT_FOUND
        } else {
            EXIT_MISMATCH
        },
        report: render(&report, format, text),
        warnings: Vec::new(),
    })
}

#[derive(Serialize)]
struct EvalReport {
    mode: &'static str,
    canonical: String,
    terms: SymPoly,
    pi: Rational,
    poly_image: String,
    in_ground: bool,
}

fn eval(cfg: &RunConfig, format: Format) -> Result<Outcome, ConfigError> {
    let expr = cfg.expr.as_deref().unwrap_or_default();
    let poly = parse_sympoly(expr, cfg.k)?;
    let pi = poly.pi();
    let image: RatPolynomial = poly.poly_image();
    let report = EvalReport {
        mode: "eval",
        canonical: poly.to_string(),
        in_ground: cfg.ground.member(&pi),
        terms: poly,
        pi,
        poly_image: image.to_string(),
    };
    let text = || {
        format!(
            "{}\npi = {}\nP_x = {}\n",
            report.canonical, report.pi, report.poly_image
        )
    };
    Ok(Outcome {
        code: EXIT_FOUND,
        report: render(&report, format, text),
        warnings: Vec::new(),
    })
}
