//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use nearzero::laws;
use nearzero::rational::q;
use nearzero::search::{
    brute_oracle, candidate_values, enumeration_min, find_vdw_witness, verify_witness,
    ColoringSpec, SearchBounds, SearchOutcome, VdwProblem, WitnessVdW,
};
use nearzero::{GroundRing, IntPolynomial, PartialSequence};

const SEED: u64 = 20240611;

const DESK_CONFIG: &str = r#"
polynomials = [[1], [1, 1]]

[ground]
kind = "dyadic"
max_scale = 24

[sequence]
kind = "geometric"
scale = "1/2"
ratio = "1/2"

[coloring]
kind = "band"
width = "1/16"
colors = 2

[bounds]
max_index = 12
grid_scale = 10
"#;

type Check = fn() -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

fn law_verdict(r: &laws::LawResult, want: u64, limit: Option<(Duration, Duration)>) -> Verdict {
    let mut pass = r.failures == 0 && r.checked >= want;
    let mut detail = format!(
        "{} checked, {} skipped, {} failures",
        r.checked, r.skipped, r.failures
    );
    if let Some((took, max)) = limit {
        pass &= took < max;
        detail += &format!(", {:.2} s (limit {} s)", took.as_secs_f64(), max.as_secs());
    }
    if let Some(f) = &r.first_failure {
        detail += &format!("; first failure: {f}");
    }
    Verdict { pass, detail }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn criterion_1() -> Verdict {
    let (r, took) = timed(|| laws::semigroup(SEED, 10_000, 4, 6));
    law_verdict(&r, 10_000, Some((took, Duration::from_secs(10))))
}

fn criterion_2() -> Verdict {
    law_verdict(&laws::pi_homomorphism(SEED, 1_000), 1_000, None)
}

fn criterion_3() -> Verdict {
    let a = law_verdict(&laws::evaluation_identity(SEED, 1_000), 1_000, None);
    let b = law_verdict(&laws::shift_identity(SEED, 1_000), 1_000, None);
    Verdict {
        pass: a.pass && b.pass,
        detail: format!("diagonal scaling: {}; shifts: {}", a.detail, b.detail),
    }
}

fn criterion_4() -> Verdict {
    law_verdict(&laws::composition(SEED, 500), 500, None)
}

fn criterion_5() -> Verdict {
    let (r, took) = timed(|| laws::r_set_characterization(8));
    law_verdict(&r, 255 * 255, Some((took, Duration::from_secs(5))))
}

fn write_config() -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new()
        .suffix(".toml")
        .tempfile()
        .expect("temp file");
    f.write_all(DESK_CONFIG.as_bytes()).expect("write config");
    f
}

fn run_witness(config: &std::path::Path, workers: usize) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_nearzero"))
        .args([
            "witness",
            "--json",
            "--workers",
            &workers.to_string(),
            "--config",
        ])
        .arg(config)
        .output()
        .expect("run nearzero");
    let took = start.elapsed();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf8"),
        took,
    )
}

fn desk_problem() -> VdwProblem {
    VdwProblem {
        ground: GroundRing::Dyadic { max_scale: 24 },
        polys: vec![
            IntPolynomial::new(vec![1]).unwrap(),
            IntPolynomial::new(vec![1, 1]).unwrap(),
        ],
        sequence: PartialSequence::geometric(q(1, 2), q(1, 2)).unwrap(),
        coloring: ColoringSpec::Band {
            width: q(1, 16),
            colors: 2,
        },
    }
}

fn criterion_6() -> Verdict {
    let problem = desk_problem();
    // the oracle cannot cover N = 12 at this grid; it covers N = 2, which
    // already contains the engine's first witness
    let mut small = SearchBounds::new(2, 1024);
    small.max_set_size = 2;
    let pre = brute_oracle(&problem, &small).expect("small universe");
    let pre_min = enumeration_min(&pre).cloned();

    let config = write_config();
    let (code, stdout, took) = run_witness(config.path(), 1);
    let report: serde_json::Value = match serde_json::from_str(&stdout) {
        Ok(v) => v,
        Err(e) => {
            return Verdict {
                pass: false,
                detail: format!("exit {code}, unreadable report: {e}"),
            }
        }
    };
    let witness: Option<WitnessVdW> = serde_json::from_value(report.clone()).ok();
    let verified = witness
        .as_ref()
        .is_some_and(|w| w.trace.is_some() && verify_witness(w, &problem));
    let matches_oracle = match (&witness, &pre_min) {
        (Some(w), Some(m)) => w.same_configuration(m),
        _ => false,
    };
    let pass = code == 0 && verified && matches_oracle && took < Duration::from_secs(10);
    let detail = match &witness {
        Some(w) => format!(
            "exit {code}, a = {}, F = {:?}, sigma = {}, values = [{}, {}], trace verified = {verified}, oracle (N = 2) min agrees = {matches_oracle}, {:.2} s",
            w.a,
            w.index_set.to_vec(),
            w.sigma,
            w.values[0],
            w.values[1],
            took.as_secs_f64()
        ),
        None => format!("exit {code}, no witness in report"),
    };
    Verdict { pass, detail }
}

fn criterion_7() -> Verdict {
    let bounds = SearchBounds::new(4, 32);
    let mut base = desk_problem();
    base.polys = vec![
        IntPolynomial::new(vec![1]).unwrap(),
        IntPolynomial::new(vec![0, 1]).unwrap(),
    ];
    let points = candidate_values(&base, &bounds).expect("values");
    let mut gen = laws::Gen::new(SEED);
    let (mut mismatches, mut with_witness) = (0, 0);
    for _ in 0..20 {
        let mut problem = base.clone();
        problem.coloring = gen.coloring(&points);
        let all = brute_oracle(&problem, &bounds).expect("small universe");
        let engine = find_vdw_witness(&problem, &bounds, 1).expect("search");
        let agree = match (engine.outcome.found(), enumeration_min(&all)) {
            (Some(w), Some(m)) => {
                with_witness += 1;
                w.same_configuration(m) && verify_witness(w, &problem)
            }
            (None, None) => engine.outcome == SearchOutcome::NotFound,
            _ => false,
        };
        if !agree {
            mismatches += 1;
        }
    }
    Verdict {
        pass: mismatches == 0,
        detail: format!("20 colorings ({with_witness} with witnesses), {mismatches} mismatches"),
    }
}

fn criterion_8() -> Verdict {
    let pool = laws::term_pool(SEED, 30);
    let order = law_verdict(&laws::order_laws(&pool), 1, None);
    let unique = law_verdict(&laws::unique_enumeration(SEED, 100), 100, None);
    Verdict {
        pass: order.pass && unique.pass,
        detail: format!(
            "order on 30-term pool: {}; sorted enumeration: {}",
            order.detail, unique.detail
        ),
    }
}

fn without_timing(report: &str) -> String {
    report
        .lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn criterion_9() -> Verdict {
    let config = write_config();
    let runs: Vec<(i32, String)> = [1, 4, 8]
        .iter()
        .map(|w| {
            let (code, out, _) = run_witness(config.path(), *w);
            (code, without_timing(&out))
        })
        .collect();
    let same = runs.iter().all(|r| *r == runs[0]) && runs[0].0 == 0 && !runs[0].1.is_empty();
    Verdict {
        pass: same,
        detail: format!(
            "workers 1, 4, 8: exit codes {:?}, reports identical modulo elapsed_ms = {same}",
            runs.iter().map(|r| r.0).collect::<Vec<_>>()
        ),
    }
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("semigroup laws on V_4, 10^4 triples, < 10 s", criterion_1),
        (
            "pi and polynomial image additive on Ir pairs, 10^3 pairs",
            criterion_2,
        ),
        (
            "evaluation identity and shift value, 10^3 each",
            criterion_3,
        ),
        (
            "shift composition over disjoint F, G, 500 pairs",
            criterion_4,
        ),
        (
            "R_S characterization on the 2^-8 dyadic grid, < 5 s",
            criterion_5,
        ),
        (
            "desk-scale witness through the CLI, verified with trace, < 10 s",
            criterion_6,
        ),
        ("engine equals oracle minimum, 20 colorings", criterion_7),
        ("term order laws and unique sorted enumeration", criterion_8),
        ("identical reports for 1, 4 and 8 workers", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        if !v.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} | {name} | {}",
            i + 1,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
