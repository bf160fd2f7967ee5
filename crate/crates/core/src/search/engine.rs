use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::near_zero::{t_op, FiniteIndexSet, GroundRing, PartialSequence};
use crate::rational::Rational;

use super::enumerate::index_sets;
use super::{
    trace_base_point, ColoringSpec, JsetWitness, SearchBounds, SearchOutcome, SearchReport,
    SearchStats, SymbolicTrace, VdwProblem, WitnessVdW,
};

/// Work done on one index set.
struct SetScan<W> {
    examined: u64,
    pruned: u64,
    hit: Option<W>,
}

/// Runs `scan` over index sets in enumeration order, `workers` at a time,
/// and reduces in order. Statistics only count the prefix up to the hit,
/// so they do not depend on the worker count.
fn drive<W, F>(bounds: &SearchBounds, workers: usize, scan: F) -> Result<SearchReport<W>>
where
    W: Send,
    F: Fn(&FiniteIndexSet) -> Result<SetScan<W>> + Sync,
{
    bounds.validate()?;
    let start = Instant::now();
    let workers = workers.max(1);
    let pool = (workers > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
    });
    let chunk = (workers * 8).max(16);
    let mut sets = index_sets(bounds.max_index, bounds.max_set_size);
    let mut stats = SearchStats::default();
    let finish = |outcome, mut stats: SearchStats| {
        stats.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(SearchReport { outcome, stats })
    };
    loop {
        let batch: Vec<FiniteIndexSet> = sets.by_ref().take(chunk).collect();
        if batch.is_empty() {
            return finish(SearchOutcome::NotFound, stats);
        }
        let results: Vec<Result<SetScan<W>>> = match &pool {
            Some(pool) => pool.install(|| batch.par_iter().map(&scan).collect()),
            None => batch.iter().map(&scan).collect(),
        };
        for r in results {
            let r = r?;
            stats.candidates_examined += r.examined;
            stats.pruned += r.pruned;
            if bounds
                .max_candidates
                .is_some_and(|cap| stats.candidates_examined > cap)
            {
                return finish(SearchOutcome::BudgetExceeded, stats);
            }
            if let Some(w) = r.hit {
                return finish(SearchOutcome::Found(w), stats);
            }
        }
        if bounds
            .time_limit_ms
            .is_some_and(|ms| start.elapsed().as_millis() as u64 > ms)
        {
            return finish(SearchOutcome::BudgetExceeded, stats);
        }
    }
}

/// The common color of `values` if all are ring members and colored alike.
pub(super) fn common_color(
    values: &[Rational],
    ground: &GroundRing,
    coloring: &ColoringSpec,
) -> Option<u32> {
    let mut color = None;
    for v in values {
        if !ground.member(v) {
            return None;
        }
        let c = coloring.color(v)?;
        match color {
            None => color = Some(c),
            Some(prev) if prev != c => return None,
            _ => {}
        }
    }
    color
}

/// Searches for `a` in the grid and `F` with `{a + p_i(sigma_F)}` inside
/// the ring and monochromatic.
///
/// Index sets with `sigma_F >= delta_min` are skipped (outside the region
/// where every `p_i` is known positive), and for each `F` only grid points
/// below `1 - max_i p_i(sigma_F)` are tried. A hit carries its symbolic
/// trace.
pub fn find_vdw_witness(
    problem: &VdwProblem,
    bounds: &SearchBounds,
    workers: usize,
) -> Result<SearchReport<WitnessVdW>> {
    problem.validate()?;
    let delta = problem.delta_min()?;
    let grid = problem.ground.grid(bounds.grid_denominator);
    let one = Rational::one();

    let scan = |set: &FiniteIndexSet| -> Result<SetScan<WitnessVdW>> {
        let sigma = problem.sequence.sigma(set)?;
        if sigma >= delta {
            return Ok(SetScan {
                examined: 0,
                pruned: grid.len() as u64,
                hit: None,
            });
        }
        let offsets: Vec<Rational> = problem.polys.iter().map(|p| p.eval(&sigma)).collect();
        let top = offsets.iter().max().expect("nonempty");
        let limit = &one - top;
        let cut = grid.partition_point(|a| *a < limit);
        let mut examined = 0;
        for a in &grid[..cut] {
            examined += 1;
            let values: Vec<Rational> = offsets.iter().map(|o| a + o).collect();
            if let Some(color) = common_color(&values, &problem.ground, &problem.coloring) {
                return Ok(SetScan {
                    examined,
                    pruned: (grid.len() - cut) as u64,
                    hit: Some(WitnessVdW {
                        a: a.clone(),
                        index_set: set.clone(),
                        sigma,
                        color,
                        values,
                        trace: None,
                    }),
                });
            }
        }
        Ok(SetScan {
            examined,
            pruned: (grid.len() - cut) as u64,
            hit: None,
        })
    };

    let mut report = drive(bounds, workers, scan)?;
    if let SearchOutcome::Found(w) = &mut report.outcome {
        w.trace = Some(build_trace(problem, w)?);
    }
    Ok(report)
}

fn build_trace(problem: &VdwProblem, w: &WitnessVdW) -> Result<SymbolicTrace> {
    let etas = problem.etas()?;
    let x = trace_base_point(&w.a, &etas, problem.k())?;
    let images = etas
        .iter()
        .map(|eta| t_op(eta, &problem.sequence, &w.index_set, &x, &problem.ground))
        .collect::<Result<Vec<_>>>()?;
    let pis = images.iter().map(|g| g.pi()).collect();
    Ok(SymbolicTrace { x, images, pis })
}

/// Target set for the J-set search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum JsetTarget {
    /// The whole ground ring.
    Ground,
    Empty,
    /// One cell of a coloring.
    Cell {
        coloring: ColoringSpec,
        color: u32,
    },
}

impl JsetTarget {
    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            JsetTarget::Ground => true,
            JsetTarget::Empty => false,
            JsetTarget::Cell { coloring, color } => coloring.color(x) == Some(*color),
        }
    }
}

/// Searches for `(a, F)` with `a + sigma_i(F)` defined in the ring and in
/// `target` for every sequence `f_i`.
pub fn find_jset_witness(
    ground: &GroundRing,
    sequences: &[PartialSequence],
    target: &(dyn Fn(&Rational) -> bool + Sync),
    bounds: &SearchBounds,
    workers: usize,
) -> Result<SearchReport<JsetWitness>> {
    ground.validate()?;
    if sequences.is_empty() {
        return Err(Error::InvalidSequence("no sequences given".into()));
    }
    for f in sequences {
        f.validate()?;
    }
    let grid = ground.grid(bounds.grid_denominator);
    let one = Rational::one();

    let scan = |set: &FiniteIndexSet| -> Result<SetScan<JsetWitness>> {
        let sigmas = sequences
            .iter()
            .map(|f| f.sigma(set))
            .collect::<Result<Vec<_>>>()?;
        let limit = &one - sigmas.iter().max().expect("nonempty");
        let cut = grid.partition_point(|a| *a < limit);
        let pruned = (grid.len() - cut) as u64;
        let mut examined = 0;
        for a in &grid[..cut] {
            examined += 1;
            let values: Vec<Rational> = sigmas.iter().map(|s| a + s).collect();
            if values.iter().all(|v| ground.member(v) && target(v)) {
                return Ok(SetScan {
                    examined,
                    pruned,
                    hit: Some(JsetWitness {
                        a: a.clone(),
                        index_set: set.clone(),
                        sigmas,
                        values,
                    }),
                });
            }
        }
        Ok(SetScan {
            examined,
            pruned,
            hit: None,
        })
    };
    drive(bounds, workers, scan)
}
