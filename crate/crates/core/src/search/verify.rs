//! Independent recheck of a reported witness.

use crate::near_zero::t_op;
use crate::rational::Rational;

use super::{engine::common_color, VdwProblem, WitnessVdW};

/// Recomputes `sigma_F`, every value `a + p_i(sigma_F)`, ring membership
/// and colors, and, when a trace is attached, checks `pi(x) = a`, that the
/// images are the shifts of `x` and that their `pi` values are the values.
/// Any error on the way counts as a failed check.
pub fn verify_witness(w: &WitnessVdW, problem: &VdwProblem) -> bool {
    check(w, problem).unwrap_or(false)
}

fn check(w: &WitnessVdW, problem: &VdwProblem) -> Option<bool> {
    problem.validate().ok()?;
    let sigma = problem.sequence.sigma(&w.index_set).ok()?;
    if sigma != w.sigma || sigma >= problem.delta_min().ok()? {
        return Some(false);
    }
    if !problem.ground.member(&w.a) {
        return Some(false);
    }
    let values: Vec<Rational> = problem
        .polys
        .iter()
        .map(|p| &w.a + &p.eval(&sigma))
        .collect();
    if values != w.values {
        return Some(false);
    }
    if common_color(&values, &problem.ground, &problem.coloring) != Some(w.color) {
        return Some(false);
    }
    let Some(trace) = &w.trace else {
        return Some(true);
    };
    let etas = problem.etas().ok()?;
    let refs: Vec<_> = etas.iter().collect();
    if trace.x.pi() != w.a || !trace.x.ir_member(&refs) {
        return Some(false);
    }
    if trace.images.len() != etas.len() || trace.pis != values {
        return Some(false);
    }
    for ((eta, image), pi) in etas.iter().zip(&trace.images).zip(&trace.pis) {
        let expect = t_op(
            eta,
            &problem.sequence,
            &w.index_set,
            &trace.x,
            &problem.ground,
        )
        .ok()?;
        if expect != *image || image.pi() != *pi {
            return Some(false);
        }
    }
    Some(true)
}
