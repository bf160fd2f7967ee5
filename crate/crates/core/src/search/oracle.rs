//! Exhaustive reference search for small instances.

use crate::error::{Error, Result};
use crate::near_zero::FiniteIndexSet;
use crate::rational::Rational;

use super::{SearchBounds, VdwProblem, WitnessVdW};

/// Largest number of `(F, a)` pairs the oracle will visit.
pub const ORACLE_LIMIT: u128 = 1_000_000;

/// Every witness within `bounds`, found by a plain double loop over index
/// sets (as bitmasks) and grid points, with no ordering or pruning. A pair
/// qualifies when `sigma_F` lies below every positivity bound, `a` and all
/// values are ring members, and all values have the same color.
pub fn brute_oracle(problem: &VdwProblem, bounds: &SearchBounds) -> Result<Vec<WitnessVdW>> {
    problem.validate()?;
    bounds.validate()?;
    if bounds.max_index >= 64 {
        return Err(Error::UniverseTooLarge(u128::MAX));
    }
    let masks = 1u128 << bounds.max_index;
    let points: Vec<Rational> = (1..bounds.grid_denominator)
        .map(|i| Rational::new(i, bounds.grid_denominator))
        .collect();
    let universe = (masks - 1) * points.len() as u128;
    if universe > ORACLE_LIMIT {
        return Err(Error::UniverseTooLarge(universe));
    }
    let deltas = problem
        .polys
        .iter()
        .map(|p| p.positivity_delta())
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::new();
    for mask in 1..masks as u64 {
        if mask.count_ones() as usize > bounds.max_set_size {
            continue;
        }
        let set = FiniteIndexSet::new(
            (0..bounds.max_index)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1),
        )?;
        let mut sigma = Rational::zero();
        for n in set.iter() {
            let t = problem
                .sequence
                .term(n)
                .ok_or_else(|| Error::InvalidSequence(format!("no term at index {n}")))?;
            sigma += &t;
        }
        for a in &points {
            if !deltas.iter().all(|d| sigma < *d) || !problem.ground.member(a) {
                continue;
            }
            let values: Vec<Rational> = problem.polys.iter().map(|p| a + &p.eval(&sigma)).collect();
            if values.iter().any(|v| !problem.ground.member(v)) {
                continue;
            }
            let colors: Vec<Option<u32>> =
                values.iter().map(|v| problem.coloring.color(v)).collect();
            if let Some(color) = colors[0] {
                if colors.iter().all(|c| *c == Some(color)) {
                    out.push(WitnessVdW {
                        a: a.clone(),
                        index_set: set.clone(),
                        sigma: sigma.clone(),
                        color,
                        values,
                        trace: None,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The first witness in search order: index set, then `a`.
pub fn enumeration_min(witnesses: &[WitnessVdW]) -> Option<&WitnessVdW> {
    witnesses
        .iter()
        .min_by(|x, y| x.order_key().cmp(&y.order_key()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::near_zero::{GroundRing, PartialSequence};
    use crate::poly::IntPolynomial;
    use crate::rational::q;
    use crate::search::{find_vdw_witness, ColoringSpec};

    #[test]
    fn agrees_with_engine_on_small_instance() {
        let problem = VdwProblem {
            ground: GroundRing::Dyadic { max_scale: 16 },
            polys: vec![
                IntPolynomial::new(vec![1]).unwrap(),
                IntPolynomial::new(vec![0, 1]).unwrap(),
            ],
            sequence: PartialSequence::geometric(q(1, 2), q(1, 2)).unwrap(),
            coloring: ColoringSpec::Band {
                width: q(1, 8),
                colors: 3,
            },
        };
        let b = SearchBounds::new(4, 32);
        let all = brute_oracle(&problem, &b).unwrap();
        let engine = find_vdw_witness(&problem, &b, 1).unwrap();
        let w = engine.outcome.found().unwrap();
        assert!(enumeration_min(&all).unwrap().same_configuration(w));
        assert!(all.iter().any(|x| x.same_configuration(w)));
    }

    #[test]
    fn refuses_large_universe() {
        let problem = VdwProblem {
            ground: GroundRing::Dyadic { max_scale: 16 },
            polys: vec![IntPolynomial::new(vec![1]).unwrap()],
            sequence: PartialSequence::geometric(q(1, 2), q(1, 2)).unwrap(),
            coloring: ColoringSpec::Band {
                width: q(1, 8),
                colors: 3,
            },
        };
        assert!(matches!(
            brute_oracle(&problem, &SearchBounds::new(12, 1 << 10)),
            Err(Error::UniverseTooLarge(_))
        ));
    }
}
