//! Finite, certified searches for monochromatic configurations.
//!
//! The search space is `(F, a)` with `F` a nonempty index set and `a` a
//! grid point of the ground ring. Index sets are visited in the order of
//! [`FiniteIndexSet`] (largest element, size, lexicographic), grid points
//! ascending, and the first hit in that order is returned regardless of the
//! number of workers.

mod coloring;
mod engine;
mod enumerate;
mod oracle;
mod verify;

use serde::{Deserialize, Serialize};

pub use coloring::ColoringSpec;
pub use engine::{find_jset_witness, find_vdw_witness, JsetTarget};
pub use enumerate::{index_set_count, index_sets};
pub use oracle::{brute_oracle, enumeration_min, ORACLE_LIMIT};
pub use verify::verify_witness;

use crate::error::{Error, Result};
use crate::near_zero::{FiniteIndexSet, GroundRing, PartialSequence};
use crate::poly::IntPolynomial;
use crate::rational::Rational;
use crate::sympoly::SymPoly;

/// Limits on the finite search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Index sets are drawn from `1..=max_index`.
    pub max_index: u32,
    pub max_set_size: usize,
    /// Grid points are `i / grid_denominator`.
    pub grid_denominator: u64,
    /// Step budget: candidate `(F, a)` pairs examined before giving up.
    pub max_candidates: Option<u64>,
    /// Wall-clock budget. Unlike the step budget this is not reproducible.
    pub time_limit_ms: Option<u64>,
}

impl SearchBounds {
    pub fn new(max_index: u32, grid_denominator: u64) -> Self {
        SearchBounds {
            max_index,
            max_set_size: max_index as usize,
            grid_denominator,
            max_candidates: None,
            time_limit_ms: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_index == 0 {
            return Err(Error::InvalidBounds("max_index must be positive".into()));
        }
        if self.max_set_size == 0 {
            return Err(Error::InvalidBounds("max_set_size must be positive".into()));
        }
        if self.grid_denominator < 2 {
            return Err(Error::InvalidBounds(
                "grid denominator must be at least 2".into(),
            ));
        }
        if self.max_candidates == Some(0) || self.time_limit_ms == Some(0) {
            return Err(Error::InvalidBounds("budgets must be positive".into()));
        }
        Ok(())
    }
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<W> {
    Found(W),
    /// Every candidate within bounds was examined; none qualifies.
    NotFound,
    /// A budget ran out first.
    BudgetExceeded,
}

impl<W> SearchOutcome<W> {
    pub fn found(&self) -> Option<&W> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub candidates_examined: u64,
    pub pruned: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport<W> {
    pub outcome: SearchOutcome<W>,
    pub stats: SearchStats,
}

/// Symbolic certificate: the base point `x` with `pi(x) = a`, and each
/// shift `T_F^{eta_i} f(x)` with its `pi` value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicTrace {
    pub x: SymPoly,
    pub images: Vec<SymPoly>,
    pub pis: Vec<Rational>,
}

/// A monochromatic configuration `{a + p_i(sigma_F)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessVdW {
    pub a: Rational,
    #[serde(rename = "F")]
    pub index_set: FiniteIndexSet,
    pub sigma: Rational,
    pub color: u32,
    pub values: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<SymbolicTrace>,
}

impl WitnessVdW {
    /// Enumeration order key.
    pub fn order_key(&self) -> (&FiniteIndexSet, &Rational) {
        (&self.index_set, &self.a)
    }

    /// Same configuration, ignoring the trace.
    pub fn same_configuration(&self, other: &WitnessVdW) -> bool {
        self.a == other.a
            && self.index_set == other.index_set
            && self.sigma == other.sigma
            && self.color == other.color
            && self.values == other.values
    }
}

/// `(a, F)` with every `a + sigma_i(F)` defined and inside the target set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsetWitness {
    pub a: Rational,
    #[serde(rename = "F")]
    pub index_set: FiniteIndexSet,
    pub sigmas: Vec<Rational>,
    pub values: Vec<Rational>,
}

/// Everything that defines a polynomial van der Waerden instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdwProblem {
    pub ground: GroundRing,
    pub polys: Vec<IntPolynomial>,
    pub sequence: PartialSequence,
    pub coloring: ColoringSpec,
}

impl VdwProblem {
    pub fn validate(&self) -> Result<()> {
        self.ground.validate()?;
        self.sequence.validate()?;
        self.coloring.validate()?;
        if self.polys.is_empty() {
            return Err(Error::InvalidPolynomial("no polynomials given".into()));
        }
        for p in &self.polys {
            if p.sign_near_zero() < 0 {
                return Err(Error::InvalidPolynomial(format!(
                    "{p} is negative just to the right of zero"
                )));
            }
        }
        Ok(())
    }

    /// Largest degree; the arity bound for the symbolic encodings.
    pub fn k(&self) -> usize {
        self.polys
            .iter()
            .map(IntPolynomial::degree)
            .max()
            .unwrap_or(1)
    }

    /// `min_i delta_i`: every `p_i` is positive on `(0, delta_min)`.
    pub fn delta_min(&self) -> Result<Rational> {
        let mut best: Option<Rational> = None;
        for p in &self.polys {
            let d = p.positivity_delta()?;
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
        best.ok_or_else(|| Error::InvalidPolynomial("no polynomials given".into()))
    }

    pub fn etas(&self) -> Result<Vec<SymPoly>> {
        let k = self.k();
        self.polys
            .iter()
            .map(|p| SymPoly::encode_poly(p, k))
            .collect()
    }

    /// The largest power-of-two exponent a candidate value can carry when
    /// the sequence terms and the grid are dyadic. `None` if they are not.
    pub fn dyadic_scale_budget(&self, bounds: &SearchBounds) -> Option<u64> {
        let grid = Rational::new(1, bounds.grid_denominator).dyadic_exponent()?;
        let mut seq = 0;
        for n in 1..=bounds.max_index {
            seq = seq.max(self.sequence.term(n)?.dyadic_exponent()?);
        }
        Some(grid.max(seq * self.k() as u64))
    }

    /// Human-readable warnings about the instance (non-dense ring, values
    /// that can fall outside a dyadic scale budget).
    pub fn warnings(&self, bounds: &SearchBounds) -> Vec<String> {
        let mut out = Vec::new();
        if !self.ground.is_dense() {
            out.push(format!(
                "ground ring is not dense: {}",
                self.ground.describe()
            ));
        }
        if let GroundRing::Dyadic { max_scale } = self.ground {
            match self.dyadic_scale_budget(bounds) {
                Some(need) if need > u64::from(max_scale) => out.push(format!(
                    "values may need scale 2^{need} > 2^{max_scale}; such candidates are outside the ring and skipped"
                )),
                None => out.push("sequence or grid is not dyadic".into()),
                _ => {}
            }
        }
        if let Some(len) = self.sequence.len_bound() {
            if len < bounds.max_index {
                out.push(format!("explicit sequence has only {len} terms"));
            }
        }
        out
    }
}

/// Every ring member of the form `a + p_i(sigma_F)` within `bounds`,
/// ascending. Meant for small bounds (building table colorings).
pub fn candidate_values(problem: &VdwProblem, bounds: &SearchBounds) -> Result<Vec<Rational>> {
    let grid = problem.ground.grid(bounds.grid_denominator);
    let mut out = std::collections::BTreeSet::new();
    for set in index_sets(bounds.max_index, bounds.max_set_size) {
        let sigma = problem.sequence.sigma(&set)?;
        for p in &problem.polys {
            let offset = p.eval(&sigma);
            out.extend(
                grid.iter()
                    .map(|a| a + &offset)
                    .filter(|v| problem.ground.member(v)),
            );
        }
    }
    Ok(out.into_iter().collect())
}

/// Base point for the symbolic trace: the single term `a * [1; L]` with the
/// shortest length `L <= k` that avoids every term of every `eta`.
pub fn trace_base_point(a: &Rational, etas: &[SymPoly], k: usize) -> Result<SymPoly> {
    let refs: Vec<&SymPoly> = etas.iter().collect();
    (1..=k.max(1))
        .map(|len| SymPoly::from_term(crate::term::Term::unit_tail(a.clone(), len)))
        .find(|x| x.ir_member(&refs))
        .ok_or(Error::NotIrreducible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn base_point_skips_colliding_lengths() {
        let eta = crate::syntax::parse_sympoly("1/2*[1] + 1/2*[1,1] + 3*[1,1,1]", 3).unwrap();
        let x = trace_base_point(&q(1, 2), std::slice::from_ref(&eta), 3).unwrap();
        assert_eq!(x.terms()[0].len(), 3);
        assert_eq!(x.pi(), q(1, 2));
        let full = crate::syntax::parse_sympoly("1/2*[1] + 1/2*[1,1]", 2).unwrap();
        assert_eq!(
            trace_base_point(&q(1, 2), &[full], 2),
            Err(Error::NotIrreducible)
        );
    }

    #[test]
    fn scale_budget() {
        let problem = VdwProblem {
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
        };
        let b = SearchBounds::new(12, 1 << 10);
        assert_eq!(problem.dyadic_scale_budget(&b), Some(26));
        assert_eq!(problem.warnings(&b).len(), 1);
        assert_eq!(
            problem.dyadic_scale_budget(&SearchBounds::new(4, 32)),
            Some(10)
        );
    }
}
