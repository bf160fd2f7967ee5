use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A sequence in `(0, 1)` whose total sum is certified to be below one,
/// so every finite partial sum stays in `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", try_from = "RawSequence")]
pub enum PartialSequence {
    /// `f(n) = scale * ratio^n` for `n >= 1`.
    Geometric { scale: Rational, ratio: Rational },
    /// `f(n) = terms[n - 1]`; undefined past the end.
    Explicit { terms: Vec<Rational> },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawSequence {
    Geometric { scale: Rational, ratio: Rational },
    Explicit { terms: Vec<Rational> },
}

impl TryFrom<RawSequence> for PartialSequence {
    type Error = Error;
    fn try_from(raw: RawSequence) -> Result<Self> {
        match raw {
            RawSequence::Geometric { scale, ratio } => PartialSequence::geometric(scale, ratio),
            RawSequence::Explicit { terms } => PartialSequence::explicit(terms),
        }
    }
}

impl PartialSequence {
    pub fn geometric(scale: Rational, ratio: Rational) -> Result<Self> {
        let s = PartialSequence::Geometric { scale, ratio };
        s.validate()?;
        Ok(s)
    }

    pub fn explicit(terms: Vec<Rational>) -> Result<Self> {
        let s = PartialSequence::Explicit { terms };
        s.validate()?;
        Ok(s)
    }

    /// Checks the sum certificate.
    pub fn validate(&self) -> Result<()> {
        match self {
            PartialSequence::Geometric { scale, ratio } => {
                if !scale.is_positive() {
                    return Err(Error::InvalidSequence("scale must be positive".into()));
                }
                if !ratio.in_unit_interval() {
                    return Err(Error::InvalidSequence("ratio must lie in (0, 1)".into()));
                }
            }
            PartialSequence::Explicit { terms } => {
                if terms.is_empty() {
                    return Err(Error::InvalidSequence("no terms".into()));
                }
                if let Some(t) = terms.iter().find(|t| !t.in_unit_interval()) {
                    return Err(Error::InvalidSequence(format!("term {t} outside (0, 1)")));
                }
            }
        }
        let total = self.total_bound();
        if total >= Rational::one() {
            return Err(Error::InvalidSequence(format!(
                "sum of all terms is {total}, must be below 1"
            )));
        }
        Ok(())
    }

    /// `f(n)`, or `None` past the end of an explicit list (or for `n = 0`).
    pub fn term(&self, n: u32) -> Option<Rational> {
        if n == 0 {
            return None;
        }
        match self {
            PartialSequence::Geometric { scale, ratio } => Some(scale * &ratio.pow(n)),
            PartialSequence::Explicit { terms } => terms.get(n as usize - 1).cloned(),
        }
    }

    /// Exact value of the full sum.
    pub fn total_bound(&self) -> Rational {
        match self {
            PartialSequence::Geometric { scale, ratio } => {
                scale * ratio / (Rational::one() - ratio)
            }
            PartialSequence::Explicit { terms } => terms.iter().sum(),
        }
    }

    /// `sum_{t in F} f(t)`.
    pub fn sigma(&self, set: &FiniteIndexSet) -> Result<Rational> {
        set.iter()
            .map(|n| {
                self.term(n).ok_or_else(|| {
                    Error::InvalidSequence(format!("index {n} beyond the explicit terms"))
                })
            })
            .sum()
    }

    /// Largest index with a defined term, if bounded.
    pub fn len_bound(&self) -> Option<u32> {
        match self {
            PartialSequence::Geometric { .. } => None,
            PartialSequence::Explicit { terms } => Some(terms.len() as u32),
        }
    }
}

/// A nonempty finite set of positive indices.
///
/// Ordered for enumeration: by largest element, then size, then the
/// ascending element lists lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FiniteIndexSet(BTreeSet<u32>);

impl FiniteIndexSet {
    pub fn new(indices: impl IntoIterator<Item = u32>) -> Result<Self> {
        let set: BTreeSet<u32> = indices.into_iter().collect();
        if set.is_empty() || set.contains(&0) {
            return Err(Error::InvalidIndexSet);
        }
        Ok(FiniteIndexSet(set))
    }

    pub fn singleton(n: u32) -> Result<Self> {
        FiniteIndexSet::new([n])
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> u32 {
        *self.0.last().expect("nonempty")
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_disjoint(&self, other: &FiniteIndexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &FiniteIndexSet) -> FiniteIndexSet {
        FiniteIndexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.0.iter().copied().collect()
    }
}

impl Ord for FiniteIndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.max()
            .cmp(&other.max())
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for FiniteIndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for FiniteIndexSet {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        FiniteIndexSet::new(v)
    }
}

impl From<FiniteIndexSet> for Vec<u32> {
    fn from(s: FiniteIndexSet) -> Self {
        s.to_vec()
    }
}
