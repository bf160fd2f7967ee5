//! Symbolic one-variable polynomials: finite irreducible sets of terms.
//!
//! A [`SymPoly`] is stored in canonical form: no two terms are compatible,
//! and the terms are sorted ascending by length then head. Addition is
//! concatenation followed by [`SymPoly::normalize`], which merges each
//! compatibility class into a single term.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::rational::Rational;
use crate::term::{DiagonalScalar, Term};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Term>", into = "Vec<Term>")]
pub struct SymPoly {
    terms: Vec<Term>,
}

impl SymPoly {
    /// Merges every compatible group and sorts the survivors.
    pub fn normalize(ts: impl IntoIterator<Item = Term>) -> Result<SymPoly> {
        let mut classes: BTreeMap<(usize, Rational), Term> = BTreeMap::new();
        for t in ts {
            let key = (t.len(), t.head().clone());
            match classes.get_mut(&key) {
                Some(acc) => *acc = acc.add(&t)?,
                None => {
                    classes.insert(key, t);
                }
            }
        }
        if classes.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        // key order (len, head) is the term order on irreducible sets
        Ok(SymPoly {
            terms: classes.into_values().collect(),
        })
    }

    /// A single-term polynomial.
    pub fn from_term(t: Term) -> SymPoly {
        SymPoly { terms: vec![t] }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Longest tail among the terms.
    pub fn max_len(&self) -> usize {
        self.terms.iter().map(Term::len).max().unwrap_or(0)
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        SymPoly::normalize(self.terms.iter().chain(&other.terms).cloned())
            .expect("sum of nonempty polynomials")
    }

    /// Applies the scalar `r` to every term. Length and head are preserved,
    /// so the result is still canonical.
    pub fn scale(&self, r: &[Rational]) -> Result<SymPoly> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.scale(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymPoly { terms })
    }

    pub fn scale_diag(&self, d: &DiagonalScalar) -> Result<SymPoly> {
        self.scale(&d.to_vec())
    }

    /// True iff no term of `self` is compatible with a term of any member
    /// of `others`.
    pub fn ir_member(&self, others: &[&SymPoly]) -> bool {
        others.iter().all(|eta| {
            self.terms
                .iter()
                .all(|x| eta.terms.iter().all(|y| !x.compatible(y)))
        })
    }

    /// Sum over terms of the product of all entries.
    pub fn pi(&self) -> Rational {
        self.terms.iter().map(Term::pi).sum()
    }

    /// The ordinary polynomial obtained by sending a length-`i` term to
    /// `(product of entries) x^i`.
    pub fn poly_image(&self) -> RatPolynomial {
        let mut coeffs = vec![Rational::zero(); self.max_len()];
        for t in &self.terms {
            coeffs[t.len() - 1] += &t.pi();
        }
        RatPolynomial::new(coeffs)
    }

    /// Canonical preimage of `p`: one term `c_i * [1; i]` per nonzero
    /// coefficient `c_i`.
    pub fn encode_poly(p: &IntPolynomial, k: usize) -> Result<SymPoly> {
        if p.degree() > k {
            return Err(Error::DegreeExceedsK { len: p.degree(), k });
        }
        let terms = p
            .nonzero_terms()
            .map(|(i, c)| Term::unit_tail(Rational::from(c), i))
            .collect();
        // distinct lengths, ascending: already canonical
        Ok(SymPoly { terms })
    }

    /// Splits the terms into those compatible with some term of `eta` and
    /// the rest.
    pub(crate) fn split_against(&self, eta: &SymPoly) -> (Vec<Term>, Vec<Term>) {
        self.terms
            .iter()
            .cloned()
            .partition(|t| eta.terms.iter().any(|e| e.compatible(t)))
    }
}

impl TryFrom<Vec<Term>> for SymPoly {
    type Error = Error;
    fn try_from(ts: Vec<Term>) -> Result<SymPoly> {
        SymPoly::normalize(ts)
    }
}

impl From<SymPoly> for Vec<Term> {
    fn from(p: SymPoly) -> Self {
        p.terms
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[{self}]")
    }
}
