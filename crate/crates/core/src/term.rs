//! Symbolic terms `(a_0 1_0)(a_1 1_1)...(a_i 1_i)`.
//!
//! A term has a head `a_0` and a nonempty tail `a_1..a_i`; its length is
//! `i`. Two terms are *compatible* when they have the same length and the
//! same head, and only compatible terms merge under addition (heads kept,
//! tails added slotwise). Everything else is *irreducible* and coexists.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTerm")]
pub struct Term {
    head: Rational,
    tail: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawTerm {
    head: Rational,
    tail: Vec<Rational>,
}

impl TryFrom<RawTerm> for Term {
    type Error = Error;
    fn try_from(raw: RawTerm) -> Result<Term> {
        Term::new(raw.head, raw.tail)
    }
}

impl Term {
    /// Fails on an empty tail.
    pub fn new(head: Rational, tail: Vec<Rational>) -> Result<Self> {
        if tail.is_empty() {
            return Err(Error::EmptyTail);
        }
        Ok(Term { head, tail })
    }

    /// `(head 1_0)(1 1_1)...(1 1_len)`.
    pub fn unit_tail(head: Rational, len: usize) -> Self {
        assert!(len >= 1);
        Term {
            head,
            tail: vec![Rational::one(); len],
        }
    }

    /// The head `a_0` (written iota in the literature).
    pub fn iota(&self) -> &Rational {
        &self.head
    }

    pub fn head(&self) -> &Rational {
        &self.head
    }

    pub fn tail(&self) -> &[Rational] {
        &self.tail
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn compatible(&self, other: &Term) -> bool {
        self.len() == other.len() && self.head == other.head
    }

    /// Merge of two compatible terms.
    pub fn add(&self, other: &Term) -> Result<Term> {
        if !self.compatible(other) {
            return Err(Error::IncompatibleTerms);
        }
        Ok(Term {
            head: self.head.clone(),
            tail: self
                .tail
                .iter()
                .zip(&other.tail)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Slotwise scalar action: tail entry `j` is multiplied by `r[j]`.
    /// The head and length are untouched.
    pub fn scale(&self, r: &[Rational]) -> Result<Term> {
        if r.len() < self.len() {
            return Err(Error::ArityMismatch {
                scalar: r.len(),
                needed: self.len(),
            });
        }
        Ok(Term {
            head: self.head.clone(),
            tail: self.tail.iter().zip(r).map(|(a, s)| a * s).collect(),
        })
    }

    /// Product of every entry, head included.
    pub fn pi(&self) -> Rational {
        let mut acc = self.head.clone();
        for a in &self.tail {
            acc *= a;
        }
        acc
    }
}

/// Total order: length, then head, then tail lexicographically.
///
/// On irreducible pairs only the first two keys ever matter; the tail key
/// only separates distinct compatible terms.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.head.cmp(&other.head))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// True iff no two distinct members are compatible.
pub fn irreducible_set(ts: &[Term]) -> bool {
    for (i, x) in ts.iter().enumerate() {
        for y in &ts[i + 1..] {
            if x.compatible(y) {
                return false;
            }
        }
    }
    true
}

/// The `k`-tuple `(s, s, ..., s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalScalar {
    pub value: Rational,
    pub arity: usize,
}

impl DiagonalScalar {
    pub fn new(value: Rational, arity: usize) -> Self {
        DiagonalScalar { value, arity }
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        vec![self.value.clone(); self.arity]
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*[", self.head)?;
        for (i, a) in self.tail.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn t(head: Rational, tail: &[Rational]) -> Term {
        Term::new(head, tail.to_vec()).unwrap()
    }

    fn ti(head: i64, tail: &[i64]) -> Term {
        t(
            q(head, 1),
            &tail.iter().map(|&a| q(a, 1)).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn iota_and_len() {
        assert_eq!(ti(2, &[3]).iota(), &q(2, 1));
        assert_eq!(t(q(1, 2), &[q(0, 1), q(5, 1)]).iota(), &q(1, 2));
        assert_eq!(ti(-1, &[1]).iota(), &q(-1, 1));
        assert_eq!(ti(2, &[3]).len(), 1);
        assert_eq!(ti(2, &[3, 4, 5]).len(), 3);
        assert_eq!(Term::unit_tail(q(1, 1), 6).len(), 6);
        assert!(Term::new(q(1, 1), vec![]).is_err());
    }

    #[test]
    fn compatibility() {
        assert!(ti(2, &[3]).compatible(&ti(2, &[4])));
        assert!(!ti(2, &[3]).compatible(&ti(2, &[3, 1])));
        assert!(!ti(2, &[3]).compatible(&ti(5, &[3])));
        assert!(irreducible_set(&[ti(2, &[3]), ti(2, &[1, 1])]));
        assert!(!irreducible_set(&[ti(2, &[3]), ti(2, &[4])]));
        assert!(irreducible_set(&[ti(7, &[1])]));
    }

    #[test]
    fn ordering_examples() {
        assert_eq!(ti(1, &[5]).cmp(&ti(2, &[7, 1])), Ordering::Less);
        assert_eq!(ti(1, &[5]).cmp(&ti(2, &[5])), Ordering::Less);
        assert_eq!(ti(2, &[3]).cmp(&ti(2, &[4])), Ordering::Less);
        assert_eq!(ti(2, &[3]).cmp(&ti(2, &[3])), Ordering::Equal);
    }

    #[test]
    fn addition() {
        assert_eq!(ti(2, &[3]).add(&ti(2, &[4])).unwrap(), ti(2, &[7]));
        assert_eq!(ti(1, &[0, 1]).add(&ti(1, &[0, 0])).unwrap(), ti(1, &[0, 1]));
        let h = t(q(3, 1), &[q(1, 2)]);
        assert_eq!(h.add(&h).unwrap(), ti(3, &[1]));
        assert_eq!(ti(2, &[3]).add(&ti(5, &[3])), Err(Error::IncompatibleTerms));
    }

    #[test]
    fn scaling() {
        let half = DiagonalScalar::new(q(1, 2), 2).to_vec();
        assert_eq!(
            ti(3, &[1, 1]).scale(&half).unwrap(),
            t(q(3, 1), &[q(1, 2), q(1, 2)])
        );
        let x = ti(4, &[2, -3, 5]);
        assert_eq!(
            x.scale(&DiagonalScalar::new(q(1, 1), 3).to_vec()).unwrap(),
            x
        );
        assert_eq!(
            ti(2, &[2, 4]).scale(&[q(1, 4), q(1, 16)]).unwrap(),
            t(q(2, 1), &[q(1, 2), q(1, 4)])
        );
        assert_eq!(
            ti(2, &[2, 4]).scale(&[q(1, 4)]),
            Err(Error::ArityMismatch {
                scalar: 1,
                needed: 2
            })
        );
    }

    #[test]
    fn diagonal_action_distributes_symbolically_but_not_under_pi() {
        let (a, b) = (q(1, 3), q(1, 5));
        let sum = &a + &b;
        for len in 1..=3 {
            let t = Term::new(q(2, 1), (1..=len).map(|j| q(j as i64 + 2, 1)).collect()).unwrap();
            let da = DiagonalScalar::new(a.clone(), len).to_vec();
            let db = DiagonalScalar::new(b.clone(), len).to_vec();
            let ds = DiagonalScalar::new(sum.clone(), len).to_vec();
            let lhs = t.scale(&ds).unwrap();
            let rhs = t.scale(&da).unwrap().add(&t.scale(&db).unwrap()).unwrap();
            // the merged scalings are compatible, so slot sums give equality
            assert_eq!(lhs, rhs);
            let split = t.scale(&da).unwrap().pi() + t.scale(&db).unwrap().pi();
            if len == 1 {
                assert_eq!(lhs.pi(), split);
            } else {
                assert_ne!(lhs.pi(), split);
            }
        }
    }
}
