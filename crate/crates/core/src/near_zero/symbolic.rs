//! Shift operators on numbers and on symbolic polynomials.

use crate::error::{Error, Result};
use crate::near_zero::{FiniteIndexSet, GroundRing, PartialSequence};
use crate::rational::Rational;
use crate::sympoly::SymPoly;
use crate::term::DiagonalScalar;

/// `s ∔ sum_{t in F} f(t)`; `None` when the sum leaves the ring.
pub fn shift(
    ground: &GroundRing,
    f: &PartialSequence,
    set: &FiniteIndexSet,
    s: &Rational,
) -> Result<Option<Rational>> {
    let sigma = f.sigma(set)?;
    ground.dot_plus(s, &sigma)
}

/// Whether `pi(gamma)` lies in the ground ring.
pub fn vk0s_member(gamma: &SymPoly, ground: &GroundRing) -> bool {
    ground.member(&gamma.pi())
}

fn has_unit_tails(eta: &SymPoly) -> bool {
    eta.terms()
        .iter()
        .all(|t| t.tail().iter().all(|a| *a == Rational::one()))
}

/// Checks that `x` lies in the domain of the shifts along `eta`: either
/// no term of `x` is compatible with `eta`, or the compatible part is
/// exactly `s • eta` for one diagonal scalar `s` (i.e. `x` is itself a
/// previous shift of an irreducible base point).
fn check_shift_domain(x: &SymPoly, eta: &SymPoly) -> Result<()> {
    let (touching, _) = x.split_against(eta);
    if touching.is_empty() {
        return Ok(());
    }
    if touching.len() != eta.terms().len() {
        return Err(Error::NotIrreducible);
    }
    let s = &touching[0].tail()[0];
    if !s.is_positive() {
        return Err(Error::NotIrreducible);
    }
    let diagonal = touching.iter().all(|t| t.tail().iter().all(|a| a == s));
    if diagonal {
        Ok(())
    } else {
        Err(Error::NotIrreducible)
    }
}

/// `T_F^eta f(x) = x ∔ sigma_F • eta`.
///
/// `eta` must have unit tails (the canonical preimage of an integer
/// polynomial). Every tail slot of the shifted `eta` equals `sigma_F`, so
/// for `x` avoiding `eta`'s terms, `pi` of the result is
/// `pi(x) + p(sigma_F)`. Shifting an earlier shift merges the scalars,
/// which gives `T_F ∘ T_G = T_{F ∪ G}` for disjoint `F`, `G`.
pub fn t_op(
    eta: &SymPoly,
    f: &PartialSequence,
    set: &FiniteIndexSet,
    x: &SymPoly,
    ground: &GroundRing,
) -> Result<SymPoly> {
    if !has_unit_tails(eta) {
        return Err(Error::InvalidPolynomial(
            "shifting polynomial must have unit tails".into(),
        ));
    }
    if !vk0s_member(x, ground) {
        return Err(Error::NotInGround(x.pi()));
    }
    check_shift_domain(x, eta)?;
    let sigma = f.sigma(set)?;
    let scaled = eta.scale_diag(&DiagonalScalar::new(sigma, eta.max_len()))?;
    let out = x.add(&scaled);
    let value = out.pi();
    if !ground.member(&value) {
        return Err(Error::OutsideGround(value));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPolynomial;
    use crate::rational::q;
    use crate::syntax::parse_sympoly;
    use crate::term::Term;

    fn geo() -> PartialSequence {
        PartialSequence::geometric(q(1, 2), q(1, 2)).unwrap()
    }

    fn set(v: &[u32]) -> FiniteIndexSet {
        FiniteIndexSet::new(v.to_vec()).unwrap()
    }

    const DY: GroundRing = GroundRing::Dyadic { max_scale: 24 };

    #[test]
    fn numeric_shift() {
        assert_eq!(
            shift(&DY, &geo(), &set(&[1, 2]), &q(1, 2)).unwrap(),
            Some(q(7, 8))
        );
        assert_eq!(shift(&DY, &geo(), &set(&[1, 2]), &q(3, 4)).unwrap(), None);
    }

    #[test]
    fn vk0s_examples() {
        let half = SymPoly::from_term(Term::new(q(1, 2), vec![q(1, 1)]).unwrap());
        assert!(vk0s_member(&half, &DY));
        assert!(!vk0s_member(&parse_sympoly("2*[3,5]", 2).unwrap(), &DY));
        let third = SymPoly::from_term(Term::new(q(1, 3), vec![q(1, 1)]).unwrap());
        assert!(!vk0s_member(&third, &DY));
    }

    #[test]
    fn shifted_value() {
        let p = IntPolynomial::new(vec![1, 1]).unwrap();
        let eta = SymPoly::encode_poly(&p, 2).unwrap();
        let x = SymPoly::from_term(Term::new(q(1, 4), vec![q(1, 1)]).unwrap());
        let out = t_op(&eta, &geo(), &set(&[1, 2]), &x, &DY).unwrap();
        assert_eq!(out.pi(), q(49, 64));
        assert_eq!(out.pi(), x.pi() + p.eval(&q(3, 8)));
    }

    #[test]
    fn composition_merges_scalars() {
        let p = IntPolynomial::new(vec![1, 0, 2]).unwrap();
        let eta = SymPoly::encode_poly(&p, 3).unwrap();
        let x = SymPoly::from_term(Term::new(q(1, 8), vec![q(1, 1)]).unwrap());
        let (ff, gg) = (set(&[2, 5]), set(&[3]));
        let inner = t_op(&eta, &geo(), &gg, &x, &DY).unwrap();
        let twice = t_op(&eta, &geo(), &ff, &inner, &DY).unwrap();
        let once = t_op(&eta, &geo(), &ff.union(&gg), &x, &DY).unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn domain_errors() {
        let eta = parse_sympoly("2*[1] + 3*[1,1]", 2).unwrap();
        let clash = parse_sympoly("2*[1/8]", 2).unwrap();
        assert_eq!(
            t_op(&eta, &geo(), &set(&[3]), &clash, &DY),
            Err(Error::NotIrreducible)
        );
        let big = parse_sympoly("3/4*[1]", 2).unwrap();
        assert!(matches!(
            t_op(&eta, &geo(), &set(&[1]), &big, &DY),
            Err(Error::OutsideGround(_))
        ));
        let scaled_eta = parse_sympoly("2*[2]", 1).unwrap();
        assert!(matches!(
            t_op(&scaled_eta, &geo(), &set(&[1]), &big, &DY),
            Err(Error::InvalidPolynomial(_))
        ));
    }
}
