use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A subring of the reals, intersected with the open unit interval.
///
/// `Dyadic` keeps denominators `2^j` with `j <= max_scale`; it is closed
/// under the partial addition but only closed under products up to the
/// scale budget. `DenominatorBound` is not dense and not additively closed;
/// it exists for small finite experiments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroundRing {
    Dyadic { max_scale: u32 },
    DenominatorBound { d: u64 },
    AllRationals,
}

impl GroundRing {
    pub fn validate(&self) -> Result<()> {
        match self {
            GroundRing::Dyadic { max_scale } if *max_scale == 0 => Err(Error::InvalidGround(
                "dyadic max_scale must be at least 1".into(),
            )),
            GroundRing::DenominatorBound { d } if *d < 2 => Err(Error::InvalidGround(
                "denominator bound must be at least 2".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn member(&self, x: &Rational) -> bool {
        if !x.in_unit_interval() {
            return false;
        }
        match self {
            GroundRing::Dyadic { max_scale } => x
                .dyadic_exponent()
                .is_some_and(|j| j <= u64::from(*max_scale)),
            GroundRing::DenominatorBound { d } => x.denom() <= &BigInt::from(*d),
            GroundRing::AllRationals => true,
        }
    }

    /// False for rings that are not dense in `(0, 1)`.
    pub fn is_dense(&self) -> bool {
        !matches!(self, GroundRing::DenominatorBound { .. })
    }

    /// Members of the form `i / denominator`, ascending.
    pub fn grid(&self, denominator: u64) -> Vec<Rational> {
        (1..denominator)
            .map(|i| Rational::new(i, denominator))
            .filter(|x| self.member(x))
            .collect()
    }

    /// `x + y` when the sum is a member, `None` otherwise.
    pub fn dot_plus(&self, x: &Rational, y: &Rational) -> Result<Option<Rational>> {
        for v in [x, y] {
            if !self.member(v) {
                return Err(Error::NotInGround(v.clone()));
            }
        }
        let s = x + y;
        Ok(self.member(&s).then_some(s))
    }

    /// Membership of `y` in `R_S(x) = (0, 1 - x) ∩ S`.
    ///
    /// Agrees with definedness of [`GroundRing::dot_plus`] on additively
    /// closed rings (dyadic, all rationals).
    pub fn r_set_contains(&self, x: &Rational, y: &Rational) -> bool {
        y.is_positive() && y < &(Rational::one() - x) && self.member(y)
    }

    pub fn describe(&self) -> String {
        match self {
            GroundRing::Dyadic { max_scale } => format!("dyadic rationals, scale <= 2^{max_scale}"),
            GroundRing::DenominatorBound { d } => {
                format!("rationals with denominator <= {d} (not dense)")
            }
            GroundRing::AllRationals => "all rationals".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    const DY: GroundRing = GroundRing::Dyadic { max_scale: 24 };

    #[test]
    fn membership() {
        assert!(DY.member(&q(1, 2)));
        assert!(!DY.member(&q(1, 3)));
        assert!(!DY.member(&q(1, 1)));
        assert!(!DY.member(&q(0, 1)));
        assert!(!DY.member(&Rational::dyadic(1, 25)));
        let db = GroundRing::DenominatorBound { d: 6 };
        assert!(db.member(&q(5, 6)));
        assert!(!db.member(&q(1, 7)));
        assert!(!db.is_dense());
        assert!(GroundRing::AllRationals.member(&q(1, 1000003)));
    }

    #[test]
    fn dot_plus_examples() {
        assert_eq!(DY.dot_plus(&q(1, 4), &q(1, 4)).unwrap(), Some(q(1, 2)));
        assert_eq!(DY.dot_plus(&q(3, 4), &q(1, 2)).unwrap(), None);
        let db = GroundRing::DenominatorBound { d: 6 };
        assert_eq!(db.dot_plus(&q(1, 2), &q(1, 3)).unwrap(), Some(q(5, 6)));
        assert_eq!(
            DY.dot_plus(&q(1, 3), &q(1, 4)),
            Err(Error::NotInGround(q(1, 3)))
        );
    }

    #[test]
    fn r_set_examples() {
        assert!(DY.r_set_contains(&q(1, 4), &q(1, 2)));
        assert!(!DY.r_set_contains(&q(1, 4), &q(3, 4)));
        // not additively closed: interval formula and definedness disagree
        let db = GroundRing::DenominatorBound { d: 6 };
        assert!(db.r_set_contains(&q(1, 5), &q(1, 6)));
        assert_eq!(db.dot_plus(&q(1, 5), &q(1, 6)).unwrap(), None);
    }

    #[test]
    fn grid_is_in_ring() {
        let g = DY.grid(1 << 10);
        assert_eq!(g.len(), 1023);
        assert!(g.iter().all(|x| DY.member(x)));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        let db = GroundRing::DenominatorBound { d: 6 };
        assert_eq!(db.grid(12).len(), 7);
        assert!(GroundRing::Dyadic { max_scale: 3 }.grid(1 << 5).len() == 7);
    }

    #[test]
    fn serde_shapes() {
        let g: GroundRing = serde_json::from_str(r#"{"kind":"dyadic","max_scale":24}"#).unwrap();
        assert_eq!(g, DY);
        let g: GroundRing =
            serde_json::from_str(r#"{"kind":"denominator_bound","d":720}"#).unwrap();
        assert_eq!(g, GroundRing::DenominatorBound { d: 720 });
        assert!(GroundRing::Dyadic { max_scale: 0 }.validate().is_err());
    }
}
