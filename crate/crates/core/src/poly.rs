//! Integer polynomials without constant term, and the rational polynomials
//! produced by the symbolic image map.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sturm::SturmChain;

/// `c_1 x + c_2 x^2 + ... + c_d x^d` with `c_d != 0`.
///
/// Serialized as the ascending coefficient list starting at degree one, so
/// `[1, 0, 2]` is `x + 2x^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    /// Coefficients of degrees `1..=d`. Trailing zeros are dropped; the zero
    /// polynomial is rejected.
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidPolynomial("the zero polynomial".into()));
        }
        Ok(IntPolynomial { coeffs })
    }

    /// Coefficients of degrees `0..=d`; a nonzero constant term is rejected.
    pub fn from_dense(coeffs: &[i64]) -> Result<Self> {
        match coeffs.split_first() {
            Some((&0, rest)) => IntPolynomial::new(rest.to_vec()),
            Some((&c0, _)) => Err(Error::InvalidPolynomial(format!(
                "constant term {c0} must be zero"
            ))),
            None => Err(Error::InvalidPolynomial("the zero polynomial".into())),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `x^i`, zero outside `1..=degree`.
    pub fn coeff(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.coeffs.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `(degree, coefficient)` for each nonzero coefficient, ascending.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Exact value at `s`, by Horner's rule.
    pub fn eval(&self, s: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for &c in self.coeffs.iter().rev() {
            acc += &Rational::from(c);
            acc *= s;
        }
        acc
    }

    /// Sign of `p(x)` as `x -> 0+`, i.e. the sign of the lowest nonzero
    /// coefficient.
    pub fn sign_near_zero(&self) -> i32 {
        let (_, c) = self.nonzero_terms().next().expect("nonzero polynomial");
        c.signum() as i32
    }

    /// A rational `delta` in `(0, 1]` with `p > 0` on `(0, delta)`.
    ///
    /// With no root in `(0, 1]` this is 1. Otherwise the bound is halved
    /// until the Sturm count on `(0, delta]` is zero, then pushed towards
    /// the smallest positive root by bisection.
    pub fn positivity_delta(&self) -> Result<Rational> {
        if self.sign_near_zero() < 0 {
            return Err(Error::NotPositiveNearZero);
        }
        let chain = SturmChain::positive_part(self);
        let one = Rational::one();
        if chain.count_from_zero(&one) == 0 {
            return Ok(one);
        }
        let two = Rational::from(2);
        let mut hi = one;
        let mut lo = &hi / &two;
        while chain.count_from_zero(&lo) > 0 {
            hi = lo.clone();
            lo = &lo / &two;
        }
        for _ in 0..DELTA_REFINE_STEPS {
            let mid = (&lo + &hi) / &two;
            if chain.count_from_zero(&mid) == 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(lo)
    }
}

const DELTA_REFINE_STEPS: usize = 16;

impl TryFrom<Vec<i64>> for IntPolynomial {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        IntPolynomial::new(v)
    }
}

impl From<IntPolynomial> for Vec<i64> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<Rational> = self.coeffs.iter().map(|&c| Rational::from(c)).collect();
        write_monomials(f, &coeffs)
    }
}

/// Rational polynomial without constant term; coefficients of degrees
/// `1..`, trailing zeros trimmed. Empty means the zero polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        if i == 0 {
            return Rational::zero();
        }
        self.coeffs.get(i - 1).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc + c) * s;
        }
        acc
    }
}

impl From<&IntPolynomial> for RatPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        RatPolynomial::new(p.coeffs.iter().map(|&c| Rational::from(c)).collect())
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((1..=n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomials(f, &self.coeffs)
    }
}

fn write_monomials(f: &mut fmt::Formatter<'_>, coeffs: &[Rational]) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let deg = i + 1;
        let (sign, mag) = if c.is_negative() {
            ("-", c.abs())
        } else {
            ("+", c.clone())
        };
        if first {
            if sign == "-" {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let unit = mag == Rational::one();
        if !unit {
            if mag.is_integer() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "({mag})")?;
            }
        }
        match deg {
            1 => f.write_str("x")?,
            d => write!(f, "x^{d}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
