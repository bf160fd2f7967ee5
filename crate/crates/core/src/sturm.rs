//! Sturm chains over the rationals, used to certify positivity near zero.

use crate::poly::IntPolynomial;
use crate::rational::Rational;

/// Dense coefficients, index = degree, no trailing zeros.
type Dense = Vec<Rational>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[Rational]) -> Dense {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from(i as i64))
            .collect(),
    )
}

fn rem(num: &[Rational], den: &[Rational]) -> Dense {
    let mut r: Dense = num.to_vec();
    let lead = den.last().expect("division by zero polynomial");
    while r.len() >= den.len() && !r.is_empty() {
        let shift = r.len() - den.len();
        let factor = r.last().unwrap() / lead;
        for (i, d) in den.iter().enumerate() {
            let t = &factor * d;
            r[i + shift] -= &t;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Dense>,
}

impl SturmChain {
    /// Chain for `p` given densely (index = degree).
    pub fn new(p: &[Rational]) -> Self {
        let p0 = trim(p.to_vec());
        assert!(!p0.is_empty(), "Sturm chain of the zero polynomial");
        let mut chain = vec![p0.clone()];
        let p1 = derivative(&p0);
        if !p1.is_empty() {
            chain.push(p1);
            loop {
                let n = chain.len();
                let r = rem(&chain[n - 2], &chain[n - 1]);
                if r.is_empty() {
                    break;
                }
                chain.push(r.into_iter().map(|c| -c).collect());
            }
        }
        SturmChain { chain }
    }

    /// Chain for `p(x) / x^m`, where `x^m` is the largest power dividing
    /// `p`. Same positive roots as `p`, but nonzero at the origin.
    pub fn positive_part(p: &IntPolynomial) -> Self {
        let (m, _) = p.nonzero_terms().next().expect("nonzero polynomial");
        let dense: Dense = (m..=p.degree())
            .map(|i| Rational::from(p.coeff(i)))
            .collect();
        SturmChain::new(&dense)
    }

    pub fn sign_changes(&self, x: &Rational) -> usize {
        let mut last = 0;
        let mut changes = 0;
        for q in &self.chain {
            let s = eval(q, x).signum();
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Number of distinct real roots in `(lo, hi]`. `lo` must not be a root.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> usize {
        debug_assert!(!eval(&self.chain[0], lo).is_zero());
        self.sign_changes(lo).saturating_sub(self.sign_changes(hi))
    }

    /// Number of distinct real roots in `(0, hi]`.
    pub fn count_from_zero(&self, hi: &Rational) -> usize {
        self.count_roots(&Rational::zero(), hi)
    }
}
