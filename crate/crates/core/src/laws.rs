//! Seeded random generators and the algebraic law suites.
//!
//! Every law is a function `(seed, cases) -> LawResult`. A case the law
//! does not speak about (an undefined shift, say) is counted as skipped,
//! not as a pass; each law keeps drawing until it has `cases` checked
//! instances or runs out of attempts.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::near_zero::{t_op, FiniteIndexSet, GroundRing, PartialSequence};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::rational::Rational;
use crate::search::ColoringSpec;
use crate::sympoly::SymPoly;
use crate::term::{irreducible_set, DiagonalScalar, Term};

const ATTEMPTS_PER_CASE: u64 = 50;

/// Outcome of one law over many random instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub name: String,
    pub checked: u64,
    pub skipped: u64,
    pub failures: u64,
    /// Description of the first counterexample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl LawResult {
    fn new(name: &str) -> Self {
        LawResult {
            name: name.to_string(),
            checked: 0,
            skipped: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    /// No failures and at least one checked case.
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

/// Random instances for the law suites.
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `n / d` with `n` in `-9..=9` and `d` in `{1, 2, 4}`.
    pub fn coefficient(&mut self) -> Rational {
        let n = self.rng.gen_range(-9..=9);
        let d = *[1, 2, 4].choose(&mut self.rng).unwrap();
        Rational::new(n, d)
    }

    /// A rational in `(0, 1)` with denominator at most `max_den`.
    pub fn unit_rational(&mut self, max_den: i64) -> Rational {
        let d = self.rng.gen_range(2..=max_den);
        let n = self.rng.gen_range(1..d);
        Rational::new(n, d)
    }

    pub fn term(&mut self, k: usize) -> Term {
        let len = self.rng.gen_range(1..=k);
        let head = self.coefficient();
        let tail = (0..len).map(|_| self.coefficient()).collect();
        Term::new(head, tail).expect("nonempty tail")
    }

    /// At least one and at most `max_terms` random terms, normalized.
    pub fn sympoly(&mut self, k: usize, max_terms: usize) -> SymPoly {
        let n = self.rng.gen_range(1..=max_terms);
        SymPoly::normalize((0..n).map(|_| self.term(k))).expect("nonempty")
    }

    /// A small positive element: one or two terms with entries in `(0, 1)`.
    pub fn small_sympoly(&mut self, k: usize) -> SymPoly {
        let n = self.rng.gen_range(1..=2);
        let terms: Vec<Term> = (0..n)
            .map(|_| {
                let len = self.rng.gen_range(1..=k);
                let head = self.unit_rational(16) * Rational::new(1, 2);
                let tail = (0..len).map(|_| self.unit_rational(8)).collect();
                Term::new(head, tail).expect("nonempty tail")
            })
            .collect();
        SymPoly::normalize(terms).expect("nonempty")
    }

    /// Nonzero, degree at most `max_degree`, coefficients in `-9..=9`.
    pub fn int_poly(&mut self, max_degree: usize) -> IntPolynomial {
        loop {
            let d = self.rng.gen_range(1..=max_degree);
            let coeffs = (0..d).map(|_| self.rng.gen_range(-9..=9)).collect();
            if let Ok(p) = IntPolynomial::new(coeffs) {
                return p;
            }
        }
    }

    /// Like [`Gen::int_poly`] but positive just right of zero.
    pub fn positive_poly(&mut self, max_degree: usize) -> IntPolynomial {
        loop {
            let p = self.int_poly(max_degree);
            if p.sign_near_zero() > 0 {
                return p;
            }
        }
    }

    /// A band, residue or table coloring; tables color `points` at random.
    pub fn coloring(&mut self, points: &[Rational]) -> ColoringSpec {
        match self.rng.gen_range(0..3) {
            0 => ColoringSpec::Band {
                width: Rational::new(self.rng.gen_range(1..=8), 64),
                colors: self.rng.gen_range(2..=4),
            },
            1 => ColoringSpec::Residue {
                modulus: self.rng.gen_range(2..=5),
                scale: self.rng.gen_range(3..=8),
            },
            _ => {
                let colors = self.rng.gen_range(2..=3);
                let entries = points
                    .iter()
                    .map(|x| (x.clone(), self.rng.gen_range(0..colors)))
                    .collect();
                ColoringSpec::Table { colors, entries }
            }
        }
    }

    /// A nonempty subset of `1..=n`.
    pub fn index_set(&mut self, n: u32) -> FiniteIndexSet {
        loop {
            let picks: Vec<u32> = (1..=n).filter(|_| self.rng.gen_bool(0.3)).collect();
            if let Ok(s) = FiniteIndexSet::new(picks) {
                return s;
            }
        }
    }

    /// Two disjoint nonempty subsets of `1..=n`.
    pub fn disjoint_pair(&mut self, n: u32) -> (FiniteIndexSet, FiniteIndexSet) {
        loop {
            let (mut f, mut g) = (Vec::new(), Vec::new());
            for i in 1..=n {
                match self.rng.gen_range(0..4) {
                    0 => f.push(i),
                    1 => g.push(i),
                    _ => {}
                }
            }
            if let (Ok(f), Ok(g)) = (FiniteIndexSet::new(f), FiniteIndexSet::new(g)) {
                return (f, g);
            }
        }
    }
}

fn geometric_half() -> PartialSequence {
    PartialSequence::geometric(Rational::new(1, 2), Rational::new(1, 2)).expect("valid")
}

/// `add` is associative and commutative on random triples in `V_k`.
pub fn semigroup(seed: u64, cases: u64, k: usize, max_terms: usize) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("add is associative and commutative");
    for _ in 0..cases {
        let (a, b, c) = (
            g.sympoly(k, max_terms),
            g.sympoly(k, max_terms),
            g.sympoly(k, max_terms),
        );
        let ok = a.add(&b).add(&c) == a.add(&b.add(&c)) && a.add(&b) == b.add(&a);
        r.record(ok, || format!("{a} | {b} | {c}"));
    }
    r
}

/// `add` equals normalizing the concatenation, and normalize is idempotent.
pub fn flatten_oracle(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("add is flatten then normalize");
    for _ in 0..cases {
        let (a, b) = (g.sympoly(4, 6), g.sympoly(4, 6));
        let flat =
            SymPoly::normalize(a.terms().iter().chain(b.terms()).cloned()).expect("nonempty");
        let again = SymPoly::normalize(flat.terms().to_vec()).expect("nonempty");
        let ok = a.add(&b) == flat && again == flat && irreducible_set(flat.terms());
        r.record(ok, || format!("{a} | {b}"));
    }
    r
}

/// Draws `(gamma, mu)` with `gamma ∈ Ir({mu})`.
fn irreducible_pair(g: &mut Gen) -> (SymPoly, SymPoly) {
    loop {
        let (a, b) = (g.sympoly(4, 6), g.sympoly(4, 6));
        if a.ir_member(&[&b]) {
            return (a, b);
        }
    }
}

/// `pi` and the polynomial image are additive on irreducible pairs.
pub fn pi_homomorphism(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("pi and poly_image are additive on Ir pairs");
    for _ in 0..cases {
        let (a, b) = irreducible_pair(&mut g);
        let sum = a.add(&b);
        let ok =
            sum.pi() == a.pi() + b.pi() && sum.poly_image() == &a.poly_image() + &b.poly_image();
        r.record(ok, || format!("{a} | {b}"));
    }
    r
}

/// `Ir({eta})` is closed under `add`, and a term with a fresh head lies in
/// the intersection of several `Ir` sets.
pub fn ir_closure(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("Ir sets are closed under add and meet");
    let mut done = 0;
    let mut attempts = 0;
    while done < cases && attempts < cases * ATTEMPTS_PER_CASE {
        attempts += 1;
        let eta = g.sympoly(4, 6);
        let (a, b) = (g.sympoly(4, 6), g.sympoly(4, 6));
        if !a.ir_member(&[&eta]) || !b.ir_member(&[&eta]) {
            r.skipped += 1;
            continue;
        }
        done += 1;
        let others = [g.sympoly(4, 6), g.sympoly(4, 6)];
        let heads = eta
            .terms()
            .iter()
            .chain(others.iter().flat_map(|o| o.terms()))
            .map(|t| t.head().clone());
        let fresh = heads.max().expect("nonempty") + Rational::one();
        let w = SymPoly::from_term(Term::unit_tail(fresh, 1));
        let ok = a.add(&b).ir_member(&[&eta]) && w.ir_member(&[&eta, &others[0], &others[1]]);
        r.record(ok, || format!("{eta} | {a} | {b}"));
    }
    r
}

/// Term-level laws: merge is commutative, associative and stays in the
/// class; scaling distributes over merge; the diagonal action is additive
/// in the scalar symbolically, and additive under `pi` only on length one.
pub fn term_laws(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("term merge and scaling");
    let mut nonlinear_seen = false;
    for _ in 0..cases {
        let x = g.term(4);
        let len = x.len();
        let sibling = |g: &mut Gen| {
            Term::new(
                x.head().clone(),
                (0..len).map(|_| g.coefficient()).collect(),
            )
            .expect("nonempty")
        };
        let (y, z) = (sibling(&mut g), sibling(&mut g));
        let scalar: Vec<Rational> = (0..4).map(|_| g.coefficient()).collect();
        let xy = x.add(&y).expect("compatible");
        let ok_merge = xy == y.add(&x).expect("compatible")
            && xy.add(&z).expect("compatible")
                == x.add(&y.add(&z).expect("compatible")).expect("compatible")
            && xy.compatible(&x);
        let ok_scale = xy.scale(&scalar).expect("arity")
            == x.scale(&scalar)
                .expect("arity")
                .add(&y.scale(&scalar).expect("arity"))
                .expect("compatible");

        let (a, b) = (g.unit_rational(8), g.unit_rational(8));
        let eta = SymPoly::from_term(Term::unit_tail(g.coefficient(), len));
        let diag = |s: &Rational| {
            eta.scale_diag(&DiagonalScalar::new(s.clone(), len))
                .expect("arity")
        };
        let joint = diag(&(&a + &b));
        let split = diag(&a).add(&diag(&b));
        let pi_additive = joint.pi() == diag(&a).pi() + diag(&b).pi();
        let ok_diag = joint == split && (len != 1 || pi_additive);
        if len >= 2 && !pi_additive {
            nonlinear_seen = true;
        }
        r.record(ok_merge && ok_scale && ok_diag, || {
            format!("{x} | {y} | {z}")
        });
    }
    if cases > 0 && !nonlinear_seen {
        r.record(false, || {
            "no pi-nonadditive diagonal instance of length >= 2 found".into()
        });
    }
    r
}

/// `pi(diag(s) • encode(p)) = p(s)`.
pub fn evaluation_identity(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("pi of diagonally scaled encoding evaluates p");
    for _ in 0..cases {
        let p = g.int_poly(5);
        let s = g.unit_rational(64);
        let eta = SymPoly::encode_poly(&p, 5).expect("degree <= 5");
        let scaled = eta
            .scale_diag(&DiagonalScalar::new(s.clone(), 5))
            .expect("arity");
        let ok = scaled.pi() == p.eval(&s) && eta.poly_image() == RatPolynomial::from(&p);
        r.record(ok, || format!("p = {p}, s = {s}"));
    }
    r
}

/// Draws a positive `p`, its encoding `eta`, and a small `x ∈ Ir({eta})`.
fn shift_instance(g: &mut Gen) -> (IntPolynomial, SymPoly, SymPoly) {
    let p = g.positive_poly(5);
    let eta = SymPoly::encode_poly(&p, 5).expect("degree <= 5");
    loop {
        let x = g.small_sympoly(5);
        if x.ir_member(&[&eta]) {
            return (p, eta, x);
        }
    }
}

/// `pi(T_F^eta f(x)) = pi(x) + p(sigma_F)` wherever the shift is defined.
pub fn shift_identity(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("pi of a shift adds p(sigma_F)");
    let (f, ground) = (geometric_half(), GroundRing::AllRationals);
    let mut attempts = 0;
    while r.checked < cases && attempts < cases * ATTEMPTS_PER_CASE {
        attempts += 1;
        let (p, eta, x) = shift_instance(&mut g);
        let set = g.index_set(12);
        match t_op(&eta, &f, &set, &x, &ground) {
            Ok(out) => {
                let sigma = f.sigma(&set).expect("geometric");
                r.record(out.pi() == x.pi() + p.eval(&sigma), || {
                    format!("p = {p}, x = {x}, F = {set:?}")
                });
            }
            Err(Error::OutsideGround(_)) | Err(Error::NotInGround(_)) => r.skipped += 1,
            Err(e) => r.record(false, || format!("p = {p}, x = {x}, F = {set:?}: {e}")),
        }
    }
    r
}

/// `T_F ∘ T_G = T_{F ∪ G}` for disjoint `F`, `G` wherever the left side
/// is defined.
pub fn composition(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("shifts compose over disjoint unions");
    let (f, ground) = (geometric_half(), GroundRing::AllRationals);
    let mut attempts = 0;
    while r.checked < cases && attempts < cases * ATTEMPTS_PER_CASE {
        attempts += 1;
        let (_, eta, x) = shift_instance(&mut g);
        let (ff, gg) = g.disjoint_pair(12);
        let lhs =
            t_op(&eta, &f, &gg, &x, &ground).and_then(|inner| t_op(&eta, &f, &ff, &inner, &ground));
        let Ok(lhs) = lhs else {
            r.skipped += 1;
            continue;
        };
        let rhs = t_op(&eta, &f, &ff.union(&gg), &x, &ground);
        r.record(rhs.as_ref() == Ok(&lhs), || {
            format!("eta = {eta}, x = {x}, F = {ff:?}, G = {gg:?}")
        });
    }
    r
}

/// A shift defined at `x` stays defined at `x' ∈ Ir({eta})` with smaller
/// `pi`, for `sigma_F` below the positivity bound of `p`.
pub fn shift_monotone(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("shift definedness is monotone in pi");
    let (f, ground) = (geometric_half(), GroundRing::AllRationals);
    let mut attempts = 0;
    while r.checked < cases && attempts < cases * ATTEMPTS_PER_CASE {
        attempts += 1;
        let (p, eta, x) = shift_instance(&mut g);
        let set = g.index_set(12);
        let y = g.small_sympoly(5);
        if !y.ir_member(&[&eta]) || y.pi() > x.pi() || t_op(&eta, &f, &set, &x, &ground).is_err() {
            r.skipped += 1;
            continue;
        }
        let delta = p.positivity_delta().expect("positive near zero");
        if f.sigma(&set).expect("geometric") >= delta {
            r.skipped += 1;
            continue;
        }
        r.record(t_op(&eta, &f, &set, &y, &ground).is_ok(), || {
            format!("p = {p}, x = {x}, y = {y}")
        });
    }
    r
}

/// On the dyadic grid of scale `2^-scale`, `x ∔ y` is defined exactly when
/// `y ∈ (0, 1 - x) ∩ S`.
pub fn r_set_characterization(scale: u32) -> LawResult {
    let ground = GroundRing::Dyadic { max_scale: scale };
    let grid = ground.grid(1u64 << scale);
    let mut r = LawResult::new("x + y is defined iff y lies in R_S(x)");
    for x in &grid {
        for y in &grid {
            let defined = ground.dot_plus(x, y).map(|s| s.is_some()).unwrap_or(false);
            r.record(defined == ground.r_set_contains(x, y), || {
                format!("x = {x}, y = {y}")
            });
        }
    }
    r
}

/// Partial addition is commutative and associative: if either grouping
/// of `x ∔ y ∔ z` is defined, both are and they agree.
pub fn partial_associativity(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let ground = GroundRing::Dyadic { max_scale: 8 };
    let mut r = LawResult::new("partial addition is associative");
    let draw = |g: &mut Gen| Rational::new(g.rng().gen_range(1..256), 256);
    for _ in 0..cases {
        let (x, y, z) = (draw(&mut g), draw(&mut g), draw(&mut g));
        let plus = |a: &Rational, b: &Rational| ground.dot_plus(a, b).expect("members");
        let left = plus(&x, &y).and_then(|xy| plus(&xy, &z));
        let right = plus(&y, &z).and_then(|yz| plus(&x, &yz));
        r.record(left == right && plus(&x, &y) == plus(&y, &x), || {
            format!("{x}, {y}, {z}")
        });
    }
    r
}

/// Partial sums stay in `(0, 1)`, and grid points below `1 - max H` lie in
/// every `R_S(h)`.
pub fn sequence_and_adequacy(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let ground = GroundRing::Dyadic { max_scale: 24 };
    let mut r = LawResult::new("partial sums lie in (0,1); R_S(H) contains low grid points");
    let grid = ground.grid(128);
    for _ in 0..cases {
        let den = 1 << g.rng().gen_range(2..=6);
        let scale = Rational::new(g.rng().gen_range(1..den), den);
        // total is scale * ratio / (1 - ratio) = scale
        let f = PartialSequence::geometric(scale, Rational::new(1, 2)).expect("certified");
        let set = g.index_set(16);
        let sigma = f.sigma(&set).expect("geometric");

        let hs: Vec<Rational> = (0..3)
            .map(|_| Rational::new(g.rng().gen_range(1..64), 64))
            .collect();
        let top = hs.iter().max().expect("nonempty");
        let limit = Rational::one() - top;
        let mut below = grid.iter().take_while(|a| **a < limit);
        let adequate =
            grid[0] < limit && below.all(|a| hs.iter().all(|h| ground.r_set_contains(h, a)));
        r.record(sigma.in_unit_interval() && adequate, || {
            format!("F = {set:?}, H = {hs:?}")
        });
    }
    r
}

fn paper_order(a: &Term, b: &Term) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.head().cmp(b.head()))
}

/// A pool with deliberate compatible collisions.
pub fn term_pool(seed: u64, size: usize) -> Vec<Term> {
    let mut g = Gen::new(seed);
    let mut pool: Vec<Term> = Vec::with_capacity(size);
    while pool.len() < size {
        let t = if pool.len() % 3 == 2 {
            let base = pool[pool.len() - 1].clone();
            let tail = (0..base.len()).map(|_| g.coefficient()).collect();
            Term::new(base.head().clone(), tail).expect("nonempty")
        } else {
            g.term(3)
        };
        if !pool.contains(&t) {
            pool.push(t);
        }
    }
    pool
}

/// The term order is a total order on `pool` (checked on every pair and
/// triple) and agrees with length-then-head on irreducible pairs.
pub fn order_laws(pool: &[Term]) -> LawResult {
    let mut r = LawResult::new("term order is total and extends length-then-head");
    for a in pool {
        for b in pool {
            let ab = a.cmp(b);
            let antisym = ab != Ordering::Equal || a == b;
            let total = ab == b.cmp(a).reverse();
            let paper = a.compatible(b) || ab == paper_order(a, b);
            r.record(antisym && total && paper, || format!("{a} vs {b}"));
            for c in pool {
                if a <= b && b <= c {
                    r.record(a <= c, || format!("{a} <= {b} <= {c}"));
                }
            }
        }
    }
    r
}

/// Every irreducible set has exactly one sorted enumeration: any shuffle
/// sorts to the same strictly increasing sequence, which is also what
/// normalize produces.
pub fn unique_enumeration(seed: u64, cases: u64) -> LawResult {
    let mut g = Gen::new(seed);
    let mut r = LawResult::new("irreducible sets sort uniquely");
    for _ in 0..cases {
        let n = g.rng().gen_range(1..=8);
        let mut set: Vec<Term> = Vec::new();
        while set.len() < n {
            let t = g.term(4);
            if set.iter().all(|s| !s.compatible(&t)) {
                set.push(t);
            }
        }
        let mut sorted = set.clone();
        sorted.sort();
        let strict = sorted
            .windows(2)
            .all(|w| paper_order(&w[0], &w[1]) == Ordering::Less);
        let mut stable = true;
        for _ in 0..5 {
            let mut shuffled = set.clone();
            shuffled.shuffle(g.rng());
            let normal = SymPoly::normalize(shuffled.clone()).expect("nonempty");
            shuffled.sort();
            stable &= shuffled == sorted && normal.terms() == sorted.as_slice();
        }
        r.record(strict && stable && irreducible_set(&sorted), || {
            format!("{sorted:?}")
        });
    }
    r
}

/// The full suite with `cases` instances per randomized law.
pub fn run_suite(seed: u64, cases: u64) -> Vec<LawResult> {
    let sub = |i: u64| seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i);
    vec![
        semigroup(sub(1), cases, 4, 6),
        flatten_oracle(sub(2), cases),
        pi_homomorphism(sub(3), cases),
        ir_closure(sub(4), cases),
        term_laws(sub(5), cases),
        evaluation_identity(sub(6), cases),
        shift_identity(sub(7), cases),
        composition(sub(8), cases),
        shift_monotone(sub(9), cases),
        r_set_characterization(8),
        partial_associativity(sub(10), cases),
        sequence_and_adequacy(sub(11), cases),
        order_laws(&term_pool(sub(12), 30)),
        unique_enumeration(sub(13), cases.min(1000)),
    ]
}
