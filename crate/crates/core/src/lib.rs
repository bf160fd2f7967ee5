//! Symbolic polynomial semigroups near zero, and certified search for
//! monochromatic polynomial configurations `{a + p_i(sigma_F)}`.
//!
//! Everything is exact: coefficients, sequence terms and shifts are
//! [`Rational`]s, so term equality, ring membership and colors are all
//! decidable and every reported witness can be rechecked bit for bit.
//!
//! Layout:
//! - [`rational`], [`poly`], [`sturm`]: exact kernel and positivity near zero.
//! - [`term`], [`sympoly`], [`syntax`]: the term alphabet, the symbolic
//!   polynomial semigroup and its text syntax.
//! - [`near_zero`]: ground rings, partial sequences and shift maps.
//! - [`search`]: witness search, verification and the brute-force oracle.
//! - [`laws`]: seeded random generators and the algebraic law suites.

pub mod error;
pub mod laws;
pub mod near_zero;
pub mod poly;
pub mod rational;
pub mod search;
pub mod sturm;
pub mod sympoly;
pub mod syntax;
pub mod term;

pub use error::{Error, Result};
pub use near_zero::{FiniteIndexSet, GroundRing, PartialSequence};
pub use poly::{IntPolynomial, RatPolynomial};
pub use rational::Rational;
pub use sympoly::SymPoly;
pub use term::{DiagonalScalar, Term};
