//! The partial semigroup `(S, ∔)` near zero and its symbolic counterpart.
//!
//! `S` is a dense subring of the reals cut down to `(0, 1)`, with `x ∔ y`
//! defined exactly when `x + y` stays in `S`. Partial sequences, their
//! finite sums `sigma_F`, and the shift maps `T_F` live here, together with
//! the symbolic shift `T_F^eta f` on `V_k(0, S)`.

mod ground;
mod sequence;
mod symbolic;

pub use ground::GroundRing;
pub use sequence::{FiniteIndexSet, PartialSequence};
pub use symbolic::{shift, t_op, vk0s_member};
