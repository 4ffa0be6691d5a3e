//! Exhaustive finite-field specialization of covers of the projective line.
//!
//! A cover `F/F_q(T)` is given by a bivariate polynomial `P(T, Y)`. At every
//! point `t0` of `P^1(F_{q^m})` the factorization pattern of `P(t0, Y)` gives
//! the Frobenius order at `t0`; collecting these over all points and
//! comparing them with the element orders of a declared Galois group gives
//! the existence verdicts in [`engine`].
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line
//! and the thread-parallel scan live in the `tchebff` companion crate.

#![no_std]

extern crate alloc;

pub mod cover;
pub mod engine;
pub mod error;
pub mod field;
pub mod group;
pub mod limits;
pub mod poly;

mod arith;

pub use cover::{BivariatePoly, BranchLocus, Cover, FrobeniusRecord, ProjPoint, ScanResult};
pub use engine::{TchebReport, Verdict};
pub use error::{CoverError, EngineError, FieldError, GroupError, PolyError};
pub use field::{Field, FieldElement};
pub use group::{FiniteGroup, GroupInvariants, Universe};
pub use limits::Limits;
pub use poly::{Factorization, UniPoly};
