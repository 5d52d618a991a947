//! Exact arithmetic for the sl(2) structure of the Boolean lattice,
//! realized inside the zeon algebra.
//!
//! The basis blades `e_I` of the zeon algebra over n generators
//! (commutative, with every generator squaring to zero) are indexed by
//! the subsets of {1, …, n}, so the algebra carries the Boolean lattice
//! B(n) on its basis. The raising operator `T = Σ ê_i`, the lowering
//! operator `T* = Σ δ̂_i`, and their commutator `U = [T*, T]` satisfy the
//! defining relations of sl(2), and everything classical about B(n)
//! becomes linear algebra over this action:
//!
//! - the lattice decomposes into irreducible chains built from
//!   Dyck-type path vacua ([`zbasis`]),
//! - one-parameter subgroups `exp(sT)·u^ℒ·exp(tT*)` have closed-form
//!   entries and a rational composition law ([`ops`]),
//! - the Hamming and Johnson association schemes, Krawtchouk
//!   polynomials, the poset zeta/Möbius pair, and Sylvester–Hadamard
//!   matrices all fall out of specializations ([`schemes`]).
//!
//! All arithmetic is exact over arbitrary-precision rationals; the few
//! floating-point touchpoints are explicit conversions for spot checks.
//! Matrices act on columns: column J of an operator matrix holds the
//! coefficients of `op(e_J)`.

pub mod emit;
pub mod error;
pub mod matrix;
pub mod ops;
pub mod order;
pub mod rat;
pub mod schemes;
pub mod subset;
pub mod verify;
pub mod zbasis;
pub mod zeon;

mod book;

pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use ops::{GroupParams, KroneckerRealization, OperatorKind};
pub use order::CanonicalOrder;
pub use rat::Rat;
pub use subset::{Metric, SubsetIndex, MAX_DENSE, MAX_GROUND_SET};
pub use zbasis::{Chain, ChainLabel, ChainPath, LayerLabel, ZBasisState};
pub use zeon::ZeonVector;
