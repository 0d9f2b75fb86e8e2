//! Exact arithmetic for a family of equivalent combinatorial models built on
//! conserved-quantity recurrences of cluster-algebraic type.
//!
//! The crate revolves around one family of quantities `R_{α,n}` satisfying a
//! quadratic three-term recurrence, and verifies — with integer arithmetic
//! only — that the same numbers arise as:
//!
//! * cluster variables computed from seeds indexed by Motzkin paths
//!   ([`qsystem`]),
//! * partition functions of hard particles on a family of graphs
//!   ([`qsystem::hard_particle_z`]),
//! * weighted path generating functions on rooted trees and their
//!   compactified quotients ([`graphs`], [`compact`]),
//! * minors of totally positive network matrices ([`totalpos`]),
//! * explicit multinomial closed forms ([`rank2`], [`compact`]).
//!
//! # Organization
//!
//! * [`scalar`], [`laurent`], [`frac`], [`series`], [`matrix`], [`comb`]:
//!   the exact-arithmetic substrate (Laurent polynomials over big integers
//!   or rationals, rational functions, truncated `t`-series, fraction-free
//!   linear algebra, exact multinomials).
//! * [`qsystem`]: the recurrence itself, seeds on Motzkin paths, conserved
//!   quantities, determinant identities, and hard-particle partition
//!   functions.
//! * [`rank2`]: the rank-two specializations with affine parameter pairs
//!   `(b, c)`, `bc = 4`, including explicit multinomial solutions.
//! * [`graphs`]: weighted rooted trees attached to Motzkin paths, transfer
//!   matrices, resolvent series, continued fractions and their
//!   rearrangements, path enumeration, and determinant identities of
//!   non-intersecting-path type.
//! * [`compact`]: the vertex-merging compactification of those trees and the
//!   equality of resolvents before and after merging.
//! * [`totalpos`]: factorization of the compactified transfer matrix into
//!   elementary totally nonnegative factors and positivity certificates.
//! * [`verify`]: named check suites used by the command-line driver and the
//!   acceptance tests.
//!
//! All arithmetic is exact; floating point is never used.  Operations that
//! can fail (non-exact division, non-invertible substitution, malformed
//! seeds) return [`Error`] rather than panicking.

#![warn(missing_docs)]

pub mod comb;
pub mod compact;
pub mod qsystem;
pub mod rank2;
pub mod error;
pub mod frac;
pub mod graphs;
pub mod laurent;
pub mod matrix;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod totalpos;
pub mod verify;

pub use error::{Error, Result};
pub use frac::Frac;
pub use laurent::{LaurentPoly, Monomial, VarId, VarRegistry};
pub use matrix::Matrix;
pub use ring::Ring;
pub use scalar::Scalar;
pub use series::TSeries;

/// Laurent polynomials with integer coefficients — the default ring for every
/// model in the crate.
pub type ZPoly = LaurentPoly<num_bigint::BigInt>;

/// Laurent polynomials with rational coefficients, used where a field is
/// genuinely needed (point evaluation, positivity certificates).
pub type QPoly = LaurentPoly<num_rational::BigRational>;

/// Rational functions over [`ZPoly`].
pub type ZFrac = Frac<num_bigint::BigInt>;

/// Truncated `t`-series over [`ZPoly`].
pub type ZSeries = TSeries<num_bigint::BigInt>;
