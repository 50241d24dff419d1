//! Exact arithmetic for Diophantine m-tuples and the 2×2×2 hyperdeterminant.
//!
//! A Diophantine m-tuple is a set of distinct positive rationals such that the
//! product of any two is one less than a rational square. This crate implements
//! the algebra connecting those tuples to Cayley's hyperdeterminant of a
//! 2×2×2 hypermatrix: the regularity quartic and quintic, triple and quadruple
//! extension, hypermatrix completion, the SL(2)³ symmetry, two explicit
//! parameterizations of singular hypermatrices, and the alternating-tensor
//! covariant calculus behind all of it. Everything is exact: the scalar layer
//! is arbitrary-precision rationals, and every algebraic identity the crate
//! relies on is proved at run time by expanding both sides as multivariate
//! polynomials over the integers and comparing canonical forms.
//!
//! The crate is organized so that each capability has one runnable example
//! under `examples/`; the `hyperquad` binary is a thin JSON front end over the
//! same library calls.
//!
//! - [`arith`]: normalized big rationals and exact square-root detection.
//! - [`poly`]: sparse integer polynomials, the identity-proving substrate.
//! - [`report`]: named PASS/FAIL identity reports with findings.
//! - [`quadruple`]: the regularity quartic, Diophantine checks, triple extension.
//! - [`quintuple`]: the regularity quintic, quadruple extension, and the
//!   ten-variable generalized form.
//! - [`hypermatrix`]: hyperdeterminant, faces, rotations, completion, kernel
//!   vectors, and both parameterizations.
//! - [`covariants`]: invariants I₀–I₄, the S/T/U matrices, the cubic covariant,
//!   and the covariant square identity.
//! - [`search`]: integer enumeration, regularity classification, rank-2 matrix
//!   reduction, and componentwise rotations.
//! - [`cli`]: the subcommand dispatcher used by the `hyperquad` binary.

pub mod arith;
pub mod cli;
pub mod covariants;
pub mod hypermatrix;
pub mod poly;
pub mod quadruple;
pub mod quintuple;
pub mod report;
pub mod ring;
pub mod search;

mod jsonio;

pub use arith::{integer_sqrt_exact, rational_sqrt_exact, Rational};
pub use jsonio::JsonError;
pub use poly::{Monomial, Poly, Var};
pub use report::IdentityReport;
