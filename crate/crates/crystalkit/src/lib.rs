//! Exact computations for type A crystals, the q-deformed exterior algebra
//! of matrices and the socle multiplicities of tensor products of extremal
//! weight modules.
//!
//! Modules, from the bottom up:
//!
//! * [`ratfun`]: Laurent polynomials and rational functions in `q`.
//! * [`partitions`]: partitions, Littlewood-Richardson coefficients, weights.
//! * [`crystal`]: a generic crystal engine with the tensor product rule.
//! * [`tableaux`]: tableau, dual tableau and bitableau crystals of `gl_N`.
//! * [`fockcrystal`]: 0-1 matrix crystals, the crystal of `N`-valued
//!   matrices and the highest weight sets counting socle multiplicities.
//! * [`qwedge`]: straightening, bar involution, canonical basis and
//!   representation-level crystal operators on the q-wedge algebra.
//! * [`charalg`]: the noncommutative character ring and its identities.

pub mod charalg;
pub mod crystal;
pub mod error;
pub mod fockcrystal;
pub mod partitions;
pub mod qwedge;
pub mod ratfun;
pub mod tableaux;

pub use error::{Error, Result};
