//! Exact computation of the Alexander polynomial of braid-closure knots via
//! the Burau representation, together with the universal invariant of the
//! corresponding long knot as a truncated power series in `h` with `t`
//! related to `h` by `t = (1 + h)^{-1}`.
//!
//! Everything is computed over exact rationals with arbitrary-precision
//! integers; there is no floating point anywhere, so the algebraic identities
//! verified by the test suites hold (or fail) exactly.
//!
//! The main entry points:
//!
//! - [`braid::BraidWord`] — braid words, closure permutations, cabling;
//! - [`burau`] — unreduced and reduced Burau matrices over Laurent
//!   polynomials;
//! - [`alexander`] — the Alexander polynomial by two independent
//!   determinantal routes;
//! - [`rt`] — Gaussian-state evaluation of the long-knot diagram and the
//!   universal invariant series;
//! - [`hopf`] — the operator representation behind the crossing kernels,
//!   with commutator and R-matrix checks;
//! - [`corpus`] — deterministic word corpora for the verification suites.

pub mod alexander;
pub mod braid;
pub mod burau;
pub mod corpus;
pub mod error;
pub mod hopf;
pub mod ring;
pub mod rt;

pub use alexander::{alexander_reduced, alexander_unreduced, AlexanderPoly};
pub use braid::{BraidWord, Permutation};
pub use error::{Error, Result};
pub use ring::{LaurentPoly, Rational, RingMatrix, TruncSeries};
pub use rt::{universal_invariant, InvariantSeries};
