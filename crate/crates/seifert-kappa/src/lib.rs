//! Exact invariants of Seifert-fibered integer homology spheres carrying the
//! standard cyclic action along the fibers.
//!
//! The crate is organized bottom-up:
//!
//! * [`exact`]: rationals and elements of cyclotomic fields.
//! * [`sums`]: Dedekind, Dedekind-Rademacher, Dedekind-Dieter and cosecant sums,
//!   each with a definitional evaluator and a reciprocity evaluator.
//! * [`seifert`]: Seifert data, derived constants and rotation numbers.
//! * [`eta`]: equivariant signature eta invariants, α-invariants and the
//!   correction terms n_L.
//! * [`kappa`]: graded poset vectors and kappa sets of Brieskorn spheres.
//! * [`obstruct`]: fixed-point data, signature-defect vectors and the
//!   smoothability verdicts built on them.
//!
//! The arithmetic core is generic over [`exact::Scalar`]. The aliases below fix
//! the default scalar used by the higher-level modules.

pub mod error;
pub mod eta;
pub mod exact;
pub mod kappa;
pub mod obstruct;
pub mod seifert;
pub mod sums;

pub use error::{Error, Result};

/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;

/// Element of a cyclotomic field with [`Rational`] coefficients.
pub type CyclotomicValue = exact::Cyclotomic<Rational>;
