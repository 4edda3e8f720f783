//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the library. Each variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A cotangent or cosecant was requested at an integer multiple of π.
    #[error("pole: {kind}(pi*{a}/{b}) is undefined")]
    Pole { kind: &'static str, a: i64, b: i64 },

    /// A value expected to be rational has a non-constant canonical form.
    #[error("value is not rational; canonical form {0}")]
    NotRational(String),

    /// Two arguments that must be coprime are not.
    #[error("arguments are not coprime: gcd({0}, {1}) != 1")]
    NotCoprime(i64, i64),

    /// A reciprocity evaluator was called outside its hypotheses.
    #[error("reciprocity hypothesis violated: {0}")]
    ReciprocityHypothesisViolated(String),

    /// The even continued-fraction reciprocity needs opposite parities.
    #[error("parity obstruction: q={q} and p={p} have the same parity")]
    ParityObstruction { q: i64, p: i64 },

    /// The group order shares a factor with an exceptional fiber.
    #[error("order {r} is not coprime to fiber {alpha}")]
    NotCoprimeToFibers { r: i64, alpha: i64 },

    /// The character index L is not admissible.
    #[error("inadmissible L: {0}")]
    InadmissibleL(String),

    /// A correction vector does not have one entry per character.
    #[error("incomplete vector: expected {expected} entries, found {found}")]
    IncompleteVector { expected: usize, found: usize },

    /// The input is not one of the supported Brieskorn families.
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    /// The sign of a rotation number disagrees with the bundle degree.
    #[error("sign mismatch: {0}")]
    SignMismatch(String),

    /// A basis index is outside the admissible range.
    #[error("index {index} out of range for p={p}")]
    IndexOutOfRange { index: String, p: i64 },

    /// The parameters lie outside the classified range.
    #[error("outside classified range: {0}")]
    OutsideClassifiedRange(String),

    /// A pseudofree-only operation received surface data.
    #[error("fixed-point data contains surfaces")]
    SurfacesPresent,

    /// A stabilization was requested at a point type that is absent.
    #[error("no fixed point of type ({a},{b})")]
    NoSuchFixedPoint { a: i64, b: i64 },

    /// The non-trivial b2+ slots must be even.
    #[error("parity hypothesis violated: {0}")]
    ParityHypothesisViolated(String),

    /// A catalog entry lacks a required value.
    #[error("missing catalog data: {0}")]
    MissingCatalogData(String),

    /// Malformed input that does not fit a more specific variant.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    /// Fixed-width intermediate arithmetic overflowed.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
