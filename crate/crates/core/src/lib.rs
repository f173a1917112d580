//! Exact accuracy assessment of inferred finite-state models.
//!
//! An inferred model `H` is compared with a reference model `R` by building the
//! automata of true positives (`R ∩ H`), false positives (`¬R ∩ H`) and false
//! negatives (`R ∩ ¬H`), computing the ordinary generating function of each
//! language by state elimination, and reading the exact number of traces of
//! every length off the rational function. Precision and recall then follow
//! per trace length or cumulatively up to a bound.
//!
//! The statistical and model-based baselines this replaces (random-walk trace
//! similarity, W-method test sets, uniform sampling of `Σ^l`) and a k-tails
//! learner for producing test subjects live in [`baselines`] and [`inference`].
//!
//! The arithmetic in [`counting`] and [`metrics`] is generic over a
//! [`Coefficient`]; the aliases below fix it to arbitrary precision integers.

pub mod automata;
pub mod baselines;
pub mod counting;
mod error;
pub mod inference;
pub mod metrics;
mod scalar;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use scalar::Coefficient;

/// Integer polynomial with arbitrary precision coefficients.
pub type Poly = counting::Polynomial<BigInt>;
/// Generating function of a language's cardinality sequence.
pub type Ogf = counting::RationalFunction<BigInt>;
/// Exact per-length trace counts.
pub type Counts = counting::CardinalitySequence<BigInt>;
/// Exact rational accuracy value, or undefined.
pub type Value = metrics::Measure<BigInt>;
pub type Confusion = metrics::ConfusionCounts<BigInt>;
pub type Assessment = metrics::AssessmentResult<BigInt>;
