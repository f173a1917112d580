//! Exact trace counting: integer polynomials, rational generating functions,
//! fast OGF computation by state elimination, coefficient extraction, and a
//! dynamic-programming counter used as an independent cross-check.

mod digraph;
mod modular;
mod ogf;
mod poly;
mod rational;
mod sequence;

pub use digraph::{node_of, LabeledDigraph, PathLabel, StarHeight, FINAL, INITIAL};
pub use ogf::{
    approx_star_height, compute_ogf, compute_ogf_with_budget, compute_ogf_with_order, WorkBudget,
};
pub use poly::Polynomial;
pub use rational::RationalFunction;
pub use sequence::{coefficients, count_dp, CardinalitySequence};

use crate::automata::Dfa;
use crate::error::Result;
use crate::scalar::Coefficient;

/// Counts of `L(d)` for lengths `0..=n_max` through the generating function.
pub fn count_by_ogf<T: Coefficient>(
    d: &Dfa,
    n_max: usize,
    budget: WorkBudget,
) -> Result<CardinalitySequence<T>> {
    coefficients(&compute_ogf_with_budget(d, budget)?, n_max)
}
