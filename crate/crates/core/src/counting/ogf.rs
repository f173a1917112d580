use std::time::{Duration, Instant};

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

use super::digraph::{node_of, LabeledDigraph, PathLabel, StarHeight};
use super::rational::RationalFunction;

/// Limits on a single generating-function computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorkBudget {
    /// Largest numerator or denominator degree allowed on any edge.
    pub max_degree: usize,
    /// Wall-clock limit; `None` disables it.
    pub time_limit: Option<Duration>,
}

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget {
            max_degree: 20_000,
            time_limit: Some(Duration::from_secs(3600)),
        }
    }
}

impl WorkBudget {
    pub fn unlimited() -> Self {
        WorkBudget {
            max_degree: usize::MAX,
            time_limit: None,
        }
    }

    /// Parses `degree=N,seconds=S` (either part optional) over the defaults.
    /// `seconds=0` disables the time limit.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut budget = WorkBudget::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("bad budget entry `{part}`")))?;
            let n: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad budget value `{value}`")))?;
            match key.trim() {
                "degree" => budget.max_degree = n as usize,
                "seconds" => {
                    budget.time_limit = (n > 0).then(|| Duration::from_secs(n));
                }
                other => {
                    return Err(Error::InvalidParameter(format!("unknown budget key `{other}`")))
                }
            }
        }
        Ok(budget)
    }
}

struct Meter {
    start: Instant,
    budget: WorkBudget,
}

impl Meter {
    fn new(budget: WorkBudget) -> Self {
        Meter {
            start: Instant::now(),
            budget,
        }
    }

    fn check(&self, degree: usize) -> Result<()> {
        if degree > self.budget.max_degree {
            return Err(Error::ResourceLimit(format!(
                "edge degree {degree} exceeds {}",
                self.budget.max_degree
            )));
        }
        if let Some(limit) = self.budget.time_limit {
            if self.start.elapsed() > limit {
                return Err(Error::ResourceLimit(format!("time limit {limit:?} exceeded")));
            }
        }
        Ok(())
    }
}

fn eliminate_all<L: PathLabel>(g: &mut LabeledDigraph<L>, meter: Option<&Meter>) -> Result<()> {
    g.remove_useless();
    while let Some(n) = g.choose_node() {
        let heaviest = g.eliminate_node(n)?;
        if let Some(m) = meter {
            m.check(heaviest)?;
        }
    }
    Ok(())
}

/// Generating function of the cardinality sequence of `L(d)`, by state
/// elimination with the default budget.
pub fn compute_ogf<T: Coefficient>(d: &Dfa) -> Result<RationalFunction<T>> {
    compute_ogf_with_budget(d, WorkBudget::default())
}

pub fn compute_ogf_with_budget<T: Coefficient>(
    d: &Dfa,
    budget: WorkBudget,
) -> Result<RationalFunction<T>> {
    let meter = Meter::new(budget);
    let mut g = LabeledDigraph::<RationalFunction<T>>::from_dfa(d);
    eliminate_all(&mut g, Some(&meter))?;
    Ok(g.result().cloned().unwrap_or_else(RationalFunction::zero))
}

/// Eliminates the states in exactly the given order (a permutation of all
/// states), without pruning.
pub fn compute_ogf_with_order<T: Coefficient>(
    d: &Dfa,
    order: &[usize],
) -> Result<RationalFunction<T>> {
    let mut seen = vec![false; d.state_count()];
    for &q in order {
        if q >= seen.len() || std::mem::replace(&mut seen[q], true) {
            return Err(Error::InvalidParameter("order is not a permutation of the states".into()));
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::InvalidParameter("order is not a permutation of the states".into()));
    }
    let mut g = LabeledDigraph::<RationalFunction<T>>::from_dfa(d);
    for &q in order {
        g.eliminate_node(node_of(q))?;
    }
    Ok(g.result().cloned().unwrap_or_else(RationalFunction::zero))
}

/// Star height of the regular expression obtained by state elimination, using
/// the same ordering heuristic with star height standing in for degree. Zero
/// for finite languages.
pub fn approx_star_height(d: &Dfa) -> usize {
    let mut g = LabeledDigraph::<StarHeight>::from_dfa(d);
    eliminate_all(&mut g, None).expect("star height labels never fail");
    g.result().map_or(0, |h| h.0)
}
