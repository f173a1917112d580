//! Precision and recall over languages, per trace length and cumulatively, plus
//! bounded Jaccard distance.

mod chart;
mod measure;
mod table;

pub use chart::{svg_chart, Series};
pub use measure::Measure;
pub use table::{parse_metric_csv, Column, MetricRow, MetricTable, OutputMode};

use std::thread;

use crate::automata::{confusion_automata, intersect, union, Dfa};
use crate::counting::{coefficients, compute_ogf_with_budget, CardinalitySequence, RationalFunction, WorkBudget};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Generating functions of the true-positive, false-positive and
/// false-negative languages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfusionOgfs<T: Coefficient> {
    pub tp: RationalFunction<T>,
    pub fp: RationalFunction<T>,
    pub fn_: RationalFunction<T>,
}

/// Computes the three OGFs in parallel.
pub fn confusion_ogfs<T: Coefficient>(r: &Dfa, h: &Dfa, budget: WorkBudget) -> Result<ConfusionOgfs<T>> {
    let c = confusion_automata(r, h)?;
    let (tp, fp, fn_) = thread::scope(|s| {
        let tp = s.spawn(|| compute_ogf_with_budget::<T>(&c.tp, budget));
        let fp = s.spawn(|| compute_ogf_with_budget::<T>(&c.fp, budget));
        let fn_ = compute_ogf_with_budget::<T>(&c.fn_, budget);
        (tp.join().expect("ogf worker panicked"), fp.join().expect("ogf worker panicked"), fn_)
    });
    Ok(ConfusionOgfs { tp: tp?, fp: fp?, fn_: fn_? })
}

/// Per-length true-positive, false-positive and false-negative counts for
/// lengths `0..=max_length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfusionCounts<T> {
    pub tp: CardinalitySequence<T>,
    pub fp: CardinalitySequence<T>,
    pub fn_: CardinalitySequence<T>,
    pub max_length: usize,
    pub alphabet_size: usize,
}

impl<T: Coefficient> ConfusionCounts<T> {
    pub fn new(
        tp: CardinalitySequence<T>,
        fp: CardinalitySequence<T>,
        fn_: CardinalitySequence<T>,
        alphabet_size: usize,
    ) -> Result<Self> {
        let len = tp.len();
        if len == 0 || fp.len() != len || fn_.len() != len {
            return Err(Error::InvalidParameter("confusion sequences differ in length".into()));
        }
        Ok(ConfusionCounts { tp, fp, fn_, max_length: len - 1, alphabet_size })
    }

    pub fn from_ogfs(ogfs: &ConfusionOgfs<T>, n_max: usize, alphabet_size: usize) -> Result<Self> {
        Self::new(
            coefficients(&ogfs.tp, n_max)?,
            coefficients(&ogfs.fp, n_max)?,
            coefficients(&ogfs.fn_, n_max)?,
            alphabet_size,
        )
    }
}

pub fn confusion_counts<T: Coefficient>(r: &Dfa, h: &Dfa, n_max: usize) -> Result<ConfusionCounts<T>> {
    confusion_counts_with_budget(r, h, n_max, WorkBudget::default())
}

pub fn confusion_counts_with_budget<T: Coefficient>(
    r: &Dfa,
    h: &Dfa,
    n_max: usize,
    budget: WorkBudget,
) -> Result<ConfusionCounts<T>> {
    let ogfs = confusion_ogfs(r, h, budget)?;
    ConfusionCounts::from_ogfs(&ogfs, n_max, r.alphabet().len())
}

/// Precision and recall at one length (or up to it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthMeasure<T: Coefficient> {
    pub n: usize,
    pub precision: Measure<T>,
    pub recall: Measure<T>,
}

/// Single-length and cumulative assessment with the running totals behind the
/// cumulative values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssessmentResult<T: Coefficient> {
    pub per_length: Vec<LengthMeasure<T>>,
    pub cumulative: Vec<LengthMeasure<T>>,
    pub c_tp: Vec<T>,
    pub c_fp: Vec<T>,
    pub c_fn: Vec<T>,
}

impl<T: Coefficient> AssessmentResult<T> {
    /// Rows with all four metric columns.
    pub fn table(&self) -> MetricTable<T> {
        let rows = self
            .per_length
            .iter()
            .zip(&self.cumulative)
            .map(|(eq, le)| MetricRow {
                n: eq.n,
                precision_eq: eq.precision.clone(),
                recall_eq: eq.recall.clone(),
                precision_le: le.precision.clone(),
                recall_le: le.recall.clone(),
            })
            .collect();
        MetricTable { rows }
    }
}

fn measures<T: Coefficient>(tp: &[T], fp: &[T], fn_: &[T]) -> Vec<LengthMeasure<T>> {
    (0..tp.len())
        .map(|n| LengthMeasure {
            n,
            precision: Measure::ratio(tp[n].clone(), tp[n].add_ref(&fp[n])),
            recall: Measure::ratio(tp[n].clone(), tp[n].add_ref(&fn_[n])),
        })
        .collect()
}

/// `precision_{=n} = tp_n / (tp_n + fp_n)`, `recall_{=n} = tp_n / (tp_n + fn_n)`.
pub fn single_length_assessment<T: Coefficient>(c: &ConfusionCounts<T>) -> Vec<LengthMeasure<T>> {
    measures(c.tp.counts(), c.fp.counts(), c.fn_.counts())
}

/// The same ratios over the running sums `C_TP`, `C_FP`, `C_FN` up to each `n`.
pub fn cumulative_assessment<T: Coefficient>(c: &ConfusionCounts<T>) -> Vec<LengthMeasure<T>> {
    measures(&c.tp.cumulative(), &c.fp.cumulative(), &c.fn_.cumulative())
}

pub fn assess<T: Coefficient>(c: &ConfusionCounts<T>) -> AssessmentResult<T> {
    AssessmentResult {
        per_length: single_length_assessment(c),
        cumulative: cumulative_assessment(c),
        c_tp: c.tp.cumulative(),
        c_fp: c.fp.cumulative(),
        c_fn: c.fn_.cumulative(),
    }
}

/// `1 - |L(R ∩ H) ∩ Σ^{≤n}| / |L(R ∪ H) ∩ Σ^{≤n}|`.
pub fn bounded_jaccard<T: Coefficient>(r: &Dfa, h: &Dfa, n_max: usize) -> Result<Measure<T>> {
    let budget = WorkBudget::default();
    let both = coefficients(&compute_ogf_with_budget::<T>(&intersect(r, h)?, budget)?, n_max)?;
    let either = coefficients(&compute_ogf_with_budget::<T>(&union(r, h)?, budget)?, n_max)?;
    let inter = both.cumulative().pop().expect("n_max + 1 entries");
    let uni = either.cumulative().pop().expect("n_max + 1 entries");
    Ok(Measure::ratio(uni.sub_ref(&inter), uni))
}
