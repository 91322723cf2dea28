//! Exact binomial arithmetic behind the neighbor-counting argument, the
//! weight-`(k-1)` witness construction, and the supporting identities.

mod binom;
mod counts;
mod witness;

pub use binom::{binom, Count};
pub use counts::{
    decreasing_counts_check, decreasing_counts_range, diff_weights_check, neighbor_weight_count, ratio_identities,
    ratio_identity_check, weight_pm1_count,
};
pub use witness::{
    case_counts_sanity, same_weight_witness, unique_neighbors_check, witness_picks, Picks, WitnessRequest,
};

use serde::Serialize;

use crate::report::{Instance, Verdict};

/// Outcome of a formula or construction check over a parameter range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub lemma: String,
    pub range: String,
    pub verdict: Verdict,
    pub counterexample: Option<Instance>,
}

impl CheckReport {
    pub(crate) fn new(lemma: &str, range: String) -> Self {
        CheckReport { lemma: lemma.to_string(), range, verdict: Verdict::Pass, counterexample: None }
    }

    pub(crate) fn fail(mut self, at: Instance) -> Self {
        self.verdict = Verdict::Fail;
        self.counterexample = Some(at);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
