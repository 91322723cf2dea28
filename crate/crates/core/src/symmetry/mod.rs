//! Determining sets and distinguishing labelings of `Ω_2k`, `Ω̃_2k` and
//! other small graphs: exact invariants by search, the constructive upper
//! bounds, and the certificates behind the lower bounds.

mod construct;
mod determining;
mod distinguishing;
mod labeling;

pub use construct::{
    construct_graph_distinguishing, construct_quotient_distinguishing, det_to_dist, label_pairs, m_bound,
    quotient_label_count,
};
pub use determining::{
    build_d, d_host, det_number_exact, hits_every_twin_pair, is_determining, minimality_witness,
    smaller_quotient_determining_set, twin_cover_equivalence, twin_cover_sampled, verify_d_determining,
    EquivalenceReport, MAX_DET_ORDER,
};
pub use distinguishing::{
    cyclic_witness, dist_gt_2_constructive, dist_gt_2_exhaustive, dist_number_exact, find_distinguishing,
    is_distinguishing_direct, is_distinguishing_reduced, no_3_distinguishing_component, normalize_two_labeling,
    preserving_automorphism, two_labeling_witness, ComponentSweep, MAX_DIST_ORDER,
};
pub use labeling::{relabel_under, Labeling, PairLabeling};

use serde::Serialize;

use crate::automorph::Automorphism;
use crate::graph::{DenseGraph, Graph};
use crate::report::Verdict;

/// Outcome of a symmetry claim, with the automorphism that decides it
/// (a surviving symmetry on failure, a constructed one on success).
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub claim: String,
    pub verdict: Verdict,
    pub witness: Option<Automorphism>,
}

/// Pairs `(u, v)`, `u < v`, whose transposition is an automorphism of `g`.
pub fn swappable_pairs(g: &DenseGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| g.swappable(u, v)).collect()
}

/// `Dist ≤ Det + 1`.
pub fn dist_det_bound_holds(dist: u32, det: usize) -> bool {
    dist as usize <= det + 1
}
