use rand::Rng;
use serde::Serialize;

use super::{swappable_pairs, Verification};
use crate::automorph::{
    first_nontrivial, is_automorphism, perm_automorphism, quotient_map, stabilizer_is_trivial, translation,
    twin_swap_set, BitPermutation, QuotientAutomorphism,
};
use crate::bits::masks_of_weight;
use crate::graph::{DenseGraph, Graph};
use crate::report::Verdict;
use crate::word::Word;
use crate::{Bits, Class, Error, Omega, OmegaQuotient, Result};

/// Largest graph [`det_number_exact`] accepts.
pub const MAX_DET_ORDER: usize = 32;

/// True iff the pointwise stabilizer of `s` in `Aut(g)` is trivial.
pub fn is_determining(g: &DenseGraph, s: &[usize]) -> Result<bool> {
    stabilizer_is_trivial(g, s)
}

/// `Det(g)` with a smallest determining set (lexicographically first among
/// those of minimum size).
///
/// Every transposition automorphism `(u v)` forces `u` or `v` into the set,
/// which prunes most candidates before any search.
pub fn det_number_exact(g: &DenseGraph) -> Result<(usize, Vec<usize>)> {
    let n = g.order();
    if n > MAX_DET_ORDER {
        return Err(Error::SizeCap { what: format!("exact Det on {n} vertices"), cap: MAX_DET_ORDER as u128 });
    }
    let forced: Vec<u64> = swappable_pairs(g).into_iter().map(|(u, v)| 1 << u | 1 << v).collect();
    for size in 0..=n as u32 {
        for mask in masks_of_weight::<u64>(n as u32, size) {
            if forced.iter().any(|&p| p & mask == 0) {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_determining(g, &s)? {
                return Ok((size as usize, s));
            }
        }
    }
    unreachable!("the whole vertex set is determining")
}

/// Does `s` meet every twin pair of `Ω_2k`?
pub fn hits_every_twin_pair(k: u32, s: &[usize]) -> bool {
    let ones = u64::ones(k) as usize;
    let mut hit = vec![false; 1 << (2 * k - 1)];
    for &v in s {
        hit[v.min(v ^ ones)] = true;
    }
    hit.iter().all(|&h| h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub k: u32,
    /// Subsets classified.
    pub checked: u64,
    /// Subsets decided by a stabilizer search rather than a twin-swap certificate.
    pub searched: u64,
    /// A subset on which the two sides disagree.
    pub mismatch: Option<Vec<usize>>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn subset_of(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `S` is determining for `Ω_2k` iff it meets every twin pair, over all
/// `2^(2^(2k))` subsets (`k ≤ 2`). A subset missing the pair `[u]` is
/// refuted by `π_u`, checked once per pair; the rest are searched.
pub fn twin_cover_equivalence(k: u32) -> Result<EquivalenceReport> {
    if k > 2 {
        return Err(Error::SizeCap { what: "exhaustive subset sweep".into(), cap: 2 });
    }
    let g = Omega::new(k)?.materialize()?;
    let n = g.order();
    let ones = n - 1;
    let q = OmegaQuotient::new(k)?;
    for c in q.classes() {
        if !is_automorphism(&twin_swap_set(k, &[c])?, &g)? {
            return Err(Error::Invariant(format!("twin swap of class {} is not an automorphism", c.index())));
        }
    }
    let mut report = EquivalenceReport { k, checked: 0, searched: 0, mismatch: None };
    for mask in 0..1u64 << n {
        report.checked += 1;
        let missed = (0..n / 2).find(|&r| mask >> r & 1 == 0 && mask >> (r ^ ones) & 1 == 0);
        if missed.is_some() {
            // π_r fixes every vertex outside [r], so it fixes S pointwise.
            continue;
        }
        report.searched += 1;
        let s = subset_of(mask, n);
        if !is_determining(&g, &s)? {
            report.mismatch = Some(s);
            break;
        }
    }
    Ok(report)
}

/// [`twin_cover_equivalence`] on random subsets, every one decided by a
/// stabilizer search. Half the samples are drawn to meet every twin pair.
pub fn twin_cover_sampled(k: u32, samples: usize, rng: &mut impl Rng) -> Result<EquivalenceReport> {
    let g = Omega::new(k)?.materialize()?;
    let n = g.order();
    let ones = n - 1;
    let mut report = EquivalenceReport { k, checked: 0, searched: 0, mismatch: None };
    for i in 0..samples {
        let s: Vec<usize> = if i % 2 == 0 {
            (0..n).filter(|_| rng.gen_bool(0.5)).collect()
        } else {
            let mut s: Vec<usize> = (0..n / 2)
                .flat_map(|r| match rng.gen_range(0..3) {
                    0 => vec![r],
                    1 => vec![r ^ ones],
                    _ => vec![r, r ^ ones],
                })
                .collect();
            s.sort_unstable();
            s
        };
        report.checked += 1;
        report.searched += 1;
        if is_determining(&g, &s)? != hits_every_twin_pair(k, &s) {
            report.mismatch = Some(s);
            break;
        }
    }
    Ok(report)
}

/// `D = {[x_1], …, [x_(2k-1)]}`.
pub fn build_d(k: u32) -> Result<Vec<Class>> {
    (1..2 * k).map(|i| Ok(Class::of(Bits::unit(k, i)?))).collect()
}

/// The graph on which `D` is claimed determining: `Ω̃_2k` for odd `k`, its
/// odd component for even `k`. Returns the graph and its vertex list as
/// class indices.
pub fn d_host(k: u32) -> Result<(DenseGraph, Vec<usize>)> {
    let q = OmegaQuotient::new(k)?;
    let g = q.materialize()?;
    if k % 2 == 1 {
        Ok((g, (0..q.order()).collect()))
    } else {
        let odd: Vec<usize> = (0..q.order()).filter(|c| c.count_ones() % 2 == 1).collect();
        Ok((g.induced(&odd), odd))
    }
}

/// Checks that `D` has trivial pointwise stabilizer on its host graph.
pub fn verify_d_determining(k: u32) -> Result<Verification> {
    let (host, vertices) = d_host(k)?;
    let d: Vec<usize> = build_d(k)?
        .iter()
        .map(|c| vertices.binary_search(&(c.index() as usize)).expect("D lies in the odd classes"))
        .collect();
    let colors = {
        let mut c = vec![0u32; host.order()];
        for (i, &v) in d.iter().enumerate() {
            c[v] = i as u32 + 1;
        }
        c
    };
    let survivor = first_nontrivial(&host, &colors)?;
    Ok(Verification {
        claim: format!("D determining on quotient, k={k}"),
        verdict: Verdict::from_bool(survivor.is_none()),
        witness: survivor,
    })
}

/// A nontrivial automorphism of `Ω̃_2k` fixing `D′ = D ∖ {[x_(2k-1)]}`
/// pointwise, so no proper subset of `D` of that shape is determining.
/// For `k ≥ 2` it is induced by the transposition `(2k-1 2k)`; for `k = 1`,
/// where that transposition acts trivially on classes, by `τ_(x_1)`.
pub fn minimality_witness(k: u32) -> Result<QuotientAutomorphism> {
    let a = if k == 1 {
        translation(Bits::unit(1, 1)?)?
    } else {
        perm_automorphism(&BitPermutation::transposition(k, 2 * k - 1, 2 * k)?)?
    };
    let b = quotient_map(&a, k)?;
    let d = build_d(k)?;
    let fixes = d[..d.len() - 1].iter().all(|c| b.apply(c.index() as usize) == c.index() as usize);
    if !fixes || b.is_identity() || !b.is_automorphism() {
        return Err(Error::Invariant(format!("minimality witness fails at k={k}")));
    }
    Ok(b)
}

/// Searches `Ω̃_2k` for a determining set smaller than `|D| = 2k - 1`, up
/// to `max_size` vertices. Returns the first one found.
pub fn smaller_quotient_determining_set(k: u32, max_size: usize) -> Result<Option<Vec<usize>>> {
    let (host, vertices) = d_host(k)?;
    let n = host.order();
    if n > 64 {
        return Err(Error::SizeCap { what: "subset probe".into(), cap: 64 });
    }
    let limit = max_size.min(2 * k as usize - 2);
    for size in 0..=limit as u32 {
        for mask in masks_of_weight::<u128>(n as u32, size) {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_determining(&host, &s)? {
                return Ok(Some(s.into_iter().map(|v| vertices[v]).collect()));
            }
        }
    }
    Ok(None)
}
