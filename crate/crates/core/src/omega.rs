//! The orthogonality graph `Ω_2k`.

use std::marker::PhantomData;

use serde::Serialize;

use crate::bits::{masks_of_weight, Bitstring};
use crate::combinat::binom;
use crate::graph::{DenseGraph, Graph};
use crate::word::{check_k, Word};
use crate::{Error, Result, MAX_MATERIALIZE_K};

/// `Ω_2k`: all `2k`-bit strings, adjacent when they differ in exactly `k`
/// bits. Only `k` is stored; adjacency is always a popcount.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrthGraph<W: Word = u64> {
    k: u32,
    _word: PhantomData<W>,
}

impl<W: Word> OrthGraph<W> {
    pub fn new(k: u32) -> Result<Self> {
        check_k::<W>(k)?;
        Ok(OrthGraph { k, _word: PhantomData })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `2^(2k)`.
    pub fn vertex_count(&self) -> u128 {
        1u128 << (2 * self.k)
    }

    pub fn ones(&self) -> W {
        W::ones(self.k)
    }

    pub fn vertex(&self, value: W) -> Result<Bitstring<W>> {
        Bitstring::new(self.k, value)
    }

    pub fn is_adjacent(&self, u: W, w: W) -> bool {
        (u ^ w).count_ones() == self.k
    }

    /// Neighbors of `u`: `u + v` for each weight-`k` string `v`.
    pub fn neighbors_of(&self, u: W) -> impl Iterator<Item = W> {
        masks_of_weight::<W>(2 * self.k, self.k).map(move |m| u ^ m)
    }

    /// `C(2k, k)`.
    pub fn expected_degree(&self) -> u64 {
        binom::<u64>(2 * self.k as u64, self.k as u64)
    }

    pub fn degree_check(&self) -> DegreeReport {
        let k = self.k;
        degree_check_with(k, move |u, w| (u ^ w).count_ones() == k)
    }

    pub fn materialize(&self) -> Result<DenseGraph> {
        self.materialize_with_cap(MAX_MATERIALIZE_K)
    }

    pub fn materialize_with_cap(&self, max_k: u32) -> Result<DenseGraph> {
        if self.k > max_k {
            return Err(Error::SizeCap { what: format!("materializing Ω_{}", 2 * self.k), cap: max_k as u128 });
        }
        let n = self.vertex_count() as usize;
        let mut g = DenseGraph::empty(n);
        for u in 0..n {
            let uw = W::from(u).unwrap();
            for w in self.neighbors_of(uw) {
                let w = w.as_usize();
                if u < w {
                    g.add_edge(u, w);
                }
            }
        }
        Ok(g)
    }

    /// Components (even `k`) or bipartition (odd `k`), computed by traversal
    /// and checked against the weight-parity split.
    pub fn parity_structure(&self) -> Result<ParityStructure> {
        let g = self.materialize()?;
        let n = g.order();
        let even: Vec<usize> = (0..n).filter(|v| v.count_ones() % 2 == 0).collect();
        let odd: Vec<usize> = (0..n).filter(|v| v.count_ones() % 2 == 1).collect();
        let comps = g.components();
        if self.k.is_multiple_of(2) {
            if comps.len() != 2 || comps[0] != even || comps[1] != odd {
                return Err(Error::Invariant(format!(
                    "expected even/odd components, found {} components",
                    comps.len()
                )));
            }
            // Translation by x_1 flips parity and preserves adjacency.
            let isomorphism: Vec<usize> = even.iter().map(|&v| v ^ 1).collect();
            let pos_odd = |v: usize| odd.binary_search(&v).unwrap();
            let ge = g.induced(&even);
            let go = g.induced(&odd);
            for (a, b) in ge.edges() {
                if !go.is_edge(pos_odd(isomorphism[a]), pos_odd(isomorphism[b])) {
                    return Err(Error::Invariant("translation by x_1 is not an isomorphism".into()));
                }
            }
            if ge.edge_count() != go.edge_count() {
                return Err(Error::Invariant("component edge counts differ".into()));
            }
            Ok(ParityStructure::TwoComponents { even, odd, isomorphism })
        } else {
            let coloring = g.two_coloring().ok_or_else(|| Error::Invariant("not bipartite".into()))?;
            if comps.len() != 1 {
                return Err(Error::Invariant(format!("{} components for odd k", comps.len())));
            }
            let part0: Vec<usize> = (0..n).filter(|&v| !coloring[v]).collect();
            if part0 != even {
                return Err(Error::Invariant("bipartition differs from parity split".into()));
            }
            Ok(ParityStructure::ConnectedBipartite { even, odd })
        }
    }
}

impl<W: Word> Graph for OrthGraph<W> {
    fn order(&self) -> usize {
        self.vertex_count() as usize
    }

    fn is_edge(&self, u: usize, v: usize) -> bool {
        (u ^ v).count_ones() == self.k
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        self.neighbors_of(W::from(u).unwrap()).map(Word::as_usize).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ParityStructure {
    /// Even `k`: the even- and odd-weight vertices form two components;
    /// `isomorphism[i]` is the image of `even[i]` in the odd component.
    TwoComponents { even: Vec<usize>, odd: Vec<usize>, isomorphism: Vec<usize> },
    /// Odd `k`: connected and bipartite with the parity classes as parts.
    ConnectedBipartite { even: Vec<usize>, odd: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeMode {
    /// Every vertex, by scanning all vertices.
    Exhaustive,
    /// A fixed sample of vertices, by scanning all vertices.
    Sampled,
    /// Only vertex 0, by scanning the weight-`k` strings.
    Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub k: u32,
    pub expected: u64,
    pub mode: DegreeMode,
    pub checked_vertices: usize,
    /// First vertex whose degree differs from `expected`, with its degree.
    pub counterexample: Option<(u64, u64)>,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Counts degrees of `Ω_2k` under an arbitrary adjacency predicate and
/// compares them with `C(2k, k)`.
pub fn degree_check_with(k: u32, adjacent: impl Fn(u64, u64) -> bool) -> DegreeReport {
    assert!((1..=31).contains(&k));
    let expected = binom::<u64>(2 * k as u64, k as u64);
    let scan = |u: u64| (0..1u64 << (2 * k)).filter(|&w| adjacent(u, w)).count() as u64;
    let (mode, sample): (DegreeMode, Vec<u64>) = if k <= MAX_MATERIALIZE_K {
        (DegreeMode::Exhaustive, (0..1u64 << (2 * k)).collect())
    } else if k <= 10 {
        let ones = u64::ones(k);
        let alternating = 0x5555_5555_5555_5555 & ones;
        (DegreeMode::Sampled, vec![0, 1, ones, alternating, ones >> k, 0b1011 & ones])
    } else {
        (DegreeMode::Formula, vec![0])
    };
    let mut counterexample = None;
    for &u in &sample {
        let d = if mode == DegreeMode::Formula {
            masks_of_weight::<u64>(2 * k, k).filter(|&m| adjacent(u, u ^ m)).count() as u64
        } else {
            scan(u)
        };
        if d != expected {
            counterexample = Some((u, d));
            break;
        }
    }
    DegreeReport { k, expected, mode, checked_vertices: sample.len(), counterexample }
}
