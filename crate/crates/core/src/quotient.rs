//! The twin quotient `Ω̃_2k`, whose vertices are the classes `{u, u + 1}`.

use std::marker::PhantomData;

use crate::bits::Bitstring;
use crate::graph::{DenseGraph, Graph};
use crate::word::{check_k, Word};
use crate::{Error, Result, MAX_MATERIALIZE_K};

/// A twin class `{rep, rep + 1}`. The representative is the numerically
/// smaller member, which is always the one with bit `2k` clear, so the
/// representatives are exactly `0..2^(2k-1)` and double as class indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TwinClass<W: Word = u64> {
    rep: W,
    k: u32,
}

impl<W: Word> TwinClass<W> {
    pub fn of(u: Bitstring<W>) -> Self {
        let t = u.twin();
        TwinClass { rep: u.value().min(t.value()), k: u.k() }
    }

    pub fn from_index(k: u32, index: W) -> Result<Self> {
        check_k::<W>(k)?;
        if index > W::ones(k) >> 1 {
            return Err(Error::Malformed(format!("class index {index:?} out of range")));
        }
        Ok(TwinClass { rep: index, k })
    }

    pub fn rep(&self) -> Bitstring<W> {
        Bitstring::new_unchecked(self.k, self.rep)
    }

    pub fn index(&self) -> W {
        self.rep
    }

    pub fn members(&self) -> (Bitstring<W>, Bitstring<W>) {
        let r = self.rep();
        (r, r.twin())
    }

    /// `(m, 2k - m)` with `m ≤ k`.
    pub fn weight(&self) -> (u32, u32) {
        let w = self.rep.count_ones();
        let m = w.min(2 * self.k - w);
        (m, 2 * self.k - m)
    }

    /// Parity of either member (twins share parity).
    pub fn is_odd(&self) -> bool {
        self.rep.count_ones() % 2 == 1
    }
}

/// `Ω̃_2k`, of order `2^(2k-1)`, with `[u] ~ [w]` iff `u ~ w` in `Ω_2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientGraph<W: Word = u64> {
    k: u32,
    _word: PhantomData<W>,
}

impl<W: Word> QuotientGraph<W> {
    pub fn new(k: u32) -> Result<Self> {
        check_k::<W>(k)?;
        Ok(QuotientGraph { k, _word: PhantomData })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `2^(2k-1)`.
    pub fn class_count(&self) -> u128 {
        1u128 << (2 * self.k - 1)
    }

    pub fn class(&self, index: W) -> Result<TwinClass<W>> {
        TwinClass::from_index(self.k, index)
    }

    pub fn is_adjacent(&self, a: TwinClass<W>, b: TwinClass<W>) -> bool {
        (a.rep ^ b.rep).count_ones() == self.k
    }

    pub fn classes(&self) -> impl Iterator<Item = TwinClass<W>> + '_ {
        (0..self.class_count() as u64).map(move |i| TwinClass { rep: W::from(i).unwrap(), k: self.k })
    }

    pub fn materialize(&self) -> Result<DenseGraph> {
        self.materialize_with_cap(MAX_MATERIALIZE_K)
    }

    pub fn materialize_with_cap(&self, max_k: u32) -> Result<DenseGraph> {
        if self.k > max_k {
            return Err(Error::SizeCap {
                what: format!("materializing the quotient of Ω_{}", 2 * self.k),
                cap: max_k as u128,
            });
        }
        Ok(self.to_dense())
    }

    /// True iff no two distinct classes share a neighborhood.
    pub fn is_twin_free(&self) -> Result<bool> {
        let g = self.materialize()?;
        let mut rows: Vec<&[u64]> = (0..g.order()).map(|c| g.row(c)).collect();
        rows.sort_unstable();
        Ok(rows.windows(2).all(|w| w[0] != w[1]))
    }
}

impl<W: Word> Graph for QuotientGraph<W> {
    fn order(&self) -> usize {
        self.class_count() as usize
    }

    fn is_edge(&self, u: usize, v: usize) -> bool {
        (u ^ v).count_ones() == self.k
    }
}

/// Builds `Ω̃_2k` after checking the class-adjacency rule is well defined.
pub fn build_quotient(k: u32) -> Result<(QuotientGraph<u64>, DenseGraph)> {
    let q = QuotientGraph::<u64>::new(k)?;
    let g = q.materialize()?;
    let ones = u64::ones(k);
    for a in 0..g.order() as u64 {
        for b in 0..g.order() as u64 {
            let adj = (a ^ b).count_ones() == k;
            let others = [(a, b ^ ones), (a ^ ones, b), (a ^ ones, b ^ ones)];
            if others.iter().any(|&(x, y)| ((x ^ y).count_ones() == k) != adj) {
                return Err(Error::Invariant(format!("class adjacency ill-defined at ({a}, {b})")));
            }
        }
    }
    Ok((q, g))
}
