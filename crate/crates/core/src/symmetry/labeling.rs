use serde::{Serialize, Serializer};

use crate::automorph::Automorphism;
use crate::word::Word;
use crate::{Error, Result};

/// A vertex labeling `f : V → {1, …, d}`. Serializes as the bare array of
/// labels indexed by vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Labeling {
    labels: Vec<u32>,
    d: u32,
}

impl Labeling {
    pub fn new(labels: Vec<u32>, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Malformed("a labeling needs at least one label".into()));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > d) {
            return Err(Error::Malformed(format!("label {bad} outside 1..={d}")));
        }
        Ok(Labeling { labels, d })
    }

    /// `d` is the largest label present.
    pub fn from_labels(labels: Vec<u32>) -> Result<Self> {
        let d = labels.iter().copied().max().unwrap_or(1);
        Self::new(labels, d)
    }

    pub fn constant(n: usize) -> Self {
        Labeling { labels: vec![1; n], d: 1 }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn used_label_count(&self) -> usize {
        let mut seen: Vec<u32> = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Vertices carrying label `l`, ascending.
    pub fn class_of(&self, l: u32) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.labels[v] == l).collect()
    }

    /// A twin pair `{u, u + 1}` of `Ω_2k` with equal labels, as its canonical
    /// representative.
    pub fn monochromatic_twin_pair(&self, k: u32) -> Option<u64> {
        let ones = u64::ones(k) as usize;
        (0..self.len() / 2).find(|&r| self.labels[r] == self.labels[r ^ ones]).map(|r| r as u64)
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels.serialize(s)
    }
}

/// `f ∘ a`.
pub fn relabel_under(f: &Labeling, a: &Automorphism) -> Result<Labeling> {
    if f.len() != a.len() {
        return Err(Error::WidthMismatch { expected: f.len(), found: a.len() });
    }
    Ok(Labeling { labels: (0..f.len()).map(|v| f.labels[a.apply(v)]).collect(), d: f.d })
}

/// The induced map `[u] ↦ {f(u), f(u + 1)}` on twin classes, stored as
/// ordered pairs `(min, max)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PairLabeling {
    k: u32,
    pairs: Vec<(u32, u32)>,
}

impl PairLabeling {
    /// Fails on the first monochromatic twin pair.
    pub fn from_labeling(f: &Labeling, k: u32) -> Result<Self> {
        let n = 1usize << (2 * k);
        if f.len() != n {
            return Err(Error::WidthMismatch { expected: n, found: f.len() });
        }
        if let Some(r) = f.monochromatic_twin_pair(k) {
            return Err(Error::MonochromaticTwinPair(r));
        }
        let ones = n - 1;
        let pairs = (0..n / 2)
            .map(|r| {
                let (a, b) = (f.label(r), f.label(r ^ ones));
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(PairLabeling { k, pairs })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// One color per distinct pair, numbered in sorted pair order.
    pub fn colors(&self) -> Vec<u32> {
        let mut distinct = self.pairs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        self.pairs.iter().map(|p| distinct.binary_search(p).unwrap() as u32).collect()
    }
}
