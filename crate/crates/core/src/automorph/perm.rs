use serde::Serialize;

use crate::word::check_k;
use crate::{Error, Result};

/// A permutation `σ` of the bit positions `1..=2k`, acting on strings by
/// `σ(u)_i = u_{σ(i)}`.
///
/// Under this action `σ(x_j) = x_{σ⁻¹(j)}` and `σ(ρ(u)) = (ρ ∘ σ)(u)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct BitPermutation {
    sigma: Vec<u32>,
}

impl BitPermutation {
    /// `sigma[i - 1] = σ(i)`, 1-based.
    pub fn new(sigma: Vec<u32>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::NotBijective(format!("{n} positions is not an even width")));
        }
        check_k::<u64>((n / 2) as u32)?;
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s == 0 || s as usize > n || std::mem::replace(&mut seen[s as usize - 1], true) {
                return Err(Error::NotBijective(format!("{sigma:?}")));
            }
        }
        Ok(BitPermutation { sigma })
    }

    pub fn identity(k: u32) -> Result<Self> {
        check_k::<u64>(k)?;
        Ok(BitPermutation { sigma: (1..=2 * k).collect() })
    }

    pub fn transposition(k: u32, i: u32, j: u32) -> Result<Self> {
        Self::cycle(k, &[i, j])
    }

    /// The cycle `(c_0 c_1 … c_r)`: `σ(c_t) = c_{t+1}`, `σ(c_r) = c_0`.
    pub fn cycle(k: u32, positions: &[u32]) -> Result<Self> {
        let mut sigma: Vec<u32> = Self::identity(k)?.sigma;
        for (t, &p) in positions.iter().enumerate() {
            if p == 0 || p > 2 * k {
                return Err(Error::NotBijective(format!("position {p} outside 1..={}", 2 * k)));
            }
            sigma[p as usize - 1] = positions[(t + 1) % positions.len()];
        }
        Self::new(sigma)
    }

    pub fn k(&self) -> u32 {
        (self.sigma.len() / 2) as u32
    }

    /// `σ(i)`.
    pub fn image(&self, i: u32) -> u32 {
        self.sigma[i as usize - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| s as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.sigma.len()];
        for (i, &s) in self.sigma.iter().enumerate() {
            inv[s as usize - 1] = i as u32 + 1;
        }
        BitPermutation { sigma: inv }
    }

    /// The position map `i ↦ other(self(i))`, whose action on strings is
    /// "apply `other`, then `self`".
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.sigma.len(), other.sigma.len());
        BitPermutation { sigma: self.sigma.iter().map(|&s| other.image(s)).collect() }
    }

    /// The action on a string value.
    pub fn apply(&self, u: u64) -> u64 {
        self.sigma.iter().enumerate().fold(0, |acc, (i, &s)| acc | ((u >> (s - 1)) & 1) << i)
    }

    /// All `(2k)!` permutations in lexicographic order of `sigma`.
    pub fn all(k: u32) -> Result<impl Iterator<Item = BitPermutation>> {
        let mut next = Some(Self::identity(k)?.sigma);
        Ok(std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut p = cur.clone();
            if let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) {
                let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
                p.swap(i, j);
                p[i + 1..].reverse();
                next = Some(p);
            }
            Some(BitPermutation { sigma: cur })
        }))
    }
}
