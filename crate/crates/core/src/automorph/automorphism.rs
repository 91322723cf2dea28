use serde::Serialize;

use super::perm::BitPermutation;
use crate::graph::{DenseGraph, Graph};
use crate::word::{check_k, Word};
use crate::{Bits, Class, Error, Result, MAX_EXPLICIT_MAP_K};

/// How an [`Automorphism`] was built.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    Permutation {
        sigma: Vec<u32>,
    },
    Translation {
        u: u64,
    },
    TwinSwap {
        classes: Vec<u64>,
    },
    /// Applied right to left, like function composition.
    Composite {
        parts: Vec<Provenance>,
    },
    Raw,
}

/// A bijection on `0..n`, usually the vertex set of `Ω_2k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Automorphism {
    provenance: Provenance,
    images: Vec<u32>,
}

fn explicit_k(k: u32) -> Result<usize> {
    check_k::<u64>(k)?;
    if k > MAX_EXPLICIT_MAP_K {
        return Err(Error::SizeCap {
            what: format!("explicit vertex map on Ω_{}", 2 * k),
            cap: MAX_EXPLICIT_MAP_K as u128,
        });
    }
    Ok(1usize << (2 * k))
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { provenance: Provenance::Raw, images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v as usize >= images.len() || std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::NotBijective(format!("image {v} repeated or out of range")));
            }
        }
        Ok(Automorphism { provenance: Provenance::Raw, images })
    }

    pub(crate) fn with_provenance(images: Vec<u32>, provenance: Provenance) -> Self {
        Automorphism { provenance, images }
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if self.len() != other.len() {
            return Err(Error::WidthMismatch { expected: self.len(), found: other.len() });
        }
        let images = other.images.iter().map(|&v| self.images[v as usize]).collect();
        let mut parts = Vec::new();
        for p in [&self.provenance, &other.provenance] {
            match p {
                Provenance::Composite { parts: inner } => parts.extend(inner.iter().cloned()),
                p => parts.push(p.clone()),
            }
        }
        Ok(Automorphism { provenance: Provenance::Composite { parts }, images })
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Automorphism { provenance: Provenance::Raw, images: inv }
    }

    /// `a(u + 1) = a(u) + 1` for every `u`, reading `self` as a map on `Ω_2k`.
    pub fn preserves_twins(&self, k: u32) -> bool {
        let ones = u64::ones(k) as usize;
        self.len() == ones + 1 && (0..self.len()).all(|u| self.apply(u ^ ones) == self.apply(u) ^ ones)
    }
}

/// `P_σ`, with result bit `i` equal to input bit `σ(i)`.
pub fn perm_automorphism(sigma: &BitPermutation) -> Result<Automorphism> {
    let n = explicit_k(sigma.k())?;
    let images = (0..n as u64).map(|u| sigma.apply(u) as u32).collect();
    Ok(Automorphism::with_provenance(images, Provenance::Permutation { sigma: sigma.as_slice().to_vec() }))
}

/// `τ_u : w ↦ u + w`.
pub fn translation(u: Bits) -> Result<Automorphism> {
    let n = explicit_k(u.k())?;
    let uv = u.value() as u32;
    let images = (0..n as u32).map(|w| w ^ uv).collect();
    Ok(Automorphism::with_provenance(images, Provenance::Translation { u: u.value() }))
}

/// `π_U`: swaps both members of every class in `U`, fixes the rest.
pub fn twin_swap_set(k: u32, classes: &[Class]) -> Result<Automorphism> {
    let n = explicit_k(k)?;
    let ones = u64::ones(k) as u32;
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut reps: Vec<u64> = Vec::with_capacity(classes.len());
    for c in classes {
        if c.rep().k() != k {
            return Err(Error::WidthMismatch { expected: 2 * k as usize, found: c.rep().width() as usize });
        }
        reps.push(c.index());
    }
    reps.sort_unstable();
    reps.dedup();
    for &r in &reps {
        let r = r as usize;
        images[r] = r as u32 ^ ones;
        images[r ^ ones as usize] = r as u32;
    }
    Ok(Automorphism::with_provenance(images, Provenance::TwinSwap { classes: reps }))
}

/// True iff `a` is a bijection of `V(g)` preserving adjacency and
/// non-adjacency.
pub fn is_automorphism(a: &Automorphism, g: &DenseGraph) -> Result<bool> {
    if a.len() != g.order() {
        return Err(Error::WidthMismatch { expected: g.order(), found: a.len() });
    }
    if Automorphism::from_images(a.images.clone()).is_err() {
        return Ok(false);
    }
    // A bijection mapping edges to edges is an automorphism of a finite graph.
    Ok(g.edges().all(|(u, v)| g.is_edge(a.apply(u), a.apply(v))))
}

/// Writes `a` as `τ_u ∘ P_σ` if it has that form, with `u = a(0)`.
pub fn normal_form(a: &Automorphism, k: u32) -> Option<(Bits, BitPermutation)> {
    let n = explicit_k(k).ok()?;
    if a.len() != n {
        return None;
    }
    let u = a.apply(0);
    let b = |v: usize| a.apply(v) ^ u;
    let width = 2 * k as usize;
    let mut inv = vec![0u32; width];
    for (j, slot) in inv.iter_mut().enumerate() {
        let image = b(1 << j);
        if image.count_ones() != 1 {
            return None;
        }
        *slot = image.trailing_zeros() + 1;
    }
    // b(x_j) = x_{σ⁻¹(j)}, so `inv` lists σ⁻¹.
    let sigma = BitPermutation::new(inv).ok()?.inverse();
    (0..n).all(|v| sigma.apply(v as u64) as usize == b(v)).then(|| (Bits::new(k, u as u64).unwrap(), sigma))
}

/// True iff `a` lies in the subgroup generated by bit permutations and
/// translations.
pub fn normal_form_membership(a: &Automorphism, k: u32) -> bool {
    normal_form(a, k).is_some()
}

/// `τ_u ∘ P_σ ∘ τ_x`, mapping the arc `(x, y)` to `(u, w)`. `σ⁻¹` sends the
/// sorted support of `x + y` onto the sorted support of `u + w` and the
/// sorted complement onto the sorted complement.
pub fn arc_transitivity_witness(x: Bits, y: Bits, u: Bits, w: Bits) -> Result<Automorphism> {
    let k = x.k();
    for (a, b) in [(x, y), (u, w)] {
        if a.k() != k || b.k() != k {
            return Err(Error::WidthMismatch { expected: 2 * k as usize, found: b.width() as usize });
        }
        if (a + b).weight() != k {
            return Err(Error::NotArc(a.value(), b.value()));
        }
    }
    let (s, t) = ((x + y).support(), (u + w).support());
    let complement = |supp: &[u32]| (1..=2 * k).filter(|p| !supp.contains(p)).collect::<Vec<_>>();
    let mut inv = vec![0u32; 2 * k as usize];
    for (from, to) in s.iter().zip(&t).chain(complement(&s).iter().zip(&complement(&t))) {
        inv[*from as usize - 1] = *to;
    }
    let sigma = BitPermutation::new(inv)?.inverse();
    translation(u)?.compose(&perm_automorphism(&sigma)?)?.compose(&translation(x)?)
}

/// A bijection on the class indices `0..2^(2k-1)` of `Ω̃_2k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QuotientAutomorphism {
    k: u32,
    images: Vec<u32>,
}

impl QuotientAutomorphism {
    pub fn identity(k: u32) -> Result<Self> {
        let n = explicit_k(k)? / 2;
        Ok(QuotientAutomorphism { k, images: (0..n as u32).collect() })
    }

    pub fn from_images(k: u32, images: Vec<u32>) -> Result<Self> {
        let n = explicit_k(k)? / 2;
        if images.len() != n {
            return Err(Error::WidthMismatch { expected: n, found: images.len() });
        }
        Automorphism::from_images(images.clone())?;
        Ok(QuotientAutomorphism { k, images })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, class: usize) -> usize {
        self.images[class] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &QuotientAutomorphism) -> QuotientAutomorphism {
        assert_eq!(self.k, other.k);
        QuotientAutomorphism { k: self.k, images: other.images.iter().map(|&v| self.images[v as usize]).collect() }
    }

    /// Preserves class adjacency and non-adjacency.
    pub fn is_automorphism(&self) -> bool {
        let n = self.images.len();
        (0..n).all(|a| {
            (a + 1..n)
                .all(|b| ((a ^ b).count_ones() == self.k) == ((self.apply(a) ^ self.apply(b)).count_ones() == self.k))
        })
    }
}

/// `φ(a)([u]) = [a(u)]`.
pub fn quotient_map(a: &Automorphism, k: u32) -> Result<QuotientAutomorphism> {
    let n = explicit_k(k)?;
    if a.len() != n {
        return Err(Error::WidthMismatch { expected: n, found: a.len() });
    }
    let ones = n - 1;
    let mut images = Vec::with_capacity(n / 2);
    for r in 0..n / 2 {
        let (im, im_twin) = (a.apply(r), a.apply(r ^ ones));
        if im_twin != im ^ ones {
            return Err(Error::NotTwinPreserving(r as u64));
        }
        images.push(im.min(im_twin) as u32);
    }
    QuotientAutomorphism::from_images(k, images)
}

/// The lift of `b` sending each canonical representative to the canonical
/// representative of its image class, and twins to twins.
pub fn lift(b: &QuotientAutomorphism) -> Result<Automorphism> {
    if !b.is_automorphism() {
        return Err(Error::NotAutomorphism);
    }
    let n = 2 * b.images.len();
    let ones = (n - 1) as u32;
    let mut images = vec![0u32; n];
    for (r, &im) in b.images.iter().enumerate() {
        images[r] = im;
        images[r ^ ones as usize] = im ^ ones;
    }
    Ok(Automorphism::with_provenance(images, Provenance::Raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Omega, OmegaQuotient};
    use std::collections::HashSet;

    fn b(s: &str) -> Bits {
        Bits::parse(s).unwrap()
    }

    fn omega(k: u32) -> DenseGraph {
        Omega::new(k).unwrap().materialize().unwrap()
    }

    #[test]
    fn identity_and_simple_maps() {
        let g = omega(2);
        assert!(is_automorphism(&Automorphism::identity(16), &g).unwrap());
        assert!(translation(Bits::zero(2).unwrap()).unwrap().is_identity());
        assert_eq!(translation(b("0110")).unwrap().apply(0), 0b0110);
        assert!(is_automorphism(&translation(b("1010")).unwrap(), &g).unwrap());
        let id = perm_automorphism(&BitPermutation::identity(2).unwrap()).unwrap();
        assert!(id.is_identity());
        let swap = perm_automorphism(&BitPermutation::transposition(2, 1, 2).unwrap()).unwrap();
        assert_eq!(swap.apply(0b0001), 0b0010);
    }

    #[test]
    fn raw_swap_of_different_weights_is_not_an_automorphism() {
        let mut images: Vec<u32> = (0..16).collect();
        images.swap(0, 1);
        let a = Automorphism::from_images(images).unwrap();
        assert!(!is_automorphism(&a, &omega(2)).unwrap());
        assert!(is_automorphism(&a, &omega(1)).is_err());
        assert!(Automorphism::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn twin_swaps() {
        let g = omega(2);
        assert!(twin_swap_set(2, &[]).unwrap().is_identity());
        let pi0 = twin_swap_set(2, &[Class::of(Bits::zero(2).unwrap())]).unwrap();
        assert_eq!(pi0.apply(0), 15);
        assert_eq!(pi0.apply(15), 0);
        assert_eq!((0..16).filter(|&v| pi0.apply(v) == v).count(), 14);
        assert!(is_automorphism(&pi0, &g).unwrap());
        let q = OmegaQuotient::new(2).unwrap();
        let mut maps = HashSet::new();
        for mask in 0u32..256 {
            let classes: Vec<Class> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| q.class(i).unwrap()).collect();
            let a = twin_swap_set(2, &classes).unwrap();
            assert!(is_automorphism(&a, &g).unwrap());
            assert!(a.compose(&a).unwrap().is_identity());
            assert!(quotient_map(&a, 2).unwrap().is_identity());
            maps.insert(a.images().to_vec());
        }
        assert_eq!(maps.len(), 256);
    }

    #[test]
    fn normal_form_subgroup_of_omega4() {
        let g = omega(2);
        let pi0 = twin_swap_set(2, &[Class::of(Bits::zero(2).unwrap())]).unwrap();
        let mut maps = HashSet::new();
        for sigma in BitPermutation::all(2).unwrap() {
            let p = perm_automorphism(&sigma).unwrap();
            for u in 0..16u64 {
                let t = translation(Bits::new(2, u).unwrap()).unwrap();
                let a = t.compose(&p).unwrap();
                assert!(is_automorphism(&a, &g).unwrap());
                let (nu, ns) = normal_form(&a, 2).unwrap();
                assert_eq!((nu.value(), &ns), (u, &sigma));
                // P_σ ∘ τ_u = τ_{σ(u)} ∘ P_σ.
                let lhs = p.compose(&t).unwrap();
                let rhs = translation(Bits::new(2, sigma.apply(u)).unwrap()).unwrap().compose(&p).unwrap();
                assert_eq!(lhs.images(), rhs.images());
                assert_ne!(a.images(), pi0.images());
                maps.insert(a.images().to_vec());
            }
        }
        assert_eq!(maps.len(), 384);
        assert!(!normal_form_membership(&pi0, 2));
        assert!(normal_form_membership(&translation(b("1011")).unwrap(), 2));
        let mixed = perm_automorphism(&BitPermutation::transposition(2, 1, 2).unwrap())
            .unwrap()
            .compose(&translation(b("0110")).unwrap())
            .unwrap();
        assert!(normal_form_membership(&mixed, 2));
    }

    #[test]
    fn arc_witnesses() {
        let g = omega(2);
        let a = arc_transitivity_witness(b("0000"), b("0011"), b("0001"), b("1101")).unwrap();
        assert_eq!((a.apply(0b0000), a.apply(0b0011)), (0b0001, 0b1101));
        assert!(is_automorphism(&a, &g).unwrap());
        let same = arc_transitivity_witness(b("0110"), b("0101"), b("0110"), b("0101")).unwrap();
        assert_eq!((same.apply(0b0110), same.apply(0b0101)), (0b0110, 0b0101));
        assert!(arc_transitivity_witness(b("0000"), b("0001"), b("0000"), b("0011")).is_err());

        let c4 = omega(1);
        let arcs: Vec<(u64, u64)> =
            c4.edges().flat_map(|(u, v)| [(u as u64, v as u64), (v as u64, u as u64)]).collect();
        for &(x, y) in &arcs {
            for &(u, w) in &arcs {
                let bits = |v| Bits::new(1, v).unwrap();
                let a = arc_transitivity_witness(bits(x), bits(y), bits(u), bits(w)).unwrap();
                assert_eq!((a.apply(x as usize), a.apply(y as usize)), (u as usize, w as usize));
                assert!(is_automorphism(&a, &c4).unwrap());
            }
        }
    }

    #[test]
    fn quotient_map_basics() {
        assert!(quotient_map(&Automorphism::identity(16), 2).unwrap().is_identity());
        assert!(quotient_map(&translation(b("1111")).unwrap(), 2).unwrap().is_identity());
        let mut images: Vec<u32> = (0..16).collect();
        images.swap(0, 1);
        let bad = Automorphism::from_images(images).unwrap();
        assert!(matches!(quotient_map(&bad, 2), Err(Error::NotTwinPreserving(_))));
    }

    #[test]
    fn lifting() {
        let id = QuotientAutomorphism::identity(2).unwrap();
        assert!(lift(&id).unwrap().is_identity());
        // Swap the two K_4 components: class i ↦ i ^ 1 flips parity.
        let swap = QuotientAutomorphism::from_images(2, (0..8).map(|i| i ^ 1).collect()).unwrap();
        assert!(swap.is_automorphism());
        let beta = lift(&swap).unwrap();
        assert!(is_automorphism(&beta, &omega(2)).unwrap());
        assert_eq!(quotient_map(&beta, 2).unwrap(), swap);
        assert_eq!(beta.apply(0) % 2, 1);
        let not_aut = QuotientAutomorphism::from_images(2, vec![0, 3, 2, 1, 4, 5, 6, 7]).unwrap();
        assert!(lift(&not_aut).is_err());
    }

    #[test]
    fn homomorphism_law_on_generated_maps() {
        let ps: Vec<_> = BitPermutation::all(2).unwrap().step_by(7).map(|s| perm_automorphism(&s).unwrap()).collect();
        let pi = twin_swap_set(2, &[Class::of(b("0001")), Class::of(b("0110"))]).unwrap();
        for p in &ps {
            let a = p.compose(&pi).unwrap().compose(&translation(b("0101")).unwrap()).unwrap();
            for q in &ps {
                let lhs = quotient_map(&a.compose(q).unwrap(), 2).unwrap();
                let rhs = quotient_map(&a, 2).unwrap().compose(&quotient_map(q, 2).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn json_shape() {
        let a = translation(b("01")).unwrap();
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v["provenance"]["kind"], "translation");
        assert_eq!(v["images"], serde_json::json!([1, 0, 3, 2]));
    }
}
