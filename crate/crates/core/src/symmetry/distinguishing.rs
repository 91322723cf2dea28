use rand::Rng;
use serde::Serialize;

use super::labeling::{relabel_under, Labeling, PairLabeling};
use super::{swappable_pairs, Verification};
use crate::automorph::{
    first_nontrivial, is_automorphism, perm_automorphism, translation, twin_swap_set, Automorphism, BitPermutation,
};
use crate::graph::{DenseGraph, Graph};
use crate::report::Verdict;
use crate::{Bits, Class, Error, Omega, OmegaQuotient, Result};

/// Largest graph [`dist_number_exact`] accepts.
pub const MAX_DIST_ORDER: usize = 16;

/// A nontrivial automorphism of `g` preserving every label class of `f`.
pub fn preserving_automorphism(g: &DenseGraph, f: &Labeling) -> Result<Option<Automorphism>> {
    first_nontrivial(g, f.labels())
}

/// True iff only the identity preserves `f`.
pub fn is_distinguishing_direct(g: &DenseGraph, f: &Labeling) -> Result<bool> {
    Ok(preserving_automorphism(g, f)?.is_none())
}

/// Decides whether `f` distinguishes `Ω_2k` on the quotient: twins must
/// get distinct labels, and no nontrivial automorphism of `Ω̃_2k` may
/// preserve the induced pair labeling.
pub fn is_distinguishing_reduced(k: u32, f: &Labeling) -> Result<bool> {
    let pairs = match PairLabeling::from_labeling(f, k) {
        Ok(p) => p,
        Err(Error::MonochromaticTwinPair(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let q = OmegaQuotient::new(k)?.materialize()?;
    Ok(first_nontrivial(&q, &pairs.colors())?.is_none())
}

/// Vertex order placing transposition partners next to each other, with
/// each vertex's earlier partners.
fn search_order(g: &DenseGraph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.order();
    let pairs = swappable_pairs(g);
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for v in 0..n {
        if placed[v] {
            continue;
        }
        placed[v] = true;
        order.push(v);
        for &(a, b) in &pairs {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !placed[w] {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut earlier = vec![Vec::new(); n];
    for &(a, b) in &pairs {
        let (x, y) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
        earlier[pos[y]].push(pos[x]);
    }
    (order, earlier)
}

struct DistSearch<'a> {
    g: &'a DenseGraph,
    d: u32,
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
    labels: Vec<u32>,
    by_pos: Vec<u32>,
}

impl DistSearch<'_> {
    /// Restricted-growth assignment: position `i` takes a label at most one
    /// above the largest used so far, and all `d` labels must appear.
    fn run(&mut self, i: usize, used: u32) -> Result<bool> {
        let n = self.order.len();
        if i == n {
            return Ok(used == self.d && first_nontrivial(self.g, &self.labels)?.is_none());
        }
        if self.d - used > (n - i) as u32 {
            return Ok(false);
        }
        for l in 1..=(used + 1).min(self.d) {
            if self.earlier[i].iter().any(|&j| self.by_pos[j] == l) {
                continue;
            }
            self.by_pos[i] = l;
            self.labels[self.order[i]] = l;
            if self.run(i + 1, used.max(l))? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// A distinguishing labeling of `g` using exactly `d` labels, if one exists.
pub fn find_distinguishing(g: &DenseGraph, d: u32) -> Result<Option<Labeling>> {
    let n = g.order();
    if n > MAX_DIST_ORDER {
        return Err(Error::SizeCap { what: format!("labeling search on {n} vertices"), cap: MAX_DIST_ORDER as u128 });
    }
    if d == 0 || d as usize > n.max(1) {
        return Ok(None);
    }
    let (order, earlier) = search_order(g);
    let mut s = DistSearch { g, d, order, earlier, labels: vec![1; n], by_pos: vec![0; n] };
    Ok(if s.run(0, 0)? { Some(Labeling::new(s.labels, d)?) } else { None })
}

/// `Dist(g)` with a witnessing labeling. Labelings are enumerated up to
/// renaming of labels, skipping any that a transposition automorphism
/// preserves.
pub fn dist_number_exact(g: &DenseGraph) -> Result<(u32, Labeling)> {
    for d in 1..=g.order().max(1) as u32 {
        if let Some(f) = find_distinguishing(g, d)? {
            return Ok((d, f));
        }
    }
    unreachable!("distinct labels distinguish every graph")
}

/// Checks every 2-labeling of `Ω_2k` (`k ≤ 2`) is preserved by a nontrivial
/// automorphism. Labelings with a monochromatic twin pair are refuted by
/// that pair's twin swap; the rest by search.
pub fn dist_gt_2_exhaustive(k: u32) -> Result<Verification> {
    if k > 2 {
        return Err(Error::SizeCap { what: "exhaustive 2-labeling sweep".into(), cap: 2 });
    }
    let g = Omega::new(k)?.materialize()?;
    let n = g.order();
    let ones = n - 1;
    for mask in 0..1u64 << n {
        let labels: Vec<u32> = (0..n).map(|v| 1 + (mask >> v & 1) as u32).collect();
        if (0..n / 2).any(|r| labels[r] == labels[r ^ ones]) {
            continue;
        }
        if first_nontrivial(&g, &labels)?.is_none() {
            return Ok(Verification {
                claim: format!("no distinguishing 2-labeling of Ω_{}", 2 * k),
                verdict: Verdict::Fail,
                witness: None,
            });
        }
    }
    Ok(Verification {
        claim: format!("no distinguishing 2-labeling of Ω_{}", 2 * k),
        verdict: Verdict::Pass,
        witness: None,
    })
}

/// `f ∘ π_U` whose label-1 class is exactly the vertices with bit 1 set,
/// with `U` the classes whose label-1 member has bit 1 clear.
pub fn normalize_two_labeling(f: &Labeling, k: u32) -> Result<(Labeling, Vec<Class>)> {
    let n = 1usize << (2 * k);
    if f.len() != n || f.d() > 2 {
        return Err(Error::Malformed(format!("expected a 2-labeling of {n} vertices")));
    }
    if let Some(r) = f.monochromatic_twin_pair(k) {
        return Err(Error::MonochromaticTwinPair(r));
    }
    let ones = n - 1;
    let swap: Vec<Class> = (0..n / 2)
        .map(|r| if f.label(r) == 1 { r } else { r ^ ones })
        .filter(|red| red & 1 == 0)
        .map(|red| Class::of(Bits::new(k, red as u64).unwrap()))
        .collect();
    let pi = twin_swap_set(k, &swap)?;
    Ok((relabel_under(f, &pi)?, swap))
}

/// The automorphism fixing bit 1 that preserves every normalized labeling:
/// `P_σ` for the cycle `(2 3 … 2k)`, or `τ_(x_2)` when `k = 1`.
pub fn cyclic_witness(k: u32) -> Result<Automorphism> {
    if k == 1 {
        translation(Bits::unit(1, 2)?)
    } else {
        perm_automorphism(&BitPermutation::cycle(k, &(2..=2 * k).collect::<Vec<_>>())?)
    }
}

/// A nontrivial automorphism of `Ω_2k` preserving the 2-labeling `f`: a twin
/// swap if some twin pair is monochromatic, else `π_U ∘ c ∘ π_U` with `c`
/// the [`cyclic_witness`] and `U` from [`normalize_two_labeling`].
pub fn two_labeling_witness(f: &Labeling, k: u32) -> Result<Automorphism> {
    if let Some(r) = f.monochromatic_twin_pair(k) {
        return twin_swap_set(k, &[Class::of(Bits::new(k, r)?)]);
    }
    let (_, swap) = normalize_two_labeling(f, k)?;
    let pi = twin_swap_set(k, &swap)?;
    pi.compose(&cyclic_witness(k)?)?.compose(&pi)
}

/// Constructive check at any `k` with explicit maps: the normalized
/// labeling is fixed by the cyclic witness, and for `samples` random
/// 2-labelings the conjugated witness is nontrivial and preserves them.
/// Adjacency preservation is checked explicitly when `Ω_2k` materializes.
pub fn dist_gt_2_constructive(k: u32, samples: usize, rng: &mut impl Rng) -> Result<Verification> {
    let n = 1usize << (2 * k);
    let ones = n - 1;
    let claim = format!("every 2-labeling of Ω_{} is preserved by a nontrivial automorphism", 2 * k);
    let c = cyclic_witness(k)?;
    let graph = Omega::new(k)?.materialize().ok();
    if c.is_identity() || (0..n).any(|v| c.apply(v) & 1 != v & 1) {
        return Ok(Verification { claim, verdict: Verdict::Fail, witness: Some(c) });
    }
    if let Some(g) = &graph {
        if !is_automorphism(&c, g)? {
            return Ok(Verification { claim, verdict: Verdict::Fail, witness: Some(c) });
        }
    }
    for _ in 0..samples {
        let labels: Vec<u32> = {
            let mut l = vec![0u32; n];
            for r in 0..n / 2 {
                let red_first = rng.gen_bool(0.5);
                l[r] = if red_first { 1 } else { 2 };
                l[r ^ ones] = if red_first { 2 } else { 1 };
            }
            l
        };
        let f = Labeling::new(labels, 2)?;
        let (normal, _) = normalize_two_labeling(&f, k)?;
        let normalized_ok = (0..n).all(|v| (normal.label(v) == 1) == (v & 1 == 1));
        let w = two_labeling_witness(&f, k)?;
        let preserved = relabel_under(&f, &w)? == f;
        let is_aut = match &graph {
            Some(g) => is_automorphism(&w, g)?,
            None => true,
        };
        if !(normalized_ok && preserved && is_aut && !w.is_identity()) {
            return Ok(Verification { claim, verdict: Verdict::Fail, witness: Some(w) });
        }
    }
    Ok(Verification { claim, verdict: Verdict::Pass, witness: Some(c) })
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSweep {
    pub labelings: u64,
    /// Labelings no nontrivial automorphism preserves.
    pub survivors: u64,
    /// Labelings refuted by an explicit twin swap or double transposition.
    pub certified: u64,
    /// A distinguishing 4-labeling of the component.
    pub four_labeling: Option<Labeling>,
}

impl ComponentSweep {
    pub fn passed(&self) -> bool {
        self.survivors == 0 && self.certified == self.labelings && self.four_labeling.is_some()
    }
}

/// The pigeonhole certificate for a 3-labeling of a component whose twin
/// pairs are `pairs`: a twin swap for a monochromatic pair, otherwise the
/// double transposition exchanging two pairs with equal label pairs.
fn pigeonhole_certificate(labels: &[u32], pairs: &[(usize, usize)]) -> Option<Vec<u32>> {
    let n = labels.len();
    let mut map: Vec<u32> = (0..n as u32).collect();
    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| labels[a] == labels[b]) {
        map.swap(a, b);
        return Some(map);
    }
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            let (c, d) = if labels[c] == labels[a] { (c, d) } else { (d, c) };
            if labels[c] == labels[a] && labels[d] == labels[b] {
                map.swap(a, c);
                map.swap(b, d);
                return Some(map);
            }
        }
    }
    None
}

/// Refutes every 3-labeling of the even component `C` of `Ω_4` twice: by
/// search, and by the pigeonhole certificate checked as an automorphism of
/// `C` preserving the labeling. Also finds a distinguishing 4-labeling.
pub fn no_3_distinguishing_component() -> Result<ComponentSweep> {
    let omega = Omega::new(2)?.materialize()?;
    let even: Vec<usize> = (0..16).filter(|v: &usize| v.count_ones().is_multiple_of(2)).collect();
    let c = omega.induced(&even);
    let pos = |v: usize| even.binary_search(&v).unwrap();
    let pairs: Vec<(usize, usize)> = even.iter().filter(|&&v| v < 8).map(|&v| (pos(v), pos(v ^ 15))).collect();
    let mut sweep = ComponentSweep { labelings: 0, survivors: 0, certified: 0, four_labeling: None };
    let mut labels = vec![1u32; 8];
    for code in 0..3u32.pow(8) {
        let mut x = code;
        for l in labels.iter_mut() {
            *l = 1 + x % 3;
            x /= 3;
        }
        sweep.labelings += 1;
        if first_nontrivial(&c, &labels)?.is_none() {
            sweep.survivors += 1;
        }
        if let Some(map) = pigeonhole_certificate(&labels, &pairs) {
            let a = Automorphism::from_images(map)?;
            if !a.is_identity() && is_automorphism(&a, &c)? && (0..8).all(|v| labels[a.apply(v)] == labels[v]) {
                sweep.certified += 1;
            }
        }
    }
    sweep.four_labeling = find_distinguishing(&c, 4)?;
    Ok(sweep)
}
