//! Automorphism groups and isomorphisms of small graphs by partition
//! backtracking.
//!
//! Both sides of a search carry a vertex coloring. Refinement replaces each
//! color by the pair (old color, multiset of neighbor colors), renumbering
//! the two sides together so that matching cells share an id. A branch dies
//! as soon as the color histograms differ. Leaves are verified explicitly,
//! so the hashed neighbor signature only affects pruning.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::automorphism::Automorphism;
use crate::graph::{DenseGraph, Graph};
use crate::{Error, Result};

/// Largest graph the search accepts.
pub const MAX_SEARCH_ORDER: usize = 1024;

/// Default cap on explicit element lists.
pub const DEFAULT_ELEMENT_CAP: u64 = 1 << 20;

fn mix(c: u32) -> u64 {
    let mut z = (c as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn check_order(g: &DenseGraph) -> Result<()> {
    if g.order() > MAX_SEARCH_ORDER {
        return Err(Error::SizeCap {
            what: format!("automorphism search on {} vertices", g.order()),
            cap: MAX_SEARCH_ORDER as u128,
        });
    }
    Ok(())
}

struct Search<'a> {
    g: &'a DenseGraph,
    h: &'a DenseGraph,
    init_l: &'a [u32],
    init_r: &'a [u32],
}

impl Search<'_> {
    fn signature(g: &DenseGraph, c: &[u32]) -> Vec<(u32, u64)> {
        (0..c.len())
            .map(|v| (c[v], g.adjacency(v).iter().fold(0u64, |s, &w| s.wrapping_add(mix(c[w as usize])))))
            .collect()
    }

    /// Refines both colorings to a common stable partition. False when
    /// their histograms disagree.
    fn refine(&self, cl: &mut [u32], cr: &mut [u32]) -> bool {
        let n = cl.len();
        let mut cells = usize::MAX;
        loop {
            let kl = Self::signature(self.g, cl);
            let kr = Self::signature(self.h, cr);
            let mut keys: Vec<(u32, u64)> = kl.iter().chain(&kr).copied().collect();
            keys.sort_unstable();
            keys.dedup();
            if keys.len() > n {
                return false;
            }
            let mut hist = vec![0i64; keys.len()];
            for v in 0..n {
                cl[v] = keys.binary_search(&kl[v]).unwrap() as u32;
                cr[v] = keys.binary_search(&kr[v]).unwrap() as u32;
                hist[cl[v] as usize] += 1;
                hist[cr[v] as usize] -= 1;
            }
            if hist.iter().any(|&x| x != 0) {
                return false;
            }
            if keys.len() == cells {
                return true;
            }
            cells = keys.len();
        }
    }

    fn initial(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let (mut cl, mut cr) = (self.init_l.to_vec(), self.init_r.to_vec());
        self.refine(&mut cl, &mut cr).then_some((cl, cr))
    }

    /// Individualizes `v` on the left and `w` on the right, then refines.
    fn branch(&self, cl: &[u32], cr: &[u32], v: usize, w: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let (mut cl, mut cr) = (cl.to_vec(), cr.to_vec());
        cl[v] = u32::MAX;
        cr[w] = u32::MAX;
        self.refine(&mut cl, &mut cr).then_some((cl, cr))
    }

    /// Left vertex `v ↦` right vertex with the same color, if it is an
    /// isomorphism respecting the initial colors.
    fn leaf(&self, cl: &[u32], cr: &[u32]) -> Option<Vec<u32>> {
        let mut at = vec![0u32; cr.len()];
        for (w, &c) in cr.iter().enumerate() {
            at[c as usize] = w as u32;
        }
        let map: Vec<u32> = cl.iter().map(|&c| at[c as usize]).collect();
        let ok = (0..map.len()).all(|v| self.init_l[v] == self.init_r[map[v] as usize])
            && self.g.edge_count() == self.h.edge_count()
            && self.g.edges().all(|(u, v)| self.h.is_edge(map[u] as usize, map[v] as usize));
        ok.then_some(map)
    }

    /// Depth-first search below an equitable pair of colorings; the left
    /// side always follows the minimum vertex of the first nontrivial cell.
    fn extend(&self, cl: &[u32], cr: &[u32]) -> Option<Vec<u32>> {
        let Some(cell) = target_cell(cl) else {
            return self.leaf(cl, cr);
        };
        let v = first_of(cl, cell);
        (0..cr.len()).filter(|&w| cr[w] == cell).find_map(|w| {
            let (nl, nr) = self.branch(cl, cr, v, w)?;
            self.extend(&nl, &nr)
        })
    }
}

fn target_cell(c: &[u32]) -> Option<u32> {
    let mut count = vec![0u32; c.len()];
    for &x in c {
        count[x as usize] += 1;
    }
    count.iter().position(|&k| k > 1).map(|p| p as u32)
}

fn first_of(c: &[u32], cell: u32) -> usize {
    c.iter().position(|&x| x == cell).unwrap()
}

struct Level {
    coloring: Vec<u32>,
    cell: Vec<usize>,
    point: usize,
}

/// The path of leftmost individualizations from the root.
fn base_path(s: &Search) -> Vec<Level> {
    let (mut cl, _) = s.initial().expect("a coloring is consistent with itself");
    let mut levels = Vec::new();
    while let Some(cell) = target_cell(&cl) {
        let members: Vec<usize> = (0..cl.len()).filter(|&v| cl[v] == cell).collect();
        let point = members[0];
        let next = s.branch(&cl, &cl, point, point).unwrap().0;
        levels.push(Level { coloring: std::mem::replace(&mut cl, next), cell: members, point });
    }
    levels
}

fn uniform(n: usize) -> Vec<u32> {
    vec![0; n]
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

/// Orbit of `point` with, for each orbit element, a group element taking
/// `point` there.
fn transversal(n: usize, point: usize, gens: &[&Vec<u32>]) -> Vec<(usize, Vec<u32>)> {
    let mut reps: Vec<Option<Vec<u32>>> = vec![None; n];
    reps[point] = Some((0..n as u32).collect());
    let mut order = vec![point];
    let mut queue = VecDeque::from([point]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g[p] as usize;
            if reps[q].is_none() {
                reps[q] = Some(compose(g, reps[p].as_ref().unwrap()));
                order.push(q);
                queue.push_back(q);
            }
        }
    }
    order.sort_unstable();
    order.into_iter().map(|q| (q, reps[q].take().unwrap())).collect()
}

fn orbit_contains(n: usize, point: usize, target: usize, gens: &[&Vec<u32>]) -> bool {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut queue = VecDeque::from([point]);
    while let Some(p) = queue.pop_front() {
        if p == target {
            return true;
        }
        for g in gens {
            let q = g[p] as usize;
            if !seen[q] {
                seen[q] = true;
                queue.push_back(q);
            }
        }
    }
    false
}

/// A permutation group given by a base, a strong generating set and
/// transversals along the base.
#[derive(Clone, Debug)]
pub struct AutGroup {
    n: usize,
    base: Vec<usize>,
    generators: Vec<Vec<u32>>,
    transversals: Vec<Vec<(usize, Vec<u32>)>>,
    order: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    /// Decimal; the order may exceed every fixed-width integer.
    pub order: String,
    pub generators: Vec<Automorphism>,
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn generators(&self) -> Vec<Automorphism> {
        self.generators.iter().map(|g| Automorphism::from_images(g.clone()).unwrap()).collect()
    }

    /// Orbit sizes along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.transversals.iter().map(Vec::len).collect()
    }

    pub fn report(&self) -> GroupReport {
        GroupReport { order: self.order.to_string(), generators: self.generators() }
    }

    /// Every element, as `t_0 ∘ t_1 ∘ …` over the transversals. Fails when
    /// the order exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Automorphism>> {
        if self.order > BigUint::from(cap) {
            return Err(Error::SizeCap { what: format!("listing a group of order {}", self.order), cap: cap as u128 });
        }
        let mut out: Vec<Vec<u32>> = vec![(0..self.n as u32).collect()];
        for level in self.transversals.iter().rev() {
            out = level.iter().flat_map(|(_, t)| out.iter().map(move |h| compose(t, h))).collect();
        }
        Ok(out.into_iter().map(|g| Automorphism::from_images(g).unwrap()).collect())
    }

    /// Membership by sifting through the transversals.
    pub fn contains(&self, a: &Automorphism) -> bool {
        if a.len() != self.n {
            return false;
        }
        let mut g: Vec<u32> = a.images().to_vec();
        for (point, level) in self.base.iter().zip(&self.transversals) {
            let image = g[*point] as usize;
            let Some((_, t)) = level.iter().find(|(q, _)| *q == image) else {
                return false;
            };
            let mut inv = vec![0u32; self.n];
            for (i, &v) in t.iter().enumerate() {
                inv[v as usize] = i as u32;
            }
            g = compose(&inv, &g);
        }
        g.iter().enumerate().all(|(i, &v)| v as usize == i)
    }
}

/// The group of automorphisms of `g` preserving `colors` (all of `Aut(g)`
/// when `colors` is `None`).
pub fn automorphism_group(g: &DenseGraph, colors: Option<&[u32]>) -> Result<AutGroup> {
    check_order(g)?;
    let n = g.order();
    let owned;
    let init = match colors {
        Some(c) if c.len() == n => c,
        Some(c) => return Err(Error::WidthMismatch { expected: n, found: c.len() }),
        None => {
            owned = uniform(n);
            &owned
        }
    };
    let s = Search { g, h: g, init_l: init, init_r: init };
    let levels = base_path(&s);
    let mut gens: Vec<(usize, Vec<u32>)> = Vec::new();
    for (i, level) in levels.iter().enumerate().rev() {
        for &w in &level.cell {
            let active: Vec<&Vec<u32>> = gens.iter().map(|(_, g)| g).collect();
            if orbit_contains(n, level.point, w, &active) {
                continue;
            }
            let found =
                s.branch(&level.coloring, &level.coloring, level.point, w).and_then(|(cl, cr)| s.extend(&cl, &cr));
            if let Some(map) = found {
                gens.push((i, map));
            }
        }
    }
    let mut transversals = Vec::new();
    let mut base = Vec::new();
    let mut order = BigUint::one();
    for (i, level) in levels.iter().enumerate() {
        let active: Vec<&Vec<u32>> = gens.iter().filter(|(l, _)| *l >= i).map(|(_, g)| g).collect();
        let t = transversal(n, level.point, &active);
        order *= BigUint::from(t.len());
        base.push(level.point);
        transversals.push(t);
    }
    Ok(AutGroup { n, base, generators: gens.into_iter().map(|(_, g)| g).collect(), transversals, order })
}

/// Automorphisms of `g` fixing every vertex of `fixed`.
pub fn pointwise_stabilizer(g: &DenseGraph, fixed: &[usize]) -> Result<AutGroup> {
    let colors = pin(g.order(), fixed)?;
    automorphism_group(g, Some(&colors))
}

fn pin(n: usize, fixed: &[usize]) -> Result<Vec<u32>> {
    let mut colors = uniform(n);
    for (i, &v) in fixed.iter().enumerate() {
        if v >= n {
            return Err(Error::Malformed(format!("vertex {v} outside 0..{n}")));
        }
        colors[v] = i as u32 + 1;
    }
    Ok(colors)
}

/// Some nontrivial automorphism of `g` preserving `colors`, if any exists.
pub fn first_nontrivial(g: &DenseGraph, colors: &[u32]) -> Result<Option<Automorphism>> {
    check_order(g)?;
    if colors.len() != g.order() {
        return Err(Error::WidthMismatch { expected: g.order(), found: colors.len() });
    }
    let s = Search { g, h: g, init_l: colors, init_r: colors };
    for level in base_path(&s).iter().rev() {
        for &w in level.cell.iter().filter(|&&w| w != level.point) {
            let found =
                s.branch(&level.coloring, &level.coloring, level.point, w).and_then(|(cl, cr)| s.extend(&cl, &cr));
            if let Some(map) = found {
                return Ok(Some(Automorphism::from_images(map).unwrap()));
            }
        }
    }
    Ok(None)
}

/// True iff only the identity fixes `fixed` pointwise.
pub fn stabilizer_is_trivial(g: &DenseGraph, fixed: &[usize]) -> Result<bool> {
    Ok(first_nontrivial(g, &pin(g.order(), fixed)?)?.is_none())
}

/// An isomorphism `g → h` (vertex `v ↦ map[v]`), or `None` if there is none.
pub fn find_isomorphism(g: &DenseGraph, h: &DenseGraph) -> Result<Option<Vec<u32>>> {
    check_order(g)?;
    check_order(h)?;
    if g.order() != h.order() {
        return Ok(None);
    }
    let init = uniform(g.order());
    let s = Search { g, h, init_l: &init, init_r: &init };
    Ok(s.initial().and_then(|(cl, cr)| s.extend(&cl, &cr)))
}
