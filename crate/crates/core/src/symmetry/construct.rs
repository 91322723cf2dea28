use super::determining::is_determining;
use super::labeling::Labeling;
use crate::graph::{DenseGraph, Graph};
use crate::word::check_k;
use crate::{Bits, Class, Error, Result, MAX_EXPLICIT_MAP_K};

/// The least `m` with `C(m, 2) ≥ 2k` for odd `k`, or `≥ 2k + 1` for even
/// `k`: enough label pairs for the quotient labeling. Defined for `k ≥ 1`;
/// at `k = 1` it gives 3, which is `Dist(C_4)`.
pub fn m_bound(k: u32) -> u32 {
    let needed = quotient_label_count(k) as u64;
    (2u64..).find(|&m| m * (m - 1) / 2 >= needed).unwrap() as u32
}

/// Labels used by [`construct_quotient_distinguishing`]: `2k` for odd `k`,
/// `2k + 1` for even `k`.
pub fn quotient_label_count(k: u32) -> u32 {
    if k % 2 == 1 {
        2 * k
    } else {
        2 * k + 1
    }
}

fn explicit(k: u32) -> Result<()> {
    check_k::<u64>(k)?;
    if k > MAX_EXPLICIT_MAP_K {
        return Err(Error::SizeCap { what: "explicit labeling".into(), cap: MAX_EXPLICIT_MAP_K as u128 });
    }
    Ok(())
}

/// A labeling of `Ω̃_2k` indexed by class. `[x_i]` gets label `i` for
/// `i < 2k`; the remaining classes get `2k`. For even `k` the even
/// component repeats the scheme on the classes `[x_i + x_2k]` with
/// background `2k + 1`.
pub fn construct_quotient_distinguishing(k: u32) -> Result<Labeling> {
    explicit(k)?;
    let classes = 1usize << (2 * k - 1);
    let background_odd = 2 * k;
    let mut labels: Vec<u32> =
        (0..classes).map(|c| if c.count_ones() % 2 == 1 || k % 2 == 1 { background_odd } else { 2 * k + 1 }).collect();
    for i in 1..2 * k {
        labels[Class::of(Bits::unit(k, i)?).index() as usize] = i;
        if k.is_multiple_of(2) {
            let shifted = Bits::unit(k, i)? + Bits::unit(k, 2 * k)?;
            labels[Class::of(shifted).index() as usize] = i;
        }
    }
    Labeling::new(labels, quotient_label_count(k))
}

/// The first `count` unordered pairs of `{1, …, m}` in lexicographic order.
pub fn label_pairs(m: u32, count: usize) -> Vec<(u32, u32)> {
    (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).take(count).collect()
}

/// A labeling of `Ω_2k` with `m_bound(k)` labels: quotient label `j` is
/// replaced by the `j`-th lexicographic pair of labels, the smaller going
/// to the canonical representative and the larger to its twin.
pub fn construct_graph_distinguishing(k: u32) -> Result<Labeling> {
    let quotient = construct_quotient_distinguishing(k)?;
    let m = m_bound(k);
    let pairs = label_pairs(m, quotient.d() as usize);
    let n = 1usize << (2 * k);
    let ones = n - 1;
    let mut labels = vec![0u32; n];
    for (c, &j) in quotient.labels().iter().enumerate() {
        let (a, b) = pairs[j as usize - 1];
        labels[c] = a;
        labels[c ^ ones] = b;
    }
    Labeling::new(labels, m)
}

/// Distinct labels `1..=|S|` on `S` and `|S| + 1` elsewhere; distinguishing
/// whenever `S` is determining.
pub fn det_to_dist(g: &DenseGraph, s: &[usize]) -> Result<Labeling> {
    if !is_determining(g, s)? {
        return Err(Error::NotDetermining);
    }
    let background = s.len() as u32 + 1;
    let mut labels = vec![background; g.order()];
    for (i, &v) in s.iter().enumerate() {
        labels[v] = i as u32 + 1;
    }
    Labeling::new(labels, background)
}
