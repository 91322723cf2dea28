use std::collections::HashSet;

use orthograph::automorph::{
    automorphism_group, is_automorphism, lift, quotient_map, twin_swap_set, Automorphism, DEFAULT_ELEMENT_CAP,
};
use orthograph::graph::DenseGraph;
use orthograph::{Class, Omega, OmegaQuotient};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn omega4() -> DenseGraph {
    Omega::new(2).unwrap().materialize().unwrap()
}

fn aut_omega4() -> Vec<Automorphism> {
    automorphism_group(&omega4(), None).unwrap().elements(DEFAULT_ELEMENT_CAP).unwrap()
}

fn all_twin_swaps() -> Vec<Automorphism> {
    let q = OmegaQuotient::new(2).unwrap();
    (0u32..256)
        .map(|mask| {
            let classes: Vec<Class> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| q.class(i).unwrap()).collect();
            twin_swap_set(2, &classes).unwrap()
        })
        .collect()
}

#[test]
fn every_automorphism_preserves_twins() {
    let elements = aut_omega4();
    assert_eq!(elements.len(), 294_912);
    assert!(elements.iter().all(|a| a.preserves_twins(2)));
}

#[test]
fn kernel_is_exactly_the_twin_swaps() {
    let kernel: HashSet<Vec<u32>> = aut_omega4()
        .into_iter()
        .filter(|a| quotient_map(a, 2).unwrap().is_identity())
        .map(|a| a.images().to_vec())
        .collect();
    let swaps: HashSet<Vec<u32>> = all_twin_swaps().into_iter().map(|a| a.images().to_vec()).collect();
    assert_eq!(kernel, swaps);
}

#[test]
fn homomorphism_law_on_random_pairs() {
    let elements = aut_omega4();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..2000 {
        let a = &elements[rng.gen_range(0..elements.len())];
        let b = &elements[rng.gen_range(0..elements.len())];
        let lhs = quotient_map(&a.compose(b).unwrap(), 2).unwrap();
        let rhs = quotient_map(a, 2).unwrap().compose(&quotient_map(b, 2).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn lifts_and_twin_swaps_recover_the_whole_group() {
    let q = OmegaQuotient::new(2).unwrap().materialize().unwrap();
    let quotient_group = automorphism_group(&q, None).unwrap().elements(DEFAULT_ELEMENT_CAP).unwrap();
    assert_eq!(quotient_group.len(), 1152);
    let g = omega4();
    let swaps = all_twin_swaps();
    let mut found = HashSet::new();
    for b in &quotient_group {
        let b = orthograph::automorph::QuotientAutomorphism::from_images(2, b.images().to_vec()).unwrap();
        let beta = lift(&b).unwrap();
        assert_eq!(quotient_map(&beta, 2).unwrap(), b);
        for pi in &swaps {
            let a = beta.compose(pi).unwrap();
            if is_automorphism(&a, &g).unwrap() {
                found.insert(a.images().to_vec());
            }
        }
    }
    let order = automorphism_group(&g, None).unwrap().order_u64().unwrap();
    assert_eq!(found.len() as u64, order);
}

#[test]
fn quotient_of_omega6_is_smaller_by_the_kernel() {
    let g = Omega::new(3).unwrap().materialize().unwrap();
    let q = OmegaQuotient::new(3).unwrap().materialize().unwrap();
    let full = automorphism_group(&g, None).unwrap();
    let reduced = automorphism_group(&q, None).unwrap();
    assert_eq!(full.order(), &(reduced.order() * (num_bigint::BigUint::from(1u8) << 32usize)));
    assert!(full.generators().iter().all(|a| a.preserves_twins(3)));
}
