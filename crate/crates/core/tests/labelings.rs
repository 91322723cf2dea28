use orthograph::automorph::{automorphism_group, translation, DEFAULT_ELEMENT_CAP};
use orthograph::graph::DenseGraph;
use orthograph::symmetry::{
    construct_graph_distinguishing, is_distinguishing_direct, is_distinguishing_reduced, relabel_under, Labeling,
};
use orthograph::{Bits, Omega};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn omega4() -> DenseGraph {
    Omega::new(2).unwrap().materialize().unwrap()
}

#[test]
fn relabeling_by_an_automorphism_preserves_distinguishing() {
    let g = omega4();
    let elements = automorphism_group(&g, None).unwrap().elements(DEFAULT_ELEMENT_CAP).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut labelings = vec![construct_graph_distinguishing(2).unwrap()];
    for _ in 0..20 {
        labelings.push(Labeling::new((0..16).map(|_| rng.gen_range(1..=4)).collect(), 4).unwrap());
    }
    for f in &labelings {
        let expected = is_distinguishing_direct(&g, f).unwrap();
        for _ in 0..50 {
            let a = &elements[rng.gen_range(0..elements.len())];
            assert_eq!(is_distinguishing_direct(&g, &relabel_under(f, a).unwrap()).unwrap(), expected);
        }
    }
}

#[test]
fn translating_a_distinguishing_labeling() {
    let g = omega4();
    let f = construct_graph_distinguishing(2).unwrap();
    let t = translation(Bits::parse("0101").unwrap()).unwrap();
    assert!(is_distinguishing_direct(&g, &relabel_under(&f, &t).unwrap()).unwrap());
    let constant = Labeling::constant(16);
    assert!(!is_distinguishing_direct(&g, &relabel_under(&constant, &t).unwrap()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monochromatic_twin_pair_is_never_distinguishing(
        labels in proptest::collection::vec(1u32..=6, 16),
        pair in 0usize..8,
    ) {
        let mut labels = labels;
        labels[pair ^ 15] = labels[pair];
        let f = Labeling::new(labels, 6).unwrap();
        prop_assert!(!is_distinguishing_direct(&omega4(), &f).unwrap());
        prop_assert!(!is_distinguishing_reduced(2, &f).unwrap());
    }

    #[test]
    fn reduced_check_matches_direct(labels in proptest::collection::vec(1u32..=5, 16)) {
        let f = Labeling::new(labels, 5).unwrap();
        prop_assert_eq!(is_distinguishing_direct(&omega4(), &f).unwrap(), is_distinguishing_reduced(2, &f).unwrap());
    }
}
