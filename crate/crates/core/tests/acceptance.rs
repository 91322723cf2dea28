//! The acceptance battery: one line per criterion, each with a pinned time
//! limit. A criterion passes only if its check succeeds within the limit.

use std::time::{Duration, Instant};

use orthograph::automorph::{
    arc_transitivity_witness, automorphism_group, find_isomorphism, is_automorphism, normal_form_membership,
    perm_automorphism, quotient_map, translation, twin_swap_set, BitPermutation, DEFAULT_ELEMENT_CAP,
};
use orthograph::bits::masks_of_weight;
use orthograph::combinat::{
    decreasing_counts_range, neighbor_weight_count, ratio_identities, same_weight_witness, unique_neighbors_check,
    WitnessRequest,
};
use orthograph::graph::{DenseGraph, Graph};
use orthograph::report::Verdict;
use orthograph::symmetry::{
    construct_graph_distinguishing, det_number_exact, dist_det_bound_holds, dist_gt_2_constructive,
    dist_gt_2_exhaustive, dist_number_exact, is_distinguishing_direct, is_distinguishing_reduced, minimality_witness,
    no_3_distinguishing_component, twin_cover_equivalence, verify_d_determining, Labeling,
};
use orthograph::{Bits, Class, Omega, OmegaQuotient};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn omega(k: u32) -> DenseGraph {
    Omega::new(k).unwrap().materialize().unwrap()
}

fn quotient(k: u32) -> DenseGraph {
    OmegaQuotient::new(k).unwrap().materialize().unwrap()
}

fn c01_omega2_is_c4() -> Outcome {
    let map = find_isomorphism(&omega(1), &DenseGraph::cycle(4)).map_err(|e| e.to_string())?;
    ensure(map.is_some(), "no isomorphism Ω_2 → C_4")?;
    Ok(format!("isomorphism {:?}", map.unwrap()))
}

fn c02_omega4_structure() -> Outcome {
    let g = omega(2);
    ensure(g.order() == 16 && g.regular_degree() == Some(6), "not a 6-regular graph on 16 vertices")?;
    let comps = g.components();
    ensure(comps.len() == 2, format!("{} components", comps.len()))?;
    let circ = DenseGraph::circulant(8, &[1, 2, 3]);
    for c in &comps {
        let h = g.induced(c);
        ensure(find_isomorphism(&h, &circ).unwrap().is_some(), "component is not C_8[1,2,3]")?;
    }
    Ok("16 vertices, 6-regular, 2 components ≅ C_8[1,2,3]".into())
}

fn c03_quotient4() -> Outcome {
    let q = quotient(2);
    let two_k4 = DenseGraph::complete(4).disjoint_union(&DenseGraph::complete(4));
    ensure(find_isomorphism(&q, &two_k4).unwrap().is_some(), "Ω̃_4 is not 2K_4")?;
    ensure(OmegaQuotient::new(2).unwrap().is_twin_free().unwrap(), "Ω̃_4 has twins")?;
    Ok("Ω̃_4 ≅ 2K_4, twin-free".into())
}

fn c04_det_omega4() -> Outcome {
    let (det, _) = det_number_exact(&omega(2)).map_err(|e| e.to_string())?;
    ensure(det == 8, format!("Det(Ω_4) = {det}"))?;
    let r = twin_cover_equivalence(2).map_err(|e| e.to_string())?;
    ensure(r.passed() && r.checked == 1 << 16, format!("twin-cover mismatch {:?}", r.mismatch))?;
    Ok(format!("Det = 8; {} subsets classified, {} by search", r.checked, r.searched))
}

fn c05_dist_numbers() -> Outcome {
    let limit = Duration::from_secs(120);
    let mut parts = Vec::new();
    for (name, g, expected) in [("Ω_2", omega(1), 3), ("Ω_4", omega(2), 4), ("Ω̃_4", quotient(2), 5)] {
        let t = Instant::now();
        let (d, f) = dist_number_exact(&g).map_err(|e| e.to_string())?;
        let took = t.elapsed();
        ensure(d == expected, format!("Dist({name}) = {d}, expected {expected}"))?;
        ensure(is_distinguishing_direct(&g, &f).unwrap(), format!("witness for {name} not distinguishing"))?;
        ensure(took <= limit, format!("Dist({name}) took {took:?}"))?;
        parts.push(format!("Dist({name}) = {d} in {:.2}s", took.as_secs_f64()));
    }
    Ok(parts.join(", "))
}

fn c06_no_3_labeling() -> Outcome {
    let s = no_3_distinguishing_component().map_err(|e| e.to_string())?;
    ensure(s.labelings == 6561 && s.survivors == 0, format!("{} survivors", s.survivors))?;
    ensure(s.certified == 6561, format!("only {} pigeonhole certificates", s.certified))?;
    Ok("6561 labelings, 0 survivors, all certified".into())
}

fn c07_dist_gt_2() -> Outcome {
    let v = dist_gt_2_exhaustive(2).map_err(|e| e.to_string())?;
    ensure(v.verdict == Verdict::Pass, "a distinguishing 2-labeling of Ω_4 exists")?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = dist_gt_2_constructive(3, 200, &mut rng).map_err(|e| e.to_string())?;
    ensure(c.verdict == Verdict::Pass, "constructive check failed at k=3")?;
    Ok("Ω_4 exhaustive; Ω_6 constructive on 200 labelings".into())
}

fn c08_pi0_not_in_normal_form() -> Outcome {
    let pi0 = twin_swap_set(2, &[Class::of(Bits::zero(2).unwrap())]).unwrap();
    ensure(!normal_form_membership(&pi0, 2), "π_0 has a normal form")?;
    let mut maps = std::collections::HashSet::new();
    for sigma in BitPermutation::all(2).unwrap() {
        let p = perm_automorphism(&sigma).unwrap();
        for u in 0..16 {
            let a = translation(Bits::new(2, u).unwrap()).unwrap().compose(&p).unwrap();
            maps.insert(a.images().to_vec());
        }
    }
    ensure(maps.len() == 384, format!("{} normal-form maps", maps.len()))?;
    // The only twin swaps in the subgroup are the identity and τ_1 = π_V.
    let q = OmegaQuotient::new(2).unwrap();
    for mask in 0u32..256 {
        let classes: Vec<Class> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| q.class(i).unwrap()).collect();
        let pi = twin_swap_set(2, &classes).unwrap();
        let expected = mask == 0 || mask == 255;
        ensure(maps.contains(pi.images()) == expected, format!("twin swap with class mask {mask:#b}"))?;
    }
    Ok("π_0 rejected; 384 maps; only π_∅ and π_V = τ_1 among the 256 twin swaps".into())
}

fn c09_arc_transitivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let check = |k: u32, x: u64, y: u64, u: u64, w: u64, g: &DenseGraph| -> Result<(), String> {
        let b = |v| Bits::new(k, v).unwrap();
        let a = arc_transitivity_witness(b(x), b(y), b(u), b(w)).map_err(|e| e.to_string())?;
        ensure(a.apply(x as usize) == u as usize && a.apply(y as usize) == w as usize, "arc not mapped")?;
        ensure(is_automorphism(&a, g).unwrap(), "witness is not an automorphism")
    };
    let g4 = omega(2);
    let arcs4: Vec<(u64, u64)> = g4.edges().flat_map(|(u, v)| [(u as u64, v as u64), (v as u64, u as u64)]).collect();
    for _ in 0..1000 {
        let (x, y) = arcs4[rng.gen_range(0..arcs4.len())];
        let (u, w) = arcs4[rng.gen_range(0..arcs4.len())];
        check(2, x, y, u, w, &g4)?;
    }
    let g2 = omega(1);
    let arcs2: Vec<(u64, u64)> = g2.edges().flat_map(|(u, v)| [(u as u64, v as u64), (v as u64, u as u64)]).collect();
    for &(x, y) in &arcs2 {
        for &(u, w) in &arcs2 {
            check(1, x, y, u, w, &g2)?;
        }
    }
    Ok(format!("1000 random Ω_4 arc pairs, all {} Ω_2 arc pairs", arcs2.len().pow(2)))
}

fn c10_group_orders() -> Outcome {
    let q = automorphism_group(&quotient(2), None).unwrap();
    ensure(q.order_u64() == Some(1152), format!("|Aut(Ω̃_4)| = {}", q.order()))?;
    let g = omega(2);
    let full = automorphism_group(&g, None).unwrap();
    ensure(full.order_u64() == Some(294_912), format!("|Aut(Ω_4)| = {}", full.order()))?;
    let elements = full.elements(DEFAULT_ELEMENT_CAP).unwrap();
    let mut kernel = 0;
    for a in &elements {
        let phi = quotient_map(a, 2).map_err(|e| e.to_string())?;
        if phi.is_identity() {
            kernel += 1;
            let moved: Vec<Class> = (0..8u64)
                .filter(|&r| a.apply(r as usize) != r as usize)
                .map(|r| Class::of(Bits::new(2, r).unwrap()))
                .collect();
            ensure(twin_swap_set(2, &moved).unwrap().images() == a.images(), "kernel element is not a twin swap")?;
        }
    }
    ensure(kernel == 256, format!("kernel has {kernel} elements"))?;
    Ok("1152, 294912 = 1152·256, kernel = 256 twin swaps".into())
}

fn c11_d_determining() -> Outcome {
    for k in [2, 3] {
        let v = verify_d_determining(k).map_err(|e| e.to_string())?;
        ensure(v.verdict == Verdict::Pass, format!("D not determining at k={k}: {:?}", v.witness))?;
        minimality_witness(k).map_err(|e| e.to_string())?;
    }
    Ok("D determining on the odd component of Ω̃_4 and on Ω̃_6; D′ witnesses found".into())
}

fn c12_neighbor_counts() -> Outcome {
    let mut checked = 0;
    for k in 1..=5u32 {
        for m in (1..=k).step_by(2) {
            for u in masks_of_weight::<u64>(2 * k, m) {
                let mut hist = vec![0u64; k as usize + 1];
                for v in masks_of_weight::<u64>(2 * k, k) {
                    hist[(u & v).count_ones() as usize] += 1;
                }
                for t in 0..=k {
                    let formula: u64 = neighbor_weight_count(k as u64, m as u64, t as u64);
                    ensure(hist[t as usize] == formula, format!("k={k} m={m} t={t} u={u:#b}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (u, t) instances"))
}

fn c13_same_weight_witnesses() -> Outcome {
    let mut count = 0u64;
    for k in [4u32, 5] {
        for m in (3..k).step_by(2) {
            let all: Vec<u64> = masks_of_weight::<u64>(2 * k, m).collect();
            for &u in &all {
                for &w in all.iter().filter(|&&w| w != u) {
                    let req = WitnessRequest::new(Bits::new(k, u).unwrap(), Bits::new(k, w).unwrap()).unwrap();
                    same_weight_witness(&req).map_err(|e| format!("k={k} u={u:#b} w={w:#b}: {e}"))?;
                    count += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for k in 6..=10u32 {
        let mut done = 0;
        while done < 10_000 {
            let m = 2 * rng.gen_range(1..=(k - 2) / 2) + 1;
            let pick = |rng: &mut ChaCha8Rng| {
                let mut v = 0u64;
                while v.count_ones() < m {
                    v |= 1 << rng.gen_range(0..2 * k);
                }
                v
            };
            let (u, w) = (pick(&mut rng), pick(&mut rng));
            if u == w {
                continue;
            }
            let req = WitnessRequest::new(Bits::new(k, u).unwrap(), Bits::new(k, w).unwrap()).unwrap();
            same_weight_witness(&req).map_err(|e| format!("k={k} u={u:#b} w={w:#b}: {e}"))?;
            done += 1;
        }
        count += done;
    }
    Ok(format!("{count} pairs, zero failures"))
}

fn c14_unique_neighbors() -> Outcome {
    for k in 2..=4 {
        let r = unique_neighbors_check(k).map_err(|e| e.to_string())?;
        ensure(r.passed(), format!("k={k}: {:?}", r.counterexample))?;
    }
    Ok("k = 2, 3, 4".into())
}

fn c15_decreasing_counts_and_identities() -> Outcome {
    let r = decreasing_counts_range(3, 200);
    ensure(r.verdict != Verdict::Fail, format!("decreasing counts: {:?}", r.counterexample))?;
    let i = ratio_identities(200);
    ensure(i.passed(), format!("identities: {:?}", i.counterexample))?;
    Ok("3 ≤ k ≤ 200".into())
}

fn c16_m_table() -> Outcome {
    let published = [4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 8, 9, 9, 9, 9, 9];
    let computed: Vec<u32> = (2..=18).map(orthograph::symmetry::m_bound).collect();
    let diffs: Vec<String> = (2..=18)
        .zip(published.iter().zip(&computed))
        .filter(|(_, (p, c))| p != c)
        .map(|(k, (p, c))| format!("k={k}: table {p}, computed {c}"))
        .collect();
    ensure(diffs.is_empty(), diffs.join("; "))?;
    Ok(format!("{computed:?}"))
}

fn c17_constructed_labelings() -> Outcome {
    for k in [2, 3] {
        let f = construct_graph_distinguishing(k).unwrap();
        ensure(f.used_label_count() as u32 == orthograph::symmetry::m_bound(k), "label count")?;
        ensure(is_distinguishing_reduced(k, &f).unwrap(), format!("constructed labeling fails at k={k}"))?;
    }
    let g = omega(2);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..200 {
        let d = 3 + i % 3;
        let f = Labeling::new((0..16).map(|_| rng.gen_range(1..=d)).collect(), d).unwrap();
        ensure(
            is_distinguishing_direct(&g, &f).unwrap() == is_distinguishing_reduced(2, &f).unwrap(),
            format!("reduced and direct disagree on {:?}", f.labels()),
        )?;
    }
    let comps = g.components();
    let mut instances = vec![("Ω_2", omega(1)), ("Ω_4", omega(2)), ("Ω̃_4", quotient(2))];
    instances.push(("even component", g.induced(&comps[0])));
    instances.push(("odd component", g.induced(&comps[1])));
    let mut bounds = Vec::new();
    for (name, h) in &instances {
        let (dist, _) = dist_number_exact(h).unwrap();
        let (det, _) = det_number_exact(h).unwrap();
        ensure(dist_det_bound_holds(dist, det), format!("Dist > Det + 1 on {name}"))?;
        bounds.push(format!("{name}: {dist} ≤ {det}+1"));
    }
    Ok(format!("k = 2, 3 constructions pass; 200 agreements; {}", bounds.join(", ")))
}

/// Criteria that cannot pass as stated, with the reason. They still run and
/// print FAIL; the test fails if this set changes in either direction.
const UNATTAINABLE: &[(u32, &str)] =
    &[(16, "the published row gives m = 9 at k = 18, but k = 18 needs C(m, 2) ≥ 37 and C(9, 2) = 36")];

#[test]
fn acceptance() {
    let criteria: [Criterion; 17] = [
        (1, "Ω_2 ≅ C_4", 1, c01_omega2_is_c4),
        (2, "Ω_4 structure", 1, c02_omega4_structure),
        (3, "Ω̃_4 ≅ 2K_4, twin-free", 1, c03_quotient4),
        (4, "Det(Ω_4) = 8", 120, c04_det_omega4),
        (5, "Dist(Ω_2), Dist(Ω_4), Dist(Ω̃_4)", 360, c05_dist_numbers),
        (6, "no 3-distinguishing labeling of a component", 10, c06_no_3_labeling),
        (7, "Dist(Ω_2k) > 2", 60, c07_dist_gt_2),
        (8, "π_0 outside ⟨permutations, translations⟩", 1, c08_pi0_not_in_normal_form),
        (9, "arc-transitivity witnesses", 30, c09_arc_transitivity),
        (10, "group orders and kernel", 120, c10_group_orders),
        (11, "D determining, D′ witness", 600, c11_d_determining),
        (12, "neighbor-count formula", 60, c12_neighbor_counts),
        (13, "weight-(k-1) witnesses", 120, c13_same_weight_witnesses),
        (14, "unique neighborhoods", 300, c14_unique_neighbors),
        (15, "monotone counts and ratio identities", 10, c15_decreasing_counts_and_identities),
        (16, "m-table for 2 ≤ k ≤ 18", 1, c16_m_table),
        (17, "constructed labelings and Dist ≤ Det + 1", 300, c17_constructed_labelings),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded {limit:?}")),
            Err(e) => (false, e),
        };
        println!(
            "criterion {id:2} {} [{:.2}s / {}s] {name}: {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            failed.push(id);
        }
    }
    for (id, reason) in UNATTAINABLE {
        println!("criterion {id:2} is unattainable as stated: {reason}");
    }
    let expected: Vec<u32> = UNATTAINABLE.iter().map(|&(id, _)| id).collect();
    assert_eq!(failed, expected, "failing criteria differ from the unattainable set");
}
