//! Property and invariant checks that complement the acceptance suite:
//! structural invariants of the tree metrics, round trips of the compact
//! sequence form, monotonicity of the reduction step, the distance-delta
//! table of the mate rewiring, and arithmetic guarantees of the indices.

use num::{BigInt, One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ecctree::indices::{sw_k_formula, wiener_type, Monotonicity, WeightFunction};
use ecctree::verify::DEFAULT_SWEEP_CAP;
use ecctree::{
    build_tdn, caterpillarize, classify_by_sequence, free_trees, is_isomorphic, mate,
    parse_edge_list, random_labeled_tree, EccSequence, Tree,
};

/// All compact sequences whose realising trees have at most `max_order`
/// vertices.
fn all_sequences_up_to(max_order: usize) -> Vec<EccSequence> {
    let mut out = Vec::new();
    let max_r = max_order as u32; // coarse bound; the recursion prunes by order
    for radius in 1..=max_r {
        for levels in [radius.saturating_sub(1), radius] {
            let mut mults = Vec::with_capacity(levels as usize);
            rec(radius, levels as usize, &mut mults, max_order, &mut out);
        }
    }
    fn rec(
        radius: u32,
        levels: usize,
        mults: &mut Vec<u32>,
        max_order: usize,
        out: &mut Vec<EccSequence>,
    ) {
        let used: usize = mults.iter().map(|&m| m as usize).sum();
        let remaining = levels - mults.len();
        if used + 2 * remaining + 1 > max_order {
            return;
        }
        if mults.len() == levels {
            if let Ok(s) = EccSequence::new(radius, mults.clone()) {
                if s.order() <= max_order {
                    out.push(s);
                }
            }
            return;
        }
        let budget = max_order - used - 2 * (remaining - 1) - 1;
        for m in 2..=budget as u32 {
            mults.push(m);
            rec(radius, levels, mults, max_order, out);
            mults.pop();
        }
    }
    out
}

#[test]
fn sequence_enumeration_agrees_with_classification() {
    // The compact sequences of order n are exactly the class keys seen
    // when classifying all trees of order n.
    for n in 3..=9usize {
        let mut from_enum: Vec<String> = all_sequences_up_to(n)
            .into_iter()
            .filter(|s| s.order() == n)
            .map(|s| s.to_string())
            .collect();
        from_enum.sort();
        let mut from_trees: Vec<String> = classify_by_sequence(n, DEFAULT_SWEEP_CAP)
            .unwrap()
            .keys()
            .map(|s| s.to_string())
            .collect();
        from_trees.sort();
        assert_eq!(from_enum, from_trees, "sequence sets differ at n={n}");
    }
}

#[test]
fn steiner_at_k_equals_n_minus_one_selects_exactly_the_caterpillars() {
    // SW_(n-1) = n(n-1) - p, so its in-class minimizers are the trees
    // with the most leaves, which are exactly the caterpillars.
    for n in [7usize, 8] {
        for (seq, members) in classify_by_sequence(n, DEFAULT_SWEEP_CAP).unwrap() {
            let values: Vec<BigInt> = members
                .iter()
                .map(|t| sw_k_formula(t, n - 1).unwrap())
                .collect();
            let min = values.iter().min().unwrap().clone();
            for (t, v) in members.iter().zip(&values) {
                assert_eq!(*v == min, t.is_caterpillar(), "class {seq} at n={n}");
            }
        }
    }
}

#[test]
fn free_tree_counts_up_to_the_sweep_cap() {
    let expected = [(11usize, 235usize), (12, 551), (13, 1301), (14, 3159)];
    for (n, want) in expected {
        assert_eq!(free_trees(n).unwrap().count(), want, "count at n={n}");
    }
}

#[test]
fn radius_and_center_match_diameter_parity() {
    for n in 2..=10usize {
        for t in free_trees(n).unwrap() {
            let prof = t.ecc_profile();
            assert_eq!(prof.radius, prof.diameter.div_ceil(2));
            let expected_centers = if prof.diameter % 2 == 0 { 1 } else { 2 };
            assert_eq!(prof.center.len(), expected_centers);
        }
    }
}

#[test]
fn caterpillar_agrees_with_bruteforce_path_cover() {
    // Oracle: some path between two vertices contains every non-leaf.
    for n in 2..=9usize {
        for t in free_trees(n).unwrap() {
            let non_leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) > 1).collect();
            let dist = t.all_pairs_distances();
            let mut coverable = non_leaves.is_empty();
            'outer: for a in 0..n {
                for b in a..n {
                    // v lies on the a-b path iff d(a,v) + d(v,b) = d(a,b).
                    if non_leaves
                        .iter()
                        .all(|&v| dist[a][v] + dist[v][b] == dist[a][b])
                    {
                        coverable = true;
                        break 'outer;
                    }
                }
            }
            assert_eq!(t.is_caterpillar(), coverable, "disagreement at n={n}");
        }
    }
}

fn relabel(t: &Tree, perm: &[usize]) -> Tree {
    let edges: Vec<(usize, usize)> = t.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Tree::from_edge_list(t.order(), &edges).unwrap()
}

#[test]
fn canonical_form_is_relabeling_invariant_and_separating() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=16);
        let t = random_labeled_tree(n, &mut rng);
        let form = t.canonical_form();
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(relabel(&t, &perm).canonical_form(), form);
        }
    }
    // Distinct classes of the same order get distinct forms.
    for n in 2..=8usize {
        let trees: Vec<Tree> = free_trees(n).unwrap().collect();
        for i in 0..trees.len() {
            for j in i + 1..trees.len() {
                assert_ne!(trees[i].canonical_form(), trees[j].canonical_form());
            }
        }
    }
}

#[test]
fn compact_form_round_trips_up_to_order_14() {
    let sequences = all_sequences_up_to(14);
    assert!(sequences.len() > 100);
    for s in sequences {
        let t = s.build_extremal();
        assert_eq!(EccSequence::of_tree(&t), s, "round trip failed for {s}");
        assert!(t.is_caterpillar());
        let prof = t.ecc_profile();
        assert_eq!(prof.radius, s.radius());
        assert_eq!(prof.diameter, s.diameter());
    }
}

#[test]
fn reduction_terminates_at_tdn_shape() {
    for s in all_sequences_up_to(12) {
        let mut current = s.clone();
        let mut steps = 0;
        while let Ok(next) = current.reduce() {
            assert_eq!(next.order(), current.order());
            assert_eq!(next.radius(), current.radius());
            assert_eq!(next.diameter(), current.diameter());
            current = next;
            steps += 1;
            assert!(steps + 2 <= s.levels(), "too many reduction steps for {s}");
        }
        assert!(current.multiplicities().iter().skip(1).all(|&m| m == 2));
        if s.diameter() >= 2 {
            let tdn = build_tdn(s.order(), s.diameter() as usize).unwrap();
            assert!(
                is_isomorphic(&current.build_extremal(), &tdn),
                "reduction of {s} did not end at T_dn"
            );
        }
    }
}

#[test]
fn reduction_moves_every_index_toward_tdn() {
    // Reduction preserves the diameter, so the RCW weight is comparable
    // across the step as well.
    let increasing = [
        WeightFunction::Wiener,
        WeightFunction::HyperWiener,
        WeightFunction::Rcw,
    ];
    let decreasing = [
        WeightFunction::Harary,
        WeightFunction::generalized(-2.0).unwrap(),
    ];
    for s in all_sequences_up_to(12) {
        let Ok(reduced) = s.reduce() else { continue };
        let before = s.build_extremal();
        let after = reduced.build_extremal();
        for g in &increasing {
            let a = wiener_type(&after, g);
            let b = wiener_type(&before, g);
            assert!(
                a.as_exact().unwrap() < b.as_exact().unwrap(),
                "{g} did not strictly drop under reduction of {s}"
            );
        }
        for g in &decreasing {
            let a = wiener_type(&after, g);
            let b = wiener_type(&before, g);
            assert!(a.as_exact().unwrap() > b.as_exact().unwrap());
        }
        let n = s.order();
        let threshold = n - (s.diameter() as usize).div_ceil(2);
        let l = s.levels();
        let i = (3..=l)
            .rev()
            .find(|&i| s.multiplicities()[i - 2] > 2)
            .unwrap();
        for k in 2..=n - 1 {
            let a = sw_k_formula(&after, k).unwrap();
            let b = sw_k_formula(&before, k).unwrap();
            assert!(a <= b, "SW_{k} increased under reduction of {s}");
            if k <= threshold && i == 3 {
                assert!(a < b, "SW_{k} not strict for {s} at i=3");
            }
        }
    }
}

#[test]
fn mate_strictly_decreases_wiener_and_obeys_delta_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    let mut seen = 0;
    while seen < 200 {
        let n = rng.gen_range(6..=16);
        let t = random_labeled_tree(n, &mut rng);
        if t.is_caterpillar() {
            continue;
        }
        seen += 1;
        let (rewired, trace) = mate(&t).unwrap();
        // Strict Wiener decrease whenever the far side has >= 2 vertices,
        // which the trace always certifies.
        assert!(trace.far_side.len() >= 2);
        let before = wiener_type(&t, &WeightFunction::Wiener);
        let after = wiener_type(&rewired, &WeightFunction::Wiener);
        assert!(after.as_exact().unwrap() < before.as_exact().unwrap());

        let dist_before = t.all_pairs_distances();
        let dist_after = rewired.all_pairs_distances();
        let in_moved = |v: usize| trace.moved_vertices.binary_search(&v).is_ok();
        let in_far = |v: usize| trace.far_side.binary_search(&v).is_ok();
        for a in 0..n {
            for b in a + 1..n {
                let delta = dist_after[a][b] as i64 - dist_before[a][b] as i64;
                let expected = if (in_moved(a) && in_far(b)) || (in_moved(b) && in_far(a)) {
                    -2
                } else if (in_moved(a) && b == trace.u) || (in_moved(b) && a == trace.u) {
                    2
                } else {
                    0
                };
                assert_eq!(delta, expected, "pair ({a},{b})");
            }
        }
    }
}

#[test]
fn pointwise_dominating_weights_dominate_index_values() {
    // hyper >= wiener >= harary pointwise on x >= 1.
    for n in 2..=9usize {
        for t in free_trees(n).unwrap() {
            let hyper = wiener_type(&t, &WeightFunction::HyperWiener);
            let w = wiener_type(&t, &WeightFunction::Wiener);
            let harary = wiener_type(&t, &WeightFunction::Harary);
            assert!(hyper.as_exact().unwrap() >= w.as_exact().unwrap());
            assert!(w.as_exact().unwrap() >= harary.as_exact().unwrap());
        }
    }
}

#[test]
fn exact_values_are_integers_or_bounded_rationals() {
    for n in 2..=8usize {
        for t in free_trees(n).unwrap() {
            let d = t.ecc_profile().diameter;
            let mut lcm = BigInt::one();
            for x in 1..=d as u64 {
                lcm = num::integer::lcm(lcm, BigInt::from(x));
            }
            for g in [WeightFunction::Wiener, WeightFunction::HyperWiener] {
                let v = wiener_type(&t, &g);
                assert!(v.as_exact().unwrap().is_integer(), "{g} not integral");
            }
            for g in [WeightFunction::Harary, WeightFunction::Rcw] {
                let v = wiener_type(&t, &g);
                let denom = v.as_exact().unwrap().denom().clone();
                assert!(
                    (&lcm % &denom).is_zero(),
                    "{g} denominator {denom} does not divide lcm(1..{d})"
                );
            }
        }
    }
}

#[test]
fn monotonicity_drives_verification_direction() {
    // RCW increases with distance, Harary decreases; the generalised
    // Wiener index follows the sign of the exponent.
    for (g, want) in [
        (WeightFunction::Rcw, Monotonicity::StrictlyIncreasing),
        (WeightFunction::Harary, Monotonicity::StrictlyDecreasing),
        (
            WeightFunction::generalized(0.5).unwrap(),
            Monotonicity::StrictlyIncreasing,
        ),
        (
            WeightFunction::generalized(-0.5).unwrap(),
            Monotonicity::StrictlyDecreasing,
        ),
    ] {
        assert_eq!(g.monotonicity(), want);
    }
}

fn prufer_word() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (4usize..=14)
        .prop_flat_map(|n| proptest::collection::vec(0..n, n - 2).prop_map(move |word| (n, word)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn prop_canonical_form_invariant_under_relabeling(
        (n, word) in prufer_word(),
        seed in any::<u64>(),
    ) {
        let t = ecctree::enumerate::prufer_decode(&word, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        prop_assert_eq!(relabel(&t, &perm).canonical_form(), t.canonical_form());
    }

    #[test]
    fn prop_caterpillarize_preserves_sequence((n, word) in prufer_word()) {
        let t = ecctree::enumerate::prufer_decode(&word, n);
        let seq = EccSequence::of_tree(&t);
        let (cat, steps) = caterpillarize(&t);
        prop_assert!(cat.is_caterpillar());
        prop_assert!(steps <= n);
        prop_assert_eq!(EccSequence::of_tree(&cat), seq);
    }

    #[test]
    fn prop_edge_list_round_trip((n, word) in prufer_word()) {
        let t = ecctree::enumerate::prufer_decode(&word, n);
        let text = t.to_edge_list();
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn prop_formula_matches_bruteforce((n, word) in prufer_word(), k in 2usize..=6) {
        let t = ecctree::enumerate::prufer_decode(&word, n);
        let k = k.min(n);
        prop_assert_eq!(
            sw_k_formula(&t, k).unwrap(),
            ecctree::sw_k_bruteforce(&t, k).unwrap()
        );
    }
}
