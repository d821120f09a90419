mod common;

use num_rational::Ratio;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tvacc_core::spread::{
    ackerman_bound, compute_hull, compute_hull_in_order, dyn_bruteforce, dyn_bruteforce_with, min_dynamic_monopoly,
    DYN_SIZE_LIMIT,
};
use tvacc_core::{gen, is_dynamic_monopoly, Exec, Graph, VertexFn, VertexSet};

fn instance(max_n: usize) -> impl Strategy<Value = (Graph, VertexFn, VertexSet)> {
    (1..=max_n, any::<u64>(), 0.0..0.6f64).prop_flat_map(|(n, seed, p)| {
        let g = gen::random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        (
            Just(g),
            proptest::collection::vec(-1i64..=4, n).prop_map(VertexFn::new),
            proptest::collection::vec(any::<bool>(), n)
                .prop_map(move |bits| VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v]))),
        )
    })
}

proptest! {
    #[test]
    fn hull_closure_laws((g, tau, seed) in instance(10), extra in proptest::collection::vec(any::<bool>(), 10)) {
        let h = compute_hull(&g, &tau, &seed);
        prop_assert!(seed.is_subset(&h));
        prop_assert_eq!(compute_hull(&g, &tau, &h), h.clone());

        let mut bigger = seed.clone();
        for v in (0..g.n()).filter(|&v| extra[v]) {
            bigger.insert(v);
        }
        prop_assert!(h.is_subset(&compute_hull(&g, &tau, &bigger)));

        let raised = VertexFn::new(tau.values().iter().zip(&extra).map(|(&t, &e)| t + i64::from(e)).collect());
        prop_assert!(compute_hull(&g, &raised, &seed).is_subset(&h));
    }

    #[test]
    fn hull_is_order_independent((g, tau, seed) in instance(10), shuffle_seed in any::<u64>()) {
        let h = compute_hull(&g, &tau, &seed);
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle_seed));
        prop_assert_eq!(compute_hull_in_order(&g, &tau, &seed, &order), h);
    }

    #[test]
    fn dyn_is_monotone_in_thresholds((g, tau, _seed) in instance(9), bump in 0usize..9) {
        let lo = dyn_bruteforce(&g, &tau, DYN_SIZE_LIMIT).unwrap();
        let hi = dyn_bruteforce(&g, &tau.decremented_at(bump % g.n()).decremented_at(bump % g.n()), DYN_SIZE_LIMIT).unwrap();
        prop_assert!(hi <= lo);
    }

    #[test]
    fn ackerman_bounds_dyn((g, tau, _seed) in instance(9)) {
        let clamped = VertexFn::new((0..g.n()).map(|u| tau[u].clamp(0, g.degree(u) as i64)).collect());
        let d = dyn_bruteforce(&g, &clamped, DYN_SIZE_LIMIT).unwrap();
        prop_assert!(Ratio::from_integer(d as i64) <= ackerman_bound(&g, &clamped).unwrap());
    }

    #[test]
    fn minimum_monopoly_is_minimal((g, tau, _seed) in instance(9)) {
        let d = min_dynamic_monopoly(&g, &tau, DYN_SIZE_LIMIT).unwrap();
        prop_assert!(is_dynamic_monopoly(&g, &tau, &d));
        // Every vertex that no neighbourhood can activate must be seeded.
        for u in (0..g.n()).filter(|&u| tau[u] > g.degree(u) as i64) {
            prop_assert!(d.contains(u));
            let mut without = d.clone();
            without.remove(u);
            prop_assert!(!is_dynamic_monopoly(&g, &tau, &without));
        }
        // No seed can simply be dropped.
        for u in d.iter() {
            let mut without = d.clone();
            without.remove(u);
            prop_assert!(!is_dynamic_monopoly(&g, &tau, &without) || tau[u] <= 0);
        }
    }
}

#[test]
fn dyn_examples_by_enumeration() {
    // Independent check: scan all 2^n subsets.
    let brute = |g: &Graph, tau: &VertexFn| {
        (0u32..1 << g.n())
            .filter(|mask| is_dynamic_monopoly(g, tau, &VertexSet::from_vertices(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1))))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    };
    let p3 = gen::path(3);
    assert_eq!(brute(&p3, &VertexFn::constant(3, 1)), 1);
    assert_eq!(brute(&p3, &VertexFn::constant(3, 2)), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = 1 + (rand::Rng::gen_range(&mut rng, 0..9));
        let g = gen::random_connected(n, 0.3, &mut rng);
        let tau = common::random_fn(n, -1, 4, &mut rng);
        assert_eq!(dyn_bruteforce(&g, &tau, DYN_SIZE_LIMIT).unwrap(), brute(&g, &tau));
    }
}

#[test]
fn parallel_search_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10 {
        let g = gen::random_connected(16, 0.2, &mut rng);
        let tau = common::random_fn(16, 0, 3, &mut rng);
        let seq = min_dynamic_monopoly(&g, &tau, DYN_SIZE_LIMIT).unwrap();
        assert_eq!(dyn_bruteforce_with(Exec::Sequential, &g, &tau, DYN_SIZE_LIMIT).unwrap(), seq.len());
        assert_eq!(dyn_bruteforce_with(Exec::Parallel, &g, &tau, DYN_SIZE_LIMIT).unwrap(), seq.len());
    }
}
