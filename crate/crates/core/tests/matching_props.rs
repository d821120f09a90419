mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tvacc_core::matching::{
    all_matchings, khza_check, max_matching_bruteforce, max_matching_tree, min_vertex_cover_bruteforce,
    tau_from_matching, MATCHING_SIZE_LIMIT,
};
use tvacc_core::{gen, is_dynamic_monopoly, RootedTree};

#[test]
fn tree_matching_is_maximum() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 1..=12 {
        for _ in 0..15 {
            let g = gen::random_tree(n, &mut rng);
            let t = RootedTree::new(g.clone(), rand::Rng::gen_range(&mut rng, 0..n)).unwrap();
            let greedy = max_matching_tree(&t);
            assert!(tvacc_core::Matching::new(&g, greedy.edges()).is_ok());
            assert_eq!(greedy.len(), max_matching_bruteforce(&g, MATCHING_SIZE_LIMIT).unwrap().len());
        }
    }
}

#[test]
fn matching_thresholds_sum_on_regular_graphs() {
    for n in 3..=9 {
        let c = gen::cycle(n);
        for m in all_matchings(&c) {
            assert_eq!(tau_from_matching(&c, &m).unwrap().sum(), 2 * 2 * m.len() as i64);
        }
    }
    let k4 = gen::complete(4);
    for m in all_matchings(&k4) {
        assert_eq!(tau_from_matching(&k4, &m).unwrap().sum(), 2 * 3 * m.len() as i64);
    }
}

#[test]
fn vertex_covers_are_degree_monopolies() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=9);
        let g = gen::random_connected(n, 0.35, &mut rng);
        let cover = min_vertex_cover_bruteforce(&g, MATCHING_SIZE_LIMIT).unwrap();
        assert!(is_dynamic_monopoly(&g, &g.degrees(), &cover));
        let nu = max_matching_bruteforce(&g, MATCHING_SIZE_LIMIT).unwrap().len();
        assert!(nu <= cover.len() && cover.len() <= 2 * nu);
    }
}

#[test]
fn khza_on_small_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let n = rand::Rng::gen_range(&mut rng, 1..=7);
        let g = gen::random_tree(n, &mut rng);
        for b in 0..=2 * g.m() as i64 {
            let report = khza_check(&g, b, 10).unwrap();
            assert!(report.holds, "{report:?}");
            assert!(tau_from_matching(&g, &report.witness).unwrap().sum() <= b);
        }
    }
}
