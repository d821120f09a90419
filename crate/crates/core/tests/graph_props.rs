use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tvacc_core::{gen, RootedTree, VertexFn};

proptest! {
    #[test]
    fn rooting_invariants(n in 1usize..40, seed in any::<u64>(), root_pick in any::<usize>(), caps in proptest::collection::vec(0i64..5, 40)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gen::random_tree(n, &mut rng);
        let root = root_pick % n;
        let cap = VertexFn::new(caps[..n].to_vec());
        let t = RootedTree::new(g, root).unwrap().with_capacities(&cap).unwrap();

        prop_assert_eq!((0..n).map(|u| t.children(u).len()).sum::<usize>(), n - 1);
        prop_assert_eq!((0..n).filter(|&u| t.parent(u).is_none()).collect::<Vec<_>>(), vec![root]);
        for u in 0..n {
            for &c in t.children(u) {
                prop_assert_eq!(t.parent(c), Some(u));
            }
        }

        let mut pos = vec![usize::MAX; n];
        for (i, &u) in t.postorder().iter().enumerate() {
            prop_assert_eq!(pos[u], usize::MAX);
            pos[u] = i;
        }
        prop_assert_eq!(t.postorder().len(), n);

        // V_u is the contiguous postorder block ending at u.
        let size = t.subtree_sizes();
        for u in 0..n {
            let dominated = (0..n)
                .filter(|&w| std::iter::successors(Some(w), |&x| t.parent(x)).any(|a| a == u))
                .collect::<Vec<_>>();
            prop_assert_eq!(dominated.len(), size[u]);
            prop_assert!(dominated.iter().all(|&w| pos[w] <= pos[u] && pos[w] + size[u] > pos[u]));
            let expected: i64 = dominated.iter().map(|&w| cap[w]).sum();
            prop_assert_eq!(t.subtree_capacity(u), Some(expected));
        }
        prop_assert_eq!(t.subtree_capacity(root), Some(cap.sum()));
    }
}
