use std::collections::BTreeMap;

use proptest::prelude::*;

use privlabel_graph::{EntityKind, Graph, LabelDomain};
use privlabel_verify::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..n * 2).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(a, b)| a != b)).unwrap()
        })
    })
}

fn domains_for(n: usize, palette: u64) -> impl Strategy<Value = LabelDomain> {
    proptest::collection::vec(proptest::collection::btree_set(0..palette, 1..=3), n).prop_map(move |sets| {
        LabelDomain::new(EntityKind::Vertex, palette, palette, sets.into_iter().map(|s| s.into_iter().collect()).collect())
            .unwrap()
    })
}

proptest! {
    #[test]
    fn sweep_agrees_with_structure((g, d) in small_graph(8).prop_flat_map(|g| { let n = g.n(); (Just(g), domains_for(n, 6)) })) {
        let structural = g.edges().iter().all(|&(u, v)| d.domain(u).iter().all(|x| !d.contains(v, *x)));
        let sweep = exhaustive_selection_sweep(&g, &d).expect("3^8 selections fit the limit");
        prop_assert_eq!(structural, sweep.is_ok());
        prop_assert_eq!(structural, check_domains_disjoint(&g, &d).passed());
    }

    #[test]
    fn weak_diameter_matches_pairwise_bfs((g, d) in small_graph(40).prop_flat_map(|g| { let n = g.n(); (Just(g), domains_for(n, 5)) })) {
        let mut holders: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for v in 0..g.n() {
            for &x in d.domain(v) {
                holders.entry(x).or_default().push(v);
            }
        }
        let mut expected = Some(0usize);
        for hs in holders.values() {
            for &a in hs {
                let dist = bfs_distances(&g, a);
                for &b in hs {
                    expected = match (expected, dist[b]) {
                        (Some(m), d) if d != usize::MAX => Some(m.max(d)),
                        _ => None,
                    };
                }
            }
        }
        let check = check_network_decomposition(&g, &d, g.n(), usize::MAX);
        prop_assert_eq!(check.max_weak_diameter, expected);
        prop_assert_eq!(check.distinct_labels, holders.len());
    }

    #[test]
    fn defect_of_domains_bounds_every_selection((g, d) in small_graph(7).prop_flat_map(|g| { let n = g.n(); (Just(g), domains_for(n, 3)) })) {
        let bound = check_defective_domains(&g, &d, usize::MAX).max_defect;
        // every selection has defect at most the worst case over domains
        let sizes = d.sizes();
        let total: usize = sizes.iter().product();
        for code in 0..total {
            let mut rest = code;
            let labels: Vec<u64> = (0..g.n()).map(|v| { let x = d.domain(v)[rest % sizes[v]]; rest /= sizes[v]; x }).collect();
            prop_assert!(check_defective_labels(&g, &labels, usize::MAX).max_defect <= bound);
        }
    }

    #[test]
    fn maximal_matching_checker_agrees_with_brute_force(g in small_graph(7), pick in proptest::collection::vec(any::<bool>(), 21)) {
        let set: Vec<usize> = (0..g.m()).filter(|&e| pick[e]).collect();
        let is_matching = set.iter().all(|&a| set.iter().all(|&b| {
            let ((p, q), (r, s)) = (g.edge(a), g.edge(b));
            a == b || (p != r && p != s && q != r && q != s)
        }));
        let maximal = is_matching && (0..g.m()).all(|e| {
            let (u, v) = g.edge(e);
            set.iter().any(|&f| { let (p, q) = g.edge(f); p == u || p == v || q == u || q == v })
        });
        prop_assert_eq!(check_matching(&g, &set).passed(), is_matching);
        prop_assert_eq!(check_maximal_matching(&g, &set).passed(), maximal);
    }
}
