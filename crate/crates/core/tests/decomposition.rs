use std::time::Instant;

use privlabel_core::decomposition::*;
use privlabel_core::Error;
use privlabel_graph::enumerate::graphs_on;
use privlabel_graph::{generate, GeneratorKind, GeneratorSpec, Graph};
use privlabel_verify::{check_domains_disjoint, check_forest_labeling, check_network_decomposition, forest_assignment_sweep};

fn gen(kind: GeneratorKind, seed: u64) -> Graph {
    generate(&GeneratorSpec::new(kind, seed)).unwrap().graph
}

fn log2_ceil(n: usize) -> usize {
    (n as f64).log2().ceil() as usize
}

#[test]
fn decomposition_of_a_path() {
    let g = gen(GeneratorKind::Path { n: 64 }, 0);
    for seed in 0..5 {
        let nd = generic_network_decomposition(&g, 3, seed, None).unwrap();
        let bound = 2 * nd.radius_cap;
        let check = check_network_decomposition(&g, &nd.clusters, bound, usize::MAX);
        assert!(check.verdict.passed(), "{check:?}");
        assert_eq!(nd.clusters.min_size(), Some(3));
        assert!(nd.classes.domains().iter().all(|d| d.len() == 3));
    }
}

#[test]
fn decomposition_of_a_clique() {
    let g = gen(GeneratorKind::Clique { n: 16 }, 0);
    let nd = generic_network_decomposition(&g, 2, 9, None).unwrap();
    let check = check_network_decomposition(&g, &nd.clusters, 1, usize::MAX);
    assert!(check.verdict.passed());
}

#[test]
fn decomposition_label_budget_on_gnp() {
    let n = 1024;
    let g = gen(GeneratorKind::Gnp { n, p: 0.004, max_degree: None }, 4);
    let c = log2_ceil(n);
    let nd = generic_network_decomposition(&g, c, 2, None).unwrap();
    let b = default_radius_cap(n);
    // cluster labels of one run that are adjacent never coincide, so the
    // class view is a proper coloring of each run's cluster graph
    let check = check_network_decomposition(&g, &nd.clusters, 2 * b, usize::MAX);
    assert!(check.verdict.passed(), "{check:?}");
    let classes = nd.classes.domains().iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
    assert!(classes <= c * 4 * log2_ceil(n));
    assert!(nd.stats.rounds <= 8 * log2_ceil(n) * log2_ceil(n));
}

#[test]
fn network_decomposition_rejects_single_run() {
    let g = gen(GeneratorKind::Path { n: 5 }, 0);
    assert!(matches!(generic_network_decomposition(&g, 1, 0, None), Err(Error::InvalidParameter(_))));
}

#[test]
fn clique_with_wrong_arboricity() {
    let g = gen(GeneratorKind::Clique { n: 8 }, 0);
    match h_partition(&g, 1, 1.0) {
        Err(Error::ArboricityViolated { a: 1, threshold: 3, witness }) => assert_eq!(witness.len(), 8),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn id_mode_on_k4() {
    let g = gen(GeneratorKind::Clique { n: 4 }, 0);
    for seed in 0..10 {
        let fd = forest_decomposition(&g, ForestMode::IdOrientation, seed).unwrap();
        assert_eq!(fd.stats.rounds, 2);
        assert_eq!(fd.labeling.forest_count, 3);
        assert!(check_forest_labeling(&g, &fd.labeling).passed());
        let mut zero: Vec<usize> = (0..g.m()).filter(|&e| fd.labeling.sources[e] == 0).map(|e| fd.labeling.edge_labels[e]).collect();
        zero.sort_unstable();
        assert_eq!(zero, vec![1, 2, 3]);
    }
}

#[test]
fn id_mode_every_assignment_valid_up_to_five_vertices() {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=5 {
        for g in graphs_on(n) {
            let fd = forest_decomposition(&g, ForestMode::IdOrientation, 0).unwrap();
            let sweep = forest_assignment_sweep(&g, &fd.labeling.sources, fd.labeling.forest_count);
            assert!(sweep.verdict.passed());
            assert!(sweep.assignments >= 1);
            total += sweep.assignments;
        }
    }
    assert!(total > 0);
    assert!(start.elapsed().as_secs() < 30);
}

#[test]
fn h_partition_mode_on_forest_union() {
    let n = 1024;
    let g = gen(GeneratorKind::ForestUnion { n, forests: 2 }, 11);
    let hp = h_partition(&g, 2, 1.0).unwrap();
    assert!(hp.layer_count <= 2 * (n as f64).log2().floor() as usize);
    assert!(hp.orientation.max_out_degree() <= 6);
    assert!(hp.orientation.is_acyclic());
    for v in 0..g.n() {
        let later = g.neighbors(v).iter().filter(|&&u| hp.layers[u] >= hp.layers[v]).count();
        assert!(later <= 6);
    }
    let fd = forest_decomposition(&g, ForestMode::HPartition { a: 2, eps: 1.0 }, 3).unwrap();
    assert!(fd.labeling.forest_count <= 6);
    assert!(check_forest_labeling(&g, &fd.labeling).passed());
    assert_eq!(fd.stats.rounds, hp.stats.rounds + 1);
}

#[test]
fn arboricity_coloring_on_forest_union() {
    let g = gen(GeneratorKind::ForestUnion { n: 1024, forests: 2 }, 5);
    for seed in 0..10 {
        let run = arboricity_generic_coloring_unchecked(&g, 2, 1.0, 4.0, seed).unwrap();
        assert_eq!(run.k, 40);
        assert_eq!(run.domains.palette(), 2 * 6 * 40);
        assert!(!matches!(check_domains_disjoint(&g, &run.domains), privlabel_verify::Verdict::Fail { .. }));
    }
}
