mod common;

use std::collections::BTreeSet;

use fallcolor::coloring::{chromatic_number, fall_set, is_fall, SolverConfig};
use fallcolor::enumerate::{graphs_up_to_iso, random_graph, seeded_rng};
use fallcolor::graph::{mycielskian, to_graph6};
use fallcolor::Graph;

fn check_against_oracle(g: &Graph, cfg: &SolverConfig) {
    let report = fall_set(g, cfg).unwrap();
    let expected = common::naive_fall_set(g);
    assert_eq!(report.fall_set, expected, "{}", to_graph6(g));
    for (k, w) in &report.witnesses {
        assert_eq!(w.k(), *k);
        assert!(is_fall(g, w).unwrap());
    }
}

#[test]
fn solver_matches_partition_oracle_up_to_six_vertices() {
    let cfg = SolverConfig::default();
    let plain = SolverConfig::default().without_decomposition().sequential();
    for n in 1..=6 {
        for g in graphs_up_to_iso(n) {
            check_against_oracle(&g, &cfg);
            check_against_oracle(&g, &plain);
        }
    }
}

#[test]
fn solver_matches_partition_oracle_on_random_graphs() {
    let mut rng = seeded_rng(11);
    let cfg = SolverConfig::default();
    for i in 0..120 {
        let n = 7 + i % 2;
        let p = [0.3, 0.5, 0.7][i % 3];
        check_against_oracle(&random_graph(&mut rng, n, p), &cfg);
    }
}

#[test]
fn fall_set_lies_between_chromatic_number_and_min_degree() {
    let cfg = SolverConfig::default();
    for n in 1..=6 {
        for g in graphs_up_to_iso(n) {
            let fs = common::naive_fall_set(&g);
            let chi = chromatic_number(&g, &cfg).unwrap();
            assert!(fs.iter().all(|&k| chi <= k && k <= g.min_degree() + 1), "{}", to_graph6(&g));
        }
    }
}

#[test]
fn mycielskian_has_no_fall_coloring() {
    let cfg = SolverConfig::default();
    for n in 1..=4 {
        for g in graphs_up_to_iso(n) {
            let m = mycielskian(&g);
            assert!(fall_set(&m, &cfg).unwrap().fall_set.is_empty(), "{}", to_graph6(&g));
        }
    }
    let m_c5 = mycielskian(&Graph::cycle(5).unwrap());
    assert_eq!(common::naive_fall_set(&Graph::cycle(5).unwrap()), BTreeSet::new());
    assert!(fall_set(&m_c5, &cfg).unwrap().fall_set.is_empty());
}

#[test]
fn partition_oracle_counts_bell_numbers() {
    let counts: Vec<usize> = (1..=6).map(|n| common::restricted_growth_strings(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 15, 52, 203]);
}
