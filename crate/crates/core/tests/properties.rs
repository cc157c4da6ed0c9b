mod common;

use std::sync::Arc;

use proptest::prelude::*;

use fallcolor::coloring::{fall_set, is_fall, SolverConfig};
use fallcolor::constructions::{case1_coloring_with, case2_coloring_with, case4_coloring_with, Derangement};
use fallcolor::enumerate::canonical_key;
use fallcolor::graph::{cat_product, disjoint_union, lex_product, parse_graph6, to_graph6, ProductIndexMap};
use fallcolor::hom::{hom_from_fall, VertexMap};
use fallcolor::reductions::{bipartition, max_matching_bipartite};
use fallcolor::Graph;

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn derangement(t: usize) -> impl Strategy<Value = Derangement> {
    Just((0..t).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_filter_map("has a fixed point", |p| Derangement::new(p).ok())
}

fn bipartite(max_side: usize) -> impl Strategy<Value = Graph> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(a, b)| {
        prop::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
            let pairs = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
            Graph::from_edges(a + b, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in graph(1, 70)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn lex_product_is_associative(a in graph(1, 4), b in graph(1, 4), c in graph(1, 4)) {
        prop_assert_eq!(lex_product(&lex_product(&a, &b), &c), lex_product(&a, &lex_product(&b, &c)));
    }

    #[test]
    fn cat_product_commutes_up_to_swap(a in graph(1, 6), b in graph(1, 6)) {
        let ab = cat_product(&a, &b);
        let ba = cat_product(&b, &a);
        let (m_ab, m_ba) = (ProductIndexMap::new(a.n(), b.n()), ProductIndexMap::new(b.n(), a.n()));
        let swap: Vec<usize> = (0..ab.n()).map(|v| { let (x, y) = m_ab.unpair(v); m_ba.pair(y, x) }).collect();
        prop_assert_eq!(relabel(&ab, &swap), ba);
    }

    #[test]
    fn canonical_key_is_label_invariant(g in graph(1, 8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut rng = fallcolor::enumerate::seeded_rng(seed);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        prop_assert_eq!(canonical_key(&relabel(&g, &perm)), canonical_key(&g));
    }

    #[test]
    fn fall_set_is_label_invariant(g in graph(1, 8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut rng = fallcolor::enumerate::seeded_rng(seed);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let cfg = SolverConfig::default();
        prop_assert_eq!(fall_set(&relabel(&g, &perm), &cfg).unwrap().fall_set, fall_set(&g, &cfg).unwrap().fall_set);
    }

    #[test]
    fn matching_is_maximum(g in bipartite(5)) {
        let part = bipartition(&g).unwrap();
        let m = max_matching_bipartite(&g, &part).unwrap();
        prop_assert_eq!(m.len(), common::brute_force_matching(&g));
    }

    #[test]
    fn union_law(parts in prop::collection::vec(graph(1, 5), 1..=3)) {
        let cfg = SolverConfig::default();
        let whole = fall_set(&disjoint_union(&parts).unwrap(), &cfg.clone().without_decomposition()).unwrap();
        let mut meet: Option<std::collections::BTreeSet<usize>> = None;
        for p in &parts {
            let fs = fall_set(p, &cfg).unwrap().fall_set;
            meet = Some(match meet { None => fs, Some(m) => m.intersection(&fs).copied().collect() });
        }
        prop_assert_eq!(whole.fall_set, meet.unwrap());
    }

    #[test]
    fn projection_then_fall_map_is_type2(h in graph(2, 5), r in graph(2, 4)) {
        prop_assume!((0..r.n()).all(|v| !r.is_isolated(v)));
        let cfg = SolverConfig::default();
        let Some((_, f)) = fall_set(&h, &cfg).unwrap().witnesses.into_iter().next() else { return Ok(()) };
        let hr = Arc::new(cat_product(&h, &r));
        let m = ProductIndexMap::for_factors(&h, &r);
        let proj = VertexMap::new(hr.clone(), Arc::new(h.clone()), (0..hr.n()).map(|v| m.unpair(v).0).collect()).unwrap();
        prop_assert!(proj.is_type2_hom());
        let to_k = proj.compose(&hom_from_fall(Arc::new(h), &f).unwrap()).unwrap();
        prop_assert!(to_k.is_type2_hom());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn case1_with_any_derangement(sigma in (3usize..=5).prop_flat_map(derangement), extra in 1usize..=3) {
        let rn = sigma.len() + extra;
        let (g, f) = case1_coloring_with(&sigma, rn).unwrap();
        prop_assert!(is_fall(&g, &f).unwrap());
    }

    #[test]
    fn case2_with_any_derangement(sigma in (2usize..=5).prop_flat_map(derangement), rs in 2usize..=3, rn in 2usize..=3) {
        let (g, f) = case2_coloring_with(2 * rs, &sigma, 2 * rn).unwrap();
        prop_assert!(is_fall(&g, &f).unwrap());
    }

    #[test]
    fn case4_with_any_derangement(sigma in (3usize..=5).prop_flat_map(derangement), ra in 1usize..=2) {
        let (g, f) = case4_coloring_with(2 * ra + 1, &sigma, 4).unwrap();
        prop_assert!(is_fall(&g, &f).unwrap());
    }
}
