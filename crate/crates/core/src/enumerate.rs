//! Small-graph corpora: labeled graphs by edge mask, isomorphism classes by
//! vertex augmentation, and seeded random graphs.

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{connected_components, Graph};

/// Largest order accepted by [`canonical_key`].
pub const CANON_MAX_VERTICES: usize = 11;

/// An isomorphism invariant that separates non-isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: usize,
    pub code: u64,
}

/// Maximum upper-triangle code over all labelings reached by
/// individualization and equitable refinement.
pub fn canonical_key(g: &Graph) -> CanonKey {
    let n = g.n();
    assert!(n <= CANON_MAX_VERTICES, "canonical_key supports at most {CANON_MAX_VERTICES} vertices");
    let rows: Vec<u16> = (0..n).map(|v| g.neighbors(v).fold(0u16, |m, u| m | 1 << u)).collect();
    let mut best = 0;
    search(&rows, vec![(0..n).collect()], &mut best);
    CanonKey { n, code: best }
}

fn search(rows: &[u16], cells: Vec<Vec<usize>>, best: &mut u64) {
    let cells = refine(rows, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            *best = (*best).max(code(rows, &order));
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = cells[..i].to_vec();
                next.push(vec![v]);
                next.push(cells[i].iter().copied().filter(|&u| u != v).collect());
                next.extend_from_slice(&cells[i + 1..]);
                search(rows, next, best);
            }
        }
    }
}

fn refine(rows: &[u16], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let signature = |v: usize| -> Vec<u32> { masks.iter().map(|m| (rows[v] & m).count_ones()).collect() };
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code(rows: &[u16], order: &[usize]) -> u64 {
    let mut c = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            c = c << 1 | u64::from(rows[order[i]] >> order[j] & 1);
        }
    }
    c
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices; `n <= 8`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!((1..=8).contains(&n), "labeled enumeration supports 1..=8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("n >= 1")
    })
}

/// One graph per isomorphism class on exactly `n` vertices, in order of
/// discovery. Each class is grown from the classes on `n − 1` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!((1..=CANON_MAX_VERTICES).contains(&n));
    let mut level = vec![Graph::empty(1).expect("n = 1")];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for nbrs in 0u32..1 << (m - 1) {
                let new = (0..m - 1).filter(|u| nbrs >> u & 1 == 1).map(|u| (u, m - 1));
                let h = Graph::from_edges(m, base.iter().copied().chain(new)).expect("m >= 1");
                if seen.insert(canonical_key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() == 1
}

/// Connected isomorphism classes on `1..=max_n` vertices, by order.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| graphs_up_to_iso(n).into_iter().filter(is_connected)).collect()
}

/// `G(n, p)` from a seeded generator.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("n >= 1")
}

/// A random spanning tree plus `G(n, p)` edges; always connected.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend(random_graph(rng, n, p).edges());
    Graph::from_edges(n, edges).expect("n >= 1")
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
