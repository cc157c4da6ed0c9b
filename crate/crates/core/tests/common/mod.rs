//! Brute-force oracles that share no code with the library's search.
#![allow(dead_code)]

use std::collections::BTreeSet;

use fallcolor::Graph;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.adjacent(u, v)).collect()).collect()
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur[i] = c;
            rec(i + 1, max.max(c), cur, out);
        }
    }
    if n > 0 {
        rec(1, 0, &mut cur, &mut out);
    }
    out
}

pub fn naive_is_fall(adj: &[Vec<bool>], colors: &[usize]) -> bool {
    let n = adj.len();
    let k = colors.iter().max().map_or(0, |m| m + 1);
    for u in 0..n {
        for v in 0..n {
            if adj[u][v] && colors[u] == colors[v] {
                return false;
            }
        }
    }
    (0..n).all(|v| {
        let mut seen = vec![false; k];
        seen[colors[v]] = true;
        for u in 0..n {
            if adj[v][u] {
                seen[colors[u]] = true;
            }
        }
        seen.iter().all(|&s| s)
    })
}

/// `Fall(G)` by trying every partition of the vertex set.
pub fn naive_fall_set(g: &Graph) -> BTreeSet<usize> {
    assert!(g.n() <= 9);
    let adj = matrix(g);
    restricted_growth_strings(g.n())
        .into_iter()
        .filter(|c| naive_is_fall(&adj, c))
        .map(|c| c.iter().max().unwrap() + 1)
        .collect()
}

/// Whether some map `V(g) → V(K_k)` is a locally surjective homomorphism.
pub fn exhaustive_hom_to_complete(g: &Graph, k: usize) -> bool {
    let adj = matrix(g);
    let n = g.n();
    let mut map = vec![0usize; n];
    loop {
        let edges_ok = (0..n).all(|u| (0..n).all(|v| !adj[u][v] || map[u] != map[v]));
        if edges_ok {
            // every v must see each other vertex of K_k among its neighbors' images
            let local = (0..n).all(|v| {
                (0..k).filter(|&c| c != map[v]).all(|c| (0..n).any(|u| adj[v][u] && map[u] == c))
            });
            if local {
                return true;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            map[i] += 1;
            if map[i] < k {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Size of a maximum matching by trying every edge subset.
pub fn brute_force_matching(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    fn rec(edges: &[(usize, usize)], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = rec(rest, used);
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    skip.max(1 + rec(rest, used | 1 << u | 1 << v))
                } else {
                    skip
                }
            }
        }
    }
    rec(&edges, 0)
}
