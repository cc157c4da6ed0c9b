use std::collections::VecDeque;

use serde::Serialize;

use super::ReductionError;
use crate::coloring::{Coloring, FallReport, FallSearch};
use crate::graph::{Graph, Vertex};

/// Sides `A` and `B` of a bipartite graph, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
}

impl Bipartition {
    fn sides(&self, n: usize) -> Result<Vec<bool>, ReductionError> {
        let mut in_b = vec![None; n];
        for (side, vs) in [(false, &self.a), (true, &self.b)] {
            for &v in vs {
                match in_b.get_mut(v) {
                    Some(slot @ None) => *slot = Some(side),
                    Some(Some(_)) => return Err(ReductionError::InvalidBipartition(format!("vertex {v} listed twice"))),
                    None => return Err(ReductionError::InvalidBipartition(format!("vertex {v} out of range"))),
                }
            }
        }
        in_b.into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| ReductionError::InvalidBipartition(format!("vertex {v} missing"))))
            .collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ReductionError> {
        let in_b = self.sides(g.n())?;
        match g.edges().find(|&(u, v)| in_b[u] == in_b[v]) {
            Some((u, v)) => Err(ReductionError::InvalidBipartition(format!("edge {u}-{v} inside one side"))),
            None => Ok(()),
        }
    }
}

/// An odd closed walk `c[0] ~ c[1] ~ ... ~ c[last] ~ c[0]`, all vertices distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<Vertex>);

/// Breadth-first 2-coloring; each component's smallest vertex goes to `A`.
pub fn bipartition(g: &Graph) -> Result<Bipartition, OddCycle> {
    let n = g.n();
    let mut side = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if side[root] != usize::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(OddCycle(odd_cycle(&parent, u, w)));
                }
            }
        }
    }
    let (a, b) = (0..n).partition(|&v| side[v] == 0);
    Ok(Bipartition { a, b })
}

/// Tree paths from `u` and `w` up to their meeting point, joined by the edge `u ~ w`.
fn odd_cycle(parent: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let up = |mut v: Vertex| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let (pu, pw) = (up(u), up(w));
    let mut common = 0;
    while common < pu.len().min(pw.len()) && pu[pu.len() - 1 - common] == pw[pw.len() - 1 - common] {
        common += 1;
    }
    let mut cycle: Vec<Vertex> = pu[..=pu.len() - common].to_vec();
    cycle.extend(pw[..pw.len() - common].iter().rev());
    cycle
}

/// Vertex-disjoint edges, each stored as `(min, max)`, sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Matching {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.pairs.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// Maximum matching by augmenting paths from each `A` vertex in order.
pub fn max_matching_bipartite(g: &Graph, part: &Bipartition) -> Result<Matching, ReductionError> {
    part.validate(g)?;
    let n = g.n();
    let mut mate = vec![usize::MAX; n];
    for &a in &part.a {
        let mut seen = vec![false; n];
        augment(g, a, &mut mate, &mut seen);
    }
    for &a in &part.a {
        if mate[a] == usize::MAX {
            let mut seen = vec![false; n];
            let mut probe = mate.clone();
            assert!(!augment(g, a, &mut probe, &mut seen), "augmenting path left from {a}");
        }
    }
    let mut pairs: Vec<_> = part
        .a
        .iter()
        .filter(|&&a| mate[a] != usize::MAX)
        .map(|&a| (a.min(mate[a]), a.max(mate[a])))
        .collect();
    pairs.sort_unstable();
    Ok(Matching { pairs })
}

fn augment(g: &Graph, a: Vertex, mate: &mut [usize], seen: &mut [bool]) -> bool {
    for b in g.neighbors(a) {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        if mate[b] == usize::MAX || augment(g, mate[b], mate, seen) {
            mate[a] = b;
            mate[b] = a;
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Serialize)]
pub struct BipartiteComplement {
    #[serde(flatten)]
    pub report: FallReport,
    pub matching: Matching,
}

/// `Fall` of the complement of bipartite `g`, read off a maximum matching.
pub fn fall_of_bipartite_complement(g: &Graph) -> Result<BipartiteComplement, ReductionError> {
    let part = bipartition(g).map_err(|c| ReductionError::NotBipartite(c.0))?;
    let matching = max_matching_bipartite(g, &part)?;
    let non_isolated = (0..g.n()).filter(|&v| !g.is_isolated(v)).count();
    let report = if 2 * matching.len() == non_isolated {
        let k = g.n() - matching.len();
        let mut class: Vec<Vertex> = (0..g.n()).collect();
        for &(u, v) in &matching.pairs {
            class[v] = u;
        }
        let witness = Coloring::canonical(&class)?;
        debug_assert_eq!(witness.k(), k);
        debug_assert!(crate::coloring::is_fall(&crate::graph::complement(g), &witness).unwrap_or(false));
        FallReport::from_results([(k, FallSearch::Found(witness))])
    } else {
        FallReport::from_results([])
    };
    Ok(BipartiteComplement { report, matching })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_fall;
    use crate::graph::complement;

    #[test]
    fn bipartition_examples() {
        let c6 = bipartition(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(c6, Bipartition { a: vec![0, 2, 4], b: vec![1, 3, 5] });
        let e3 = bipartition(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(e3, Bipartition { a: vec![0, 1, 2], b: vec![] });
        let OddCycle(c) = bipartition(&Graph::cycle(5).unwrap()).unwrap_err();
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn odd_cycle_is_a_cycle() {
        // triangle hanging off a path: 0-1-2-3, 3-4, 4-2
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]).unwrap();
        let OddCycle(c) = bipartition(&g).unwrap_err();
        let mut sorted = c.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![2, 3, 4]);
        assert!((0..c.len()).all(|i| g.adjacent(c[i], c[(i + 1) % c.len()])));
    }

    #[test]
    fn matching_examples() {
        for (g, size) in [(Graph::path(4), 2), (Graph::path(3), 1), (Graph::cycle(6), 3)] {
            let g = g.unwrap();
            let m = max_matching_bipartite(&g, &bipartition(&g).unwrap()).unwrap();
            assert_eq!(m.len(), size);
            assert!(m.pairs.iter().all(|&(u, v)| g.adjacent(u, v)));
        }
        let p4 = Graph::path(4).unwrap();
        let m = max_matching_bipartite(&p4, &bipartition(&p4).unwrap()).unwrap();
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn invalid_bipartition_rejected() {
        let p3 = Graph::path(3).unwrap();
        let bad = Bipartition { a: vec![0, 1], b: vec![2] };
        assert!(matches!(max_matching_bipartite(&p3, &bad), Err(ReductionError::InvalidBipartition(_))));
        let missing = Bipartition { a: vec![0, 2], b: vec![] };
        assert!(missing.validate(&p3).is_err());
    }

    #[test]
    fn complement_examples() {
        let p4 = Graph::path(4).unwrap();
        let r = fall_of_bipartite_complement(&p4).unwrap();
        assert_eq!(r.report.fall_set.iter().copied().collect::<Vec<_>>(), vec![2]);
        assert!(is_fall(&complement(&p4), &r.report.witnesses[&2]).unwrap());

        let r = fall_of_bipartite_complement(&Graph::path(3).unwrap()).unwrap();
        assert!(r.report.fall_set.is_empty());
        assert_eq!(r.matching.len(), 1);

        let r = fall_of_bipartite_complement(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(r.report.fall_set.iter().copied().collect::<Vec<_>>(), vec![1]);

        // isolated vertex 4 becomes its own class
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        let r = fall_of_bipartite_complement(&g).unwrap();
        assert_eq!(r.report.witnesses[&3].colors(), &[0, 0, 1, 1, 2]);

        assert!(matches!(
            fall_of_bipartite_complement(&Graph::cycle(5).unwrap()),
            Err(ReductionError::NotBipartite(c)) if c.len() == 5
        ));
    }

    #[test]
    fn json_shape() {
        let r = fall_of_bipartite_complement(&Graph::path(4).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["fall_set"], serde_json::json!([2]));
        assert_eq!(v["matching"], serde_json::json!([[0, 1], [2, 3]]));
    }
}
