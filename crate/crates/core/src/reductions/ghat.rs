use std::collections::HashSet;

use rayon::prelude::*;

use super::ReductionError;
use crate::coloring::chromatic::optimal_before;
use crate::coloring::{Coloring, SolverConfig};
use crate::graph::{distance2_power, Graph, Vertex};

/// For each vertex, the `t − 1` neighbors that get joined into a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhatChoice {
    pub sets: Vec<Vec<Vertex>>,
}

impl GhatChoice {
    /// `g` plus a clique on every chosen set.
    pub fn apply(&self, g: &Graph) -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
        for set in &self.sets {
            for (i, &u) in set.iter().enumerate() {
                edges.extend(set[i + 1..].iter().map(|&w| (u, w)));
            }
        }
        let h = Graph::from_edges(g.n(), edges).expect("chosen vertices are in range");
        if g.has_labels() {
            h.with_labels((0..g.n()).map(|v| g.label(v).into_owned()).collect())
        } else {
            h
        }
    }
}

#[derive(Debug, Clone)]
pub struct GhatMember {
    pub choice: GhatChoice,
    pub graph: Graph,
}

/// Distinct members of `Ĝ_t`, in lexicographic order of the choice tuple.
pub struct GhatFamily<'g> {
    g: &'g Graph,
    neighbors: Vec<Vec<Vertex>>,
    /// Per vertex, indices into `neighbors[v]` of the current combination.
    state: Vec<Vec<usize>>,
    started: bool,
    done: bool,
    tuples: u64,
    seen: HashSet<Graph>,
}

pub fn ghat_family(g: &Graph, t: usize) -> Result<GhatFamily<'_>, ReductionError> {
    let max = g.min_degree() + 1;
    if t == 0 || t > max {
        return Err(ReductionError::TOutOfRange { t, max });
    }
    Ok(GhatFamily {
        g,
        neighbors: (0..g.n()).map(|v| g.neighbors(v).collect()).collect(),
        state: vec![(0..t - 1).collect(); g.n()],
        started: false,
        done: false,
        tuples: 0,
        seen: HashSet::new(),
    })
}

impl GhatFamily<'_> {
    /// Number of choice tuples, or `None` past `u64::MAX`.
    pub fn choice_count(&self) -> Option<u64> {
        let r = self.state.first().map_or(0, Vec::len) as u64;
        self.neighbors.iter().try_fold(1u64, |acc, nb| acc.checked_mul(binomial(nb.len() as u64, r)?))
    }

    /// Choice tuples visited so far, duplicates included.
    pub fn tuples_visited(&self) -> u64 {
        self.tuples
    }

    fn advance(&mut self) -> bool {
        for v in (0..self.state.len()).rev() {
            if next_combination(&mut self.state[v], self.neighbors[v].len()) {
                return true;
            }
            let r = self.state[v].len();
            self.state[v] = (0..r).collect();
        }
        false
    }

    fn current(&self) -> GhatChoice {
        let sets = self
            .state
            .iter()
            .zip(&self.neighbors)
            .map(|(idx, nb)| idx.iter().map(|&i| nb[i]).collect())
            .collect();
        GhatChoice { sets }
    }
}

impl GhatFamily<'_> {
    /// Next new member, visiting tuples only while fewer than `limit` have been seen.
    pub fn next_within(&mut self, limit: u64) -> Option<GhatMember> {
        loop {
            if self.done || self.tuples >= limit {
                return None;
            }
            if self.started && !self.advance() {
                self.done = true;
                return None;
            }
            self.started = true;
            self.tuples += 1;
            let choice = self.current();
            let graph = choice.apply(self.g);
            if self.seen.insert(graph.clone()) {
                return Some(GhatMember { choice, graph });
            }
        }
    }
}

impl Iterator for GhatFamily<'_> {
    type Item = GhatMember;

    fn next(&mut self) -> Option<GhatMember> {
        self.next_within(u64::MAX)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    for i in (0..r).rev() {
        if idx[i] < n - r + i {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial(n: u64, r: u64) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    (0..r).try_fold(1u64, |acc, i| Some(acc.checked_mul(n - i)? / (i + 1)))
}

#[derive(Debug, Clone)]
pub enum GhatVerdict {
    /// A member with chromatic number `t`, and a `t`-coloring of it.
    Member { member: GhatMember, coloring: Coloring },
    NotMember { members: usize },
    /// The tuple budget or the time limit ran out first.
    Undecided { tuples: u64 },
}

impl GhatVerdict {
    pub fn decided(&self) -> Option<bool> {
        match self {
            GhatVerdict::Member { .. } => Some(true),
            GhatVerdict::NotMember { .. } => Some(false),
            GhatVerdict::Undecided { .. } => None,
        }
    }
}

const BATCH: usize = 64;

/// Decides `t ∈ Fall(g)` by searching `Ĝ_t` for a member with chromatic
/// number `t`. `budget` caps the number of choice tuples visited.
pub fn fall_via_ghat(
    g: &Graph,
    t: usize,
    budget: Option<u64>,
    cfg: &SolverConfig,
) -> Result<GhatVerdict, ReductionError> {
    cfg.admit(g)?;
    let deadline = cfg.deadline();
    let mut family = ghat_family(g, t)?;
    let mut members = 0;
    loop {
        let mut batch = Vec::with_capacity(BATCH);
        while batch.len() < BATCH {
            match family.next_within(budget.unwrap_or(u64::MAX)) {
                Some(m) => batch.push(m),
                None => break,
            }
        }
        if batch.is_empty() {
            let exhausted = family.done || Some(family.tuples_visited()) == family.choice_count();
            return Ok(if exhausted {
                GhatVerdict::NotMember { members }
            } else {
                GhatVerdict::Undecided { tuples: family.tuples_visited() }
            });
        }
        members += batch.len();
        let check = |m: &GhatMember| match optimal_before(&m.graph, deadline) {
            Some(c) if c.k() == t => Some(Ok(c)),
            Some(_) => None,
            None => Some(Err(())),
        };
        let hit = if cfg.parallel {
            batch.par_iter().find_map_first(|m| check(m).map(|r| (m, r)))
        } else {
            batch.iter().find_map(|m| check(m).map(|r| (m, r)))
        };
        match hit {
            Some((m, Ok(coloring))) => return Ok(GhatVerdict::Member { member: m.clone(), coloring }),
            Some((_, Err(()))) => return Ok(GhatVerdict::Undecided { tuples: family.tuples_visited() }),
            None => {}
        }
    }
}

/// For `r`-regular `g`: whether `χ(G^(2)) = r + 1`.
pub fn regular_d2_criterion(g: &Graph, cfg: &SolverConfig) -> Result<bool, ReductionError> {
    let r = g
        .regular_degree()
        .ok_or(ReductionError::NotRegular { min: g.min_degree(), max: g.max_degree() })?;
    let d2 = distance2_power(g);
    Ok(crate::coloring::chromatic_number(&d2, cfg)? == r + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use crate::graph::complement;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn t_equal_one_gives_g() {
        let g = Graph::cycle(5).unwrap();
        let members: Vec<_> = ghat_family(&g, 1).unwrap().collect();
        assert_eq!(members.len(), 1);
        assert_eq!(members[0].graph, g);
        assert!(members[0].choice.sets.iter().all(Vec::is_empty));
    }

    #[test]
    fn c4_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let mut fam = ghat_family(&c4, 2).unwrap();
        assert_eq!(fam.choice_count(), Some(16));
        let members: Vec<_> = fam.by_ref().collect();
        assert_eq!(fam.tuples_visited(), 16);
        assert_eq!(members.len(), 1);
        assert_eq!(members[0].graph, c4);
        assert_eq!(members[0].choice.sets, vec![vec![1], vec![0], vec![1], vec![0]]);

        let members: Vec<_> = ghat_family(&c4, 3).unwrap().collect();
        assert_eq!(members.len(), 1);
        assert_eq!(members[0].graph, Graph::complete(4).unwrap());
    }

    #[test]
    fn lexicographic_order() {
        let p3 = Graph::path(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        // K3 with t = 2: vertex 2 varies fastest.
        let mut fam = ghat_family(&k3, 2).unwrap();
        let first = fam.next().unwrap();
        assert_eq!(first.choice.sets, vec![vec![1], vec![0], vec![0]]);
        assert_eq!(fam.count(), 0);
        assert!(ghat_family(&p3, 3).is_err());
        assert!(ghat_family(&p3, 0).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(3, 0), Some(1));
        assert_eq!(binomial(2, 3), Some(0));
        assert_eq!(ghat_family(&Graph::complete(6).unwrap(), 3).unwrap().choice_count(), Some(10u64.pow(6)));
    }

    #[test]
    fn fall_via_ghat_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(fall_via_ghat(&c4, 3, None, &cfg()).unwrap().decided(), Some(false));
        match fall_via_ghat(&Graph::cycle(6).unwrap(), 3, None, &cfg()).unwrap() {
            GhatVerdict::Member { member, coloring } => {
                assert_eq!(coloring.k(), 3);
                assert!(is_proper(&member.graph, &coloring).unwrap());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(fall_via_ghat(&Graph::cycle(5).unwrap(), 3, None, &cfg()).unwrap().decided(), Some(false));
        assert_eq!(fall_via_ghat(&Graph::cycle(5).unwrap(), 2, None, &cfg()).unwrap().decided(), Some(false));
    }

    #[test]
    fn budget_exhaustion_is_undecided() {
        let g = complement(&Graph::cycle(7).unwrap());
        match fall_via_ghat(&g, 4, Some(3), &cfg()).unwrap() {
            GhatVerdict::Undecided { tuples } => assert_eq!(tuples, 3),
            GhatVerdict::Member { .. } => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            fall_via_ghat(&g, 4, Some(0), &cfg()).unwrap(),
            GhatVerdict::Undecided { tuples: 0 }
        ));
    }

    #[test]
    fn regular_criterion_examples() {
        assert!(!regular_d2_criterion(&Graph::cycle(5).unwrap(), &cfg()).unwrap());
        assert!(regular_d2_criterion(&Graph::cycle(6).unwrap(), &cfg()).unwrap());
        assert!(regular_d2_criterion(&Graph::complete(4).unwrap(), &cfg()).unwrap());
        assert_eq!(
            regular_d2_criterion(&Graph::path(4).unwrap(), &cfg()),
            Err(ReductionError::NotRegular { min: 1, max: 2 })
        );
    }
}
