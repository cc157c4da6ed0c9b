//! Fall colorings: backtracking search for a single `k`, and the full set
//! `Fall(G)` assembled over connected components.
//!
//! The search visits vertices by descending degree (ties by id), lets the
//! first vertex of each new class take the smallest unused color, and tries
//! colors in increasing order, so the first solution found is the
//! lexicographically smallest canonical coloring in visit order.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::chromatic::{clique_lower_bound, optimal_before};
use super::solver::{bit, low_bits, Deadline, SolveError, SolverConfig};
use super::Coloring;
use crate::graph::{connected_components, induced_subgraph, Graph, InducedSubgraph};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FallSearch {
    Found(Coloring),
    Absent,
    /// The time budget ran out; says nothing about existence.
    Undecided,
}

impl FallSearch {
    pub fn found(self) -> Option<Coloring> {
        match self {
            FallSearch::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// `Fall(G)` with one witness per member.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FallReport {
    pub fall_set: BTreeSet<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi_f: Option<usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<usize, Coloring>,
    /// Values of `k` whose search hit the time limit.
    #[serde(skip_serializing_if = "BTreeSet::is_empty")]
    pub undecided: BTreeSet<usize>,
}

impl FallReport {
    pub fn from_results(results: impl IntoIterator<Item = (usize, FallSearch)>) -> FallReport {
        let mut r = FallReport::default();
        for (k, res) in results {
            match res {
                FallSearch::Found(f) => {
                    r.fall_set.insert(k);
                    r.witnesses.insert(k, f);
                }
                FallSearch::Absent => {}
                FallSearch::Undecided => {
                    r.undecided.insert(k);
                }
            }
        }
        r.chi_f = r.fall_set.first().copied();
        r.psi_f = r.fall_set.last().copied();
        r
    }

    pub fn is_complete(&self) -> bool {
        self.undecided.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.fall_set.contains(&k)
    }
}

fn split(g: &Graph, decompose: bool) -> Vec<InducedSubgraph> {
    let whole = || vec![InducedSubgraph { graph: g.clone(), original: (0..g.n()).collect() }];
    if !decompose {
        return whole();
    }
    let comps = connected_components(g);
    if comps.len() == 1 {
        return whole();
    }
    comps
        .iter()
        .map(|c| induced_subgraph(g, c).expect("components are nonempty"))
        .collect()
}

fn search_parts(parts: &[InducedSubgraph], n: usize, k: usize, deadline: Deadline) -> FallSearch {
    let mut colors = vec![0; n];
    let mut undecided = false;
    for p in parts {
        match search_whole(&p.graph, k, deadline) {
            FallSearch::Found(f) => {
                for (i, &v) in p.original.iter().enumerate() {
                    colors[v] = f.color(i);
                }
            }
            FallSearch::Absent => return FallSearch::Absent,
            FallSearch::Undecided => undecided = true,
        }
    }
    if undecided {
        FallSearch::Undecided
    } else {
        FallSearch::Found(Coloring::new(colors, k).expect("every part uses all k colors"))
    }
}

fn search_whole(g: &Graph, k: usize, deadline: Deadline) -> FallSearch {
    // each vertex needs k - 1 distinctly colored neighbors
    if k > g.min_degree() + 1 || k < clique_lower_bound(g) {
        return FallSearch::Absent;
    }
    FallSearcher::new(g, k, deadline).run()
}

/// A fall `k`-coloring of `g`, if one exists.
pub fn find_fall_coloring(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<FallSearch, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroColors);
    }
    cfg.admit(g)?;
    let parts = split(g, cfg.decompose);
    Ok(search_parts(&parts, g.n(), k, cfg.deadline()))
}

/// The full set `Fall(g)`.
pub fn fall_set(g: &Graph, cfg: &SolverConfig) -> Result<FallReport, SolveError> {
    fall_set_in(g, 1..=usize::MAX, cfg)
}

/// `Fall(g)` restricted to `ks`. Only `k` in `[χ, δ + 1]` are searched;
/// with decomposition the range is intersected over components.
pub fn fall_set_in(g: &Graph, ks: RangeInclusive<usize>, cfg: &SolverConfig) -> Result<FallReport, SolveError> {
    cfg.admit(g)?;
    let deadline = cfg.deadline();
    let parts = split(g, cfg.decompose);
    let lo = parts
        .iter()
        .map(|p| optimal_before(&p.graph, deadline).map_or_else(|| clique_lower_bound(&p.graph), |f| f.k()))
        .max()
        .unwrap_or(1);
    let hi = parts.iter().map(|p| p.graph.min_degree() + 1).min().unwrap_or(1);
    let ks: Vec<usize> = (lo.max(*ks.start()).max(1)..=hi.min(*ks.end())).collect();
    let run = |&k: &usize| (k, search_parts(&parts, g.n(), k, deadline));
    let results: Vec<_> = if cfg.parallel {
        ks.par_iter().map(run).collect()
    } else {
        ks.iter().map(run).collect()
    };
    Ok(FallReport::from_results(results))
}

/// Fall chromatic number, `min Fall(g)`.
pub fn chi_f(g: &Graph, cfg: &SolverConfig) -> Result<usize, SolveError> {
    let r = fall_set(g, cfg)?;
    let blocked = match r.chi_f {
        Some(m) => r.undecided.iter().any(|&u| u < m),
        None => !r.undecided.is_empty(),
    };
    if blocked {
        return Err(SolveError::Undecided(r.undecided.into_iter().collect()));
    }
    r.chi_f.ok_or(SolveError::NoFallColoring)
}

/// Fall achromatic number, `max Fall(g)`.
pub fn psi_f(g: &Graph, cfg: &SolverConfig) -> Result<usize, SolveError> {
    let r = fall_set(g, cfg)?;
    let blocked = match r.psi_f {
        Some(m) => r.undecided.iter().any(|&u| u > m),
        None => !r.undecided.is_empty(),
    };
    if blocked {
        return Err(SolveError::Undecided(r.undecided.into_iter().collect()));
    }
    r.psi_f.ok_or(SolveError::NoFallColoring)
}

struct FallSearcher {
    n: usize,
    k: usize,
    full: u128,
    order: Vec<usize>,
    nbrs: Vec<Vec<usize>>,
    closed: Vec<Vec<usize>>,
    /// Vertices within distance 2, including the vertex itself.
    ball2: Vec<Vec<usize>>,
    color: Vec<usize>,
    /// `count[u * k + c]`: colored vertices of color `c` in `N[u]`.
    count: Vec<u16>,
    /// Colors present on the colored part of `N[u]`.
    seen: Vec<u128>,
    /// Uncolored vertices in `N[u]`.
    free: Vec<u32>,
    used: usize,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
}

impl FallSearcher {
    fn new(g: &Graph, k: usize, deadline: Deadline) -> Self {
        let n = g.n();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        let closed: Vec<Vec<usize>> = (0..n)
            .map(|v| std::iter::once(v).chain(nbrs[v].iter().copied()).collect())
            .collect();
        let ball2 = (0..n)
            .map(|v| {
                let mut b: Vec<usize> = closed[v]
                    .iter()
                    .flat_map(|&u| closed[u].iter().copied())
                    .collect();
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(nbrs[v].len()), v));
        let free = closed.iter().map(|c| c.len() as u32).collect();
        FallSearcher {
            n,
            k,
            full: low_bits(k),
            order,
            nbrs,
            closed,
            ball2,
            color: vec![NONE; n],
            count: vec![0; n * k],
            seen: vec![0; n],
            free,
            used: 0,
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn run(mut self) -> FallSearch {
        if self.dfs(0) {
            let f = Coloring::new(self.color, self.k).expect("complete search state is surjective");
            FallSearch::Found(f)
        } else if self.timed_out {
            FallSearch::Undecided
        } else {
            FallSearch::Absent
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for i in 0..self.closed[v].len() {
            let u = self.closed[v][i];
            let slot = &mut self.count[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.seen[u] |= bit(c);
            }
            self.free[u] -= 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        for i in 0..self.closed[v].len() {
            let u = self.closed[v][i];
            let slot = &mut self.count[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.seen[u] &= !bit(c);
            }
            self.free[u] += 1;
        }
    }

    /// Every vertex near `v` can still become colorful, and every
    /// uncolored one still has a color available.
    fn feasible_around(&self, v: usize) -> bool {
        for &u in &self.ball2[v] {
            let missing = self.full & !self.seen[u];
            let u_free = self.color[u] == NONE;
            if missing == 0 {
                if u_free {
                    return false;
                }
                continue;
            }
            if missing.count_ones() > self.free[u] {
                return false;
            }
            let mut cover = 0u128;
            for &w in &self.nbrs[u] {
                if self.color[w] == NONE {
                    cover |= self.full & !self.seen[w];
                }
            }
            let uncovered = (missing & !cover).count_ones();
            if uncovered > u32::from(u_free) {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize) -> bool {
        if depth == self.n {
            return true;
        }
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && self.deadline.passed() {
            self.timed_out = true;
            return false;
        }
        let v = self.order[depth];
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.seen[v] & bit(c) != 0 {
                continue;
            }
            let prev_used = self.used;
            self.used = prev_used.max(c + 1);
            self.assign(v, c);
            let remaining = self.n - depth - 1;
            if remaining + self.used >= self.k && self.feasible_around(v) && self.dfs(depth + 1) {
                return true;
            }
            self.unassign(v, c);
            self.used = prev_used;
            if self.timed_out {
                return false;
            }
        }
        false
    }
}
