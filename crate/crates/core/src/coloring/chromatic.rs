//! Exact chromatic number: DSATUR branch and bound with a greedy clique bound.

use super::solver::{bit, mask_rows, Deadline, SolveError, SolverConfig};
use super::Coloring;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Size of a greedily grown clique; a lower bound on the clique number.
pub fn clique_lower_bound(g: &Graph) -> usize {
    if g.n() > super::ENGINE_MAX_VERTICES {
        return usize::from(g.has_edges()) + 1;
    }
    let rows = mask_rows(g);
    (0..g.n())
        .map(|v| {
            let mut cand = rows[v];
            let mut size = 1;
            while cand != 0 {
                let mut best = cand.trailing_zeros() as usize;
                let mut best_deg = 0;
                let mut rest = cand;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let d = (rows[u] & cand).count_ones();
                    if d > best_deg {
                        best = u;
                        best_deg = d;
                    }
                }
                size += 1;
                cand &= rows[best];
            }
            size
        })
        .max()
        .unwrap_or(1)
}

pub fn chromatic_number(g: &Graph, cfg: &SolverConfig) -> Result<usize, SolveError> {
    Ok(optimal_coloring(g, cfg)?.k())
}

/// A proper coloring with exactly `χ(g)` colors.
pub fn optimal_coloring(g: &Graph, cfg: &SolverConfig) -> Result<Coloring, SolveError> {
    cfg.admit(g)?;
    optimal_before(g, cfg.deadline()).ok_or_else(|| SolveError::Undecided(Vec::new()))
}

pub(crate) fn optimal_before(g: &Graph, deadline: Deadline) -> Option<Coloring> {
    let mut s = Dsatur::new(g, deadline);
    s.run();
    if s.timed_out {
        return None;
    }
    Some(Coloring::new(s.best, s.best_k).expect("optimal coloring is surjective"))
}

struct Dsatur {
    n: usize,
    rows: Vec<u128>,
    color: Vec<usize>,
    /// `count[v * n + c]`: colored neighbors of `v` with color `c`.
    count: Vec<u16>,
    sat: Vec<u128>,
    uncolored: u128,
    lower: usize,
    best: Vec<usize>,
    best_k: usize,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
}

impl Dsatur {
    fn new(g: &Graph, deadline: Deadline) -> Self {
        let n = g.n();
        Dsatur {
            n,
            rows: mask_rows(g),
            color: vec![NONE; n],
            count: vec![0; n * n],
            sat: vec![0; n],
            uncolored: if n == 128 { u128::MAX } else { (1u128 << n) - 1 },
            lower: clique_lower_bound(g),
            best: (0..n).collect(),
            best_k: n,
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn run(&mut self) {
        if self.lower < self.best_k {
            self.search(0, 0);
        }
    }

    fn pick(&self) -> usize {
        let mut best = NONE;
        let mut key = (0u32, 0u32);
        let mut rest = self.uncolored;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let k = (self.sat[v].count_ones(), (self.rows[v] & self.uncolored).count_ones());
            if best == NONE || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.uncolored &= !bit(v);
        let mut rest = self.rows[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let slot = &mut self.count[u * self.n + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] |= bit(c);
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        self.uncolored |= bit(v);
        let mut rest = self.rows[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let slot = &mut self.count[u * self.n + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] &= !bit(c);
            }
        }
    }

    /// Returns true once the clique bound is met or time runs out.
    fn search(&mut self, colored: usize, used: usize) -> bool {
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && self.deadline.passed() {
            self.timed_out = true;
            return true;
        }
        if used >= self.best_k {
            return false;
        }
        if colored == self.n {
            self.best.copy_from_slice(&self.color);
            self.best_k = used;
            return used <= self.lower;
        }
        let v = self.pick();
        let limit = (used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if self.sat[v] & bit(c) != 0 {
                continue;
            }
            self.assign(v, c);
            let stop = self.search(colored + 1, used.max(c + 1));
            self.unassign(v, c);
            if stop {
                return true;
            }
        }
        false
    }
}
