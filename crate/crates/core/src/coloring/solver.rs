use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;

/// Largest graph the exact solvers accept; color and vertex masks are `u128`.
pub const ENGINE_MAX_VERTICES: usize = 128;
pub const DEFAULT_CAPACITY: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has {n} vertices, above the solver capacity of {capacity}")]
    Capacity { n: usize, capacity: usize },
    #[error("requested capacity {0} exceeds the engine maximum of {ENGINE_MAX_VERTICES}")]
    CapacityTooLarge(usize),
    #[error("k must be at least 1")]
    ZeroColors,
    #[error("the graph has no fall coloring")]
    NoFallColoring,
    #[error("timed out before deciding k in {0:?}")]
    Undecided(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub capacity: usize,
    /// Wall-clock budget for one top-level call.
    pub timeout: Option<Duration>,
    /// Search connected components separately and intersect.
    pub decompose: bool,
    /// Evaluate different `k` on the rayon pool.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { capacity: DEFAULT_CAPACITY, timeout: None, decompose: true, parallel: true }
    }
}

impl SolverConfig {
    pub fn with_timeout(mut self, t: Duration) -> Self {
        self.timeout = Some(t);
        self
    }

    pub fn with_capacity(mut self, capacity: usize) -> Self {
        self.capacity = capacity;
        self
    }

    pub fn without_decomposition(mut self) -> Self {
        self.decompose = false;
        self
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub(crate) fn admit(&self, g: &Graph) -> Result<(), SolveError> {
        if self.capacity > ENGINE_MAX_VERTICES {
            return Err(SolveError::CapacityTooLarge(self.capacity));
        }
        if g.n() > self.capacity {
            return Err(SolveError::Capacity { n: g.n(), capacity: self.capacity });
        }
        Ok(())
    }

    pub(crate) fn deadline(&self) -> Deadline {
        Deadline(self.timeout.map(|t| Instant::now() + t))
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Deadline(Option<Instant>);

impl Deadline {
    pub(crate) fn passed(&self) -> bool {
        self.0.is_some_and(|d| Instant::now() >= d)
    }
}

/// Adjacency as `u128` rows; requires `n <= ENGINE_MAX_VERTICES`.
pub(crate) fn mask_rows(g: &Graph) -> Vec<u128> {
    assert!(g.n() <= ENGINE_MAX_VERTICES);
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u128, |m, u| m | (1u128 << u)))
        .collect()
}

#[inline]
pub(crate) fn bit(i: usize) -> u128 {
    1u128 << i
}

#[inline]
pub(crate) fn low_bits(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}
