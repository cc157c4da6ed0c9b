//! Colorings, their verification, and the exact solvers.

pub(crate) mod chromatic;
mod fall;
mod solver;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};

pub use chromatic::{chromatic_number, clique_lower_bound, optimal_coloring};
pub use fall::{chi_f, fall_set, fall_set_in, find_fall_coloring, psi_f, FallReport, FallSearch};
pub use solver::{SolveError, SolverConfig, DEFAULT_CAPACITY, ENGINE_MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has color {color}, outside 0..{k}")]
    ColorOutOfRange { vertex: Vertex, color: usize, k: usize },
    #[error("color {0} is never used")]
    UnusedColor(usize),
    #[error("a coloring needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("cannot parse coloring: {0}")]
    Parse(String),
}

/// Surjective assignment of colors `0..k` to vertices `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Coloring, ColoringError> {
        if colors.is_empty() {
            return Err(ColoringError::Empty);
        }
        let mut used = vec![false; k];
        for (vertex, &color) in colors.iter().enumerate() {
            if color >= k {
                return Err(ColoringError::ColorOutOfRange { vertex, color, k });
            }
            used[color] = true;
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(ColoringError::UnusedColor(c));
        }
        Ok(Coloring { colors, k })
    }

    /// Takes `k` to be one more than the largest color.
    pub fn from_colors(colors: Vec<usize>) -> Result<Coloring, ColoringError> {
        let k = colors.iter().max().map_or(0, |m| m + 1);
        Coloring::new(colors, k)
    }

    /// Renames colors in order of first appearance, so any labels are accepted.
    pub fn canonical<T: Eq + std::hash::Hash + Copy>(labels: &[T]) -> Result<Coloring, ColoringError> {
        let mut names = std::collections::HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = names.len();
                *names.entry(*l).or_insert(next)
            })
            .collect();
        Coloring::new(colors, names.len())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    /// Color classes, indexed by color, each sorted.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Whitespace-separated color ids; `one_based` adds 1 to each.
    pub fn to_line(&self, one_based: bool) -> String {
        let shift = usize::from(one_based);
        self.colors
            .iter()
            .map(|c| (c + shift).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a line of whitespace-separated 0-based color ids.
    pub fn parse_line(line: &str) -> Result<Coloring, ColoringError> {
        let colors = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| ColoringError::Parse(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Coloring::from_colors(colors)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.colors.serialize(s)
    }
}

fn check_len(g: &Graph, f: &Coloring) -> Result<(), ColoringError> {
    if f.len() != g.n() {
        return Err(ColoringError::LengthMismatch { expected: g.n(), found: f.len() });
    }
    Ok(())
}

fn colorful(g: &Graph, f: &Coloring, v: Vertex) -> bool {
    let mut seen = BitSet::new(f.k());
    seen.insert(f.color(v));
    for u in g.neighbors(v) {
        seen.insert(f.color(u));
    }
    seen.count() == f.k()
}

/// No edge is monochromatic.
pub fn is_proper(g: &Graph, f: &Coloring) -> Result<bool, ColoringError> {
    check_len(g, f)?;
    Ok(g.edges().all(|(u, v)| f.color(u) != f.color(v)))
}

/// Every color appears on the closed neighborhood of `v`. Properness is not required.
pub fn is_colorful(g: &Graph, f: &Coloring, v: Vertex) -> Result<bool, ColoringError> {
    check_len(g, f)?;
    if v >= g.n() {
        return Err(ColoringError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(colorful(g, f, v))
}

/// Proper, and every vertex colorful. Every color is used by construction of [`Coloring`].
pub fn is_fall(g: &Graph, f: &Coloring) -> Result<bool, ColoringError> {
    Ok(is_proper(g, f)? && (0..g.n()).all(|v| colorful(g, f, v)))
}

/// Detailed verification result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub proper: bool,
    pub fall: bool,
    pub k: usize,
    /// Vertices that do not see every color on their closed neighborhood.
    pub offending_vertices: Vec<Vertex>,
    pub monochromatic_edges: Vec<(Vertex, Vertex)>,
}

pub fn verify(g: &Graph, f: &Coloring) -> Result<Verdict, ColoringError> {
    check_len(g, f)?;
    let monochromatic_edges: Vec<_> = g.edges().filter(|&(u, v)| f.color(u) == f.color(v)).collect();
    let offending_vertices: Vec<_> = (0..g.n()).filter(|&v| !colorful(g, f, v)).collect();
    let proper = monochromatic_edges.is_empty();
    Ok(Verdict {
        proper,
        fall: proper && offending_vertices.is_empty(),
        k: f.k(),
        offending_vertices,
        monochromatic_edges,
    })
}
