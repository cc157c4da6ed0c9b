//! Reductions from fall coloring to other problems: chromatic numbers of the
//! `Ĝ_t` family, the distance-2 power of regular graphs, and perfect matchings
//! for complements of bipartite graphs.

mod bipartite;
mod ghat;

use thiserror::Error;

use crate::coloring::{ColoringError, SolveError};
use crate::graph::Vertex;

pub use bipartite::{
    bipartition, fall_of_bipartite_complement, max_matching_bipartite, BipartiteComplement, Bipartition, Matching,
    OddCycle,
};
pub use ghat::{fall_via_ghat, ghat_family, regular_d2_criterion, GhatChoice, GhatFamily, GhatMember, GhatVerdict};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("t = {t} outside 1..={max}")]
    TOutOfRange { t: usize, max: usize },
    #[error("graph is not regular: degrees range over {min}..={max}")]
    NotRegular { min: usize, max: usize },
    #[error("graph is not bipartite: odd cycle {0:?}")]
    NotBipartite(Vec<Vertex>),
    #[error("bipartition does not match the graph: {0}")]
    InvalidBipartition(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}
