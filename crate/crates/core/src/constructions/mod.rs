//! Explicit fall colorings of product graphs, built by formula and
//! self-verified before they are returned.

mod categorical;
mod fixtures;
mod lexicographic;

use thiserror::Error;

use crate::coloring::{is_fall, Coloring, ColoringError};
use crate::graph::{to_graph6, Graph};

pub use categorical::{
    beyond_max, c5xc5_coloring, case1_coloring, case1_coloring_with, case2_coloring, case2_coloring_with, case3_coloring,
    case4_coloring, case4_coloring_with,
    case5_coloring, cat_project, complete_triple, derangement, BeyondMax, Derangement, ProductCase,
};
pub use fixtures::{known_fixtures, Fixture};
pub use lexicographic::{join_compose, layer_color_sets, lex_compose, ColoringFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("{0} is not a fall coloring of its graph")]
    NotFall(String),
    #[error("coloring family does not match: {0}")]
    FamilyMismatch(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

pub(crate) fn require_fall(g: &Graph, f: &Coloring, what: impl Into<String>) -> Result<(), ConstructionError> {
    if is_fall(g, f)? {
        Ok(())
    } else {
        Err(ConstructionError::NotFall(what.into()))
    }
}

/// Aborts with the graph and coloring if a builder produced a non-fall coloring.
pub(crate) fn certify(what: &str, g: Graph, f: Coloring) -> (Graph, Coloring) {
    let ok = f.len() == g.n() && is_fall(&g, &f).unwrap_or(false);
    if !ok {
        panic!(
            "{what}: construction failed self-verification\ngraph6: {}\ncoloring: {}",
            to_graph6(&g),
            f.to_line(false)
        );
    }
    (g, f)
}
