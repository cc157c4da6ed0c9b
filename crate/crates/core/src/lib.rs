pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod hom;
pub mod hunt;
pub mod reductions;

pub use coloring::{Coloring, FallReport, SolverConfig};
pub use graph::{Graph, GraphError, Vertex};
