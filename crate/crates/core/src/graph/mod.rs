//! Immutable simple graphs over dense vertex ids `0..n`.

mod dot;
mod families;
pub mod graph6;
mod ops;

use std::borrow::Cow;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::bitset::BitSet;

pub use dot::to_dot;
pub use families::{build_named, Family};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use ops::{
    cat_product, complement, connected_components, disjoint_union, distance2_power,
    induced_subgraph, join, join_all, lex_product, mycielskian, InducedSubgraph,
};

/// Vertex index into a [`Graph`].
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("disjoint union of an empty list of graphs")]
    EmptyUnion,
    #[error("induced subgraph on an empty vertex set")]
    EmptyVertexSet,
}

/// A finite simple undirected graph.
///
/// Adjacency is stored as one bitset per vertex. Graphs never change after
/// construction; every derived graph is a new value. Optional vertex labels
/// only affect DOT export and are ignored by equality and hashing.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|a| !a.is_empty())
    }

    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter()
    }

    /// Open neighborhood of `v` as a bitset.
    pub fn neighborhood(&self, v: Vertex) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.adj[v].is_empty()
    }

    pub fn label(&self, v: Vertex) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(&l[v]),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Same graph with the given vertex labels. Panics if the count differs from `n`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_invariants(&self) {
        assert!(self.n >= 1);
        assert_eq!(self.adj.len(), self.n);
        for v in 0..self.n {
            assert!(!self.adj[v].contains(v), "self-loop at {v}");
            for u in self.adj[v].iter() {
                assert!(self.adj[u].contains(v), "asymmetric edge {v}-{u}");
            }
        }
    }
}

/// Mutable staging area for constructing a [`Graph`].
#[derive(Debug, Clone)]
pub(crate) struct GraphBuilder {
    adj: Vec<BitSet>,
}

impl GraphBuilder {
    pub(crate) fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(GraphBuilder { adj: vec![BitSet::new(n); n] })
    }

    pub(crate) fn n(&self) -> usize {
        self.adj.len()
    }

    /// Infallible edge insertion for constructors that generate valid pairs.
    #[inline]
    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub(crate) fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub(crate) fn build(self) -> Graph {
        let g = Graph { n: self.adj.len(), adj: self.adj, labels: None };
        if cfg!(debug_assertions) {
            g.check_invariants();
        }
        g
    }
}

/// Row-major bijection between factor coordinates `(x, y)` and product vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndexMap {
    pub left: usize,
    pub right: usize,
}

impl ProductIndexMap {
    pub fn new(left: usize, right: usize) -> Self {
        ProductIndexMap { left, right }
    }

    pub fn for_factors(g: &Graph, h: &Graph) -> Self {
        Self::new(g.n(), h.n())
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn pair(&self, x: Vertex, y: Vertex) -> Vertex {
        debug_assert!(x < self.left && y < self.right);
        x * self.right + y
    }

    #[inline]
    pub fn unpair(&self, v: Vertex) -> (Vertex, Vertex) {
        debug_assert!(v < self.len());
        (v / self.right, v % self.right)
    }
}
