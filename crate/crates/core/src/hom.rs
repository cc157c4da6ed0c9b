//! Type-II (locally surjective) homomorphisms.

use std::sync::Arc;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::coloring::{is_fall, Coloring, ColoringError};
use crate::graph::{cat_product, lex_product, Graph, ProductIndexMap, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("map has {found} entries, source graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} maps to {image}, target has only {n} vertices")]
    ImageOutOfRange { vertex: Vertex, image: Vertex, n: usize },
    #[error("target of the first map is not the source of the second")]
    GraphMismatch,
    #[error("{0} is not a type-II homomorphism")]
    NotType2(&'static str),
    #[error("{0} is not surjective")]
    NotSurjective(&'static str),
    #[error("target graph is not complete")]
    TargetNotComplete,
    #[error("coloring is not a fall coloring")]
    NotFall,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// A total map `V(source) → V(target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    images: Vec<Vertex>,
}

impl VertexMap {
    pub fn new(source: Arc<Graph>, target: Arc<Graph>, images: Vec<Vertex>) -> Result<Self, HomError> {
        if images.len() != source.n() {
            return Err(HomError::LengthMismatch { expected: source.n(), found: images.len() });
        }
        if let Some((vertex, &image)) = images.iter().enumerate().find(|(_, &w)| w >= target.n()) {
            return Err(HomError::ImageOutOfRange { vertex, image, n: target.n() });
        }
        Ok(VertexMap { source, target, images })
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let images = (0..g.n()).collect();
        VertexMap { source: g.clone(), target: g, images }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn images(&self) -> &[Vertex] {
        &self.images
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.images[v]
    }

    pub fn is_surjective(&self) -> bool {
        let hit: BitSet = self.images.iter().copied().collect_in(self.target.n());
        hit.count() == self.target.n()
    }

    /// Edges map to edges, and `f(N(v)) ⊇ N(f(v))` for every source vertex `v`.
    pub fn is_type2_hom(&self) -> bool {
        let (g, h) = (&*self.source, &*self.target);
        if g.edges().any(|(u, v)| !h.adjacent(self.images[u], self.images[v])) {
            return false;
        }
        (0..g.n()).all(|v| {
            let reached: BitSet = g.neighbors(v).map(|u| self.images[u]).collect_in(h.n());
            h.neighborhood(self.images[v]).is_subset(&reached)
        })
    }

    /// `other ∘ self`.
    pub fn compose(&self, other: &VertexMap) -> Result<VertexMap, HomError> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(HomError::GraphMismatch);
        }
        let images = self.images.iter().map(|&v| other.images[v]).collect();
        Ok(VertexMap { source: self.source.clone(), target: other.target.clone(), images })
    }
}

trait CollectIn {
    fn collect_in(self, universe: usize) -> BitSet;
}

impl<I: Iterator<Item = usize>> CollectIn for I {
    fn collect_in(self, universe: usize) -> BitSet {
        let mut s = BitSet::new(universe);
        for v in self {
            s.insert(v);
        }
        s
    }
}

/// The map `v ↦ f(v)` into `K_k`.
pub fn hom_from_fall(g: Arc<Graph>, f: &Coloring) -> Result<VertexMap, HomError> {
    if !is_fall(&g, f)? {
        return Err(HomError::NotFall);
    }
    let target = Arc::new(Graph::complete(f.k()).expect("k >= 1"));
    let m = VertexMap::new(g, target, f.colors().to_vec())?;
    debug_assert!(m.is_type2_hom());
    Ok(m)
}

/// Reads a type-II map into a complete graph as a fall coloring.
pub fn fall_from_hom(m: &VertexMap) -> Result<Coloring, HomError> {
    if !m.target.is_complete() {
        return Err(HomError::TargetNotComplete);
    }
    if !m.is_type2_hom() {
        return Err(HomError::NotType2("map into a complete graph"));
    }
    assert!(m.is_surjective(), "type-II map into K_{} misses a vertex", m.target.n());
    let f = Coloring::new(m.images.clone(), m.target.n())?;
    debug_assert!(is_fall(&m.source, &f).unwrap_or(false));
    Ok(f)
}

/// `(g, h) ↦ (m1(g), m2(h))` on lexicographic products. `m2` must be onto.
pub fn lex_hom(m1: &VertexMap, m2: &VertexMap) -> Result<VertexMap, HomError> {
    if !m1.is_type2_hom() {
        return Err(HomError::NotType2("outer map"));
    }
    if !m2.is_type2_hom() {
        return Err(HomError::NotType2("inner map"));
    }
    if !m2.is_surjective() {
        return Err(HomError::NotSurjective("inner map"));
    }
    let m = product_map(m1, m2, lex_product);
    debug_assert!(m.is_type2_hom());
    Ok(m)
}

/// `(g, h) ↦ (m1(g), m2(h))` on categorical products.
pub fn cat_hom(m1: &VertexMap, m2: &VertexMap) -> Result<VertexMap, HomError> {
    if !m1.is_type2_hom() {
        return Err(HomError::NotType2("first map"));
    }
    if !m2.is_type2_hom() {
        return Err(HomError::NotType2("second map"));
    }
    let m = product_map(m1, m2, cat_product);
    debug_assert!(m.is_type2_hom());
    Ok(m)
}

fn product_map(m1: &VertexMap, m2: &VertexMap, product: fn(&Graph, &Graph) -> Graph) -> VertexMap {
    let src = ProductIndexMap::for_factors(&m1.source, &m2.source);
    let dst = ProductIndexMap::for_factors(&m1.target, &m2.target);
    let images = (0..src.len())
        .map(|v| {
            let (x, y) = src.unpair(v);
            dst.pair(m1.images[x], m2.images[y])
        })
        .collect();
    VertexMap {
        source: Arc::new(product(&m1.source, &m2.source)),
        target: Arc::new(product(&m1.target, &m2.target)),
        images,
    }
}
