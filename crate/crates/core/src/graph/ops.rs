use std::collections::VecDeque;

use super::{Graph, GraphBuilder, GraphError, ProductIndexMap, Vertex};
use crate::bitset::BitSet;

/// `u ~ v` in the result iff `u != v` and `u !~ v` in `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n).expect("n >= 1");
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// Disjoint copies of `g` then `h` (shifted by `g.n()`), plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    join_all(&[g, h]).expect("two parts")
}

/// Iterated join with vertex blocks in list order.
pub fn join_all(parts: &[&Graph]) -> Result<Graph, GraphError> {
    let offsets = offsets(parts.iter().map(|g| g.n()))?;
    let total = *offsets.last().unwrap();
    let mut b = GraphBuilder::new(total)?;
    for (i, g) in parts.iter().enumerate() {
        let off = offsets[i];
        for (u, v) in g.edges() {
            b.add_edge(off + u, off + v);
        }
        for u in off..offsets[i + 1] {
            for v in offsets[i + 1]..total {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// Block-diagonal union; vertex ids are offset by the cumulative part sizes.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
    let offsets = offsets(parts.iter().map(Graph::n))?;
    let mut b = GraphBuilder::new(*offsets.last().unwrap())?;
    for (g, off) in parts.iter().zip(&offsets) {
        for (u, v) in g.edges() {
            b.add_edge(off + u, off + v);
        }
    }
    Ok(b.build())
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Result<Vec<usize>, GraphError> {
    let mut acc = vec![0];
    for s in sizes {
        acc.push(acc.last().unwrap() + s);
    }
    if acc.len() == 1 {
        return Err(GraphError::EmptyUnion);
    }
    Ok(acc)
}

fn product_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let m = ProductIndexMap::for_factors(g, h);
    (0..m.len())
        .map(|v| {
            let (x, y) = m.unpair(v);
            format!("({},{})", g.label(x), h.label(y))
        })
        .collect()
}

/// Lexicographic product `g[h]`: `(x1,y1) ~ (x2,y2)` iff `x1 ~ x2`, or `x1 == x2` and `y1 ~ y2`.
pub fn lex_product(g: &Graph, h: &Graph) -> Graph {
    let m = ProductIndexMap::for_factors(g, h);
    let mut b = GraphBuilder::new(m.len()).expect("factors are nonempty");
    for x in 0..g.n() {
        for (y1, y2) in h.edges() {
            b.add_edge(m.pair(x, y1), m.pair(x, y2));
        }
    }
    for (x1, x2) in g.edges() {
        for y1 in 0..h.n() {
            for y2 in 0..h.n() {
                b.add_edge(m.pair(x1, y1), m.pair(x2, y2));
            }
        }
    }
    b.build().with_labels(product_labels(g, h))
}

/// Categorical (tensor) product `g × h`: adjacency in both coordinates at once.
pub fn cat_product(g: &Graph, h: &Graph) -> Graph {
    let m = ProductIndexMap::for_factors(g, h);
    let mut b = GraphBuilder::new(m.len()).expect("factors are nonempty");
    for (x1, x2) in g.edges() {
        for (y1, y2) in h.edges() {
            b.add_edge(m.pair(x1, y1), m.pair(x2, y2));
            b.add_edge(m.pair(x1, y2), m.pair(x2, y1));
        }
    }
    b.build().with_labels(product_labels(g, h))
}

/// Mycielskian on `2n + 1` vertices ordered `x_0..x_{n-1}, y_0..y_{n-1}, z`.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let z = 2 * n;
    let mut b = GraphBuilder::new(2 * n + 1).expect("n >= 1");
    for (i, j) in g.edges() {
        b.add_edge(i, j);
        b.add_edge(n + i, j);
        b.add_edge(n + j, i);
    }
    for i in 0..n {
        b.add_edge(z, n + i);
    }
    let labels = (0..n)
        .map(|i| format!("x{i}"))
        .chain((0..n).map(|i| format!("y{i}")))
        .chain(std::iter::once("z".to_string()))
        .collect();
    b.build().with_labels(labels)
}

/// `u ~ v` iff `u != v` and their distance in `g` is at most 2.
pub fn distance2_power(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n).expect("n >= 1");
    for v in 0..n {
        for u in g.neighbors(v) {
            if u > v {
                b.add_edge(v, u);
            }
            for w in g.neighbors(u) {
                if w != v && !b.has_edge(v, w) {
                    b.add_edge(v, w);
                }
            }
        }
    }
    b.build()
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// An induced subgraph together with the ids its vertices had in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the host vertex that became vertex `i`.
    pub original: Vec<Vertex>,
}

/// Subgraph induced on `vertices`, renumbered by ascending host id.
pub fn induced_subgraph(g: &Graph, vertices: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
    let mut set = BitSet::new(g.n());
    for &v in vertices {
        g.check_vertex(v)?;
        set.insert(v);
    }
    let original: Vec<Vertex> = set.iter().collect();
    if original.is_empty() {
        return Err(GraphError::EmptyVertexSet);
    }
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in original.iter().enumerate() {
        index[v] = i;
    }
    let mut b = GraphBuilder::new(original.len())?;
    for (i, &v) in original.iter().enumerate() {
        for u in g.neighbors(v) {
            let j = index[u];
            if j != usize::MAX && j > i {
                b.add_edge(i, j);
            }
        }
    }
    Ok(InducedSubgraph { graph: b.build(), original })
}
