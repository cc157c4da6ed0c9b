use crate::coloring::Coloring;
use crate::graph::{lex_product, Graph};

/// A hand-written fall coloring of a small lexicographic product.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub coloring: Coloring,
}

// 1-based colors in lexicographic vertex order (x, y) -> 2(x-1) + y
const C5_K2: [usize; 10] = [1, 2, 3, 4, 1, 5, 2, 4, 5, 3];
const C9_K2: [usize; 18] = [1, 4, 2, 3, 5, 1, 4, 2, 3, 1, 5, 2, 4, 3, 1, 2, 5, 3];
const C8_K2: [usize; 16] = [1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 5, 2, 3, 1, 5, 4];

fn fixture(name: &'static str, cycle: usize, one_based: &[usize]) -> Fixture {
    let graph = lex_product(&Graph::cycle(cycle).unwrap(), &Graph::complete(2).unwrap());
    let coloring = Coloring::from_colors(one_based.iter().map(|c| c - 1).collect()).unwrap();
    Fixture { name, graph, coloring }
}

/// Fall 5-colorings of `C5[K2]`, `C9[K2]` and `C8[K2]`, shifted to 0-based colors.
pub fn known_fixtures() -> Vec<Fixture> {
    vec![
        fixture("C5[K2]", 5, &C5_K2),
        fixture("C9[K2]", 9, &C9_K2),
        fixture("C8[K2]", 8, &C8_K2),
    ]
}
