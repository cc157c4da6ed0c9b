use std::collections::BTreeSet;

use super::{certify, require_fall, ConstructionError};
use crate::coloring::{is_fall, Coloring};
use crate::graph::{join_all, lex_product, Graph, ProductIndexMap};

/// An outer fall coloring of `g` plus one fall coloring of `h` per outer color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFamily {
    pub base: Coloring,
    /// `per_color[i]` colors the copies of `h` sitting on outer class `i`.
    pub per_color: Vec<Coloring>,
}

impl ColoringFamily {
    /// Every outer color uses the same inner coloring.
    pub fn uniform(base: Coloring, inner: Coloring) -> Self {
        let per_color = vec![inner; base.k()];
        ColoringFamily { base, per_color }
    }

    fn validate(&self, g: &Graph, h: &Graph) -> Result<(), ConstructionError> {
        require_fall(g, &self.base, "outer coloring")?;
        if self.per_color.len() != self.base.k() {
            return Err(ConstructionError::FamilyMismatch(format!(
                "{} inner colorings for {} outer colors",
                self.per_color.len(),
                self.base.k()
            )));
        }
        for (i, f) in self.per_color.iter().enumerate() {
            require_fall(h, f, format!("inner coloring for outer color {i}"))?;
        }
        Ok(())
    }
}

/// Colors `(x, y)` of `g[h]` by the pair `(base(x), per_color[base(x)](y))`,
/// flattened to dense ids by cumulative offsets. Uses the sum of the inner `k`s.
pub fn lex_compose(g: &Graph, h: &Graph, fam: &ColoringFamily) -> Result<Coloring, ConstructionError> {
    fam.validate(g, h)?;
    let mut offset = Vec::with_capacity(fam.per_color.len());
    let mut total = 0;
    for f in &fam.per_color {
        offset.push(total);
        total += f.k();
    }
    let m = ProductIndexMap::for_factors(g, h);
    let colors = (0..m.len())
        .map(|v| {
            let (x, y) = m.unpair(v);
            let outer = fam.base.color(x);
            offset[outer] + fam.per_color[outer].color(y)
        })
        .collect();
    let f = Coloring::new(colors, total)?;
    Ok(certify("lex_compose", lex_product(g, h), f).1)
}

/// Fall coloring of the join of all parts, with disjoint palettes per part.
pub fn join_compose(parts: &[(Graph, Coloring)]) -> Result<(Graph, Coloring), ConstructionError> {
    if parts.is_empty() {
        return Err(ConstructionError::InvalidParameter("join of no graphs".into()));
    }
    let mut colors = Vec::new();
    let mut offset = 0;
    for (i, (g, f)) in parts.iter().enumerate() {
        require_fall(g, f, format!("coloring of part {i}"))?;
        colors.extend(f.colors().iter().map(|c| c + offset));
        offset += f.k();
    }
    let graphs: Vec<&Graph> = parts.iter().map(|(g, _)| g).collect();
    let joined = join_all(&graphs).expect("parts are nonempty");
    let f = Coloring::new(colors, offset)?;
    Ok(certify("join_compose", joined, f))
}

/// Color sets on each layer `{x} × V(h)` of a fall coloring of `g[h]`.
///
/// Each layer's restriction is itself a fall coloring of `h` once its colors
/// are renamed to `0..|S_x|`; this is asserted.
pub fn layer_color_sets(g: &Graph, h: &Graph, f: &Coloring) -> Result<Vec<BTreeSet<usize>>, ConstructionError> {
    let product = lex_product(g, h);
    require_fall(&product, f, "product coloring")?;
    let m = ProductIndexMap::for_factors(g, h);
    Ok((0..g.n())
        .map(|x| {
            let layer: Vec<usize> = (0..h.n()).map(|y| f.color(m.pair(x, y))).collect();
            let restricted = Coloring::canonical(&layer).expect("layer is nonempty");
            assert!(
                is_fall(h, &restricted).expect("lengths agree"),
                "layer {x} restriction is not a fall coloring"
            );
            layer.into_iter().collect()
        })
        .collect())
}
