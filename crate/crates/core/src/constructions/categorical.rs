//! Fall colorings of categorical products, including products of three
//! complete graphs whose fall sets reach beyond the largest factor.

use super::{certify, require_fall, ConstructionError};
use crate::coloring::Coloring;
use crate::graph::{cat_product, Graph, ProductIndexMap};

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParameter(msg.into())
}

/// `(u, v) ↦ f(u)`: a fall coloring of `g` lifts to `g × h`.
pub fn cat_project(g: &Graph, f: &Coloring, h: &Graph) -> Result<(Graph, Coloring), ConstructionError> {
    require_fall(g, f, "projected coloring")?;
    let m = ProductIndexMap::for_factors(g, h);
    let colors = (0..m.len()).map(|v| f.color(m.unpair(v).0)).collect();
    let lifted = Coloring::new(colors, f.k())?;
    Ok(certify("cat_project", cat_product(g, h), lifted))
}

/// `C5 × C5` colored by `(i + 2j) mod 5`.
pub fn c5xc5_coloring() -> (Graph, Coloring) {
    let c5 = Graph::cycle(5).expect("n = 5");
    let m = ProductIndexMap::new(5, 5);
    let colors = (0..25)
        .map(|v| {
            let (i, j) = m.unpair(v);
            (i + 2 * j) % 5
        })
        .collect();
    let f = Coloring::new(colors, 5).expect("all residues occur");
    certify("c5xc5", cat_product(&c5, &c5), f)
}

/// A fixed-point-free permutation of `0..t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derangement {
    perm: Vec<usize>,
    inverse: Vec<usize>,
}

impl Derangement {
    pub fn new(perm: Vec<usize>) -> Result<Self, ConstructionError> {
        let t = perm.len();
        let mut inverse = vec![usize::MAX; t];
        for (i, &p) in perm.iter().enumerate() {
            if p >= t || inverse[p] != usize::MAX {
                return Err(invalid(format!("{perm:?} is not a permutation")));
            }
            if p == i {
                return Err(invalid(format!("{perm:?} fixes {i}")));
            }
            inverse[p] = i;
        }
        if t < 2 {
            return Err(invalid("no derangement of fewer than 2 points"));
        }
        Ok(Derangement { perm, inverse })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn invert(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }
}

/// The cyclic shift `i ↦ (i + 1) mod t`.
pub fn derangement(t: usize) -> Result<Derangement, ConstructionError> {
    if t < 2 {
        return Err(invalid(format!("no derangement of {t} points")));
    }
    Derangement::new((0..t).map(|i| (i + 1) % t).collect())
}

/// `K_a × K_b × K_c` with vertex `(x, y, z)` at `(x·b + y)·c + z`.
pub fn complete_triple(a: usize, b: usize, c: usize) -> Graph {
    let k = |n| Graph::complete(n).expect("factor sizes are positive");
    cat_product(&cat_product(&k(a), &k(b)), &k(c))
}

fn triple_index(b: usize, c: usize) -> impl Fn(usize, usize, usize) -> usize {
    move |x, y, z| (x * b + y) * c + z
}

/// Color of `(x, y, z)` in the tiled pattern on `K_{2p} × K_{t} × K_{2q}`.
///
/// The base 2×2 block gives `(0,i,0), (0,σ(i),1), (1,i,1), (1,σ(i),0)` color
/// `i`; block `(⌊x/2⌋, ⌊z/2⌋)` shifts that by `⌊x/2⌋·t·zs/2 + ⌊z/2⌋·t`.
fn tiled_color(sigma: &Derangement, zs: usize, x: usize, y: usize, z: usize) -> usize {
    let t = sigma.len();
    let base = if x % 2 == z % 2 { y } else { sigma.invert(y) };
    (x / 2) * (t * zs / 2) + (z / 2) * t + base
}

/// Fall `(t + rn − 2)`-coloring of `K_2 × K_t × K_rn` for `3 ≤ t < rn`.
pub fn case1_coloring(t: usize, rn: usize) -> Result<(Graph, Coloring), ConstructionError> {
    if t < 3 {
        return Err(invalid(format!("case 1 needs 3 <= t < rn, got t = {t}, rn = {rn}")));
    }
    case1_coloring_with(&derangement(t)?, rn)
}

/// [`case1_coloring`] with an arbitrary derangement of `0..t`.
pub fn case1_coloring_with(sigma: &Derangement, rn: usize) -> Result<(Graph, Coloring), ConstructionError> {
    let t = sigma.len();
    if !(3 <= t && t < rn) {
        return Err(invalid(format!("case 1 needs 3 <= t < rn, got t = {t}, rn = {rn}")));
    }
    let idx = triple_index(t, rn);
    let mut colors = vec![usize::MAX; 2 * t * rn];
    for i in 0..t {
        for v in [idx(0, i, 0), idx(0, sigma.apply(i), 1), idx(1, i, 1), idx(1, sigma.apply(i), 0)] {
            colors[v] = i;
        }
    }
    for x in 0..2 {
        for y in 0..t {
            for z in 2..rn {
                colors[idx(x, y, z)] = t + z - 2;
            }
        }
    }
    let f = Coloring::new(colors, t + rn - 2)?;
    Ok(certify("case1", complete_triple(2, t, rn), f))
}

/// Fall `(rs·rj·rn/4)`-coloring of `K_rs × K_rj × K_rn` with `rs`, `rn` even.
pub fn case2_coloring(rs: usize, rj: usize, rn: usize) -> Result<(Graph, Coloring), ConstructionError> {
    case2_coloring_with(rs, &derangement(rj)?, rn)
}

/// [`case2_coloring`] with an arbitrary derangement of `0..rj`.
pub fn case2_coloring_with(rs: usize, sigma: &Derangement, rn: usize) -> Result<(Graph, Coloring), ConstructionError> {
    let rj = sigma.len();
    if !rs.is_multiple_of(2) || !rn.is_multiple_of(2) {
        return Err(invalid(format!("case 2 needs rs and rn even, got {rs} and {rn}")));
    }
    if rs < 4 || rn < 4 {
        return Err(invalid(format!("case 2 needs rs, rn >= 4, got ({rs}, {rj}, {rn})")));
    }
    let idx = triple_index(rj, rn);
    let mut colors = vec![0; rs * rj * rn];
    for x in 0..rs {
        for y in 0..rj {
            for z in 0..rn {
                colors[idx(x, y, z)] = tiled_color(sigma, rn, x, y, z);
            }
        }
    }
    let f = Coloring::new(colors, rs * rj * rn / 4)?;
    Ok(certify("case2", complete_triple(rs, rj, rn), f))
}

/// Fall `((ra−1)·rb·rn/4 + 1)`-coloring of `K_ra × K_rb × K_rn`: the tiled
/// pattern on the first `ra − 1` values of `x`, one extra class on `x = ra − 1`.
pub fn case4_coloring(ra: usize, rb: usize, rn: usize) -> Result<(Graph, Coloring), ConstructionError> {
    if rb < 3 {
        return Err(invalid(format!("case 4 needs rb >= 3, got {rb}")));
    }
    case4_coloring_with(ra, &derangement(rb)?, rn)
}

/// [`case4_coloring`] with an arbitrary derangement of `0..rb`.
pub fn case4_coloring_with(ra: usize, sigma: &Derangement, rn: usize) -> Result<(Graph, Coloring), ConstructionError> {
    let rb = sigma.len();
    if ra.is_multiple_of(2) || ra < 3 || !rn.is_multiple_of(2) || rn < 4 {
        return Err(invalid(format!("case 4 needs ra odd >= 3 and rn even >= 4, got ({ra}, {rb}, {rn})")));
    }
    if rb < 3 {
        return Err(invalid(format!("case 4 needs rb >= 3, got {rb}")));
    }
    let idx = triple_index(rb, rn);
    let extra = (ra - 1) * rb * rn / 4;
    let mut colors = vec![0; ra * rb * rn];
    for x in 0..ra {
        for y in 0..rb {
            for z in 0..rn {
                colors[idx(x, y, z)] = if x == ra - 1 { extra } else { tiled_color(sigma, rn, x, y, z) };
            }
        }
    }
    let f = Coloring::new(colors, extra + 1)?;
    Ok(certify("case4", complete_triple(ra, rb, rn), f))
}

/// Two even factors `e1`, `e2` around an odd largest factor `rn`: the case 2
/// tiling with the largest factor in the middle.
pub fn case3_coloring(e1: usize, rn: usize, e2: usize) -> Result<(Graph, Coloring), ConstructionError> {
    case2_coloring(e1, rn, e2)
}

/// A single even factor `e` and an odd largest factor `rn`: the case 4
/// pattern with the even factor carrying the tiling in `z`.
pub fn case5_coloring(ra: usize, rn: usize, e: usize) -> Result<(Graph, Coloring), ConstructionError> {
    case4_coloring(ra, rn, e)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductCase {
    /// smallest factor is 2
    I,
    /// two even factors, one of them the largest
    II,
    /// two even factors, neither the largest
    III,
    /// one even factor, and it is the largest
    IV,
    /// one even factor, not the largest
    V,
}

/// A fall coloring of a three-factor subproduct with more colors than the largest factor.
#[derive(Debug, Clone)]
pub struct BeyondMax {
    pub case: ProductCase,
    /// Sizes of the complete factors, in the order the product is built.
    pub factors: [usize; 3],
    pub graph: Graph,
    pub coloring: Coloring,
}

/// For distinct sizes `set` (at least three, all `>= 2`, at least one even),
/// picks three factors and builds a fall coloring of their product with
/// more than `max(set)` colors. It lifts to the product over all of `set`
/// by projection.
pub fn beyond_max(set: &[usize]) -> Result<BeyondMax, ConstructionError> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != set.len() {
        return Err(invalid("factor sizes must be distinct"));
    }
    if s.len() < 3 || s[0] < 2 {
        return Err(invalid("need at least three factor sizes, all >= 2"));
    }
    let rn = *s.last().unwrap();
    let evens: Vec<usize> = s.iter().copied().filter(|r| r % 2 == 0).collect();
    if evens.is_empty() {
        return Err(invalid("need at least one even factor size"));
    }
    let odds_below: Vec<usize> = s.iter().copied().filter(|&r| r % 2 == 1 && r != rn).collect();
    let (case, factors, (graph, coloring)) = if s[0] == 2 {
        let t = s[1];
        (ProductCase::I, [2, t, rn], case1_coloring(t, rn)?)
    } else if evens.len() >= 2 && rn.is_multiple_of(2) {
        let rs = evens[0];
        let rj = *s.iter().find(|&&r| r != rs && r != rn).unwrap();
        (ProductCase::II, [rs, rj, rn], case2_coloring(rs, rj, rn)?)
    } else if evens.len() >= 2 {
        let (e1, e2) = (evens[0], evens[1]);
        (ProductCase::III, [e1, rn, e2], case3_coloring(e1, rn, e2)?)
    } else if rn.is_multiple_of(2) {
        let (ra, rb) = (s[s.len() - 3], s[s.len() - 2]);
        (ProductCase::IV, [ra, rb, rn], case4_coloring(ra, rb, rn)?)
    } else {
        let ra = *odds_below.last().unwrap();
        let e = evens[0];
        (ProductCase::V, [ra, rn, e], case5_coloring(ra, rn, e)?)
    };
    assert!(coloring.k() > rn, "{case:?} produced {} colors, not above {rn}", coloring.k());
    Ok(BeyondMax { case, factors, graph, coloring })
}
