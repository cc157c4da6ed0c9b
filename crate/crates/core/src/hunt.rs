//! Search for pairs with `χ_f(G × H) < min(χ_f(G), χ_f(H))`.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{fall_set, fall_set_in, Coloring, SolveError, SolverConfig};
use crate::enumerate::{connected_graphs, random_connected, seeded_rng};
use crate::graph::{cat_product, to_graph6, Graph};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub graph: Graph,
    pub chi_f: usize,
}

/// Connected graphs on at most `max_n` vertices with a fall coloring, one per
/// isomorphism class, followed by `extra` seeded random connected graphs on
/// `max_n + 1` vertices.
pub fn corpus(max_n: usize, extra: usize, seed: u64, cfg: &SolverConfig) -> Result<Vec<CorpusEntry>, SolveError> {
    let mut graphs = connected_graphs(max_n);
    let mut rng = seeded_rng(seed);
    graphs.extend((0..extra).map(|_| random_connected(&mut rng, max_n + 1, 0.4)));
    let mut out = Vec::new();
    for g in graphs {
        let report = fall_set(&g, cfg)?;
        if !report.is_complete() {
            return Err(SolveError::Undecided(report.undecided.into_iter().collect()));
        }
        if let Some(chi_f) = report.chi_f {
            out.push(CorpusEntry { graph: g, chi_f });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub g: String,
    pub h: String,
    pub chi_f_g: usize,
    pub chi_f_h: usize,
    pub chi_f_product: usize,
    pub witness: Coloring,
}

#[derive(Debug, Clone, Serialize)]
pub struct SkippedPair {
    pub g: String,
    pub h: String,
    pub undecided: Vec<usize>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct HuntReport {
    pub corpus_size: usize,
    pub pairs_verified: usize,
    pub counterexamples: Vec<Counterexample>,
    pub skipped: Vec<SkippedPair>,
}

enum PairOutcome {
    Equal,
    Below(Counterexample),
    Skipped(SkippedPair),
}

/// Checks every unordered pair `{G, H}` (including `G = H`) from `corpus`.
pub fn hunt(corpus: &[CorpusEntry], cfg: &SolverConfig) -> HuntReport {
    let pairs: Vec<(usize, usize)> = (0..corpus.len()).flat_map(|i| (i..corpus.len()).map(move |j| (i, j))).collect();
    let inner = cfg.clone().sequential();
    let check = |&(i, j): &(usize, usize)| check_pair(&corpus[i], &corpus[j], &inner);
    let outcomes: Vec<PairOutcome> =
        if cfg.parallel { pairs.par_iter().map(check).collect() } else { pairs.iter().map(check).collect() };
    let mut report = HuntReport { corpus_size: corpus.len(), ..HuntReport::default() };
    for o in outcomes {
        match o {
            PairOutcome::Equal => report.pairs_verified += 1,
            PairOutcome::Below(c) => report.counterexamples.push(c),
            PairOutcome::Skipped(s) => report.skipped.push(s),
        }
    }
    report
}

fn check_pair(a: &CorpusEntry, b: &CorpusEntry, cfg: &SolverConfig) -> PairOutcome {
    let m = a.chi_f.min(b.chi_f);
    let product = cat_product(&a.graph, &b.graph);
    let report = match fall_set_in(&product, 1..=m, cfg) {
        Ok(r) => r,
        Err(SolveError::Undecided(ks)) => return skipped(a, b, ks),
        Err(e) => panic!("product of corpus graphs rejected by the solver: {e}"),
    };
    let chi = report.chi_f;
    assert!(
        chi.is_some_and(|c| c <= m) || report.undecided.contains(&m),
        "chi_f({} x {}) exceeds {m}",
        to_graph6(&a.graph),
        to_graph6(&b.graph)
    );
    match chi {
        Some(c) if c < m && report.undecided.iter().all(|&u| u > c) => PairOutcome::Below(Counterexample {
            g: to_graph6(&a.graph),
            h: to_graph6(&b.graph),
            chi_f_g: a.chi_f,
            chi_f_h: b.chi_f,
            chi_f_product: c,
            witness: report.witnesses[&c].clone(),
        }),
        Some(c) if c == m && report.is_complete() => PairOutcome::Equal,
        _ => skipped(a, b, report.undecided.into_iter().collect()),
    }
}

fn skipped(a: &CorpusEntry, b: &CorpusEntry, undecided: Vec<usize>) -> PairOutcome {
    PairOutcome::Skipped(SkippedPair { g: to_graph6(&a.graph), h: to_graph6(&b.graph), undecided })
}
