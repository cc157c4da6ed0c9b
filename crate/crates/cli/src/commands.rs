use std::sync::Arc;

use clap::Subcommand;
use fallcolor::coloring::{fall_set, find_fall_coloring, verify as verify_coloring, FallSearch, SolverConfig};
use fallcolor::constructions::{
    beyond_max, c5xc5_coloring, case1_coloring, case2_coloring, case4_coloring, cat_project, join_compose,
    lex_compose, known_fixtures, ColoringFamily, ConstructionError,
};
use fallcolor::graph::{
    build_named, cat_product, complement, disjoint_union, distance2_power, join_all, lex_product, mycielskian,
    to_dot, to_graph6, Family,
};
use fallcolor::hom::VertexMap;
use fallcolor::reductions::{fall_of_bipartite_complement, fall_via_ghat, GhatVerdict, ReductionError};
use fallcolor::{Coloring, Graph};
use serde_json::{json, Value};

use crate::io::{coloring_from, colors_value, emit, graph_arg, parse_ids, read_source, shift_colorings, to_value};
use crate::{CliError, RunConfig, Status};

#[derive(Subcommand)]
pub enum BuildSpec {
    Cycle { n: usize },
    Complete { n: usize },
    Path { n: usize },
    Empty { n: usize },
    Complement { graph: String },
    Join {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    Union {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    Lex { g: String, h: String },
    Cat { g: String, h: String },
    Mycielski { graph: String },
    Power2 { graph: String },
}

#[derive(Subcommand)]
pub enum HomCmd {
    /// Check a map file (one line of target ids) from SOURCE to TARGET.
    Verify { source: String, target: String, map: String },
}

#[derive(Subcommand)]
pub enum ConstructCmd {
    /// C5 x C5 colored by (i + 2j) mod 5.
    C5xc5,
    /// K2 x Kt x Krn with t + rn − 2 colors.
    Case1 {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        rn: usize,
    },
    /// Krs x Krj x Krn with rs·rj·rn/4 colors.
    Case2 {
        #[arg(long)]
        rs: usize,
        #[arg(long)]
        rj: usize,
        #[arg(long)]
        rn: usize,
    },
    /// Kra x Krb x Krn with (ra−1)·rb·rn/4 + 1 colors.
    Case4 {
        #[arg(long)]
        ra: usize,
        #[arg(long)]
        rb: usize,
        #[arg(long)]
        rn: usize,
    },
    /// A product of three complete factors from SET with more colors than max(SET).
    BeyondMax {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Lift fall colorings of G and H to G[H].
    LexCompose {
        g: String,
        h: String,
        #[arg(long)]
        outer_k: Option<usize>,
        #[arg(long)]
        inner_k: Option<usize>,
    },
    /// Join of the given graphs, each with a fall coloring.
    JoinCompose {
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Colors per part, comma separated; defaults to each part's chi_f.
        #[arg(long, value_delimiter = ',')]
        ks: Vec<usize>,
    },
    /// Lift a fall coloring of G to G x H.
    CatProject {
        g: String,
        h: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// The three hand-written colorings of C5[K2], C9[K2] and C8[K2].
    Fixtures,
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn build(_run: &RunConfig, spec: BuildSpec, dot: bool) -> Result<Status, CliError> {
    let named = |f: Family, n| build_named(f, n).map_err(usage);
    let g = match spec {
        BuildSpec::Cycle { n } => named(Family::Cycle, n)?,
        BuildSpec::Complete { n } => named(Family::Complete, n)?,
        BuildSpec::Path { n } => named(Family::Path, n)?,
        BuildSpec::Empty { n } => named(Family::Empty, n)?,
        BuildSpec::Complement { graph } => complement(&graph_arg(&graph)?),
        BuildSpec::Join { graphs } => {
            let parts = graphs.iter().map(|s| graph_arg(s)).collect::<Result<Vec<_>, _>>()?;
            join_all(&parts.iter().collect::<Vec<_>>()).map_err(usage)?
        }
        BuildSpec::Union { graphs } => {
            let parts = graphs.iter().map(|s| graph_arg(s)).collect::<Result<Vec<_>, _>>()?;
            disjoint_union(&parts).map_err(usage)?
        }
        BuildSpec::Lex { g, h } => lex_product(&graph_arg(&g)?, &graph_arg(&h)?),
        BuildSpec::Cat { g, h } => cat_product(&graph_arg(&g)?, &graph_arg(&h)?),
        BuildSpec::Mycielski { graph } => mycielskian(&graph_arg(&graph)?),
        BuildSpec::Power2 { graph } => distance2_power(&graph_arg(&graph)?),
    };
    if dot {
        print!("{}", to_dot(&g, "G"));
    } else {
        println!("{}", to_graph6(&g));
    }
    Ok(Status::Holds)
}

pub fn fall(run: &RunConfig, graph: &str, k: Option<usize>) -> Result<Status, CliError> {
    let g = graph_arg(graph)?;
    let cfg = run.solver();
    if let Some(k) = k {
        let (status, witness) = match find_fall_coloring(&g, k, &cfg)? {
            FallSearch::Found(f) => (Status::Holds, colors_value(&f, run.one_based)),
            FallSearch::Absent => (Status::Fails, Value::Null),
            FallSearch::Undecided => (Status::Undecided, Value::Null),
        };
        let found = match status {
            Status::Holds => json!(true),
            Status::Fails => json!(false),
            Status::Undecided => json!("undecided"),
        };
        emit(run.format, &json!({ "k": k, "found": found, "witness": witness }));
        return Ok(status);
    }
    let report = fall_set(&g, &cfg)?;
    let mut v = to_value(&report);
    if run.one_based {
        shift_colorings(&mut v, "witnesses");
    }
    emit(run.format, &v);
    Ok(if report.is_complete() { Status::Holds } else { Status::Undecided })
}

pub fn verify(run: &RunConfig, graph: &str, coloring: &str) -> Result<Status, CliError> {
    let g = graph_arg(graph)?;
    let f = coloring_from(&read_source(coloring)?, run.one_based)?;
    let verdict = verify_coloring(&g, &f).map_err(usage)?;
    emit(run.format, &to_value(&verdict));
    Ok(if verdict.fall { Status::Holds } else { Status::Fails })
}

pub fn hom(run: &RunConfig, cmd: HomCmd) -> Result<Status, CliError> {
    let HomCmd::Verify { source, target, map } = cmd;
    let (g, h) = (Arc::new(graph_arg(&source)?), Arc::new(graph_arg(&target)?));
    let images = parse_ids(&read_source(&map)?, run.one_based)?;
    let m = VertexMap::new(g, h, images).map_err(usage)?;
    let type2 = m.is_type2_hom();
    emit(run.format, &json!({ "type2": type2, "surjective": m.is_surjective() }));
    Ok(if type2 { Status::Holds } else { Status::Fails })
}

fn fall_coloring(g: &Graph, k: Option<usize>, cfg: &SolverConfig) -> Result<Coloring, CliError> {
    match k {
        Some(k) => match find_fall_coloring(g, k, cfg)? {
            FallSearch::Found(f) => Ok(f),
            FallSearch::Absent => Err(usage(format!("{} has no fall {k}-coloring", to_graph6(g)))),
            FallSearch::Undecided => Err(CliError::Limit(format!("timed out deciding k = {k}"))),
        },
        None => {
            let report = fall_set(g, cfg)?;
            match report.chi_f {
                Some(chi) if report.undecided.iter().all(|&u| u > chi) => Ok(report.witnesses[&chi].clone()),
                Some(_) => Err(CliError::Limit("timed out below the smallest fall coloring found".into())),
                None if report.is_complete() => Err(usage(format!("{} has no fall coloring", to_graph6(g)))),
                None => Err(CliError::Limit("timed out before finding a fall coloring".into())),
            }
        }
    }
}

fn emit_construction(run: &RunConfig, g: &Graph, f: &Coloring, extra: Value) -> Result<Status, CliError> {
    println!("{}", to_graph6(g));
    println!("{}", f.to_line(run.one_based));
    let verdict = verify_coloring(g, f).map_err(usage)?;
    let mut v = json!({ "n": g.n(), "k": f.k(), "fall": verdict.fall });
    if let (Value::Object(m), Value::Object(x)) = (&mut v, extra) {
        m.extend(x);
    }
    emit(run.format, &v);
    Ok(if verdict.fall { Status::Holds } else { Status::Fails })
}

pub fn construct(run: &RunConfig, name: ConstructCmd) -> Result<Status, CliError> {
    let cfg = run.solver();
    let built = |r: Result<(Graph, Coloring), ConstructionError>| r.map_err(usage);
    let (g, f, extra) = match name {
        ConstructCmd::C5xc5 => {
            let (g, f) = c5xc5_coloring();
            (g, f, json!({}))
        }
        ConstructCmd::Case1 { t, rn } => {
            let (g, f) = built(case1_coloring(t, rn))?;
            (g, f, json!({}))
        }
        ConstructCmd::Case2 { rs, rj, rn } => {
            let (g, f) = built(case2_coloring(rs, rj, rn))?;
            (g, f, json!({}))
        }
        ConstructCmd::Case4 { ra, rb, rn } => {
            let (g, f) = built(case4_coloring(ra, rb, rn))?;
            (g, f, json!({}))
        }
        ConstructCmd::BeyondMax { set } => {
            let b = beyond_max(&set).map_err(usage)?;
            let extra = json!({ "case": format!("{:?}", b.case), "factors": b.factors });
            (b.graph, b.coloring, extra)
        }
        ConstructCmd::LexCompose { g, h, outer_k, inner_k } => {
            let (g, h) = (graph_arg(&g)?, graph_arg(&h)?);
            let fam = ColoringFamily::uniform(fall_coloring(&g, outer_k, &cfg)?, fall_coloring(&h, inner_k, &cfg)?);
            let f = lex_compose(&g, &h, &fam).map_err(usage)?;
            (lex_product(&g, &h), f, json!({}))
        }
        ConstructCmd::JoinCompose { graphs, ks } => {
            if !ks.is_empty() && ks.len() != graphs.len() {
                return Err(usage(format!("{} values in --ks for {} graphs", ks.len(), graphs.len())));
            }
            let parts = graphs
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let g = graph_arg(s)?;
                    let f = fall_coloring(&g, ks.get(i).copied(), &cfg)?;
                    Ok((g, f))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let (g, f) = built(join_compose(&parts))?;
            (g, f, json!({}))
        }
        ConstructCmd::CatProject { g, h, k } => {
            let (g, h) = (graph_arg(&g)?, graph_arg(&h)?);
            let f = fall_coloring(&g, k, &cfg)?;
            let (p, f) = built(cat_project(&g, &f, &h))?;
            (p, f, json!({}))
        }
        ConstructCmd::Fixtures => {
            let mut status = Status::Holds;
            for fx in known_fixtures() {
                if emit_construction(run, &fx.graph, &fx.coloring, json!({ "name": fx.name }))? != Status::Holds {
                    status = Status::Fails;
                }
            }
            return Ok(status);
        }
    };
    emit_construction(run, &g, &f, extra)
}

pub fn ghat(run: &RunConfig, graph: &str, t: usize, budget: Option<u64>) -> Result<Status, CliError> {
    let g = graph_arg(graph)?;
    let verdict = fall_via_ghat(&g, t, budget, &run.solver()).map_err(|e| match e {
        ReductionError::Solve(s) => CliError::from(s),
        other => usage(other),
    })?;
    let (status, v) = match verdict {
        GhatVerdict::Member { member, coloring } => (
            Status::Holds,
            json!({
                "t": t,
                "member": true,
                "graph": to_graph6(&member.graph),
                "coloring": colors_value(&coloring, run.one_based),
                "choice": member.choice.sets,
            }),
        ),
        GhatVerdict::NotMember { members } => {
            (Status::Fails, json!({ "t": t, "member": false, "distinct_members": members }))
        }
        GhatVerdict::Undecided { tuples } => {
            (Status::Undecided, json!({ "t": t, "member": "undecided", "tuples_visited": tuples }))
        }
    };
    emit(run.format, &v);
    Ok(status)
}

pub fn bipc(run: &RunConfig, graph: &str) -> Result<Status, CliError> {
    let g = graph_arg(graph)?;
    let r = fall_of_bipartite_complement(&g).map_err(usage)?;
    let mut v = to_value(&r);
    if run.one_based {
        shift_colorings(&mut v, "witnesses");
    }
    emit(run.format, &v);
    Ok(Status::Holds)
}

pub fn hunt(run: &RunConfig, max_n: usize, random: usize) -> Result<Status, CliError> {
    if !(1..=8).contains(&max_n) {
        return Err(usage("--max-n must be between 1 and 8"));
    }
    let largest = if random > 0 { max_n + 1 } else { max_n };
    if largest * largest > run.capacity {
        return Err(CliError::Limit(format!(
            "products of {largest}-vertex graphs exceed the capacity {}",
            run.capacity
        )));
    }
    let cfg = run.solver();
    let corpus = fallcolor::hunt::corpus(max_n, random, run.seed, &cfg)?;
    let report = fallcolor::hunt::hunt(&corpus, &cfg);
    let mut v = to_value(&report);
    if run.one_based {
        if let Some(Value::Array(ces)) = v.get_mut("counterexamples") {
            ces.iter_mut().for_each(|c| shift_colorings(c, "witness"));
        }
    }
    emit(run.format, &v);
    Ok(if !report.counterexamples.is_empty() {
        Status::Fails
    } else if !report.skipped.is_empty() {
        Status::Undecided
    } else {
        Status::Holds
    })
}
