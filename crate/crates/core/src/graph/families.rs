use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphBuilder, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "empty" => Ok(Family::Empty),
            other => Err(format!("unknown graph family `{other}`")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
        })
    }
}

/// Standard graph of the given family on vertices `0..n`.
pub fn build_named(family: Family, n: usize) -> Result<Graph, GraphError> {
    if family == Family::Cycle && n < 3 {
        return Err(if n == 0 { GraphError::NoVertices } else { GraphError::CycleTooShort(n) });
    }
    let mut b = GraphBuilder::new(n)?;
    match family {
        Family::Path => {
            for i in 1..n {
                b.add_edge(i - 1, i);
            }
        }
        Family::Cycle => {
            for i in 0..n {
                b.add_edge(i, (i + 1) % n);
            }
        }
        Family::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    b.add_edge(u, v);
                }
            }
        }
        Family::Empty => {}
    }
    Ok(b.build())
}

impl Graph {
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        build_named(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        build_named(Family::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        build_named(Family::Complete, n)
    }
}
