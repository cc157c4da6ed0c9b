use std::fs;
use std::io::{self, Read};

use fallcolor::graph::parse_graph6;
use fallcolor::{Coloring, Graph};
use serde::Serialize;
use serde_json::Value;

use crate::{CliError, Format};

/// A graph6 operand; `-` reads one line from standard input.
pub fn graph_arg(arg: &str) -> Result<Graph, CliError> {
    let text = if arg == "-" { read_source("-")? } else { arg.to_string() };
    let line = text.lines().next().unwrap_or("").trim();
    parse_graph6(line).map_err(|e| CliError::Usage(format!("bad graph6 `{line}`: {e}")))
}

pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

/// First non-empty line of integers, shifted down by one if `one_based`.
pub fn parse_ids(text: &str, one_based: bool) -> Result<Vec<usize>, CliError> {
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    line.split_whitespace()
        .map(|t| {
            let v: usize = t.parse().map_err(|_| CliError::Usage(format!("`{t}` is not a vertex or color id")))?;
            match (one_based, v) {
                (true, 0) => Err(CliError::Usage("0 in one-based input".into())),
                (true, v) => Ok(v - 1),
                (false, v) => Ok(v),
            }
        })
        .collect()
}

pub fn coloring_from(text: &str, one_based: bool) -> Result<Coloring, CliError> {
    Coloring::from_colors(parse_ids(text, one_based)?).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn colors_value(c: &Coloring, one_based: bool) -> Value {
    let shift = usize::from(one_based);
    Value::from(c.colors().iter().map(|&x| x + shift).collect::<Vec<_>>())
}

/// Rewrites every array of ids under the `witnesses` key, or under `key` itself, to one-based.
pub fn shift_colorings(v: &mut Value, key: &str) {
    match v.get_mut(key) {
        Some(Value::Object(m)) => m.values_mut().for_each(bump),
        Some(arr @ Value::Array(_)) => bump(arr),
        _ => {}
    }
}

fn bump(v: &mut Value) {
    if let Value::Array(items) = v {
        for x in items {
            if let Some(n) = x.as_u64() {
                *x = Value::from(n + 1);
            }
        }
    }
}

pub fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

pub fn emit(format: Format, v: &Value) {
    match format {
        Format::Json => println!("{v}"),
        Format::Text => match v {
            Value::Object(m) => {
                for (k, x) in m {
                    println!("{k}: {}", text_of(x));
                }
            }
            other => println!("{}", text_of(other)),
        },
    }
}

fn text_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text_of).collect::<Vec<_>>().join(" "),
        Value::Object(m) => m.iter().map(|(k, x)| format!("{k}=[{}]", text_of(x))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
