use std::fs;

use clawsquare::generators::{compose_strips, named_instance, NAMED_INSTANCES};
use clawsquare::io::{parse_any_multigraph, parse_interval_rep, parse_scheme};
use clawsquare::{Multigraph, SimpleGraph};

use crate::Failure;

fn first_token(text: &str) -> Option<&str> {
    text.lines()
        .find_map(|l| l.split('#').next().unwrap_or("").split_whitespace().next())
}

fn read(src: &str) -> Result<String, Failure> {
    fs::read_to_string(src).map_err(|e| Failure::Usage(format!("cannot read `{src}`: {e}")))
}

/// A named instance, or a file holding a graph, multigraph, interval
/// representation or composition scheme. Multigraph files with parallel
/// edges need `line`.
pub fn load_graph(src: &str, line: bool) -> Result<SimpleGraph, Failure> {
    if NAMED_INSTANCES.contains(&src) {
        let g = named_instance(src)?;
        return Ok(if line {
            Multigraph::from_simple(&g).line_graph().graph
        } else {
            g
        });
    }
    let text = read(src)?;
    let g = match first_token(&text) {
        Some("circular") | Some("linear") => parse_interval_rep(&text)?.realize(),
        Some("scheme") => compose_strips(&parse_scheme(&text)?)?.graph,
        _ => {
            let f = parse_any_multigraph(&text)?;
            if line {
                return Ok(f.line_graph().graph);
            }
            if f.pairs().any(|(_, k)| k > 1) {
                return Err(Failure::Usage(format!(
                    "`{src}` has parallel edges; pass --line for its line graph"
                )));
            }
            f.underlying_simple()
        }
    };
    Ok(if line {
        Multigraph::from_simple(&g).line_graph().graph
    } else {
        g
    })
}

pub fn load_multigraph(src: &str) -> Result<Multigraph, Failure> {
    if NAMED_INSTANCES.contains(&src) {
        return Ok(Multigraph::from_simple(&named_instance(src)?));
    }
    Ok(parse_any_multigraph(&read(src)?)?)
}

pub fn load_text(src: &str) -> Result<String, Failure> {
    read(src)
}
