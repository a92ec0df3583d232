//! Line-oriented text formats. Tokens are whitespace separated and `#`
//! starts a comment that runs to the end of the line.
//!
//! ```text
//! # simple graph        # multigraph          # interval rep
//! 4 3                   2 1                   circular 10
//! 0 1                   0 1 3                 v 0 0
//! 1 2                                         v 1 2
//! 2 3                                         interval 0 2
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::{CompositionScheme, EndSide, EndSymbol, IntervalKind, IntervalRep, Strip};
use crate::graph::{Coloring, Multigraph, SimpleGraph};

/// Non-empty lines with comments removed, as `(line number, tokens)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn num<T: FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a number, found `{tok}`")))
}

fn expect_len(line: usize, tokens: &[&str], len: usize) -> Result<()> {
    if tokens.len() == len {
        Ok(())
    } else {
        Err(parse_err(
            line,
            format!("expected {len} fields, found {}", tokens.len()),
        ))
    }
}

/// Header `n m` followed by exactly `m` records of `width` numbers.
fn parse_records(text: &str, width: usize) -> Result<(usize, Vec<(usize, Vec<usize>)>)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    expect_len(hl, &header, 2)?;
    let n: usize = num(hl, header[0])?;
    let m: usize = num(hl, header[1])?;
    let mut records = Vec::with_capacity(m);
    for (line, tokens) in lines {
        expect_len(line, &tokens, width)?;
        let values = tokens.iter().map(|t| num(line, t)).collect::<Result<Vec<usize>>>()?;
        if values[0] >= n || values[1] >= n {
            return Err(parse_err(line, format!("vertex out of range for n = {n}")));
        }
        records.push((line, values));
    }
    if records.len() != m {
        return Err(parse_err(
            hl,
            format!("header announces {m} records, found {}", records.len()),
        ));
    }
    Ok((n, records))
}

/// Parses the simple-graph format; every pair must satisfy `u < v` and
/// appear once.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let (n, records) = parse_records(text, 2)?;
    let mut seen = std::collections::BTreeSet::new();
    for (line, r) in &records {
        if r[0] >= r[1] {
            return Err(parse_err(*line, format!("edge {} {} must have u < v", r[0], r[1])));
        }
        if !seen.insert((r[0], r[1])) {
            return Err(parse_err(*line, format!("duplicate edge {} {}", r[0], r[1])));
        }
    }
    SimpleGraph::from_edges(n, records.iter().map(|(_, r)| (r[0], r[1])))
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let (n, records) = parse_records(text, 3)?;
    let line_of = |u: usize, v: usize| {
        records
            .iter()
            .find(|(_, r)| (r[0].min(r[1]), r[0].max(r[1])) == (u.min(v), u.max(v)))
            .map_or(1, |(l, _)| *l)
    };
    Multigraph::from_multiplicities(n, records.iter().map(|(_, r)| (r[0], r[1], r[2]))).map_err(|e| match e {
        Error::SelfLoop(u) => parse_err(line_of(u, u), format!("self-loop at {u}")),
        Error::DuplicateEdge(u, v) => parse_err(line_of(u, v), format!("duplicate pair {u} {v}")),
        Error::ZeroMultiplicity(u, v) => parse_err(line_of(u, v), format!("zero multiplicity on {u} {v}")),
        other => other,
    })
}

pub fn write_multigraph(f: &Multigraph) -> String {
    let mut out = format!("{} {}\n", f.n(), f.pair_count());
    for ((u, v), k) in f.pairs() {
        let _ = writeln!(out, "{u} {v} {k}");
    }
    out
}

/// Reads either format: three-field records make a multigraph, two-field
/// records a simple graph (as a multigraph with unit multiplicities).
pub fn parse_any_multigraph(text: &str) -> Result<Multigraph> {
    let width = content_lines(text).nth(1).map(|(_, t)| t.len());
    match width {
        Some(2) => Ok(Multigraph::from_simple(&parse_graph(text)?)),
        _ => parse_multigraph(text),
    }
}

fn parse_rep_lines<'a, I>(lines: &mut std::iter::Peekable<I>, stop: &[&str]) -> Result<IntervalRep>
where
    I: Iterator<Item = (usize, Vec<&'a str>)>,
{
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `circular P` or `linear` header"))?;
    let kind = match header.as_slice() {
        ["circular", p] => IntervalKind::Circular { period: num(hl, p)? },
        ["linear"] => IntervalKind::Linear,
        _ => return Err(parse_err(hl, "expected `circular P` or `linear`")),
    };
    let mut positions: Vec<Option<i64>> = Vec::new();
    let mut intervals = Vec::new();
    while let Some((line, tokens)) = lines.peek() {
        let line = *line;
        if stop.contains(&tokens[0]) {
            break;
        }
        match tokens.as_slice() {
            ["v", v, p] => {
                let v: usize = num(line, v)?;
                if v >= positions.len() {
                    positions.resize(v + 1, None);
                }
                if positions[v].replace(num(line, p)?).is_some() {
                    return Err(parse_err(line, format!("vertex {v} positioned twice")));
                }
            }
            ["interval", s, e] => intervals.push((num(line, s)?, num(line, e)?)),
            _ => return Err(parse_err(line, "expected `v <vertex> <point>` or `interval <s> <e>`")),
        }
        lines.next();
    }
    let positions = positions
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| parse_err(hl, format!("vertex {v} has no position"))))
        .collect::<Result<Vec<_>>>()?;
    IntervalRep::new(kind, positions, intervals)
}

pub fn parse_interval_rep(text: &str) -> Result<IntervalRep> {
    let mut lines = content_lines(text).peekable();
    let rep = parse_rep_lines(&mut lines, &[])?;
    Ok(rep)
}

pub fn write_interval_rep(rep: &IntervalRep) -> String {
    let mut out = match rep.kind() {
        IntervalKind::Circular { period } => format!("circular {period}\n"),
        IntervalKind::Linear => "linear\n".to_string(),
    };
    for (v, p) in rep.positions().iter().enumerate() {
        let _ = writeln!(out, "v {v} {p}");
    }
    for (s, e) in rep.intervals() {
        let _ = writeln!(out, "interval {s} {e}");
    }
    out
}

fn parse_symbol(line: usize, tok: &str) -> Result<EndSymbol> {
    let side = match tok.chars().next() {
        Some('a') => EndSide::A,
        Some('b') => EndSide::B,
        _ => {
            return Err(parse_err(
                line,
                format!("expected end symbol like a0 or b2, found `{tok}`"),
            ))
        }
    };
    Ok(EndSymbol {
        strip: num(line, &tok[1..])?,
        side,
    })
}

/// Scheme format: `scheme k`, one `clique` line per base clique listing end
/// symbols (`a0`, `b3`, ...), then `k` blocks `strip i` / linear rep /
/// `ends a b` / `end`.
pub fn parse_scheme(text: &str) -> Result<CompositionScheme> {
    let mut lines = content_lines(text).peekable();
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `scheme k` header"))?;
    let k: usize = match header.as_slice() {
        ["scheme", k] => num(hl, k)?,
        _ => return Err(parse_err(hl, "expected `scheme k`")),
    };
    let mut base_cliques = Vec::new();
    while let Some((line, tokens)) = lines.peek() {
        if tokens[0] != "clique" {
            break;
        }
        let line = *line;
        base_cliques.push(
            tokens[1..]
                .iter()
                .map(|t| parse_symbol(line, t))
                .collect::<Result<Vec<_>>>()?,
        );
        lines.next();
    }
    let mut strips: Vec<Option<Strip>> = vec![None; k];
    while let Some((line, tokens)) = lines.next() {
        let i: usize = match tokens.as_slice() {
            ["strip", i] => num(line, i)?,
            _ => return Err(parse_err(line, "expected `strip i`")),
        };
        if i >= k {
            return Err(parse_err(line, format!("strip {i} out of range for k = {k}")));
        }
        let rep = parse_rep_lines(&mut lines, &["ends", "end"])?;
        let (el, ends) = lines
            .next()
            .ok_or_else(|| parse_err(line, "strip block missing `ends a b`"))?;
        let (a, b) = match ends.as_slice() {
            ["ends", a, b] => (num(el, a)?, num(el, b)?),
            _ => return Err(parse_err(el, "expected `ends a b`")),
        };
        match lines.next() {
            Some((_, t)) if t.as_slice() == ["end"] => {}
            Some((l, _)) => return Err(parse_err(l, "expected `end`")),
            None => return Err(parse_err(el, "strip block missing `end`")),
        }
        let strip = Strip::with_ends(rep, a, b).map_err(|e| parse_err(line, e.to_string()))?;
        if strips[i].replace(strip).is_some() {
            return Err(parse_err(line, format!("strip {i} defined twice")));
        }
    }
    let strips = strips
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| parse_err(hl, format!("strip {i} missing"))))
        .collect::<Result<Vec<_>>>()?;
    let scheme = CompositionScheme { base_cliques, strips };
    scheme.validate()?;
    Ok(scheme)
}

pub fn write_scheme(scheme: &CompositionScheme) -> String {
    let mut out = format!("scheme {}\n", scheme.k());
    for clique in &scheme.base_cliques {
        out.push_str("clique");
        for sym in clique {
            let side = if sym.side == EndSide::A { 'a' } else { 'b' };
            let _ = write!(out, " {side}{}", sym.strip);
        }
        out.push('\n');
    }
    for (i, strip) in scheme.strips.iter().enumerate() {
        let _ = writeln!(out, "strip {i}");
        out.push_str(&write_interval_rep(&strip.rep));
        let _ = writeln!(out, "ends {} {}\nend", strip.a, strip.b);
    }
    out
}

pub fn write_coloring(coloring: &Coloring, method: &str) -> String {
    let mut out = String::new();
    for (v, c) in coloring.iter() {
        if let Some(c) = c {
            let _ = writeln!(out, "{v} {c}");
        }
    }
    let _ = writeln!(out, "colors {} method {method}", coloring.colors_used());
    out
}

/// Parses `v c` lines and the trailing summary, returning the colouring on
/// `n` vertices and the method name.
pub fn parse_coloring(text: &str, n: usize) -> Result<(Coloring, String)> {
    let mut coloring = Coloring::uncolored(n);
    let mut method = None;
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["colors", k, "method", m] => {
                let k: usize = num(line, k)?;
                method = Some(m.to_string());
                if k != coloring.colors_used() {
                    return Err(parse_err(
                        line,
                        format!("summary claims {k} colours, found {}", coloring.colors_used()),
                    ));
                }
            }
            [v, c] => {
                let v: usize = num(line, v)?;
                if v >= n {
                    return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
                }
                coloring.set(v, num(line, c)?);
            }
            _ => return Err(parse_err(line, "expected `v c` or `colors k method m`")),
        }
    }
    let method = method.ok_or_else(|| parse_err(1, "missing `colors k method m` summary"))?;
    Ok((coloring, method))
}
