//! Line-oriented text formats: instances, route lists and Set Cover inputs.
//!
//! Instance files:
//!
//! ```text
//! rca 1
//! directed            # or: undirected
//! n 4
//! e 0 1               # one line per edge, order defines the edge id
//! e 1 3
//! s 0
//! t 3
//! p 2
//! k 0
//! kind walk           # path | trail | walk
//! alpha none          # or a positive length cap
//! ```
//!
//! `#` starts a comment anywhere on a line. Graph-only inputs (for the
//! generators) may stop after the edge lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::instance::{Instance, InstanceError, RouteKind};
use crate::oracle::SetCover;
use crate::route::Route;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at line {line}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| err(line, format!("expected {what}, found `{tok}`")))
}

#[derive(Default)]
struct Fields {
    s: Option<(usize, usize)>,
    t: Option<(usize, usize)>,
    p: Option<(usize, usize)>,
    k: Option<(usize, usize)>,
    kind: Option<(usize, RouteKind)>,
    alpha: Option<(usize, Option<usize>)>,
    last_line: usize,
}

fn parse_raw(text: &str) -> Result<(Graph, Fields), ParseError> {
    let mut lines = content_lines(text);
    let (l1, header) = lines.next().ok_or_else(|| err(1, "empty input, expected `rca 1`"))?;
    if header != ["rca", "1"] {
        return Err(err(l1, "expected header `rca 1`"));
    }
    let (l2, dir) = lines.next().ok_or_else(|| err(l1 + 1, "expected `directed` or `undirected`"))?;
    let directed = match dir.as_slice() {
        ["directed"] => true,
        ["undirected"] => false,
        _ => return Err(err(l2, "expected `directed` or `undirected`")),
    };
    let (l3, nline) = lines.next().ok_or_else(|| err(l2 + 1, "expected `n <vertex count>`"))?;
    let n = match nline.as_slice() {
        ["n", count] => number(l3, count, "vertex count")?,
        _ => return Err(err(l3, "expected `n <vertex count>`")),
    };
    let mut graph = Graph::new(directed, n);
    let mut fields = Fields { last_line: l3, ..Default::default() };
    let mut seen_key = false;
    for (ln, toks) in lines {
        fields.last_line = ln;
        match toks.as_slice() {
            ["e", a, b] => {
                if seen_key {
                    return Err(err(ln, "edge line after instance fields"));
                }
                let a = number(ln, a, "vertex id")?;
                let b = number(ln, b, "vertex id")?;
                graph.add_edge(a, b).map_err(|e| match e {
                    GraphError::SelfLoop(_) => err(ln, "self-loop"),
                    GraphError::VertexOutOfRange { vertex, .. } => err(ln, format!("vertex id {vertex} out of range")),
                    other => err(ln, other.to_string()),
                })?;
            }
            [key @ ("s" | "t" | "p" | "k"), val] => {
                seen_key = true;
                let v = number(ln, val, "nonnegative integer")?;
                let slot = match *key {
                    "s" => &mut fields.s,
                    "t" => &mut fields.t,
                    "p" => &mut fields.p,
                    _ => &mut fields.k,
                };
                if slot.replace((ln, v)).is_some() {
                    return Err(err(ln, format!("duplicate `{key}` line")));
                }
            }
            ["kind", val] => {
                seen_key = true;
                let kind = val.parse::<RouteKind>().map_err(|m| err(ln, m))?;
                if fields.kind.replace((ln, kind)).is_some() {
                    return Err(err(ln, "duplicate `kind` line"));
                }
            }
            ["alpha", val] => {
                seen_key = true;
                let a = if *val == "none" { None } else { Some(number(ln, val, "length cap or `none`")?) };
                if fields.alpha.replace((ln, a)).is_some() {
                    return Err(err(ln, "duplicate `alpha` line"));
                }
            }
            _ => return Err(err(ln, format!("malformed line `{}`", toks.join(" ")))),
        }
    }
    Ok((graph, fields))
}

/// Parses the graph part of an instance file; instance fields are optional.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_raw(text).map(|(g, _)| g)
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let (graph, f) = parse_raw(text)?;
    let end = f.last_line;
    let need = |slot: Option<(usize, usize)>, key: &str| slot.ok_or_else(|| err(end, format!("missing `{key}` line")));
    let (ls, s) = need(f.s, "s")?;
    let (lt, t) = need(f.t, "t")?;
    let (lp, p) = need(f.p, "p")?;
    let (_, k) = need(f.k, "k")?;
    let (_, kind) = f.kind.ok_or_else(|| err(end, "missing `kind` line"))?;
    let (la, alpha) = f.alpha.unwrap_or((end, None));
    Instance::new(graph, s, t, p, k, kind, alpha).map_err(|e| match e {
        InstanceError::TerminalOutOfRange(v) => err(if v == s { ls } else { lt }, e.to_string()),
        InstanceError::SameTerminals => err(lt, e.to_string()),
        InstanceError::NoRoutes => err(lp, e.to_string()),
        InstanceError::ZeroLengthCap => err(la, e.to_string()),
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "rca 1").unwrap();
    writeln!(out, "{}", if g.is_directed() { "directed" } else { "undirected" }).unwrap();
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {}", e.tail, e.head).unwrap();
    }
    out
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = write_graph(&inst.graph);
    writeln!(out, "s {}", inst.source).unwrap();
    writeln!(out, "t {}", inst.sink).unwrap();
    writeln!(out, "p {}", inst.route_count).unwrap();
    writeln!(out, "k {}", inst.budget).unwrap();
    writeln!(out, "kind {}", inst.kind).unwrap();
    match inst.max_length {
        Some(a) => writeln!(out, "alpha {a}").unwrap(),
        None => writeln!(out, "alpha none").unwrap(),
    }
    out
}

/// One route per line: vertex ids separated by spaces, each optionally
/// followed by `@<edge-id>` (attached or as its own token) pinning the copy
/// used for the step that ends at that vertex.
pub fn parse_routes(text: &str) -> Result<Vec<Route>, ParseError> {
    let mut routes = Vec::new();
    for (ln, toks) in content_lines(text) {
        let mut vertices = Vec::new();
        let mut pins: Vec<Option<usize>> = Vec::new();
        for tok in toks {
            let (vpart, pin) = match tok.split_once('@') {
                Some((v, e)) => (v, Some(number(ln, e, "edge id")?)),
                None => (tok, None),
            };
            if !vpart.is_empty() {
                vertices.push(number(ln, vpart, "vertex id")?);
                if vertices.len() > 1 {
                    pins.push(None);
                }
            }
            if let Some(e) = pin {
                match pins.last_mut() {
                    Some(slot @ None) => *slot = Some(e),
                    Some(Some(_)) => return Err(err(ln, "two pins on one step")),
                    None => return Err(err(ln, "pin before the first step")),
                }
            }
        }
        routes.push(Route::with_pins(vertices, pins));
    }
    Ok(routes)
}

/// Writes routes, pinning a step only where the graph has parallel copies
/// for it.
pub fn write_routes(g: &Graph, routes: &[Route]) -> String {
    let mut out = String::new();
    for r in routes {
        let shown = match r.resolve(g) {
            Ok(edges) => {
                let pins = r
                    .vertices()
                    .windows(2)
                    .zip(edges)
                    .map(|(w, e)| (g.edges_between(w[0], w[1]).len() > 1).then_some(e))
                    .collect();
                Route::with_pins(r.vertices().to_vec(), pins)
            }
            Err(_) => r.clone(),
        };
        writeln!(out, "{shown}").unwrap();
    }
    out
}

/// `sc 1`, `n <universe>`, one `f <elem> ...` line per set, `l <budget>`.
/// Elements are 0-based.
pub fn parse_set_cover(text: &str) -> Result<SetCover, ParseError> {
    let mut lines = content_lines(text);
    let (l1, header) = lines.next().ok_or_else(|| err(1, "empty input, expected `sc 1`"))?;
    if header != ["sc", "1"] {
        return Err(err(l1, "expected header `sc 1`"));
    }
    let (l2, nline) = lines.next().ok_or_else(|| err(l1 + 1, "expected `n <universe size>`"))?;
    let universe = match nline.as_slice() {
        ["n", n] => number(l2, n, "universe size")?,
        _ => return Err(err(l2, "expected `n <universe size>`")),
    };
    let mut family = Vec::new();
    let mut budget = None;
    let mut last = l2;
    for (ln, toks) in lines {
        last = ln;
        match toks.as_slice() {
            ["f", elems @ ..] => {
                if budget.is_some() {
                    return Err(err(ln, "set line after budget"));
                }
                let mut set = Vec::with_capacity(elems.len());
                for tok in elems {
                    let x = number(ln, tok, "element")?;
                    if x >= universe {
                        return Err(err(ln, format!("element {x} out of range")));
                    }
                    set.push(x);
                }
                set.sort_unstable();
                set.dedup();
                family.push(set);
            }
            ["l", b] => {
                if budget.replace(number(ln, b, "budget")?).is_some() {
                    return Err(err(ln, "duplicate `l` line"));
                }
            }
            _ => return Err(err(ln, format!("malformed line `{}`", toks.join(" ")))),
        }
    }
    let budget = budget.ok_or_else(|| err(last, "missing `l` line"))?;
    Ok(SetCover { universe, family, budget })
}

pub fn write_set_cover(sc: &SetCover) -> String {
    let mut out = format!("sc 1\nn {}\n", sc.universe);
    for set in &sc.family {
        out.push('f');
        for x in set {
            write!(out, " {x}").unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "l {}", sc.budget).unwrap();
    out
}
