//! Line-oriented text formats for instances and solutions.
//!
//! Instance format (`#` starts a comment, blank lines ignored):
//!
//! ```text
//! tsw v1 <variant>          # variant in {ts, cts, sts}
//! n <vertex-count> m <edge-count>
//! e <u> <v>                 # m edge lines
//! t <token> <dest>          # ts: n lines
//! c <vertex> <vcolor> <tcolor>   # cts: n lines
//! d <token> <k> <dest...>   # sts: n lines
//! budget <l>                # optional, emitted by generators
//! ```
//!
//! Solution format:
//!
//! ```text
//! sol <length>
//! s <u> <v>                 # one line per swap
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, SwapSequence, Variant};

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line: line + 1, msg: msg.into() }
}

pub(crate) struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i, l.split_whitespace().collect()))
            .collect();
        Lines { items, pos: 0 }
    }

    pub(crate) fn next(&mut self) -> Option<&(usize, Vec<&'a str>)> {
        let item = self.items.get(self.pos);
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    pub(crate) fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| parse_err(line, format!("expected a number, got '{s}'")))
}

/// Parsed instance plus the optional `budget` trailer.
#[derive(Debug)]
pub struct ParsedInstance {
    pub instance: Instance,
    pub variant: Variant,
    pub budget: Option<u64>,
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance> {
    let mut lines = Lines::new(text);
    parse_instance_lines(&mut lines)
}

fn parse_instance_lines(lines: &mut Lines) -> Result<ParsedInstance> {
    let (ln, header) = lines.next().ok_or(parse_err(0, "empty input"))?.clone();
    if header.len() != 3 || header[0] != "tsw" || header[1] != "v1" {
        return Err(parse_err(ln, "expected header 'tsw v1 <variant>'"));
    }
    let variant = match header[2] {
        "ts" => Variant::Ts,
        "cts" => Variant::Cts,
        "sts" => Variant::Sts,
        other => return Err(parse_err(ln, format!("unknown variant '{other}'"))),
    };

    let (ln, size) = lines.next().ok_or(parse_err(ln, "missing size line"))?.clone();
    if size.len() != 4 || size[0] != "n" || size[2] != "m" {
        return Err(parse_err(ln, "expected 'n <vertex-count> m <edge-count>'"));
    }
    let n: usize = parse_num(ln, size[1])?;
    let m: usize = parse_num(ln, size[3])?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, e) = lines.next().ok_or(parse_err(ln, "missing edge line"))?.clone();
        if e.len() != 3 || e[0] != "e" {
            return Err(parse_err(ln, "expected 'e <u> <v>'"));
        }
        edges.push((parse_num(ln, e[1])?, parse_num(ln, e[2])?));
    }
    let graph = Graph::new(n, edges)?;

    let instance = match variant {
        Variant::Ts => {
            let mut dest = vec![usize::MAX; n];
            for _ in 0..n {
                let (ln, t) = lines.next().ok_or(parse_err(ln, "missing token line"))?.clone();
                if t.len() != 3 || t[0] != "t" {
                    return Err(parse_err(ln, "expected 't <token> <dest>'"));
                }
                let tok: usize = parse_num(ln, t[1])?;
                if tok >= n || dest[tok] != usize::MAX {
                    return Err(parse_err(ln, format!("bad or repeated token {tok}")));
                }
                dest[tok] = parse_num(ln, t[2])?;
            }
            Instance::new_ts(graph, dest)?
        }
        Variant::Cts => {
            let mut vc = vec![u32::MAX; n];
            let mut tc = vec![u32::MAX; n];
            for _ in 0..n {
                let (ln, c) = lines.next().ok_or(parse_err(ln, "missing color line"))?.clone();
                if c.len() != 4 || c[0] != "c" {
                    return Err(parse_err(ln, "expected 'c <vertex> <vcolor> <tcolor>'"));
                }
                let v: usize = parse_num(ln, c[1])?;
                if v >= n || vc[v] != u32::MAX {
                    return Err(parse_err(ln, format!("bad or repeated vertex {v}")));
                }
                vc[v] = parse_num(ln, c[2])?;
                tc[v] = parse_num(ln, c[3])?;
            }
            Instance::new_cts(graph, vc, tc)?
        }
        Variant::Sts => {
            let mut dests: Vec<Option<Vec<usize>>> = vec![None; n];
            for _ in 0..n {
                let (ln, d) = lines.next().ok_or(parse_err(ln, "missing destination line"))?.clone();
                if d.len() < 3 || d[0] != "d" {
                    return Err(parse_err(ln, "expected 'd <token> <k> <dest...>'"));
                }
                let tok: usize = parse_num(ln, d[1])?;
                let k: usize = parse_num(ln, d[2])?;
                if tok >= n || dests[tok].is_some() {
                    return Err(parse_err(ln, format!("bad or repeated token {tok}")));
                }
                if d.len() != 3 + k {
                    return Err(parse_err(ln, format!("expected {k} destinations")));
                }
                let set: Result<Vec<usize>> = d[3..].iter().map(|s| parse_num(ln, s)).collect();
                dests[tok] = Some(set?);
            }
            let dests = dests.into_iter().map(|d| d.unwrap()).collect();
            Instance::new_sts(graph, dests)?
        }
    };

    let mut budget = None;
    if let Some((ln, l)) = lines.peek().cloned() {
        if l[0] == "budget" {
            if l.len() != 2 {
                return Err(parse_err(ln, "expected 'budget <l>'"));
            }
            budget = Some(parse_num(ln, l[1])?);
            lines.next();
        }
    }

    Ok(ParsedInstance { instance, variant, budget })
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let variant = inst.variant();
    let n = inst.n();
    out.push_str(&format!("tsw v1 {}\n", variant.as_str()));
    out.push_str(&format!("n {} m {}\n", n, inst.graph().edges().len()));
    for &(u, v) in inst.graph().edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    match variant {
        Variant::Ts => {
            for t in 0..n {
                out.push_str(&format!("t {} {}\n", t, inst.ts_dest(t)));
            }
        }
        Variant::Cts => {
            let colors = inst.colors().expect("cts has colors");
            for v in 0..n {
                out.push_str(&format!(
                    "c {} {} {}\n",
                    v, colors.vertex_colors[v], colors.token_colors[v]
                ));
            }
        }
        Variant::Sts => {
            for t in 0..n {
                let set = inst.dests(t);
                out.push_str(&format!("d {} {}", t, set.len()));
                for d in set {
                    out.push_str(&format!(" {d}"));
                }
                out.push('\n');
            }
        }
    }
    out
}

pub fn parse_solution(text: &str) -> Result<SwapSequence> {
    let mut lines = Lines::new(text);
    parse_solution_lines(&mut lines)
}

fn parse_solution_lines(lines: &mut Lines) -> Result<SwapSequence> {
    let (ln, header) = lines.next().ok_or(parse_err(0, "empty solution"))?.clone();
    if header.len() != 2 || header[0] != "sol" {
        return Err(parse_err(ln, "expected 'sol <length>'"));
    }
    let len: usize = parse_num(ln, header[1])?;
    let mut swaps = Vec::with_capacity(len);
    for _ in 0..len {
        let (ln, s) = lines.next().ok_or(parse_err(ln, "missing swap line"))?.clone();
        if s.len() != 3 || s[0] != "s" {
            return Err(parse_err(ln, "expected 's <u> <v>'"));
        }
        swaps.push((parse_num(ln, s[1])?, parse_num(ln, s[2])?));
    }
    Ok(SwapSequence::new(swaps))
}

pub fn serialize_solution(s: &SwapSequence) -> String {
    let mut out = format!("sol {}\n", s.len());
    for &(u, v) in s.swaps() {
        out.push_str(&format!("s {u} {v}\n"));
    }
    out
}

/// A stream holding an instance optionally followed by a solution, as
/// produced by `tsw gen ... | tsw verify -` pipelines.
pub struct ParsedStream {
    pub instance: ParsedInstance,
    pub solution: Option<SwapSequence>,
}

pub fn parse_stream(text: &str) -> Result<ParsedStream> {
    let mut lines = Lines::new(text);
    let instance = parse_instance_lines(&mut lines)?;
    let solution = if lines.peek().is_some() {
        Some(parse_solution_lines(&mut lines)?)
    } else {
        None
    };
    Ok(ParsedStream { instance, solution })
}
