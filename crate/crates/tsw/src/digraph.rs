//! Directed multigraphs, used as inputs to the reduction generators and as
//! the value space of color digraphs.

use crate::error::{Error, Result};

/// Directed multigraph on nodes `0..n`. Parallel arcs and loops are allowed;
/// arc order is preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: Vec<_> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "arc ({u}, {v}) out of range for n = {n}"
                )));
            }
        }
        Ok(Digraph { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(u, _)| u == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, w)| w == v).count()
    }

    /// In-degree equals out-degree at every node.
    pub fn is_balanced(&self) -> bool {
        (0..self.n).all(|v| self.in_degree(v) == self.out_degree(v))
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| u == v)
    }

    pub fn has_two_cycle(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| u != v && self.arcs.contains(&(v, u)))
    }

    /// Arc multiset, sorted; two digraphs are isomorphic up to arc relabeling
    /// iff these compare equal (node labels fixed).
    pub fn sorted_arcs(&self) -> Vec<(usize, usize)> {
        let mut a = self.arcs.clone();
        a.sort_unstable();
        a
    }
}

/// Digraph text format: `dg v1`, `n <nodes> m <arcs>`, then `a <from> <to>`
/// lines. `#` comments allowed.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i, l.split_whitespace().collect()))
        .collect();
    let err = |line, msg: &str| Error::Parse { line, msg: msg.into() };
    let mut it = lines.into_iter();
    let (ln, header) = it.next().ok_or(err(1, "empty digraph input"))?;
    if header != ["dg", "v1"] {
        return Err(err(ln, "expected header 'dg v1'"));
    }
    let (ln, size) = it.next().ok_or(err(ln, "missing size line"))?;
    if size.len() != 4 || size[0] != "n" || size[2] != "m" {
        return Err(err(ln, "expected 'n <nodes> m <arcs>'"));
    }
    let n: usize = size[1].parse().map_err(|_| err(ln, "bad node count"))?;
    let m: usize = size[3].parse().map_err(|_| err(ln, "bad arc count"))?;
    let mut arcs = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, a) = it.next().ok_or(err(ln, "missing arc line"))?;
        if a.len() != 3 || a[0] != "a" {
            return Err(err(ln, "expected 'a <from> <to>'"));
        }
        let u: usize = a[1].parse().map_err(|_| err(ln, "bad arc endpoint"))?;
        let v: usize = a[2].parse().map_err(|_| err(ln, "bad arc endpoint"))?;
        arcs.push((u, v));
    }
    Digraph::new(n, arcs)
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("dg v1\nn {} m {}\n", d.n(), d.arcs().len());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("a {u} {v}\n"));
    }
    out
}
