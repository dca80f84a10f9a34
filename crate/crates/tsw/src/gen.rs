//! Hardness-reduction instance generators with budget-exact certificates.
//!
//! Each generator consumes a source problem (a digraph, a set system, or a
//! multicolored subgraph-isomorphism instance), emits a swapping instance
//! together with a budget, and — when a solution of the source problem is
//! supplied — a certificate sequence whose length equals the budget exactly.
//! Vertex ids are assigned gadget-major, role-minor, so output is
//! byte-reproducible.
//!
//! Companion text formats (all `#`-comment friendly, whitespace separated):
//!
//! * MSI (multicolored subgraph isomorphism): `msi v1`, `k <k> t <t>`,
//!   pattern edges `p i j`, host edges `h i hi j hj`; class `i` holds host
//!   vertices `(i,0) .. (i,t-1)`.
//! * MSI solution: `phi v1`, then `m i h` picking host vertex `h` in class
//!   `i`.
//! * X3C (exact cover by 3-sets): `x3c v1`, `n <n>`, then `n` lines
//!   `s a b c` with element indices in `0..n`.
//! * X3C cover: `cover v1`, then `c j` lines with chosen set indices.
//! * Hamiltonian cycle: `cycle v1`, then `v i` lines in cycle order.
//! * Triangle decomposition: `tri v1`, then `t a b c` lines of arc indices
//!   in cyclic order.

use crate::colored;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::format::{parse_err, parse_num, Lines};
use crate::graph::Graph;
use crate::instance::{Configuration, Instance, SwapSequence};

/// A generated instance: start configuration, budget, and (optionally) a
/// certificate of length exactly equal to the budget.
#[derive(Debug, Clone)]
pub struct Generated {
    pub instance: Instance,
    pub start: Configuration,
    pub budget: u64,
    pub certificate: Option<SwapSequence>,
    pub provenance: Provenance,
}

/// Source problem and parameters an instance was generated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub source: &'static str,
    pub params: Vec<(&'static str, u64)>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidGeneratorInput(msg.into())
}

// ---------------------------------------------------------------------------
// linker gadget

/// One linker gadget `L_{a,b}`, as a standalone graph fragment.
///
/// Role index sets refer to vertices of `graph`, ids `0..a*(b+2)`:
/// finishing set (left to right), starting path (left to right), and `b`
/// private paths of `a` vertices each. Local tokens start on the finishing
/// set and are destined for the starting path position-wise
/// (`local_dests`); tokens on the private paths are well-placed; the
/// starting path holds the global-token slots whose destinations live in
/// other gadgets.
#[derive(Debug, Clone)]
pub struct LinkerFragment {
    pub graph: Graph,
    pub finishing: Vec<usize>,
    pub starting: Vec<usize>,
    pub private_paths: Vec<Vec<usize>>,
    /// `(finishing vertex, starting vertex)` per local token.
    pub local_dests: Vec<(usize, usize)>,
}

/// Build the linker gadget `L_{a,b}`: each finishing vertex is adjacent to
/// the private column below it, and the leftmost starting-path vertex is
/// adjacent to every rightmost private vertex.
pub fn gen_linker(a: usize, b: usize) -> Result<LinkerFragment> {
    if a < 1 || b < 1 {
        return Err(bad("linker gadget needs a >= 1 and b >= 1"));
    }
    let finishing: Vec<usize> = (0..a).collect();
    let starting: Vec<usize> = (a..2 * a).collect();
    let private_paths: Vec<Vec<usize>> =
        (0..b).map(|h| (0..a).map(|p| 2 * a + a * h + p).collect()).collect();

    let mut edges = Vec::new();
    for w in starting.windows(2) {
        edges.push((w[0], w[1]));
    }
    for path in &private_paths {
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        for p in 0..a {
            edges.push((finishing[p], path[p]));
        }
        edges.push((starting[0], path[a - 1]));
    }
    let graph = Graph::new(a * (b + 2), edges)?;
    let local_dests = finishing.iter().copied().zip(starting.iter().copied()).collect();
    Ok(LinkerFragment { graph, finishing, starting, private_paths, local_dests })
}

// ---------------------------------------------------------------------------
// multicolored subgraph isomorphism -> token swapping (parameter k)

/// Host graph with `k` size-`t` color classes plus a 3-regular pattern on
/// the classes. Host vertex `(i, h)` is the `h`-th vertex of class `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsiInstance {
    pub k: usize,
    pub t: usize,
    /// Pattern edges over `0..k`.
    pub pattern_edges: Vec<(usize, usize)>,
    /// Host edges `((i, hi), (j, hj))` across distinct classes.
    pub host_edges: Vec<((usize, usize), (usize, usize))>,
}

impl MsiInstance {
    fn pattern_neighbors(&self, i: usize) -> Vec<usize> {
        let mut nb: Vec<usize> = self
            .pattern_edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }

    fn has_host_edge(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        self.host_edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k % 2 != 0 {
            return Err(bad("k must be positive and even"));
        }
        if self.t == 0 {
            return Err(bad("t must be positive"));
        }
        let mut pattern = std::collections::BTreeSet::new();
        for &(i, j) in &self.pattern_edges {
            if i >= self.k || j >= self.k || i == j {
                return Err(bad(format!("bad pattern edge ({i}, {j})")));
            }
            pattern.insert((i.min(j), i.max(j)));
        }
        if pattern.len() != self.pattern_edges.len() {
            return Err(bad("duplicate pattern edge"));
        }
        for i in 0..self.k {
            if self.pattern_neighbors(i).len() != 3 {
                return Err(bad(format!("pattern is not 3-regular at vertex {i}")));
            }
        }
        let mut seen_class_pairs = std::collections::BTreeSet::new();
        for &((i, hi), (j, hj)) in &self.host_edges {
            if i >= self.k || j >= self.k || hi >= self.t || hj >= self.t {
                return Err(bad("host edge endpoint out of range"));
            }
            if i == j {
                return Err(bad("host edge within a color class"));
            }
            if !pattern.contains(&(i.min(j), i.max(j))) {
                return Err(bad(format!(
                    "host edge between classes {i} and {j} without a pattern edge"
                )));
            }
            seen_class_pairs.insert((i.min(j), i.max(j)));
        }
        if seen_class_pairs.len() != pattern.len() {
            return Err(bad("some pattern edge has an empty host edge set E(V_i, V_j)"));
        }
        Ok(())
    }
}

/// Reduce MSI to plain token swapping with budget `16.5k` by gluing one
/// `L_{3,t}` linker per color class; private columns are wired across
/// gadgets exactly along host edges. When `phi` (a choice of one host
/// vertex per class, forming an MSI solution) is supplied, the certificate
/// is the intended 12-swaps-per-gadget routing plus `3k/2` cross swaps and
/// `3k` placement swaps.
pub fn gen_w1_instance(msi: &MsiInstance, phi: Option<&[usize]>) -> Result<Generated> {
    msi.validate()?;
    let (k, t) = (msi.k, msi.t);
    let width = 3 * (t + 2); // vertices per gadget
    let n = width * k;

    // per gadget i: a_p = base+p, b_p = base+3+p, u(h,p) = base+6+3h+p
    let base = |i: usize| i * width;
    let a = |i: usize, p: usize| base(i) + p;
    let b = |i: usize, p: usize| base(i) + 3 + p;
    let u = |i: usize, h: usize, p: usize| base(i) + 6 + 3 * h + p;

    // sorted pattern neighbors per class; pos[i][j] = column of class j in
    // gadget i
    let neighbors: Vec<Vec<usize>> = (0..k).map(|i| msi.pattern_neighbors(i)).collect();
    let pos = |i: usize, j: usize| neighbors[i].iter().position(|&x| x == j).unwrap();

    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((b(i, 0), b(i, 1)));
        edges.push((b(i, 1), b(i, 2)));
        for h in 0..t {
            edges.push((u(i, h, 0), u(i, h, 1)));
            edges.push((u(i, h, 1), u(i, h, 2)));
            for p in 0..3 {
                edges.push((a(i, p), u(i, h, p)));
            }
            edges.push((b(i, 0), u(i, h, 2)));
        }
    }
    for &((i, hi), (j, hj)) in &msi.host_edges {
        edges.push((u(i, hi, pos(i, j)), u(j, hj, pos(j, i))));
    }
    let graph = Graph::new(n, edges)?;

    let mut dest: Vec<usize> = (0..n).collect();
    for i in 0..k {
        for p in 0..3 {
            let j = neighbors[i][p];
            dest[a(i, p)] = b(i, p); // local(i, j_p)
            dest[b(i, p)] = a(j, pos(j, i)); // global(i, j_p)
        }
    }
    let instance = Instance::new_ts(graph, dest)?;

    let certificate = match phi {
        None => None,
        Some(phi) => {
            if phi.len() != k || phi.iter().any(|&h| h >= t) {
                return Err(bad("phi must pick one host vertex per class"));
            }
            for &(i, j) in &msi.pattern_edges {
                if !msi.has_host_edge((i, phi[i]), (j, phi[j])) {
                    return Err(bad(format!(
                        "phi is not an MSI solution: classes {i}, {j} unmatched"
                    )));
                }
            }
            let mut seq = SwapSequence::default();
            for i in 0..k {
                let h = phi[i];
                // local j_3, then j_2, then j_1, through private path h
                for p in (0..3).rev() {
                    seq.push(a(i, p), u(i, h, p));
                    for q in p..2 {
                        seq.push(u(i, h, q), u(i, h, q + 1));
                    }
                    seq.push(u(i, h, 2), b(i, 0));
                    for q in 0..p {
                        seq.push(b(i, q), b(i, q + 1));
                    }
                }
            }
            // cross swaps, one per pattern edge
            for i in 0..k {
                for &j in &neighbors[i] {
                    if i < j {
                        seq.push(u(i, phi[i], pos(i, j)), u(j, phi[j], pos(j, i)));
                    }
                }
            }
            // placement swaps, one per (class, neighbor) pair
            for i in 0..k {
                for &j in &neighbors[i] {
                    seq.push(u(i, phi[i], pos(i, j)), a(i, pos(i, j)));
                }
            }
            Some(seq)
        }
    };

    Ok(Generated {
        instance,
        start: Configuration::identity(n),
        budget: 33 * k as u64 / 2,
        certificate,
        provenance: Provenance {
            source: "msi",
            params: vec![("k", k as u64), ("t", t as u64)],
        },
    })
}

// ---------------------------------------------------------------------------
// exact cover by 3-sets -> token swapping on an almost-tree (parameter fvs)

/// A family of `n` 3-element subsets of `{0..n}`, each element occurring in
/// exactly three sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    pub n: usize,
    pub sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n % 3 != 0 {
            return Err(bad("n must be a positive multiple of 3"));
        }
        if self.sets.len() != self.n {
            return Err(bad(format!("expected {} sets, got {}", self.n, self.sets.len())));
        }
        let mut occurrences = vec![0usize; self.n];
        for set in &self.sets {
            for &x in set {
                if x >= self.n {
                    return Err(bad(format!("element {x} out of range")));
                }
                occurrences[x] += 1;
            }
            if set[0] == set[1] || set[0] == set[2] || set[1] == set[2] {
                return Err(bad("set elements must be distinct"));
            }
        }
        if let Some(x) = occurrences.iter().position(|&c| c != 3) {
            return Err(bad(format!("element {x} occurs {} times, not 3", occurrences[x])));
        }
        Ok(())
    }

    /// `(set, slot)` pairs holding element `x`, ascending; always 3 of them.
    fn occurrences(&self, x: usize) -> Vec<(usize, usize)> {
        let mut occ = Vec::with_capacity(3);
        for (j, set) in self.sets.iter().enumerate() {
            for (s, &y) in set.iter().enumerate() {
                if y == x {
                    occ.push((j, s));
                }
            }
        }
        occ
    }
}

/// Reduce X3C to token swapping on a graph that is a tree plus one apex:
/// one 10-vertex set gadget per set (a 7-vertex spine holding four gray
/// tokens in a 4-cycle and three fixed black tokens, plus three element
/// vertices), and an apex adjacent to every element vertex and every spine
/// head. Budget `35n/3`. A supplied exact cover yields a certificate that
/// rotates the gray tokens via the apex in cover gadgets (11 swaps each,
/// interleaved with two happy element swaps per element) and internally
/// elsewhere (9 swaps each).
pub fn gen_almost_tree(x3c: &X3cInstance, cover: Option<&[usize]>) -> Result<Generated> {
    x3c.validate()?;
    let n = x3c.n;
    let total = 10 * n + 1;
    let apex = 10 * n;

    // gadget j: spine base..base+6 (gray on even offsets), element
    // vertices base+7..base+9 hanging off spine offsets 2, 4, 6
    let spine = |j: usize, q: usize| 10 * j + q;
    let elem = |j: usize, s: usize| 10 * j + 7 + s;

    let mut edges = Vec::new();
    for j in 0..n {
        for q in 0..6 {
            edges.push((spine(j, q), spine(j, q + 1)));
        }
        for s in 0..3 {
            edges.push((elem(j, s), spine(j, 2 * (s + 1))));
            edges.push((apex, elem(j, s)));
        }
        edges.push((apex, spine(j, 0)));
    }
    let graph = Graph::new(total, edges)?;

    let mut dest: Vec<usize> = (0..total).collect();
    for j in 0..n {
        // gray 4-cycle along the even spine positions
        for q in 0..4 {
            dest[spine(j, 2 * q)] = spine(j, 2 * ((q + 1) % 4));
        }
    }
    for x in 0..n {
        let occ = x3c.occurrences(x);
        for o in 0..3 {
            let (j, s) = occ[o];
            let (nj, ns) = occ[(o + 1) % 3];
            dest[elem(j, s)] = elem(nj, ns);
        }
    }
    let instance = Instance::new_ts(graph, dest)?;

    let certificate = match cover {
        None => None,
        Some(cover) => {
            let mut chosen: Vec<usize> = cover.to_vec();
            chosen.sort_unstable();
            chosen.dedup();
            if chosen.len() != n / 3 || chosen.iter().any(|&j| j >= n) {
                return Err(bad(format!("cover must pick {} distinct sets", n / 3)));
            }
            let mut covered = vec![false; n];
            for &j in &chosen {
                for &x in &x3c.sets[j] {
                    if covered[x] {
                        return Err(bad(format!("element {x} covered twice")));
                    }
                    covered[x] = true;
                }
            }
            // 3 * (n/3) sets cover all n elements exactly once
            debug_assert!(covered.iter().all(|&c| c));

            let in_cover = |j: usize| chosen.binary_search(&j).is_ok();
            let mut seq = SwapSequence::default();
            for &j in &chosen {
                // gray rotation via the apex, each element token pausing on
                // the apex long enough for two happy swaps with its other
                // occurrences
                seq.push(spine(j, 0), apex);
                for s in 0..3 {
                    seq.push(apex, elem(j, s));
                    seq.push(elem(j, s), spine(j, 2 * (s + 1)));
                    let occ = x3c.occurrences(x3c.sets[j][s]);
                    let o = occ.iter().position(|&p| p == (j, s)).unwrap();
                    for step in 1..3 {
                        let (oj, os) = occ[(o + step) % 3];
                        seq.push(apex, elem(oj, os));
                    }
                    seq.push(elem(j, s), apex);
                }
                seq.push(apex, spine(j, 0));
            }
            for j in (0..n).filter(|&j| !in_cover(j)) {
                // internal gray rotation: walk the far gray token down the
                // spine, then one placing swap for each of the other three
                for q in (0..6).rev() {
                    seq.push(spine(j, q), spine(j, q + 1));
                }
                for q in [1, 3, 5] {
                    seq.push(spine(j, q), spine(j, q + 1));
                }
            }
            Some(seq)
        }
    };

    Ok(Generated {
        instance,
        start: Configuration::identity(total),
        budget: 35 * n as u64 / 3,
        certificate,
        provenance: Provenance { source: "x3c", params: vec![("n", n as u64)] },
    })
}

// ---------------------------------------------------------------------------
// directed hamiltonian cycle -> subset token swapping on a star

/// Reduce directed Hamiltonian cycle (out-degree at most 2, no loops) to
/// STS on a star: leaf `v + 1` stands for digraph node `v` and may finish
/// on any out-neighbor's leaf; the center must keep its own token. Budget
/// `n + 1`. A supplied Hamiltonian cycle `v1 .. vn` yields the certificate
/// `c v1, c v2, ..., c vn, c v1`.
pub fn gen_star_sts(h: &Digraph, cycle: Option<&[usize]>) -> Result<Generated> {
    let n = h.n();
    if h.has_loops() {
        return Err(bad("digraph must be loop-free"));
    }
    if n == 0 {
        return Err(bad("digraph must be non-empty"));
    }
    for v in 0..n {
        match h.out_degree(v) {
            0 => return Err(bad(format!("node {v} has out-degree 0"))),
            1 | 2 => {}
            d => return Err(bad(format!("node {v} has out-degree {d} > 2"))),
        }
    }
    let graph = Graph::new(n + 1, (1..=n).map(|v| (0, v)))?;
    let mut dests = vec![vec![0usize]]; // center keeps its token
    for v in 0..n {
        let mut set: Vec<usize> =
            h.arcs().iter().filter(|&&(a, _)| a == v).map(|&(_, b)| b + 1).collect();
        set.sort_unstable();
        set.dedup();
        dests.push(set);
    }
    let instance = Instance::new_sts(graph, dests)?;

    let certificate = match cycle {
        None => None,
        Some(cycle) => {
            let mut sorted: Vec<usize> = cycle.to_vec();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                return Err(bad("cycle must visit every node exactly once"));
            }
            for w in 0..n {
                let (from, to) = (cycle[w], cycle[(w + 1) % n]);
                if !h.arcs().contains(&(from, to)) {
                    return Err(bad(format!("({from}, {to}) is not an arc")));
                }
            }
            let mut seq = SwapSequence::default();
            for &v in cycle {
                seq.push(0, v + 1);
            }
            seq.push(0, cycle[0] + 1);
            Some(seq)
        }
    };

    Ok(Generated {
        instance,
        start: Configuration::identity(n + 1),
        budget: n as u64 + 1,
        provenance: Provenance { source: "ham-cycle", params: vec![("n", n as u64)] },
        certificate,
    })
}

// ---------------------------------------------------------------------------
// directed triangle decomposition -> colored token swapping on a clique

/// Reduce directed triangle decomposition (Eulerian, 2-cycle-free, `n`
/// arcs, `3 | n`) to CTS on `K_n` realizing `h` as the color digraph.
/// Budget `2n/3`. A supplied decomposition (arc-index triples in cyclic
/// order) yields the certificate `v1 v2, v1 v3` per triangle.
pub fn gen_clique_cts(h: &Digraph, triangles: Option<&[[usize; 3]]>) -> Result<Generated> {
    let n = h.arcs().len();
    if n == 0 || n % 3 != 0 {
        return Err(bad("arc count must be a positive multiple of 3"));
    }
    if !h.is_balanced() {
        return Err(bad("digraph must be Eulerian (balanced)"));
    }
    if h.has_two_cycle() {
        return Err(bad("digraph must have no 2-cycles"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let instance = colored::realize_color_digraph(h, Graph::new(n, edges)?)?;

    let certificate = match triangles {
        None => None,
        Some(triangles) => {
            let mut used = vec![false; n];
            let mut seq = SwapSequence::default();
            let vertex_of = colored::arc_vertices(h);
            for tri in triangles {
                for w in 0..3 {
                    let (a, b) = (tri[w], tri[(w + 1) % 3]);
                    if a >= n || b >= n {
                        return Err(bad("arc index out of range"));
                    }
                    if h.arcs()[a].1 != h.arcs()[b].0 {
                        return Err(bad(format!(
                            "arcs {a}, {b} are not consecutive in a directed triangle"
                        )));
                    }
                    if std::mem::replace(&mut used[tri[w]], true) {
                        return Err(bad(format!("arc {} used twice", tri[w])));
                    }
                }
                let (v1, v2, v3) = (vertex_of[tri[0]], vertex_of[tri[1]], vertex_of[tri[2]]);
                seq.push(v1, v2);
                seq.push(v1, v3);
            }
            if used.iter().any(|&u| !u) {
                return Err(bad("triangles do not cover every arc"));
            }
            Some(seq)
        }
    };

    Ok(Generated {
        instance,
        start: Configuration::identity(n),
        budget: 2 * n as u64 / 3,
        provenance: Provenance { source: "triangle-decomposition", params: vec![("n", n as u64)] },
        certificate,
    })
}

// ---------------------------------------------------------------------------
// companion format parsers

/// Parse the `msi v1` format.
pub fn parse_msi(text: &str) -> Result<MsiInstance> {
    let mut lines = Lines::new(text);
    let (ln, header) =
        lines.next().ok_or_else(|| parse_err(0, "empty input"))?.clone();
    if header != ["msi", "v1"] {
        return Err(parse_err(ln, "expected header 'msi v1'"));
    }
    let (ln, kt) = lines.next().ok_or_else(|| parse_err(ln, "missing 'k .. t ..' line"))?.clone();
    if kt.len() != 4 || kt[0] != "k" || kt[2] != "t" {
        return Err(parse_err(ln, "expected 'k <k> t <t>'"));
    }
    let k = parse_num(ln, kt[1])?;
    let t = parse_num(ln, kt[3])?;
    let mut pattern_edges = Vec::new();
    let mut host_edges = Vec::new();
    while let Some((ln, fields)) = lines.next().map(|l| (l.0, l.1.clone())) {
        match fields[0] {
            "p" if fields.len() == 3 => {
                pattern_edges.push((parse_num(ln, fields[1])?, parse_num(ln, fields[2])?));
            }
            "h" if fields.len() == 5 => {
                host_edges.push((
                    (parse_num(ln, fields[1])?, parse_num(ln, fields[2])?),
                    (parse_num(ln, fields[3])?, parse_num(ln, fields[4])?),
                ));
            }
            _ => return Err(parse_err(ln, format!("unexpected line '{}'", fields.join(" ")))),
        }
    }
    Ok(MsiInstance { k, t, pattern_edges, host_edges })
}

/// Parse the `x3c v1` format.
pub fn parse_x3c(text: &str) -> Result<X3cInstance> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?.clone();
    if header != ["x3c", "v1"] {
        return Err(parse_err(ln, "expected header 'x3c v1'"));
    }
    let (ln, nl) = lines.next().ok_or_else(|| parse_err(ln, "missing 'n' line"))?.clone();
    if nl.len() != 2 || nl[0] != "n" {
        return Err(parse_err(ln, "expected 'n <n>'"));
    }
    let n = parse_num(ln, nl[1])?;
    let mut sets = Vec::new();
    while let Some((ln, fields)) = lines.next().map(|l| (l.0, l.1.clone())) {
        if fields.len() != 4 || fields[0] != "s" {
            return Err(parse_err(ln, "expected 's <a> <b> <c>'"));
        }
        sets.push([
            parse_num(ln, fields[1])?,
            parse_num(ln, fields[2])?,
            parse_num(ln, fields[3])?,
        ]);
    }
    Ok(X3cInstance { n, sets })
}

fn parse_index_list(text: &str, kind: &str, tag: &str, arity: usize) -> Result<Vec<Vec<usize>>> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?.clone();
    if header != [kind, "v1"] {
        return Err(parse_err(ln, format!("expected header '{kind} v1'")));
    }
    let mut rows = Vec::new();
    while let Some((ln, fields)) = lines.next().map(|l| (l.0, l.1.clone())) {
        if fields.len() != arity + 1 || fields[0] != tag {
            return Err(parse_err(ln, format!("expected '{tag}' with {arity} indices")));
        }
        let mut row = Vec::with_capacity(arity);
        for f in &fields[1..] {
            row.push(parse_num(ln, f)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parse the `phi v1` format into one host-vertex choice per class.
pub fn parse_phi(text: &str, k: usize) -> Result<Vec<usize>> {
    let rows = parse_index_list(text, "phi", "m", 2)?;
    let mut phi = vec![usize::MAX; k];
    for row in rows {
        let (i, h) = (row[0], row[1]);
        if i >= k || phi[i] != usize::MAX {
            return Err(bad(format!("bad or repeated class index {i}")));
        }
        phi[i] = h;
    }
    if phi.contains(&usize::MAX) {
        return Err(bad("phi must cover every class"));
    }
    Ok(phi)
}

/// Parse the `cover v1` format into a list of set indices.
pub fn parse_cover(text: &str) -> Result<Vec<usize>> {
    Ok(parse_index_list(text, "cover", "c", 1)?.into_iter().map(|r| r[0]).collect())
}

/// Parse the `cycle v1` format into a node sequence.
pub fn parse_cycle(text: &str) -> Result<Vec<usize>> {
    Ok(parse_index_list(text, "cycle", "v", 1)?.into_iter().map(|r| r[0]).collect())
}

/// Parse the `tri v1` format into arc-index triples.
pub fn parse_triangles(text: &str) -> Result<Vec<[usize; 3]>> {
    Ok(parse_index_list(text, "tri", "t", 3)?
        .into_iter()
        .map(|r| [r[0], r[1], r[2]])
        .collect())
}
