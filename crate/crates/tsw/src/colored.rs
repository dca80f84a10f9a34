//! Color-digraph machinery and the polynomial special-case solvers for
//! stars, cliques, and paths.
//!
//! For a colored instance, each vertex `v` of color `c` holding a token of
//! color `c'` contributes the arc `c -> c'` labeled `v`. Every connected
//! component of this digraph is Eulerian, which is what the star and clique
//! solvers exploit.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Configuration, Instance, SwapSequence};
use crate::perm;

/// Multidigraph on colors whose arcs are vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorDigraph {
    /// Distinct colors, ascending.
    pub colors: Vec<u32>,
    /// `(from-color, to-color, source-vertex)`, one arc per vertex,
    /// ascending by source vertex.
    pub arcs: Vec<(u32, u32, usize)>,
}

impl ColorDigraph {
    /// In-degree minus out-degree is zero at every color.
    pub fn is_balanced(&self) -> bool {
        self.colors.iter().all(|&c| {
            self.arcs.iter().filter(|a| a.1 == c).count()
                == self.arcs.iter().filter(|a| a.0 == c).count()
        })
    }

    /// Arc multiset as `(from, to)` pairs, sorted: the comparison key for
    /// isomorphism up to arc relabeling (color labels fixed).
    pub fn sorted_color_pairs(&self) -> Vec<(u32, u32)> {
        let mut pairs: Vec<(u32, u32)> = self.arcs.iter().map(|&(f, t, _)| (f, t)).collect();
        pairs.sort_unstable();
        pairs
    }
}

/// Build the color digraph of a colored instance under `start`.
pub fn build_color_digraph(inst: &Instance, start: &Configuration) -> Result<ColorDigraph> {
    let colors_info = inst
        .colors()
        .ok_or_else(|| Error::InvalidInstance("instance has no colors".into()))?;
    let n = inst.n();
    let mut colors: Vec<u32> = colors_info.vertex_colors.clone();
    colors.sort_unstable();
    colors.dedup();
    let arcs: Vec<(u32, u32, usize)> = (0..n)
        .map(|v| {
            (
                colors_info.vertex_colors[v],
                colors_info.token_colors[start.token_on(v)],
                v,
            )
        })
        .collect();
    let digraph = ColorDigraph { colors, arcs };
    // guaranteed by the color-multiset invariant of Instance
    assert!(digraph.is_balanced(), "color digraph must be Eulerian per component");
    Ok(digraph)
}

/// Build a colored instance on `g` whose color digraph is isomorphic to `h`:
/// a color with out-degree `d` is given to the next `d` vertices, and each
/// arc `c -> c'` places a token of color `c'` on a vertex of color `c`.
pub fn realize_color_digraph(h: &Digraph, g: Graph) -> Result<Instance> {
    if h.arcs().len() != g.n() {
        return Err(Error::InvalidGeneratorInput(format!(
            "digraph has {} arcs but graph has {} vertices",
            h.arcs().len(),
            g.n()
        )));
    }
    if !h.is_balanced() {
        return Err(Error::InvalidGeneratorInput(
            "digraph is not balanced (in-degree != out-degree somewhere)".into(),
        ));
    }
    let n = g.n();
    let order = arc_vertices(h);
    let mut vertex_colors = vec![0u32; n];
    let mut token_colors = vec![0u32; n];
    for (arc, &v) in order.iter().enumerate() {
        let (tail, head) = h.arcs()[arc];
        vertex_colors[v] = tail as u32;
        token_colors[v] = head as u32;
    }
    Instance::new_cts(g, vertex_colors, token_colors)
}

/// The vertex assigned to each arc by [`realize_color_digraph`]: arcs are
/// grouped by tail color ascending (list order within a tail), and vertices
/// handed out in that order.
pub fn arc_vertices(h: &Digraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.arcs().len()).collect();
    order.sort_by_key(|&i| (h.arcs()[i].0, i));
    let mut vertex_of = vec![0usize; h.arcs().len()];
    for (v, &arc) in order.iter().enumerate() {
        vertex_of[arc] = v;
    }
    vertex_of
}

/// Eulerian circuit of one balanced connected arc set by Hierholzer's
/// method, with unused out-arcs always taken in ascending source-vertex
/// order. Returns indices into `arcs` forming a closed trail.
fn hierholzer(arcs: &[(u32, u32, usize)], start_node: u32) -> Vec<usize> {
    // out-arc lists per color, ascending by vertex label, consumed front to
    // back
    let mut out: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
    for (i, &(from, _, _)) in arcs.iter().enumerate() {
        out.entry(from).or_default().push(i);
    }
    for list in out.values_mut() {
        list.sort_by_key(|&i| arcs[i].2);
        list.reverse(); // pop() takes the smallest label
    }
    let mut stack: Vec<(u32, Option<usize>)> = vec![(start_node, None)];
    let mut circuit = Vec::new();
    while let Some(&(node, _)) = stack.last() {
        if let Some(arc) = out.get_mut(&node).and_then(Vec::pop) {
            stack.push((arcs[arc].1, Some(arc)));
        } else {
            let (_, via) = stack.pop().unwrap();
            if let Some(arc) = via {
                circuit.push(arc);
            }
        }
    }
    circuit.reverse();
    debug_assert_eq!(circuit.len(), arcs.len());
    circuit
}

/// Rotate a closed circuit so the given arc index comes first.
fn rotate_to_front(circuit: &mut Vec<usize>, first: usize) {
    let pos = circuit.iter().position(|&a| a == first).expect("arc in circuit");
    circuit.rotate_left(pos);
}

fn require_ts(inst: &Instance) -> Result<()> {
    if !inst.is_ts() {
        return Err(Error::UnsupportedShape("solver requires a TS instance".into()));
    }
    Ok(())
}

/// Optimal token swapping on a complete graph: resolve each permutation
/// cycle with one placing swap per step, `n - #cycles` swaps total.
pub fn solve_clique_ts(inst: &Instance, start: &Configuration) -> Result<(SwapSequence, usize)> {
    require_ts(inst)?;
    if !inst.graph().is_clique() {
        return Err(Error::UnsupportedShape("graph is not complete".into()));
    }
    let n = inst.n();
    let mut placement = start.placement().to_vec();
    let mut seq = SwapSequence::default();
    for v in 0..n {
        loop {
            let d = inst.ts_dest(placement[v]);
            if d == v {
                break;
            }
            placement.swap(v, d);
            seq.push(v, d);
        }
    }
    let len = seq.len();
    Ok((seq, len))
}

/// Optimal token swapping on a star with center 0 (Pak): if the cycle
/// decomposition has one cycle through the center, `m` leaf cycles of
/// length >= 2, and `b` fixed leaves, the optimum is `n + m - b` for a star
/// with `n` leaves.
///
/// Greedy: while unfinished, send the center's token home if it is
/// misplaced, otherwise swap the center with the lowest-index leaf of an
/// unresolved cycle.
pub fn solve_star_ts(inst: &Instance, start: &Configuration) -> Result<(SwapSequence, usize)> {
    require_ts(inst)?;
    if !inst.graph().is_star_centered() {
        return Err(Error::UnsupportedShape("graph is not a star with center 0".into()));
    }
    let n = inst.n();
    let mut placement = start.placement().to_vec();
    let mut seq = SwapSequence::default();
    loop {
        let center_dest = inst.ts_dest(placement[0]);
        if center_dest != 0 {
            placement.swap(0, center_dest);
            seq.push(0, center_dest);
            continue;
        }
        let Some(v) = (1..n).find(|&v| inst.ts_dest(placement[v]) != v) else { break };
        placement.swap(0, v);
        seq.push(0, v);
    }
    let len = seq.len();
    Ok((seq, len))
}

/// Optimal token swapping on a path (vertices in path order): adjacent
/// transposition sort; the length equals the inversion count of the target
/// positions.
pub fn solve_path_ts(inst: &Instance, start: &Configuration) -> Result<(SwapSequence, usize)> {
    require_ts(inst)?;
    if !inst.graph().is_path_in_order() {
        return Err(Error::UnsupportedShape("graph is not a path in vertex order".into()));
    }
    let targets: Vec<usize> = (0..inst.n()).map(|v| inst.ts_dest(start.token_on(v))).collect();
    Ok(sort_by_adjacent_swaps(targets))
}

fn sort_by_adjacent_swaps(mut targets: Vec<usize>) -> (SwapSequence, usize) {
    let n = targets.len();
    let mut seq = SwapSequence::default();
    let mut dirty = true;
    while dirty {
        dirty = false;
        for i in 0..n.saturating_sub(1) {
            if targets[i] > targets[i + 1] {
                targets.swap(i, i + 1);
                seq.push(i, i + 1);
                dirty = true;
            }
        }
    }
    let len = seq.len();
    (seq, len)
}

/// Optimal colored token swapping on a star with center 0.
///
/// Leaves already holding their own color never move. The remaining arcs
/// are decomposed into Eulerian circuits per component; the component of
/// the center's color is walked first, starting at the center's own arc,
/// and every other component is entered and closed through the center,
/// giving `n + m` swaps for `n` remaining leaves and `m` extra components.
pub fn solve_star_cts(inst: &Instance, start: &Configuration) -> Result<(SwapSequence, usize)> {
    if !inst.graph().is_star_centered() {
        return Err(Error::UnsupportedShape("graph is not a star with center 0".into()));
    }
    let colors = inst
        .colors()
        .ok_or_else(|| Error::InvalidInstance("star CTS solver requires colors".into()))?;
    let n = inst.n();
    let token_color = |v: usize| colors.token_colors[start.token_on(v)];

    // kept vertices: center plus miscolored leaves
    let mut arcs: Vec<(u32, u32, usize)> = Vec::new();
    for v in 0..n {
        if v == 0 || colors.vertex_colors[v] != token_color(v) {
            arcs.push((colors.vertex_colors[v], token_color(v), v));
        }
    }

    // weakly-connected components over the colors that occur in arcs
    let mut comp_of: std::collections::HashMap<u32, usize> = Default::default();
    let mut parent: Vec<usize> = Vec::new();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            parent[x] = find(parent, parent[x]);
        }
        parent[x]
    }
    for &(f, t, _) in &arcs {
        for c in [f, t] {
            comp_of.entry(c).or_insert_with(|| {
                parent.push(parent.len());
                parent.len() - 1
            });
        }
        let (a, b) = (comp_of[&f], comp_of[&t]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }

    let center_color = colors.vertex_colors[0];
    let center_root = find(&mut parent, comp_of[&center_color]);

    // group arcs per component root
    let mut groups: std::collections::BTreeMap<usize, Vec<(u32, u32, usize)>> = Default::default();
    for &arc in &arcs {
        let root = find(&mut parent, comp_of[&arc.0]);
        groups.entry(root).or_default().push(arc);
    }

    let mut seq = SwapSequence::default();

    // center component first, circuit starting at the center's arc
    let center_group = groups.remove(&center_root).expect("center arc exists");
    let center_arc_idx =
        center_group.iter().position(|&(_, _, v)| v == 0).expect("center arc in its group");
    let mut circuit = hierholzer(&center_group, center_group[center_arc_idx].0);
    rotate_to_front(&mut circuit, center_arc_idx);
    for &arc in circuit.iter().skip(1) {
        seq.push(0, center_group[arc].2);
    }

    // remaining components ordered by smallest source vertex; enter and
    // close through the center
    let mut others: Vec<Vec<(u32, u32, usize)>> = groups.into_values().collect();
    others.sort_by_key(|g| g.iter().map(|a| a.2).min().unwrap());
    for group in others {
        let first = group.iter().enumerate().min_by_key(|(_, a)| a.2).unwrap().0;
        let mut circuit = hierholzer(&group, group[first].0);
        rotate_to_front(&mut circuit, first);
        for &arc in &circuit {
            seq.push(0, group[arc].2);
        }
        seq.push(0, group[circuit[0]].2);
    }

    let len = seq.len();
    Ok((seq, len))
}

/// Optimal colored token swapping on a path: fix destinations greedily
/// (leftmost vertex takes the leftmost token of its color), then sort by
/// adjacent transpositions.
pub fn solve_path_cts(inst: &Instance, start: &Configuration) -> Result<(SwapSequence, usize)> {
    if !inst.graph().is_path_in_order() {
        return Err(Error::UnsupportedShape("graph is not a path in vertex order".into()));
    }
    let colors = inst
        .colors()
        .ok_or_else(|| Error::InvalidInstance("path CTS solver requires colors".into()))?;
    let n = inst.n();
    // token at position p, scanned left to right
    let mut assigned = vec![false; n];
    let mut targets = vec![usize::MAX; n];
    for v in 0..n {
        let p = (0..n)
            .find(|&p| !assigned[p] && colors.token_colors[start.token_on(p)] == colors.vertex_colors[v])
            .expect("color multisets match");
        assigned[p] = true;
        targets[p] = v;
    }
    Ok(sort_by_adjacent_swaps(targets))
}

/// The bipartite layout equivalent to path-STS: two vertex columns in path
/// order, token `t` joined to every vertex it accepts. A perfect matching
/// with `k` pairwise crossing edge pairs corresponds to a solution with `k`
/// swaps.
#[derive(Debug, Clone)]
pub struct CrossingMatching {
    pub n: usize,
    /// `(token, vertex)` pairs, token column in path order.
    pub edges: Vec<(usize, usize)>,
}

/// Build the layout for a path instance under the identity start.
pub fn to_crossing_matching(inst: &Instance) -> Result<CrossingMatching> {
    if !inst.graph().is_path_in_order() {
        return Err(Error::UnsupportedShape("graph is not a path in vertex order".into()));
    }
    let n = inst.n();
    let mut edges = Vec::new();
    for t in 0..n {
        for &v in inst.dests(t) {
            edges.push((t, v));
        }
    }
    Ok(CrossingMatching { n, edges })
}

/// Minimum number of pairwise crossing edge pairs over all perfect
/// matchings, by exhaustive enumeration; `None` when no perfect matching
/// exists. Exponential, intended for test-scale layouts.
pub fn min_crossings_bruteforce(m: &CrossingMatching) -> Option<u64> {
    let mut allowed = vec![Vec::new(); m.n];
    for &(t, v) in &m.edges {
        allowed[t].push(v);
    }
    let mut sigma = vec![usize::MAX; m.n];
    let mut used = vec![false; m.n];
    let mut best = None;
    enumerate_matchings(&allowed, &mut sigma, &mut used, 0, &mut best);
    best
}

fn enumerate_matchings(
    allowed: &[Vec<usize>],
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
    t: usize,
    best: &mut Option<u64>,
) {
    if t == allowed.len() {
        let crossings = perm::inversions(sigma);
        *best = Some(best.map_or(crossings, |b: u64| b.min(crossings)));
        return;
    }
    for &v in &allowed[t] {
        if !used[v] {
            used[v] = true;
            sigma[t] = v;
            enumerate_matchings(allowed, sigma, used, t + 1, best);
            used[v] = false;
        }
    }
}
