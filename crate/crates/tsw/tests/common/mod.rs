//! Shared helpers for the integration suites: exhaustive small-graph
//! enumeration, seeded random generators, and independent oracles.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tsw::digraph::Digraph;
use tsw::graph::Graph;
use tsw::instance::{Configuration, Instance};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn clique(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// All connected simple graphs on `n` labeled vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Visit every permutation of `0..n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        if !tsw::perm::next_permutation(&mut p) {
            break;
        }
    }
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Random connected graph: a random spanning tree plus extra edges, all
/// respecting the degree cap.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, max_degree: usize) -> Graph {
    loop {
        let mut degree = vec![0usize; n];
        let mut edges = Vec::new();
        let mut ok = true;
        for v in 1..n {
            let candidates: Vec<usize> =
                (0..v).filter(|&u| degree[u] < max_degree).collect();
            match candidates.as_slice() {
                [] => {
                    ok = false;
                    break;
                }
                c => {
                    let u = c[rng.gen_range(0..c.len())];
                    degree[u] += 1;
                    degree[v] += 1;
                    edges.push((u, v));
                }
            }
        }
        if !ok {
            continue;
        }
        let extra = rng.gen_range(0..=n);
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v
                && degree[u] < max_degree
                && degree[v] < max_degree
                && !edges.contains(&(u.min(v), u.max(v)))
            {
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u.min(v), u.max(v)));
            }
        }
        return Graph::new(n, edges).unwrap();
    }
}

/// Random Eulerian digraph on `colors` nodes: a union of random directed
/// cycles (so in-degree equals out-degree everywhere).
pub fn random_eulerian_digraph(rng: &mut ChaCha8Rng, colors: usize, cycles: usize) -> Digraph {
    let mut arcs = Vec::new();
    for _ in 0..cycles {
        let len = rng.gen_range(1..=colors.max(1));
        let mut nodes: Vec<usize> = (0..len).map(|_| rng.gen_range(0..colors)).collect();
        nodes.dedup();
        if nodes.len() > 1 && nodes.first() == nodes.last() {
            nodes.pop();
        }
        for i in 0..nodes.len() {
            arcs.push((nodes[i], nodes[(i + 1) % nodes.len()]));
        }
    }
    if arcs.is_empty() {
        arcs.push((0, 0));
    }
    Digraph::new(colors, arcs).unwrap()
}

/// Independent happy-only oracle: is the instance solvable using
/// (-1,-1)-swaps exclusively? Depth-first over configurations, pruning on
/// revisits. Any happy-only run that solves the instance has length
/// exactly L/2.
pub fn happy_only_solution_exists(inst: &Instance, start: &Configuration) -> bool {
    let dm = inst.graph().all_pairs_distances();
    let mut seen = std::collections::HashSet::new();
    let mut placement = start.placement().to_vec();
    happy_dfs(inst, &dm, &mut placement, &mut seen)
}

fn happy_dfs(
    inst: &Instance,
    dm: &tsw::graph::DistanceMatrix,
    placement: &mut Vec<usize>,
    seen: &mut std::collections::HashSet<Vec<usize>>,
) -> bool {
    if (0..placement.len()).all(|v| inst.accepts(placement[v], v)) {
        return true;
    }
    if !seen.insert(placement.clone()) {
        return false;
    }
    for &(u, v) in inst.graph().edges() {
        let config = Configuration::new(placement.clone()).unwrap();
        if inst.classify_swap(&config, (u, v), dm).unwrap() == (-1, -1) {
            placement.swap(u, v);
            if happy_dfs(inst, dm, placement, seen) {
                return true;
            }
            placement.swap(u, v);
        }
    }
    false
}
