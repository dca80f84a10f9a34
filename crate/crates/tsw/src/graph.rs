//! Simple undirected graphs with vertices `0..n` and BFS-based distance
//! computations.

use crate::error::{Error, Result};

/// Simple undirected graph. Edges are stored canonically with the smaller
/// endpoint first and the edge list kept sorted, so two graphs with the same
/// edge set compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate edge".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canon, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// BFS hop distances from `s`; unreachable vertices get `u32::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        DistanceMatrix {
            dist: (0..self.n).map(|s| self.distances_from(s)).collect(),
        }
    }

    /// Component id per vertex, numbered by lowest contained vertex order.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().iter().all(|&c| c == 0)
    }

    pub fn is_forest(&self) -> bool {
        let comp = self.components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        // acyclic iff |E| = |V| - #components
        self.edges.len() + ncomp == self.n
    }

    /// Largest finite distance over all pairs, per component; `None` for the
    /// empty graph.
    pub fn diameter(&self) -> Option<u32> {
        if self.n == 0 {
            return None;
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                if d != u32::MAX {
                    best = best.max(d);
                }
            }
        }
        Some(best)
    }

    /// True iff the vertices form a path in index order: edges are exactly
    /// `(i, i+1)`.
    pub fn is_path_in_order(&self) -> bool {
        self.edges.len() + 1 == self.n.max(1)
            && self.edges.iter().enumerate().all(|(i, &e)| e == (i, i + 1))
    }

    /// True iff the graph is a star with center 0 and leaves `1..n`.
    pub fn is_star_centered(&self) -> bool {
        self.n >= 1
            && self.edges.len() + 1 == self.n
            && self.edges.iter().enumerate().all(|(i, &e)| e == (0, i + 1))
    }

    pub fn is_clique(&self) -> bool {
        self.edges.len() == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// Number of vertices on a longest induced path, by exhaustive search.
    /// Intended for test-scale graphs (n <= 12 or so).
    pub fn longest_induced_path_vertices(&self) -> usize {
        let mut best = if self.n == 0 { 0 } else { 1 };
        let mut path: Vec<usize> = Vec::new();
        for s in 0..self.n {
            path.push(s);
            self.extend_induced(&mut path, &mut best);
            path.pop();
        }
        best
    }

    fn extend_induced(&self, path: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(path.len());
        let last = *path.last().unwrap();
        'next: for &w in &self.adj[last] {
            if path.contains(&w) {
                continue;
            }
            // induced: w may only be adjacent to the current endpoint
            for &p in path.iter().take(path.len() - 1) {
                if self.has_edge(w, p) {
                    continue 'next;
                }
            }
            path.push(w);
            self.extend_induced(path, best);
            path.pop();
        }
    }
}

#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    dist: Vec<Vec<u32>>,
}

impl DistanceMatrix {
    /// Hop distance between `u` and `v`; `u32::MAX` when unreachable.
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }

    pub fn n(&self) -> usize {
        self.dist.len()
    }
}
