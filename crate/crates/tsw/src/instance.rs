//! Instances, configurations, swap sequences, and solution verification.
//!
//! Token `t` is the token that starts on vertex `t`, so the start
//! configuration is the identity unless stated otherwise. A configuration
//! maps each vertex to the token currently on it.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::perm;

/// Placement of tokens on vertices: `placement[v]` is the token on vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    placement: Vec<usize>,
}

impl Configuration {
    pub fn identity(n: usize) -> Self {
        Configuration { placement: (0..n).collect() }
    }

    pub fn new(placement: Vec<usize>) -> Result<Self> {
        if !perm::is_permutation(&placement) {
            return Err(Error::InvalidInstance("placement is not a permutation".into()));
        }
        Ok(Configuration { placement })
    }

    pub fn n(&self) -> usize {
        self.placement.len()
    }

    /// Token on vertex `v`.
    pub fn token_on(&self, v: usize) -> usize {
        self.placement[v]
    }

    /// Vertex currently holding token `t`.
    pub fn position_of(&self, t: usize) -> usize {
        self.placement.iter().position(|&x| x == t).unwrap()
    }

    /// Inverse map: `positions()[t]` is the vertex holding token `t`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.placement.len()];
        for (v, &t) in self.placement.iter().enumerate() {
            pos[t] = v;
        }
        pos
    }

    pub fn placement(&self) -> &[usize] {
        &self.placement
    }

    /// Exchange the tokens on an edge's endpoints.
    pub fn apply_swap(&self, g: &Graph, e: (usize, usize)) -> Result<Configuration> {
        if !g.has_edge(e.0, e.1) {
            return Err(Error::NotAnEdge { u: e.0, v: e.1 });
        }
        let mut placement = self.placement.clone();
        placement.swap(e.0, e.1);
        Ok(Configuration { placement })
    }

    /// Swap without the edge check, for solver inner loops.
    pub(crate) fn swap_unchecked(&mut self, e: (usize, usize)) {
        self.placement.swap(e.0, e.1);
    }

    /// Left fold of [`Configuration::apply_swap`] over a sequence. On a
    /// non-edge, reports the offending index.
    pub fn apply_sequence(&self, g: &Graph, s: &SwapSequence) -> Result<Configuration> {
        let mut cur = self.clone();
        for (i, &e) in s.swaps().iter().enumerate() {
            if !g.has_edge(e.0, e.1) {
                return Err(Error::InvalidSolution(format!(
                    "swap {i}: ({}, {}) is not an edge",
                    e.0, e.1
                )));
            }
            cur.swap_unchecked(e);
        }
        Ok(cur)
    }
}

/// An ordered list of edges to swap along; the universal solution and
/// certificate format. Edges are stored canonically, smaller endpoint first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwapSequence {
    swaps: Vec<(usize, usize)>,
}

impl SwapSequence {
    pub fn new(swaps: impl IntoIterator<Item = (usize, usize)>) -> Self {
        SwapSequence {
            swaps: swaps.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect(),
        }
    }

    pub fn swaps(&self) -> &[(usize, usize)] {
        &self.swaps
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    pub fn push(&mut self, u: usize, v: usize) {
        self.swaps.push((u.min(v), u.max(v)));
    }

    pub fn extend(&mut self, other: &SwapSequence) {
        self.swaps.extend_from_slice(&other.swaps);
    }

    pub fn reversed(&self) -> SwapSequence {
        SwapSequence { swaps: self.swaps.iter().rev().copied().collect() }
    }
}

/// Problem variant, as authored. STS is the general case; TS and CTS are
/// restrictions recognized by [`Instance::variant`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Ts,
    Cts,
    Sts,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Ts => "ts",
            Variant::Cts => "cts",
            Variant::Sts => "sts",
        }
    }
}

/// Color annotations for CTS instances: per-vertex and per-token colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colors {
    pub vertex_colors: Vec<u32>,
    pub token_colors: Vec<u32>,
}

/// A token swapping instance: a graph plus per-token destination sets.
/// Colors are present iff the instance was authored as CTS, in which case
/// the destination sets are derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    dests: Vec<Vec<usize>>,
    colors: Option<Colors>,
}

impl Instance {
    /// TS instance: token `t` must reach `dest_perm[t]`.
    pub fn new_ts(graph: Graph, dest_perm: Vec<usize>) -> Result<Self> {
        if dest_perm.len() != graph.n() || !perm::is_permutation(&dest_perm) {
            return Err(Error::InvalidInstance(
                "TS destinations must form a permutation of the vertices".into(),
            ));
        }
        let dests = dest_perm.into_iter().map(|d| vec![d]).collect();
        Ok(Instance { graph, dests, colors: None })
    }

    /// STS instance: token `t` may finish on any vertex of `dests[t]`.
    pub fn new_sts(graph: Graph, dests: Vec<Vec<usize>>) -> Result<Self> {
        if dests.len() != graph.n() {
            return Err(Error::InvalidInstance("one destination set per token required".into()));
        }
        let mut dests = dests;
        for set in &mut dests {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::InvalidInstance("empty destination set".into()));
            }
            if set.iter().any(|&v| v >= graph.n()) {
                return Err(Error::InvalidInstance("destination out of range".into()));
            }
        }
        Ok(Instance { graph, dests, colors: None })
    }

    /// CTS instance: token `t` may finish on any vertex of its color.
    /// Token `t` is the token initially on vertex `t`.
    pub fn new_cts(graph: Graph, vertex_colors: Vec<u32>, token_colors: Vec<u32>) -> Result<Self> {
        let n = graph.n();
        if vertex_colors.len() != n || token_colors.len() != n {
            return Err(Error::InvalidInstance("one color per vertex and per token required".into()));
        }
        let mut vc_sorted = vertex_colors.clone();
        let mut tc_sorted = token_colors.clone();
        vc_sorted.sort_unstable();
        tc_sorted.sort_unstable();
        if vc_sorted != tc_sorted {
            return Err(Error::InvalidInstance(
                "token color multiset differs from vertex color multiset".into(),
            ));
        }
        let dests = token_colors
            .iter()
            .map(|&c| (0..n).filter(|&v| vertex_colors[v] == c).collect())
            .collect();
        Ok(Instance {
            graph,
            dests,
            colors: Some(Colors { vertex_colors, token_colors }),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn dests(&self, t: usize) -> &[usize] {
        &self.dests[t]
    }

    pub fn all_dests(&self) -> &[Vec<usize>] {
        &self.dests
    }

    pub fn colors(&self) -> Option<&Colors> {
        self.colors.as_ref()
    }

    pub fn accepts(&self, t: usize, v: usize) -> bool {
        self.dests[t].binary_search(&v).is_ok()
    }

    /// True iff all destination sets are singletons forming a permutation.
    pub fn is_ts(&self) -> bool {
        self.dests.iter().all(|d| d.len() == 1) && {
            let p: Vec<usize> = self.dests.iter().map(|d| d[0]).collect();
            perm::is_permutation(&p)
        }
    }

    pub fn variant(&self) -> Variant {
        if self.colors.is_some() {
            Variant::Cts
        } else if self.is_ts() {
            Variant::Ts
        } else {
            Variant::Sts
        }
    }

    /// For a TS instance, the destination of token `t`.
    pub fn ts_dest(&self, t: usize) -> usize {
        debug_assert!(self.dests[t].len() == 1);
        self.dests[t][0]
    }

    /// True iff `config` places every token on one of its destinations.
    pub fn is_solved(&self, config: &Configuration) -> bool {
        (0..self.n()).all(|v| self.accepts(config.token_on(v), v))
    }

    /// Minimum hop distance from `v` to any destination of token `t`;
    /// `u32::MAX` when no destination is reachable.
    pub fn min_dist_to_dest(&self, t: usize, v: usize, dm: &DistanceMatrix) -> u32 {
        self.dests[t].iter().map(|&d| dm.get(v, d)).min().unwrap()
    }

    /// Sum of per-token minimum distances to destination; `None` when some
    /// token cannot reach any destination.
    pub fn total_dist(&self, config: &Configuration, dm: &DistanceMatrix) -> Option<u64> {
        let mut sum = 0u64;
        for v in 0..self.n() {
            let d = self.min_dist_to_dest(config.token_on(v), v, dm);
            if d == u32::MAX {
                return None;
            }
            sum += u64::from(d);
        }
        Some(sum)
    }

    /// Per-token change in distance-to-destination caused by swapping `e`,
    /// sorted ascending. Both entries lie in `{-1, 0, +1}`.
    pub fn classify_swap(
        &self,
        before: &Configuration,
        e: (usize, usize),
        dm: &DistanceMatrix,
    ) -> Result<(i8, i8)> {
        if !self.graph.has_edge(e.0, e.1) {
            return Err(Error::NotAnEdge { u: e.0, v: e.1 });
        }
        let (u, v) = e;
        let tu = before.token_on(u);
        let tv = before.token_on(v);
        let du = self.min_dist_to_dest(tu, v, dm) as i64 - self.min_dist_to_dest(tu, u, dm) as i64;
        let dv = self.min_dist_to_dest(tv, u, dm) as i64 - self.min_dist_to_dest(tv, v, dm) as i64;
        let (x, y) = (du.min(dv) as i8, du.max(dv) as i8);
        debug_assert!((-1..=1).contains(&x) && (-1..=1).contains(&y));
        Ok((x, y))
    }

    /// Run the sequence from `start` and report validity, length, and the
    /// tally of swap classes along the way. Invalid sequences yield
    /// `valid = false` together with the first failure, never an error.
    pub fn verify_solution(&self, start: &Configuration, s: &SwapSequence) -> VerificationReport {
        let dm = self.graph.all_pairs_distances();
        let mut cur = start.clone();
        let mut counts = ClassCounts::default();
        for (i, &e) in s.swaps().iter().enumerate() {
            if !self.graph.has_edge(e.0, e.1) {
                return VerificationReport {
                    valid: false,
                    length: s.len(),
                    class_counts: counts,
                    failure: Some(VerifyFailure::NotAnEdge { index: i, edge: e }),
                };
            }
            let class = self.classify_swap(&cur, e, &dm).expect("edge checked");
            counts.record(class);
            cur.swap_unchecked(e);
        }
        for v in 0..self.n() {
            let t = cur.token_on(v);
            if !self.accepts(t, v) {
                return VerificationReport {
                    valid: false,
                    length: s.len(),
                    class_counts: counts,
                    failure: Some(VerifyFailure::TokenMisplaced { token: t, vertex: v }),
                };
            }
        }
        VerificationReport { valid: true, length: s.len(), class_counts: counts, failure: None }
    }
}

/// The six swap classes `(x, y)` with `x <= y`, `x, y` in `{-1, 0, +1}`.
pub const SWAP_CLASSES: [(i8, i8); 6] = [(-1, -1), (-1, 0), (-1, 1), (0, 0), (0, 1), (1, 1)];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassCounts {
    counts: [usize; 6],
}

impl ClassCounts {
    fn index(class: (i8, i8)) -> usize {
        SWAP_CLASSES.iter().position(|&c| c == class).expect("valid swap class")
    }

    pub fn record(&mut self, class: (i8, i8)) {
        self.counts[Self::index(class)] += 1;
    }

    pub fn get(&self, class: (i8, i8)) -> usize {
        self.counts[Self::index(class)]
    }

    /// Count of happy swaps, i.e. class (-1, -1).
    pub fn happy(&self) -> usize {
        self.counts[0]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i8, i8), usize)> + '_ {
        SWAP_CLASSES.iter().copied().zip(self.counts.iter().copied())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyFailure {
    NotAnEdge { index: usize, edge: (usize, usize) },
    TokenMisplaced { token: usize, vertex: usize },
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub valid: bool,
    pub length: usize,
    pub class_counts: ClassCounts,
    pub failure: Option<VerifyFailure>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn apply_swap_transposes() {
        let g = path(2);
        let c = Configuration::new(vec![1, 0]).unwrap();
        let after = c.apply_swap(&g, (0, 1)).unwrap();
        assert_eq!(after.placement(), &[0, 1]);

        let id = Configuration::identity(3);
        let after = id.apply_swap(&k3(), (0, 1)).unwrap();
        assert_eq!(after.placement(), &[1, 0, 2]);
    }

    #[test]
    fn apply_swap_rejects_non_edge() {
        let g = path(3);
        let c = Configuration::identity(3);
        assert!(matches!(c.apply_swap(&g, (0, 2)), Err(Error::NotAnEdge { u: 0, v: 2 })));
    }

    #[test]
    fn apply_swap_involution() {
        let g = k3();
        let c = Configuration::new(vec![2, 0, 1]).unwrap();
        for &e in g.edges() {
            let back = c.apply_swap(&g, e).unwrap().apply_swap(&g, e).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn apply_sequence_folds() {
        let g = path(3);
        let start = Configuration::new(vec![2, 1, 0]).unwrap();
        assert_eq!(start.apply_sequence(&g, &SwapSequence::default()).unwrap(), start);

        let s = SwapSequence::new([(0, 1), (1, 2), (0, 1)]);
        let end = start.apply_sequence(&g, &s).unwrap();
        assert_eq!(end.placement(), &[0, 1, 2]);

        let there_and_back = start
            .apply_sequence(&g, &s)
            .unwrap()
            .apply_sequence(&g, &s.reversed())
            .unwrap();
        assert_eq!(there_and_back, start);
    }

    #[test]
    fn apply_sequence_reports_offending_index() {
        let g = path(3);
        let s = SwapSequence::new([(0, 1), (0, 2)]);
        let err = Configuration::identity(3).apply_sequence(&g, &s).unwrap_err();
        assert!(err.to_string().contains("swap 1"));
    }

    #[test]
    fn verify_empty_on_identity() {
        let inst = Instance::new_ts(path(3), vec![0, 1, 2]).unwrap();
        let report = inst.verify_solution(&Configuration::identity(3), &SwapSequence::default());
        assert!(report.valid);
        assert_eq!(report.length, 0);
    }

    #[test]
    fn verify_flags_misplaced_token() {
        let inst = Instance::new_ts(path(2), vec![1, 0]).unwrap();
        let report = inst.verify_solution(&Configuration::identity(2), &SwapSequence::default());
        assert!(!report.valid);
        assert!(matches!(report.failure, Some(VerifyFailure::TokenMisplaced { .. })));
    }

    #[test]
    fn classify_happy_and_sad() {
        // two adjacent tokens destined for each other's vertex
        let inst = Instance::new_ts(path(2), vec![1, 0]).unwrap();
        let dm = inst.graph().all_pairs_distances();
        let class = inst.classify_swap(&Configuration::identity(2), (0, 1), &dm).unwrap();
        assert_eq!(class, (-1, -1));

        // both tokens already home
        let inst = Instance::new_ts(path(2), vec![0, 1]).unwrap();
        let class = inst.classify_swap(&Configuration::identity(2), (0, 1), &dm).unwrap();
        assert_eq!(class, (1, 1));

        // token a on v0 destined v2, token b on v1 destined v1
        let inst = Instance::new_ts(path(3), vec![2, 1, 0]).unwrap();
        let dm3 = inst.graph().all_pairs_distances();
        let class = inst.classify_swap(&Configuration::identity(3), (0, 1), &dm3).unwrap();
        assert_eq!(class, (-1, 1));
    }

    #[test]
    fn cts_destinations_follow_colors() {
        let inst = Instance::new_cts(path(3), vec![0, 1, 0], vec![0, 0, 1]).unwrap();
        assert_eq!(inst.dests(0), &[0, 2]);
        assert_eq!(inst.dests(1), &[0, 2]);
        assert_eq!(inst.dests(2), &[1]);
        assert_eq!(inst.variant(), Variant::Cts);
        assert!(Instance::new_cts(path(2), vec![0, 0], vec![0, 1]).is_err());
    }

    #[test]
    fn variant_detection() {
        let ts = Instance::new_ts(path(2), vec![1, 0]).unwrap();
        assert_eq!(ts.variant(), Variant::Ts);
        let sts = Instance::new_sts(path(2), vec![vec![0, 1], vec![0]]).unwrap();
        assert_eq!(sts.variant(), Variant::Sts);
    }
}
