//! Exact solvers: configuration-graph BFS, depth-bounded search, the
//! polynomial-space halving recursion, and heuristic-guided iterative
//! deepening.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::feasibility;
use crate::graph::Graph;
use crate::instance::{Configuration, Instance, SwapSequence};
use crate::perm;

/// Resource guards. Hitting a cap is an error, never a silent "no solution".
#[derive(Debug, Clone, Copy)]
pub struct SolveLimits {
    /// Maximum configurations explored by BFS.
    pub max_states: usize,
    /// Maximum node expansions for iterative deepening.
    pub max_nodes: u64,
    /// Maximum n for target-configuration enumeration in [`solve_via_reach`].
    pub max_enum_n: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits { max_states: 50_000_000, max_nodes: 1_000_000_000, max_enum_n: 9 }
    }
}

/// A solution found by a solver, with the search effort that produced it.
#[derive(Debug, Clone)]
pub struct Solved {
    pub swaps: SwapSequence,
    pub length: usize,
    pub states: u64,
}

/// Feasibility respecting connected components: every token must be able to
/// reach some destination, and a perfect matching must exist among the
/// reachable ones.
fn component_feasible(inst: &Instance, start: &Configuration) -> bool {
    let comp = inst.graph().components();
    let n = inst.n();
    let mut restricted: Vec<Vec<usize>> = Vec::with_capacity(n);
    for t in 0..n {
        let home = comp[start.position_of(t)];
        let set: Vec<usize> =
            inst.dests(t).iter().copied().filter(|&v| comp[v] == home).collect();
        if set.is_empty() {
            return false;
        }
        restricted.push(set);
    }
    let sub = Instance::new_sts(inst.graph().clone(), restricted).expect("restriction is valid");
    feasibility::check_feasible(&sub).feasible
}

enum Key {
    Small(u64),
    Big(Vec<usize>),
}

fn key_of(placement: &[usize]) -> Key {
    if placement.len() <= 20 {
        Key::Small(perm::lehmer_rank(placement))
    } else {
        Key::Big(placement.to_vec())
    }
}

#[derive(Default)]
struct SeenSet {
    small: HashMap<u64, u32>,
    big: HashMap<Vec<usize>, u32>,
}

impl SeenSet {
    fn insert(&mut self, key: Key, id: u32) -> bool {
        match key {
            Key::Small(k) => self.small.insert(k, id).is_none(),
            Key::Big(k) => self.big.insert(k, id).is_none(),
        }
    }
}

/// Breadth-first search on the configuration graph, terminating on any
/// feasible target configuration. Returns a shortest solution, or `None`
/// when the instance is infeasible or the optimum exceeds `budget`.
///
/// Neighbor edges are expanded in canonical sorted order, so the returned
/// sequence is the lexicographically least among the shortest ones.
pub fn solve_bfs(
    inst: &Instance,
    start: &Configuration,
    budget: Option<usize>,
    limits: &SolveLimits,
) -> Result<Option<Solved>> {
    if !component_feasible(inst, start) {
        return Ok(None);
    }
    if inst.is_solved(start) {
        return Ok(Some(Solved { swaps: SwapSequence::default(), length: 0, states: 1 }));
    }
    if budget == Some(0) {
        return Ok(None);
    }

    let edges = inst.graph().edges();
    // per state: placement, parent id, edge index into `edges`, depth
    let mut placements: Vec<Vec<usize>> = vec![start.placement().to_vec()];
    let mut parent: Vec<(u32, u16)> = vec![(u32::MAX, 0)];
    let mut depth: Vec<u32> = vec![0];
    let mut seen = SeenSet::default();
    seen.insert(key_of(start.placement()), 0);

    let mut head = 0usize;
    while head < placements.len() {
        let cur_depth = depth[head];
        if let Some(b) = budget {
            if cur_depth as usize >= b {
                break;
            }
        }
        for (ei, &(u, v)) in edges.iter().enumerate() {
            let mut next = placements[head].clone();
            next.swap(u, v);
            let id = placements.len() as u32;
            if !seen.insert(key_of(&next), id) {
                continue;
            }
            let solved = (0..next.len()).all(|w| inst.accepts(next[w], w));
            placements.push(next);
            parent.push((head as u32, ei as u16));
            depth.push(cur_depth + 1);
            if solved {
                let mut swaps = Vec::new();
                let mut at = id as usize;
                while parent[at].0 != u32::MAX {
                    swaps.push(edges[parent[at].1 as usize]);
                    at = parent[at].0 as usize;
                }
                swaps.reverse();
                let length = swaps.len();
                return Ok(Some(Solved {
                    swaps: SwapSequence::new(swaps),
                    length,
                    states: placements.len() as u64,
                }));
            }
            if placements.len() > limits.max_states {
                return Err(Error::StateBudgetExceeded(placements.len()));
            }
        }
        head += 1;
    }
    // exhausted within budget
    Ok(None)
}

/// Admissible heuristic state: per-token minimum distance to destination,
/// summed; the lower bound is the ceiling of half the sum.
struct Heuristic {
    // min_dist[t][v] = min over D(t) of dist(v, d)
    min_dist: Vec<Vec<u32>>,
}

impl Heuristic {
    fn new(inst: &Instance) -> Self {
        let dm = inst.graph().all_pairs_distances();
        let n = inst.n();
        let min_dist = (0..n)
            .map(|t| (0..n).map(|v| inst.min_dist_to_dest(t, v, &dm)).collect())
            .collect();
        Heuristic { min_dist }
    }

    /// Total distance sum, or `None` when some token is cut off.
    fn total(&self, placement: &[usize]) -> Option<u64> {
        let mut sum = 0u64;
        for (v, &t) in placement.iter().enumerate() {
            let d = self.min_dist[t][v];
            if d == u32::MAX {
                return None;
            }
            sum += u64::from(d);
        }
        Some(sum)
    }

    fn bound(sum: u64) -> u64 {
        sum.div_ceil(2)
    }
}

/// Depth-bounded search: a solution of length at most `k` if one exists.
/// The result is not necessarily optimal, only within budget.
pub fn solve_bounded(
    inst: &Instance,
    start: &Configuration,
    k: usize,
) -> Result<Option<SwapSequence>> {
    if !component_feasible(inst, start) {
        return Ok(None);
    }
    let h = Heuristic::new(inst);
    let mut placement = start.placement().to_vec();
    let Some(sum) = h.total(&placement) else { return Ok(None) };
    let mut path = Vec::new();
    if bounded_dfs(inst, &h, &mut placement, sum, k, usize::MAX, &mut path) {
        Ok(Some(SwapSequence::new(path)))
    } else {
        Ok(None)
    }
}

fn bounded_dfs(
    inst: &Instance,
    h: &Heuristic,
    placement: &mut Vec<usize>,
    sum: u64,
    remaining: usize,
    last_edge: usize,
    path: &mut Vec<(usize, usize)>,
) -> bool {
    if sum == 0 && (0..placement.len()).all(|v| inst.accepts(placement[v], v)) {
        return true;
    }
    if Heuristic::bound(sum) > remaining as u64 {
        return false;
    }
    for (ei, &(u, v)) in inst.graph().edges().iter().enumerate() {
        if ei == last_edge {
            continue;
        }
        let (tu, tv) = (placement[u], placement[v]);
        let delta = h.min_dist[tu][v] as i64 - h.min_dist[tu][u] as i64
            + h.min_dist[tv][u] as i64
            - h.min_dist[tv][v] as i64;
        placement.swap(u, v);
        path.push((u, v));
        if bounded_dfs(inst, h, placement, (sum as i64 + delta) as u64, remaining - 1, ei, path) {
            return true;
        }
        path.pop();
        placement.swap(u, v);
    }
    false
}

/// True iff `pis` can be reached from `pi0` with **exactly** `k` swaps.
///
/// Halving recursion: k = 0 is an equality test, k = 1 a single-swap test,
/// and otherwise the swap count is split over every intermediate
/// configuration. Parity and displacement pruning cut branches whose answer
/// is forced.
pub fn reach(g: &Graph, pi0: &Configuration, pis: &Configuration, k: usize) -> bool {
    reach_raw(g, pi0.placement(), pis.placement(), k)
}

fn reach_raw(g: &Graph, pi0: &[usize], pis: &[usize], k: usize) -> bool {
    if k == 0 {
        return pi0 == pis;
    }
    let displaced = pi0.iter().zip(pis).filter(|(a, b)| a != b).count();
    if displaced > 2 * k {
        return false;
    }
    // each swap is a transposition, so the relative permutation's parity
    // must match k's
    let pos0 = {
        let mut pos = vec![0; pi0.len()];
        for (v, &t) in pi0.iter().enumerate() {
            pos[t] = v;
        }
        pos
    };
    let rel: Vec<usize> = pis.iter().map(|&t| pos0[t]).collect();
    if (pi0.len() - perm::cycle_count(&rel)) % 2 != k % 2 {
        return false;
    }
    if k == 1 {
        return g.edges().iter().any(|&(u, v)| {
            pi0[u] == pis[v]
                && pi0[v] == pis[u]
                && (0..pi0.len()).all(|w| w == u || w == v || pi0[w] == pis[w])
        }) && pi0 != pis;
    }
    let mut mid: Vec<usize> = (0..pi0.len()).collect();
    loop {
        if reach_raw(g, pi0, &mid, k.div_ceil(2)) && reach_raw(g, &mid, pis, k / 2) {
            return true;
        }
        if !perm::next_permutation(&mut mid) {
            return false;
        }
    }
}

/// Decision procedure built on [`reach`]: is some feasible target
/// configuration reachable from `start` in at most `k` swaps?
///
/// A walk of length `k - 2j` can be padded by repeating one edge `j` times,
/// so reachability within `k` reduces to exact counts `k` and `k - 1`.
pub fn solve_via_reach(
    inst: &Instance,
    start: &Configuration,
    k: usize,
    limits: &SolveLimits,
) -> Result<bool> {
    let n = inst.n();
    if n > limits.max_enum_n {
        return Err(Error::EnumCapExceeded { n, cap: limits.max_enum_n });
    }
    if inst.is_solved(start) {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let mut target = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(enum_targets(inst, start, k, &mut target, &mut used, 0))
}

fn enum_targets(
    inst: &Instance,
    start: &Configuration,
    k: usize,
    target: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    if v == target.len() {
        let pis = Configuration::new(target.clone()).expect("permutation by construction");
        return reach(inst.graph(), start, &pis, k)
            || (k >= 1 && reach(inst.graph(), start, &pis, k - 1));
    }
    for t in 0..target.len() {
        if !used[t] && inst.accepts(t, v) {
            used[t] = true;
            target[v] = t;
            if enum_targets(inst, start, k, target, used, v + 1) {
                used[t] = false;
                return true;
            }
            used[t] = false;
        }
    }
    false
}

/// Iterative-deepening A* guided by the half-total-distance lower bound.
/// Optimal, with memory linear in the solution length; intended for
/// instances too large for BFS memory. Returns `None` when infeasible.
pub fn solve_ida(
    inst: &Instance,
    start: &Configuration,
    limits: &SolveLimits,
) -> Result<Option<Solved>> {
    if !component_feasible(inst, start) {
        return Ok(None);
    }
    let h = Heuristic::new(inst);
    let mut placement = start.placement().to_vec();
    let Some(sum) = h.total(&placement) else { return Ok(None) };
    let mut threshold = Heuristic::bound(sum);
    let mut nodes = 0u64;
    loop {
        let mut path = Vec::new();
        match ida_dfs(inst, &h, &mut placement, sum, 0, threshold, usize::MAX, &mut path, &mut nodes, limits)?
        {
            IdaOutcome::Found => {
                let length = path.len();
                return Ok(Some(Solved { swaps: SwapSequence::new(path), length, states: nodes }));
            }
            IdaOutcome::Min(next) => {
                debug_assert!(next > threshold);
                threshold = next;
            }
            IdaOutcome::Exhausted => return Ok(None),
        }
    }
}

enum IdaOutcome {
    Found,
    Min(u64),
    Exhausted,
}

#[allow(clippy::too_many_arguments)]
fn ida_dfs(
    inst: &Instance,
    h: &Heuristic,
    placement: &mut Vec<usize>,
    sum: u64,
    g: u64,
    threshold: u64,
    last_edge: usize,
    path: &mut Vec<(usize, usize)>,
    nodes: &mut u64,
    limits: &SolveLimits,
) -> Result<IdaOutcome> {
    *nodes += 1;
    if *nodes > limits.max_nodes {
        return Err(Error::NodeBudgetExceeded(*nodes));
    }
    let f = g + Heuristic::bound(sum);
    if f > threshold {
        return Ok(IdaOutcome::Min(f));
    }
    if sum == 0 && (0..placement.len()).all(|v| inst.accepts(placement[v], v)) {
        return Ok(IdaOutcome::Found);
    }
    let mut min_next = u64::MAX;
    for (ei, &(u, v)) in inst.graph().edges().iter().enumerate() {
        if ei == last_edge {
            continue;
        }
        let (tu, tv) = (placement[u], placement[v]);
        let delta = h.min_dist[tu][v] as i64 - h.min_dist[tu][u] as i64
            + h.min_dist[tv][u] as i64
            - h.min_dist[tv][v] as i64;
        placement.swap(u, v);
        path.push((u, v));
        let outcome = ida_dfs(
            inst,
            h,
            placement,
            (sum as i64 + delta) as u64,
            g + 1,
            threshold,
            ei,
            path,
            nodes,
            limits,
        )?;
        match outcome {
            IdaOutcome::Found => return Ok(IdaOutcome::Found),
            IdaOutcome::Min(m) => min_next = min_next.min(m),
            IdaOutcome::Exhausted => {}
        }
        path.pop();
        placement.swap(u, v);
    }
    if min_next == u64::MAX {
        Ok(IdaOutcome::Exhausted)
    } else {
        Ok(IdaOutcome::Min(min_next))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn kn(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    fn limits() -> SolveLimits {
        SolveLimits::default()
    }

    /// Reversed tokens on a path: token v's destination is n-1-v.
    fn reversed_path(n: usize) -> Instance {
        Instance::new_ts(path(n), (0..n).map(|v| n - 1 - v).collect()).unwrap()
    }

    #[test]
    fn bfs_identity_is_zero() {
        let inst = Instance::new_ts(path(3), vec![0, 1, 2]).unwrap();
        let sol = solve_bfs(&inst, &Configuration::identity(3), None, &limits()).unwrap().unwrap();
        assert_eq!(sol.length, 0);
    }

    #[test]
    fn bfs_reversed_path3_is_three() {
        let inst = reversed_path(3);
        let start = Configuration::identity(3);
        let sol = solve_bfs(&inst, &start, None, &limits()).unwrap().unwrap();
        assert_eq!(sol.length, 3);
        assert!(inst.verify_solution(&start, &sol.swaps).valid);
        // budget below the optimum
        assert!(solve_bfs(&inst, &start, Some(2), &limits()).unwrap().is_none());
    }

    #[test]
    fn bfs_k4_four_cycle_is_three() {
        // tokens form one 4-cycle: dest(t) = t+1 mod 4
        let inst = Instance::new_ts(kn(4), (0..4).map(|v| (v + 1) % 4).collect()).unwrap();
        let sol = solve_bfs(&inst, &Configuration::identity(4), None, &limits()).unwrap().unwrap();
        assert_eq!(sol.length, 3);
    }

    #[test]
    fn bfs_infeasible_returns_none() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        // token 0 can only finish in the other component
        let inst = Instance::new_sts(
            g,
            vec![vec![2], vec![0, 1], vec![2, 3], vec![2, 3]],
        )
        .unwrap();
        assert!(solve_bfs(&inst, &Configuration::identity(4), None, &limits()).unwrap().is_none());
    }

    #[test]
    fn bfs_state_cap_is_an_error() {
        let inst = reversed_path(7);
        let tight = SolveLimits { max_states: 10, ..limits() };
        let err = solve_bfs(&inst, &Configuration::identity(7), None, &tight).unwrap_err();
        assert!(matches!(err, Error::StateBudgetExceeded(_)));
    }

    #[test]
    fn bounded_respects_budget() {
        let inst = reversed_path(3);
        let start = Configuration::identity(3);
        assert!(solve_bounded(&inst, &start, 2).unwrap().is_none());
        let sol = solve_bounded(&inst, &start, 3).unwrap().unwrap();
        assert!(sol.len() <= 3);
        assert!(inst.verify_solution(&start, &sol).valid);

        let single = Instance::new_ts(path(2), vec![1, 0]).unwrap();
        let sol = solve_bounded(&single, &Configuration::identity(2), 1).unwrap().unwrap();
        assert_eq!(sol.swaps(), &[(0, 1)]);
    }

    #[test]
    fn reach_base_cases() {
        let g = path(2);
        let id = Configuration::identity(2);
        assert!(reach(&g, &id, &id, 0));
        // one transposition cannot fix both tokens
        assert!(!reach(&g, &id, &id, 1));
        assert!(reach(&g, &id, &id, 2));
        let swapped = Configuration::new(vec![1, 0]).unwrap();
        assert!(reach(&g, &id, &swapped, 1));
        assert!(!reach(&g, &id, &swapped, 2));
    }

    #[test]
    fn reach_parity() {
        let g = path(3);
        let id = Configuration::identity(3);
        let rev = Configuration::new(vec![2, 1, 0]).unwrap();
        assert!(!reach(&g, &id, &rev, 2));
        assert!(reach(&g, &id, &rev, 3));
        assert!(!reach(&g, &id, &rev, 4));
        assert!(reach(&g, &id, &rev, 5));
    }

    #[test]
    fn via_reach_matches_bfs_decision() {
        let inst = reversed_path(3);
        let start = Configuration::identity(3);
        assert!(!solve_via_reach(&inst, &start, 2, &limits()).unwrap());
        assert!(solve_via_reach(&inst, &start, 3, &limits()).unwrap());

        let solved = Instance::new_ts(path(2), vec![0, 1]).unwrap();
        assert!(solve_via_reach(&solved, &Configuration::identity(2), 0, &limits()).unwrap());
    }

    #[test]
    fn via_reach_enum_cap() {
        let inst = reversed_path(3);
        let tight = SolveLimits { max_enum_n: 2, ..limits() };
        let err = solve_via_reach(&inst, &Configuration::identity(3), 1, &tight).unwrap_err();
        assert!(matches!(err, Error::EnumCapExceeded { .. }));
    }

    #[test]
    fn ida_matches_bfs() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        // leaf 3-cycle, center fixed
        let inst = Instance::new_ts(star, vec![0, 2, 3, 1]).unwrap();
        let start = Configuration::identity(4);
        let sol = solve_ida(&inst, &start, &limits()).unwrap().unwrap();
        assert_eq!(sol.length, 4);
        assert!(inst.verify_solution(&start, &sol.swaps).valid);

        let id = Instance::new_ts(path(3), vec![0, 1, 2]).unwrap();
        assert_eq!(solve_ida(&id, &Configuration::identity(3), &limits()).unwrap().unwrap().length, 0);
    }

    #[test]
    fn ida_node_cap_is_an_error() {
        let inst = reversed_path(6);
        let tight = SolveLimits { max_nodes: 5, ..limits() };
        let err = solve_ida(&inst, &Configuration::identity(6), &tight).unwrap_err();
        assert!(matches!(err, Error::NodeBudgetExceeded(_)));
    }

    #[test]
    fn bfs_sequence_is_lexicographically_least() {
        // two shortest solutions exist on K3 for a 3-cycle; the reported one
        // must start with the smallest usable edge
        let inst = Instance::new_ts(kn(3), vec![1, 2, 0]).unwrap();
        let sol = solve_bfs(&inst, &Configuration::identity(3), None, &limits()).unwrap().unwrap();
        assert_eq!(sol.length, 2);
        assert_eq!(sol.swaps.swaps()[0], (0, 1));
    }
}
