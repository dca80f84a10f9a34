//! Feasibility of STS instances via perfect matching in the bipartite
//! token-destination graph.

use crate::instance::Instance;

/// Outcome of the feasibility check. When feasible, `assignment[t]` is the
/// destination vertex chosen for token `t` by one concrete perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    pub feasible: bool,
    pub assignment: Option<Vec<usize>>,
}

/// Decide whether any final placement puts every token on an allowed
/// destination. Repeated augmenting-path search with tokens and destinations
/// scanned in ascending index order, so the returned matching is
/// deterministic.
pub fn check_feasible(inst: &Instance) -> MatchingResult {
    let n = inst.n();
    // matched_token[v] = token assigned to vertex v
    let mut matched_token = vec![usize::MAX; n];
    let mut size = 0;
    for t in 0..n {
        let mut visited = vec![false; n];
        if augment(inst, t, &mut matched_token, &mut visited) {
            size += 1;
        }
    }
    if size < n {
        return MatchingResult { feasible: false, assignment: None };
    }
    let mut assignment = vec![usize::MAX; n];
    for (v, &t) in matched_token.iter().enumerate() {
        assignment[t] = v;
    }
    MatchingResult { feasible: true, assignment: Some(assignment) }
}

fn augment(inst: &Instance, t: usize, matched_token: &mut [usize], visited: &mut [bool]) -> bool {
    for &v in inst.dests(t) {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if matched_token[v] == usize::MAX || augment(inst, matched_token[v], matched_token, visited)
        {
            matched_token[v] = t;
            return true;
        }
    }
    false
}
