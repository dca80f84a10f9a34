//! Preprocessing in k + max degree: misplaced-token detection, early
//! no-answers, and radius-k trimming producing an equivalent sub-instance.

use crate::error::Result;
use crate::graph::Graph;
use crate::instance::Instance;

/// Result of kernelization. `No` is a definitive no-answer for budget `k`.
#[derive(Debug, Clone)]
pub enum KernelResult {
    No,
    Kernel(Kernel),
}

/// An equivalent sub-instance together with the vertex renaming.
/// `vertex_map[new] = old`. The kernel instance has a solution of length at
/// most `k` iff the original does.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub instance: Instance,
    /// Maps kernel vertex ids back to original ids, ascending.
    pub vertex_map: Vec<usize>,
}

impl KernelResult {
    pub fn is_no(&self) -> bool {
        matches!(self, KernelResult::No)
    }
}

/// The misplaced set: vertices whose initial token does not accept its start
/// vertex. Token identity equals initial vertex, so the start configuration
/// is the identity.
pub fn misplaced_vertices(inst: &Instance) -> Vec<usize> {
    (0..inst.n()).filter(|&v| !inst.accepts(v, v)).collect()
}

/// Trim the instance to the <=k-ball around the misplaced set.
///
/// More than `2k` misplaced tokens is an immediate no (each swap touches
/// exactly two tokens). Components of the ball without misplaced tokens are
/// dropped; destination sets are intersected with the ball, and a misplaced
/// token losing all destinations is also a no.
pub fn kernelize(inst: &Instance, k: usize) -> Result<KernelResult> {
    let n = inst.n();
    let misplaced = misplaced_vertices(inst);
    if misplaced.len() > 2 * k {
        return Ok(KernelResult::No);
    }

    // multi-source BFS to depth k from the misplaced set
    let mut dist = vec![u32::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for &v in &misplaced {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        if dist[v] as usize >= k {
            continue;
        }
        for &w in inst.graph().neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }

    let in_ball: Vec<usize> = (0..n).filter(|&v| dist[v] != u32::MAX).collect();

    // induced subgraph on the ball
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in in_ball.iter().enumerate() {
        new_id[v] = i;
    }
    let mut edges = Vec::new();
    for &(u, v) in inst.graph().edges() {
        if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
            edges.push((new_id[u], new_id[v]));
        }
    }
    let ball_graph = Graph::new(in_ball.len(), edges)?;

    // drop components without a misplaced vertex; any <=k solution never
    // moves tokens there
    let comp = ball_graph.components();
    let mut keep_comp = vec![false; in_ball.len() + 1];
    for &v in &misplaced {
        keep_comp[comp[new_id[v]]] = true;
    }
    let kept: Vec<usize> =
        in_ball.iter().copied().filter(|&v| keep_comp[comp[new_id[v]]]).collect();

    let mut final_id = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        final_id[v] = i;
    }
    let mut edges = Vec::new();
    for &(u, v) in inst.graph().edges() {
        if final_id[u] != usize::MAX && final_id[v] != usize::MAX {
            edges.push((final_id[u], final_id[v]));
        }
    }
    let kernel_graph = Graph::new(kept.len(), edges)?;

    let mut dests = Vec::with_capacity(kept.len());
    for &old in &kept {
        let set: Vec<usize> = inst
            .dests(old)
            .iter()
            .filter_map(|&d| (final_id[d] != usize::MAX).then(|| final_id[d]))
            .collect();
        if set.is_empty() {
            // a misplaced token whose every destination lies outside the
            // ball cannot be placed within k swaps
            return Ok(KernelResult::No);
        }
        dests.push(set);
    }

    let instance = Instance::new_sts(kernel_graph, dests)?;
    Ok(KernelResult::Kernel(Kernel { instance, vertex_map: kept }))
}

/// The degree-based kernel size bound `2k + 2k^2 * Delta^k`, saturating.
pub fn kernel_size_bound(k: usize, max_degree: usize) -> u64 {
    let k64 = k as u64;
    let pow = (max_degree as u64).checked_pow(k.min(u32::MAX as usize) as u32);
    match pow.and_then(|p| p.checked_mul(2 * k64 * k64)) {
        Some(x) => x.saturating_add(2 * k64),
        None => u64::MAX,
    }
}
