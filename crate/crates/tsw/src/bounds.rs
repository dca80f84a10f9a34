//! Lower and upper bounds on the optimal solution length.

use crate::error::{Error, Result};
use crate::feasibility;
use crate::instance::{Configuration, Instance, SwapSequence};

/// The half-total-distance lower bound: ceil(L_min / 2) where L_min sums,
/// over all tokens, the minimum hop distance from the token's position to
/// any of its destinations. For TS this is exactly ceil(L(I) / 2).
pub fn lower_bound(inst: &Instance, start: &Configuration) -> Result<u64> {
    if !feasibility::check_feasible(inst).feasible {
        return Err(Error::Infeasible);
    }
    let dm = inst.graph().all_pairs_distances();
    let sum = inst.total_dist(start, &dm).ok_or(Error::Infeasible)?;
    Ok(sum.div_ceil(2))
}

/// True iff the (valid) solution consists of happy swaps only, i.e. every
/// swap strictly decreases both tokens' distance to destination. A solution
/// has length exactly L(I)/2 iff such a solution exists.
pub fn is_happy_only(inst: &Instance, start: &Configuration, s: &SwapSequence) -> Result<bool> {
    let report = inst.verify_solution(start, s);
    if !report.valid {
        return Err(Error::InvalidSolution("sequence is not a valid solution".into()));
    }
    Ok(report.class_counts.happy() == report.length)
}

/// The `r * n` upper bound, valid whenever the graph has no induced path on
/// `r + 1` vertices. The caller asserts P_{r+1}-freeness; it is not checked.
pub fn upper_bound_pr_free(inst: &Instance, r: u64) -> Result<u64> {
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    Ok(r * inst.n() as u64)
}
