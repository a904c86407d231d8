//! Move-list certificates: verification and simulation.
//!
//! A move list `n` solves `C` for `D` on `G` when every vertex `k` satisfies
//!
//! ```text
//! C(k) + sum_l n(l, k) - 2 * sum_l n(k, l) >= D(k)
//! ```
//!
//! and `n` is zero off the edge set. For non-negative `C` this is equivalent
//! to solvability by a legal sequence of pebbling moves.

use crate::config::{Configuration, Demand, MoveList};
use crate::error::Result;
use crate::graph::Graph;

fn balances(g: &Graph, c: &Configuration, ml: &MoveList) -> Result<Vec<i128>> {
    let n = g.vertex_count();
    c.check_len(n)?;
    ml.check_edges(g)?;
    let mut out: Vec<i128> = c.counts().iter().map(|&x| x as i128).collect();
    for ((from, to), count) in ml.iter() {
        out[from] -= 2 * count as i128;
        out[to] += count as i128;
    }
    Ok(out)
}

/// Checks the per-vertex inequalities of a move-list certificate.
pub fn verify_solution(g: &Graph, c: &Configuration, d: &Demand, ml: &MoveList) -> Result<bool> {
    Ok(violations(g, c, d, ml)?.is_empty())
}

/// Vertices whose inequality fails, with the final balance and the demand.
pub fn violations(g: &Graph, c: &Configuration, d: &Demand, ml: &MoveList) -> Result<Vec<(usize, i128, i64)>> {
    d.check_len(g.vertex_count())?;
    let bal = balances(g, c, ml)?;
    Ok(bal
        .into_iter()
        .enumerate()
        .filter(|&(k, b)| b < d.get(k) as i128)
        .map(|(k, b)| (k, b, d.get(k)))
        .collect())
}

/// Executes every move of `ml` in the signed model.
///
/// The result is flagged extended whenever some count went negative.
pub fn apply_moves(g: &Graph, c: &Configuration, ml: &MoveList) -> Result<Configuration> {
    let bal = balances(g, c, ml)?;
    let counts = bal
        .into_iter()
        .map(|b| i64::try_from(b).expect("pebble count overflow"))
        .collect();
    Ok(Configuration::extended(counts).normalized())
}

/// Every legal single move `(from, to)` of a non-negative configuration,
/// ascending by `from` then `to`.
pub fn legal_moves(g: &Graph, c: &Configuration) -> Vec<(usize, usize)> {
    (0..g.vertex_count())
        .filter(|&u| c.get(u) >= 2)
        .flat_map(|u| g.neighbors(u).iter().map(move |&w| (u, w)))
        .collect()
}
