//! Solvability decisions: exact certificate search, the reference oracle,
//! tree collapse, reachability and canonical solvability.

mod oracle;
mod search;
mod tree;

use serde::Serialize;

use crate::config::{Configuration, Demand, MoveList};
use crate::error::{PebbleError, Result};
use crate::graph::Graph;
use crate::moves::verify_solution;
use crate::potential::gamma_witness;

pub use oracle::{oracle_solvable, OracleOptions};
pub use tree::{collapse_leaf, solve_tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Solvable,
    Unsolvable,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub max_depth: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    /// Acyclic certificate; present iff solvable.
    pub certificate: Option<MoveList>,
    /// Vertex with negative potential, when that is how unsolvability was shown.
    pub witness: Option<usize>,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn is_solvable(&self) -> bool {
        self.status == Status::Solvable
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Search nodes allowed before reporting `BudgetExceeded`.
    pub node_cap: u64,
    pub collapse_leaves: bool,
    pub gamma_pruning: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { node_cap: 10_000_000, collapse_leaves: true, gamma_pruning: true }
    }
}

impl SolverOptions {
    pub fn with_node_cap(node_cap: u64) -> Self {
        Self { node_cap, ..Self::default() }
    }
}

/// Exact cover-solvability decision.
///
/// `c` may be a signed configuration. A `Solvable` result always carries a
/// verified certificate with acyclic support. `BudgetExceeded` means the node
/// cap was hit before the question was settled.
pub fn is_cover_solvable(g: &Graph, c: &Configuration, d: &Demand, opts: &SolverOptions) -> Result<SolveResult> {
    let n = g.vertex_count();
    c.check_len(n)?;
    d.check_len(n)?;
    if c.contains(d) {
        return Ok(SolveResult {
            status: Status::Solvable,
            certificate: Some(MoveList::new()),
            witness: None,
            stats: SearchStats::default(),
        });
    }
    if opts.gamma_pruning {
        if let Some(v) = gamma_witness(g, c, d)? {
            return Ok(SolveResult {
                status: Status::Unsolvable,
                certificate: None,
                witness: Some(v),
                stats: SearchStats::default(),
            });
        }
    }
    let tuning = search::Tuning {
        node_cap: opts.node_cap,
        collapse_leaves: opts.collapse_leaves,
        gamma_pruning: opts.gamma_pruning,
    };
    let outcome = search::solve_surplus(g, c.surplus(d), tuning)?;
    let stats = SearchStats { nodes_expanded: outcome.nodes, max_depth: outcome.max_depth };
    match outcome.solution {
        Some(ml) => {
            let certificate = normalize_acyclic(g, c, d, &ml)?;
            Ok(SolveResult { status: Status::Solvable, certificate: Some(certificate), witness: None, stats })
        }
        None => Ok(SolveResult { status: Status::Unsolvable, certificate: None, witness: None, stats }),
    }
}

/// Cancels directed cycles in the support of a verified move list.
///
/// Each round finds a directed cycle and subtracts its smallest count from
/// every arc on it; the per-vertex balances never decrease, so the result
/// still verifies, with strictly fewer moves per round.
pub fn normalize_acyclic(g: &Graph, c: &Configuration, d: &Demand, ml: &MoveList) -> Result<MoveList> {
    if !verify_solution(g, c, d, ml)? {
        return Err(PebbleError::NotASolution);
    }
    let mut out = ml.clone();
    while let Some(cycle) = out.find_cycle() {
        let arcs: Vec<(usize, usize)> = (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect();
        let least = arcs.iter().map(|&(a, b)| out.get(a, b)).min().expect("cycle is non-empty");
        for (a, b) in arcs {
            let have = out.get(a, b);
            out.set(a, b, have - least);
        }
    }
    debug_assert!(verify_solution(g, c, d, &out)?);
    Ok(out)
}

/// Whether one pebble can be moved onto `target`.
pub fn is_reachable(g: &Graph, c: &Configuration, target: usize, opts: &SolverOptions) -> Result<SolveResult> {
    g.check_vertex(target)?;
    is_cover_solvable(g, c, &Demand::reach(g.vertex_count(), target), opts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalResult {
    pub solvable: bool,
    /// Vertices that cannot be reached, ascending.
    pub unreachable: Vec<usize>,
    pub stats: SearchStats,
}

/// Canonical pebbling solvability: every vertex reachable.
pub fn is_canonical_solvable(g: &Graph, c: &Configuration, opts: &SolverOptions) -> Result<CanonicalResult> {
    let n = g.vertex_count();
    c.check_len(n)?;
    if let Some((vertex, &count)) = c.counts().iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(PebbleError::NegativeCount { vertex, count });
    }
    let mut unreachable = Vec::new();
    let mut stats = SearchStats::default();
    for v in 0..n {
        let r = is_reachable(g, c, v, opts)?;
        stats.nodes_expanded += r.stats.nodes_expanded;
        stats.max_depth = stats.max_depth.max(r.stats.max_depth);
        if !r.is_solvable() {
            unreachable.push(v);
        }
    }
    Ok(CanonicalResult { solvable: unreachable.is_empty(), unreachable, stats })
}
