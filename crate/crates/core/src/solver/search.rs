//! Exact move-list search on signed surplus vectors.
//!
//! The search works on `x = C - D` with an all-zero demand. Two reductions
//! are applied:
//!
//! 1. Pendant vertices are collapsed into their neighbour until only the
//!    2-core (or a single vertex) remains. The collapse is exact in both
//!    directions: any solution restricts to one of the collapsed instance,
//!    and the collapse itself is realised by explicit moves along the
//!    removed edge.
//! 2. On the remaining core, the lowest-index vertex with negative surplus
//!    must receive another move from some neighbour. Branching over that
//!    neighbour is complete: if `x` is solved by `m`, the deficit vertex has
//!    a positive in-count in `m`, and taking that move leaves a state solved
//!    by `m` minus one move. Since solvability of a state depends only on its
//!    surplus vector, failed vectors are memoised.
//!
//! States are pruned when the surplus cannot pay for the outstanding
//! deficit (each move loses one pebble net and raises one vertex by one) or
//! when the potential is negative at some vertex.

use std::cmp::Reverse;
use std::collections::HashSet;

use crate::config::MoveList;
use crate::error::{PebbleError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct Tuning {
    pub node_cap: u64,
    pub collapse_leaves: bool,
    pub gamma_pruning: bool,
}

pub(crate) struct Outcome {
    pub solution: Option<MoveList>,
    pub nodes: u64,
    pub max_depth: u64,
}

/// Collapses pendant vertices of `g` into their neighbours, lowest index
/// first. Returns the surviving vertices (ascending) and the moves made.
pub(crate) fn collapse_pendants(g: &Graph, x: &mut [i64]) -> (Vec<usize>, MoveList) {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut moves = MoveList::new();
    'outer: while remaining > 1 {
        for leaf in 0..n {
            if !alive[leaf] || degree[leaf] != 1 {
                continue;
            }
            let nbr = *g
                .neighbors(leaf)
                .iter()
                .find(|&&u| alive[u])
                .expect("pendant vertex has a live neighbour");
            let s = x[leaf];
            if s >= 0 {
                let k = s / 2;
                moves.add(leaf, nbr, k as u64);
                x[leaf] -= 2 * k;
                x[nbr] += k;
            } else {
                moves.add(nbr, leaf, (-s) as u64);
                x[leaf] = 0;
                x[nbr] += 2 * s;
            }
            alive[leaf] = false;
            degree[nbr] -= 1;
            remaining -= 1;
            continue 'outer;
        }
        break;
    }
    ((0..n).filter(|&v| alive[v]).collect(), moves)
}

struct Dfs {
    adjacency: Vec<Vec<usize>>,
    /// `weights[v][u] = 2^(span - dist(u, v))`
    weights: Option<Vec<Vec<i128>>>,
    gamma: Vec<i128>,
    x: Vec<i64>,
    positive: i128,
    negative: i128,
    failed: HashSet<Vec<i64>>,
    trail: Vec<(usize, usize)>,
    nodes: u64,
    max_depth: u64,
    cap: u64,
}

impl Dfs {
    fn shift(&mut self, v: usize, delta: i64) {
        let old = self.x[v];
        let new = old + delta;
        self.positive += (new.max(0) - old.max(0)) as i128;
        self.negative += ((-new).max(0) - (-old).max(0)) as i128;
        self.x[v] = new;
    }

    fn apply(&mut self, from: usize, to: usize, sign: i64) {
        self.shift(from, -2 * sign);
        self.shift(to, sign);
        if let Some(w) = &self.weights {
            let s = sign as i128;
            for (v, g) in self.gamma.iter_mut().enumerate() {
                *g += s * (w[v][to] - 2 * w[v][from]);
            }
        }
    }

    fn feasible(&self) -> bool {
        self.positive >= 2 * self.negative && self.gamma.iter().all(|&g| g >= 0)
    }

    fn run(&mut self, depth: u64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(PebbleError::BudgetExceeded { cap: self.cap });
        }
        self.max_depth = self.max_depth.max(depth);
        let Some(k) = self.x.iter().position(|&s| s < 0) else {
            return Ok(true);
        };
        if self.failed.contains(&self.x) {
            return Ok(false);
        }
        let mut order = self.adjacency[k].clone();
        order.sort_by_key(|&j| (Reverse(self.x[j]), j));
        for j in order {
            self.apply(j, k, 1);
            if self.feasible() && self.run(depth + 1)? {
                self.trail.push((j, k));
                return Ok(true);
            }
            self.apply(j, k, -1);
        }
        self.failed.insert(self.x.clone());
        Ok(false)
    }
}

/// Decides whether surplus vector `x` (demand zero) is solvable on `g`.
pub(crate) fn solve_surplus(g: &Graph, mut x: Vec<i64>, tuning: Tuning) -> Result<Outcome> {
    let (core, pre) = if tuning.collapse_leaves {
        collapse_pendants(g, &mut x)
    } else {
        ((0..g.vertex_count()).collect(), MoveList::new())
    };
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in core.iter().enumerate() {
        local[v] = i;
    }
    let adjacency: Vec<Vec<usize>> = core
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&u| local[u] != usize::MAX).map(|&u| local[u]).collect())
        .collect();
    let cx: Vec<i64> = core.iter().map(|&v| x[v]).collect();

    let weights = if tuning.gamma_pruning { potential_weights(g, &core, &cx) } else { None };
    let gamma = match &weights {
        Some(w) => w.iter().map(|row| row.iter().zip(&cx).map(|(&a, &b)| a * b as i128).sum()).collect(),
        None => vec![0; core.len()],
    };
    let positive = cx.iter().filter(|&&s| s > 0).map(|&s| s as i128).sum();
    let negative = cx.iter().filter(|&&s| s < 0).map(|&s| -(s as i128)).sum();
    let mut dfs = Dfs {
        adjacency,
        weights,
        gamma,
        x: cx,
        positive,
        negative,
        failed: HashSet::new(),
        trail: Vec::new(),
        nodes: 0,
        max_depth: 0,
        cap: tuning.node_cap,
    };
    let solved = dfs.feasible() && dfs.run(0)?;
    let solution = solved.then(|| {
        let mut ml = pre;
        for &(j, k) in &dfs.trail {
            ml.add(core[j], core[k], 1);
        }
        ml
    });
    Ok(Outcome { solution, nodes: dfs.nodes, max_depth: dfs.max_depth })
}

/// Integer potential weights scaled by `2^span`, or `None` when the scaled
/// values could overflow `i128`.
fn potential_weights(g: &Graph, core: &[usize], x: &[i64]) -> Option<Vec<Vec<i128>>> {
    let span = core
        .iter()
        .flat_map(|&a| core.iter().map(move |&b| g.distance(a, b)))
        .max()
        .unwrap_or(0);
    // Moves never raise sum |x| by more than 3 and there are at most
    // sum(x) + 1 of them along any branch.
    let abs: i128 = x.iter().map(|&s| (s as i128).abs()).sum();
    let bound = (abs * 4 + 8) as f64;
    if bound * 2f64.powi(span as i32 + 2) > 2f64.powi(125) {
        return None;
    }
    Some(
        core.iter()
            .map(|&v| core.iter().map(|&u| 1i128 << (span - g.distance(u, v))).collect())
            .collect(),
    )
}
