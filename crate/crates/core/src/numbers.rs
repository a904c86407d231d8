//! Cover pebbling numbers and pebbling numbers by exhaustive sweeps.
//!
//! For each size `k` every configuration of size `k` is tested, in
//! colexicographic order. Because adding pebbles never destroys solvability,
//! the first size at which every configuration is solvable is the number, and
//! the first failing configuration one size below is reported as extremal.
//! A configuration that dominates a solvable configuration of the previous
//! size by one pebble is marked solvable without a search.

use std::collections::HashMap;

use serde::Serialize;

use crate::config::{Configuration, Demand};
use crate::error::{PebbleError, Result};
use crate::graph::Graph;
use crate::solver::{is_canonical_solvable, is_cover_solvable, SolverOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberResult {
    pub value: u64,
    /// First (colex) configuration of size `value - 1` that fails.
    pub extremal_config: Configuration,
    pub configs_checked: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumberOptions {
    pub solver: SolverOptions,
    /// Start the sweep just below the stacking bound instead of at zero.
    pub warm_start: bool,
    /// Largest size swept before giving up with `BudgetExceeded`.
    pub max_size: u64,
}

impl Default for NumberOptions {
    fn default() -> Self {
        Self { solver: SolverOptions::default(), warm_start: false, max_size: 1 << 20 }
    }
}

/// Compositions of `total` into `parts` non-negative parts in
/// colexicographic order, starting from `(total, 0, ..., 0)`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<i64>>,
}

impl Compositions {
    pub fn new(total: i64, parts: usize) -> Self {
        let current = (parts > 0 || total == 0).then(|| {
            let mut v = vec![0; parts];
            if let Some(first) = v.first_mut() {
                *first = total;
            }
            v
        });
        Self { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut prefix = next.first().copied().unwrap_or(0);
        for j in 1..next.len() {
            if prefix > 0 {
                next[j] += 1;
                next[0] = prefix - 1;
                for slot in &mut next[1..j] {
                    *slot = 0;
                }
                self.current = Some(next);
                break;
            }
            prefix += next[j];
        }
        Some(out)
    }
}

/// `max_v Σ_u D(u) 2^dist(u, v)`, saturating at `u128::MAX`.
///
/// A stack of one fewer pebbles on the maximising vertex is never
/// solvable: `Σ C(u) 2^dist(u, v)` cannot increase under a move.
pub fn stacking_lower_bound(g: &Graph, d: &Demand) -> u128 {
    (0..g.vertex_count())
        .map(|v| {
            (0..g.vertex_count()).fold(0u128, |acc, u| {
                let weight = 1u128.checked_shl(g.distance(u, v)).unwrap_or(u128::MAX);
                acc.saturating_add((d.get(u) as u128).saturating_mul(weight))
            })
        })
        .max()
        .unwrap_or(0)
}

fn sweep<F>(n: usize, start: u64, opts: &NumberOptions, mut solvable: F) -> Result<Option<NumberResult>>
where
    F: FnMut(&Configuration) -> Result<bool>,
{
    let mut checked = 0u64;
    let mut previous: HashMap<Vec<i64>, bool> = HashMap::new();
    let mut extremal: Option<Configuration> = None;
    for k in start..=opts.max_size {
        let mut current = HashMap::new();
        let mut first_failure = None;
        for counts in Compositions::new(k as i64, n) {
            let dominated = (0..n).any(|v| {
                counts[v] > 0 && {
                    let mut smaller = counts.clone();
                    smaller[v] -= 1;
                    previous.get(&smaller).copied().unwrap_or(false)
                }
            });
            let ok = dominated || {
                checked += 1;
                solvable(&Configuration::new(counts.clone())?)?
            };
            if !ok && first_failure.is_none() {
                first_failure = Some(Configuration::new(counts.clone())?);
            }
            current.insert(counts, ok);
        }
        match first_failure {
            Some(c) => extremal = Some(c),
            None => {
                return Ok(extremal.map(|extremal_config| NumberResult {
                    value: k,
                    extremal_config,
                    configs_checked: checked,
                }));
            }
        }
        previous = current;
    }
    Err(PebbleError::BudgetExceeded { cap: opts.max_size })
}

/// Exact `γ_G(D)`.
pub fn cover_pebbling_number(g: &Graph, d: &Demand, opts: &NumberOptions) -> Result<NumberResult> {
    let n = g.vertex_count();
    d.check_len(n)?;
    if d.is_zero() {
        return Err(PebbleError::ZeroDemand);
    }
    let solve = |c: &Configuration| Ok(is_cover_solvable(g, c, d, &opts.solver)?.is_solvable());
    if opts.warm_start {
        let bound = stacking_lower_bound(g, d);
        let start = u64::try_from(bound.saturating_sub(1)).unwrap_or(u64::MAX);
        if start > opts.max_size {
            return Err(PebbleError::BudgetExceeded { cap: opts.max_size });
        }
        // A sweep that is fully solvable at its first size means the bound
        // was not a lower bound here; fall back to the full sweep.
        if let Some(result) = sweep(n, start, opts, solve)? {
            return Ok(result);
        }
    }
    sweep(n, 0, opts, solve)?.ok_or(PebbleError::ZeroDemand)
}

/// `γ_G(R_target)`.
pub fn reachability_number(g: &Graph, target: usize, opts: &NumberOptions) -> Result<NumberResult> {
    g.check_vertex(target)?;
    cover_pebbling_number(g, &Demand::reach(g.vertex_count(), target), opts)
}

/// `π(G)`: least size at which every configuration reaches every vertex.
pub fn pebbling_number(g: &Graph, opts: &NumberOptions) -> Result<NumberResult> {
    let solve = |c: &Configuration| Ok(is_canonical_solvable(g, c, &opts.solver)?.solvable);
    sweep(g.vertex_count(), 0, opts, solve)?.ok_or(PebbleError::ZeroDemand)
}

/// Serializable summary used by reports.
#[derive(Debug, Clone, Serialize)]
pub struct NumberSummary {
    pub value: u64,
    pub extremal_config: Vec<i64>,
    pub configs_checked: u64,
}

impl From<&NumberResult> for NumberSummary {
    fn from(r: &NumberResult) -> Self {
        Self {
            value: r.value,
            extremal_config: r.extremal_config.counts().to_vec(),
            configs_checked: r.configs_checked,
        }
    }
}
