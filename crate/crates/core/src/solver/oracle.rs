use std::collections::{HashSet, VecDeque};

use crate::config::{Configuration, Demand};
use crate::error::{PebbleError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    /// Maximum number of distinct configurations visited before giving up.
    pub state_cap: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { state_cap: 5_000_000 }
    }
}

/// Reference decision procedure: breadth-first search over every
/// configuration reachable by legal pebbling moves.
///
/// Only usable on tiny instances; the reachable state space grows
/// exponentially with the number of pebbles.
pub fn oracle_solvable(g: &Graph, c: &Configuration, d: &Demand, opts: &OracleOptions) -> Result<bool> {
    let n = g.vertex_count();
    c.check_len(n)?;
    d.check_len(n)?;
    if let Some((vertex, &count)) = c.counts().iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(PebbleError::NegativeCount { vertex, count });
    }
    let done = |state: &[i64]| state.iter().zip(d.counts()).all(|(a, b)| a >= b);
    let start = c.counts().to_vec();
    if done(&start) {
        return Ok(true);
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        for u in (0..n).filter(|&u| state[u] >= 2) {
            for &w in g.neighbors(u) {
                let mut next = state.clone();
                next[u] -= 2;
                next[w] += 1;
                if done(&next) {
                    return Ok(true);
                }
                if seen.insert(next.clone()) {
                    if seen.len() as u64 > opts.state_cap {
                        return Err(PebbleError::BudgetExceeded { cap: opts.state_cap });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conf(v: &[i64]) -> Configuration {
        Configuration::new(v.to_vec()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let opts = OracleOptions::default();
        let k2 = Graph::complete(2).unwrap();
        assert!(!oracle_solvable(&k2, &conf(&[2, 0]), &Demand::unit(2), &opts).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert!(oracle_solvable(&p3, &conf(&[7, 0, 0]), &Demand::unit(3), &opts).unwrap());
        assert!(!oracle_solvable(&p3, &conf(&[6, 0, 0]), &Demand::unit(3), &opts).unwrap());
        assert!(oracle_solvable(&p3, &conf(&[1, 2, 1]), &Demand::unit(3), &opts).unwrap());
    }

    #[test]
    fn oracle_budget() {
        let p = Graph::path(6).unwrap();
        let opts = OracleOptions { state_cap: 10 };
        let r = oracle_solvable(&p, &conf(&[40, 0, 0, 0, 0, 0]), &Demand::unit(6), &opts);
        assert_eq!(r, Err(PebbleError::BudgetExceeded { cap: 10 }));
    }

    #[test]
    fn oracle_rejects_signed_input() {
        let k2 = Graph::complete(2).unwrap();
        let c = Configuration::extended(vec![-1, 3]);
        assert!(oracle_solvable(&k2, &c, &Demand::unit(2), &OracleOptions::default()).is_err());
    }
}
