//! Unit-cover solvability to canonical solvability.
//!
//! A copy `H` of the input graph gets one extra pebble per vertex; each copy
//! vertex `v_i'` starts a path `u_i1 .. u_in` of single pebbles ending at a
//! collector `w_0` holding `2^n - n`; a bare tail `w_1 .. w_n` hangs off
//! `w_0`. The result is canonically solvable iff `w_n` is reachable iff the
//! input is unit-cover solvable.

use super::{pow2, Builder, Goal, ReducedInstance, Role};
use crate::config::Configuration;
use crate::error::{PebbleError, Result};
use crate::graph::Graph;

pub fn reduce_cover_to_canonical(g: &Graph, c: &Configuration) -> Result<ReducedInstance> {
    let n = g.vertex_count();
    c.check_len(n)?;
    if let Some((vertex, &count)) = c.counts().iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(PebbleError::NegativeCount { vertex, count });
    }
    // A configuration this large is always unit solvable.
    let large = n >= 127 || c.size() >= 1i128 << n;
    if large {
        return Ok(ReducedInstance {
            graph: Graph::single_vertex(),
            config: Configuration::new(vec![1])?,
            goal: Goal::Target(0),
            threshold: None,
            roles: vec![Role::Copy(0)],
            trivial: true,
        });
    }
    if n == 1 {
        return Ok(ReducedInstance {
            graph: g.clone(),
            config: c.clone(),
            goal: Goal::Target(0),
            threshold: None,
            roles: vec![Role::Copy(0)],
            trivial: false,
        });
    }
    let mut b = Builder::default();
    let copies: Vec<usize> = (0..n)
        .map(|i| b.vertex(format!("{}'", g.name(i)), Role::Copy(i), c.get(i) + 1))
        .collect();
    let grid: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| b.vertex(format!("u{}_{}", i + 1, j + 1), Role::Grid(i, j), 1)).collect())
        .collect();
    let tail: Vec<usize> = (0..=n)
        .map(|k| {
            let pebbles = if k == 0 { pow2(n).map(|p| p - n as i64) } else { Ok(0) };
            pebbles.map(|p| b.vertex(format!("w{k}"), Role::Tail(k), p))
        })
        .collect::<Result<_>>()?;
    for &(x, y) in g.edges() {
        b.edge(copies[x], copies[y]);
    }
    for i in 0..n {
        b.edge(copies[i], grid[i][0]);
        for j in 1..n {
            b.edge(grid[i][j - 1], grid[i][j]);
        }
        b.edge(grid[i][n - 1], tail[0]);
    }
    for k in 1..=n {
        b.edge(tail[k - 1], tail[k]);
    }
    let target = tail[n];
    b.finish(|_| Goal::Target(target), None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_example() {
        let g = Graph::path(4).unwrap();
        let c = Configuration::new(vec![0, 2, 1, 3]).unwrap();
        let r = reduce_cover_to_canonical(&g, &c).unwrap();
        assert_eq!(r.graph.vertex_count(), 16 + 8 + 1);
        let h: Vec<i64> = (0..4).map(|i| r.config.get(r.vertex(Role::Copy(i)).unwrap())).collect();
        assert_eq!(h, vec![1, 3, 2, 4]);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(r.config.get(r.vertex(Role::Grid(i, j)).unwrap()), 1);
            }
        }
        assert_eq!(r.config.get(r.vertex(Role::Tail(0)).unwrap()), 12);
        for k in 1..=4 {
            assert_eq!(r.config.get(r.vertex(Role::Tail(k)).unwrap()), 0);
        }
        assert_eq!(r.target(), r.vertex(Role::Tail(4)));
        assert!(!r.trivial);
        // copy edges mirror the input
        let v1 = r.vertex(Role::Copy(0)).unwrap();
        let v4 = r.vertex(Role::Copy(3)).unwrap();
        assert!(!r.graph.has_edge(v1, v4));
        assert_eq!(r.graph.distance(v1, r.target().unwrap()), 2 * 4 + 1);
    }

    #[test]
    fn large_configurations_become_trivial() {
        let g = Graph::complete(2).unwrap();
        let r = reduce_cover_to_canonical(&g, &Configuration::new(vec![4, 0]).unwrap()).unwrap();
        assert!(r.trivial);
        assert_eq!(r.graph.vertex_count(), 1);
        assert_eq!(r.config.counts(), &[1]);
        let r = reduce_cover_to_canonical(&g, &Configuration::new(vec![3, 0]).unwrap()).unwrap();
        assert!(!r.trivial);
        assert_eq!(r.graph.vertex_count(), 9);
    }

    #[test]
    fn single_vertex_is_unchanged() {
        let g = Graph::single_vertex();
        let c = Configuration::new(vec![1]).unwrap();
        let r = reduce_cover_to_canonical(&g, &c).unwrap();
        assert_eq!((&r.graph, &r.config), (&g, &c));
        assert!(!r.trivial);
        let c0 = Configuration::new(vec![0]).unwrap();
        assert_eq!(reduce_cover_to_canonical(&g, &c0).unwrap().config, c0);
    }
}
