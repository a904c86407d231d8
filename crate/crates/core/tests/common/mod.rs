//! Shared generators and an independent brute-force checker.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use pebbling::numbers::Compositions;
use pebbling::{Configuration, Demand, Graph};

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`, under a random labelling.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((perm[i], perm[j]));
    }
    for a in 0..n {
        for b in a + 1..n {
            let present = edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == (a, b));
            if !present && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).expect("spanning tree keeps the graph connected")
}

/// Uniform random labelled tree via a Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n < 3 {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        return Graph::new(n, &edges).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

/// `size` pebbles dropped on uniformly random vertices.
pub fn random_counts<R: Rng>(rng: &mut R, n: usize, size: i64) -> Vec<i64> {
    let mut counts = vec![0; n];
    for _ in 0..size {
        counts[rng.gen_range(0..n)] += 1;
    }
    counts
}

/// Unit, a reachability demand, or a random demand of size 1..=max_size.
pub fn random_demand<R: Rng>(rng: &mut R, n: usize, max_size: i64) -> Demand {
    match rng.gen_range(0..3) {
        0 => Demand::unit(n),
        1 => Demand::reach(n, rng.gen_range(0..n)),
        _ => {
            let size = rng.gen_range(1..=max_size);
            Demand::new(random_counts(rng, n, size)).unwrap()
        }
    }
}

/// Every non-negative configuration on `n` vertices with at most `max`
/// pebbles.
pub fn all_configs(n: usize, max: i64) -> impl Iterator<Item = Configuration> {
    (0..=max).flat_map(move |k| Compositions::new(k, n)).map(|c| Configuration::new(c).unwrap())
}

/// Depth-first search over legal move sequences, written independently of
/// the library's search code.
pub fn brute_solvable(g: &Graph, c: &[i64], d: &[i64]) -> bool {
    fn go(g: &Graph, c: &mut Vec<i64>, d: &[i64], seen: &mut HashSet<Vec<i64>>) -> bool {
        if c.iter().zip(d).all(|(a, b)| a >= b) {
            return true;
        }
        if !seen.insert(c.clone()) {
            return false;
        }
        for u in 0..c.len() {
            if c[u] < 2 {
                continue;
            }
            for &w in g.neighbors(u) {
                c[u] -= 2;
                c[w] += 1;
                let found = go(g, c, d, seen);
                c[u] += 2;
                c[w] -= 1;
                if found {
                    return true;
                }
            }
        }
        false
    }
    go(g, &mut c.to_vec(), d, &mut HashSet::new())
}
