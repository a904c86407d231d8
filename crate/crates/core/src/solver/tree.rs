use crate::config::{Configuration, Demand};
use crate::error::{PebbleError, Result};
use crate::graph::Graph;

/// Change in the neighbour's count when a leaf with `count` pebbles and
/// demand `demand` is removed: surplus is halved (rounding down), deficit is
/// doubled.
fn leaf_transfer(count: i64, demand: i64) -> i64 {
    let surplus = count - demand;
    if surplus >= 0 {
        surplus / 2
    } else {
        2 * surplus
    }
}

/// Removes degree-1 vertex `leaf`, crediting its surplus to (or debiting its
/// deficit from) its neighbour.
///
/// The returned graph is `g - leaf` with the remaining vertices in their
/// original order.
pub fn collapse_leaf(g: &Graph, c: &Configuration, d: &Demand, leaf: usize) -> Result<(Graph, Configuration, Demand)> {
    let n = g.vertex_count();
    g.check_vertex(leaf)?;
    c.check_len(n)?;
    d.check_len(n)?;
    if n == 1 {
        return Err(PebbleError::SingletonGraph);
    }
    if g.degree(leaf) != 1 {
        return Err(PebbleError::NotALeaf(leaf));
    }
    let nbr = g.neighbors(leaf)[0];
    let mut counts = c.counts().to_vec();
    counts[nbr] += leaf_transfer(c.get(leaf), d.get(leaf));
    counts.remove(leaf);
    let mut demand = d.counts().to_vec();
    demand.remove(leaf);
    let h = g.without_vertex(leaf)?;
    Ok((h, Configuration::extended(counts).normalized(), Demand::new(demand)?))
}

/// Decides solvability on a tree by collapsing the lowest-index leaf until
/// one vertex is left.
pub fn solve_tree(g: &Graph, c: &Configuration, d: &Demand) -> Result<bool> {
    let n = g.vertex_count();
    c.check_len(n)?;
    d.check_len(n)?;
    if !g.is_tree() {
        return Err(PebbleError::NotATree);
    }
    let mut counts = c.counts().to_vec();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for _ in 1..n {
        let leaf = (0..n).find(|&v| alive[v] && degree[v] == 1).expect("a tree with two or more vertices has a leaf");
        let nbr = *g.neighbors(leaf).iter().find(|&&u| alive[u]).expect("leaf has a neighbour");
        counts[nbr] += leaf_transfer(counts[leaf], d.get(leaf));
        alive[leaf] = false;
        degree[nbr] -= 1;
    }
    let last = (0..n).find(|&v| alive[v]).expect("one vertex remains");
    Ok(counts[last] >= d.get(last))
}
