//! Exact cover by 4-sets to a reachability-number threshold.
//!
//! Every element vertex is joined to the target `v`; every set vertex gets a
//! pendant path `b - b' - b'' - b'''`. With `n` elements-per-4 and `m` sets
//! the reachability number of `v` exceeds `15m + 16n` iff an exact cover
//! exists.

use super::{check_elements_used, Builder, Goal, ReducedInstance, Role, X4CInstance};
use crate::config::Configuration;
use crate::error::Result;

pub fn reduce_to_number_threshold(inst: &X4CInstance) -> Result<ReducedInstance> {
    let (n, m) = (inst.n(), inst.m());
    let inst = X4CInstance::new(n, inst.sets().to_vec())?;
    check_elements_used(&inst)?;
    let mut b = Builder::default();
    let t: Vec<usize> = (0..4 * n).map(|j| b.vertex(format!("t{}", j + 1), Role::Element(j), 0)).collect();
    let sets: Vec<usize> = (0..m).map(|i| b.vertex(format!("b{}", i + 1), Role::Set(i), 0)).collect();
    let p1: Vec<usize> = (0..m).map(|i| b.vertex(format!("b{}'", i + 1), Role::SetPrime(i), 0)).collect();
    let p2: Vec<usize> = (0..m).map(|i| b.vertex(format!("b{}''", i + 1), Role::SetDoublePrime(i), 0)).collect();
    let p3: Vec<usize> = (0..m).map(|i| b.vertex(format!("b{}'''", i + 1), Role::SetTriplePrime(i), 0)).collect();
    let hub = b.vertex("v".into(), Role::Hub, 0);
    for &tj in &t {
        b.edge(tj, hub);
    }
    for (i, set) in inst.sets().iter().enumerate() {
        for &e in set {
            b.edge(sets[i], t[e]);
        }
        b.edge(sets[i], p1[i]);
        b.edge(p1[i], p2[i]);
        b.edge(p2[i], p3[i]);
    }
    let threshold = 15 * m as u64 + 16 * n as u64;
    b.finish(|_| Goal::Target(hub), Some(threshold))
}

/// 31 pebbles on the path end of every covering set, 15 on every other
/// path end. Size `31n + 15(m - n)`, and not solvable for `v`.
pub fn number_witness_config(inst: &X4CInstance, cover: &[usize]) -> Result<Configuration> {
    inst.check_cover(cover)?;
    let reduced = reduce_to_number_threshold(inst)?;
    let mut counts = vec![0; reduced.graph.vertex_count()];
    for i in 0..inst.m() {
        let end = reduced.vertex(Role::SetTriplePrime(i)).expect("every set has a path");
        counts[end] = if cover.contains(&i) { 31 } else { 15 };
    }
    Configuration::new(counts)
}
