//! Exact cover by 4-sets to unit-cover solvability.
//!
//! Layout: element vertices `T`, set vertices `B` joined to their elements,
//! a three-edge chain `b - b' - b'' - v` for every set, and a path of length
//! `m - n` from `v` to `w`. Pebbles: 9 on each `b`, 1 on each `b'`, `b''`
//! and path interior vertex, `2^(m-n) - (m-n) + 1` on `v`, none on `T` or
//! `w`. The configuration is unit-solvable iff the sets contain an exact
//! cover. When `m = n` the path is empty and `w` coincides with `v`.

use super::{check_elements_used, pow2, Builder, Goal, ReducedInstance, Role, X4CInstance};
use crate::config::{Demand, MoveList};
use crate::error::Result;

pub fn reduce_to_cover_solvability(inst: &X4CInstance) -> Result<ReducedInstance> {
    let (n, m) = (inst.n(), inst.m());
    // Re-validates m >= n.
    let inst = X4CInstance::new(n, inst.sets().to_vec())?;
    check_elements_used(&inst)?;
    let spare = m - n;
    let mut b = Builder::default();
    let t: Vec<usize> = (0..4 * n).map(|j| b.vertex(format!("t{}", j + 1), Role::Element(j), 0)).collect();
    let sets: Vec<usize> = (0..m).map(|i| b.vertex(format!("b{}", i + 1), Role::Set(i), 9)).collect();
    let primes: Vec<usize> = (0..m).map(|i| b.vertex(format!("b{}'", i + 1), Role::SetPrime(i), 1)).collect();
    let doubles: Vec<usize> = (0..m).map(|i| b.vertex(format!("b{}''", i + 1), Role::SetDoublePrime(i), 1)).collect();
    let hub_pebbles = pow2(spare)? - spare as i64 + 1;
    let hub = b.vertex("v".into(), Role::Hub, hub_pebbles);
    let mut path = vec![hub];
    for k in 1..spare {
        path.push(b.vertex(format!("p{k}"), Role::Path(k), 1));
    }
    if spare > 0 {
        path.push(b.vertex("w".into(), Role::Sink, 0));
    }
    for (i, set) in inst.sets().iter().enumerate() {
        for &e in set {
            b.edge(sets[i], t[e]);
        }
        b.edge(sets[i], primes[i]);
        b.edge(primes[i], doubles[i]);
        b.edge(doubles[i], hub);
    }
    for w in path.windows(2) {
        b.edge(w[0], w[1]);
    }
    b.finish(|count| Goal::Demand(Demand::unit(count)), None)
}

/// The explicit solution built from an exact cover: each covering set
/// vertex makes one move to each of its four elements, each spare set
/// vertex sends one pebble to `v` through its chain (4, 2, 1 moves), and
/// `v` pushes one pebble down the path to `w`.
pub fn cover_certificate_from_exact_cover(inst: &X4CInstance, cover: &[usize]) -> Result<MoveList> {
    inst.check_cover(cover)?;
    let reduced = reduce_to_cover_solvability(inst)?;
    let at = |role: Role| reduced.vertex(role).expect("construction has every role");
    let mut ml = MoveList::new();
    let mut covering = vec![false; inst.m()];
    for &i in cover {
        covering[i] = true;
        for &e in inst.set(i) {
            ml.add(at(Role::Set(i)), at(Role::Element(e)), 1);
        }
    }
    let hub = at(Role::Hub);
    for i in (0..inst.m()).filter(|&i| !covering[i]) {
        let (b0, b1, b2) = (at(Role::Set(i)), at(Role::SetPrime(i)), at(Role::SetDoublePrime(i)));
        ml.add(b0, b1, 4);
        ml.add(b1, b2, 2);
        ml.add(b2, hub, 1);
    }
    let spare = inst.m() - inst.n();
    if spare > 0 {
        let mut path = vec![hub];
        path.extend((1..spare).map(|k| at(Role::Path(k))));
        path.push(at(Role::Sink));
        // p_k -> p_{k+1} carries 2^(spare-1-k) moves
        for (k, w) in path.windows(2).enumerate() {
            ml.add(w[0], w[1], 1u64 << (spare - 1 - k));
        }
    }
    Ok(ml)
}
