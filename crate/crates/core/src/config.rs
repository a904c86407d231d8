//! Configurations, demands and move lists.

use std::collections::BTreeMap;

use crate::error::{PebbleError, Result};
use crate::graph::Graph;

/// Pebble counts per vertex.
///
/// A configuration is `extended` when it is allowed to hold negative counts
/// (the signed model in which solvability only depends on `C - D`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    counts: Vec<i64>,
    extended: bool,
}

impl Configuration {
    /// Non-negative configuration.
    pub fn new(counts: Vec<i64>) -> Result<Self> {
        if let Some((vertex, &count)) = counts.iter().enumerate().find(|(_, &c)| c < 0) {
            return Err(PebbleError::NegativeCount { vertex, count });
        }
        Ok(Self { counts, extended: false })
    }

    /// Signed configuration; any integer counts are accepted.
    pub fn extended(counts: Vec<i64>) -> Self {
        Self { counts, extended: true }
    }

    pub fn zeros(n: usize) -> Self {
        Self { counts: vec![0; n], extended: false }
    }

    /// `total` pebbles stacked on vertex `v`.
    pub fn stack(n: usize, v: usize, total: i64) -> Self {
        let mut counts = vec![0; n];
        counts[v] = total;
        Self::extended(counts).normalized()
    }

    /// Drops the extended flag when every count is non-negative.
    pub fn normalized(mut self) -> Self {
        self.extended = self.counts.iter().any(|&c| c < 0);
        self
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn get(&self, v: usize) -> i64 {
        self.counts[v]
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn is_non_negative(&self) -> bool {
        self.counts.iter().all(|&c| c >= 0)
    }

    /// Total number of pebbles `|C|`.
    pub fn size(&self) -> i128 {
        self.counts.iter().map(|&c| c as i128).sum()
    }

    /// Pointwise `C >= D`.
    pub fn contains(&self, demand: &Demand) -> bool {
        self.counts.len() == demand.len() && self.counts.iter().zip(demand.counts()).all(|(c, d)| c >= d)
    }

    /// Pointwise `self >= other`.
    pub fn dominates(&self, other: &Configuration) -> bool {
        self.counts.len() == other.len() && self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b)
    }

    /// Surplus vector `C - D`.
    pub fn surplus(&self, demand: &Demand) -> Vec<i64> {
        self.counts.iter().zip(demand.counts()).map(|(c, d)| c - d).collect()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.counts.len() == n {
            Ok(())
        } else {
            Err(PebbleError::DimensionMismatch { expected: n, found: self.counts.len() })
        }
    }
}

/// Non-negative pebble requirement per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Demand {
    counts: Vec<i64>,
}

impl Demand {
    pub fn new(counts: Vec<i64>) -> Result<Self> {
        if let Some((vertex, &count)) = counts.iter().enumerate().find(|(_, &c)| c < 0) {
            return Err(PebbleError::NegativeDemand { vertex, count });
        }
        Ok(Self { counts })
    }

    /// The unit demand: one pebble on every vertex.
    pub fn unit(n: usize) -> Self {
        Self { counts: vec![1; n] }
    }

    /// One pebble on `target`, nothing elsewhere.
    pub fn reach(n: usize, target: usize) -> Self {
        let mut counts = vec![0; n];
        counts[target] = 1;
        Self { counts }
    }

    pub fn zero(n: usize) -> Self {
        Self { counts: vec![0; n] }
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn get(&self, v: usize) -> i64 {
        self.counts[v]
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn size(&self) -> i128 {
        self.counts.iter().map(|&c| c as i128).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.counts.len() == n {
            Ok(())
        } else {
            Err(PebbleError::DimensionMismatch { expected: n, found: self.counts.len() })
        }
    }
}

/// Number of pebbling moves along each ordered vertex pair.
///
/// Only positive counts are stored, so two move lists are equal exactly when
/// they prescribe the same moves.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MoveList {
    moves: BTreeMap<(usize, usize), u64>,
}

impl MoveList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = ((usize, usize), u64)>>(pairs: I) -> Self {
        let mut ml = Self::new();
        for (pair, count) in pairs {
            ml.add(pair.0, pair.1, count);
        }
        ml
    }

    pub fn add(&mut self, from: usize, to: usize, count: u64) {
        if count > 0 {
            *self.moves.entry((from, to)).or_insert(0) += count;
        }
    }

    pub fn set(&mut self, from: usize, to: usize, count: u64) {
        if count == 0 {
            self.moves.remove(&(from, to));
        } else {
            self.moves.insert((from, to), count);
        }
    }

    pub fn get(&self, from: usize, to: usize) -> u64 {
        self.moves.get(&(from, to)).copied().unwrap_or(0)
    }

    /// Positive entries in ascending `(from, to)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.moves.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Number of distinct ordered pairs with a positive count.
    pub fn support_len(&self) -> usize {
        self.moves.len()
    }

    pub fn total_moves(&self) -> u128 {
        self.moves.values().map(|&c| c as u128).sum()
    }

    /// Per-pair sum of two move lists.
    pub fn merged(&self, other: &MoveList) -> MoveList {
        let mut out = self.clone();
        for (pair, count) in other.iter() {
            out.add(pair.0, pair.1, count);
        }
        out
    }

    /// Per-pair difference; `None` unless `other <= self` pointwise.
    pub fn checked_sub(&self, other: &MoveList) -> Option<MoveList> {
        let mut out = self.clone();
        for ((a, b), count) in other.iter() {
            let have = out.get(a, b);
            out.set(a, b, have.checked_sub(count)?);
        }
        Some(out)
    }

    /// Pointwise `self <= other`.
    pub fn is_le(&self, other: &MoveList) -> bool {
        self.iter().all(|((a, b), c)| c <= other.get(a, b))
    }

    /// Checks every positive entry lies on an edge of `g`.
    pub fn check_edges(&self, g: &Graph) -> Result<()> {
        for ((from, to), _) in self.iter() {
            if !g.has_edge(from, to) {
                return Err(PebbleError::EdgeViolation { from, to });
            }
        }
        Ok(())
    }

    /// Whether the support digraph (pairs with a positive count) has no
    /// directed cycle.
    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Some directed cycle of the support digraph, as a vertex sequence.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for ((a, b), _) in self.iter() {
            out.entry(a).or_default().push(b);
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state: BTreeMap<usize, u8> = BTreeMap::new();
        let starts: Vec<usize> = out.keys().copied().collect();
        for start in starts {
            if state.get(&start).copied().unwrap_or(0) != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            let mut path = vec![start];
            state.insert(start, 1);
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                let succ = out.get(&u).map(Vec::as_slice).unwrap_or(&[]);
                if *next < succ.len() {
                    let w = succ[*next];
                    *next += 1;
                    match state.get(&w).copied().unwrap_or(0) {
                        0 => {
                            state.insert(w, 1);
                            stack.push((w, 0));
                            path.push(w);
                        }
                        1 => {
                            let pos = path.iter().position(|&p| p == w).expect("on stack");
                            return Some(path[pos..].to_vec());
                        }
                        _ => {}
                    }
                } else {
                    state.insert(u, 2);
                    stack.pop();
                    path.pop();
                }
            }
        }
        None
    }
}
