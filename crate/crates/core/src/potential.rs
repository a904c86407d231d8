//! The weighted-surplus potential `Γ_C(v) = Σ (C(u) - D(u)) 2^{-dist(u, v)}`.
//!
//! A single pebbling move never increases `Γ` at any vertex, and a solved
//! configuration has `Γ >= 0` everywhere, so a negative value anywhere proves
//! the configuration unsolvable.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::config::{Configuration, Demand};
use crate::error::Result;
use crate::graph::Graph;

/// Exact dyadic rational `numerator / 2^log2_denominator`.
#[derive(Debug, Clone)]
pub struct PotentialValue {
    pub numerator: BigInt,
    pub log2_denominator: u32,
}

impl PotentialValue {
    pub fn signum(&self) -> Ordering {
        self.numerator.cmp(&BigInt::zero())
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    /// Same value with the smallest possible denominator.
    pub fn reduced(&self) -> Self {
        let mut numerator = self.numerator.clone();
        let mut log2_denominator = self.log2_denominator;
        let two = BigInt::from(2);
        while log2_denominator > 0 && (&numerator % &two).is_zero() {
            numerator /= &two;
            log2_denominator -= 1;
        }
        Self { numerator, log2_denominator }
    }
}

impl PartialEq for PotentialValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for PotentialValue {}

impl PartialOrd for PotentialValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PotentialValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let shift = self.log2_denominator.max(other.log2_denominator);
        let a = &self.numerator << (shift - self.log2_denominator);
        let b = &other.numerator << (shift - other.log2_denominator);
        a.cmp(&b)
    }
}

impl fmt::Display for PotentialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.log2_denominator == 0 {
            write!(f, "{}", r.numerator)
        } else {
            write!(f, "{}/2^{}", r.numerator, r.log2_denominator)
        }
    }
}

/// `Γ` at `v`, with denominator `2^ecc(v)`.
pub fn gamma(g: &Graph, c: &Configuration, d: &Demand, v: usize) -> Result<PotentialValue> {
    let n = g.vertex_count();
    g.check_vertex(v)?;
    c.check_len(n)?;
    d.check_len(n)?;
    let ecc = g.eccentricity(v);
    let numerator = (0..n)
        .map(|u| BigInt::from(c.get(u) - d.get(u)) << (ecc - g.distance(u, v)))
        .sum();
    Ok(PotentialValue { numerator, log2_denominator: ecc })
}

/// Lowest-index vertex with negative `Γ`, if any.
pub fn gamma_witness(g: &Graph, c: &Configuration, d: &Demand) -> Result<Option<usize>> {
    for v in 0..g.vertex_count() {
        if gamma(g, c, d, v)?.is_negative() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}
