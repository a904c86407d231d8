//! Reductions from exact cover by 4-sets to pebbling questions, and from
//! unit-cover solvability to canonical solvability.

mod canonical;
mod cover;
mod threshold;
mod x4c;

use std::fmt;

use crate::config::{Configuration, Demand};
use crate::error::{PebbleError, Result};
use crate::graph::Graph;

pub use canonical::reduce_cover_to_canonical;
pub use cover::{cover_certificate_from_exact_cover, reduce_to_cover_solvability};
pub use threshold::{number_witness_config, reduce_to_number_threshold};
pub use x4c::{x4c_solve, X4CInstance};

/// What a vertex of a constructed graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Universe element `t_j`.
    Element(usize),
    /// Set vertex `b_i`.
    Set(usize),
    SetPrime(usize),
    SetDoublePrime(usize),
    SetTriplePrime(usize),
    /// The hub `v`.
    Hub,
    /// Interior vertex of the path from `v` to `w`.
    Path(usize),
    /// End of the path from `v`.
    Sink,
    /// Copy of an input vertex.
    Copy(usize),
    /// Grid vertex `u_ij`.
    Grid(usize, usize),
    /// Tail vertex `w_i` (`w_0` is the collector).
    Tail(usize),
}

impl Role {
    pub fn tag(&self) -> &'static str {
        match self {
            Role::Element(_) => "T",
            Role::Set(_) => "B",
            Role::SetPrime(_) => "B'",
            Role::SetDoublePrime(_) => "B''",
            Role::SetTriplePrime(_) => "B'''",
            Role::Hub => "v",
            Role::Path(_) => "path",
            Role::Sink => "w",
            Role::Copy(_) => "H",
            Role::Grid(..) => "u",
            Role::Tail(_) => "w_i",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The question a reduced instance asks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Goal {
    Demand(Demand),
    Target(usize),
}

/// A constructed pebbling instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub config: Configuration,
    pub goal: Goal,
    /// Pebbling-number threshold, for the number reduction only.
    pub threshold: Option<u64>,
    /// One role per vertex, indexed like the graph.
    pub roles: Vec<Role>,
    /// Set when the input was decided outright and replaced by a fixed
    /// yes-instance.
    pub trivial: bool,
}

impl ReducedInstance {
    /// The goal as a demand vector.
    pub fn demand(&self) -> Demand {
        match &self.goal {
            Goal::Demand(d) => d.clone(),
            Goal::Target(v) => Demand::reach(self.graph.vertex_count(), *v),
        }
    }

    pub fn target(&self) -> Option<usize> {
        match self.goal {
            Goal::Target(v) => Some(v),
            Goal::Demand(_) => None,
        }
    }

    /// First vertex with the given role.
    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }
}

/// Accumulates vertices, roles and edges for a construction.
#[derive(Default)]
struct Builder {
    names: Vec<String>,
    roles: Vec<Role>,
    counts: Vec<i64>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, name: String, role: Role, pebbles: i64) -> usize {
        self.names.push(name);
        self.roles.push(role);
        self.counts.push(pebbles);
        self.names.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    fn finish(self, goal: impl FnOnce(usize) -> Goal, threshold: Option<u64>) -> Result<ReducedInstance> {
        let n = self.names.len();
        let graph = Graph::with_names(self.names, &self.edges)?;
        Ok(ReducedInstance {
            graph,
            config: Configuration::new(self.counts)?,
            goal: goal(n),
            threshold,
            roles: self.roles,
            trivial: false,
        })
    }
}

/// The constructions join elements only through their sets, so an element
/// in no set would leave the graph disconnected.
fn check_elements_used(inst: &X4CInstance) -> Result<()> {
    let mut used = vec![false; inst.universe_size()];
    for set in inst.sets() {
        for &e in set {
            used[e] = true;
        }
    }
    match used.iter().position(|&u| !u) {
        None => Ok(()),
        Some(e) => Err(PebbleError::MalformedInstance(format!(
            "element {} lies in no set, so the instance has no cover and the construction is disconnected",
            e + 1
        ))),
    }
}

fn pow2(exp: usize) -> Result<i64> {
    if exp < 62 {
        Ok(1i64 << exp)
    } else {
        Err(PebbleError::MalformedInstance(format!("2^{exp} pebbles do not fit in a 64-bit count")))
    }
}
