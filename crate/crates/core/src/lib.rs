//! Exact graph pebbling.
//!
//! Decides cover solvability, reachability and canonical pebbling
//! solvability; computes cover pebbling and pebbling numbers on small graphs;
//! and builds the exact-cover-by-4-sets reduction instances together with
//! their certificates and witness configurations.

pub mod config;
pub mod error;
pub mod graph;
pub mod io;
pub mod moves;
pub mod numbers;
pub mod potential;
pub mod reductions;
pub mod solver;

pub use config::{Configuration, Demand, MoveList};
pub use error::{PebbleError, Result};
pub use graph::Graph;
pub use moves::{apply_moves, legal_moves, verify_solution};
pub use potential::{gamma, gamma_witness, PotentialValue};
