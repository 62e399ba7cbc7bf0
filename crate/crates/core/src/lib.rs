//! Invariants of the zero-divisor graph `G(Z_n)`.
//!
//! Vertices are the nonzero residues `1..n`, and two distinct vertices `x`, `y`
//! are adjacent iff `n | x*y`. The crate evaluates the closed-form clique number
//! `ω = k + t - 1`, builds an explicit maximum clique, and checks both against
//! two independent exact oracles:
//!
//! * [`classes`] compresses the graph onto gcd classes (one per divisor of `n`)
//!   and runs a weighted branch and bound; it scales to large `n`.
//! * [`brute`] works on the materialized element-level graph and also computes
//!   vertex and edge chromatic numbers for tiny `n`.

pub mod bitset;
pub mod brute;
pub mod classes;
mod error;
pub mod factor;
pub mod formula;
pub mod graph;
pub mod report;
pub mod sweep;
pub mod witness;

pub use error::{Error, Result};
pub use factor::{factorize, Factorization, PrimePower};
pub use formula::{clique_number, CliqueAnalysis, CliqueCase};
pub use witness::{build_witness, verify_clique, CliqueCheck, CliqueWitness};
