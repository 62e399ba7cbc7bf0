//! Closed-form invariants of `G(Z_n)`.
//!
//! Split the primes of `n` by exponent parity: even exponents `δ_i` and odd
//! exponents `β_i`, with `t` the number of odd ones. Then
//!
//! ```text
//! k = ∏ p_i^(δ_i / 2) · ∏ q_i^((β_i - 1) / 2)
//! ω = k + t - 1
//! ```
//!
//! Square-free `n` gives `k = 1, ω = s`; when every exponent is even `t = 0`
//! and `ω = √n - 1`. Only the single formula is implemented; [`CliqueCase`] is
//! reporting metadata.

use serde::{Deserialize, Serialize};

use crate::factor::{Factorization, PrimePower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CliqueCase {
    SquareFree,
    AllEven,
    Mixed,
}

impl std::fmt::Display for CliqueCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CliqueCase::SquareFree => "square-free",
            CliqueCase::AllEven => "all-even",
            CliqueCase::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueAnalysis {
    pub case: CliqueCase,
    /// Primes with even exponent.
    pub even_part: Vec<PrimePower>,
    /// Primes with odd exponent.
    pub odd_part: Vec<PrimePower>,
    pub k: u64,
    pub t: u32,
    pub omega: u64,
}

pub fn classify(f: &Factorization) -> CliqueCase {
    if f.is_square_free() {
        CliqueCase::SquareFree
    } else if f.factors().iter().all(|pp| pp.e % 2 == 0) {
        CliqueCase::AllEven
    } else {
        CliqueCase::Mixed
    }
}

pub fn clique_number(f: &Factorization) -> CliqueAnalysis {
    let (even_part, odd_part): (Vec<_>, Vec<_>) = f.factors().iter().partition(|pp| pp.e % 2 == 0);
    // k^2 divides n, so k < 2^32 and no product below overflows
    let k = f
        .factors()
        .iter()
        .map(|pp| pp.p.pow(pp.e / 2))
        .product::<u64>();
    let t = odd_part.len() as u32;
    CliqueAnalysis {
        case: classify(f),
        even_part,
        odd_part,
        k,
        t,
        omega: k + t as u64 - 1,
    }
}

/// The stated maximum degree `n/p_1 - 1`, uncorrected.
///
/// This overcounts by one when `p_1^2 | n`: the vertex `n/p_1` is then
/// self-adjacent and loses itself as a neighbour. Compare against
/// [`crate::classes::delta_exact`].
pub fn max_degree_paper(f: &Factorization) -> u64 {
    f.n() / f.smallest_prime() - 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticPrediction {
    pub chi: u64,
    pub chi1: u64,
}

/// Vertex chromatic number equals the clique number; edge chromatic number
/// equals the maximum degree.
pub fn chromatic_identities(analysis: &CliqueAnalysis, delta_exact: u64) -> ChromaticPrediction {
    ChromaticPrediction {
        chi: analysis.omega,
        chi1: delta_exact,
    }
}
