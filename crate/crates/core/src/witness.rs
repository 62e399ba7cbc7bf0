//! Explicit maximum cliques.
//!
//! Write `n = c·k²` with `c` the product of the odd-exponent primes. Every
//! multiple of `n/k` squares to a multiple of `n`, giving the `k - 1` pairwise
//! adjacent vertices `i·n/k`. Each odd-exponent prime `q` contributes one more
//! vertex `n/(k·q)`: it is adjacent to every multiple of `n/k` and to the other
//! such vertices, but not a multiple of `n/k` itself.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::factor::Factorization;
use crate::formula::clique_number;
use crate::{Error, Result};

/// Default cap on the number of witness elements materialized.
pub const WITNESS_LIMIT: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueWitness {
    pub n: u64,
    /// Product of the odd-exponent primes (1 if there are none).
    pub c: u64,
    pub k: u64,
    /// Ascending.
    pub elements: Vec<u64>,
}

pub fn build_witness(f: &Factorization) -> Result<CliqueWitness> {
    build_witness_with_limit(f, WITNESS_LIMIT)
}

pub fn build_witness_with_limit(f: &Factorization, limit: u64) -> Result<CliqueWitness> {
    let n = f.n();
    let analysis = clique_number(f);
    if analysis.omega > limit {
        return Err(Error::resource("witness size", analysis.omega, limit));
    }
    let k = analysis.k;
    let step = n / k;
    let c: u64 = analysis.odd_part.iter().map(|pp| pp.p).product();

    let mut elements: Vec<u64> = (1..k).map(|i| i * step).collect();
    for q in analysis.odd_part.iter().map(|pp| pp.p) {
        let single = step / q;
        assert_ne!(single % step, 0, "witness parts collide for n = {n}");
        elements.push(single);
    }
    elements.sort_unstable();
    Ok(CliqueWitness { n, c, k, elements })
}

/// Outcome of [`verify_clique`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum CliqueCheck {
    Valid,
    /// Element is 0 or not below `n`.
    OutOfRange {
        x: u64,
    },
    Duplicate {
        x: u64,
    },
    NotAdjacent {
        x: u64,
        y: u64,
    },
}

impl CliqueCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CliqueCheck::Valid)
    }
}

/// Checks that `candidate` is a clique of `G(Z_n)`. Pairs are scanned in
/// input order and the first non-adjacent one is reported.
pub fn verify_clique(n: u64, candidate: &[u64]) -> CliqueCheck {
    if let Some(&x) = candidate.iter().find(|&&x| x == 0 || x >= n) {
        return CliqueCheck::OutOfRange { x };
    }
    let mut seen = HashSet::with_capacity(candidate.len());
    if let Some(&x) = candidate.iter().find(|&&x| !seen.insert(x)) {
        return CliqueCheck::Duplicate { x };
    }
    let m = n as u128;
    for (i, &x) in candidate.iter().enumerate() {
        for &y in &candidate[i + 1..] {
            if !(x as u128 * y as u128).is_multiple_of(m) {
                return CliqueCheck::NotAdjacent { x, y };
            }
        }
    }
    CliqueCheck::Valid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorize;

    fn witness(n: u64) -> Vec<u64> {
        build_witness(&factorize(n).unwrap()).unwrap().elements
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness(30), vec![6, 10, 15]);
        assert_eq!(witness(36), vec![6, 12, 18, 24, 30]);
        assert_eq!(witness(60), vec![6, 10, 30]);
        assert_eq!(witness(32), vec![4, 8, 16, 24]);
        assert_eq!(witness(420), vec![30, 42, 70, 210]);
        assert_eq!(witness(7), vec![1]);
    }

    #[test]
    fn witness_parameters() {
        let w = build_witness(&factorize(420).unwrap()).unwrap();
        assert_eq!((w.n, w.c, w.k), (420, 105, 2));
        let w = build_witness(&factorize(36).unwrap()).unwrap();
        assert_eq!((w.c, w.k), (1, 6));
    }

    #[test]
    fn verify_examples() {
        assert_eq!(verify_clique(420, &[30, 42, 70, 210]), CliqueCheck::Valid);
        assert_eq!(verify_clique(6, &[2, 3]), CliqueCheck::Valid);
        assert_eq!(
            verify_clique(12, &[3, 6]),
            CliqueCheck::NotAdjacent { x: 3, y: 6 }
        );
        assert_eq!(verify_clique(12, &[0, 6]), CliqueCheck::OutOfRange { x: 0 });
        assert_eq!(
            verify_clique(12, &[6, 12]),
            CliqueCheck::OutOfRange { x: 12 }
        );
        assert_eq!(verify_clique(12, &[6, 6]), CliqueCheck::Duplicate { x: 6 });
        assert!(verify_clique(12, &[]).is_valid());
    }

    #[test]
    fn verify_without_overflow() {
        let n = (1u64 << 62) * 2 - 2; // 2^63 - 2 = 2·(2^62 - 1)
        let half = n / 2;
        assert!(verify_clique(n, &[half, 2]).is_valid());
        assert!(!verify_clique(n, &[half, 3]).is_valid());
    }

    #[test]
    fn paper_set_a_collides_for_32() {
        // k = 4, q = 2: the listed k^2 = 16 equals q·2·k
        let k = 4u64;
        let q = 2u64;
        let listed: HashSet<u64> = std::iter::once(k * k)
            .chain((1..k).map(|i| i * q * k))
            .collect();
        assert_eq!(listed.len(), 3);
        assert_eq!(witness(32).len(), 4);
    }

    #[test]
    fn witness_is_clique_of_formula_size() {
        for n in 2..=100_000u64 {
            let f = factorize(n).unwrap();
            let w = build_witness(&f).unwrap();
            assert_eq!(w.elements.len() as u64, clique_number(&f).omega, "n = {n}");
            assert_eq!(verify_clique(n, &w.elements), CliqueCheck::Valid, "n = {n}");
            assert_eq!(w.c * w.k * w.k, n);
        }
    }

    #[test]
    fn witness_limit() {
        let f = factorize(1 << 62).unwrap();
        assert!(matches!(build_witness(&f), Err(Error::Resource { .. })));
        assert_eq!(
            build_witness_with_limit(&factorize(36).unwrap(), 5)
                .unwrap()
                .elements
                .len(),
            5
        );
        assert!(build_witness_with_limit(&factorize(36).unwrap(), 4).is_err());
    }
}
