//! The explicit graph `G(Z_n)` for small `n`.

use std::fmt::Write;
use std::str::FromStr;

use crate::bitset::BitSet;
use crate::factor::gcd;
use crate::{Error, Result};

/// Default cap on `n` for materialization.
pub const MATERIALIZE_LIMIT: u64 = 1_000_000;

/// Vertices are `1..n`; `neighbors[x]` is the sorted neighbour list of `x`
/// (index 0 is unused and empty).
#[derive(Clone, Debug)]
pub struct ExplicitGraph {
    n: u64,
    neighbors: Vec<Vec<u64>>,
}

pub fn build_graph(n: u64) -> Result<ExplicitGraph> {
    build_graph_with_limit(n, MATERIALIZE_LIMIT)
}

pub fn build_graph_with_limit(n: u64, limit: u64) -> Result<ExplicitGraph> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "no zero-divisor graph defined for n = {n}"
        )));
    }
    if n > limit {
        return Err(Error::resource("n for graph materialization", n, limit));
    }
    // x's neighbours are the multiples of n / gcd(x, n), minus x itself
    let neighbors = (0..n)
        .map(|x| {
            if x == 0 {
                return Vec::new();
            }
            let step = n / gcd(x, n);
            (1..)
                .map(|i| i * step)
                .take_while(|&y| y < n)
                .filter(|&y| y != x)
                .collect()
        })
        .collect();
    Ok(ExplicitGraph { n, neighbors })
}

impl ExplicitGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = u64> {
        1..self.n
    }

    pub fn neighbors(&self, x: u64) -> &[u64] {
        &self.neighbors[x as usize]
    }

    pub fn degree(&self, x: u64) -> u64 {
        self.neighbors[x as usize].len() as u64
    }

    pub fn is_adjacent(&self, x: u64, y: u64) -> bool {
        self.neighbors[x as usize].binary_search(&y).is_ok()
    }

    /// Edges `(x, y)` with `x < y`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.vertices().flat_map(move |x| {
            self.neighbors(x)
                .iter()
                .filter(move |&&y| y > x)
                .map(move |&y| (x, y))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Bit-vector adjacency rows indexed by vertex (row 0 empty).
    pub fn bit_rows(&self) -> Vec<BitSet> {
        self.neighbors
            .iter()
            .map(|ns| {
                let mut row = BitSet::new(self.n as usize);
                for &y in ns {
                    row.insert(y as usize);
                }
                row
            })
            .collect()
    }

    pub fn export(&self, format: ExportFormat, skip_isolated: bool) -> String {
        let mut out = String::new();
        match format {
            ExportFormat::EdgeList => {
                for (x, y) in self.edges() {
                    writeln!(out, "{x} {y}").unwrap();
                }
            }
            ExportFormat::Dot => {
                writeln!(out, "graph Z{} {{", self.n).unwrap();
                for x in self.vertices() {
                    if !skip_isolated || self.degree(x) > 0 {
                        writeln!(out, "  {x};").unwrap();
                    }
                }
                for (x, y) in self.edges() {
                    writeln!(out, "  {x} -- {y};").unwrap();
                }
                out.push_str("}\n");
            }
        }
        out
    }
}

/// Degree of `x` in `G(Z_n)` without materializing the graph.
///
/// With `g = gcd(x, n)` the neighbours are the `g - 1` nonzero multiples of
/// `n/g`, less `x` itself when `n | x^2`.
pub fn vertex_degree(n: u64, x: u64) -> Result<u64> {
    if x == 0 || x >= n {
        return Err(Error::Domain(format!(
            "vertex {x} is outside 1..{n} (exclusive)"
        )));
    }
    let g = gcd(x, n);
    let self_adjacent = (x as u128 * x as u128).is_multiple_of(n as u128);
    Ok(g - 1 - self_adjacent as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::Usage(format!(
                "unknown export format '{other}' (expected edge-list or dot)"
            ))),
        }
    }
}

/// Materializes `G(Z_n)` and renders it with the full vertex set.
pub fn export(n: u64, format: &str) -> Result<String> {
    let format = format.parse()?;
    Ok(build_graph(n)?.export(format, false))
}
