//! Element-level exact computations on a materialized [`ExplicitGraph`].
//!
//! This oracle shares nothing with the formula or the class compression: it
//! runs a pivoting Bron-Kerbosch search for the clique number and DSATUR
//! backtracking for vertex and edge chromatic numbers. Isolated vertices
//! (including all units) are dropped before searching.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::ExplicitGraph;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteLimits {
    pub clique: u64,
    pub chi: u64,
    pub chi1: u64,
}

impl Default for BruteLimits {
    fn default() -> Self {
        BruteLimits {
            clique: 500,
            chi: 100,
            chi1: 40,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: u64,
    pub omega_brute: u64,
    pub delta_brute: u64,
    pub chi_brute: Option<u64>,
    pub chi1_brute: Option<u64>,
}

/// All brute statistics that fit within `limits`; `n` must be within the
/// clique limit.
pub fn graph_stats(g: &ExplicitGraph, limits: &BruteLimits) -> Result<GraphStats> {
    let n = g.n();
    Ok(GraphStats {
        n,
        omega_brute: omega_brute(g, limits.clique)?,
        delta_brute: delta_brute(g),
        chi_brute: (n <= limits.chi)
            .then(|| chi_brute(g, limits.chi))
            .transpose()?,
        chi1_brute: (n <= limits.chi1)
            .then(|| chi1_brute(g, limits.chi1))
            .transpose()?,
    })
}

fn check_limit(g: &ExplicitGraph, what: &'static str, limit: u64) -> Result<()> {
    if g.n() > limit {
        Err(Error::resource(what, g.n(), limit))
    } else {
        Ok(())
    }
}

/// Adjacency rows restricted to non-isolated vertices, re-indexed `0..m`.
fn compact_rows(g: &ExplicitGraph) -> Vec<BitSet> {
    let active: Vec<u64> = g.vertices().filter(|&x| g.degree(x) > 0).collect();
    let mut position = vec![usize::MAX; g.n() as usize];
    for (i, &x) in active.iter().enumerate() {
        position[x as usize] = i;
    }
    active
        .iter()
        .map(|&x| {
            let mut row = BitSet::new(active.len());
            for &y in g.neighbors(x) {
                row.insert(position[y as usize]);
            }
            row
        })
        .collect()
}

pub fn omega_brute(g: &ExplicitGraph, limit: u64) -> Result<u64> {
    check_limit(g, "n for brute clique search", limit)?;
    let rows = compact_rows(g);
    let mut best = 1;
    let len = rows.len();
    bron_kerbosch(&rows, 0, BitSet::full(len), BitSet::new(len), &mut best);
    Ok(best as u64)
}

fn bron_kerbosch(rows: &[BitSet], size: usize, mut p: BitSet, mut x: BitSet, best: &mut usize) {
    if p.is_empty() {
        if x.is_empty() {
            *best = (*best).max(size);
        }
        return;
    }
    if size + p.count() <= *best {
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(&rows[u]))
        .unwrap();
    let mut branch = p.clone();
    branch.difference_with(&rows[pivot]);
    for v in branch.iter() {
        bron_kerbosch(
            rows,
            size + 1,
            p.intersection(&rows[v]),
            x.intersection(&rows[v]),
            best,
        );
        p.remove(v);
        x.insert(v);
        if size + p.count() <= *best {
            return;
        }
    }
}

pub fn delta_brute(g: &ExplicitGraph) -> u64 {
    g.vertices().map(|x| g.degree(x)).max().unwrap_or(0)
}

/// Exact vertex chromatic number: tries `k = ω, ω+1, …` below the DSATUR
/// greedy count.
pub fn chi_brute(g: &ExplicitGraph, limit: u64) -> Result<u64> {
    check_limit(g, "n for brute chromatic number", limit)?;
    let rows = compact_rows(g);
    if rows.is_empty() {
        return Ok(1);
    }
    let lower = omega_brute(g, u64::MAX)? as usize;
    let upper = Coloring::new(&rows, usize::MAX).greedy();
    for k in lower..upper {
        if Coloring::new(&rows, k).solve() {
            return Ok(k as u64);
        }
    }
    Ok(upper as u64)
}

/// Exact edge chromatic number: `Δ` if a `Δ`-edge-colouring exists,
/// otherwise `Δ + 1`.
pub fn chi1_brute(g: &ExplicitGraph, limit: u64) -> Result<u64> {
    check_limit(g, "n for brute edge chromatic number", limit)?;
    let edges: Vec<(u64, u64)> = g.edges().collect();
    if edges.is_empty() {
        return Ok(0);
    }
    let delta = delta_brute(g);
    let line: Vec<BitSet> = edges
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let mut row = BitSet::new(edges.len());
            for (j, &(c, d)) in edges.iter().enumerate() {
                if i != j && (a == c || a == d || b == c || b == d) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    if Coloring::new(&line, delta as usize).solve() {
        Ok(delta)
    } else {
        Ok(delta + 1)
    }
}

/// DSATUR vertex colouring with at most `colors` colours.
struct Coloring<'a> {
    rows: &'a [BitSet],
    colors: usize,
    assigned: Vec<Option<usize>>,
    /// `neighbor_colors[v][c]`: coloured neighbours of `v` using colour `c`.
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl<'a> Coloring<'a> {
    fn new(rows: &'a [BitSet], colors: usize) -> Self {
        let width = colors.min(rows.len() + 1);
        Coloring {
            rows,
            colors,
            assigned: vec![None; rows.len()],
            neighbor_colors: vec![vec![0; width]; rows.len()],
            saturation: vec![0; rows.len()],
        }
    }

    /// Uncoloured vertex with highest saturation, then highest degree, then
    /// lowest index.
    fn select(&self) -> Option<usize> {
        (0..self.rows.len())
            .filter(|&v| self.assigned[v].is_none())
            .max_by_key(|&v| {
                (
                    self.saturation[v],
                    self.rows[v].count(),
                    std::cmp::Reverse(v),
                )
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.assigned[v] = Some(c);
        for u in self.rows[v].iter() {
            let slot = &mut self.neighbor_colors[u][c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.assigned[v] = None;
        for u in self.rows[v].iter() {
            let slot = &mut self.neighbor_colors[u][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Plain DSATUR, returns colours used.
    fn greedy(mut self) -> usize {
        let mut used = 0;
        while let Some(v) = self.select() {
            let c = (0..).find(|&c| self.neighbor_colors[v][c] == 0).unwrap();
            used = used.max(c + 1);
            self.assign(v, c);
        }
        used
    }

    fn solve(&mut self) -> bool {
        self.backtrack(0)
    }

    fn backtrack(&mut self, used: usize) -> bool {
        let Some(v) = self.select() else {
            return true;
        };
        // colours above `used` are interchangeable, so only one fresh colour is tried
        for c in 0..self.colors.min(used + 1) {
            if self.neighbor_colors[v][c] == 0 {
                self.assign(v, c);
                if self.backtrack(used.max(c + 1)) {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn g(n: u64) -> ExplicitGraph {
        build_graph(n).unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_brute(&g(60), 500).unwrap(), 3);
        assert_eq!(omega_brute(&g(108), 500).unwrap(), 6);
        assert_eq!(omega_brute(&g(4), 500).unwrap(), 1);
        assert_eq!(omega_brute(&g(12), 500).unwrap(), 2);
        assert_eq!(omega_brute(&g(36), 500).unwrap(), 5);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_brute(&g(12), 100).unwrap(), 2);
        assert_eq!(chi_brute(&g(13), 100).unwrap(), 1);
        assert_eq!(chi_brute(&g(36), 100).unwrap(), 5);
    }

    #[test]
    fn chi1_examples() {
        assert_eq!(chi1_brute(&g(6), 40).unwrap(), 2);
        assert_eq!(chi1_brute(&g(9), 40).unwrap(), 1);
        assert_eq!(chi1_brute(&g(4), 40).unwrap(), 0);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_brute(&g(30)), 14);
        assert_eq!(delta_brute(&g(12)), 4);
        assert_eq!(delta_brute(&g(13)), 0);
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            omega_brute(&g(501), 500),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(
            chi_brute(&g(101), 100),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(
            chi1_brute(&g(41), 40),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn odd_cycle_needs_three_colors() {
        // C5: chi = 3, chi1 = 3 (class 2)
        let rows: Vec<BitSet> = (0..5)
            .map(|i| {
                let mut r = BitSet::new(5);
                r.insert((i + 1) % 5);
                r.insert((i + 4) % 5);
                r
            })
            .collect();
        assert!(!Coloring::new(&rows, 2).solve());
        assert!(Coloring::new(&rows, 3).solve());
        assert_eq!(Coloring::new(&rows, usize::MAX).greedy(), 3);
    }

    #[test]
    fn clique_search_matches_subset_enumeration() {
        // independent oracle: exhaustive subsets of the non-isolated vertices
        for n in 2..=30u64 {
            let graph = g(n);
            let active: Vec<u64> = graph.vertices().filter(|&x| graph.degree(x) > 0).collect();
            let mut best = 1;
            for mask in 1u32..(1 << active.len()) {
                let members: Vec<u64> = (0..active.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| active[i])
                    .collect();
                if members.len() > best && crate::verify_clique(n, &members).is_valid() {
                    best = members.len();
                }
            }
            assert_eq!(omega_brute(&graph, 500).unwrap(), best as u64, "n = {n}");
        }
    }

    #[test]
    fn stats_respect_bounds() {
        let s = graph_stats(&g(60), &BruteLimits::default()).unwrap();
        assert_eq!(s.chi1_brute, None);
        assert_eq!(s.chi_brute, Some(3));
        let s = graph_stats(&g(30), &BruteLimits::default()).unwrap();
        assert!(s.chi_brute.unwrap() >= s.omega_brute);
        let c1 = s.chi1_brute.unwrap();
        assert!(s.delta_brute <= c1 && c1 <= s.delta_brute + 1);
    }
}
