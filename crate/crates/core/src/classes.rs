//! Exact clique number and maximum degree via gcd-class compression.
//!
//! Every nonzero residue `x` falls in the class of `d = gcd(x, n)`, a class of
//! `φ(n/d)` elements. Whether `x·y ≡ 0 (mod n)` depends only on the classes:
//! distinct classes `d`, `e` are adjacent iff `n | d·e`, and two elements of
//! the same class are adjacent iff `n | d²`. A self-adjacent class can join a
//! clique whole; any other class contributes at most one element. The clique
//! number is therefore a maximum-weight clique of the class graph with weights
//! `φ(n/d)` or 1, which is solved exactly by branch and bound.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::factor::{gcd, Divisor, Factorization};
use crate::{Error, Result};

/// Default cap on the number of classes.
pub const CLASS_LIMIT: u64 = 20_000;

/// Optimal cliques above this many elements are not expanded.
pub const EXPAND_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct DivisorClass {
    pub divisor: Divisor,
    /// `n | d²`.
    pub self_adjacent: bool,
    /// `φ(n/d)` if self-adjacent, else 1.
    pub weight: u64,
    /// `φ(n/d)`, the number of residues in the class.
    pub size: u64,
}

impl DivisorClass {
    pub fn value(&self) -> u64 {
        self.divisor.value
    }
}

#[derive(Clone, Debug)]
pub struct DivisorClassGraph {
    factorization: Factorization,
    classes: Vec<DivisorClass>,
    adjacency: Vec<BitSet>,
    index: HashMap<u64, usize>,
}

pub fn build_class_graph(f: &Factorization) -> Result<DivisorClassGraph> {
    build_class_graph_with_limit(f, CLASS_LIMIT)
}

pub fn build_class_graph_with_limit(f: &Factorization, limit: u64) -> Result<DivisorClassGraph> {
    let count = f.divisor_count() - 1;
    if count > limit {
        return Err(Error::resource("divisor class count", count, limit));
    }
    let alpha = f.exponents();
    let classes: Vec<DivisorClass> = f
        .divisors()
        .into_iter()
        .filter(|d| d.value < f.n())
        .map(|divisor| {
            let self_adjacent = divisor
                .exponents
                .iter()
                .zip(&alpha)
                .all(|(&v, &a)| 2 * v >= a);
            let size = f.phi_of_quotient(&divisor.exponents);
            DivisorClass {
                weight: if self_adjacent { size } else { 1 },
                self_adjacent,
                size,
                divisor,
            }
        })
        .collect();

    let mut adjacency = vec![BitSet::new(classes.len()); classes.len()];
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let adjacent = classes[i]
                .divisor
                .exponents
                .iter()
                .zip(&classes[j].divisor.exponents)
                .zip(&alpha)
                .all(|((&u, &v), &a)| u + v >= a);
            if adjacent {
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }
    let index = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.value(), i))
        .collect();
    Ok(DivisorClassGraph {
        factorization: f.clone(),
        classes,
        adjacency,
        index,
    })
}

impl DivisorClassGraph {
    pub fn n(&self) -> u64 {
        self.factorization.n()
    }

    /// Classes in increasing order of divisor.
    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn class_index(&self, d: u64) -> Option<usize> {
        self.index.get(&d).copied()
    }

    /// Adjacency between distinct classes `i != j`.
    pub fn classes_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    /// Adjacency of residues `x != y`, decided from their gcd classes alone.
    pub fn elements_adjacent(&self, x: u64, y: u64) -> bool {
        let n = self.n();
        let i = self.index[&gcd(x, n)];
        let j = self.index[&gcd(y, n)];
        if i == j {
            self.classes[i].self_adjacent
        } else {
            self.classes_adjacent(i, j)
        }
    }

    /// Total weight of a set of class indices, or `None` if they are not
    /// pairwise adjacent.
    pub fn clique_weight(&self, members: &[usize]) -> Option<u64> {
        for (a, &i) in members.iter().enumerate() {
            if members[a + 1..]
                .iter()
                .any(|&j| j == i || !self.classes_adjacent(i, j))
            {
                return None;
            }
        }
        Some(members.iter().map(|&i| self.classes[i].weight).sum())
    }

    /// Residues of class `i` in increasing order.
    pub fn class_elements(&self, i: usize) -> Vec<u64> {
        let d = self.classes[i].value();
        let m = self.n() / d;
        (1..m).filter(|&u| gcd(u, m) == 1).map(|u| u * d).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactClique {
    pub omega: u64,
    /// Divisors of the classes in an optimal clique, ascending.
    pub classes: Vec<u64>,
    /// Expanded residues (sorted), when `omega <= EXPAND_LIMIT`.
    pub elements: Option<Vec<u64>>,
}

pub fn omega_exact(f: &Factorization) -> Result<ExactClique> {
    let graph = build_class_graph(f)?;
    Ok(graph.max_weight_clique())
}

impl DivisorClassGraph {
    pub fn max_weight_clique(&self) -> ExactClique {
        let mut order: Vec<usize> = (0..self.classes.len()).collect();
        order
            .sort_by_key(|&i| std::cmp::Reverse((self.classes[i].weight, self.classes[i].value())));
        let mut search = WeightedSearch::new(self, order);
        search.run();

        let mut members: Vec<usize> = search.best.iter().map(|&p| search.order[p]).collect();
        members.sort_unstable();
        let omega = search.best_weight;
        let elements = (omega <= EXPAND_LIMIT).then(|| {
            let mut v: Vec<u64> = members
                .iter()
                .flat_map(|&i| {
                    if self.classes[i].self_adjacent {
                        self.class_elements(i)
                    } else {
                        vec![self.classes[i].value()]
                    }
                })
                .collect();
            v.sort_unstable();
            v
        });
        ExactClique {
            omega,
            classes: members.iter().map(|&i| self.classes[i].value()).collect(),
            elements,
        }
    }
}

/// Branch and bound over class positions in `order`, bounding each branch
/// with a greedy colouring: a clique takes at most one vertex per colour, so
/// the sum of per-colour maximum weights is an upper bound.
struct WeightedSearch {
    order: Vec<usize>,
    weights: Vec<u64>,
    /// Adjacency re-indexed by position in `order`.
    adjacency: Vec<BitSet>,
    best: Vec<usize>,
    best_weight: u64,
    current: Vec<usize>,
}

impl WeightedSearch {
    fn new(graph: &DivisorClassGraph, order: Vec<usize>) -> Self {
        let len = order.len();
        let weights = order.iter().map(|&i| graph.classes[i].weight).collect();
        let adjacency = order
            .iter()
            .map(|&i| {
                let mut row = BitSet::new(len);
                for (p, &j) in order.iter().enumerate() {
                    if graph.classes_adjacent(i, j) {
                        row.insert(p);
                    }
                }
                row
            })
            .collect();
        WeightedSearch {
            order,
            weights,
            adjacency,
            best: Vec::new(),
            best_weight: 0,
            current: Vec::new(),
        }
    }

    fn run(&mut self) {
        self.greedy_start();
        let all = BitSet::full(self.order.len());
        self.expand(0, all);
    }

    fn greedy_start(&mut self) {
        let mut candidates = BitSet::full(self.order.len());
        let mut clique = Vec::new();
        let mut weight = 0;
        while let Some(p) = candidates.first() {
            clique.push(p);
            weight += self.weights[p];
            candidates = candidates.intersection(&self.adjacency[p]);
        }
        self.best = clique;
        self.best_weight = weight;
    }

    fn color_bounds(&self, candidates: &BitSet) -> Vec<(usize, u64)> {
        let mut uncolored = candidates.clone();
        let mut out = Vec::with_capacity(candidates.count());
        let mut bound = 0;
        while !uncolored.is_empty() {
            let mut available = uncolored.clone();
            let mut class_max = 0;
            let mut members = Vec::new();
            while let Some(p) = available.first() {
                available.remove(p);
                available.difference_with(&self.adjacency[p]);
                uncolored.remove(p);
                class_max = class_max.max(self.weights[p]);
                members.push(p);
            }
            bound += class_max;
            out.extend(members.into_iter().map(|p| (p, bound)));
        }
        out
    }

    fn expand(&mut self, weight: u64, mut candidates: BitSet) {
        if candidates.is_empty() {
            if weight > self.best_weight {
                self.best_weight = weight;
                self.best = self.current.clone();
            }
            return;
        }
        let bounds = self.color_bounds(&candidates);
        for &(p, bound) in bounds.iter().rev() {
            if weight + bound <= self.best_weight {
                return;
            }
            self.current.push(p);
            let next = candidates.intersection(&self.adjacency[p]);
            self.expand(weight + self.weights[p], next);
            self.current.pop();
            candidates.remove(p);
        }
    }
}

/// Exact maximum degree and the largest class attaining it.
///
/// An element of class `d` has `d - 1` neighbours, one fewer when `n | d²`.
pub fn delta_exact(f: &Factorization) -> (u64, u64) {
    let alpha = f.exponents();
    f.divisors()
        .into_iter()
        .filter(|d| d.value < f.n())
        .map(|d| {
            let self_adjacent = d.exponents.iter().zip(&alpha).all(|(&v, &a)| 2 * v >= a);
            (d.value - 1 - self_adjacent as u64, d.value)
        })
        .max()
        .expect("class 1 always exists")
}
