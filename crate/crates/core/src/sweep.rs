//! Range verification: formula vs divisor-class oracle (and optionally the
//! element-level oracle) for every `n` in a range, in parallel.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brute::omega_brute;
use crate::classes::{delta_exact, omega_exact};
use crate::factor::factorize;
use crate::formula::{clique_number, max_degree_paper};
use crate::graph::build_graph;
use crate::witness::{build_witness, verify_clique};
use crate::{Error, Result};

pub const WORKERS_ENV: &str = "ZDRING_WORKERS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u64,
    pub omega_formula: u64,
    pub omega_exact: u64,
    pub omega_brute: Option<u64>,
    pub witness_ok: bool,
    pub delta_paper: u64,
    pub delta_exact: u64,
    pub delta_match: bool,
}

impl SweepRow {
    pub fn omega_agrees(&self) -> bool {
        self.omega_formula == self.omega_exact
            && self.omega_brute.is_none_or(|b| b == self.omega_formula)
    }
}

/// Checks one `n`; the element-level oracle runs when `n <= brute_max`.
pub fn check_one(n: u64, brute_max: u64) -> Result<SweepRow> {
    let f = factorize(n)?;
    let omega_formula = clique_number(&f).omega;
    let witness = build_witness(&f)?;
    let witness_ok = witness.elements.len() as u64 == omega_formula
        && verify_clique(n, &witness.elements).is_valid();
    let omega_brute = if n <= brute_max {
        Some(omega_brute(&build_graph(n)?, brute_max)?)
    } else {
        None
    };
    let delta_paper = max_degree_paper(&f);
    let (delta_exact, _) = delta_exact(&f);
    Ok(SweepRow {
        n,
        omega_formula,
        omega_exact: omega_exact(&f)?.omega,
        omega_brute,
        witness_ok,
        delta_paper,
        delta_exact,
        delta_match: delta_paper == delta_exact,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub checked: usize,
    /// `n` where the formula disagrees with either oracle.
    pub omega_discrepancies: Vec<u64>,
    pub invalid_witnesses: Vec<u64>,
    pub delta_mismatches: usize,
}

impl SweepSummary {
    pub fn from_rows(rows: &[SweepRow]) -> Self {
        SweepSummary {
            checked: rows.len(),
            omega_discrepancies: rows
                .iter()
                .filter(|r| !r.omega_agrees())
                .map(|r| r.n)
                .collect(),
            invalid_witnesses: rows.iter().filter(|r| !r.witness_ok).map(|r| r.n).collect(),
            delta_mismatches: rows.iter().filter(|r| !r.delta_match).count(),
        }
    }

    /// Degree mismatches are reported but do not fail a sweep.
    pub fn passed(&self) -> bool {
        self.omega_discrepancies.is_empty() && self.invalid_witnesses.is_empty()
    }
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "checked {} values: {} omega discrepancies, {} witnesses valid, {} invalid, {} delta mismatches (n/p1 - 1 formula)",
            self.checked,
            self.omega_discrepancies.len(),
            self.checked - self.invalid_witnesses.len(),
            self.invalid_witnesses.len(),
            self.delta_mismatches,
        )?;
        if !self.omega_discrepancies.is_empty() {
            write!(
                f,
                "; omega discrepancies at n = {:?}",
                self.omega_discrepancies
            )?;
        }
        if !self.invalid_witnesses.is_empty() {
            write!(f, "; invalid witnesses at n = {:?}", self.invalid_witnesses)?;
        }
        Ok(())
    }
}

/// Runs [`check_one`] for every `n` in `from..=to` on `workers` threads.
/// Rows come back in ascending `n` regardless of worker count.
pub fn run(from: u64, to: u64, brute_max: u64, workers: usize) -> Result<Vec<SweepRow>> {
    if from < 2 || from > to {
        return Err(Error::Usage(format!(
            "invalid range {from}..={to} (need 2 <= from <= to)"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        (from..=to)
            .into_par_iter()
            .map(|n| check_one(n, brute_max))
            .collect()
    })
}

/// Worker count: explicit flag, then `ZDRING_WORKERS`, then available
/// parallelism.
pub fn resolve_workers(flag: Option<usize>) -> Result<usize> {
    let env = std::env::var(WORKERS_ENV).ok();
    resolve_workers_from(flag, env.as_deref())
}

fn resolve_workers_from(flag: Option<usize>, env: Option<&str>) -> Result<usize> {
    let workers = match (flag, env) {
        (Some(w), _) => w,
        (None, Some(s)) => s.trim().parse().map_err(|_| {
            Error::Usage(format!(
                "{WORKERS_ENV} must be a positive integer, got '{s}'"
            ))
        })?,
        (None, None) => std::thread::available_parallelism().map_or(1, |p| p.get()),
    };
    if workers == 0 {
        return Err(Error::Usage("worker count must be positive".into()));
    }
    Ok(workers)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}
