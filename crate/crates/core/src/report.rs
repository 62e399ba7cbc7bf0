//! Single-`n` analysis report, as emitted by `zdring analyze`.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::brute::{self, BruteLimits};
use crate::classes;
use crate::factor::{factorize, PrimePower};
use crate::formula::{chromatic_identities, clique_number, max_degree_paper, CliqueCase};
use crate::graph::build_graph;
use crate::witness::{build_witness_with_limit, verify_clique};
use crate::{Error, Result};

/// Witnesses larger than this are not listed or checked in reports
/// (verification is quadratic in the witness size).
pub const REPORT_WITNESS_LIMIT: u64 = 5_000;

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Run the divisor-class oracle for `omega_exact` and `delta_exact`.
    pub exact: bool,
    /// Run the element-level oracle within these limits.
    pub brute: Option<BruteLimits>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: u64,
    pub factorization: Vec<PrimePower>,
    pub case: CliqueCase,
    pub k: u64,
    pub t: u32,
    pub omega_formula: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_exact: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_match: Option<bool>,
    pub delta_paper: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_exact: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_match: Option<bool>,
    pub chi_predicted: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi1_predicted: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute: Option<BruteFields>,
    pub timing_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteFields {
    pub omega_brute: u64,
    pub omega_brute_match: bool,
    pub delta_brute: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_brute_match: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_brute: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_match: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi1_brute: Option<u64>,
    /// `chi1_brute == delta_brute`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi1_match: Option<bool>,
}

impl AnalysisReport {
    /// Every match flag that was computed, by name.
    pub fn match_flags(&self) -> Vec<(&'static str, bool)> {
        let mut flags = vec![
            ("witness_valid", self.witness_valid),
            ("omega_match", self.omega_match),
            ("delta_match", self.delta_match),
        ];
        if let Some(b) = &self.brute {
            flags.extend([
                ("omega_brute_match", Some(b.omega_brute_match)),
                ("delta_brute_match", b.delta_brute_match),
                ("chi_match", b.chi_match),
                ("chi1_match", b.chi1_match),
            ]);
        }
        flags
            .into_iter()
            .filter_map(|(name, v)| v.map(|v| (name, v)))
            .collect()
    }

    pub fn has_discrepancy(&self) -> bool {
        self.match_flags().iter().any(|(_, ok)| !ok)
    }
}

pub fn analyze(n: u64, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let start = Instant::now();
    let f = factorize(n)?;
    if let Some(limits) = &options.brute {
        if n > limits.clique {
            return Err(Error::resource("n for --brute", n, limits.clique));
        }
    }

    let analysis = clique_number(&f);
    let (witness, witness_valid) = match build_witness_with_limit(&f, REPORT_WITNESS_LIMIT) {
        Ok(w) => {
            let valid = verify_clique(n, &w.elements).is_valid()
                && w.elements.len() as u64 == analysis.omega;
            (Some(w.elements), Some(valid))
        }
        Err(Error::Resource { .. }) => (None, None),
        Err(e) => return Err(e),
    };

    let mut omega_exact = None;
    let mut delta_exact = None;
    if options.exact {
        omega_exact = Some(classes::omega_exact(&f)?.omega);
        delta_exact = Some(classes::delta_exact(&f).0);
    }
    let delta_paper = max_degree_paper(&f);
    let chi_predicted = analysis.omega;
    let chi1_predicted = delta_exact.map(|d| chromatic_identities(&analysis, d).chi1);

    let brute = match &options.brute {
        Some(limits) => {
            let g = build_graph(n)?;
            let stats = brute::graph_stats(&g, limits)?;
            Some(BruteFields {
                omega_brute: stats.omega_brute,
                omega_brute_match: stats.omega_brute == analysis.omega,
                delta_brute: stats.delta_brute,
                delta_brute_match: delta_exact.map(|d| d == stats.delta_brute),
                chi_brute: stats.chi_brute,
                chi_match: stats.chi_brute.map(|c| c == chi_predicted),
                chi1_brute: stats.chi1_brute,
                chi1_match: stats.chi1_brute.map(|c| c == stats.delta_brute),
            })
        }
        None => None,
    };

    Ok(AnalysisReport {
        n,
        factorization: f.factors().to_vec(),
        case: analysis.case,
        k: analysis.k,
        t: analysis.t,
        omega_formula: analysis.omega,
        witness,
        witness_valid,
        omega_match: omega_exact.map(|w| w == analysis.omega),
        omega_exact,
        delta_paper,
        delta_match: delta_exact.map(|d| d == delta_paper),
        delta_exact,
        chi_predicted,
        chi1_predicted,
        brute,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

/// Long lists keep their head and tail in text output.
fn join(v: &[u64]) -> String {
    const SHOWN: usize = 12;
    let list = |s: &[u64]| s.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
    if v.len() <= 2 * SHOWN {
        list(v)
    } else {
        format!(
            "{}, ... {} more ..., {}",
            list(&v[..SHOWN]),
            v.len() - 2 * SHOWN,
            list(&v[v.len() - SHOWN..])
        )
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self
            .factorization
            .iter()
            .map(|pp| {
                if pp.e == 1 {
                    pp.p.to_string()
                } else {
                    format!("{}^{}", pp.p, pp.e)
                }
            })
            .collect::<Vec<_>>()
            .join(" * ");
        writeln!(f, "n              {} = {}", self.n, factors)?;
        writeln!(
            f,
            "case           {} (k = {}, t = {})",
            self.case, self.k, self.t
        )?;
        writeln!(f, "omega formula  {}", self.omega_formula)?;
        match (&self.witness, self.witness_valid) {
            (Some(w), Some(valid)) => writeln!(
                f,
                "witness        {{{}}} ({})",
                join(w),
                if valid { "valid" } else { "INVALID" }
            )?,
            _ => writeln!(
                f,
                "witness        omitted (more than {REPORT_WITNESS_LIMIT} elements)"
            )?,
        }
        if let (Some(w), Some(ok)) = (self.omega_exact, self.omega_match) {
            writeln!(f, "omega exact    {} [{}]", w, flag(ok))?;
        }
        writeln!(f, "delta paper    {}", self.delta_paper)?;
        if let (Some(d), Some(ok)) = (self.delta_exact, self.delta_match) {
            writeln!(f, "delta exact    {} [{}]", d, flag(ok))?;
        }
        writeln!(f, "chi predicted  {}", self.chi_predicted)?;
        if let Some(c) = self.chi1_predicted {
            writeln!(f, "chi1 predicted {c}")?;
        }
        if let Some(b) = &self.brute {
            writeln!(
                f,
                "omega brute    {} [{}]",
                b.omega_brute,
                flag(b.omega_brute_match)
            )?;
            match b.delta_brute_match {
                Some(ok) => writeln!(f, "delta brute    {} [{}]", b.delta_brute, flag(ok))?,
                None => writeln!(f, "delta brute    {}", b.delta_brute)?,
            }
            if let (Some(c), Some(ok)) = (b.chi_brute, b.chi_match) {
                writeln!(f, "chi brute      {} [{}]", c, flag(ok))?;
            }
            if let (Some(c), Some(ok)) = (b.chi1_brute, b.chi1_match) {
                writeln!(f, "chi1 brute     {} [{}]", c, flag(ok))?;
            }
        }
        write!(f, "time           {:.3} ms", self.timing_ms)
    }
}
