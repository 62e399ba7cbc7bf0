//! Acceptance criteria, one line per criterion. Exits non-zero if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use zdring::brute::{chi1_brute, chi_brute, delta_brute, omega_brute};
use zdring::classes::{build_class_graph, delta_exact, omega_exact};
use zdring::factor::gcd;
use zdring::graph::build_graph;
use zdring::report::{analyze, AnalyzeOptions};
use zdring::sweep::{self, SweepSummary};
use zdring::{build_witness, clique_number, factorize, verify_clique};

type Outcome = Result<(), String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:.0?}"))
    }
}

fn ac1_worked_examples() -> Outcome {
    let start = Instant::now();
    for (n, expected) in [(60, 3), (420, 4), (108, 6), (196000, 141), (231525, 106)] {
        let omega = clique_number(&factorize(n).map_err(|e| e.to_string())?).omega;
        if omega != expected {
            return Err(format!("n = {n}: omega {omega}, expected {expected}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(1))
}

fn ac2_triple_agreement() -> Outcome {
    let start = Instant::now();
    for n in 2..=500u64 {
        let f = factorize(n).unwrap();
        let formula = clique_number(&f).omega;
        let exact = omega_exact(&f).unwrap().omega;
        let brute = omega_brute(&build_graph(n).unwrap(), 500).unwrap();
        if formula != exact || exact != brute {
            return Err(format!(
                "n = {n}: formula {formula}, exact {exact}, brute {brute}"
            ));
        }
    }
    within(start.elapsed(), Duration::from_secs(180))
}

fn ac3_sweep() -> Outcome {
    let start = Instant::now();
    let workers = sweep::resolve_workers(None).map_err(|e| e.to_string())?;
    let rows = sweep::run(2, 50_000, 0, workers).map_err(|e| e.to_string())?;
    let summary = SweepSummary::from_rows(&rows);
    if !summary.passed() {
        return Err(summary.to_string());
    }
    if rows.len() != 49_999 {
        return Err(format!("{} rows", rows.len()));
    }
    within(start.elapsed(), Duration::from_secs(600))
}

fn ac4_degrees() -> Outcome {
    for n in 2..=2000u64 {
        let f = factorize(n).unwrap();
        let (exact, _) = delta_exact(&f);
        let brute = delta_brute(&build_graph(n).unwrap());
        if exact != brute {
            return Err(format!("n = {n}: delta_exact {exact}, delta_brute {brute}"));
        }
        let p1 = f.smallest_prime();
        let paper = n / p1 - 1;
        if (exact == paper) != (n % (p1 * p1) != 0) {
            return Err(format!(
                "n = {n}: delta_exact {exact} vs n/p1 - 1 = {paper}"
            ));
        }
    }
    let opts = AnalyzeOptions {
        exact: true,
        brute: None,
    };
    let r = analyze(12, &opts).map_err(|e| e.to_string())?;
    if (r.delta_exact, r.delta_paper, r.delta_match) != (Some(4), 5, Some(false)) {
        return Err(format!(
            "n = 12: delta_exact {:?}, delta_paper {}, delta_match {:?}",
            r.delta_exact, r.delta_paper, r.delta_match
        ));
    }
    Ok(())
}

fn ac5_vertex_coloring() -> Outcome {
    let start = Instant::now();
    for n in 2..=100u64 {
        let g = build_graph(n).unwrap();
        let omega = omega_brute(&g, 100).unwrap();
        let chi = chi_brute(&g, 100).unwrap();
        if chi != omega {
            return Err(format!("n = {n}: chi {chi}, omega {omega}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(120))
}

fn ac6_edge_coloring() -> Outcome {
    let start = Instant::now();
    for n in 2..=40u64 {
        let g = build_graph(n).unwrap();
        let delta = delta_brute(&g);
        let chi1 = chi1_brute(&g, 40).unwrap();
        if chi1 > delta + 1 {
            return Err(format!(
                "n = {n}: chi1 {chi1} exceeds delta + 1 = {}",
                delta + 1
            ));
        }
        if g.edge_count() > 0 && chi1 != delta {
            return Err(format!("n = {n}: chi1 {chi1}, delta {delta}"));
        }
        if g.edge_count() == 0 && chi1 != 0 {
            return Err(format!("n = {n}: edgeless but chi1 {chi1}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(120))
}

fn ac7_witness_erratum() -> Outcome {
    let w = build_witness(&factorize(32).unwrap()).map_err(|e| e.to_string())?;
    let mut distinct = w.elements.clone();
    distinct.dedup();
    if distinct.len() != 4 || w.elements.len() != 4 {
        return Err(format!("witness {:?}", w.elements));
    }
    if !verify_clique(32, &w.elements).is_valid() {
        return Err(format!("witness {:?} is not a clique", w.elements));
    }
    Ok(())
}

fn compression_mismatch(n: u64) -> Option<(u64, u64)> {
    let classes = build_class_graph(&factorize(n).unwrap()).unwrap();
    let class_of: Vec<usize> = (0..n)
        .map(|x| {
            if x == 0 {
                0
            } else {
                classes.class_index(gcd(x, n)).unwrap()
            }
        })
        .collect();
    for x in 1..n {
        let cx = class_of[x as usize];
        for y in x + 1..n {
            let cy = class_of[y as usize];
            let by_class = if cx == cy {
                classes.classes()[cx].self_adjacent
            } else {
                classes.classes_adjacent(cx, cy)
            };
            if by_class != (x * y % n == 0) {
                return Some((x, y));
            }
        }
    }
    None
}

fn ac8_compression_soundness() -> Outcome {
    let start = Instant::now();
    let failures: Vec<(u64, (u64, u64))> = (2..=2000u64)
        .into_par_iter()
        .filter_map(|n| compression_mismatch(n).map(|p| (n, p)))
        .collect();
    if let Some((n, (x, y))) = failures.first() {
        return Err(format!("n = {n}: pair ({x}, {y}) disagrees"));
    }
    within(start.elapsed(), Duration::from_secs(180))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "AC1",
            "worked examples 60, 420, 108, 196000, 231525",
            ac1_worked_examples,
        ),
        (
            "AC2",
            "formula = divisor oracle = brute for n in [2, 500]",
            ac2_triple_agreement,
        ),
        (
            "AC3",
            "formula = divisor oracle and valid witness for n in [2, 50000]",
            ac3_sweep,
        ),
        (
            "AC4",
            "exact degree vs brute and vs n/p1 - 1 for n in [2, 2000]; n = 12 flagged",
            ac4_degrees,
        ),
        ("AC5", "chi = omega for n in [2, 100]", ac5_vertex_coloring),
        (
            "AC6",
            "chi1 = delta (with edges) and Vizing bound for n in [2, 40]",
            ac6_edge_coloring,
        ),
        (
            "AC7",
            "n = 32 witness has 4 distinct elements and validates",
            ac7_witness_erratum,
        ),
        (
            "AC8",
            "class adjacency = element adjacency for n in [2, 2000]",
            ac8_compression_soundness,
        ),
    ];
    let mut failed = 0;
    for (id, what, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS {id} {what} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {id} {what} ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
