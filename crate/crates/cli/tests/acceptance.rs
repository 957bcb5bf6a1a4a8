//! Acceptance run: one pass/fail line per criterion.
//!
//! Criteria 3 and 10 cannot pass as printed; their printed forms are
//! checked as stated and reported as FAIL, followed by the corrected forms.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use binomial_schur::capelli::{self, Algebra, HighestWeight, Kind};
use binomial_schur::delta::{BinomialSequence, DeltaOperator};
use binomial_schur::exact::{frac, int, MultiPoly, Rational};
use binomial_schur::partition::{enumerate_in_box, Partition};
use binomial_schur::report::{Expectation, Summary, VerificationReport};
use binomial_schur::schur::SchurContext;
use binomial_schur::verify::{self, standard_operators, Bank, Profile};
use std::sync::Arc;

const KNOWN_UNATTAINABLE: [u32; 2] = [3, 10];

struct Outcome {
    criterion: u32,
    label: String,
    passed: bool,
    detail: String,
}

fn base_id(id: &str) -> &str {
    id.split('[').next().unwrap_or(id)
}

fn run_bases(bank: &Bank, bases: &[&str]) -> Summary {
    let selected = verify::items(Profile::Full, bank)
        .into_iter()
        .filter(|i| bases.contains(&base_id(&i.id)))
        .collect();
    verify::run_items(selected, bank, None)
}

fn counts(reports: &[&VerificationReport]) -> String {
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    format!("{} items, {} checks", reports.len(), checks)
}

fn first_bad<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>, ok: impl Fn(&VerificationReport) -> bool) -> Option<String> {
    reports.into_iter().find(|r| !ok(r)).map(|r| r.to_string())
}

/// All listed items are expected to hold and do.
fn all_hold(criterion: u32, label: &str, bank: &Bank, bases: &[&str], budget: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let summary = run_bases(bank, bases);
    let elapsed = start.elapsed();
    let reports: Vec<&VerificationReport> = summary.reports.iter().collect();
    let mut detail = format!("{} in {:.1?}", counts(&reports), elapsed);
    let mut passed = !reports.is_empty() && reports.iter().all(|r| r.passed());
    if let Some(bad) = first_bad(reports.iter().copied(), |r| r.passed()) {
        detail = format!("{detail}; {bad}");
    }
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail = format!("{detail}; over budget {b:?}");
        }
    }
    Outcome { criterion, label: label.into(), passed, detail }
}

/// Every semistandard tableau of `shape` with entries `1..=n`, as content vectors.
fn tableau_contents(shape: &[usize], n: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize, out: &mut Vec<Vec<u32>>) {
        if k == cells.len() {
            let mut content = vec![0u32; n];
            for row in grid.iter() {
                for &v in row {
                    content[v - 1] += 1;
                }
            }
            out.push(content);
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            fill(k + 1, cells, grid, n, out);
        }
        grid[r][c] = 0;
    }
    fill(0, &cells, &mut grid, n, &mut out);
    out
}

fn partitions_of(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions_of(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn classical_limit() -> Outcome {
    let start = Instant::now();
    let seq = Arc::new(BinomialSequence::new(DeltaOperator::differentiation()));
    let mut compared = 0;
    let mut bad = None;
    'outer: for n in 1..=4 {
        let ctx = SchurContext::new(seq.clone(), n).unwrap();
        for size in 0..=6 {
            for shape in partitions_of(size, size) {
                if shape.len() > n {
                    continue;
                }
                let oracle = MultiPoly::from_terms(n, tableau_contents(&shape, n).into_iter().map(|c| (c, int(1))));
                let lambda = Partition::new(shape.iter().map(|&p| p as i64).collect()).unwrap();
                compared += 1;
                match ctx.schur(&lambda, false) {
                    Ok(s) if s == oracle => {}
                    other => {
                        bad = Some(format!("N={n} λ={lambda}: {:?}", other.map(|s| s.num_terms())));
                        break 'outer;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = bad.is_none() && elapsed < Duration::from_secs(30);
    let mut detail = format!("{compared} shapes in {elapsed:.1?}");
    if let Some(b) = bad {
        detail = format!("{detail}; mismatch at {b}");
    }
    Outcome { criterion: 2, label: "classical limit equals the tableau sum".into(), passed, detail }
}

fn shift_non_identities(bank: &Bank) -> Outcome {
    let summary = run_bases(bank, &["e-shift-false", "h-shift-false"]);
    let on = |sel: &str| -> Vec<&VerificationReport> {
        summary.reports.iter().filter(|r| r.params.iter().any(|(k, v)| k == "op" && v == sel)).collect()
    };
    let fails_fwd = !on("fwd").is_empty() && on("fwd").iter().all(|r| !r.passed());
    let holds_d = !on("d").is_empty() && on("d").iter().all(|r| r.passed());
    Outcome {
        criterion: 5,
        label: "shift non-identities fail for fwd and hold for d".into(),
        passed: fails_fwd && holds_d,
        detail: format!("fwd fails: {fails_fwd}, d holds: {holds_d}"),
    }
}

/// Printed forms are run as stated; the criterion passes only if they hold.
fn printed_forms(criterion: u32, label: &str, bank: &Bank, bases: &[&str]) -> Outcome {
    let summary = run_bases(bank, bases);
    let reports: Vec<&VerificationReport> = summary.reports.iter().collect();
    let all_expected_to_fail = reports.iter().all(|r| r.expectation == Expectation::Fails);
    let passed = !reports.is_empty() && reports.iter().all(|r| r.passed());
    let mut detail = format!("{}; printed form held in {} of them", counts(&reports), reports.iter().filter(|r| r.passed()).count());
    if let Some(bad) = first_bad(reports.iter().copied(), |r| r.passed()) {
        detail = format!("{detail}; first counterexample: {bad}");
    }
    if !all_expected_to_fail {
        detail = format!("{detail}; some items not marked as expected failures");
    }
    Outcome { criterion, label: label.into(), passed, detail }
}

fn gl_scalar() -> Outcome {
    let us = [int(0), int(1), int(-2), frac(1, 2)];
    let mut compared = 0;
    let mut bad = None;
    for n in 1..=3usize {
        for lambda in enumerate_in_box(n, 3) {
            let hw = HighestWeight::new(Algebra::Gl, n, lambda.clone()).unwrap();
            for u in &us {
                let scalar: Rational = (0..n).map(|i| int(lambda.part(i) + (n - 1 - i) as i64) - u).product();
                compared += 1;
                let got = capelli::eigen(&hw, n as i64, u, Kind::C);
                if got.as_ref().ok() != Some(&scalar) {
                    bad.get_or_insert(format!("N={n} λ={lambda} u={u}: got {got:?}, want {scalar}"));
                }
            }
        }
    }
    let mut detail = format!("{compared} (λ, u) pairs");
    if let Some(b) = &bad {
        detail = format!("{detail}; {b}");
    }
    Outcome { criterion: 9, label: "gl eigenvalue at k=N is the product scalar".into(), passed: bad.is_none(), detail }
}

fn full_profile_cli() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_bschur")).args(["verify", "--profile", "full"]).output();
    let elapsed = start.elapsed();
    let (passed, detail) = match out {
        Ok(o) => {
            let stdout = String::from_utf8_lossy(&o.stdout);
            let footer = stdout.lines().last().unwrap_or("").to_string();
            let code = o.status.code();
            (code == Some(0) && elapsed < Duration::from_secs(300), format!("exit {code:?} in {elapsed:.1?}: {footer}"))
        }
        Err(e) => (false, format!("could not start: {e}")),
    };
    Outcome { criterion: 11, label: "verify --profile full exits 0 within 5 minutes".into(), passed, detail }
}

fn main() -> ExitCode {
    let bank = Bank::new(standard_operators(), Profile::Full.params().window);
    let secs = Duration::from_secs;
    let mut outcomes = Vec::new();
    let mut supplementary = Vec::new();

    outcomes.push(all_hold(1, "binomial-type identities up to n=8", &bank, &["binomial-type"], Some(secs(5))));
    outcomes.push(classical_limit());
    outcomes.push(printed_forms(3, "basic properties with h*_{-N} = 1/(x_1...x_N)", &bank, &["reciprocal-hstar-unsigned"]));
    supplementary.push(all_hold(
        3,
        "basic properties with h*_{-N} = (-1)^(N-1)/(x_1...x_N)",
        &bank,
        &["product-e", "reciprocal-hstar", "row-lowering", "zero-variable"],
        None,
    ));
    outcomes.push(all_hold(
        4,
        "shift expansions, conjugation and sequence duality",
        &bank,
        &["shift-expansion-s", "shift-expansion-sstar", "shift-expansion-mixed", "dhat-conjugation", "dhat-sequence-duality", "sequence-duality"],
        Some(secs(60)),
    ));
    let mut shifts = all_hold(
        5,
        "shift identities for e and h and delta lowering",
        &bank,
        &[
            "e-shift-1", "e-shift-2", "e-shift-3", "h-shift-1", "h-shift-2", "h-shift-3",
            "h-shift-u-series-1", "h-shift-u-series-2", "h-shift-u-series-3",
            "h-shift-x-series-1", "h-shift-x-series-2", "h-shift-x-series-3",
            "delta-lowering-e", "delta-lowering-estar", "delta-lowering-h", "delta-lowering-hstar",
        ],
        None,
    );
    let non = shift_non_identities(&bank);
    shifts.passed &= non.passed;
    shifts.detail = format!("{}; {}", shifts.detail, non.detail);
    outcomes.push(shifts);
    outcomes.push(all_hold(
        6,
        "generating functions of e, e*, h, h*",
        &bank,
        &["genfn-e-1", "genfn-e-2", "genfn-h-u-1", "genfn-h-u-2", "genfn-h-x-1", "genfn-h-x-2"],
        None,
    ));
    outcomes.push(all_hold(
        7,
        "Cauchy identity, dual Cauchy and the determinant lemmas",
        &bank,
        &["cauchy-det", "cauchy-det-general", "cauchy-dual-1", "cauchy-dual-2", "cauchy-1", "cauchy-2"],
        None,
    ));
    outcomes.push(all_hold(
        8,
        "explicit Capelli sums equal determinant ratios",
        &bank,
        &[
            "explicit-e-forward", "explicit-h-forward", "explicit-e-central", "explicit-hstar-central",
            "eigen-explicit-gl", "eigen-explicit-o", "eigen-explicit-sp",
        ],
        None,
    ));
    outcomes.push(gl_scalar());
    let start = Instant::now();
    let mut bridges = printed_forms(
        10,
        "bridges and t* eigenvalues as printed",
        &bank,
        &[
            "bridge-e-d-printed", "bridge-estar-b-printed", "bridge-estar-zero-c-printed", "bridge-hstar-c-printed",
            "bridge-h-b-printed", "tstar-o-even-printed", "tstar-o-odd-printed", "tstar-sp-printed",
        ],
    );
    let alternates = all_hold(10, "", &bank, &["bridge-e-zero", "bridge-h-zero", "zero-insertion"], None);
    bridges.detail = format!("{}; alternate-side bridges and zero insertion: {}", bridges.detail, if alternates.passed { "pass" } else { "FAIL" });
    bridges.passed &= alternates.passed && start.elapsed() < secs(10);
    outcomes.push(bridges);
    supplementary.push(all_hold(
        10,
        "bridges in degree 2k and t* eigenvalues in degree 2k",
        &bank,
        &[
            "bridge-e-d", "bridge-estar-b", "bridge-estar-zero-c", "bridge-hstar-c", "bridge-h-b", "bridge-e-zero",
            "bridge-h-zero", "tstar-o-even", "tstar-o-odd", "tstar-sp", "zero-insertion",
        ],
        Some(secs(10)),
    ));
    outcomes.push(full_profile_cli());

    let mut unexpected = 0;
    for o in &outcomes {
        let known = KNOWN_UNATTAINABLE.contains(&o.criterion);
        let tag = if o.passed { "PASS" } else { "FAIL" };
        let note = if known && !o.passed { " (known unattainable as printed)" } else { "" };
        println!("criterion {:>2}: {tag} {}{note} [{}]", o.criterion, o.label, o.detail);
        if o.passed == known {
            unexpected += 1;
        }
        for s in supplementary.iter().filter(|s| s.criterion == o.criterion) {
            let tag = if s.passed { "PASS" } else { "FAIL" };
            println!("criterion {:>2} corrected: {tag} {} [{}]", s.criterion, s.label, s.detail);
            if !s.passed {
                unexpected += 1;
            }
        }
    }
    if unexpected == 0 {
        println!("acceptance: all outcomes as expected");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcomes");
        ExitCode::FAILURE
    }
}
