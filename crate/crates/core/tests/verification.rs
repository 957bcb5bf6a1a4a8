use std::sync::Arc;

use binomial_schur::delta::{BinomialSequence, DeltaOperator};
use binomial_schur::partition::Partition;
use binomial_schur::report::VerificationReport;
use binomial_schur::schur::SchurContext;
use binomial_schur::verify::{self, cauchy, eh, genfn, standard_operators, Profile};
use proptest::prelude::*;

fn ctx(op: &DeltaOperator, n: usize) -> SchurContext {
    SchurContext::new(Arc::new(BinomialSequence::with_window(op.clone(), 48)), n).unwrap()
}

#[test]
fn quick_profile_is_all_as_expected() {
    let summary = verify::run_all(Profile::Quick, None);
    assert!(summary.reports.len() > 100);
    let bad: Vec<String> = summary.unexpected().map(|r| r.to_string()).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn non_identities_fail_for_forward_and_hold_for_d() {
    let summary = verify::run_all(Profile::Quick, Some("-shift-false"));
    let by_op = |sel: &str| -> Vec<&VerificationReport> {
        summary.reports.iter().filter(|r| r.params.iter().any(|(k, v)| k == "op" && v == sel)).collect()
    };
    assert!(!by_op("fwd").is_empty() && by_op("fwd").iter().all(|r| !r.passed() && r.as_expected()));
    assert!(!by_op("d").is_empty() && by_op("d").iter().all(|r| r.passed() && r.as_expected()));
}

#[test]
fn filter_matches_substrings_case_insensitively() {
    let summary = verify::run_all(Profile::Quick, Some("CAUCHY-DET"));
    assert!(!summary.reports.is_empty());
    assert!(summary.reports.iter().all(|r| r.id.starts_with("cauchy-det")));
}

#[test]
fn an_injected_dagger_bug_is_reported_with_a_witness() {
    let op = DeltaOperator::forward();
    let identity = |lam: &Partition, _: usize, _: usize| Ok(lam.clone());
    let r = cauchy::cauchy_dual_with(&ctx(&op, 2), &ctx(&op, 2), false, &identity);
    assert!(!r.passed());
    assert!(r.witness.is_some());
    assert!(cauchy::cauchy_dual(&ctx(&op, 2), &ctx(&op, 2), false).passed());
}

fn series_check(kind: usize, op: &DeltaOperator, n: usize, terms: usize) -> VerificationReport {
    let c = ctx(op, n);
    let k_lo = -(n as i64) - 2;
    match kind {
        0 => genfn::genfn_h(&c, false, false, terms),
        1 => genfn::genfn_h(&c, true, true, terms),
        2 => eh::series_line(&c, &eh::U_SERIES_LINES[0], k_lo, terms),
        3 => eh::series_line(&c, &eh::X_SERIES_LINES[2], k_lo, terms),
        _ => cauchy::cauchy(&c, &ctx(op, 1), 1, terms),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn a_larger_window_never_turns_a_pass_into_a_fail(
        kind in 0usize..5,
        op in 0usize..5,
        n in 1usize..=2,
        terms in 6usize..12,
        extra in 1usize..8,
    ) {
        let op = &standard_operators()[op];
        let small = series_check(kind, op, n, terms);
        let large = series_check(kind, op, n, terms + extra);
        prop_assert!(!small.passed() || large.passed(), "{small}\n{large}");
        prop_assert_eq!(small.window.as_ref().map(|w| w.terms), Some(terms));
    }
}
