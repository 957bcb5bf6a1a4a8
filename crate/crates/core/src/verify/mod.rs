//! Exact verification of the identities satisfied by the Schur-type functions.
//!
//! Every check returns a [`VerificationReport`]. Polynomial identities are
//! compared as exact [`MultiPoly`] values; identities between infinite
//! expansions are compared coefficientwise on a stated window after
//! specializing the remaining variables to rationals.

pub mod basic;
pub mod cauchy;
pub mod eh;
pub mod expansion;
pub mod genfn;
pub mod series;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::capelli;
use crate::delta::{BinomialSequence, DeltaOperator};
use crate::error::{Error, Result};
use crate::exact::{default_names, frac, int, LaurentTail, MultiPoly, Rational};
use crate::report::{Summary, VerificationReport, Window};
use crate::schur::SchurContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

/// Sizes used by one profile.
#[derive(Clone, Debug)]
pub struct Params {
    /// Partitions are drawn from the `box_size x box_size` box.
    pub box_size: usize,
    /// Largest number of variables for the polynomial identities.
    pub n_max: usize,
    /// Largest number of variables for the shift expansions of `s_λ`.
    pub expansion_n_max: usize,
    /// Largest number of variables for series-based checks.
    pub series_n_max: usize,
    /// Coefficients compared per series direction.
    pub window: usize,
    pub k_max: i64,
    /// Negative `k` runs down to `-N - k_below`.
    pub k_below: i64,
    pub cauchy_max: usize,
    pub cauchy_series_max: usize,
    pub capelli_n_max: usize,
}

impl Profile {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::Parse(format!("unknown profile {s:?}; expected quick or full"))),
        }
    }

    pub fn params(self) -> Params {
        match self {
            Profile::Quick => Params {
                box_size: 2,
                n_max: 2,
                expansion_n_max: 2,
                series_n_max: 2,
                window: 12,
                k_max: 2,
                k_below: 2,
                cauchy_max: 2,
                cauchy_series_max: 2,
                capelli_n_max: 2,
            },
            Profile::Full => Params {
                box_size: 3,
                n_max: 4,
                expansion_n_max: 3,
                series_n_max: 3,
                window: 24,
                k_max: 4,
                k_below: 4,
                cauchy_max: 3,
                cauchy_series_max: 2,
                capelli_n_max: 4,
            },
        }
    }
}

/// The operators every identity is checked for: the four built-ins and the
/// generic `D + D^2`.
pub fn standard_operators() -> Vec<DeltaOperator> {
    vec![
        DeltaOperator::differentiation(),
        DeltaOperator::forward(),
        DeltaOperator::backward(),
        DeltaOperator::central(),
        DeltaOperator::generic(&[int(1)], crate::delta::DEFAULT_SERIES_ORDER)
            .expect("D + D^2 is a valid operator"),
    ]
}

/// Shared sequences and Schur contexts, so caches are reused across checks.
pub struct Bank {
    seqs: Vec<Arc<BinomialSequence>>,
    contexts: Mutex<HashMap<(usize, usize), Arc<SchurContext>>>,
}

impl Bank {
    /// `window` is the series window the checks will request; generic
    /// operators get enough slack to serve it after repeated application.
    pub fn new(ops: Vec<DeltaOperator>, window: usize) -> Self {
        let seqs = ops.into_iter().map(|op| Arc::new(BinomialSequence::with_window(op, 2 * window + 16))).collect();
        Bank { seqs, contexts: Mutex::new(HashMap::new()) }
    }

    pub fn len(&self) -> usize {
        self.seqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seqs.is_empty()
    }

    pub fn seq(&self, i: usize) -> &Arc<BinomialSequence> {
        &self.seqs[i]
    }

    pub fn ctx(&self, i: usize, n: usize) -> Arc<SchurContext> {
        let mut map = self.contexts.lock().unwrap();
        map.entry((i, n))
            .or_insert_with(|| Arc::new(SchurContext::new(self.seqs[i].clone(), n).expect("n >= 1")))
            .clone()
    }

    /// Index of the operator with the given selector, e.g. `fwd`.
    pub fn find(&self, selector: &str) -> Option<usize> {
        self.seqs.iter().position(|s| s.op().selector() == selector)
    }
}

/// Names `x1..xN, u` for polynomials with the shift variable appended.
pub fn names_with_u(n: usize) -> Vec<String> {
    let mut names = default_names(n);
    names.push("u".into());
    names
}

fn clip(s: String) -> String {
    const MAX: usize = 160;
    if s.chars().count() <= MAX {
        return s;
    }
    let head: String = s.chars().take(MAX).collect();
    format!("{head} ...")
}

/// Records an exact polynomial comparison.
pub(crate) fn check_poly(report: &mut VerificationReport, lhs: &MultiPoly, rhs: &MultiPoly, names: &[String], at: &str) {
    report.record(lhs == rhs, || clip(format!("{at}: lhs - rhs = {}", (lhs - rhs).to_text(names))));
}

/// Records a series comparison down to `bottom`.
pub(crate) fn check_series(report: &mut VerificationReport, lhs: &LaurentTail, rhs: &LaurentTail, bottom: i64, at: &str) {
    match lhs.agrees_down_to(rhs, bottom) {
        Ok(true) => report.record(true, String::new),
        Ok(false) => {
            let (e, a, b) = lhs.first_mismatch(rhs, bottom).expect("series differ");
            report.record(false, || format!("{at}: coefficient of ^{e} is {a} vs {b}"));
        }
        Err(e) => report.record_error(&e),
    }
}

pub(crate) fn check_value(report: &mut VerificationReport, lhs: &Rational, rhs: &Rational, at: &str) {
    report.record(lhs == rhs, || format!("{at}: {lhs} vs {rhs}"));
}

pub(crate) fn window(terms: usize, top: i64, truncation: impl Into<String>) -> Window {
    Window { terms, top, bottom: top - terms as i64 + 1, truncation: truncation.into() }
}

/// Deterministic specialization points with `n` distinct coordinates.
pub fn sample_points(n: usize) -> Vec<Vec<Rational>> {
    let pools = [
        vec![int(2), int(5), int(11), int(-3), frac(7, 2)],
        vec![frac(3, 2), frac(7, 3), int(-4), int(9), frac(-5, 7)],
        vec![int(3), frac(-1, 2), int(13), frac(2, 5), int(-7)],
        vec![frac(5, 4), int(6), frac(-9, 2), int(17), frac(1, 6)],
        vec![int(-2), frac(11, 3), int(8), frac(-3, 10), int(4)],
    ];
    pools.iter().map(|p| p[..n].to_vec()).collect()
}

/// Item id such as `zero-variable[fwd,N=2]`.
pub(crate) fn tag(base: &str, bank: &Bank, op: usize, extra: &str) -> String {
    let sel = bank.seq(op).op().selector();
    if extra.is_empty() {
        format!("{base}[{sel}]")
    } else {
        format!("{base}[{sel},{extra}]")
    }
}

pub fn points_text(x: &[Rational]) -> String {
    let body: Vec<String> = x.iter().map(crate::exact::fmt_rational).collect();
    format!("({})", body.join(","))
}

type Job = Box<dyn Fn(&Bank) -> VerificationReport + Send + Sync>;

/// One named, independently runnable check.
pub struct Item {
    pub id: String,
    job: Job,
}

impl Item {
    pub fn new(id: impl Into<String>, job: impl Fn(&Bank) -> VerificationReport + Send + Sync + 'static) -> Self {
        Item { id: id.into(), job: Box::new(job) }
    }

    pub fn run(&self, bank: &Bank) -> VerificationReport {
        (self.job)(bank)
    }
}

/// Every check of a profile, in a fixed order.
pub fn items(profile: Profile, bank: &Bank) -> Vec<Item> {
    let p = profile.params();
    let mut out = Vec::new();
    out.extend(basic::items(&p, bank));
    out.extend(expansion::items(&p, bank));
    out.extend(eh::items(&p, bank));
    out.extend(genfn::items(&p, bank));
    out.extend(cauchy::items(&p, bank));
    out.extend(capelli::items(&p));
    out
}

/// Runs all checks whose id contains `filter`, in parallel, reporting in
/// the fixed item order.
pub fn run_all(profile: Profile, filter: Option<&str>) -> Summary {
    let bank = Bank::new(standard_operators(), profile.params().window);
    run_items(items(profile, &bank), &bank, filter)
}

pub fn run_items(items: Vec<Item>, bank: &Bank, filter: Option<&str>) -> Summary {
    let selected: Vec<Item> = match filter {
        Some(f) => {
            let f = f.to_lowercase();
            items.into_iter().filter(|i| i.id.to_lowercase().contains(&f)).collect()
        }
        None => items,
    };
    let reports = selected.par_iter().map(|item| item.run(bank)).collect();
    Summary { reports }
}
