//! Normalized delta operators and their basic polynomial sequences.

mod sequence;

pub use sequence::{BinomialSequence, SeqTerm};

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, frac, int, parse_rational, LaurentTail, MultiPoly, Rational, RationalFunction, UniPoly};

/// Truncation order used for generic operators when none is given.
pub const DEFAULT_SERIES_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Differentiation,
    ForwardDiff,
    BackwardDiff,
    CentralDiff,
    GenericSeries,
}

/// `Q = D + a_2 D^2 + a_3 D^3 + ...`.
///
/// The four built-ins also carry an exact shift rule, which lets them act on
/// rational functions. A generic operator is only known through its
/// coefficients `a_1..a_order`, and refuses inputs whose degree exceeds the
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaOperator {
    kind: OperatorKind,
    /// `series[k - 1] = a_k`.
    series: Vec<Rational>,
}

impl DeltaOperator {
    pub fn differentiation() -> Self {
        DeltaOperator { kind: OperatorKind::Differentiation, series: vec![int(1)] }
    }

    /// `f(x+1) - f(x)`.
    pub fn forward() -> Self {
        let series = (1..=DEFAULT_SERIES_ORDER as u64).map(|k| factorial(k).recip()).collect();
        DeltaOperator { kind: OperatorKind::ForwardDiff, series }
    }

    /// `f(x) - f(x-1)`.
    pub fn backward() -> Self {
        let series = (1..=DEFAULT_SERIES_ORDER as u64)
            .map(|k| {
                let c = factorial(k).recip();
                if k % 2 == 1 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        DeltaOperator { kind: OperatorKind::BackwardDiff, series }
    }

    /// `f(x+1/2) - f(x-1/2)`.
    pub fn central() -> Self {
        let series = (1..=DEFAULT_SERIES_ORDER as u64)
            .map(|k| {
                if k % 2 == 1 {
                    factorial(k).recip() / Rational::from_integer(num_bigint::BigInt::from(1u64) << (k - 1))
                } else {
                    Rational::zero()
                }
            })
            .collect();
        DeltaOperator { kind: OperatorKind::CentralDiff, series }
    }

    /// `D + a_2 D^2 + ...` with the given higher coefficients, padded with
    /// zeros to `order` terms.
    pub fn generic(higher: &[Rational], order: usize) -> Result<Self> {
        if order == 0 || higher.len() + 1 > order {
            return Err(Error::InvalidArgument(format!(
                "series order {order} cannot hold {} coefficients",
                higher.len() + 1
            )));
        }
        let mut series = vec![int(1)];
        series.extend(higher.iter().cloned());
        series.resize(order, Rational::zero());
        Ok(DeltaOperator { kind: OperatorKind::GenericSeries, series })
    }

    /// Parses `d`, `fwd`, `bwd`, `ctr` or `series:a2,a3,...`.
    pub fn parse(s: &str, order: usize) -> Result<Self> {
        match s.trim() {
            "d" | "D" => Ok(Self::differentiation()),
            "fwd" => Ok(Self::forward()),
            "bwd" => Ok(Self::backward()),
            "ctr" => Ok(Self::central()),
            other => {
                let Some(list) = other.strip_prefix("series:") else {
                    return Err(Error::Parse(format!("unknown operator {other:?}")));
                };
                let coeffs = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?;
                Self::generic(&coeffs, order)
            }
        }
    }

    pub fn kind(&self) -> &OperatorKind {
        &self.kind
    }

    pub fn is_builtin(&self) -> bool {
        self.kind != OperatorKind::GenericSeries
    }

    /// Coefficient `a_k` (`a_1 = 1`).
    pub fn coeff(&self, k: usize) -> Rational {
        if k == 0 {
            return Rational::zero();
        }
        self.series.get(k - 1).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of stored coefficients; only meaningful as a limit for generic operators.
    pub fn order(&self) -> usize {
        match self.kind {
            OperatorKind::GenericSeries => self.series.len(),
            _ => usize::MAX,
        }
    }

    /// Shift rule `Q = sum c E^a` for the built-ins.
    fn shift_rule(&self) -> Option<Vec<(Rational, Rational)>> {
        let one = Rational::one;
        match self.kind {
            OperatorKind::ForwardDiff => Some(vec![(one(), int(1)), (-one(), int(0))]),
            OperatorKind::BackwardDiff => Some(vec![(one(), int(0)), (-one(), int(-1))]),
            OperatorKind::CentralDiff => Some(vec![(one(), frac(1, 2)), (-one(), frac(-1, 2))]),
            _ => None,
        }
    }

    fn check_order(&self, degree: usize) -> Result<()> {
        let order = self.order();
        if degree > order {
            return Err(Error::TruncationTooShort { order, degree });
        }
        Ok(())
    }

    pub fn apply(&self, f: &UniPoly) -> Result<UniPoly> {
        if let Some(rule) = self.shift_rule() {
            return Ok(rule
                .iter()
                .fold(UniPoly::zero(), |acc, (c, a)| &acc + &f.shift(a).scale(c)));
        }
        if self.kind == OperatorKind::Differentiation {
            return Ok(f.derivative());
        }
        let deg = f.degree().unwrap_or(0);
        self.check_order(deg)?;
        let mut acc = UniPoly::zero();
        let mut d = f.clone();
        for k in 1..=deg {
            d = d.derivative();
            let a = self.coeff(k);
            if !a.is_zero() {
                acc = &acc + &d.scale(&a);
            }
        }
        Ok(acc)
    }

    pub fn apply_rat(&self, f: &RationalFunction) -> Result<RationalFunction> {
        if let Some(rule) = self.shift_rule() {
            return Ok(rule
                .iter()
                .fold(RationalFunction::zero(), |acc, (c, a)| &acc + &f.shift(a).scale(c)));
        }
        match self.kind {
            OperatorKind::Differentiation => Ok(f.derivative()),
            _ => Err(Error::UnsupportedOperator(
                "generic series operators do not act on rational functions".into(),
            )),
        }
    }

    /// Action on a truncated series; the known window shrinks at most by the
    /// series order of a generic operator.
    pub fn apply_laurent(&self, f: &LaurentTail) -> Result<LaurentTail> {
        if let Some(rule) = self.shift_rule() {
            // the unknown tail loses a degree under a difference, so one extra
            // coefficient of the result is determined by the known part
            let padded = f.pad_below(1);
            let mut acc: Option<LaurentTail> = None;
            for (c, a) in rule {
                let t = padded.compose_affine(&Rational::one(), &a)?.scale(&c);
                acc = Some(match acc {
                    None => t,
                    Some(s) => s.add(&t),
                });
            }
            return Ok(acc.expect("shift rules are nonempty"));
        }
        let first = f.derivative();
        let mut bottom = first.low();
        if self.kind == OperatorKind::GenericSeries {
            bottom = bottom.max(f.top() - self.order() as i64);
        }
        let mut acc = first.truncate(bottom)?;
        let mut d = first;
        let mut k = 1;
        while d.top() > bottom && k < self.series.len() {
            k += 1;
            d = d.derivative();
            let a = self.coeff(k);
            if !a.is_zero() {
                acc = acc.add(&d.scale(&a));
            }
        }
        acc.truncate(bottom)
    }

    /// Action in variable `var` of a multivariate polynomial.
    pub fn apply_multi(&self, f: &MultiPoly, var: usize) -> Result<MultiPoly> {
        if let Some(rule) = self.shift_rule() {
            return Ok(rule
                .iter()
                .fold(MultiPoly::zero(f.nvars()), |acc, (c, a)| &acc + &f.shift_var(var, a).scale(c)));
        }
        let deg = f.degree_in(var) as usize;
        if self.kind == OperatorKind::GenericSeries {
            self.check_order(deg)?;
        }
        let mut acc = MultiPoly::zero(f.nvars());
        let mut d = f.clone();
        for k in 1..=deg {
            d = d.derivative(var);
            let a = self.coeff(k);
            if !a.is_zero() {
                acc = &acc + &d.scale(&a);
            }
        }
        Ok(acc)
    }

    /// Selector string accepted by [`parse`](Self::parse).
    pub fn selector(&self) -> String {
        match self.kind {
            OperatorKind::Differentiation => "d".into(),
            OperatorKind::ForwardDiff => "fwd".into(),
            OperatorKind::BackwardDiff => "bwd".into(),
            OperatorKind::CentralDiff => "ctr".into(),
            OperatorKind::GenericSeries => {
                let last = self.series.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
                let parts: Vec<String> = self.series[1..=last].iter().map(|c| c.to_string()).collect();
                format!("series:{}", parts.join(","))
            }
        }
    }
}

impl fmt::Display for DeltaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.selector())
    }
}
