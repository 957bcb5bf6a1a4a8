use std::sync::RwLock;

use num_traits::One;

use super::DeltaOperator;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, LaurentTail, MultiPoly, Rational, RationalFunction, UniPoly, DEFAULT_PRECISION};
use crate::report::VerificationReport;

/// A value `p_n` or `p*_n` for some integer `n`.
///
/// Nonnegative indices are polynomials. Negative indices are exact rational
/// functions for the built-in operators and truncated series otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqTerm {
    Poly(UniPoly),
    Rat(RationalFunction),
    Series(LaurentTail),
}

impl SeqTerm {
    pub fn as_poly(&self) -> Option<&UniPoly> {
        match self {
            SeqTerm::Poly(p) => Some(p),
            _ => None,
        }
    }

    /// Exact value at a rational point; series have no point values.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        match self {
            SeqTerm::Poly(p) => Ok(p.eval(x)),
            SeqTerm::Rat(r) => r.eval(x),
            SeqTerm::Series(_) => Err(Error::UnsupportedOperator(
                "negative-index values of generic operators are only known as series".into(),
            )),
        }
    }

    /// Expansion at infinity known down to `bottom`.
    pub fn to_laurent(&self, bottom: i64) -> Result<LaurentTail> {
        match self {
            SeqTerm::Poly(p) => Ok(LaurentTail::of_poly(p, bottom)),
            SeqTerm::Rat(r) => Ok(LaurentTail::from_ratfunc(r, bottom)),
            SeqTerm::Series(s) => s.truncate(bottom),
        }
    }

    /// `f(c x + a)`.
    pub fn compose_affine(&self, c: &Rational, a: &Rational) -> Result<SeqTerm> {
        Ok(match self {
            SeqTerm::Poly(p) => SeqTerm::Poly(p.compose_affine(c, a)),
            SeqTerm::Rat(r) => SeqTerm::Rat(r.compose_affine(c, a)),
            SeqTerm::Series(s) => SeqTerm::Series(s.compose_affine(c, a)?),
        })
    }

    pub fn to_text(&self, var: &str) -> String {
        match self {
            SeqTerm::Poly(p) => p.to_text(var),
            SeqTerm::Rat(r) => r.to_text(var),
            SeqTerm::Series(s) => s.to_text(var),
        }
    }
}

/// The basic sequence `p_n` of a delta operator and its conjugate `p*_n`, with
/// lazily filled caches.
#[derive(Debug)]
pub struct BinomialSequence {
    op: DeltaOperator,
    window: usize,
    basic: RwLock<Vec<UniPoly>>,
    /// `neg_star[m]` is `p*_{-1-m}`.
    neg_star: RwLock<Vec<SeqTerm>>,
}

impl BinomialSequence {
    pub fn new(op: DeltaOperator) -> Self {
        Self::with_window(op, DEFAULT_PRECISION)
    }

    /// `window` is the number of series terms kept for negative indices of
    /// generic operators.
    pub fn with_window(op: DeltaOperator, window: usize) -> Self {
        BinomialSequence {
            op,
            window: window.max(1),
            basic: RwLock::new(vec![UniPoly::one()]),
            neg_star: RwLock::new(Vec::new()),
        }
    }

    pub fn op(&self) -> &DeltaOperator {
        &self.op
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// `p_n`, the monic solution of `Q p_n = n p_{n-1}` with `p_n(0) = 0`.
    pub fn basic_poly(&self, n: usize) -> Result<UniPoly> {
        if let Some(p) = self.basic.read().unwrap().get(n) {
            return Ok(p.clone());
        }
        let mut cache = self.basic.write().unwrap();
        while cache.len() <= n {
            let m = cache.len();
            let next = self.solve_next(m, &cache[m - 1])?;
            cache.push(next);
        }
        Ok(cache[n].clone())
    }

    fn solve_next(&self, n: usize, prev: &UniPoly) -> Result<UniPoly> {
        let target = prev.scale(&int(n as i64));
        let mut p = UniPoly::monomial(Rational::one(), n);
        let mut residual = &target - &self.op.apply(&p)?;
        while let Some(d) = residual.degree() {
            // Q x^(d+1) has leading term (d+1) x^d
            let c = residual.leading_coeff() / int(d as i64 + 1);
            let step = UniPoly::monomial(c, d + 1);
            residual = &residual - &self.op.apply(&step)?;
            p = &p + &step;
        }
        Ok(p)
    }

    /// `p*_n = p_{n+1} / x`.
    pub fn conj_poly(&self, n: usize) -> Result<UniPoly> {
        let next = self.basic_poly(n + 1)?;
        Ok(UniPoly::from_coeffs(next.coeffs()[1..].to_vec()))
    }

    /// `p_n / n!`.
    pub fn divided_poly(&self, n: usize) -> Result<UniPoly> {
        Ok(self.basic_poly(n)?.scale(&factorial(n as u64).recip()))
    }

    /// `p_n` or `p*_n` for `n < 0`, by the downward recurrence
    /// `p*_{m-1} = Q(p*_m) / m` from `p*_{-1} = 1/x`, and `p_n = x p*_{n-1}`.
    pub fn neg_index(&self, n: i64, star: bool) -> Result<SeqTerm> {
        if n >= 0 {
            return Err(Error::InvalidArgument(format!("neg_index needs n < 0, got {n}")));
        }
        if star {
            return self.neg_star(n);
        }
        Ok(match self.neg_star(n - 1)? {
            SeqTerm::Rat(r) => SeqTerm::Rat(&r * &RationalFunction::power_of_x(1)),
            SeqTerm::Series(s) => SeqTerm::Series(s.shift_exp(1)),
            SeqTerm::Poly(_) => unreachable!("negative indices are never polynomials"),
        })
    }

    fn neg_star(&self, n: i64) -> Result<SeqTerm> {
        let idx = (-1 - n) as usize;
        if let Some(t) = self.neg_star.read().unwrap().get(idx) {
            return Ok(t.clone());
        }
        let mut cache = self.neg_star.write().unwrap();
        if cache.is_empty() {
            cache.push(if self.op.is_builtin() {
                SeqTerm::Rat(RationalFunction::power_of_x(-1))
            } else {
                SeqTerm::Series(LaurentTail::monomial(Rational::one(), -1, -(self.window as i64)))
            });
        }
        while cache.len() <= idx {
            let m = -(cache.len() as i64);
            let inv_m = int(m).recip();
            let next = match cache.last().unwrap() {
                SeqTerm::Rat(r) => SeqTerm::Rat(self.op.apply_rat(r)?.scale(&inv_m)),
                SeqTerm::Series(s) => SeqTerm::Series(self.op.apply_laurent(s)?.scale(&inv_m)),
                SeqTerm::Poly(_) => unreachable!(),
            };
            cache.push(next);
        }
        Ok(cache[idx].clone())
    }

    /// `p_n` or `p*_n` for any integer `n`.
    pub fn term(&self, n: i64, star: bool) -> Result<SeqTerm> {
        if n < 0 {
            return self.neg_index(n, star);
        }
        Ok(SeqTerm::Poly(if star {
            self.conj_poly(n as usize)?
        } else {
            self.basic_poly(n as usize)?
        }))
    }

    pub fn eval(&self, n: i64, star: bool, x: &Rational) -> Result<Rational> {
        self.term(n, star)?.eval(x)
    }

    /// `R f = Q(x f) - x Q(f)`.
    fn r_once(&self, f: &UniPoly) -> Result<UniPoly> {
        let xf = f.shift_up(1);
        Ok(&self.op.apply(&xf)? - &self.op.apply(f)?.shift_up(1))
    }

    /// `R^a f`; negative powers by triangular solves, since `R` keeps the
    /// degree and the leading coefficient.
    pub fn r_apply(&self, a: i64, f: &UniPoly) -> Result<UniPoly> {
        let mut g = f.clone();
        if a >= 0 {
            for _ in 0..a {
                g = self.r_once(&g)?;
            }
            return Ok(g);
        }
        for _ in 0..(-a) {
            let mut rhs = g;
            let mut sol = UniPoly::zero();
            while let Some(d) = rhs.degree() {
                let step = UniPoly::monomial(rhs.leading_coeff(), d);
                rhs = &rhs - &self.r_once(&step)?;
                sol = &sol + &step;
            }
            g = sol;
        }
        Ok(g)
    }

    /// `p^(a)_n = R^a p_n`.
    pub fn shifted_poly(&self, a: i64, n: usize) -> Result<UniPoly> {
        self.r_apply(a, &self.basic_poly(n)?)
    }

    /// Checks `p_n(x+y) = sum C(n,k) p_k(x) p_{n-k}(y)` and the two conjugate
    /// forms as bivariate polynomial identities for `n <= n_max`.
    pub fn check_binomial_type(&self, n_max: usize) -> VerificationReport {
        let mut report = VerificationReport::new("binomial-type").param("op", &self.op).param("n_max", n_max);
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let sum = &x + &y;
        let at = |p: &UniPoly, var: usize| MultiPoly::from_uni(p, 2, var);
        let at_sum = |p: &UniPoly| at(p, 0).compose(&[sum.clone(), y.clone()]);
        for n in 0..=n_max {
            let run = || -> Result<[(bool, &'static str); 3]> {
                let mut rhs = [MultiPoly::zero(2), MultiPoly::zero(2), MultiPoly::zero(2)];
                for k in 0..=n {
                    let c = binomial(n as i64, k as i64);
                    let pk = self.basic_poly(k)?;
                    let pnk = self.basic_poly(n - k)?;
                    let sk = self.conj_poly(k)?;
                    let snk = self.conj_poly(n - k)?;
                    rhs[0] = &rhs[0] + &(&at(&pk, 0) * &at(&pnk, 1)).scale(&c);
                    rhs[1] = &rhs[1] + &(&at(&pk, 0) * &at(&snk, 1)).scale(&c);
                    rhs[2] = &rhs[2] + &(&at(&sk, 0) * &at(&pnk, 1)).scale(&c);
                }
                let lhs_p = at_sum(&self.basic_poly(n)?);
                let lhs_s = at_sum(&self.conj_poly(n)?);
                Ok([
                    (lhs_p == rhs[0], "p_n(x+y)"),
                    (lhs_s == rhs[1], "p*_n(x+y) via p_k(x) p*_(n-k)(y)"),
                    (lhs_s == rhs[2], "p*_n(x+y) via p*_k(x) p_(n-k)(y)"),
                ])
            };
            match run() {
                Ok(results) => {
                    for (ok, name) in results {
                        report.record(ok, || format!("{name} fails at n={n}"));
                    }
                }
                Err(e) => report.record_error(&e),
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    fn builtins() -> Vec<DeltaOperator> {
        vec![
            DeltaOperator::differentiation(),
            DeltaOperator::forward(),
            DeltaOperator::backward(),
            DeltaOperator::central(),
        ]
    }

    fn falling(shift: i64, n: usize) -> UniPoly {
        let roots: Vec<Rational> = (0..n as i64).map(|i| int(i - shift)).collect();
        UniPoly::from_roots(&roots)
    }

    #[test]
    fn classical_examples() {
        let fwd = BinomialSequence::new(DeltaOperator::forward());
        assert_eq!(fwd.basic_poly(3).unwrap(), falling(0, 3));
        assert_eq!(fwd.conj_poly(2).unwrap(), UniPoly::from_roots(&[int(1), int(2)]));
        let bwd = BinomialSequence::new(DeltaOperator::backward());
        assert_eq!(bwd.basic_poly(2).unwrap(), UniPoly::from_ints(&[0, 1, 1]));
        let ctr = BinomialSequence::new(DeltaOperator::central());
        assert_eq!(ctr.basic_poly(3).unwrap().to_string(), "x^3 - 1/4*x");
        assert_eq!(ctr.conj_poly(2).unwrap(), UniPoly::from_roots(&[frac(1, 2), frac(-1, 2)]));
        let d = BinomialSequence::new(DeltaOperator::differentiation());
        assert_eq!(d.conj_poly(5).unwrap(), UniPoly::monomial(int(1), 5));
    }

    #[test]
    fn negative_indices() {
        for op in builtins() {
            let seq = BinomialSequence::new(op);
            assert_eq!(seq.neg_index(-1, true).unwrap().to_text("x"), "1/x");
        }
        let fwd = BinomialSequence::new(DeltaOperator::forward());
        for m in 1..=6i64 {
            let roots: Vec<Rational> = (0..m).map(|i| int(-i)).collect();
            let closed = RationalFunction::new(UniPoly::one(), UniPoly::from_roots(&roots)).unwrap();
            assert_eq!(fwd.neg_index(-m, true).unwrap(), SeqTerm::Rat(closed), "m={m}");
        }
        let d = BinomialSequence::new(DeltaOperator::differentiation());
        assert_eq!(d.neg_index(-3, true).unwrap(), SeqTerm::Rat(RationalFunction::power_of_x(-3)));
        assert_eq!(d.neg_index(-2, false).unwrap(), SeqTerm::Rat(RationalFunction::power_of_x(-2)));
    }

    #[test]
    fn invariants_of_builtins() {
        for op in builtins() {
            let seq = BinomialSequence::new(op.clone());
            for n in 0..=10usize {
                let p = seq.basic_poly(n).unwrap();
                assert!(p.is_monic() && p.degree() == Some(n));
                assert_eq!(p.coeff(0), if n == 0 { int(1) } else { int(0) });
                if n > 0 {
                    assert_eq!(op.apply(&p).unwrap(), seq.basic_poly(n - 1).unwrap().scale(&int(n as i64)));
                }
            }
            let x = RationalFunction::power_of_x(1);
            for n in -6i64..=9 {
                let lhs = match seq.term(n, true).unwrap() {
                    SeqTerm::Poly(p) => &RationalFunction::from_poly(p) * &x,
                    SeqTerm::Rat(r) => &r * &x,
                    SeqTerm::Series(_) => unreachable!(),
                };
                let rhs = match seq.term(n + 1, false).unwrap() {
                    SeqTerm::Poly(p) => RationalFunction::from_poly(p),
                    SeqTerm::Rat(r) => r,
                    SeqTerm::Series(_) => unreachable!(),
                };
                assert_eq!(lhs, rhs, "{op} n={n}");
            }
            for n in -6i64..=-1 {
                for star in [false, true] {
                    let SeqTerm::Rat(f) = seq.term(n, star).unwrap() else { unreachable!() };
                    let SeqTerm::Rat(g) = seq.term(n - 1, star).unwrap() else { unreachable!() };
                    assert_eq!(op.apply_rat(&f).unwrap(), g.scale(&int(n)), "{op} n={n} star={star}");
                }
            }
        }
    }

    #[test]
    fn r_operator() {
        for op in builtins() {
            let seq = BinomialSequence::new(op);
            for k in 0..=10usize {
                let star = seq.conj_poly(k).unwrap();
                assert_eq!(seq.r_apply(1, &star).unwrap(), seq.basic_poly(k).unwrap());
                assert_eq!(seq.shifted_poly(-1, k).unwrap(), star);
                assert_eq!(seq.shifted_poly(0, k).unwrap(), seq.basic_poly(k).unwrap());
            }
        }
        let fwd = BinomialSequence::new(DeltaOperator::forward());
        assert_eq!(fwd.r_apply(1, &falling(0, 2)).unwrap(), falling(1, 2));
        let d = BinomialSequence::new(DeltaOperator::differentiation());
        let x5 = UniPoly::monomial(int(1), 5);
        assert_eq!(d.r_apply(3, &x5).unwrap(), x5);
    }

    #[test]
    fn r_shifted_convolution() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        for op in builtins().into_iter().chain([DeltaOperator::generic(&[int(1)], 16).unwrap()]) {
            let seq = BinomialSequence::new(op.clone());
            for a in -2i64..=2 {
                for b in -2i64..=2 {
                    for n in 0..=6usize {
                        let lhs = MultiPoly::from_uni(&seq.shifted_poly(a + b, n).unwrap(), 2, 0)
                            .compose(&[&x + &y, y.clone()]);
                        let mut rhs = MultiPoly::zero(2);
                        for k in 0..=n {
                            let l = MultiPoly::from_uni(&seq.shifted_poly(a, n - k).unwrap(), 2, 0);
                            let r = MultiPoly::from_uni(&seq.shifted_poly(b, k).unwrap(), 2, 1);
                            rhs = &rhs + &(&l * &r).scale(&binomial(n as i64, k as i64));
                        }
                        assert_eq!(lhs, rhs, "{op} a={a} b={b} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn binomial_type_reports() {
        for op in builtins() {
            assert!(BinomialSequence::new(op).check_binomial_type(6).passed());
        }
        let generic = DeltaOperator::generic(&[int(1)], 12).unwrap();
        assert!(BinomialSequence::new(generic).check_binomial_type(5).passed());
    }

    #[test]
    fn generic_forward_matches_builtin() {
        let coeffs: Vec<Rational> = (2..=12u64).map(|k| factorial(k).recip()).collect();
        let generic = BinomialSequence::new(DeltaOperator::generic(&coeffs, 12).unwrap());
        let builtin = BinomialSequence::new(DeltaOperator::forward());
        for n in 0..=10 {
            assert_eq!(generic.basic_poly(n).unwrap(), builtin.basic_poly(n).unwrap());
        }
        // series negative indices agree with the exact ones on their window
        for n in -5i64..=-1 {
            for star in [false, true] {
                let SeqTerm::Series(s) = generic.term(n, star).unwrap() else { panic!() };
                let exact = builtin.term(n, star).unwrap().to_laurent(s.low()).unwrap();
                assert!(s.agrees_down_to(&exact, s.low()).unwrap(), "n={n} star={star}");
                assert!(s.precision() >= 12);
            }
        }
    }

    #[test]
    fn generic_truncation_is_loud() {
        let seq = BinomialSequence::new(DeltaOperator::generic(&[int(1)], 4).unwrap());
        assert!(seq.basic_poly(4).is_ok());
        assert!(matches!(seq.basic_poly(5), Err(Error::TruncationTooShort { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn random_generic_operators(coeffs in proptest::collection::vec((-4i64..5, 1i64..4), 1..4)) {
            let higher: Vec<Rational> = coeffs.iter().map(|&(n, d)| frac(n, d)).collect();
            let op = DeltaOperator::generic(&higher, 12).unwrap();
            let seq = BinomialSequence::new(op.clone());
            for n in 0..=10usize {
                let p = seq.basic_poly(n).unwrap();
                prop_assert!(p.is_monic());
                prop_assert_eq!(p.coeff(0), if n == 0 { int(1) } else { int(0) });
                if n > 0 {
                    prop_assert_eq!(op.apply(&p).unwrap(), seq.basic_poly(n - 1).unwrap().scale(&int(n as i64)));
                }
            }
        }
    }
}
