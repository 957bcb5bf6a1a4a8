//! Exact scalar and polynomial arithmetic.
//!
//! Everything in this crate is computed over the rationals with arbitrary
//! precision; there is no floating point anywhere.

mod laurent;
mod multipoly;
mod ratfunc;
mod unipoly;

pub use laurent::LaurentTail;
pub use multipoly::{Monomial, MultiPoly};
pub use ratfunc::RationalFunction;
pub use unipoly::UniPoly;
pub(crate) use unipoly::join_terms;
pub use multipoly::default_names;
pub use laurent::DEFAULT_PRECISION;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-7/2"` or `"1/2"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!`, zero for `k < 0`.
///
/// The top argument may be negative.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    if n >= 0 && k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= BigInt::from(i);
    }
    Rational::new(acc, fact)
}

pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// `(-1)^n` for any integer `n`.
pub fn sign(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Writes a rational the way the canonical text form wants it: `a/b`.
pub fn fmt_rational(q: &Rational) -> String {
    q.to_string()
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

/// Minimal commutative-ring interface used by the generic determinant.
pub trait RingElem: Clone {
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

impl RingElem for Rational {
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Determinant over any commutative ring by expansion over column subsets.
///
/// `minors[S]` holds the determinant of the leading `|S|` rows restricted to
/// the columns in `S`; this costs `O(n 2^n)` ring multiplications and never
/// divides. `one` supplies the multiplicative identity (the determinant of
/// the empty matrix).
pub fn det<R: RingElem>(matrix: &[Vec<R>], one: &R) -> R {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n < 25, "determinant too large for subset expansion");
    if n == 0 {
        return one.clone();
    }
    let zero = one.ring_sub(one);
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(one.clone());
    // process masks in order of popcount so that every submask is ready
    let mut masks: Vec<usize> = (1..(1usize << n)).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let row = mask.count_ones() as usize - 1;
        let mut acc: Option<R> = None;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &matrix[row][col];
            if entry.ring_is_zero() {
                continue;
            }
            let rest = match &minors[mask & !(1 << col)] {
                Some(r) if !r.ring_is_zero() => r,
                _ => continue,
            };
            let term = entry.ring_mul(rest);
            let above = (mask >> (col + 1)).count_ones();
            acc = Some(match acc {
                None if above % 2 == 0 => term,
                None => zero.ring_sub(&term),
                Some(a) if above % 2 == 0 => a.ring_add(&term),
                Some(a) => a.ring_sub(&term),
            });
        }
        minors[mask] = Some(acc.unwrap_or_else(|| zero.clone()));
    }
    minors[(1 << n) - 1].take().unwrap()
}

/// Rational determinant by fraction-carrying Gaussian elimination.
pub fn det_rational(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let pivot = m[c][c].clone();
        d *= &pivot;
        for r in (c + 1)..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            let (upper, lower) = m.split_at_mut(r);
            for (entry, p) in lower[0][c..].iter_mut().zip(&upper[c][c..]) {
                *entry -= &f * p;
            }
        }
    }
    d
}

/// Vandermonde product `prod_{i<j} (x_i - x_j)` at rational points.
pub fn vandermonde(points: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            acc *= &points[i] - &points[j];
        }
    }
    acc
}

/// Errors with `RepeatedEvaluationPoint` unless all points are distinct.
pub fn ensure_distinct(points: &[Rational]) -> Result<()> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i] == points[j] {
                return Err(Error::RepeatedEvaluationPoint(points[i].to_string()));
            }
        }
    }
    Ok(())
}
