//! Schur-type functions attached to a binomial sequence.
//!
//! For a row vector `l_1 > ... > l_N` the alternant is `det(p_{l_i}(x_j))`,
//! and the Schur-type function is the alternant divided by the difference
//! product. Signatures index rows through `l_i = λ_i + N - i`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::delta::BinomialSequence;
use crate::error::{Error, Result};
use crate::exact::{binomial, det, det_rational, ensure_distinct, factorial, vandermonde, MultiPoly, Rational, UniPoly};
use crate::partition::Partition;

/// A Schur-type value: symbolic in the polynomial regime, a number at given
/// points otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchurValue {
    Poly(MultiPoly),
    Value(Rational),
}

impl SchurValue {
    pub fn to_text(&self, names: &[String]) -> String {
        match self {
            SchurValue::Poly(p) => p.to_text(names),
            SchurValue::Value(v) => crate::exact::fmt_rational(v),
        }
    }
}

/// The four one-row/one-column families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    E,
    EStar,
    H,
    HStar,
}

impl Family {
    pub fn is_star(self) -> bool {
        matches!(self, Family::EStar | Family::HStar)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Family::E),
            "e*" | "estar" => Ok(Family::EStar),
            "h" => Ok(Family::H),
            "h*" | "hstar" => Ok(Family::HStar),
            _ => Err(Error::Parse(format!("unknown family {s:?}; expected e, e*, h or h*"))),
        }
    }
}

type CacheKey = (Vec<i64>, bool);

pub struct SchurContext {
    seq: Arc<BinomialSequence>,
    n: usize,
    cache: RwLock<HashMap<CacheKey, MultiPoly>>,
}

impl SchurContext {
    pub fn new(seq: Arc<BinomialSequence>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one variable".into()));
        }
        Ok(SchurContext { seq, n, cache: RwLock::new(HashMap::new()) })
    }

    pub fn seq(&self) -> &Arc<BinomialSequence> {
        &self.seq
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Row indices `λ_i + N - i`.
    pub fn rows(&self, lambda: &Partition) -> Result<Vec<i64>> {
        let parts = lambda.padded(self.n)?;
        Ok(parts.iter().enumerate().map(|(i, &p)| p + (self.n - 1 - i) as i64).collect())
    }

    fn entry(&self, l: i64, star: bool) -> Result<UniPoly> {
        if l < 0 {
            return Err(Error::NegativeRowIndex(l));
        }
        if star {
            self.seq.conj_poly(l as usize)
        } else {
            self.seq.basic_poly(l as usize)
        }
    }

    /// `det(p_{l_i}(x_j))` for arbitrary nonnegative rows.
    pub fn alternant_rows(&self, rows: &[i64], star: bool) -> Result<MultiPoly> {
        let n = self.n;
        if rows.len() != n {
            return Err(Error::InvalidArgument(format!("expected {n} rows, got {}", rows.len())));
        }
        let mut matrix = Vec::with_capacity(n);
        for &l in rows {
            let p = self.entry(l, star)?;
            matrix.push((0..n).map(|j| MultiPoly::from_uni(&p, n, j)).collect::<Vec<_>>());
        }
        Ok(det(&matrix, &MultiPoly::one(n)))
    }

    pub fn alternant(&self, lambda: &Partition, star: bool) -> Result<MultiPoly> {
        self.alternant_rows(&self.rows(lambda)?, star)
    }

    /// Alternant over the difference product, for arbitrary nonnegative rows.
    /// Repeated rows give zero.
    pub fn schur_rows(&self, rows: &[i64], star: bool) -> Result<MultiPoly> {
        let key = (rows.to_vec(), star);
        if let Some(p) = self.cache.read().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let vars: Vec<usize> = (0..self.n).collect();
        let value = self.alternant_rows(rows, star)?.divide_vandermonde(&vars)?;
        self.cache.write().unwrap().insert(key, value.clone());
        Ok(value)
    }

    /// `s_λ` or `s*_λ` in the polynomial regime.
    pub fn schur(&self, lambda: &Partition, star: bool) -> Result<MultiPoly> {
        self.schur_rows(&self.rows(lambda)?, star)
    }

    /// `s_λ` or `s*_λ` at distinct rational points; any integer rows allowed.
    pub fn schur_at(&self, lambda: &Partition, star: bool, x: &[Rational]) -> Result<Rational> {
        self.schur_rows_at(&self.rows(lambda)?, star, x)
    }

    pub fn schur_rows_at(&self, rows: &[i64], star: bool, x: &[Rational]) -> Result<Rational> {
        self.check_point(x)?;
        let mut matrix = Vec::with_capacity(self.n);
        for &l in rows {
            let t = self.seq.term(l, star)?;
            matrix.push(x.iter().map(|xj| t.eval(xj)).collect::<Result<Vec<_>>>()?);
        }
        Ok(det_rational(&matrix) / vandermonde(x))
    }

    fn check_point(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::InvalidArgument(format!("expected {} coordinates, got {}", self.n, x.len())));
        }
        ensure_distinct(x)
    }

    /// `e_k` or `e*_k`; zero outside `0..=N`.
    pub fn e(&self, k: i64, star: bool) -> Result<MultiPoly> {
        if k < 0 || k > self.n as i64 {
            return Ok(MultiPoly::zero(self.n));
        }
        self.schur(&Partition::column(k as usize), star)
    }

    /// `h_k` or `h*_k` for `k > -N`. For `-N < k < 0` the first row repeats
    /// another and the value is zero.
    pub fn h(&self, k: i64, star: bool) -> Result<MultiPoly> {
        let rows = self.h_rows(k);
        if rows[0] < 0 {
            return Err(Error::NegativeRowIndex(rows[0]));
        }
        self.schur_rows(&rows, star)
    }

    fn h_rows(&self, k: i64) -> Vec<i64> {
        let n = self.n as i64;
        std::iter::once(k + n - 1).chain((0..n - 1).rev()).collect()
    }

    /// `h_k` or `h*_k` at distinct points for any integer `k`, by cofactor
    /// expansion along the first row:
    /// `h_k(x) = sum_j p_{k+N-1}(x_j) / prod_{i != j} (x_j - x_i)`.
    pub fn h_at(&self, k: i64, star: bool, x: &[Rational]) -> Result<Rational> {
        self.check_point(x)?;
        let term = self.seq.term(k + self.n as i64 - 1, star)?;
        let mut acc = Rational::zero();
        for (j, xj) in x.iter().enumerate() {
            let mut den = Rational::one();
            for (i, xi) in x.iter().enumerate() {
                if i != j {
                    den *= xj - xi;
                }
            }
            acc += term.eval(xj)? / den;
        }
        Ok(acc)
    }

    /// Symbolic when possible, otherwise evaluated at `x`.
    pub fn family(&self, fam: Family, k: i64, x: Option<&[Rational]>) -> Result<SchurValue> {
        let star = fam.is_star();
        match (fam, x) {
            (Family::E | Family::EStar, None) => Ok(SchurValue::Poly(self.e(k, star)?)),
            (Family::E | Family::EStar, Some(x)) => Ok(SchurValue::Value(self.e(k, star)?.eval(x))),
            (_, None) => Ok(SchurValue::Poly(self.h(k, star)?)),
            (_, Some(x)) => Ok(SchurValue::Value(self.h_at(k, star, x)?)),
        }
    }

    /// `f(x_1 + s u, ..., x_N + s u)` with `u` appended as the last variable.
    pub fn shift_vars(&self, f: &MultiPoly, sign: i64) -> MultiPoly {
        let n = f.nvars();
        let u = MultiPoly::var(n + 1, n).scale(&Rational::from_integer(sign.into()));
        let images: Vec<MultiPoly> = (0..n).map(|i| &MultiPoly::var(n + 1, i) + &u).collect();
        f.compose(&images)
    }

    /// Expansion coefficient of `s_μ` in `s_λ(x + u)` as a polynomial in `u`.
    ///
    /// Without `hat` this is `det(C(λ_i+N-i, λ_i-μ_j-i+j) p_{λ_i-μ_j-i+j}(u))`
    /// over `N x N`; with `hat` it is `det(p_(λ_i-μ_j-i+j)(u))` with divided
    /// powers, which does not depend on `N`. `star` switches to `p*`.
    pub fn d_coeff(&self, lambda: &Partition, mu: &Partition, hat: bool, star: bool) -> Result<UniPoly> {
        if hat {
            return dhat(&self.seq, lambda, mu, star);
        }
        let n = self.n;
        let lam = lambda.padded(n)?;
        let mu = mu.padded(n)?;
        let mut matrix = Vec::with_capacity(n);
        for (i, &li) in lam.iter().enumerate() {
            let top = li + (n - 1 - i) as i64;
            let mut row = Vec::with_capacity(n);
            for (j, &mj) in mu.iter().enumerate() {
                let m = li - mj - i as i64 + j as i64;
                let c = binomial(top, m);
                // C(top, m) vanishes for m < 0, so p_m is never needed there
                row.push(if c.is_zero() { UniPoly::zero() } else { self.entry(m, star)?.scale(&c) });
            }
            matrix.push(row);
        }
        Ok(det(&matrix, &UniPoly::one()))
    }
}

/// `det(p_(λ_i-μ_j-i+j)(u))` of size `max(depth λ, depth μ)`.
pub fn dhat(seq: &BinomialSequence, lambda: &Partition, mu: &Partition, star: bool) -> Result<UniPoly> {
    let size = lambda.depth().max(mu.depth());
    let mut matrix = Vec::with_capacity(size);
    for i in 0..size {
        let mut row = Vec::with_capacity(size);
        for j in 0..size {
            let m = lambda.part(i) - mu.part(j) - i as i64 + j as i64;
            row.push(match m {
                m if m < 0 => UniPoly::zero(),
                m if star => seq.conj_poly(m as usize)?.scale(&factorial(m as u64).recip()),
                m => seq.divided_poly(m as usize)?,
            });
        }
        matrix.push(row);
    }
    Ok(det(&matrix, &UniPoly::one()))
}
