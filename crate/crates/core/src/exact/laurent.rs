use std::fmt;

use num_traits::{One, Zero};

use super::{binomial, int, join_terms, Rational, RationalFunction, UniPoly};
use crate::error::{Error, Result};

/// Default number of retained terms.
pub const DEFAULT_PRECISION: usize = 24;

/// A Laurent series in `x^{-1}` known on a finite window of exponents.
///
/// `coeffs[i]` is the coefficient of `x^(top - i)`. Everything below
/// `low() = top - precision + 1` is unknown. Leading zeros are allowed, so
/// `top` is an upper bound on the true leading exponent rather than the
/// exponent itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentTail {
    top: i64,
    coeffs: Vec<Rational>,
}

impl LaurentTail {
    pub fn new(top: i64, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InsufficientPrecision("empty coefficient window".into()));
        }
        Ok(LaurentTail { top, coeffs })
    }

    /// The zero series known down to `bottom`.
    pub fn zero_to(bottom: i64) -> Self {
        LaurentTail { top: bottom, coeffs: vec![Rational::zero()] }
    }

    /// `c x^e` known down to `bottom` (which may lie above `e`).
    pub fn monomial(c: Rational, e: i64, bottom: i64) -> Self {
        if e < bottom {
            return Self::zero_to(bottom);
        }
        let mut coeffs = vec![Rational::zero(); (e - bottom + 1) as usize];
        coeffs[0] = c;
        LaurentTail { top: e, coeffs }
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Lowest exponent whose coefficient is known.
    pub fn low(&self) -> i64 {
        self.top - self.coeffs.len() as i64 + 1
    }

    /// Coefficient of `x^e`; `None` below the known window.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        if e > self.top {
            Some(Rational::zero())
        } else if e < self.low() {
            None
        } else {
            Some(self.coeffs[(self.top - e) as usize].clone())
        }
    }

    /// Polynomial expanded with its leading exponent on top, known down to `bottom`.
    pub fn of_poly(p: &UniPoly, bottom: i64) -> Self {
        match p.degree() {
            None => Self::zero_to(bottom),
            Some(d) if (d as i64) < bottom => Self::zero_to(bottom),
            Some(d) => {
                let top = d as i64;
                let coeffs = (bottom..=top)
                    .rev()
                    .map(|e| if e >= 0 { p.coeff(e as usize) } else { Rational::zero() })
                    .collect();
                LaurentTail { top, coeffs }
            }
        }
    }

    /// Polynomial with the default window of [`DEFAULT_PRECISION`] terms.
    pub fn of_poly_default(p: &UniPoly) -> Self {
        let top = p.degree().map_or(0, |d| d as i64);
        Self::of_poly(p, top - DEFAULT_PRECISION as i64 + 1)
    }

    /// Expansion of a rational function at infinity, known down to `bottom`.
    pub fn from_ratfunc(f: &RationalFunction, bottom: i64) -> Self {
        let (Some(n), Some(d)) = (f.numer().degree(), f.denom().degree()) else {
            return Self::zero_to(bottom);
        };
        let top = n as i64 - d as i64;
        if top < bottom {
            return Self::zero_to(bottom);
        }
        // remainder indexed by exponent - bottom
        let lo = bottom.min(0);
        let mut rem = vec![Rational::zero(); (n as i64 - lo + 1) as usize];
        for (i, c) in f.numer().coeffs().iter().enumerate() {
            rem[(i as i64 - lo) as usize] = c.clone();
        }
        let den = f.denom().coeffs();
        let lead = &den[d];
        let mut coeffs = Vec::with_capacity((top - bottom + 1) as usize);
        for e in (bottom..=top).rev() {
            let q = &rem[(e + d as i64 - lo) as usize] / lead;
            if !q.is_zero() {
                for (i, c) in den.iter().enumerate() {
                    let idx = e + i as i64 - lo;
                    if idx >= 0 {
                        rem[idx as usize] -= &q * c;
                    }
                }
            }
            coeffs.push(q);
        }
        LaurentTail { top, coeffs }
    }

    pub fn is_zero_window(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drop everything below `bottom`.
    pub fn truncate(&self, bottom: i64) -> Result<Self> {
        if bottom < self.low() {
            return Err(Error::InsufficientPrecision(format!(
                "need x^{bottom} but only known down to x^{}",
                self.low()
            )));
        }
        if bottom > self.top {
            return Ok(Self::zero_to(bottom));
        }
        let keep = (self.top - bottom + 1) as usize;
        Ok(LaurentTail { top: self.top, coeffs: self.coeffs[..keep].to_vec() })
    }

    /// Treats the next `k` unknown coefficients as zero.
    pub(crate) fn pad_below(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(coeffs.len() + k, Rational::zero());
        LaurentTail { top: self.top, coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentTail { top: self.top, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        LaurentTail { top: self.top, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift_exp(&self, k: i64) -> Self {
        LaurentTail { top: self.top + k, coeffs: self.coeffs.clone() }
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        let low = self.low().max(other.low());
        let top = self.top.max(other.top);
        let coeffs = (low..=top)
            .rev()
            .map(|e| {
                let a = self.coeff(e).unwrap();
                let b = other.coeff(e).unwrap();
                if sign > 0 {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        LaurentTail { top, coeffs }
    }

    /// Sum; known down to the higher of the two lows.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    /// Product; the known window is `min` of the two precisions.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let mut coeffs = vec![Rational::zero(); prec];
        for (i, a) in self.coeffs.iter().take(prec).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(prec - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentTail { top: self.top + other.top, coeffs }
    }

    /// Remove known leading zeros; errors if the window is all zero.
    pub fn normalize_top(&self) -> Result<Self> {
        let skip = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InsufficientPrecision("leading coefficient unknown".into()))?;
        Ok(LaurentTail { top: self.top - skip as i64, coeffs: self.coeffs[skip..].to_vec() })
    }

    /// Multiplicative inverse by power-series inversion.
    pub fn invert(&self) -> Result<Self> {
        let a = self.normalize_top()?;
        let n = a.coeffs.len();
        let inv0 = a.coeffs[0].recip();
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        b.push(inv0.clone());
        for k in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &a.coeffs[i] * &b[k - i];
            }
            b.push(-acc * &inv0);
        }
        Ok(LaurentTail { top: -a.top, coeffs: b })
    }

    /// Inverse of a series whose leading term is `x`, such as `x + c`.
    ///
    /// This is [`invert`](Self::invert) with the precondition checked.
    pub fn invert_monic_shifted(&self) -> Result<Self> {
        let a = self.normalize_top()?;
        if !a.coeffs[0].is_one() {
            return Err(Error::InvalidArgument("leading coefficient must be 1".into()));
        }
        a.invert()
    }

    /// `d/dx`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * int(self.top - i as i64))
            .collect();
        LaurentTail { top: self.top - 1, coeffs }
    }

    /// `f(c x + a)`, re-expanded at infinity; the known window is unchanged.
    pub fn compose_affine(&self, c: &Rational, a: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidArgument("compose_affine needs c != 0".into()));
        }
        let low = self.low();
        let ratio = a / c;
        let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
        for (i, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let e = self.top - i as i64;
            let head = f * pow_int(c, e);
            let mut rpow = Rational::one();
            for m in 0..=(e - low) {
                let t = &head * binomial(e, m) * &rpow;
                coeffs[i + m as usize] += t;
                rpow *= &ratio;
            }
        }
        Ok(LaurentTail { top: self.top, coeffs })
    }

    /// Whether both series agree on every exponent in `[bottom, top]`.
    pub fn agrees_down_to(&self, other: &Self, bottom: i64) -> Result<bool> {
        let top = self.top.max(other.top);
        for e in (bottom..=top).rev() {
            let (Some(a), Some(b)) = (self.coeff(e), other.coeff(e)) else {
                return Err(Error::InsufficientPrecision(format!("x^{e} not known")));
            };
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First exponent in `[bottom, top]` where the series differ.
    pub fn first_mismatch(&self, other: &Self, bottom: i64) -> Option<(i64, Rational, Rational)> {
        let top = self.top.max(other.top);
        (bottom..=top).rev().find_map(|e| {
            let a = self.coeff(e)?;
            let b = other.coeff(e)?;
            (a != b).then_some((e, a, b))
        })
    }

    pub fn to_text(&self, var: &str) -> String {
        let terms: Vec<(Rational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let e = self.top - i as i64;
                let mono = match e {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{e}"),
                };
                (c.clone(), mono)
            })
            .collect();
        let body = join_terms(&terms);
        format!("{body} + O({var}^{})", self.low() - 1)
    }
}

/// `c^e` for any integer `e` (c nonzero when e < 0).
pub(crate) fn pow_int(c: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= c;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl fmt::Display for LaurentTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}
