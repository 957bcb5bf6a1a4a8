use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{binomial, int, is_negative, Rational, RingElem};
use crate::error::{Error, Result};

/// Dense univariate polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// Coefficients in ascending degree order; trailing zeros are stripped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::from_coeffs(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `f(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose_affine(&Rational::one(), a)
    }

    /// `f(c x + a)`.
    pub fn compose_affine(&self, c: &Rational, a: &Rational) -> Self {
        let lin = UniPoly::from_coeffs(vec![a.clone(), c.clone()]);
        let mut acc = Self::zero();
        for coef in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(coef.clone());
        }
        acc
    }

    /// Taylor coefficients of `f(x + a)` via the binomial theorem; used by tests
    /// as an independent route for `shift`.
    pub fn shift_binomial(&self, a: &Rational) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut apow = Rational::one();
            for k in (0..=i).rev() {
                out[k] += c * binomial(i as i64, (i - k) as i64) * &apow;
                apow *= a;
            }
        }
        Self::from_coeffs(out)
    }

    /// Long division; errors on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let lead = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i + j] -= t;
            }
            quot[i] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; `NonExactDivision` if a remainder appears.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::NonExactDivision(format!("remainder {r}")));
        }
        Ok(q)
    }

    pub fn make_monic(&self) -> UniPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading_coeff().recip();
        self.scale(&inv)
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.make_monic();
        let mut b = other.make_monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.make_monic();
        }
        a
    }

    /// Canonical text in the variable `var`, highest degree first.
    pub fn to_text(&self, var: &str) -> String {
        let terms: Vec<(Rational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{i}"),
                };
                (c.clone(), mono)
            })
            .collect();
        join_terms(&terms)
    }
}

/// Joins `(coefficient, monomial)` pairs as `a*m + b*n - c`.
pub(crate) fn join_terms(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, mono)) in terms.iter().enumerate() {
        let neg = is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl RingElem for UniPoly {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    fn poly_strategy() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec((-20i64..20, 1i64..5), 0..6).prop_map(|v| {
            UniPoly::from_coeffs(v.into_iter().map(|(n, d)| frac(n, d)).collect())
        })
    }

    #[test]
    fn text_form() {
        let p = UniPoly::from_coeffs(vec![int(0), frac(-1, 4), int(0), int(1)]);
        assert_eq!(p.to_string(), "x^3 - 1/4*x");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_ints(&[-1, -1]).to_string(), "-x - 1");
    }

    #[test]
    fn shift_and_division() {
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(&sq.shift(&int(1)) - &sq, UniPoly::from_ints(&[1, 2]));
        let (q, r) = UniPoly::from_ints(&[-1, 0, 1]).div_rem(&UniPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, UniPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert!(UniPoly::from_ints(&[1, 0, 1]).exact_div(&UniPoly::from_ints(&[-1, 1])).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let a = &UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[2, 3]);
        let b = &UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[5, 1]);
        assert_eq!(a.gcd(&b), UniPoly::from_ints(&[-1, 1]));
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn horner_shift_matches_binomial_shift(a in poly_strategy(), n in -6i64..6, d in 1i64..4) {
            let s = frac(n, d);
            prop_assert_eq!(a.shift(&s), a.shift_binomial(&s));
        }

        #[test]
        fn division_recovers_quotient(q in poly_strategy(), d in poly_strategy()) {
            prop_assume!(!d.is_zero());
            let num = &q * &d;
            prop_assert_eq!(num.exact_div(&d).unwrap(), q);
        }
    }
}
