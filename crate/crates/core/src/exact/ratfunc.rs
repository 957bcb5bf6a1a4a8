use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Reduced quotient of univariate polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lead = den.leading_coeff();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    /// `x^e` for any integer `e`.
    pub fn power_of_x(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(UniPoly::monomial(Rational::one(), e as usize))
        } else {
            RationalFunction {
                num: UniPoly::one(),
                den: UniPoly::monomial(Rational::one(), (-e) as usize),
            }
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Degree of the leading term in the `x -> infinity` expansion.
    pub fn top_degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Pole("reciprocal of zero".into()));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// `f(c x + a)`.
    pub fn compose_affine(&self, c: &Rational, a: &Rational) -> Self {
        Self::reduce(self.num.compose_affine(c, a), self.den.compose_affine(c, a))
    }

    /// `f(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose_affine(&Rational::one(), a)
    }

    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(top, &self.den * &self.den)
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.num.to_text(var);
        }
        let terms = |p: &UniPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let den = self.den.to_text(var);
        let den = if terms(&self.den) > 1 { format!("({den})") } else { den };
        let num = match (terms(&self.num), self.num.degree()) {
            (1, Some(0)) if !self.num.leading_coeff().is_integer() => format!("({})", self.num.leading_coeff()),
            (1, _) => self.num.to_text(var),
            _ => format!("({})", self.num.to_text(var)),
        };
        format!("{num}/{den}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl From<UniPoly> for RationalFunction {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    fn inv_x() -> RationalFunction {
        RationalFunction::power_of_x(-1)
    }

    #[test]
    fn display_forms() {
        assert_eq!(inv_x().to_string(), "1/x");
        let f = &inv_x().shift(&int(1)) - &inv_x();
        assert_eq!(f.to_string(), "-1/(x^2 + x)");
        assert_eq!(RationalFunction::power_of_x(-3).to_string(), "1/x^3");
        assert_eq!(inv_x().scale(&frac(1, 2)).to_string(), "(1/2)/x");
        let g = RationalFunction::new(UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(g.to_string(), "(x + 1)/x^2");
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let num = &UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[2, 1]);
        let den = (&UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[0, 3])).scale(&int(2));
        let r = RationalFunction::new(num, den).unwrap();
        assert_eq!(r.denom(), &UniPoly::from_ints(&[0, 1]));
        assert_eq!(r.numer(), &UniPoly::from_coeffs(vec![frac(1, 3), frac(1, 6)]));
    }

    #[test]
    fn eval_and_pole() {
        let f = inv_x();
        assert_eq!(f.eval(&int(4)).unwrap(), frac(1, 4));
        assert!(matches!(f.eval(&int(0)), Err(Error::Pole(_))));
        assert_eq!(f.derivative(), RationalFunction::power_of_x(-2).scale(&int(-1)));
    }
}
