//! Generating functions of `e_k`, `e*_k`, `h_k`, `h*_k` written in the basis
//! `p_n(u)` or `p*_n(u)`.

use num_traits::{One, Zero};

use super::series::{h_on_ray, linear_combination, p_on_line};
use super::{check_poly, check_series, names_with_u, points_text, sample_points, tag, window, Bank, Item, Params};
use crate::error::Result;
use crate::exact::{frac, int, sign, LaurentTail, MultiPoly, Rational, RationalFunction, UniPoly};
use crate::report::VerificationReport;
use crate::schur::SchurContext;

/// `(u - x_1) ... (u - x_N) = sum_l (-1)^l e_l(x) p_{N-l}(u)`, or with
/// `e*` and `p*` when `star` is set.
pub fn genfn_e(ctx: &SchurContext, star: bool) -> VerificationReport {
    let n = ctx.nvars();
    let id = if star { "genfn-e-2" } else { "genfn-e-1" };
    let mut r = VerificationReport::new(id).param("op", ctx.seq().op()).param("N", n);
    let res = (|| {
        let u = MultiPoly::var(n + 1, n);
        let lhs = (0..n).fold(MultiPoly::one(n + 1), |acc, i| &acc * &(&u - &MultiPoly::var(n + 1, i)));
        let mut rhs = MultiPoly::zero(n + 1);
        for l in 0..=n {
            let p = if star { ctx.seq().conj_poly(n - l)? } else { ctx.seq().basic_poly(n - l)? };
            let term = &ctx.e(l as i64, star)?.extend_vars(1) * &MultiPoly::from_uni(&p, n + 1, n);
            rhs = &rhs + &term.scale(&sign(l as i64));
        }
        Ok::<_, crate::Error>((lhs, rhs))
    })();
    match res {
        Ok((lhs, rhs)) => check_poly(&mut r, &lhs, &rhs, &names_with_u(n), "symbolic"),
        Err(e) => r.record_error(&e),
    }
    r
}

fn reciprocal_product(c: &[Rational], a: &[Rational]) -> Result<RationalFunction> {
    let den = c
        .iter()
        .zip(a)
        .fold(UniPoly::one(), |acc, (ci, ai)| &acc * &UniPoly::from_coeffs(vec![ai.clone(), ci.clone()]));
    RationalFunction::new(UniPoly::one(), den)
}

/// `1/((u + x_1) ... (u + x_N)) = sum_l (-1)^l h_l(x) p*_{-N-l}(u)` in `u` at
/// fixed `x`; the `star` form swaps `h` for `h*` and `p*` for `p`.
pub fn genfn_h_u_sides(ctx: &SchurContext, star: bool, x: &[Rational], terms: usize) -> Result<(LaurentTail, LaurentTail)> {
    let ni = ctx.nvars() as i64;
    let bottom = -ni - terms as i64 + 1;
    let ones = vec![Rational::one(); x.len()];
    let lhs = LaurentTail::from_ratfunc(&reciprocal_product(&ones, x)?, bottom);
    let mut parts = Vec::with_capacity(terms);
    for l in 0..terms as i64 {
        let h = ctx.h_at(l, star, x)?;
        let p = p_on_line(ctx.seq(), -ni - l, !star, &int(1), &Rational::zero(), bottom)?;
        parts.push((sign(l) * h, p));
    }
    Ok((lhs, linear_combination(parts, bottom)?))
}

/// `1/((u + x_1) ... (u + x_N)) = (-1)^(N-1) sum_l (-1)^l h_{-N-l}(x) p*_l(u)`
/// along `x = t c` at fixed `u`.
pub fn genfn_h_x_sides(
    ctx: &SchurContext,
    star: bool,
    c: &[Rational],
    u: &Rational,
    terms: usize,
) -> Result<(LaurentTail, LaurentTail)> {
    let ni = ctx.nvars() as i64;
    let bottom = -ni - terms as i64 + 1;
    let offsets = vec![u.clone(); c.len()];
    let lhs = LaurentTail::from_ratfunc(&reciprocal_product(c, &offsets)?, bottom);
    let zero = Rational::zero();
    let mut parts = Vec::with_capacity(terms);
    for l in 0..terms as i64 {
        let p = if star { ctx.seq().basic_poly(l as usize)? } else { ctx.seq().conj_poly(l as usize)? };
        let h = h_on_ray(ctx.seq(), -ni - l, star, c, &zero, bottom)?;
        parts.push((sign(ni - 1 + l) * p.eval(u), h));
    }
    Ok((lhs, linear_combination(parts, bottom)?))
}

pub fn genfn_h(ctx: &SchurContext, star: bool, in_x: bool, terms: usize) -> VerificationReport {
    let ni = ctx.nvars() as i64;
    let id = match (in_x, star) {
        (false, false) => "genfn-h-u-1",
        (false, true) => "genfn-h-u-2",
        (true, false) => "genfn-h-x-1",
        (true, true) => "genfn-h-x-2",
    };
    let mut r = VerificationReport::new(id)
        .param("op", ctx.seq().op())
        .param("N", ni)
        .with_window(window(terms, -ni, format!("l<={}", terms - 1)));
    let u = frac(-3, 4);
    for pts in sample_points(ctx.nvars()).into_iter().take(3) {
        let res = if in_x { genfn_h_x_sides(ctx, star, &pts, &u, terms) } else { genfn_h_u_sides(ctx, star, &pts, terms) };
        let at = if in_x { format!("c={} u={u}", points_text(&pts)) } else { format!("x={}", points_text(&pts)) };
        match res {
            Ok((lhs, rhs)) => check_series(&mut r, &lhs, &rhs, -ni - terms as i64 + 1, &at),
            Err(e) => r.record_error(&e),
        }
    }
    r
}

pub fn items(p: &Params, bank: &Bank) -> Vec<Item> {
    let mut out = Vec::new();
    let terms = p.window;
    for op in 0..bank.len() {
        for n in 1..=p.n_max {
            for star in [false, true] {
                let id = if star { "genfn-e-2" } else { "genfn-e-1" };
                out.push(Item::new(tag(id, bank, op, &format!("N={n}")), move |b: &Bank| genfn_e(&b.ctx(op, n), star)));
            }
        }
        for n in 1..=p.series_n_max {
            for in_x in [false, true] {
                for star in [false, true] {
                    let base = match (in_x, star) {
                        (false, false) => "genfn-h-u-1",
                        (false, true) => "genfn-h-u-2",
                        (true, false) => "genfn-h-x-1",
                        (true, true) => "genfn-h-x-2",
                    };
                    out.push(Item::new(tag(base, bank, op, &format!("N={n}")), move |b: &Bank| {
                        genfn_h(&b.ctx(op, n), star, in_x, terms)
                    }));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{BinomialSequence, DeltaOperator};
    use crate::verify::standard_operators;
    use std::sync::Arc;

    fn ctx(op: DeltaOperator, n: usize) -> SchurContext {
        SchurContext::new(Arc::new(BinomialSequence::with_window(op, 48)), n).unwrap()
    }

    #[test]
    fn single_variable_e() {
        for op in standard_operators() {
            let c = ctx(op, 1);
            assert!(genfn_e(&c, false).passed());
            assert!(genfn_e(&c, true).passed());
        }
    }

    #[test]
    fn forward_u_series_example() {
        // 1/((u+2)(u+5)) to 16 terms
        let c = ctx(DeltaOperator::forward(), 2);
        for star in [false, true] {
            let (lhs, rhs) = genfn_h_u_sides(&c, star, &[int(2), int(5)], 16).unwrap();
            assert_eq!(lhs.coeff(-2), Some(int(1)));
            assert_eq!(lhs.coeff(-3), Some(int(-7)));
            assert!(lhs.agrees_down_to(&rhs, -17).unwrap());
        }
    }

    #[test]
    fn central_x_series_example() {
        let c = ctx(DeltaOperator::central(), 2);
        for star in [false, true] {
            let (lhs, rhs) = genfn_h_x_sides(&c, star, &[frac(3, 2), frac(7, 3)], &frac(1, 2), 16).unwrap();
            assert!(lhs.agrees_down_to(&rhs, -17).unwrap());
        }
    }

    #[test]
    fn dropping_the_sign_breaks_the_x_series() {
        let c = ctx(DeltaOperator::forward(), 2);
        let (lhs, rhs) = genfn_h_x_sides(&c, false, &[int(1), int(3)], &int(1), 8).unwrap();
        assert!(lhs.agrees_down_to(&rhs, -9).unwrap());
        assert!(!lhs.agrees_down_to(&rhs.neg(), -9).unwrap());
    }

    #[test]
    fn all_operators_small() {
        for op in standard_operators() {
            for n in 1..=3 {
                let c = ctx(op.clone(), n);
                for in_x in [false, true] {
                    for star in [false, true] {
                        let r = genfn_h(&c, star, in_x, 10);
                        assert!(r.passed(), "{r}");
                    }
                }
            }
        }
    }
}
