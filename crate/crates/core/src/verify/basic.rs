//! Binomial type, the top `e` and bottom `h*` values, and the two relations
//! between `s` and `s*`.

use num_traits::{One, Zero};

use super::{check_poly, check_value, points_text, sample_points, tag, Bank, Item, Params};
use crate::exact::{default_names, MultiPoly, Rational};
use crate::partition::{enumerate_in_box, Partition};
use crate::report::VerificationReport;

pub fn items(p: &Params, bank: &Bank) -> Vec<Item> {
    let mut out = Vec::new();
    for op in 0..bank.len() {
        out.push(Item::new(tag("binomial-type", bank, op, ""), move |b: &Bank| b.seq(op).check_binomial_type(8)));
    }
    for op in 0..bank.len() {
        let n_max = p.n_max;
        out.push(Item::new(tag("product-e", bank, op, ""), move |b: &Bank| product_e(b, op, n_max)));
        if bank.seq(op).op().is_builtin() {
            out.push(Item::new(tag("reciprocal-hstar", bank, op, ""), move |b: &Bank| {
                reciprocal_hstar(b, op, n_max, true)
            }));
            if n_max >= 2 {
                out.push(Item::new(tag("reciprocal-hstar-unsigned", bank, op, ""), move |b: &Bank| {
                    reciprocal_hstar(b, op, n_max, false)
                }));
            }
        }
        for n in 1..=p.n_max {
            let size = p.box_size;
            out.push(Item::new(tag("row-lowering", bank, op, &format!("N={n}")), move |b: &Bank| {
                row_lowering(b, op, n, size)
            }));
            out.push(Item::new(tag("zero-variable", bank, op, &format!("N={n}")), move |b: &Bank| {
                zero_variable(b, op, n, size)
            }));
        }
    }
    out
}

fn product(n: usize) -> MultiPoly {
    (0..n).fold(MultiPoly::one(n), |acc, i| &acc * &MultiPoly::var(n, i))
}

/// `e_N(x) = x_1 ... x_N`.
pub fn product_e(bank: &Bank, op: usize, n_max: usize) -> VerificationReport {
    let mut r = VerificationReport::new("product-e").param("op", bank.seq(op).op()).param("N", format!("1..={n_max}"));
    for n in 1..=n_max {
        match bank.ctx(op, n).e(n as i64, false) {
            Ok(e) => check_poly(&mut r, &e, &product(n), &default_names(n), &format!("N={n}")),
            Err(err) => r.record_error(&err),
        }
    }
    r
}

/// `h*_{-N}(x) = (-1)^(N-1) / (x_1 ... x_N)` at five points per `N`. With
/// `signed = false` the sign is dropped, which is wrong for even `N`.
pub fn reciprocal_hstar(bank: &Bank, op: usize, n_max: usize, signed: bool) -> VerificationReport {
    let id = if signed { "reciprocal-hstar" } else { "reciprocal-hstar-unsigned" };
    let mut r = VerificationReport::new(id).param("op", bank.seq(op).op()).param("N", format!("1..={n_max}"));
    if !signed {
        r = r.expect_failure();
    }
    for n in 1..=n_max {
        let ctx = bank.ctx(op, n);
        for x in sample_points(n) {
            let prod: Rational = x.iter().product();
            let sign = if signed && n % 2 == 0 { -Rational::one() } else { Rational::one() };
            match ctx.h_at(-(n as i64), true, &x) {
                Ok(v) => check_value(&mut r, &v, &(sign / prod), &format!("N={n} x={}", points_text(&x))),
                Err(err) => r.record_error(&err),
            }
        }
    }
    r
}

/// `s_λ = s*_{λ - (1^N)} x_1 ... x_N` for `λ_N >= 1`.
pub fn row_lowering(bank: &Bank, op: usize, n: usize, size: usize) -> VerificationReport {
    let ctx = bank.ctx(op, n);
    let mut r = VerificationReport::new("row-lowering")
        .param("op", bank.seq(op).op())
        .param("N", n)
        .param("box", format!("{size}x{size}"));
    for lam in enumerate_in_box(n.min(size), size).into_iter().filter(|l| l.depth() == n) {
        let lowered = Partition::new(lam.parts().iter().map(|p| p - 1).collect()).expect("parts stay nonnegative");
        let res = ctx.schur(&lam, false).and_then(|s| Ok((s, ctx.schur(&lowered, true)?)));
        match res {
            Ok((s, lower)) => check_poly(&mut r, &s, &(&lower * &product(n)), &default_names(n), &format!("λ={lam}")),
            Err(err) => r.record_error(&err),
        }
    }
    r
}

/// `s*_λ(x_1..x_N) = s_λ(x_1..x_N, 0)`.
pub fn zero_variable(bank: &Bank, op: usize, n: usize, size: usize) -> VerificationReport {
    let ctx = bank.ctx(op, n);
    let wider = bank.ctx(op, n + 1);
    let mut r = VerificationReport::new("zero-variable")
        .param("op", bank.seq(op).op())
        .param("N", n)
        .param("box", format!("{size}x{size}"));
    for lam in enumerate_in_box(n.min(size), size) {
        let res = ctx.schur(&lam, true).and_then(|s| Ok((s, wider.schur(&lam, false)?)));
        match res {
            Ok((star, plain)) => {
                let restricted = plain.specialize(n, &Rational::zero());
                check_poly(&mut r, &star, &restricted, &default_names(n), &format!("λ={lam}"));
            }
            Err(err) => r.record_error(&err),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::standard_operators;

    #[test]
    fn unsigned_reciprocal_fails_only_for_even_n() {
        let bank = Bank::new(standard_operators(), 12);
        let fwd = bank.find("fwd").unwrap();
        assert!(reciprocal_hstar(&bank, fwd, 1, false).passed());
        let r = reciprocal_hstar(&bank, fwd, 2, false);
        assert!(!r.passed() && r.as_expected());
        assert!(r.witness.unwrap().starts_with("N=2"));
        assert!(reciprocal_hstar(&bank, fwd, 3, true).passed());
    }

    #[test]
    fn small_relations_hold() {
        let bank = Bank::new(standard_operators(), 12);
        for op in 0..bank.len() {
            assert!(product_e(&bank, op, 3).passed());
            assert!(row_lowering(&bank, op, 2, 2).passed());
            assert!(zero_variable(&bank, op, 2, 2).passed());
        }
    }
}
