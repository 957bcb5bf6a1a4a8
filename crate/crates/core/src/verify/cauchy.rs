//! Dual Cauchy and Cauchy identities, and the two determinant lemmas behind
//! them.
//!
//! The Cauchy identity is an expansion in `y^{-1}`. Both sides are multiplied
//! by `Δ(y)`, which turns each side into an alternant `det(f_i(y_j))` of
//! univariate series. The coefficient of `y_1^{e_1} ... y_N^{e_N}` in such an
//! alternant is `det(coeff_{e_j} f_i)`, so it suffices to compare these small
//! determinants for strictly decreasing exponent tuples in the window.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{check_poly, check_value, points_text, sample_points, tag, window, Bank, Item, Params};
use crate::error::{Error, Result};
use crate::exact::{det_rational, int, sign, vandermonde, LaurentTail, MultiPoly, Rational, RationalFunction, UniPoly};
use crate::partition::{enumerate_in_box, Partition};
use crate::report::VerificationReport;
use crate::schur::SchurContext;

/// Map from `λ` in the `M x N` box to `λ†`; injectable for mutation tests.
pub type DaggerFn = dyn Fn(&Partition, usize, usize) -> Result<Partition> + Sync;

fn xy_names(m: usize, n: usize) -> Vec<String> {
    (1..=m).map(|i| format!("x{i}")).chain((1..=n).map(|j| format!("y{j}"))).collect()
}

/// `prod_{i,j} (y_j - x_i) = sum_λ (-1)^{|λ|} s_λ(x) s_{λ†}(y)` in `M + N`
/// variables, with `s*` on both sides when `star` is set.
pub fn cauchy_dual_with(ctx_x: &SchurContext, ctx_y: &SchurContext, star: bool, dagger: &DaggerFn) -> VerificationReport {
    let (m, n) = (ctx_x.nvars(), ctx_y.nvars());
    let id = if star { "cauchy-dual-2" } else { "cauchy-dual-1" };
    let mut r = VerificationReport::new(id).param("op", ctx_x.seq().op()).param("M", m).param("N", n);
    let total = m + n;
    let xmap: Vec<usize> = (0..m).collect();
    let ymap: Vec<usize> = (m..total).collect();
    let res = (|| {
        let mut lhs = MultiPoly::one(total);
        for i in 0..m {
            for j in 0..n {
                lhs = &lhs * &(&MultiPoly::var(total, m + j) - &MultiPoly::var(total, i));
            }
        }
        let mut rhs = MultiPoly::zero(total);
        for lam in enumerate_in_box(m, n) {
            let dual = dagger(&lam, m, n)?;
            let sx = ctx_x.schur(&lam, star)?.embed(total, &xmap);
            let sy = ctx_y.schur(&dual, star)?.embed(total, &ymap);
            rhs = &rhs + &(&sx * &sy).scale(&sign(lam.size()));
        }
        Ok::<_, Error>((lhs, rhs))
    })();
    match res {
        Ok((lhs, rhs)) => check_poly(&mut r, &lhs, &rhs, &xy_names(m, n), "symbolic"),
        Err(e) => r.record_error(&e),
    }
    r
}

pub fn cauchy_dual(ctx_x: &SchurContext, ctx_y: &SchurContext, star: bool) -> VerificationReport {
    cauchy_dual_with(ctx_x, ctx_y, star, &|lam: &Partition, m, n| lam.dagger(m, n))
}

fn reciprocal_product(x: &[Rational]) -> Result<RationalFunction> {
    let den = x.iter().fold(UniPoly::one(), |acc, xi| &acc * &UniPoly::from_coeffs(vec![xi.clone(), Rational::one()]));
    RationalFunction::new(UniPoly::one(), den)
}

/// Strictly decreasing tuples in `bottom..=top` of length `n`.
fn decreasing_tuples(n: usize, top: i64, bottom: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, hi: i64, bottom: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let need = (n - cur.len() - 1) as i64;
        for e in (bottom + need..=hi).rev() {
            cur.push(e);
            rec(n, e - 1, bottom, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, top, bottom, &mut Vec::new(), &mut out);
    out
}

fn coeff_det(rows: &[&LaurentTail], exps: &[i64]) -> Result<Rational> {
    let mut matrix = Vec::with_capacity(rows.len());
    for row in rows {
        let mut line = Vec::with_capacity(exps.len());
        for &e in exps {
            line.push(row.coeff(e).ok_or_else(|| Error::InsufficientPrecision(format!("coefficient {e} below {}", row.low())))?);
        }
        matrix.push(line);
    }
    Ok(det_rational(&matrix))
}

/// `prod_{i,j} 1/(y_j + x_i) = sum_λ (-1)^{|λ|} s*_λ(x) s_{λ‡}(y)` (line 1)
/// or with `s` and `s*` exchanged (line 2), at rational `x`, compared in
/// `y^{-1}` after multiplying by `Δ(y)`. Returns the number of coefficients
/// compared, or the first mismatch.
pub fn cauchy_series(
    ctx_x: &SchurContext,
    ctx_y: &SchurContext,
    line: u8,
    x: &[Rational],
    terms: usize,
) -> Result<std::result::Result<usize, String>> {
    let (m, n) = (ctx_x.nvars(), ctx_y.nvars());
    let (mi, ni) = (m as i64, n as i64);
    let top = ni - 1 - mi;
    let bottom = top - terms as i64 + 1;
    let g = LaurentTail::from_ratfunc(&reciprocal_product(x)?, bottom - ni);
    let lhs_rows: Vec<LaurentTail> = (0..n).map(|i| g.shift_exp(ni - 1 - i as i64)).collect();
    let x_star = line == 1;
    let y_star = !x_star;

    // s_{λ‡}(y) rows are p_{l}(y) with l = -M - λ_{N-i} + N - 1 - i; a row
    // whose top lies below the window contributes nothing.
    let mut row_cache: HashMap<i64, LaurentTail> = HashMap::new();
    let mut terms_rhs: Vec<(Rational, Vec<i64>)> = Vec::new();
    let depth = m.min(n);
    let size_bound = ni * (terms as i64 - ni);
    for lam in enumerate_in_box(depth, size_bound.max(0) as usize) {
        if lam.size() > size_bound {
            continue;
        }
        let dual = lam.ddagger(m, n)?;
        let rows = ctx_y.rows(&dual)?;
        if rows.iter().any(|&l| l < bottom) {
            continue;
        }
        for &l in &rows {
            if let std::collections::hash_map::Entry::Vacant(v) = row_cache.entry(l) {
                v.insert(ctx_y.seq().term(l, y_star)?.to_laurent(bottom)?);
            }
        }
        let sx = ctx_x.schur_at(&lam, x_star, x)?;
        terms_rhs.push((sign(lam.size()) * sx, rows));
    }

    let lhs_refs: Vec<&LaurentTail> = lhs_rows.iter().collect();
    let mut compared = 0;
    for exps in decreasing_tuples(n, top, bottom) {
        let lhs = coeff_det(&lhs_refs, &exps)?;
        let mut rhs = Rational::zero();
        for (c, rows) in &terms_rhs {
            let refs: Vec<&LaurentTail> = rows.iter().map(|l| &row_cache[l]).collect();
            rhs += c * coeff_det(&refs, &exps)?;
        }
        if lhs != rhs {
            let mono: Vec<String> = exps.iter().enumerate().map(|(j, e)| format!("y{}^{e}", j + 1)).collect();
            return Ok(Err(format!("coefficient of Δ(y)·[{}] is {lhs} vs {rhs}", mono.join("*"))));
        }
        compared += 1;
    }
    Ok(Ok(compared))
}

pub fn cauchy(ctx_x: &SchurContext, ctx_y: &SchurContext, line: u8, terms: usize) -> VerificationReport {
    let (m, n) = (ctx_x.nvars(), ctx_y.nvars());
    let top = n as i64 - 1 - m as i64;
    let mut r = VerificationReport::new(format!("cauchy-{line}"))
        .param("op", ctx_x.seq().op())
        .param("M", m)
        .param("N", n)
        .with_window(window(terms, top, format!("|λ|<={}", n as i64 * (terms as i64 - n as i64))));
    for x in sample_points(m).into_iter().take(2) {
        match cauchy_series(ctx_x, ctx_y, line, &x, terms) {
            Ok(Ok(count)) => {
                for _ in 0..count {
                    r.record(true, String::new);
                }
            }
            Ok(Err(w)) => r.record(false, || format!("x={}: {w}", points_text(&x))),
            Err(e) => r.record_error(&e),
        }
    }
    r
}

/// Points for `y` that keep every `x_i + y_j` away from zero.
fn y_points(n: usize, shift: usize) -> Vec<Rational> {
    let pools = sample_points(n);
    pools[(shift + 1) % pools.len()].iter().map(|v| v + int(20)).collect()
}

fn cross_product(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().flat_map(|xi| y.iter().map(move |yj| xi + yj)).product()
}

/// `det(1/(x_i + y_j)) = Δ(x)Δ(y) / prod (x_i + y_j)` for `M = N`.
pub fn cauchy_det(n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("cauchy-det").param("N", n);
    for (k, x) in sample_points(n).into_iter().enumerate() {
        let y = y_points(n, k);
        let matrix: Vec<Vec<Rational>> = x.iter().map(|xi| y.iter().map(|yj| (xi + yj).recip()).collect()).collect();
        let rhs = vandermonde(&x) * vandermonde(&y) / cross_product(&x, &y);
        check_value(&mut r, &det_rational(&matrix), &rhs, &format!("x={} y={}", points_text(&x), points_text(&y)));
    }
    r
}

/// The same determinant with `N - M` rows `p*_{N-M-1}(y_j), ..., p*_0(y_j)`
/// on top, for `N >= M`.
pub fn cauchy_det_general(ctx_y: &SchurContext, m: usize) -> VerificationReport {
    let n = ctx_y.nvars();
    let mut r = VerificationReport::new("cauchy-det-general").param("op", ctx_y.seq().op()).param("M", m).param("N", n);
    if m > n {
        r.record_error(&Error::InvalidArgument(format!("needs N >= M, got M={m} N={n}")));
        return r;
    }
    for (k, x) in sample_points(m).into_iter().enumerate() {
        let y = y_points(n, k);
        let res = (|| {
            let mut matrix = Vec::with_capacity(n);
            for d in (0..n - m).rev() {
                let p = ctx_y.seq().conj_poly(d)?;
                matrix.push(y.iter().map(|yj| p.eval(yj)).collect::<Vec<_>>());
            }
            for xi in &x {
                matrix.push(y.iter().map(|yj| (xi + yj).recip()).collect());
            }
            Ok::<_, Error>(det_rational(&matrix))
        })();
        match res {
            Ok(lhs) => {
                let rhs = vandermonde(&x) * vandermonde(&y) / cross_product(&x, &y);
                check_value(&mut r, &lhs, &rhs, &format!("x={} y={}", points_text(&x), points_text(&y)));
            }
            Err(e) => r.record_error(&e),
        }
    }
    r
}

pub fn items(p: &Params, bank: &Bank) -> Vec<Item> {
    let mut out = Vec::new();
    let terms = p.window;
    for n in 1..=p.cauchy_max {
        out.push(Item::new(format!("cauchy-det[N={n}]"), move |_: &Bank| cauchy_det(n)));
    }
    for op in 0..bank.len() {
        for m in 1..=p.cauchy_max {
            for n in 1..=p.cauchy_max {
                let extra = format!("M={m},N={n}");
                for star in [false, true] {
                    let id = if star { "cauchy-dual-2" } else { "cauchy-dual-1" };
                    out.push(Item::new(tag(id, bank, op, &extra), move |b: &Bank| {
                        cauchy_dual(&b.ctx(op, m), &b.ctx(op, n), star)
                    }));
                }
                if n >= m {
                    out.push(Item::new(tag("cauchy-det-general", bank, op, &extra), move |b: &Bank| {
                        cauchy_det_general(&b.ctx(op, n), m)
                    }));
                }
            }
        }
        for m in 1..=p.cauchy_series_max {
            for n in 1..=p.cauchy_series_max {
                for line in [1u8, 2] {
                    out.push(Item::new(tag(&format!("cauchy-{line}"), bank, op, &format!("M={m},N={n}")), move |b: &Bank| {
                        cauchy(&b.ctx(op, m), &b.ctx(op, n), line, terms)
                    }));
                }
            }
        }
    }
    out
}
