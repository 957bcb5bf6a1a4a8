//! Shift expansions of `e_k`, `e*_k`, `h_k`, `h*_k` and the action of `Q` in
//! the shift variable.
//!
//! The conventions are `e_k(x;u) = e_k(x - u)` and `h_k(x;u) = h_k(x + u)`.
//! For `k >= 1 - N` every side is a polynomial and is compared exactly. For
//! `k <= -N` the sums are infinite: expansions whose terms fall in `u` are
//! compared as series in `u` at fixed `x`, and those whose terms fall in `x`
//! as series in `t` along the ray `x = t c` at fixed `u`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::series::{h_in_u, h_on_ray, linear_combination, p_on_line};
use super::{check_poly, check_series, names_with_u, points_text, sample_points, tag, window, Bank, Item, Params};
use crate::error::{Error, Result};
use crate::exact::{binomial, frac, int, LaurentTail, MultiPoly, Rational, UniPoly};
use crate::report::VerificationReport;
use crate::schur::{Family, SchurContext};

/// The shifted family `e_k(x - u)` or `h_k(x + u)` in `x_1..x_N, u`.
pub fn shifted(ctx: &SchurContext, fam: Family, k: i64) -> Result<MultiPoly> {
    let n = ctx.nvars();
    match fam {
        Family::E | Family::EStar => Ok(ctx.shift_vars(&ctx.e(k, fam.is_star())?, -1)),
        Family::H | Family::HStar if k <= -(n as i64) => Err(Error::NegativeRowIndex(k + n as i64 - 1)),
        Family::H | Family::HStar => Ok(ctx.shift_vars(&ctx.h(k, fam.is_star())?, 1)),
    }
}

/// Unshifted family value as a polynomial in `x_1..x_N`.
fn plain(ctx: &SchurContext, fam: Family, k: i64) -> Result<MultiPoly> {
    match fam {
        Family::E | Family::EStar => ctx.e(k, fam.is_star()),
        Family::H | Family::HStar => ctx.h(k, fam.is_star()),
    }
}

/// Shape of the binomial coefficient in a shift expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficient {
    /// `C(-N+k-1, k-l)`, with `p_{k-l}(u)`.
    ENegative,
    /// `C(N+k-1, k-l)`, with `p_{k-l}(u)`.
    HLower,
    /// `C(N+k-1, N+l-1)`, with `p_{k-l}(u)`.
    HUpper,
    /// `C(N+k-1, l)`, with `h_{k-l}(x)` and `p_l(u)`.
    HOuter,
}

impl Coefficient {
    fn value(self, n: i64, k: i64, l: i64) -> Rational {
        match self {
            Coefficient::ENegative => binomial(-n + k - 1, k - l),
            Coefficient::HLower => binomial(n + k - 1, k - l),
            Coefficient::HUpper => binomial(n + k - 1, n + l - 1),
            Coefficient::HOuter => binomial(n + k - 1, l),
        }
    }

    /// Indices of the `x`-family and of `p` in the `l`-th term.
    fn indices(self, k: i64, l: i64) -> (i64, i64) {
        match self {
            Coefficient::HOuter => (k - l, l),
            _ => (l, k - l),
        }
    }
}

/// One displayed expansion: `lhs(x;u) = sum_l coeff * rhs_x(x) * p_?(u)`.
#[derive(Clone, Copy, Debug)]
pub struct Line {
    pub id: &'static str,
    pub lhs: Family,
    pub rhs: Family,
    pub p_star: bool,
    pub coeff: Coefficient,
    /// The displayed relation is claimed not to hold in general.
    pub non_identity: bool,
}

const fn line(id: &'static str, lhs: Family, rhs: Family, p_star: bool, coeff: Coefficient) -> Line {
    Line { id, lhs, rhs, p_star, coeff, non_identity: false }
}

pub const E_LINES: [Line; 3] = [
    line("e-shift-1", Family::E, Family::E, false, Coefficient::ENegative),
    line("e-shift-2", Family::E, Family::EStar, true, Coefficient::ENegative),
    line("e-shift-3", Family::EStar, Family::EStar, false, Coefficient::ENegative),
];

pub const H_LINES: [Line; 3] = [
    line("h-shift-1", Family::H, Family::H, false, Coefficient::HLower),
    line("h-shift-2", Family::HStar, Family::HStar, false, Coefficient::HLower),
    line("h-shift-3", Family::HStar, Family::H, true, Coefficient::HLower),
];

pub const NON_IDENTITIES: [Line; 2] = [
    Line { non_identity: true, ..line("e-shift-false", Family::EStar, Family::E, true, Coefficient::ENegative) },
    Line { non_identity: true, ..line("h-shift-false", Family::H, Family::HStar, true, Coefficient::HLower) },
];

pub const U_SERIES_LINES: [Line; 3] = [
    line("h-shift-u-series-1", Family::H, Family::H, false, Coefficient::HUpper),
    line("h-shift-u-series-2", Family::HStar, Family::HStar, false, Coefficient::HUpper),
    line("h-shift-u-series-3", Family::HStar, Family::H, true, Coefficient::HUpper),
];

pub const X_SERIES_LINES: [Line; 3] = [
    line("h-shift-x-series-1", Family::H, Family::H, false, Coefficient::HOuter),
    line("h-shift-x-series-2", Family::HStar, Family::HStar, false, Coefficient::HOuter),
    line("h-shift-x-series-3", Family::HStar, Family::H, true, Coefficient::HOuter),
];

fn p_poly(ctx: &SchurContext, m: i64, star: bool) -> Result<UniPoly> {
    if m < 0 {
        return Err(Error::NegativeRowIndex(m));
    }
    if star {
        ctx.seq().conj_poly(m as usize)
    } else {
        ctx.seq().basic_poly(m as usize)
    }
}

/// Both sides of a line at a `k` in the polynomial regime.
pub fn symbolic_sides(ctx: &SchurContext, ln: &Line, k: i64) -> Result<(MultiPoly, MultiPoly)> {
    let n = ctx.nvars();
    let ni = n as i64;
    let lhs = shifted(ctx, ln.lhs, k)?;
    let mut rhs = MultiPoly::zero(n + 1);
    // every nonzero term has 0 <= l <= max(k, 0) + N
    for l in 0..=(k.max(0) + ni) {
        let c = ln.coeff.value(ni, k, l);
        if c.is_zero() {
            continue;
        }
        let (xi, pi) = ln.coeff.indices(k, l);
        let fx = plain(ctx, ln.rhs, xi)?;
        if fx.is_zero() {
            continue;
        }
        let pu = MultiPoly::from_uni(&p_poly(ctx, pi, ln.p_star)?, n + 1, n);
        rhs = &rhs + &(&fx.extend_vars(1) * &pu).scale(&c);
    }
    Ok((lhs, rhs))
}

/// Polynomial-regime check of one line for `k` in `k_lo..=k_hi`.
pub fn symbolic_line(ctx: &SchurContext, ln: &Line, k_lo: i64, k_hi: i64) -> VerificationReport {
    let mut r = VerificationReport::new(ln.id).param("op", ctx.seq().op()).param("N", ctx.nvars()).param("k", format!("{k_lo}..={k_hi}"));
    if ln.non_identity && ctx.seq().op().selector() != "d" {
        r = r.expect_failure();
    }
    for k in k_lo..=k_hi {
        match symbolic_sides(ctx, ln, k) {
            Ok((lhs, rhs)) => check_poly(&mut r, &lhs, &rhs, &names_with_u(ctx.nvars()), &format!("k={k}")),
            Err(e) => r.record_error(&e),
        }
    }
    r
}

fn family_at(ctx: &SchurContext, fam: Family, k: i64, x: &[Rational]) -> Result<Rational> {
    match fam {
        Family::E | Family::EStar => Ok(ctx.e(k, fam.is_star())?.eval(x)),
        Family::H | Family::HStar => ctx.h_at(k, fam.is_star(), x),
    }
}

/// Right-hand series pieces at one specialization, shared across `k`. Each
/// piece is kept down to `bottom`, which must lie below every window used.
pub struct Pieces {
    bottom: i64,
    memo: HashMap<(i64, bool), LaurentTail>,
}

impl Pieces {
    pub fn new(bottom: i64) -> Self {
        Pieces { bottom, memo: HashMap::new() }
    }

    fn get(&mut self, m: i64, star: bool, make: impl FnOnce(i64) -> Result<LaurentTail>) -> Result<LaurentTail> {
        if let Some(s) = self.memo.get(&(m, star)) {
            return Ok(s.clone());
        }
        let s = make(self.bottom)?;
        self.memo.insert((m, star), s.clone());
        Ok(s)
    }
}

/// Series check in `u` at fixed `x` for one `k <= -N`.
pub fn u_series_sides(
    ctx: &SchurContext,
    ln: &Line,
    k: i64,
    x: &[Rational],
    terms: usize,
    pieces: &mut Pieces,
) -> Result<(LaurentTail, LaurentTail)> {
    let seq = ctx.seq();
    let ni = ctx.nvars() as i64;
    let bottom = k - terms as i64 + 1;
    let lhs = h_in_u(seq, k, ln.lhs.is_star(), x, bottom)?;
    // the l-th term starts at u^{k-l}, so l < terms suffices
    let mut parts = Vec::with_capacity(terms);
    for l in 0..terms as i64 {
        let c = ln.coeff.value(ni, k, l);
        if c.is_zero() {
            continue;
        }
        let fx = family_at(ctx, ln.rhs, l, x)?;
        let p = pieces.get(k - l, ln.p_star, |b| p_on_line(seq, k - l, ln.p_star, &int(1), &Rational::zero(), b))?;
        parts.push((c * fx, p));
    }
    Ok((lhs, linear_combination(parts, bottom)?))
}

/// Series check in `t` along `x = t c` at fixed `u` for one `k <= -N`.
pub fn x_series_sides(
    ctx: &SchurContext,
    ln: &Line,
    k: i64,
    c: &[Rational],
    u: &Rational,
    terms: usize,
    pieces: &mut Pieces,
) -> Result<(LaurentTail, LaurentTail)> {
    let seq = ctx.seq();
    let ni = ctx.nvars() as i64;
    let bottom = k - terms as i64 + 1;
    let lhs = h_on_ray(seq, k, ln.lhs.is_star(), c, u, bottom)?;
    let zero = Rational::zero();
    // the l-th term starts at t^{k-l}
    let mut parts = Vec::with_capacity(terms);
    for l in 0..terms as i64 {
        let coeff = ln.coeff.value(ni, k, l);
        if coeff.is_zero() {
            continue;
        }
        let pu = p_poly(ctx, l, ln.p_star)?.eval(u);
        let h = pieces.get(k - l, ln.rhs.is_star(), |b| h_on_ray(seq, k - l, ln.rhs.is_star(), c, &zero, b))?;
        parts.push((coeff * pu, h));
    }
    Ok((lhs, linear_combination(parts, bottom)?))
}

/// Series checks for `k` in `k_lo..=-N` at three specializations.
pub fn series_line(ctx: &SchurContext, ln: &Line, k_lo: i64, terms: usize) -> VerificationReport {
    let ni = ctx.nvars() as i64;
    let in_x = ln.coeff == Coefficient::HOuter;
    let mut r = VerificationReport::new(ln.id)
        .param("op", ctx.seq().op())
        .param("N", ni)
        .param("k", format!("{k_lo}..={}", -ni))
        .with_window(window(terms, -ni, format!("l<={}", terms - 1)));
    let u = frac(2, 3);
    for pts in sample_points(ctx.nvars()).into_iter().take(3) {
        let mut pieces = Pieces::new(k_lo - terms as i64 + 1);
        for k in k_lo..=-ni {
            let res = if in_x {
                x_series_sides(ctx, ln, k, &pts, &u, terms, &mut pieces)
            } else {
                u_series_sides(ctx, ln, k, &pts, terms, &mut pieces)
            };
            let at = if in_x { format!("k={k} c={} u={u}", points_text(&pts)) } else { format!("k={k} x={}", points_text(&pts)) };
            match res {
                Ok((lhs, rhs)) => check_series(&mut r, &lhs, &rhs, k - terms as i64 + 1, &at),
                Err(e) => r.record_error(&e),
            }
        }
    }
    r
}

/// `Q_u f_k(x;u) = c f_{k-1}(x;u)` with `c = N+k-1` for `h`, `-N+k-1` for `e`.
pub fn delta_lowering(ctx: &SchurContext, fam: Family, k_lo: i64, k_hi: i64, terms: usize) -> VerificationReport {
    let id = match fam {
        Family::E => "delta-lowering-e",
        Family::EStar => "delta-lowering-estar",
        Family::H => "delta-lowering-h",
        Family::HStar => "delta-lowering-hstar",
    };
    let n = ctx.nvars();
    let ni = n as i64;
    let op = ctx.seq().op();
    let is_h = matches!(fam, Family::H | Family::HStar);
    let lo = if is_h { k_lo } else { 0 };
    let mut r = VerificationReport::new(id).param("op", op).param("N", n).param("k", format!("{lo}..={k_hi}"));
    if is_h && lo <= -ni {
        r = r.with_window(window(terms, -ni - 1, "exact shifted series"));
    }
    for k in lo..=k_hi {
        let c = if is_h { int(ni + k - 1) } else { int(-ni + k - 1) };
        if k > -ni {
            let res = (|| {
                let lhs = op.apply_multi(&shifted(ctx, fam, k)?, n)?;
                let rhs = if c.is_zero() { MultiPoly::zero(n + 1) } else { shifted(ctx, fam, k - 1)?.scale(&c) };
                Ok::<_, Error>((lhs, rhs))
            })();
            match res {
                Ok((lhs, rhs)) => check_poly(&mut r, &lhs, &rhs, &names_with_u(n), &format!("k={k}")),
                Err(e) => r.record_error(&e),
            }
            continue;
        }
        for x in sample_points(n) {
            let bottom = k - terms as i64;
            let res = (|| {
                let lhs = op.apply_laurent(&h_in_u(ctx.seq(), k, fam.is_star(), &x, bottom)?)?;
                let rhs = h_in_u(ctx.seq(), k - 1, fam.is_star(), &x, bottom)?.scale(&c);
                Ok::<_, Error>((lhs, rhs))
            })();
            match res {
                Ok((lhs, rhs)) => {
                    let cmp = bottom.max(lhs.low());
                    check_series(&mut r, &lhs, &rhs, cmp, &format!("k={k} x={}", points_text(&x)));
                }
                Err(e) => r.record_error(&e),
            }
        }
    }
    r
}

pub fn items(p: &Params, bank: &Bank) -> Vec<Item> {
    let mut out = Vec::new();
    let (k_max, k_below, terms) = (p.k_max, p.k_below, p.window);
    let fwd = bank.find("fwd");
    let d = bank.find("d");
    for op in 0..bank.len() {
        for n in 1..=p.series_n_max {
            let ni = n as i64;
            let extra = format!("N={n}");
            for ln in E_LINES.iter().chain(H_LINES.iter()) {
                let ln = *ln;
                out.push(Item::new(tag(ln.id, bank, op, &extra), move |b: &Bank| symbolic_line(&b.ctx(op, n), &ln, 0, k_max)));
            }
            if Some(op) == fwd || Some(op) == d {
                for ln in NON_IDENTITIES {
                    out.push(Item::new(tag(ln.id, bank, op, &extra), move |b: &Bank| {
                        symbolic_line(&b.ctx(op, n), &ln, 0, k_max)
                    }));
                }
            }
            for ln in U_SERIES_LINES.iter().chain(X_SERIES_LINES.iter()) {
                let ln = *ln;
                out.push(Item::new(tag(ln.id, bank, op, &format!("{extra},poly")), move |b: &Bank| {
                    symbolic_line(&b.ctx(op, n), &ln, 1 - ni, k_max)
                }));
                out.push(Item::new(tag(ln.id, bank, op, &extra), move |b: &Bank| {
                    series_line(&b.ctx(op, n), &ln, -ni - k_below, terms)
                }));
            }
            for fam in [Family::H, Family::HStar, Family::E, Family::EStar] {
                let base = match fam {
                    Family::E => "delta-lowering-e",
                    Family::EStar => "delta-lowering-estar",
                    Family::H => "delta-lowering-h",
                    Family::HStar => "delta-lowering-hstar",
                };
                out.push(Item::new(tag(base, bank, op, &extra), move |b: &Bank| {
                    delta_lowering(&b.ctx(op, n), fam, -ni - k_below, k_max, terms)
                }));
            }
        }
    }
    out
}

/// Convenience for callers holding only a sequence.
pub fn context(seq: Arc<crate::delta::BinomialSequence>, n: usize) -> SchurContext {
    SchurContext::new(seq, n).expect("n >= 1")
}
