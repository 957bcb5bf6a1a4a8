//! Expansion of `s_λ(x + u)` in the `s_μ(x)`, and the conjugation duality of
//! the normalized coefficients.

use num_traits::{One, Zero};

use super::{check_poly, names_with_u, tag, Bank, Item, Params};
use crate::delta::BinomialSequence;
use crate::exact::{det_rational, factorial, frac, int, sign, MultiPoly, Rational, UniPoly};
use crate::partition::{enumerate_in_box, subpartitions, Partition};
use crate::report::VerificationReport;
use crate::schur::{dhat, SchurContext};

/// Which of the three shift expansions to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `s_λ(x+u) = sum d_{λμ}(u) s_μ(x)`.
    Plain,
    /// `s*_λ(x+u) = sum d_{λμ}(u) s*_μ(x)`.
    Star,
    /// `s*_λ(x+u) = sum d*_{λμ}(u) s_μ(x)`.
    Mixed,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::Plain => "shift-expansion-s",
            Variant::Star => "shift-expansion-sstar",
            Variant::Mixed => "shift-expansion-mixed",
        }
    }
}

pub fn items(p: &Params, bank: &Bank) -> Vec<Item> {
    let mut out = Vec::new();
    let size = p.box_size;
    for op in 0..bank.len() {
        for n in 1..=p.expansion_n_max {
            for v in [Variant::Plain, Variant::Star, Variant::Mixed] {
                out.push(Item::new(tag(v.name(), bank, op, &format!("N={n}")), move |b: &Bank| {
                    let ctx = b.ctx(op, n);
                    shift_expansion_box(&ctx, size, v)
                }));
            }
        }
        out.push(Item::new(tag("dhat-conjugation", bank, op, ""), move |b: &Bank| dhat_conjugation(b.seq(op), size)));
        out.push(Item::new(tag("dhat-sequence-duality", bank, op, ""), move |b: &Bank| {
            dhat_sequence_duality(b.seq(op), size)
        }));
    }
    out.push(Item::new("sequence-duality[fixed]", move |_: &Bank| fixed_sequence_duality(size)));
    out
}

/// Both sides of one shift expansion as polynomials in `x_1..x_N, u`.
pub fn shift_expansion_sides(ctx: &SchurContext, lambda: &Partition, v: Variant) -> crate::Result<(MultiPoly, MultiPoly)> {
    let n = ctx.nvars();
    let star_lhs = v != Variant::Plain;
    let lhs = ctx.shift_vars(&ctx.schur(lambda, star_lhs)?, 1);
    let mut rhs = MultiPoly::zero(n + 1);
    // μ runs over μ ⊂ λ with μ_N >= 0; the binomial factors vanish below that
    for mu in subpartitions(lambda).into_iter().filter(|m| m.depth() <= n) {
        let d = ctx.d_coeff(lambda, &mu, false, v == Variant::Mixed)?;
        if d.is_zero() {
            continue;
        }
        let s = ctx.schur(&mu, v == Variant::Star)?.extend_vars(1);
        rhs = &rhs + &(&MultiPoly::from_uni(&d, n + 1, n) * &s);
    }
    Ok((lhs, rhs))
}

pub fn shift_expansion(ctx: &SchurContext, lambda: &Partition, v: Variant) -> VerificationReport {
    let mut r = VerificationReport::new(v.name()).param("op", ctx.seq().op()).param("N", ctx.nvars()).param("λ", lambda);
    record_expansion(&mut r, ctx, lambda, v);
    r
}

fn record_expansion(r: &mut VerificationReport, ctx: &SchurContext, lambda: &Partition, v: Variant) {
    match shift_expansion_sides(ctx, lambda, v) {
        Ok((lhs, rhs)) => check_poly(r, &lhs, &rhs, &names_with_u(ctx.nvars()), &format!("λ={lambda}")),
        Err(e) => r.record_error(&e),
    }
}

/// The expansion for every `λ` with at most `N` parts in the `size x size` box.
pub fn shift_expansion_box(ctx: &SchurContext, size: usize, v: Variant) -> VerificationReport {
    let n = ctx.nvars();
    let mut r = VerificationReport::new(v.name())
        .param("op", ctx.seq().op())
        .param("N", n)
        .param("box", format!("{size}x{size}"));
    for lambda in enumerate_in_box(n.min(size), size) {
        record_expansion(&mut r, ctx, &lambda, v);
    }
    r
}

/// `d̂_{λμ}(u) = (-1)^{|λ|-|μ|} d̂_{λ'μ'}(-u)` for all pairs in the box.
pub fn dhat_conjugation(seq: &BinomialSequence, size: usize) -> VerificationReport {
    let mut r = VerificationReport::new("dhat-conjugation").param("op", seq.op()).param("box", format!("{size}x{size}"));
    let all = enumerate_in_box(size, size);
    for lambda in &all {
        for mu in &all {
            let res = (|| {
                let left = dhat(seq, lambda, mu, false)?;
                let right = dhat(seq, &lambda.conjugate()?, &mu.conjugate()?, false)?;
                let right = right.compose_affine(&-Rational::one(), &Rational::zero()).scale(&sign(lambda.size() - mu.size()));
                Ok::<_, crate::Error>((left, right))
            })();
            match res {
                Ok((a, b)) => r.record(a == b, || format!("λ={lambda} μ={mu}: {} vs {}", a.to_text("u"), b.to_text("u"))),
                Err(e) => r.record_error(&e),
            }
        }
    }
    r
}

/// Solves `sum_k (-1)^k c_k c'_{n-k} = δ_{n,0}` for `c'` given `c_0 = 1`.
pub fn dual_sequence(c: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(c.len());
    for n in 0..c.len() {
        if n == 0 {
            out.push(Rational::one());
            continue;
        }
        let mut acc = Rational::zero();
        for k in 1..=n {
            acc += sign(k as i64) * &c[k] * &out[n - k];
        }
        out.push(-acc);
    }
    out
}

/// `det(c_{λ_i - μ_j - i + j})` over `depth λ`, with `c_n = 0` for `n < 0`.
pub fn jacobi_trudi(c: &[Rational], lambda: &Partition, mu: &Partition) -> crate::Result<Rational> {
    let size = lambda.depth();
    let mut m = vec![vec![Rational::zero(); size]; size];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let idx = lambda.part(i) - mu.part(j) - i as i64 + j as i64;
            if idx >= 0 {
                *entry = c
                    .get(idx as usize)
                    .cloned()
                    .ok_or_else(|| crate::Error::InvalidArgument(format!("sequence too short for index {idx}")))?;
            }
        }
    }
    Ok(det_rational(&m))
}

/// The conjugate determinant identity for one pair of sequences; when `dual`
/// is given it is also checked against the defining convolution.
pub fn sequence_duality(c: &[Rational], dual: Option<&[Rational]>, size: usize, label: &str) -> VerificationReport {
    let mut r = VerificationReport::new("sequence-duality").param("c", label).param("box", format!("{size}x{size}"));
    record_sequence_duality(&mut r, c, dual, size, label);
    r
}

fn record_sequence_duality(r: &mut VerificationReport, c: &[Rational], dual: Option<&[Rational]>, size: usize, label: &str) {
    let solved = dual_sequence(c);
    if let Some(d) = dual {
        for (n, (a, b)) in solved.iter().zip(d).enumerate() {
            r.record(a == b, || format!("{label}: c'_{n} solved {a}, given {b}"));
        }
    }
    let cd = dual.map(|d| d.to_vec()).unwrap_or(solved);
    for lambda in enumerate_in_box(size, size) {
        for mu in subpartitions(&lambda) {
            let res = (|| {
                let left = jacobi_trudi(c, &lambda, &mu)?;
                let right = jacobi_trudi(&cd, &lambda.conjugate()?, &mu.conjugate()?)?;
                Ok::<_, crate::Error>((left, right))
            })();
            match res {
                Ok((a, b)) => r.record(a == b, || format!("{label} λ={lambda} μ={mu}: {a} vs {b}")),
                Err(e) => r.record_error(&e),
            }
        }
    }
}

/// Fixed test sequences: `1/k!`, and an irregular rational sequence.
pub fn fixed_sequence_duality(size: usize) -> VerificationReport {
    let len = 2 * size + 2;
    let exp: Vec<Rational> = (0..len).map(|k| factorial(k as u64).recip()).collect();
    let odd: Vec<Rational> =
        (0..len).map(|k| if k == 0 { int(1) } else { frac((k as i64 * 7) % 11 - 5, k as i64 % 3 + 1) }).collect();
    let mut r = VerificationReport::new("sequence-duality").param("c", "1/k!,mixed").param("box", format!("{size}x{size}"));
    record_sequence_duality(&mut r, &exp, None, size, "1/k!");
    record_sequence_duality(&mut r, &odd, None, size, "mixed");
    r
}

/// The pair `c_k = p_(k)(u)`, `c'_k = (-1)^k p_(k)(-u)` at a few rational `u`.
pub fn dhat_sequence_duality(seq: &BinomialSequence, size: usize) -> VerificationReport {
    let len = 2 * size + 2;
    let mut r = VerificationReport::new("dhat-sequence-duality").param("op", seq.op()).param("box", format!("{size}x{size}"));
    for u in [frac(1, 2), int(3), frac(-5, 3)] {
        let res = (0..len)
            .map(|k| {
                let p = seq.divided_poly(k)?;
                Ok((p.eval(&u), sign(k as i64) * p.eval(&-u.clone())))
            })
            .collect::<crate::Result<Vec<_>>>();
        match res {
            Ok(pairs) => {
                let (c, d): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
                record_sequence_duality(&mut r, &c, Some(&d), size, &format!("u={u}"));
            }
            Err(e) => r.record_error(&e),
        }
    }
    r
}

/// `d̂` through the normalization of `d` at `N`; used by tests as a second route.
pub fn dhat_from_d(ctx: &SchurContext, lambda: &Partition, mu: &Partition) -> crate::Result<UniPoly> {
    let n = ctx.nvars();
    let weight = |p: &Partition| -> Rational { (0..n).map(|i| factorial((p.part(i) + (n - 1 - i) as i64) as u64)).product() };
    Ok(ctx.d_coeff(lambda, mu, false, false)?.scale(&(weight(mu) / weight(lambda))))
}
