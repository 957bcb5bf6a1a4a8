//! Expansions at infinity of `h_k` and `h*_k` along affine lines.
//!
//! On the line `x_j = c_j t + a_j` the first-row cofactor expansion gives
//! `h_k = sum_j p_{k+N-1}(c_j t + a_j) / prod_{i != j} ((c_j - c_i) t + a_j - a_i)`.
//! Two lines are supported: a common slope (the shift direction `x + u`) and
//! a common offset (the ray `t c + u`), where each denominator is a constant
//! times a power of `t`.

use num_traits::{One, Zero};

use crate::delta::{BinomialSequence, SeqTerm};
use crate::error::{Error, Result};
use crate::exact::{ensure_distinct, LaurentTail, Rational};

/// `h_k(c_1 t + a_1, ..., c_N t + a_N)` in `t`, known down to `t^bottom`.
pub fn h_on_line(
    seq: &BinomialSequence,
    k: i64,
    star: bool,
    c: &[Rational],
    a: &[Rational],
    bottom: i64,
) -> Result<LaurentTail> {
    let n = c.len();
    if a.len() != n || n == 0 {
        return Err(Error::InvalidArgument("line needs one slope and one offset per variable".into()));
    }
    let same_slope = c.iter().all(|ci| ci == &c[0]);
    let same_offset = a.iter().all(|ai| ai == &a[0]);
    let power = if n == 1 {
        0
    } else if same_slope {
        ensure_distinct(a)?;
        0
    } else if same_offset {
        ensure_distinct(c)?;
        n as i64 - 1
    } else {
        return Err(Error::InvalidArgument("points must share either the slope or the offset".into()));
    };
    let term = seq.term(k + n as i64 - 1, star)?;
    let mut acc = LaurentTail::zero_to(bottom);
    for j in 0..n {
        let mut den = Rational::one();
        for i in 0..n {
            if i != j {
                den *= if power == 0 { &a[j] - &a[i] } else { &c[j] - &c[i] };
            }
        }
        let piece = affine_piece(&term, &c[j], &a[j], bottom + power)?;
        acc = acc.add(&piece.shift_exp(-power).scale(&den.recip()));
    }
    acc.truncate(bottom)
}

/// `h_k(x_1 + u, ..., x_N + u)` in `u`.
pub fn h_in_u(seq: &BinomialSequence, k: i64, star: bool, x: &[Rational], bottom: i64) -> Result<LaurentTail> {
    let ones = vec![Rational::one(); x.len()];
    h_on_line(seq, k, star, &ones, x, bottom)
}

/// `h_k(c_1 t + u, ..., c_N t + u)` in `t`.
pub fn h_on_ray(seq: &BinomialSequence, k: i64, star: bool, c: &[Rational], u: &Rational, bottom: i64) -> Result<LaurentTail> {
    let offsets = vec![u.clone(); c.len()];
    h_on_line(seq, k, star, c, &offsets, bottom)
}

/// `p_n(c t + a)` in `t`.
pub fn p_on_line(seq: &BinomialSequence, n: i64, star: bool, c: &Rational, a: &Rational, bottom: i64) -> Result<LaurentTail> {
    affine_piece(&seq.term(n, star)?, c, a, bottom)
}

/// `f(c t + a)` down to `t^bottom`. Coefficients of `f` below `bottom` never
/// reach the window, so series are cut before composing.
fn affine_piece(term: &SeqTerm, c: &Rational, a: &Rational, bottom: i64) -> Result<LaurentTail> {
    match term {
        SeqTerm::Series(s) => s.truncate(bottom)?.compose_affine(c, a),
        _ => term.compose_affine(c, a)?.to_laurent(bottom),
    }
}

/// Sum of `coeff * series` over pairs, known down to `bottom`.
pub fn linear_combination(parts: impl IntoIterator<Item = (Rational, LaurentTail)>, bottom: i64) -> Result<LaurentTail> {
    let mut acc = LaurentTail::zero_to(bottom);
    for (c, s) in parts {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&s.truncate(bottom)?.scale(&c));
    }
    acc.truncate(bottom)
}
