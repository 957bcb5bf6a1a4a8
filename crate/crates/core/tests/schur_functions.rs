use std::sync::Arc;

use binomial_schur::delta::{BinomialSequence, DeltaOperator};
use binomial_schur::exact::{frac, int, Rational};
use binomial_schur::partition::{enumerate_in_box, Partition};
use binomial_schur::schur::{dhat, SchurContext};
use num_traits::Zero;
use proptest::prelude::*;

fn operators() -> Vec<DeltaOperator> {
    vec![
        DeltaOperator::differentiation(),
        DeltaOperator::forward(),
        DeltaOperator::backward(),
        DeltaOperator::central(),
        DeltaOperator::generic(&[int(1)], 24).unwrap(),
    ]
}

fn ctx(op: &DeltaOperator, n: usize) -> SchurContext {
    SchurContext::new(Arc::new(BinomialSequence::new(op.clone())), n).unwrap()
}

fn in_box(m: usize, n: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_in_box(m, n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

#[test]
fn dagger_is_an_involution_with_complementary_indices() {
    for m in 0..=4usize {
        for n in 0..=4usize {
            for l in enumerate_in_box(m, n) {
                let d = l.dagger(m, n).unwrap();
                assert_eq!(d.dagger(n, m).unwrap(), l);
                let mut idx: Vec<i64> = (0..m).map(|i| l.part(i) + (m - 1 - i) as i64).collect();
                idx.extend((0..n).map(|j| d.part(j) + (n - 1 - j) as i64));
                idx.sort();
                assert_eq!(idx, (0..(m + n) as i64).collect::<Vec<_>>(), "{l} in {m}x{n}");
            }
        }
    }
}

#[test]
fn dhat_does_not_depend_on_the_variable_count() {
    for op in operators().into_iter().take(4) {
        let seq = BinomialSequence::new(op.clone());
        for l in enumerate_in_box(2, 3) {
            for mu in enumerate_in_box(2, 3).into_iter().filter(|mu| l.contains(mu)) {
                for star in [false, true] {
                    let reference = dhat(&seq, &l, &mu, star).unwrap();
                    for n in [2usize, 4] {
                        let c = ctx(&op, n);
                        assert_eq!(c.d_coeff(&l, &mu, true, star).unwrap(), reference, "{op} {l}/{mu} N={n}");
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugation_is_an_involution(l in in_box(5, 5)) {
        let c = l.conjugate().unwrap();
        prop_assert_eq!(c.size(), l.size());
        prop_assert_eq!(c.conjugate().unwrap(), l);
    }

    #[test]
    fn schur_functions_are_symmetric(op in 0usize..5, n in 2usize..=4, l in in_box(3, 3), star in any::<bool>()) {
        let op = &operators()[op];
        prop_assume!(l.depth() <= n);
        let s = ctx(op, n).schur(&l, star).unwrap();
        for i in 0..n - 1 {
            prop_assert_eq!(s.swap_vars(i, i + 1), s.clone());
        }
    }

    #[test]
    fn top_component_is_the_classical_schur(op in 0usize..5, n in 1usize..=3, l in in_box(3, 3), star in any::<bool>()) {
        prop_assume!(l.depth() <= n);
        let s = ctx(&operators()[op], n).schur(&l, star).unwrap();
        let classical = ctx(&DeltaOperator::differentiation(), n).schur(&l, false).unwrap();
        prop_assert_eq!(s.top_homogeneous(), classical);
    }

    #[test]
    fn conjugate_is_plain_with_an_extra_zero(op in 0usize..4, n in 1usize..=3, l in in_box(3, 3)) {
        prop_assume!(l.depth() <= n);
        let op = &operators()[op];
        let star = ctx(op, n).schur(&l, true).unwrap();
        let plain = ctx(op, n + 1).schur(&l, false).unwrap().specialize(n, &Rational::zero());
        prop_assert_eq!(star, plain);
    }

    #[test]
    fn evaluation_agrees_with_expansion(op in 0usize..4, l in in_box(3, 3), a in 1i64..9, b in 1i64..9, c in 1i64..9) {
        let pts = [frac(a, 2), frac(b, 3) + int(5), frac(-c, 5)];
        let cx = ctx(&operators()[op], 3);
        for star in [false, true] {
            let symbolic = cx.schur(&l, star).unwrap().eval(&pts);
            prop_assert_eq!(cx.schur_at(&l, star, &pts).unwrap(), symbolic);
        }
    }
}
