mod common;

use koopman_core::alphabet::Word;
use koopman_core::halting::{span_dimension, SpanDimension};
use koopman_core::system::permutation_order;
use koopman_core::{Limits, PcObservable, QComplex, SlidingBlockCode};
use proptest::prelude::*;

use common::*;

fn values_on(g: &PcObservable, lo: i64, width: usize) -> Vec<QComplex> {
    all_words(g.alphabet().len(), width)
        .into_iter()
        .map(|w| g.value_at(&Word::new(lo, w)).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn koopman_is_composition(seed in any::<u64>(), sigma in 2usize..=3) {
        let mut r = rng(seed);
        let a = alphabet(sigma);
        let f = random_code(&mut r, &a, 1, 1);
        let g = random_observable(&mut r, &a, -1, 1, 3);
        let kg = g.koopman_apply(&f, &Limits::default()).unwrap();
        for w in all_words(sigma, 5) {
            let w = Word::new(-2, w);
            prop_assert_eq!(kg.value_at(&w).unwrap(), g.value_at(&f.apply_block(&w)).unwrap());
        }
    }

    #[test]
    fn pointwise_arithmetic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = alphabet(2);
        let g = random_observable(&mut r, &a, -2, 2, 3);
        let h = random_observable(&mut r, &a, -2, 2, 3);
        let c = random_complex(&mut r, 6);
        let (vg, vh) = (values_on(&g, -2, 5), values_on(&h, -2, 5));
        let sum: Vec<QComplex> = vg.iter().zip(&vh).map(|(x, y)| x + y).collect();
        let prod: Vec<QComplex> = vg.iter().zip(&vh).map(|(x, y)| x * y).collect();
        let scaled: Vec<QComplex> = vg.iter().map(|x| x * &c).collect();
        prop_assert_eq!(values_on(&g.add(&h).unwrap(), -2, 5), sum);
        prop_assert_eq!(values_on(&g.mul(&h).unwrap(), -2, 5), prod);
        prop_assert_eq!(values_on(&g.scale(&c), -2, 5), scaled);
        let sup = vg.iter().map(QComplex::norm_sq).max().unwrap();
        prop_assert_eq!(g.sup_norm_sq(), sup);
        prop_assert!(g.sub(&g).unwrap().is_zero());
    }

    #[test]
    fn permutation_spans_are_bounded_by_order(seed in any::<u64>(), sigma in 2usize..=5) {
        use rand::seq::SliceRandom;
        let mut r = rng(seed);
        let a = alphabet(sigma);
        let mut perm: Vec<_> = (0..sigma as koopman_core::Symbol).collect();
        perm.shuffle(&mut r);
        let order = permutation_order(&perm);
        let f = SlidingBlockCode::permutation(a.clone(), perm).unwrap();
        let g = random_observable(&mut r, &a, 0, 0, 2);
        let bound = order * g.pieces().len().max(1);
        match span_dimension(&f, &g, bound + 1, &Limits::default()).unwrap() {
            SpanDimension::Finite(d) => prop_assert!(d <= bound, "{} > {}", d, bound),
            other => prop_assert!(false, "{:?}", other),
        }
    }
}

#[test]
fn shift_orbit_of_a_cylinder_is_infinite_dimensional() {
    let a = alphabet(2);
    let f = SlidingBlockCode::shift(a.clone());
    let g = PcObservable::indicator(&koopman_core::ClopenSet::cylinder(a, 0, "1").unwrap());
    assert_eq!(
        span_dimension(&f, &g, 12, &Limits::default()).unwrap(),
        SpanDimension::ExceedsBudget(12)
    );
}
