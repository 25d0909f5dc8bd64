mod common;

use koopman_core::alphabet::Word;
use koopman_core::{ClopenSet, Limits};
use proptest::prelude::*;

use common::*;

fn table_of(s: &ClopenSet) -> Vec<bool> {
    membership_table(s, -3, 7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn boolean_operations_match_membership(seed in any::<u64>(), sigma in 2usize..=3) {
        let mut r = rng(seed);
        let a = alphabet(sigma);
        let x = random_clopen(&mut r, &a, -3, 3, 3, 0.4);
        let y = random_clopen(&mut r, &a, -3, 3, 3, 0.4);
        let (tx, ty) = (table_of(&x), table_of(&y));
        let zip = |f: fn(bool, bool) -> bool| -> Vec<bool> {
            tx.iter().zip(&ty).map(|(p, q)| f(*p, *q)).collect()
        };
        prop_assert_eq!(table_of(&x.union(&y).unwrap()), zip(|p, q| p || q));
        prop_assert_eq!(table_of(&x.intersect(&y).unwrap()), zip(|p, q| p && q));
        prop_assert_eq!(table_of(&x.difference(&y).unwrap()), zip(|p, q| p && !q));
        prop_assert_eq!(table_of(&x.complement()), tx.iter().map(|p| !p).collect::<Vec<_>>());
        prop_assert_eq!(x.is_subset(&y).unwrap(), tx.iter().zip(&ty).all(|(p, q)| !p || *q));
        prop_assert_eq!(x.is_disjoint(&y).unwrap(), tx.iter().zip(&ty).all(|(p, q)| !(p & q)));
    }

    #[test]
    fn representation_is_canonical(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = alphabet(2);
        let x = random_clopen(&mut r, &a, -3, 3, 3, 0.5);
        let y = random_clopen(&mut r, &a, -3, 3, 3, 0.5);
        prop_assert_eq!(x == y, table_of(&x) == table_of(&y));
        let de_morgan = x.union(&y).unwrap().complement();
        prop_assert_eq!(de_morgan, x.complement().intersect(&y.complement()).unwrap());
        prop_assert_eq!(x.complement().complement(), x.clone());
        prop_assert!(x.union(&x.complement()).unwrap().is_full());
    }

    #[test]
    fn first_word_is_a_member(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = alphabet(3);
        let x = random_clopen(&mut r, &a, -3, 3, 3, 0.2);
        match x.first_word() {
            Some(w) => prop_assert!(x.member(&w).unwrap()),
            None => prop_assert!(x.is_empty()),
        }
        let on_own_window = x.words().len();
        prop_assert_eq!(x.word_count(), on_own_window.into());
    }

    #[test]
    fn preimage_matches_forward_evaluation(
        seed in any::<u64>(),
        sigma in 2usize..=3,
        memory in 0usize..=1,
        anticipation in 0usize..=2,
    ) {
        let mut r = rng(seed);
        let a = alphabet(sigma);
        let f = random_code(&mut r, &a, memory, anticipation);
        let target = random_clopen(&mut r, &a, -2, 2, 2, 0.5);
        let pre = f.preimage(&target, &Limits::default()).unwrap();
        let window = target
            .interval()
            .unwrap_or(koopman_core::Interval::new(0, 0).unwrap())
            .grow(memory, anticipation);
        for w in all_words(sigma, window.width()) {
            let w = Word::new(window.lo(), w);
            prop_assert_eq!(pre.member(&w).unwrap(), target.member(&f.apply_block(&w)).unwrap());
        }
    }

    #[test]
    fn iterated_preimage_is_repeated_preimage(seed in any::<u64>(), t in 0usize..4) {
        let mut r = rng(seed);
        let a = alphabet(2);
        let f = random_code(&mut r, &a, 1, 1);
        let target = random_clopen(&mut r, &a, -1, 1, 2, 0.5);
        let lim = Limits::default();
        let mut step = target.clone();
        for _ in 0..t {
            step = f.preimage(&step, &lim).unwrap();
        }
        let direct = f.iterate_preimage(&target, t, &lim).unwrap();
        prop_assert_eq!(&direct, &step);
        let window = koopman_core::Interval::new(-1 - t as i64, 1 + t as i64).unwrap();
        for w in all_words(2, window.width()) {
            let mut image = Word::new(window.lo(), w.clone());
            for _ in 0..t {
                image = f.apply_block(&image);
            }
            let w = Word::new(window.lo(), w);
            prop_assert_eq!(direct.member(&w).unwrap(), target.member(&image).unwrap());
        }
    }
}

#[test]
fn width_limit_is_reported() {
    let f = koopman_core::SlidingBlockCode::eca(110).unwrap();
    let a = f.alphabet().clone();
    let b = ClopenSet::cylinder(a, 0, "1").unwrap();
    let err = f.iterate_preimage(&b, 10, &Limits::with_max_width(8)).unwrap_err();
    assert!(err.to_string().contains('8'), "{err}");
}
