mod common;

use koopman_core::automaton::{exact_spectrum, koopman_matrix};
use koopman_core::topology::{ball, dynamical_distance, is_ball_open, is_dyn_open, TransitionDigraph};
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn random_digraph(r: &mut rand_chacha::ChaCha8Rng, max: usize) -> TransitionDigraph {
    let n = r.gen_range(1..=max);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|_| r.gen_bool(0.3))
        .collect();
    TransitionDigraph::new(names(n), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn koopman_matrix_composes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_map(&mut r, 7);
        let k = koopman_matrix(&m);
        let v: Vec<i64> = (0..m.len()).map(|_| r.gen_range(-9..10)).collect();
        let expected: Vec<i64> = (0..m.len()).map(|q| v[m.next(q)]).collect();
        prop_assert_eq!(k.apply(&v), expected);
        prop_assert_eq!(k.trace(), m.fixed_points().len());
        prop_assert_eq!(exact_spectrum(&m).multiplicity_of_one(), m.cycles().len());
    }

    #[test]
    fn distance_is_a_quasi_metric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_digraph(&mut r, 7);
        let d = dynamical_distance(&g);
        let n = g.len();
        for p in 0..n {
            prop_assert_eq!(d.get(p, p), Some(0));
            for q in 0..n {
                for s in 0..n {
                    if let (Some(a), Some(b)) = (d.get(p, q), d.get(q, s)) {
                        prop_assert!(d.get(p, s).is_some_and(|c| c <= a + b));
                    }
                }
            }
            for radius in 0..4 {
                let b = ball(&g, p, radius);
                for q in 0..n {
                    prop_assert_eq!(b.contains(&q), d.get(p, q).is_some_and(|x| x < radius));
                }
            }
        }
        let all: Vec<usize> = (0..n).collect();
        prop_assert!(is_dyn_open(&g, &all).unwrap() && is_dyn_open(&g, &[]).unwrap());
        prop_assert!(is_ball_open(&g, &all, 2).unwrap());
    }
}
