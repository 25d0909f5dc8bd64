#![allow(dead_code)]

use std::sync::Arc;

use koopman_core::alphabet::{Alphabet, Symbol, Word};
use koopman_core::automaton::{DeterministicMap, WeightedDigraph};
use koopman_core::{ClopenSet, PcObservable, QComplex, SlidingBlockCode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(n: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::numeric(n).unwrap())
}

/// Every word of length `width` over `sigma` symbols, in lexicographic order.
pub fn all_words(sigma: usize, width: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..width {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..sigma).map(move |s| {
                    let mut v = w.clone();
                    v.push(s as Symbol);
                    v
                })
            })
            .collect();
    }
    out
}

/// Random set on a random subinterval of `[lo, hi]` of width at most
/// `max_width`; each word is kept with probability `density`.
pub fn random_clopen(
    r: &mut ChaCha8Rng,
    a: &Arc<Alphabet>,
    lo: i64,
    hi: i64,
    max_width: usize,
    density: f64,
) -> ClopenSet {
    let width = r.gen_range(1..=max_width.min((hi - lo + 1) as usize));
    let start = r.gen_range(lo..=hi + 1 - width as i64);
    let words: Vec<Vec<Symbol>> = all_words(a.len(), width)
        .into_iter()
        .filter(|_| r.gen_bool(density))
        .collect();
    ClopenSet::from_words(a.clone(), start, width, words).unwrap()
}

/// Like [`random_clopen`] but never empty and never full.
pub fn random_proper_clopen(
    r: &mut ChaCha8Rng,
    a: &Arc<Alphabet>,
    lo: i64,
    hi: i64,
    max_width: usize,
) -> ClopenSet {
    loop {
        let density = r.gen_range(0.1..0.6);
        let s = random_clopen(r, a, lo, hi, max_width, density);
        if !s.is_empty() && !s.is_full() {
            return s;
        }
    }
}

pub fn random_code(r: &mut ChaCha8Rng, a: &Arc<Alphabet>, memory: usize, anticipation: usize) -> SlidingBlockCode {
    let sigma = a.len();
    let n = sigma.pow((memory + anticipation + 1) as u32);
    let rule = (0..n).map(|_| r.gen_range(0..sigma) as Symbol).collect();
    SlidingBlockCode::new(a.clone(), memory, anticipation, rule).unwrap()
}

pub fn random_rational(r: &mut ChaCha8Rng, max: i64) -> QComplex {
    QComplex::ratio(r.gen_range(-max..=max), r.gen_range(1..=max))
}

pub fn random_complex(r: &mut ChaCha8Rng, max: i64) -> QComplex {
    let re = random_rational(r, max);
    let im = if r.gen_bool(0.5) {
        QComplex::zero()
    } else {
        random_rational(r, max)
    };
    QComplex::new(re.re().clone(), im.re().clone())
}

/// Observable with up to `max_pieces` disjoint random pieces on `[lo, hi]`.
pub fn random_observable(
    r: &mut ChaCha8Rng,
    a: &Arc<Alphabet>,
    lo: i64,
    hi: i64,
    max_pieces: usize,
) -> PcObservable {
    let n = r.gen_range(1..=max_pieces);
    let mut covered = ClopenSet::empty(a.clone());
    let mut pieces = Vec::new();
    for _ in 0..n {
        let s = random_clopen(r, a, lo, hi, 3, 0.4).difference(&covered).unwrap();
        covered = covered.union(&s).unwrap();
        pieces.push((s, random_complex(r, 4)));
    }
    PcObservable::from_pieces(a.clone(), pieces, random_complex(r, 4)).unwrap()
}

pub fn random_map(r: &mut ChaCha8Rng, max_states: usize) -> DeterministicMap {
    let n = r.gen_range(1..=max_states);
    DeterministicMap::from_next((0..n).map(|_| r.gen_range(0..n)).collect()).unwrap()
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

/// Random multigraph whose weights are quotients of random potentials, so
/// every cycle has product 1.
pub fn random_consistent_digraph(r: &mut ChaCha8Rng, max_vertices: usize) -> WeightedDigraph {
    let n = r.gen_range(1..=max_vertices);
    let potentials: Vec<QComplex> = (0..n)
        .map(|_| loop {
            let p = random_complex(r, 5);
            if !p.is_zero() {
                break p;
            }
        })
        .collect();
    let density = r.gen_range(0.15..0.6);
    let mut edges = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let copies = if r.gen_bool(density) { 1 + usize::from(r.gen_bool(0.1)) } else { 0 };
            for _ in 0..copies {
                edges.push((p, q, &potentials[q] / &potentials[p]));
            }
        }
    }
    edges.shuffle(r);
    WeightedDigraph::new(names(n), edges).unwrap()
}

/// Multiplies one random edge weight by a random factor different from 1.
pub fn perturb(r: &mut ChaCha8Rng, g: &WeightedDigraph) -> WeightedDigraph {
    let mut edges = g.edges().to_vec();
    if !edges.is_empty() {
        let i = r.gen_range(0..edges.len());
        let factor = loop {
            let f = random_complex(r, 3);
            if !f.is_zero() && f != QComplex::one() {
                break f;
            }
        };
        edges[i].2 = &edges[i].2 * &factor;
    }
    WeightedDigraph::new(g.names().to_vec(), edges).unwrap()
}

/// Brute-force membership of every word on `[lo, lo + width)`.
pub fn membership_table(s: &ClopenSet, lo: i64, width: usize) -> Vec<bool> {
    all_words(s.alphabet().len(), width)
        .into_iter()
        .map(|w| s.member(&Word::new(lo, w)).unwrap())
        .collect()
}
