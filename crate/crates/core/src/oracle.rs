//! Brute-force ground truth.
//!
//! Everything here evaluates forward: words are enumerated and pushed through
//! the local rule, machines are stepped on an explicit tape, and spectra come
//! from characteristic polynomials. Nothing calls the preimage machinery, so
//! agreement with the engine is meaningful.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::alphabet::{Interval, Symbol, Word};
use crate::automaton::{DeterministicMap, WeightedDigraph};
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::qcomplex::QComplex;
use crate::system::SlidingBlockCode;
use crate::tm::{Cell, Move, TmSpec};

/// Default bound on the number of words enumerated per level.
pub const DEFAULT_MAX_WORDS: u64 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowReach {
    /// Least `t` with some point of `A` landing in `B` after `t` steps;
    /// `witness` is the first such word in enumeration order.
    Hit { t: usize, witness: Word },
    NoneWithin(usize),
}

impl WindowReach {
    pub fn hit_time(&self) -> Option<usize> {
        match self {
            WindowReach::Hit { t, .. } => Some(*t),
            WindowReach::NoneWithin(_) => None,
        }
    }
}

/// Exhaustive search for the first `t ≤ t_max` with `F^t(A) ∩ B ≠ ∅`.
///
/// Level `t` enumerates every word on the dependence window of `B` after `t`
/// steps (joined with the interval of `A`) whose restriction lies in `A`, and
/// evolves each one forward.
pub fn window_reach(
    f: &SlidingBlockCode,
    a: &ClopenSet,
    b: &ClopenSet,
    t_max: usize,
    max_words: u64,
) -> Result<WindowReach> {
    if a.alphabet() != f.alphabet() || b.alphabet() != f.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if a.is_empty() || b.is_empty() {
        return Ok(WindowReach::NoneWithin(t_max));
    }
    let sigma = f.alphabet().len() as u64;
    let b_table = BTable::new(b, sigma)?;
    let a_words = a.words();
    for t in 0..=t_max {
        let b_window = b
            .interval()
            .map(|iv| iv.grow(t * f.memory(), t * f.anticipation()));
        let window = match (a.interval(), b_window) {
            (Some(x), Some(y)) => x.hull(&y),
            (Some(x), None) => x,
            (None, Some(y)) => y,
            (None, None) => return Ok(WindowReach::Hit { t: 0, witness: Word::new(0, Vec::new()) }),
        };
        let level = Level::new(f, a, &a_words, &window, t, sigma, max_words)?;
        if let Some(k) = level.search(&b_table) {
            let mut buf = vec![0; window.width()];
            level.fill(k, &mut buf);
            return Ok(WindowReach::Hit {
                t,
                witness: Word::new(window.lo(), buf),
            });
        }
    }
    Ok(WindowReach::NoneWithin(t_max))
}

/// Membership table for `B` indexed by the base-σ code of its word.
struct BTable {
    lo: i64,
    width: usize,
    member: Vec<bool>,
}

impl BTable {
    fn new(b: &ClopenSet, sigma: u64) -> Result<Self> {
        let Some(iv) = b.interval() else {
            return Ok(BTable { lo: 0, width: 0, member: vec![true] });
        };
        let size = checked_pow(sigma, iv.width())
            .filter(|&n| n <= 1 << 24)
            .ok_or_else(|| Error::EnumerationTooLarge(format!("{sigma}^{}", iv.width())))?;
        let mut member = vec![false; size as usize];
        for w in b.words() {
            member[code(&w, sigma) as usize] = true;
        }
        Ok(BTable { lo: iv.lo(), width: iv.width(), member })
    }
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    u32::try_from(exp).ok().and_then(|e| base.checked_pow(e))
}

fn code(w: &[Symbol], sigma: u64) -> u64 {
    w.iter().fold(0, |acc, &s| acc * sigma + u64::from(s))
}

struct Level<'a> {
    f: &'a SlidingBlockCode,
    a_words: &'a [Vec<Symbol>],
    lo: i64,
    width: usize,
    /// Offset of the interval of `A` inside the window, if `A` is not full.
    a_offset: Option<usize>,
    free: Vec<usize>,
    free_count: u64,
    total: u64,
    t: usize,
    sigma: u64,
}

impl<'a> Level<'a> {
    fn new(
        f: &'a SlidingBlockCode,
        a: &ClopenSet,
        a_words: &'a [Vec<Symbol>],
        window: &Interval,
        t: usize,
        sigma: u64,
        max_words: u64,
    ) -> Result<Self> {
        let a_iv = a.interval();
        let a_offset = a_iv.map(|iv| (iv.lo() - window.lo()) as usize);
        let free: Vec<usize> = (0..window.width())
            .filter(|&i| !a_iv.is_some_and(|iv| iv.contains(window.lo() + i as i64)))
            .collect();
        let too_large = || {
            Error::EnumerationTooLarge(format!(
                "{} x {sigma}^{} (limit {max_words})",
                a_words.len(),
                free.len()
            ))
        };
        let free_count = checked_pow(sigma, free.len()).ok_or_else(too_large)?;
        let total = free_count
            .checked_mul(a_words.len() as u64)
            .filter(|&n| n <= max_words)
            .ok_or_else(too_large)?;
        Ok(Level {
            f,
            a_words,
            lo: window.lo(),
            width: window.width(),
            a_offset,
            free,
            free_count,
            total,
            t,
            sigma,
        })
    }

    /// The `k`-th candidate word; the free cells count fastest, the last one
    /// least significant.
    fn fill(&self, k: u64, buf: &mut [Symbol]) {
        let mut rest = k % self.free_count;
        for &i in self.free.iter().rev() {
            buf[i] = (rest % self.sigma) as Symbol;
            rest /= self.sigma;
        }
        if let Some(off) = self.a_offset {
            let w = &self.a_words[(k / self.free_count) as usize];
            buf[off..off + w.len()].copy_from_slice(w);
        }
    }

    /// Does the `k`-th word land in `B` after exactly `t` steps?
    fn lands(&self, k: u64, buf: &mut [Symbol], b: &BTable) -> bool {
        self.fill(k, buf);
        let n = self.f.window_len();
        let mut len = self.width;
        let mut lo = self.lo;
        for _ in 0..self.t {
            if len < n {
                return false;
            }
            for i in 0..=len - n {
                buf[i] = self.f.local_rule(&buf[i..i + n]);
            }
            len -= n - 1;
            lo += self.f.memory() as i64;
        }
        if b.width == 0 {
            return true;
        }
        let off = (b.lo - lo) as usize;
        b.member[code(&buf[off..off + b.width], self.sigma) as usize]
    }

    fn search(&self, b: &BTable) -> Option<u64> {
        const CHUNK: u64 = 1 << 12;
        let chunks = self.total.div_ceil(CHUNK);
        (0..chunks).into_par_iter().find_map_first(|c| {
            let mut buf = vec![0; self.width];
            (c * CHUNK..((c + 1) * CHUNK).min(self.total)).find(|&k| self.lands(k, &mut buf, b))
        })
    }
}

/// Machine configuration with an explicit finite tape; cells off the tape
/// are blank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TmConfig {
    pub state: usize,
    pub head: i64,
    pub tape: BTreeMap<i64, usize>,
}

impl TmConfig {
    pub fn read(&self, i: i64) -> usize {
        self.tape.get(&i).copied().unwrap_or(0)
    }

    /// Number of non-blank cells.
    pub fn non_blank(&self) -> usize {
        self.tape.values().filter(|&&g| g != 0).count()
    }

    /// The compiled configuration restricted to `iv`.
    pub fn to_word(&self, spec: &TmSpec, iv: &Interval) -> Word {
        let symbols = (iv.lo()..=iv.hi())
            .map(|i| {
                let cell = if i == self.head {
                    Cell::Head(self.state, self.read(i))
                } else {
                    Cell::Tape(self.read(i))
                };
                spec.encode_cell(cell) as Symbol
            })
            .collect();
        Word::new(iv.lo(), symbols)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TmOutcome {
    Halted { step: usize },
    Timeout { steps: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TmRun {
    /// Configurations at steps `0, 1, …`.
    pub trace: Vec<TmConfig>,
    pub outcome: TmOutcome,
}

/// Runs `spec` from its start state with the head on cell 0 and `input`
/// written from cell 0 rightwards.
pub fn tm_simulate(spec: &TmSpec, input: &[usize], max_steps: usize) -> TmRun {
    let tape = input
        .iter()
        .enumerate()
        .filter(|(_, &g)| g != 0)
        .map(|(i, &g)| (i as i64, g))
        .collect();
    let mut cfg = TmConfig {
        state: spec.start(),
        head: 0,
        tape,
    };
    let mut trace = vec![cfg.clone()];
    for step in 0..max_steps {
        let Some(tr) = spec.transition(cfg.state, cfg.read(cfg.head)) else {
            return TmRun {
                trace,
                outcome: TmOutcome::Halted { step },
            };
        };
        if tr.write == 0 {
            cfg.tape.remove(&cfg.head);
        } else {
            cfg.tape.insert(cfg.head, tr.write);
        }
        cfg.head += match tr.dir {
            Move::Left => -1,
            Move::Right => 1,
        };
        cfg.state = tr.next;
        trace.push(cfg.clone());
    }
    let outcome = if spec.is_halting(cfg.state) {
        TmOutcome::Halted { step: max_steps }
    } else {
        TmOutcome::Timeout { steps: max_steps }
    };
    TmRun { trace, outcome }
}

/// Polynomial over `Q`, coefficients from the constant term up, no trailing
/// zeros.
type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect(),
    )
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Quotient and remainder.
fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let lead = b.last().expect("nonzero divisor");
    let mut rem = a.clone();
    if a.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b.len() - 1] / lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &c * bj;
            }
        }
        quot[i] = c;
    }
    (trim(quot), trim(rem))
}

fn monic(p: Poly) -> Poly {
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = divmod(&x, &y).1;
        x = y;
        y = r;
    }
    monic(x)
}

/// Yun's square-free decomposition: `(factor, multiplicity)` pairs.
fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let df = derivative(f);
    let a0 = gcd(f, &df);
    let mut b = divmod(f, &a0).0;
    let c = divmod(&df, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d);
        let nb = divmod(&b, &a).0;
        let nc = divmod(&d, &a).0;
        d = sub(&nc, &derivative(&nb));
        b = nb;
        if a.len() > 1 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Exact characteristic polynomial `det(λI − M)` by Faddeev–LeVerrier,
/// constant term first.
pub fn characteristic_polynomial(m: &[Vec<BigRational>]) -> Vec<BigInt> {
    let n = m.len();
    let identity = |i: usize, j: usize| {
        if i == j {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };
    let mul = |a: &[Vec<BigRational>], b: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                    .collect()
            })
            .collect()
    };
    // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut mk: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| identity(i, j)).collect()).collect();
    for k in 1..=n {
        let am = mul(m, &mk);
        let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        c[n - k] = -tr / BigRational::from_integer(k.into());
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] = &row[i] + &c[n - k];
        }
    }
    c.into_iter()
        .map(|x| {
            assert!(x.is_integer(), "integer matrix");
            x.to_integer()
        })
        .collect()
}

fn to_f64(p: &Poly) -> Vec<f64> {
    p.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

fn horner(p: &[f64], z: Complex<f64>) -> (Complex<f64>, Complex<f64>) {
    let mut v = Complex::new(0.0, 0.0);
    let mut dv = Complex::new(0.0, 0.0);
    for &c in p.iter().rev() {
        dv = dv * z + v;
        v = v * z + c;
    }
    (v, dv)
}

/// Roots of a square-free polynomial by the Aberth–Ehrlich iteration with a
/// final Newton polish.
fn simple_roots(p: &Poly) -> Vec<Complex<f64>> {
    let p = to_f64(&monic(p.clone()));
    let deg = p.len() - 1;
    if deg == 1 {
        return vec![Complex::new(-p[0], 0.0)];
    }
    let radius = 1.0 + p[..deg].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex<f64>> = (0..deg)
        .map(|k| Complex::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / deg as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let (v, dv) = horner(&p, z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex<f64> = (0..deg)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in &mut z {
        for _ in 0..3 {
            let (v, dv) = horner(&p, *zi);
            if dv.norm() > 0.0 {
                *zi -= v / dv;
            }
        }
    }
    z
}

/// Eigenvalues of the Koopman matrix of `map` with multiplicity, from its
/// characteristic polynomial.
pub fn charpoly_spectrum(map: &DeterministicMap) -> Vec<Complex<f64>> {
    let n = map.len();
    let m: Vec<Vec<BigRational>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| {
                    if map.next(p) == q {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let cp: Poly = characteristic_polynomial(&m)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    let mut out = Vec::with_capacity(n);
    for (factor, mult) in squarefree(&cp) {
        for root in simple_roots(&factor) {
            out.extend(std::iter::repeat_n(root, mult));
        }
    }
    out
}

/// Pairs every element of `a` with a distinct element of `b` within `tol`.
pub fn multisets_match(a: &[Complex<f64>], b: &[Complex<f64>], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let best = (0..b.len())
            .filter(|&j| !used[j])
            .min_by(|&i, &j| (b[i] - x).norm().total_cmp(&(b[j] - x).norm()));
        match best {
            Some(j) if (b[j] - x).norm() < tol => {
                used[j] = true;
                true
            }
            _ => false,
        }
    })
}

/// Every simple directed cycle as `(vertices, edge indices, weight product)`;
/// each cycle starts at its smallest vertex. Parallel edges give distinct
/// cycles.
pub fn simple_cycles(g: &WeightedDigraph) -> Vec<(Vec<usize>, Vec<usize>, QComplex)> {
    let n = g.len();
    let mut out_edges = vec![Vec::new(); n];
    for (i, (p, _, _)) in g.edges().iter().enumerate() {
        out_edges[*p].push(i);
    }
    let mut cycles = Vec::new();
    for s in 0..n {
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        let mut on_path = vec![false; n];
        on_path[s] = true;
        extend(g, &out_edges, s, &mut vertices, &mut edges, &mut on_path, &mut cycles);
    }
    cycles
}

fn extend(
    g: &WeightedDigraph,
    out_edges: &[Vec<usize>],
    s: usize,
    vertices: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    on_path: &mut [bool],
    cycles: &mut Vec<(Vec<usize>, Vec<usize>, QComplex)>,
) {
    let v = *vertices.last().expect("nonempty path");
    for &e in &out_edges[v] {
        let q = g.edges()[e].1;
        if q == s {
            edges.push(e);
            let product = edges
                .iter()
                .fold(QComplex::one(), |acc, &i| &acc * &g.edges()[i].2);
            cycles.push((vertices.clone(), edges.clone(), product));
            edges.pop();
        } else if q > s && !on_path[q] {
            on_path[q] = true;
            vertices.push(q);
            edges.push(e);
            extend(g, out_edges, s, vertices, edges, on_path, cycles);
            edges.pop();
            vertices.pop();
            on_path[q] = false;
        }
    }
}

/// `true` when every simple cycle has weight product exactly 1.
pub fn all_cycles_unit(g: &WeightedDigraph) -> bool {
    simple_cycles(g).iter().all(|(_, _, p)| *p == QComplex::one())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::alphabet::Alphabet;

    fn bin() -> Arc<Alphabet> {
        Arc::new(Alphabet::binary())
    }

    fn cyl(lo: i64, w: &str) -> ClopenSet {
        ClopenSet::cylinder(bin(), lo, w).unwrap()
    }

    #[test]
    fn window_reach_examples() {
        let shift = SlidingBlockCode::shift(bin());
        let r = window_reach(&shift, &cyl(0, "0"), &cyl(0, "1"), 3, DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(r.hit_time(), Some(1));
        let not = SlidingBlockCode::permutation(bin(), vec![1, 0]).unwrap();
        let r = window_reach(&not, &cyl(0, "00"), &cyl(0, "01"), 8, DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(r, WindowReach::NoneWithin(8));
        let r = window_reach(&not, &cyl(0, "00"), &cyl(0, "11"), 8, DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(
            r,
            WindowReach::Hit {
                t: 1,
                witness: Word::new(0, vec![0, 0])
            }
        );
    }

    #[test]
    fn window_reach_guard() {
        let zero = SlidingBlockCode::eca(0).unwrap();
        let r = window_reach(&zero, &cyl(0, "0"), &cyl(0, "1"), 40, 1 << 10);
        assert!(matches!(r, Err(Error::EnumerationTooLarge(_))));
    }

    #[test]
    fn busy_beaver_halts_after_six_steps() {
        let bb = TmSpec::busy_beaver_2();
        let run = tm_simulate(&bb, &[], 100);
        assert_eq!(run.outcome, TmOutcome::Halted { step: 6 });
        assert_eq!(run.trace.len(), 7);
        assert_eq!(run.trace.last().unwrap().non_blank(), 4);
    }

    #[test]
    fn simulation_edge_cases() {
        let looping = TmSpec::new(
            vec!["A".into()],
            vec!["0".into(), "1".into()],
            "A",
            &[],
            &[("A", "0", "A", "0", Move::Right), ("A", "1", "A", "1", Move::Right)],
        )
        .unwrap();
        assert_eq!(tm_simulate(&looping, &[1], 20).outcome, TmOutcome::Timeout { steps: 20 });
        let halted = TmSpec::new(
            vec!["H".into()],
            vec!["0".into(), "1".into()],
            "H",
            &["H"],
            &[],
        )
        .unwrap();
        let run = tm_simulate(&halted, &[1, 1], 5);
        assert_eq!(run.outcome, TmOutcome::Halted { step: 0 });
        assert_eq!(run.trace.len(), 1);
    }

    #[test]
    fn charpoly_examples() {
        // 3-cycle: λ^3 - 1
        let cyc = DeterministicMap::from_next(vec![1, 2, 0]).unwrap();
        let spec = charpoly_spectrum(&cyc);
        let want: Vec<Complex<f64>> = (0..3)
            .map(|k| Complex::from_polar(1.0, std::f64::consts::TAU * k as f64 / 3.0))
            .collect();
        assert!(multisets_match(&spec, &want, 1e-9), "{spec:?}");
        // fixed point with a transient chain of length 2
        let chain = DeterministicMap::from_next(vec![1, 2, 2]).unwrap();
        let spec = charpoly_spectrum(&chain);
        let want = [1.0, 0.0, 0.0].map(|x| Complex::new(x, 0.0));
        assert!(multisets_match(&spec, &want, 1e-9), "{spec:?}");
    }

    #[test]
    fn exact_charpoly() {
        let q = |x: i64| BigRational::from_integer(x.into());
        let m = vec![vec![q(2), q(1)], vec![q(1), q(2)]];
        // λ^2 - 4λ + 3
        let cp: Vec<i64> = characteristic_polynomial(&m)
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(cp, vec![3, -4, 1]);
    }

    #[test]
    fn squarefree_parts() {
        let q = |x: i64| BigRational::from_integer(x.into());
        // λ^2 (λ - 1)^3 (λ + 1)
        let mut p: Poly = vec![q(1)];
        for root in [0, 0, 1, 1, 1, -1] {
            let mut next = vec![q(0); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - c * q(root);
            }
            p = next;
        }
        let parts = squarefree(&p);
        let mults: Vec<(usize, usize)> = parts.iter().map(|(f, m)| (f.len() - 1, *m)).collect();
        assert_eq!(mults, vec![(1, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn cycle_enumeration() {
        let w = |a: i64, b: i64| QComplex::ratio(a, b);
        let g = WeightedDigraph::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1, w(2, 1)), (1, 0, w(1, 2)), (1, 2, w(1, 1)), (2, 0, w(1, 2)), (2, 2, w(1, 1))],
        )
        .unwrap();
        let cycles = simple_cycles(&g);
        let vs: Vec<Vec<usize>> = cycles.iter().map(|c| c.0.clone()).collect();
        assert_eq!(vs, vec![vec![0, 1], vec![0, 1, 2], vec![2]]);
        assert!(all_cycles_unit(&g));
    }
}
