//! Coarse-grained finite automata and the Koopman operator on state
//! indicators.
//!
//! For a deterministic self-map `next` of a finite set `Q`, the Koopman
//! operator acts on indicator vectors as `(Kχ)(p) = χ(next(p))`; its matrix
//! has a single 1 per row. Driven automata get one such map per input symbol
//! and are evolved along explicit input words.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcomplex::QComplex;

fn position(names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|s| s == name)
        .ok_or_else(|| Error::UnknownState(name.to_string()))
}

fn check_distinct(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(Error::DuplicateState(n.clone()));
        }
    }
    Ok(())
}

/// A total self-map of a finite state set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterministicMap {
    names: Vec<String>,
    next: Vec<usize>,
}

impl DeterministicMap {
    pub fn new(names: Vec<String>, next: Vec<usize>) -> Result<Self> {
        check_distinct(&names)?;
        if next.len() != names.len() {
            return Err(Error::UnknownState(format!(
                "map has {} images for {} states",
                next.len(),
                names.len()
            )));
        }
        if let Some(&bad) = next.iter().find(|&&q| q >= names.len()) {
            return Err(Error::UnknownState(format!("#{bad}")));
        }
        Ok(DeterministicMap { names, next })
    }

    /// States named `q0, q1, …`.
    pub fn from_next(next: Vec<usize>) -> Result<Self> {
        let names = (0..next.len()).map(|i| format!("q{i}")).collect();
        Self::new(names, next)
    }

    pub fn len(&self) -> usize {
        self.next.len()
    }

    pub fn is_empty(&self) -> bool {
        self.next.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn next(&self, q: usize) -> usize {
        self.next[q]
    }

    pub fn images(&self) -> &[usize] {
        &self.next
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&q| self.next[q] == q).collect()
    }

    /// Cycles of the functional graph, each starting at its smallest state,
    /// sorted by that state.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        // 0 = unvisited, 1 = on current path, 2 = done
        let mut mark = vec![0u8; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if mark[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut q = start;
            while mark[q] == 0 {
                mark[q] = 1;
                path.push(q);
                q = self.next[q];
            }
            if mark[q] == 1 {
                let at = path.iter().position(|&p| p == q).expect("on path");
                let mut cycle = path[at..].to_vec();
                let min_at = cycle
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &s)| s)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                cycle.rotate_left(min_at);
                cycles.push(cycle);
            }
            for p in path {
                mark[p] = 2;
            }
        }
        cycles.sort();
        cycles
    }

    pub fn recurrent_states(&self) -> Vec<bool> {
        let mut rec = vec![false; self.len()];
        for c in self.cycles() {
            for q in c {
                rec[q] = true;
            }
        }
        rec
    }
}

/// Deterministic automaton `δ : Q × Σ → Q` with a designated halting set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    states: Vec<String>,
    alphabet: Vec<String>,
    delta: Vec<usize>,
    halting: Vec<bool>,
}

impl Automaton {
    pub fn new(
        states: Vec<String>,
        alphabet: Vec<String>,
        transitions: &[(&str, &str, &str)],
        halt: &[&str],
    ) -> Result<Self> {
        check_distinct(&states)?;
        if alphabet.is_empty() {
            return Err(Error::AlphabetTooSmall(0));
        }
        for (i, s) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        let k = alphabet.len();
        let mut delta = vec![usize::MAX; states.len() * k];
        for &(p, s, q) in transitions {
            let p = position(&states, p)?;
            let si = alphabet
                .iter()
                .position(|a| a == s)
                .ok_or_else(|| Error::UnknownSymbol(s.to_string()))?;
            let q = position(&states, q)?;
            delta[p * k + si] = q;
        }
        for p in 0..states.len() {
            for (si, s) in alphabet.iter().enumerate() {
                if delta[p * k + si] == usize::MAX {
                    return Err(Error::MissingTransition {
                        state: states[p].clone(),
                        symbol: s.clone(),
                    });
                }
            }
        }
        let mut halting = vec![false; states.len()];
        for h in halt {
            halting[position(&states, h)?] = true;
        }
        Ok(Automaton {
            states,
            alphabet,
            delta,
            halting,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_index(&self, name: &str) -> Result<usize> {
        position(&self.states, name)
    }

    pub fn symbol_index(&self, name: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn step(&self, q: usize, symbol: usize) -> usize {
        self.delta[q * self.alphabet.len() + symbol]
    }

    pub fn halting_states(&self) -> Vec<usize> {
        (0..self.states.len()).filter(|&q| self.halting[q]).collect()
    }

    /// The autonomous map obtained by feeding `symbol` forever.
    pub fn symbol_map(&self, symbol: usize) -> DeterministicMap {
        DeterministicMap {
            names: self.states.clone(),
            next: (0..self.states.len()).map(|q| self.step(q, symbol)).collect(),
        }
    }

    /// States fixed by every input symbol.
    pub fn absorbing_states(&self) -> Vec<usize> {
        (0..self.states.len())
            .filter(|&q| (0..self.alphabet.len()).all(|s| self.step(q, s) == q))
            .collect()
    }

    /// State trajectory `q, δ(q, w_0), δ(δ(q, w_0), w_1), …`.
    pub fn run_word(&self, q: usize, word: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(word.len() + 1);
        out.push(q);
        let mut cur = q;
        for &s in word {
            cur = self.step(cur, s);
            out.push(cur);
        }
        out
    }

    /// Successor lists of the union graph `q → δ(q, σ)` over all symbols.
    pub fn union_successors(&self) -> Vec<Vec<usize>> {
        (0..self.states.len())
            .map(|q| {
                let mut s: Vec<usize> = (0..self.alphabet.len()).map(|a| self.step(q, a)).collect();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect()
    }
}

/// Koopman matrix on the indicator basis: `M[p][q] = 1` iff `next(p) = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoopmanMatrix {
    target: Vec<usize>,
}

impl KoopmanMatrix {
    pub fn dim(&self) -> usize {
        self.target.len()
    }

    pub fn entry(&self, p: usize, q: usize) -> u8 {
        u8::from(self.target[p] == q)
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.dim())
            .map(|p| (0..self.dim()).map(|q| self.entry(p, q)).collect())
            .collect()
    }

    /// `(M v)[p] = v[next(p)]`.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        self.target.iter().map(|&q| v[q].clone()).collect()
    }

    pub fn trace(&self) -> usize {
        (0..self.dim()).filter(|&p| self.target[p] == p).count()
    }
}

pub fn koopman_matrix(map: &DeterministicMap) -> KoopmanMatrix {
    KoopmanMatrix {
        target: map.next.clone(),
    }
}

fn as_mask(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &q in set {
        if q >= n {
            return Err(Error::UnknownState(format!("#{q}")));
        }
        mask[q] = true;
    }
    Ok(mask)
}

/// Backward closure of an absorbing set: every state whose orbit enters it.
pub fn basin(map: &DeterministicMap, absorbing: &[usize]) -> Result<Vec<usize>> {
    let n = map.len();
    let mut inside = as_mask(n, absorbing)?;
    if let Some(&q) = absorbing.iter().find(|&&q| !inside[map.next[q]]) {
        return Err(Error::NotAbsorbing(map.names[q].clone()));
    }
    let mut preds = vec![Vec::new(); n];
    for p in 0..n {
        preds[map.next[p]].push(p);
    }
    let mut queue: VecDeque<usize> = absorbing.iter().copied().collect();
    while let Some(q) = queue.pop_front() {
        for &p in &preds[q] {
            if !inside[p] {
                inside[p] = true;
                queue.push_back(p);
            }
        }
    }
    Ok((0..n).filter(|&q| inside[q]).collect())
}

/// Checks `M χ_B = χ_B` exactly for the basin `B` of `absorbing`.
pub fn check_basin_eigenfunction(map: &DeterministicMap, absorbing: &[usize]) -> Result<bool> {
    let b = basin(map, absorbing)?;
    let chi: Vec<u8> = as_mask(map.len(), &b)?.into_iter().map(u8::from).collect();
    Ok(koopman_matrix(map).apply(&chi) == chi)
}

/// The eigenvalue `exp(2πi·k/m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    pub k: usize,
    pub m: usize,
}

impl RootOfUnity {
    pub fn to_complex(self) -> Complex<f64> {
        if self.k == 0 {
            return Complex::new(1.0, 0.0);
        }
        let theta = std::f64::consts::TAU * self.k as f64 / self.m as f64;
        Complex::from_polar(1.0, theta)
    }
}

/// Spectrum of a functional-graph Koopman matrix: all `m`-th roots of unity
/// for each `m`-cycle, plus `0` once per transient state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    /// `(cycle length, number of cycles of that length)`, ascending.
    pub cycles: Vec<(usize, usize)>,
    pub zeros: usize,
}

impl SpectrumReport {
    pub fn total(&self) -> usize {
        self.zeros + self.cycles.iter().map(|&(m, c)| m * c).sum::<usize>()
    }

    /// Nonzero eigenvalues, with repetition.
    pub fn roots(&self) -> Vec<RootOfUnity> {
        let mut out = Vec::new();
        for &(m, c) in &self.cycles {
            for _ in 0..c {
                out.extend((0..m).map(|k| RootOfUnity { k, m }));
            }
        }
        out
    }

    pub fn eigenvalues(&self) -> Vec<Complex<f64>> {
        let mut v: Vec<Complex<f64>> = self.roots().into_iter().map(RootOfUnity::to_complex).collect();
        v.extend(std::iter::repeat_n(Complex::new(0.0, 0.0), self.zeros));
        v
    }

    /// Sum of all eigenvalues, exactly: the `m`-th roots of unity sum to 0
    /// unless `m = 1`.
    pub fn trace(&self) -> usize {
        self.cycles
            .iter()
            .filter(|&&(m, _)| m == 1)
            .map(|&(_, c)| c)
            .sum()
    }

    pub fn multiplicity_of_one(&self) -> usize {
        self.cycles.iter().map(|&(_, c)| c).sum()
    }

    /// `λ^{zeros} · Π (λ^m − 1)^c`, coefficients from the constant term up.
    pub fn characteristic_polynomial(&self) -> Vec<BigInt> {
        let mut poly = vec![BigInt::one()];
        for &(m, c) in &self.cycles {
            for _ in 0..c {
                let mut next = vec![BigInt::zero(); poly.len() + m];
                for (i, a) in poly.iter().enumerate() {
                    next[i + m] += a;
                    next[i] -= a;
                }
                poly = next;
            }
        }
        let mut out = vec![BigInt::zero(); self.zeros];
        out.extend(poly);
        out
    }
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self.cycles.iter().map(|(m, c)| format!("{m}x{c}")).collect();
        write!(f, "cycles=[{}] zeros={}", cycles.join(","), self.zeros)
    }
}

pub fn exact_spectrum(map: &DeterministicMap) -> SpectrumReport {
    let cycles = map.cycles();
    let recurrent: usize = cycles.iter().map(Vec::len).sum();
    let mut lengths: Vec<usize> = cycles.iter().map(Vec::len).collect();
    lengths.sort_unstable();
    let mut grouped: Vec<(usize, usize)> = Vec::new();
    for m in lengths {
        match grouped.last_mut() {
            Some((len, c)) if *len == m => *c += 1,
            _ => grouped.push((m, 1)),
        }
    }
    SpectrumReport {
        cycles: grouped,
        zeros: map.len() - recurrent,
    }
}

/// Multiplicity of the eigenvalue 1: one per cycle.
pub fn multiplicity_of_one(map: &DeterministicMap) -> usize {
    map.cycles().len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub multiplicity: usize,
    pub absorbing_fixed_points: usize,
    pub holds: bool,
    /// `multiplicity − absorbing_fixed_points` when it holds.
    pub slack: usize,
}

fn corollary(multiplicity: usize, absorbing_fixed_points: usize) -> CorollaryReport {
    CorollaryReport {
        multiplicity,
        absorbing_fixed_points,
        holds: multiplicity >= absorbing_fixed_points,
        slack: multiplicity.saturating_sub(absorbing_fixed_points),
    }
}

/// Eigenvalue-1 multiplicity of the map under `symbol` against the number of
/// states absorbing under every symbol.
pub fn corollary_check(a: &Automaton, symbol: usize) -> CorollaryReport {
    let map = a.symbol_map(symbol);
    corollary(multiplicity_of_one(&map), a.absorbing_states().len())
}

/// Same check for an autonomous map, whose absorbing fixed points are its
/// fixed points.
pub fn corollary_check_map(map: &DeterministicMap) -> CorollaryReport {
    corollary(multiplicity_of_one(map), map.fixed_points().len())
}

/// Directed multigraph with nonzero complex rational edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    names: Vec<String>,
    edges: Vec<(usize, usize, QComplex)>,
}

impl WeightedDigraph {
    pub fn new(names: Vec<String>, edges: Vec<(usize, usize, QComplex)>) -> Result<Self> {
        check_distinct(&names)?;
        for (p, q, w) in &edges {
            if *p >= names.len() || *q >= names.len() {
                return Err(Error::UnknownState(format!("#{}", p.max(q))));
            }
            if w.is_zero() {
                return Err(Error::ZeroWeight {
                    from: names[*p].clone(),
                    to: names[*q].clone(),
                });
            }
        }
        Ok(WeightedDigraph { names, edges })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edges(&self) -> &[(usize, usize, QComplex)] {
        &self.edges
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleCheck {
    /// `potential[q] = w · potential[p]` along every edge that lies on a
    /// cycle; each strongly connected component is rooted at potential 1.
    Consistent { potentials: Vec<QComplex> },
    /// A simple directed cycle (vertex sequence, first vertex not repeated)
    /// whose weight product is not 1.
    Violation { cycle: Vec<usize>, product: QComplex },
}

/// Tests whether every directed cycle has weight product 1.
///
/// Inside a strongly connected component the directed cycles generate the
/// whole cycle space, so consistency there is equivalent to the existence of
/// multiplicative potentials; edges between components lie on no cycle.
pub fn cycle_weight_check(g: &WeightedDigraph) -> CycleCheck {
    let n = g.len();
    let comp = strongly_connected_components(n, &g.edges);
    let mut potentials: Vec<Option<QComplex>> = vec![None; n];
    // edge index of the out-tree parent and in-tree parent per vertex
    let mut out_parent: Vec<Option<usize>> = vec![None; n];
    let mut in_parent: Vec<Option<usize>> = vec![None; n];
    let mut roots = vec![usize::MAX; n];

    let mut out_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, (p, q, _)) in g.edges.iter().enumerate() {
        if comp[*p] == comp[*q] {
            out_adj[*p].push(i);
            in_adj[*q].push(i);
        }
    }

    for root in 0..n {
        if potentials[root].is_some() {
            continue;
        }
        roots[root] = root;
        potentials[root] = Some(QComplex::one());
        let mut queue = VecDeque::from([root]);
        while let Some(p) = queue.pop_front() {
            for &e in &out_adj[p] {
                let (_, q, w) = &g.edges[e];
                if potentials[*q].is_none() {
                    let phi = potentials[p].as_ref().expect("visited") * w;
                    potentials[*q] = Some(phi);
                    out_parent[*q] = Some(e);
                    roots[*q] = root;
                    queue.push_back(*q);
                }
            }
        }
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(q) = queue.pop_front() {
            for &e in &in_adj[q] {
                let p = g.edges[e].0;
                if !seen[p] {
                    seen[p] = true;
                    in_parent[p] = Some(e);
                    queue.push_back(p);
                }
            }
        }
    }

    let potentials: Vec<QComplex> = potentials.into_iter().map(|p| p.expect("all rooted")).collect();
    for (e, (p, q, w)) in g.edges.iter().enumerate() {
        if comp[*p] != comp[*q] {
            continue;
        }
        if &potentials[*p] * w == potentials[*q] {
            continue;
        }
        let root = roots[*p];
        let to_root = |v: usize| path_to_root(v, root, &in_parent, &g.edges, true);
        let from_root = |v: usize| path_to_root(v, root, &out_parent, &g.edges, false);
        let mut first: Vec<usize> = from_root(*p);
        first.push(e);
        first.extend(to_root(*q));
        let mut second: Vec<usize> = from_root(*q);
        second.extend(to_root(*q));
        for walk in [first, second] {
            if let Some((cycle, product)) = non_unit_cycle(&walk, g) {
                return CycleCheck::Violation { cycle, product };
            }
        }
        unreachable!("one of the two closed walks has a product different from 1");
    }
    CycleCheck::Consistent { potentials }
}

/// Edge sequence between `v` and `root` along tree parents: towards the root
/// for the in-tree, away from it for the out-tree.
fn path_to_root(
    v: usize,
    root: usize,
    parent: &[Option<usize>],
    edges: &[(usize, usize, QComplex)],
    towards_root: bool,
) -> Vec<usize> {
    let mut path = Vec::new();
    let mut cur = v;
    while cur != root {
        let e = parent[cur].expect("tree spans the component");
        path.push(e);
        cur = if towards_root { edges[e].1 } else { edges[e].0 };
    }
    if !towards_root {
        path.reverse();
    }
    path
}

/// Splits a closed walk into simple cycles and returns one whose product is
/// not 1, if any.
fn non_unit_cycle(walk: &[usize], g: &WeightedDigraph) -> Option<(Vec<usize>, QComplex)> {
    let &first = walk.first()?;
    let mut stack_vertices: Vec<usize> = vec![g.edges[first].0];
    let mut stack_edges: Vec<usize> = Vec::new();
    for &e in walk {
        let (_, q, _) = &g.edges[e];
        stack_edges.push(e);
        if let Some(at) = stack_vertices.iter().position(|v| v == q) {
            let cycle_edges: Vec<usize> = stack_edges.drain(at..).collect();
            let cycle: Vec<usize> = stack_vertices.drain(at + 1..).collect();
            let mut vertices = vec![stack_vertices[at]];
            vertices.extend(cycle);
            let product = cycle_edges
                .iter()
                .fold(QComplex::one(), |acc, &i| &acc * &g.edges[i].2);
            if product != QComplex::one() {
                return Some((vertices, product));
            }
        } else {
            stack_vertices.push(*q);
        }
    }
    None
}

/// Tarjan's algorithm; returns a component id per vertex.
fn strongly_connected_components(n: usize, edges: &[(usize, usize, QComplex)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for (p, q, _) in edges {
        adj[*p].push(*q);
    }
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut counter = 0;
    let mut n_comp = 0;
    for s in 0..n {
        if index[s] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, next child position)
        let mut call = vec![(s, 0usize)];
        index[s] = counter;
        low[s] = counter;
        counter += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("nonempty");
                        on_stack[w] = false;
                        comp[w] = n_comp;
                        if w == v {
                            break;
                        }
                    }
                    n_comp += 1;
                }
            }
        }
    }
    comp
}
