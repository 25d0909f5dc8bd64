//! Dynamical distance and the two topologies on a coarse-grained transition
//! graph.
//!
//! `d(q, q')` is the length of a shortest directed path, `∞` when there is
//! none. A set `O` is dynamically open when it is closed under successors; it
//! is ball-open for radius `n` when `B(q, n) ⊆ O` for every `q ∈ O`, where
//! `B(q, n) = {q' : d(q, q') < n}`.

use std::collections::VecDeque;

use crate::automaton::Automaton;
use crate::error::{Error, Result};

/// Largest vertex count for exhaustive subset enumeration.
pub const MAX_ENUMERATED_VERTICES: usize = 16;

/// Radius used by [`is_ball_open`] unless told otherwise.
pub const DEFAULT_RADIUS: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionDigraph {
    names: Vec<String>,
    succ: Vec<Vec<usize>>,
}

impl TransitionDigraph {
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateState(n.clone()));
            }
        }
        let mut succ = vec![Vec::new(); names.len()];
        for &(p, q) in edges {
            if p >= names.len() || q >= names.len() {
                return Err(Error::UnknownState(format!("#{}", p.max(q))));
            }
            succ[p].push(q);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        Ok(TransitionDigraph { names, succ })
    }

    /// `q → q'` iff some input symbol takes `q` to `q'`.
    pub fn from_automaton(a: &Automaton) -> Self {
        TransitionDigraph {
            names: a.states().to_vec(),
            succ: a.union_successors(),
        }
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

    pub fn successors(&self, q: usize) -> &[usize] {
        &self.succ[q]
    }

    fn bfs(&self, q: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[q] = Some(0);
        let mut queue = VecDeque::from([q]);
        while let Some(p) = queue.pop_front() {
            let d = dist[p].expect("queued vertices have a distance");
            for &s in &self.succ[p] {
                if dist[s].is_none() {
                    dist[s] = Some(d + 1);
                    queue.push_back(s);
                }
            }
        }
        dist
    }
}

/// All-pairs shortest path lengths; `None` is `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    d: Vec<Vec<Option<usize>>>,
}

impl DistanceTable {
    pub fn get(&self, p: usize, q: usize) -> Option<usize> {
        self.d[p][q]
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.d
    }
}

pub fn dynamical_distance(g: &TransitionDigraph) -> DistanceTable {
    DistanceTable {
        d: (0..g.len()).map(|q| g.bfs(q)).collect(),
    }
}

/// `B(q, n)`, sorted.
pub fn ball(g: &TransitionDigraph, q: usize, n: usize) -> Vec<usize> {
    g.bfs(q)
        .into_iter()
        .enumerate()
        .filter(|(_, d)| matches!(d, Some(d) if *d < n))
        .map(|(p, _)| p)
        .collect()
}

fn mask(g: &TransitionDigraph, set: &[usize]) -> Result<Vec<bool>> {
    let mut m = vec![false; g.len()];
    for &q in set {
        if q >= g.len() {
            return Err(Error::UnknownState(format!("#{q}")));
        }
        m[q] = true;
    }
    Ok(m)
}

fn dyn_open_mask(g: &TransitionDigraph, m: &[bool]) -> bool {
    (0..g.len()).all(|q| !m[q] || g.succ[q].iter().all(|&s| m[s]))
}

fn ball_open_mask(g: &TransitionDigraph, m: &[bool], radius: usize) -> bool {
    (0..g.len()).all(|q| !m[q] || ball(g, q, radius).into_iter().all(|p| m[p]))
}

pub fn is_dyn_open(g: &TransitionDigraph, set: &[usize]) -> Result<bool> {
    Ok(dyn_open_mask(g, &mask(g, set)?))
}

pub fn is_ball_open(g: &TransitionDigraph, set: &[usize], radius: usize) -> Result<bool> {
    Ok(ball_open_mask(g, &mask(g, set)?, radius))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyCheck {
    pub equal: bool,
    /// First subset, in binary counting order, on which the two notions of
    /// openness differ.
    pub counterexample: Option<Vec<usize>>,
    pub subsets_checked: u64,
    pub open_sets: u64,
}

/// Compares both notions of openness on every subset of the vertices.
pub fn topologies_equal(g: &TransitionDigraph, radius: usize) -> Result<TopologyCheck> {
    let n = g.len();
    if n > MAX_ENUMERATED_VERTICES {
        return Err(Error::TooManyVertices {
            got: n,
            max: MAX_ENUMERATED_VERTICES,
        });
    }
    let balls: Vec<u32> = (0..n)
        .map(|q| ball(g, q, radius).into_iter().fold(0u32, |acc, p| acc | 1 << p))
        .collect();
    let succ: Vec<u32> = (0..n)
        .map(|q| g.succ[q].iter().fold(0u32, |acc, &p| acc | 1 << p))
        .collect();
    let mut open_sets = 0;
    for bits in 0u32..(1u32 << n) {
        let members = (0..n).filter(|&q| bits >> q & 1 == 1);
        let dyn_open = members.clone().all(|q| succ[q] & !bits == 0);
        let ball_open = members.clone().all(|q| balls[q] & !bits == 0);
        if dyn_open != ball_open {
            return Ok(TopologyCheck {
                equal: false,
                counterexample: Some(members.collect()),
                subsets_checked: u64::from(bits) + 1,
                open_sets,
            });
        }
        open_sets += u64::from(dyn_open);
    }
    Ok(TopologyCheck {
        equal: true,
        counterexample: None,
        subsets_checked: 1u64 << n,
        open_sets,
    })
}
