//! Reduced, quasi-ordered decision diagrams over fixed-length words.
//!
//! A diagram of width `n` denotes a set of words of length `n`. Internal
//! nodes at level `k` branch on the symbol at position `k` and point to
//! nodes at level `k + 1` or to a terminal. A terminal reached before level
//! `n` stands for every continuation (`TRUE`) or none (`FALSE`). Nodes whose
//! children are all `FALSE` (resp. all `TRUE`) are collapsed into that
//! terminal, and nodes are hash-consed, so every sub-function has exactly one
//! representative. After [`Builder::finish`] nodes are numbered in depth-first
//! preorder, which makes structural equality coincide with set equality.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::alphabet::Symbol;

pub(crate) type NodeId = u32;
pub(crate) const FALSE: NodeId = 0;
pub(crate) const TRUE: NodeId = 1;

#[inline]
fn is_terminal(id: NodeId) -> bool {
    id < 2
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Node {
    level: u32,
    children: Box<[NodeId]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Diagram {
    width: u32,
    arity: u16,
    nodes: Vec<Node>,
    root: NodeId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BoolOp {
    And,
    Or,
}

pub(crate) struct Builder {
    arity: u16,
    nodes: Vec<Node>,
    unique: HashMap<Node, NodeId>,
}

impl Builder {
    pub(crate) fn new(arity: u16) -> Self {
        Builder {
            arity,
            nodes: Vec::new(),
            unique: HashMap::new(),
        }
    }

    pub(crate) fn mk(&mut self, level: u32, children: Vec<NodeId>) -> NodeId {
        debug_assert_eq!(children.len(), self.arity as usize);
        if children.iter().all(|&c| c == FALSE) {
            return FALSE;
        }
        if children.iter().all(|&c| c == TRUE) {
            return TRUE;
        }
        let node = Node {
            level,
            children: children.into_boxed_slice(),
        };
        if let Some(&id) = self.unique.get(&node) {
            return id;
        }
        let id = self.nodes.len() as NodeId + 2;
        self.nodes.push(node.clone());
        self.unique.insert(node, id);
        id
    }

    /// Renumbers the nodes reachable from `root` in preorder, shifting levels
    /// down by `level_shift`.
    fn finish_shifted(self, width: u32, root: NodeId, level_shift: u32) -> Diagram {
        let mut remap: Vec<NodeId> = vec![NodeId::MAX; self.nodes.len()];
        let mut out: Vec<Node> = Vec::new();
        let new_root = renumber(&self.nodes, root, level_shift, &mut remap, &mut out);
        Diagram {
            width,
            arity: self.arity,
            nodes: out,
            root: new_root,
        }
    }

    pub(crate) fn finish(self, width: u32, root: NodeId) -> Diagram {
        self.finish_shifted(width, root, 0)
    }
}

fn renumber(
    src: &[Node],
    id: NodeId,
    shift: u32,
    remap: &mut [NodeId],
    out: &mut Vec<Node>,
) -> NodeId {
    if is_terminal(id) {
        return id;
    }
    let idx = (id - 2) as usize;
    if remap[idx] != NodeId::MAX {
        return remap[idx];
    }
    let slot = out.len();
    let new_id = slot as NodeId + 2;
    remap[idx] = new_id;
    out.push(Node {
        level: src[idx].level - shift,
        children: Box::new([]),
    });
    let children: Vec<NodeId> = src[idx]
        .children
        .iter()
        .map(|&c| renumber(src, c, shift, remap, out))
        .collect();
    out[slot].children = children.into_boxed_slice();
    new_id
}

impl Diagram {
    pub(crate) fn constant(width: u32, arity: u16, value: bool) -> Self {
        Diagram {
            width,
            arity,
            nodes: Vec::new(),
            root: if value { TRUE } else { FALSE },
        }
    }

    pub(crate) fn from_words(width: u32, arity: u16, words: &mut Vec<Vec<Symbol>>) -> Self {
        words.sort_unstable();
        words.dedup();
        let mut b = Builder::new(arity);
        let root = build_from_sorted(&mut b, 0, width, words);
        b.finish(width, root)
    }

    pub(crate) fn width(&self) -> u32 {
        self.width
    }

    pub(crate) fn node_count(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub(crate) fn child(&self, id: NodeId, s: Symbol) -> NodeId {
        if is_terminal(id) {
            id
        } else {
            self.nodes[(id - 2) as usize].children[s as usize]
        }
    }

    pub(crate) fn is_constant(&self) -> Option<bool> {
        match self.root {
            FALSE => Some(false),
            TRUE => Some(true),
            _ => None,
        }
    }

    pub(crate) fn contains(&self, word: &[Symbol]) -> bool {
        debug_assert_eq!(word.len(), self.width as usize);
        let mut id = self.root;
        for &s in word {
            if is_terminal(id) {
                break;
            }
            id = self.child(id, s);
        }
        id == TRUE
    }

    /// Same set, viewed on a wider interval: `left` free columns are
    /// prepended and `right` free columns appended.
    pub(crate) fn widen(&self, left: u32, right: u32) -> Diagram {
        if is_terminal(self.root) || left == 0 {
            let mut d = self.clone();
            d.width += left + right;
            return d;
        }
        let mut nodes: Vec<Node> = Vec::with_capacity(self.nodes.len() + left as usize);
        // chain of free nodes first, then the shifted original nodes
        for k in 0..left {
            let next = if k + 1 < left {
                k + 3
            } else {
                self.root + left
            };
            nodes.push(Node {
                level: k,
                children: vec![next; self.arity as usize].into_boxed_slice(),
            });
        }
        for n in &self.nodes {
            nodes.push(Node {
                level: n.level + left,
                children: n
                    .children
                    .iter()
                    .map(|&c| if is_terminal(c) { c } else { c + left })
                    .collect(),
            });
        }
        Diagram {
            width: self.width + left + right,
            arity: self.arity,
            nodes,
            root: 2,
        }
    }

    /// Drops free columns at both ends. Returns the trimmed diagram and the
    /// number of columns removed on the left.
    pub(crate) fn strip(&self) -> (Diagram, u32) {
        let mut root = self.root;
        let mut shift = 0u32;
        while !is_terminal(root) {
            let n = &self.nodes[(root - 2) as usize];
            let first = n.children[0];
            if n.children.iter().all(|&c| c == first) {
                root = first;
                shift += 1;
            } else {
                break;
            }
        }
        if is_terminal(root) {
            return (Diagram::constant(0, self.arity, root == TRUE), shift);
        }
        let max_level = self.max_reachable_level(root);
        let width = max_level + 1 - shift;
        let mut remap = vec![NodeId::MAX; self.nodes.len()];
        let mut out = Vec::new();
        let new_root = renumber(&self.nodes, root, shift, &mut remap, &mut out);
        (
            Diagram {
                width,
                arity: self.arity,
                nodes: out,
                root: new_root,
            },
            shift,
        )
    }

    fn max_reachable_level(&self, root: NodeId) -> u32 {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![root];
        let mut max = 0;
        while let Some(id) = stack.pop() {
            if is_terminal(id) || std::mem::replace(&mut seen[(id - 2) as usize], true) {
                continue;
            }
            let n = &self.nodes[(id - 2) as usize];
            max = max.max(n.level);
            stack.extend(n.children.iter().copied());
        }
        max
    }

    pub(crate) fn complement(&self) -> Diagram {
        let mut b = Builder::new(self.arity);
        let mut memo = HashMap::new();
        let root = self.complement_rec(self.root, &mut b, &mut memo);
        b.finish(self.width, root)
    }

    fn complement_rec(
        &self,
        id: NodeId,
        b: &mut Builder,
        memo: &mut HashMap<NodeId, NodeId>,
    ) -> NodeId {
        match id {
            FALSE => return TRUE,
            TRUE => return FALSE,
            _ => {}
        }
        if let Some(&r) = memo.get(&id) {
            return r;
        }
        let n = &self.nodes[(id - 2) as usize];
        let children = n
            .children
            .iter()
            .map(|&c| self.complement_rec(c, b, memo))
            .collect();
        let r = b.mk(n.level, children);
        memo.insert(id, r);
        r
    }

    /// Pointwise Boolean combination of two diagrams of equal width.
    pub(crate) fn apply(&self, other: &Diagram, op: BoolOp) -> Diagram {
        assert_eq!(self.width, other.width);
        assert_eq!(self.arity, other.arity);
        let mut b = Builder::new(self.arity);
        let mut memo = HashMap::new();
        let root = apply_rec(self, other, self.root, other.root, 0, op, &mut b, &mut memo);
        b.finish(self.width, root)
    }

    /// Set of words `u` of length `width + window - 1` whose block image
    /// (`rule` applied to every length-`window` factor) lies in this set.
    /// `rule` is indexed by the base-`arity` value of the window, most
    /// significant symbol first.
    pub(crate) fn block_preimage(&self, rule: &[Symbol], window: u32) -> Diagram {
        let context = window - 1;
        let width = self.width + context;
        if let Some(v) = self.is_constant() {
            return Diagram::constant(width, self.arity, v);
        }
        let sigma = self.arity as u64;
        let ctx_modulus = sigma.pow(context);
        let mut b = Builder::new(self.arity);
        let mut memo = HashMap::new();
        let mut pre = Preimage {
            src: self,
            rule,
            context,
            sigma,
            ctx_modulus,
            builder: &mut b,
            memo: &mut memo,
        };
        let root = pre.go(0, 0, self.root);
        b.finish(width, root)
    }

    pub(crate) fn count(&self) -> BigUint {
        let mut memo: HashMap<NodeId, BigUint> = HashMap::new();
        self.count_rec(self.root, 0, &mut memo)
    }

    fn count_rec(&self, id: NodeId, level: u32, memo: &mut HashMap<NodeId, BigUint>) -> BigUint {
        match id {
            FALSE => return BigUint::zero(),
            TRUE => return BigUint::from(self.arity).pow(self.width - level),
            _ => {}
        }
        if let Some(c) = memo.get(&id) {
            return c.clone();
        }
        let n = &self.nodes[(id - 2) as usize];
        let mut total = BigUint::zero();
        for &c in n.children.iter() {
            total += self.count_rec(c, n.level + 1, memo);
        }
        memo.insert(id, total.clone());
        total
    }

    /// Lexicographically least member.
    pub(crate) fn first_word(&self) -> Option<Vec<Symbol>> {
        if self.root == FALSE {
            return None;
        }
        let mut out = Vec::with_capacity(self.width as usize);
        let mut id = self.root;
        while out.len() < self.width as usize {
            if id == TRUE {
                out.push(0);
                continue;
            }
            let n = &self.nodes[(id - 2) as usize];
            let s = n
                .children
                .iter()
                .position(|&c| c != FALSE)
                .expect("reduced node has a non-false child");
            out.push(s as Symbol);
            id = n.children[s];
        }
        Some(out)
    }

    /// All members in lexicographic order. Exponential in general.
    pub(crate) fn words(&self) -> Vec<Vec<Symbol>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.width as usize);
        self.words_rec(self.root, &mut prefix, &mut out);
        out
    }

    fn words_rec(&self, id: NodeId, prefix: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
        if id == FALSE {
            return;
        }
        if prefix.len() == self.width as usize {
            out.push(prefix.clone());
            return;
        }
        for s in 0..self.arity {
            prefix.push(s);
            self.words_rec(self.child(id, s), prefix, out);
            prefix.pop();
        }
    }
}

fn build_from_sorted(b: &mut Builder, level: u32, width: u32, words: &[Vec<Symbol>]) -> NodeId {
    if words.is_empty() {
        return FALSE;
    }
    if level == width {
        return TRUE;
    }
    let mut children = vec![FALSE; b.arity as usize];
    let mut start = 0;
    while start < words.len() {
        let s = words[start][level as usize];
        let end = start + words[start..].partition_point(|w| w[level as usize] == s);
        children[s as usize] = build_from_sorted(b, level + 1, width, &words[start..end]);
        start = end;
    }
    b.mk(level, children)
}

#[allow(clippy::too_many_arguments)]
fn apply_rec(
    a: &Diagram,
    c: &Diagram,
    x: NodeId,
    y: NodeId,
    level: u32,
    op: BoolOp,
    b: &mut Builder,
    memo: &mut HashMap<(NodeId, NodeId), NodeId>,
) -> NodeId {
    match op {
        BoolOp::And => {
            if x == FALSE || y == FALSE {
                return FALSE;
            }
            if x == TRUE && y == TRUE {
                return TRUE;
            }
        }
        BoolOp::Or => {
            if x == TRUE || y == TRUE {
                return TRUE;
            }
            if x == FALSE && y == FALSE {
                return FALSE;
            }
        }
    }
    if let Some(&r) = memo.get(&(x, y)) {
        return r;
    }
    let children = (0..a.arity)
        .map(|s| apply_rec(a, c, a.child(x, s), c.child(y, s), level + 1, op, b, memo))
        .collect();
    let r = b.mk(level, children);
    memo.insert((x, y), r);
    r
}

struct Preimage<'a> {
    src: &'a Diagram,
    rule: &'a [Symbol],
    context: u32,
    sigma: u64,
    ctx_modulus: u64,
    builder: &'a mut Builder,
    memo: &'a mut HashMap<(u32, u64, NodeId), NodeId>,
}

impl Preimage<'_> {
    // `ctx` holds the last min(level, context) symbols read, base sigma.
    fn go(&mut self, level: u32, ctx: u64, node: NodeId) -> NodeId {
        if level >= self.context && is_terminal(node) {
            return node;
        }
        let key = (level, ctx, node);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let mut children = Vec::with_capacity(self.sigma as usize);
        for s in 0..self.sigma {
            let code = ctx * self.sigma + s;
            let child = if level < self.context {
                self.go(level + 1, code, node)
            } else {
                let image = self.rule[code as usize];
                let next = self.src.child(node, image);
                let next_ctx = if self.context == 0 {
                    0
                } else {
                    code % self.ctx_modulus
                };
                self.go(level + 1, next_ctx, next)
            };
            children.push(child);
        }
        let r = self.builder.mk(level, children);
        self.memo.insert(key, r);
        r
    }
}
