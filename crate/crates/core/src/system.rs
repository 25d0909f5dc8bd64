//! Continuous self-maps of `Σ^ℤ` given as sliding block codes, and exact
//! preimages of clopen sets under them.

use std::sync::Arc;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::tm::{Cell, Move, TmSpec};

/// Resource guard for preimage computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest interval width a preimage may produce before canonicalization.
    pub max_width: usize,
}

impl Limits {
    pub const DEFAULT_MAX_WIDTH: usize = 64;

    pub fn with_max_width(max_width: usize) -> Self {
        Limits { max_width }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_width: Self::DEFAULT_MAX_WIDTH,
        }
    }
}

/// `y_i = rule(x_{i-memory} … x_{i+anticipation})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlidingBlockCode {
    alphabet: Arc<Alphabet>,
    memory: usize,
    anticipation: usize,
    /// Indexed by the base-σ value of the window, leftmost symbol most
    /// significant.
    rule: Vec<Symbol>,
}

impl SlidingBlockCode {
    pub fn new(
        alphabet: Arc<Alphabet>,
        memory: usize,
        anticipation: usize,
        rule: Vec<Symbol>,
    ) -> Result<Self> {
        let expected = table_len(alphabet.len(), memory + anticipation + 1)?;
        if rule.len() != expected {
            return Err(Error::RuleNotTotal(format!(
                "table has {} entries, expected {expected}",
                rule.len()
            )));
        }
        for &s in &rule {
            alphabet.check(s)?;
        }
        Ok(SlidingBlockCode {
            alphabet,
            memory,
            anticipation,
            rule,
        })
    }

    pub fn from_fn(
        alphabet: Arc<Alphabet>,
        memory: usize,
        anticipation: usize,
        f: impl Fn(&[Symbol]) -> Symbol,
    ) -> Result<Self> {
        let window = memory + anticipation + 1;
        let n = table_len(alphabet.len(), window)?;
        let sigma = alphabet.len();
        let mut buf = vec![0 as Symbol; window];
        let rule = (0..n)
            .map(|code| {
                decode_window(code, sigma, &mut buf);
                f(&buf)
            })
            .collect();
        Self::new(alphabet, memory, anticipation, rule)
    }

    /// Left shift: `y_i = x_{i+1}`.
    pub fn shift(alphabet: Arc<Alphabet>) -> Self {
        Self::from_fn(alphabet, 0, 1, |w| w[1]).expect("shift table is total")
    }

    /// Elementary cellular automaton in Wolfram numbering.
    pub fn eca(rule_number: u32) -> Result<Self> {
        if rule_number > 255 {
            return Err(Error::EcaRuleRange(rule_number));
        }
        let rule = (0..8).map(|i| ((rule_number >> i) & 1) as Symbol).collect();
        Self::new(Arc::new(Alphabet::binary()), 1, 1, rule)
    }

    /// Applies `perm[s]` to every symbol independently.
    pub fn permutation(alphabet: Arc<Alphabet>, perm: Vec<Symbol>) -> Result<Self> {
        let mut seen = vec![false; alphabet.len()];
        if perm.len() != alphabet.len() {
            return Err(Error::InvalidPermutation(format!(
                "{} images for {} symbols",
                perm.len(),
                alphabet.len()
            )));
        }
        for &p in &perm {
            alphabet.check(p)?;
            if std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::InvalidPermutation(format!(
                    "`{}` is hit twice",
                    alphabet.name(p)
                )));
            }
        }
        Self::new(alphabet, 0, 0, perm)
    }

    /// One Turing machine step as a radius-1 code over `Γ ∪ Q×Γ`.
    ///
    /// Windows with exactly one head cell follow the transition table; any
    /// window with zero or several heads leaves its centre unchanged, and
    /// halting heads never move.
    pub fn compile_tm(spec: &TmSpec) -> Result<Self> {
        let alphabet = Arc::new(Alphabet::new(spec.compiled_symbols()?)?);
        Self::from_fn(alphabet, 1, 1, |w| {
            let cells = [0, 1, 2].map(|k| spec.decode_cell(w[k] as usize));
            if cells.iter().filter(|c| c.is_head()).count() != 1 {
                return w[1];
            }
            let centre = cells[1];
            let out = match (cells[0], centre, cells[2]) {
                (_, Cell::Head(q, g), _) => match spec.transition(q, g) {
                    None => centre,
                    Some(t) => Cell::Tape(t.write),
                },
                (Cell::Head(q, g), Cell::Tape(b), _) => match spec.transition(q, g) {
                    Some(t) if t.dir == Move::Right => Cell::Head(t.next, b),
                    _ => centre,
                },
                (_, Cell::Tape(b), Cell::Head(q, g)) => match spec.transition(q, g) {
                    Some(t) if t.dir == Move::Left => Cell::Head(t.next, b),
                    _ => centre,
                },
                _ => centre,
            };
            spec.encode_cell(out) as Symbol
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn anticipation(&self) -> usize {
        self.anticipation
    }

    pub fn window_len(&self) -> usize {
        self.memory + self.anticipation + 1
    }

    pub fn rule_table(&self) -> &[Symbol] {
        &self.rule
    }

    /// The image symbol of one window.
    pub fn local_rule(&self, window: &[Symbol]) -> Symbol {
        debug_assert_eq!(window.len(), self.window_len());
        let sigma = self.alphabet.len();
        let code = window.iter().fold(0usize, |acc, &s| acc * sigma + s as usize);
        self.rule[code]
    }

    /// For radius-0 codes, the symbol map.
    pub fn as_permutation(&self) -> Option<&[Symbol]> {
        (self.memory == 0 && self.anticipation == 0).then_some(&self.rule[..])
    }

    /// Forward image of a finite word: the result sits on
    /// `[lo + memory, hi - anticipation]` and is empty when `w` is shorter
    /// than a window.
    pub fn apply_block(&self, w: &Word) -> Word {
        let n = self.window_len();
        let symbols = if w.len() < n {
            Vec::new()
        } else {
            w.symbols.windows(n).map(|win| self.local_rule(win)).collect()
        };
        Word::new(w.lo + self.memory as i64, symbols)
    }

    /// Exact `F^{-1}(A)`.
    pub fn preimage(&self, a: &ClopenSet, limits: &Limits) -> Result<ClopenSet> {
        if a.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let Some(iv) = a.interval() else {
            return Ok(a.clone());
        };
        let width = iv.width() + self.memory + self.anticipation;
        if width > limits.max_width {
            return Err(Error::WidthCap {
                width,
                cap: limits.max_width,
            });
        }
        let d = a
            .diagram()
            .block_preimage(&self.rule, self.window_len() as u32);
        Ok(ClopenSet::from_parts(
            self.alphabet.clone(),
            iv.lo() - self.memory as i64,
            d,
        ))
    }

    /// `F^{-t}(A)`; `t = 0` returns `A`.
    pub fn iterate_preimage(&self, a: &ClopenSet, t: usize, limits: &Limits) -> Result<ClopenSet> {
        let mut cur = a.clone();
        for _ in 0..t {
            cur = self.preimage(&cur, limits)?;
        }
        Ok(cur)
    }
}

fn table_len(sigma: usize, window: usize) -> Result<usize> {
    u32::try_from(window)
        .ok()
        .and_then(|w| sigma.checked_pow(w))
        .filter(|&n| n <= 1 << 24)
        .ok_or_else(|| Error::RuleNotTotal(format!("window of {window} symbols is too large")))
}

fn decode_window(mut code: usize, sigma: usize, buf: &mut [Symbol]) {
    for slot in buf.iter_mut().rev() {
        *slot = (code % sigma) as Symbol;
        code /= sigma;
    }
}

/// Multiplicative order of a permutation.
pub fn permutation_order(perm: &[Symbol]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1usize;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Interval;

    fn bin() -> Arc<Alphabet> {
        Arc::new(Alphabet::binary())
    }

    fn cyl(lo: i64, w: &str) -> ClopenSet {
        ClopenSet::cylinder(bin(), lo, w).unwrap()
    }

    #[test]
    fn shift_preimages_translate() {
        let f = SlidingBlockCode::shift(bin());
        let lim = Limits::default();
        assert_eq!(f.preimage(&cyl(0, "1"), &lim).unwrap(), cyl(1, "1"));
        let full = ClopenSet::full(bin());
        assert_eq!(f.preimage(&full, &lim).unwrap(), full);
        assert_eq!(f.iterate_preimage(&cyl(0, "1"), 3, &lim).unwrap(), cyl(3, "1"));
        assert_eq!(f.iterate_preimage(&cyl(0, "1"), 0, &lim).unwrap(), cyl(0, "1"));
    }

    #[test]
    fn eca_constant_rules() {
        let lim = Limits::default();
        let zero = SlidingBlockCode::eca(0).unwrap();
        assert!(zero.preimage(&cyl(0, "1"), &lim).unwrap().is_empty());
        let one = SlidingBlockCode::eca(255).unwrap();
        assert!(one.preimage(&cyl(0, "1"), &lim).unwrap().is_full());
        assert_eq!(SlidingBlockCode::eca(256), Err(Error::EcaRuleRange(256)));
    }

    #[test]
    fn eca_110_preimage_matches_rule_table() {
        let f = SlidingBlockCode::eca(110).unwrap();
        let p = f.preimage(&cyl(0, "1"), &Limits::default()).unwrap();
        // rule 110 = 0b01101110: windows 110 101 011 010 001 map to 1
        let expected = ClopenSet::from_words(
            bin(),
            -1,
            3,
            ["110", "101", "011", "010", "001"]
                .iter()
                .map(|w| bin().parse_word(w).unwrap())
                .collect(),
        )
        .unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.interval(), Some(Interval::new(-1, 1).unwrap()));
    }

    #[test]
    fn permutation_preimages() {
        let lim = Limits::default();
        let not = SlidingBlockCode::permutation(bin(), vec![1, 0]).unwrap();
        assert_eq!(not.preimage(&cyl(0, "1"), &lim).unwrap(), cyl(0, "0"));
        let id = SlidingBlockCode::permutation(bin(), vec![0, 1]).unwrap();
        let a = cyl(-2, "101");
        assert_eq!(id.preimage(&a, &lim).unwrap(), a);
        assert_eq!(not.iterate_preimage(&cyl(0, "01"), 2, &lim).unwrap(), cyl(0, "01"));

        let tern = Arc::new(Alphabet::numeric(3).unwrap());
        let rot = SlidingBlockCode::permutation(tern.clone(), vec![1, 2, 0]).unwrap();
        assert_eq!(permutation_order(rot.as_permutation().unwrap()), 3);
        let c = ClopenSet::cylinder(tern, 1, "021").unwrap();
        assert_ne!(rot.preimage(&c, &lim).unwrap(), c);
        assert_eq!(rot.iterate_preimage(&c, 3, &lim).unwrap(), c);
    }

    #[test]
    fn bad_permutation() {
        assert!(matches!(
            SlidingBlockCode::permutation(bin(), vec![1, 1]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn width_cap_is_enforced() {
        let f = SlidingBlockCode::eca(110).unwrap();
        let lim = Limits::with_max_width(5);
        let a = cyl(0, "1");
        assert!(f.iterate_preimage(&a, 2, &lim).is_ok());
        assert_eq!(
            f.iterate_preimage(&a, 3, &lim),
            Err(Error::WidthCap { width: 7, cap: 5 })
        );
    }

    #[test]
    fn apply_block_shrinks_window() {
        let f = SlidingBlockCode::eca(110).unwrap();
        let w = Word::new(-2, vec![0, 0, 1, 1, 0]);
        let img = f.apply_block(&w);
        assert_eq!(img.lo, -1);
        assert_eq!(img.symbols, vec![1, 1, 1]);
    }

    #[test]
    fn busy_beaver_first_step() {
        let bb = TmSpec::busy_beaver_2();
        let f = SlidingBlockCode::compile_tm(&bb).unwrap();
        let a0 = bb.encode_cell(Cell::Head(0, 0)) as Symbol;
        let b0 = bb.encode_cell(Cell::Head(1, 0)) as Symbol;
        let w = Word::new(-2, vec![0, 0, a0, 0, 0]);
        let img = f.apply_block(&w);
        assert_eq!(img.lo, -1);
        assert_eq!(img.symbols, vec![0, 1, b0]);
    }

    #[test]
    fn halting_head_is_fixed_and_multi_head_is_frozen() {
        let bb = TmSpec::busy_beaver_2();
        let f = SlidingBlockCode::compile_tm(&bb).unwrap();
        let h1 = bb.encode_cell(Cell::Head(2, 1)) as Symbol;
        assert_eq!(f.local_rule(&[1, h1, 0]), h1);
        assert_eq!(f.local_rule(&[0, 1, h1]), 1);
        let a0 = bb.encode_cell(Cell::Head(0, 0)) as Symbol;
        // two heads in one window: centre unchanged
        assert_eq!(f.local_rule(&[a0, 0, a0]), 0);
        assert_eq!(f.local_rule(&[a0, a0, 0]), a0);
    }
}
