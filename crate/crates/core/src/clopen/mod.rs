//! Clopen subsets of the two-sided full shift `Σ^ℤ`.
//!
//! Every clopen set is a finite union of cylinders, so it can be written as a
//! set of words on a finite interval. [`ClopenSet`] keeps that pair in
//! canonical form: the interval runs from the first to the last coordinate
//! the set actually depends on, and the word set is stored as a reduced
//! decision diagram. The full space and the empty set carry no interval.
//! Two canonical values are equal exactly when they denote the same subset.
//!
//! The usual Cantor metric `d(x, x') = 2^{-k}` (with `k` the first index
//! where the points differ) never enters the computations; cylinders on
//! `[-k, k]` are its balls.

mod diagram;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::alphabet::{Alphabet, Cylinder, Interval, Symbol, Word};
use crate::error::{Error, Result};

pub(crate) use diagram::{BoolOp, Diagram};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClopenSet {
    alphabet: Arc<Alphabet>,
    interval: Option<Interval>,
    words: Diagram,
}

impl ClopenSet {
    pub fn full(alphabet: Arc<Alphabet>) -> Self {
        let arity = alphabet.len() as u16;
        ClopenSet {
            alphabet,
            interval: None,
            words: Diagram::constant(0, arity, true),
        }
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        let arity = alphabet.len() as u16;
        ClopenSet {
            alphabet,
            interval: None,
            words: Diagram::constant(0, arity, false),
        }
    }

    pub fn from_cylinder(alphabet: Arc<Alphabet>, cylinder: &Cylinder) -> Result<Self> {
        Self::from_words(alphabet, cylinder.lo, cylinder.word.len(), vec![cylinder.word.clone()])
    }

    /// `{x : x_lo … x_{lo+k-1} = word}` for a word given as text.
    pub fn cylinder(alphabet: Arc<Alphabet>, lo: i64, word: &str) -> Result<Self> {
        let c = Cylinder::parse(&alphabet, lo, word)?;
        Self::from_cylinder(alphabet, &c)
    }

    /// The set of points whose restriction to `[lo, lo + width - 1]` is one
    /// of `words`.
    pub fn from_words(
        alphabet: Arc<Alphabet>,
        lo: i64,
        width: usize,
        mut words: Vec<Vec<Symbol>>,
    ) -> Result<Self> {
        for w in &words {
            if w.len() != width {
                return Err(Error::WordLength {
                    expected: width,
                    got: w.len(),
                });
            }
            for &s in w {
                alphabet.check(s)?;
            }
        }
        let d = Diagram::from_words(width as u32, alphabet.len() as u16, &mut words);
        Ok(Self::from_parts(alphabet, lo, d))
    }

    /// Wraps a diagram whose column 0 sits at index `lo`, canonicalizing it.
    pub(crate) fn from_parts(alphabet: Arc<Alphabet>, lo: i64, d: Diagram) -> Self {
        let (d, shift) = d.strip();
        let interval = if d.is_constant().is_some() {
            None
        } else {
            Some(Interval::with_width(lo + shift as i64, d.width() as usize))
        };
        ClopenSet {
            alphabet,
            interval,
            words: d,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// `None` for the full space and the empty set.
    pub fn interval(&self) -> Option<Interval> {
        self.interval
    }

    pub(crate) fn diagram(&self) -> &Diagram {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_constant() == Some(false)
    }

    pub fn is_full(&self) -> bool {
        self.words.is_constant() == Some(true)
    }

    pub fn equals(&self, other: &ClopenSet) -> bool {
        self == other
    }

    fn check_alphabet(&self, other: &ClopenSet) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// The word set viewed on `iv`, which must cover the set's own interval.
    pub(crate) fn diagram_on(&self, iv: &Interval) -> Diagram {
        match self.interval {
            None => {
                let mut d = self.words.clone();
                d = d.widen(0, iv.width() as u32);
                d
            }
            Some(own) => {
                debug_assert!(iv.covers(&own));
                let left = (own.lo() - iv.lo()) as u32;
                let right = (iv.hi() - own.hi()) as u32;
                self.words.widen(left, right)
            }
        }
    }

    fn combine(&self, other: &ClopenSet, op: BoolOp) -> Result<ClopenSet> {
        self.check_alphabet(other)?;
        let hull = match (self.interval, other.interval) {
            (Some(a), Some(b)) => a.hull(&b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => {
                let a = self.is_full();
                let b = other.is_full();
                let v = match op {
                    BoolOp::And => a && b,
                    BoolOp::Or => a || b,
                };
                return Ok(if v {
                    Self::full(self.alphabet.clone())
                } else {
                    Self::empty(self.alphabet.clone())
                });
            }
        };
        let d = self.diagram_on(&hull).apply(&other.diagram_on(&hull), op);
        Ok(Self::from_parts(self.alphabet.clone(), hull.lo(), d))
    }

    pub fn union(&self, other: &ClopenSet) -> Result<ClopenSet> {
        self.combine(other, BoolOp::Or)
    }

    pub fn intersect(&self, other: &ClopenSet) -> Result<ClopenSet> {
        self.combine(other, BoolOp::And)
    }

    pub fn complement(&self) -> ClopenSet {
        let d = self.words.complement();
        match self.interval {
            None => ClopenSet {
                alphabet: self.alphabet.clone(),
                interval: None,
                words: d,
            },
            // complementing cannot introduce free boundary columns
            Some(iv) => ClopenSet {
                alphabet: self.alphabet.clone(),
                interval: Some(iv),
                words: d,
            },
        }
    }

    pub fn difference(&self, other: &ClopenSet) -> Result<ClopenSet> {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &ClopenSet) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn is_disjoint(&self, other: &ClopenSet) -> Result<bool> {
        Ok(self.intersect(other)?.is_empty())
    }

    /// Membership of any point extending `w`. `w` must cover the interval.
    pub fn member(&self, w: &Word) -> Result<bool> {
        match self.interval {
            None => Ok(self.is_full()),
            Some(iv) => {
                let sub = w.restrict(&iv).ok_or(Error::WordDoesNotCover {
                    word_lo: w.lo,
                    word_hi: w.hi(),
                    lo: iv.lo(),
                    hi: iv.hi(),
                })?;
                Ok(self.words.contains(sub))
            }
        }
    }

    /// Number of words on the canonical interval (1 for the full space).
    pub fn word_count(&self) -> BigUint {
        self.words.count()
    }

    /// Words on the canonical interval in lexicographic order. The full
    /// space yields the single empty word.
    pub fn words(&self) -> Vec<Vec<Symbol>> {
        self.words.words()
    }

    /// Lexicographically least word of the set on its canonical interval.
    pub fn first_word(&self) -> Option<Word> {
        let lo = self.interval.map_or(0, |iv| iv.lo());
        self.words.first_word().map(|s| Word::new(lo, s))
    }

    pub fn node_count(&self) -> usize {
        self.words.node_count()
    }
}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 8;
        match self.interval {
            None if self.is_full() => write!(f, "FULL"),
            None => write!(f, "EMPTY"),
            Some(iv) => {
                let count = self.word_count();
                write!(f, "{iv}{{")?;
                if count <= BigUint::from(SHOWN) {
                    let words: Vec<String> = self
                        .words()
                        .iter()
                        .map(|w| self.alphabet.format_word(w))
                        .collect();
                    write!(f, "{}", words.join(" "))?;
                } else {
                    write!(f, "{count} words")?;
                }
                write!(f, "}}")
            }
        }
    }
}
