use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside its [`Alphabet`].
pub type Symbol = u16;

/// Ordered finite alphabet. Symbol order fixes the lexicographic order used
/// for canonical outputs and witness selection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub const MAX_SYMBOLS: usize = 4096;

    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.len() < 2 {
            return Err(Error::AlphabetTooSmall(symbols.len()));
        }
        if symbols.len() > Self::MAX_SYMBOLS {
            return Err(Error::AlphabetTooLarge {
                max: Self::MAX_SYMBOLS,
            });
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.contains(|c: char| c.is_whitespace() || c == ',' || c == '#') {
                return Err(Error::UnknownSymbol(s.clone()));
            }
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet {
            symbols: vec!["0".into(), "1".into()],
        }
    }

    /// `{0, 1, …, n-1}` with decimal names.
    pub fn numeric(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.symbols[s as usize]
    }

    pub fn index_of(&self, name: &str) -> Result<Symbol> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .map(|i| i as Symbol)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn check(&self, s: Symbol) -> Result<Symbol> {
        if (s as usize) < self.symbols.len() {
            Ok(s)
        } else {
            Err(Error::SymbolOutOfRange(s as usize))
        }
    }

    /// True when every symbol is a single character, so words can be written
    /// without separators.
    pub fn is_compact(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word. Compact alphabets accept plain strings like `0110`;
    /// otherwise symbols are comma separated (`A:0,1,0`).
    pub fn parse_word(&self, text: &str) -> Result<Vec<Symbol>> {
        if self.is_compact() && !text.contains(',') {
            text.chars()
                .map(|c| self.index_of(c.encode_utf8(&mut [0; 4])))
                .collect()
        } else {
            text.split(',').map(|t| self.index_of(t)).collect()
        }
    }

    pub fn format_word(&self, word: &[Symbol]) -> String {
        let sep = if self.is_compact() { "" } else { "," };
        word.iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}

/// Closed integer index range `[lo, hi]`, `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: i64,
    hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::BadInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub(crate) fn with_width(lo: i64, width: usize) -> Self {
        debug_assert!(width > 0);
        Interval {
            lo,
            hi: lo + width as i64 - 1,
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, i: i64) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn covers(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Widens by `left` columns on the left and `right` on the right.
    pub fn grow(&self, left: usize, right: usize) -> Interval {
        Interval {
            lo: self.lo - left as i64,
            hi: self.hi + right as i64,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A finite word placed on the integer line: `symbols[k]` sits at index
/// `lo + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub lo: i64,
    pub symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(lo: i64, symbols: Vec<Symbol>) -> Self {
        Word { lo, symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.symbols.len() as i64 - 1
    }

    /// `None` for the empty word.
    pub fn interval(&self) -> Option<Interval> {
        (!self.symbols.is_empty()).then(|| Interval::with_width(self.lo, self.symbols.len()))
    }

    pub fn at(&self, i: i64) -> Option<Symbol> {
        if i < self.lo {
            return None;
        }
        self.symbols.get((i - self.lo) as usize).copied()
    }

    /// The sub-word on `iv`, if covered.
    pub fn restrict(&self, iv: &Interval) -> Option<&[Symbol]> {
        let own = self.interval()?;
        own.covers(iv).then(|| {
            let start = (iv.lo() - self.lo) as usize;
            &self.symbols[start..start + iv.width()]
        })
    }
}

/// Finite prefix pattern: the set of points whose coordinates on
/// `[lo, lo + len - 1]` spell `word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cylinder {
    pub lo: i64,
    pub word: Vec<Symbol>,
}

impl Cylinder {
    pub fn new(lo: i64, word: Vec<Symbol>) -> Self {
        Cylinder { lo, word }
    }

    pub fn parse(alphabet: &Alphabet, lo: i64, word: &str) -> Result<Self> {
        Ok(Cylinder {
            lo,
            word: alphabet.parse_word(word)?,
        })
    }
}
