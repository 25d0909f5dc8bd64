use thiserror::Error;

/// Errors raised by the engine. Parse errors for the text formats live in
/// [`crate::format::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet needs at least two symbols, got {0}")]
    AlphabetTooSmall(usize),
    #[error("alphabet has more than {max} symbols")]
    AlphabetTooLarge { max: usize },
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),
    #[error("symbol index {0} is outside the alphabet")]
    SymbolOutOfRange(usize),
    #[error("operands are defined over different alphabets")]
    AlphabetMismatch,
    #[error("word on [{word_lo}, {word_hi}] does not cover [{lo}, {hi}]")]
    WordDoesNotCover {
        word_lo: i64,
        word_hi: i64,
        lo: i64,
        hi: i64,
    },
    #[error("word has length {got}, expected {expected}")]
    WordLength { expected: usize, got: usize },
    #[error("empty interval: lo {lo} > hi {hi}")]
    BadInterval { lo: i64, hi: i64 },
    #[error("interval width {width} exceeds the window cap {cap}")]
    WidthCap { width: usize, cap: usize },
    #[error("observable pieces overlap")]
    OverlappingPieces,
    #[error("enumeration of {0} words is too large")]
    EnumerationTooLarge(String),
    #[error("elementary CA rule {0} is outside 0..=255")]
    EcaRuleRange(u32),
    #[error("rule table is not total: no entry for `{0}`")]
    RuleNotTotal(String),
    #[error("rule table has conflicting entries for `{0}`")]
    RuleConflict(String),
    #[error("not a permutation of the alphabet: {0}")]
    InvalidPermutation(String),
    #[error("Turing machine: {0}")]
    TuringMachine(String),
    #[error("compiled alphabet collision on symbol `{0}`")]
    SymbolCollision(String),
    #[error("lambda must be a real rational greater than 1, got {0}")]
    InvalidLambda(String),
    #[error("lambda must have modulus greater than 1, got {0}")]
    LambdaModulus(String),
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("order {order} exceeds the query budget {budget}")]
    OrderExceedsBudget { order: usize, budget: usize },
    #[error("empty {0} set in halting query")]
    EmptyQuerySet(&'static str),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("transition function is not total: missing ({state}, {symbol})")]
    MissingTransition { state: String, symbol: String },
    #[error("set is not absorbing: state `{0}` leaves it")]
    NotAbsorbing(String),
    #[error("edge {from} -> {to} has zero weight")]
    ZeroWeight { from: String, to: String },
    #[error("subset enumeration supports at most {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
