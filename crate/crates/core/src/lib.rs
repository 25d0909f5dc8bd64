//! Exact reachability and spectral analysis for symbolic dynamical systems
//! through their Koopman (composition) operators.
//!
//! * [`clopen`]: canonical clopen subsets of `Σ^ℤ` and their Boolean algebra.
//! * [`system`]: sliding block codes (shift, elementary CA, symbol
//!   permutations, compiled Turing machines) with exact preimages.
//! * [`observable`]: piecewise-constant observables with exact complex
//!   rational values and the Koopman action on them.
//! * [`halting`]: set-to-set reachability via preimage iteration and via
//!   certified truncations of the resolvent's Neumann series.
//! * [`oracle`]: brute-force ground truth used to check the engine.
//! * [`automaton`]: coarse-grained finite automata, Koopman matrices,
//!   basins, exact spectra and cycle-weight consistency.
//! * [`topology`]: dynamical distance and the topologies it induces.
//! * [`format`]: the text file formats.

pub mod alphabet;
pub mod automaton;
pub mod clopen;
pub mod error;
pub mod format;
pub mod halting;
pub mod linalg;
pub mod observable;
pub mod oracle;
pub mod qcomplex;
pub mod system;
pub mod tm;
pub mod topology;

pub use alphabet::{Alphabet, Cylinder, Interval, Symbol, Word};
pub use clopen::ClopenSet;
pub use error::{Error, Result};
pub use halting::{HaltingQuery, HaltingVerdict};
pub use observable::PcObservable;
pub use qcomplex::QComplex;
pub use system::{Limits, SlidingBlockCode};
pub use tm::{Move, TmSpec};
