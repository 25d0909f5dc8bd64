//! Turing machine descriptions and their configuration encoding.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Left,
    Right,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Left => "L",
            Move::Right => "R",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Transition {
    pub next: usize,
    pub write: usize,
    pub dir: Move,
}

/// A deterministic one-tape machine. Tape symbol 0 is the blank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TmSpec {
    states: Vec<String>,
    tape: Vec<String>,
    start: usize,
    halting: Vec<bool>,
    delta: Vec<Option<Transition>>,
}

/// One transition line by name: `(state, read) -> (next, write, move)`.
pub type NamedTransition<'a> = (&'a str, &'a str, &'a str, &'a str, Move);

impl TmSpec {
    pub fn new(
        states: Vec<String>,
        tape: Vec<String>,
        start: &str,
        halt: &[&str],
        transitions: &[NamedTransition<'_>],
    ) -> Result<Self> {
        let tm_err = |m: String| Error::TuringMachine(m);
        if states.is_empty() {
            return Err(tm_err("no control states".into()));
        }
        if tape.is_empty() {
            return Err(tm_err("empty tape alphabet".into()));
        }
        let index = |names: &[String], what: &str, n: &str| {
            names
                .iter()
                .position(|s| s == n)
                .ok_or_else(|| tm_err(format!("unknown {what} `{n}`")))
        };
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(tm_err(format!("duplicate state `{s}`")));
            }
        }
        for (i, s) in tape.iter().enumerate() {
            if tape[..i].contains(s) {
                return Err(tm_err(format!("duplicate tape symbol `{s}`")));
            }
        }
        let start = index(&states, "state", start)?;
        let mut halting = vec![false; states.len()];
        for h in halt {
            halting[index(&states, "state", h)?] = true;
        }
        let g = tape.len();
        let mut delta: Vec<Option<Transition>> = vec![None; states.len() * g];
        for &(q, read, next, write, dir) in transitions {
            let q = index(&states, "state", q)?;
            let read = index(&tape, "tape symbol", read)?;
            let t = Transition {
                next: index(&states, "state", next)?,
                write: index(&tape, "tape symbol", write)?,
                dir,
            };
            if halting[q] {
                return Err(tm_err(format!("halting state `{}` has a transition", states[q])));
            }
            let slot = &mut delta[q * g + read];
            if slot.is_some() {
                return Err(tm_err(format!(
                    "duplicate transition for ({}, {})",
                    states[q], tape[read]
                )));
            }
            *slot = Some(t);
        }
        for q in 0..states.len() {
            if halting[q] {
                continue;
            }
            for (gi, gname) in tape.iter().enumerate() {
                if delta[q * g + gi].is_none() {
                    return Err(tm_err(format!(
                        "transition function is not total: missing ({}, {gname})",
                        states[q]
                    )));
                }
            }
        }
        Ok(TmSpec {
            states,
            tape,
            start,
            halting,
            delta,
        })
    }

    /// The 2-state, 2-symbol busy beaver: A0→1RB, A1→1LB, B0→1LA, B1→1RH.
    pub fn busy_beaver_2() -> Self {
        use Move::*;
        TmSpec::new(
            vec!["A".into(), "B".into(), "H".into()],
            vec!["0".into(), "1".into()],
            "A",
            &["H"],
            &[
                ("A", "0", "B", "1", Right),
                ("A", "1", "B", "1", Left),
                ("B", "0", "A", "1", Left),
                ("B", "1", "H", "1", Right),
            ],
        )
        .expect("busy beaver table is valid")
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn tape_symbols(&self) -> &[String] {
        &self.tape
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_halting(&self, q: usize) -> bool {
        self.halting[q]
    }

    pub fn halting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.states.len()).filter(|&q| self.halting[q])
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn tape_index(&self, name: &str) -> Option<usize> {
        self.tape.iter().position(|s| s == name)
    }

    /// `None` on halting states.
    pub fn transition(&self, q: usize, read: usize) -> Option<Transition> {
        self.delta[q * self.tape.len() + read]
    }

    /// Name of the compiled head symbol for state `q` reading `g`.
    pub fn head_symbol_name(&self, q: usize, g: usize) -> String {
        format!("{}:{}", self.states[q], self.tape[g])
    }

    /// Compiled alphabet: tape symbols first, then head symbols `q:γ` in
    /// state-major order.
    pub fn compiled_symbols(&self) -> Result<Vec<String>> {
        let mut out: Vec<String> = self.tape.clone();
        let mut seen: HashMap<String, ()> = out.iter().map(|s| (s.clone(), ())).collect();
        for q in 0..self.states.len() {
            for g in 0..self.tape.len() {
                let name = self.head_symbol_name(q, g);
                if seen.insert(name.clone(), ()).is_some() {
                    return Err(Error::SymbolCollision(name));
                }
                out.push(name);
            }
        }
        Ok(out)
    }

    /// Index of a compiled symbol: plain tape symbol or head.
    pub fn encode_cell(&self, cell: Cell) -> usize {
        match cell {
            Cell::Tape(g) => g,
            Cell::Head(q, g) => self.tape.len() + q * self.tape.len() + g,
        }
    }

    pub fn decode_cell(&self, s: usize) -> Cell {
        let g = self.tape.len();
        if s < g {
            Cell::Tape(s)
        } else {
            let h = s - g;
            Cell::Head(h / g, h % g)
        }
    }
}

/// A cell of a compiled configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Tape(usize),
    Head(usize, usize),
}

impl Cell {
    pub fn tape_symbol(self) -> usize {
        match self {
            Cell::Tape(g) | Cell::Head(_, g) => g,
        }
    }

    pub fn is_head(self) -> bool {
        matches!(self, Cell::Head(..))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn busy_beaver_is_total() {
        let bb = TmSpec::busy_beaver_2();
        assert_eq!(bb.states().len(), 3);
        assert!(bb.is_halting(2));
        let t = bb.transition(0, 0).unwrap();
        assert_eq!((t.next, t.write, t.dir), (1, 1, Move::Right));
        assert_eq!(bb.transition(2, 0), None);
    }

    #[test]
    fn partial_table_is_rejected() {
        let err = TmSpec::new(
            vec!["A".into(), "H".into()],
            vec!["0".into(), "1".into()],
            "A",
            &["H"],
            &[("A", "0", "H", "1", Move::Right)],
        )
        .unwrap_err();
        assert!(err.to_string().contains("missing (A, 1)"));
    }

    #[test]
    fn cell_encoding_round_trips() {
        let bb = TmSpec::busy_beaver_2();
        for s in 0..8 {
            assert_eq!(bb.encode_cell(bb.decode_cell(s)), s);
        }
        assert_eq!(bb.encode_cell(Cell::Head(0, 0)), 2);
        assert_eq!(bb.compiled_symbols().unwrap()[2], "A:0");
    }

    #[test]
    fn colliding_names_are_rejected() {
        let tm = TmSpec::new(
            vec!["a".into()],
            vec!["0".into(), "a:0".into()],
            "a",
            &["a"],
            &[],
        )
        .unwrap();
        assert_eq!(
            tm.compiled_symbols(),
            Err(Error::SymbolCollision("a:0".into()))
        );
    }
}
