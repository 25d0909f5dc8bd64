//! Line-oriented text formats.
//!
//! Every format is a sequence of `key: value…` lines; tokens are separated
//! by whitespace, `#` starts a comment, blank lines are ignored.
//!
//! * `.clo` clopen set: optional `alphabet: <symbols>`, any number of
//!   `cylinder: <lo> <word>` lines, and `interval: <lo> <hi>` blocks followed
//!   by `words: <w1> <w2> …` lines. All parts are unioned.
//! * `.sys` sliding block code: `alphabet: …` and either
//!   `builtin: shift | eca <n> | perm <image of each symbol…> | tm <path>` or
//!   `window: <l> <r>` with one `rule: <word> -> <symbol>` line per window.
//! * `.tm` Turing machine: `states:`, `tape:` (first symbol is blank),
//!   `start:`, `halt:`, and `trans: <q> <γ> -> <q'> <γ'> <L|R>` lines.
//! * `.obs` observable: optional `alphabet:`, then blocks `piece:` + set
//!   lines + `value: <re> <im>`, and an optional `default: <re> <im>`.
//! * `.aut` automaton: `states:`, `alphabet:`, `trans: <q> <σ> -> <q'>`,
//!   optional `halt:`.
//! * `.wdg` weighted digraph: optional `vertices:`, and
//!   `edge: <p> <q> [<re> <im>]` lines (weight 1 when omitted).
//!
//! Words over single-character alphabets are plain strings (`0110`); other
//! alphabets separate symbols with commas (`0,A:1,0`).

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Symbol};
use crate::automaton::{Automaton, WeightedDigraph};
use crate::clopen::ClopenSet;
use crate::error::Error;
use crate::observable::PcObservable;
use crate::qcomplex::{parse_rational, QComplex};
use crate::system::SlidingBlockCode;
use crate::tm::{Move, TmSpec};

/// Failure with the 1-based line it refers to (0 for the file as a whole).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

fn err<T>(line: usize, message: impl Into<String>) -> ParseResult<T> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

trait AtLine<T> {
    fn at(self, line: usize) -> ParseResult<T>;
}

impl<T> AtLine<T> for std::result::Result<T, Error> {
    fn at(self, line: usize) -> ParseResult<T> {
        self.map_err(|e| ParseError {
            line,
            message: e.to_string(),
        })
    }
}

struct Line<'a> {
    no: usize,
    key: &'a str,
    args: Vec<&'a str>,
}

fn lines(text: &str) -> ParseResult<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, rest)) = content.split_once(':') else {
            return err(i + 1, format!("expected `key: value`, got `{content}`"));
        };
        out.push(Line {
            no: i + 1,
            key: key.trim(),
            args: rest.split_whitespace().collect(),
        });
    }
    Ok(out)
}

fn int<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> ParseResult<T> {
    tok.parse()
        .or_else(|_| err(line, format!("{what} must be an integer, got `{tok}`")))
}

fn arity(l: &Line<'_>, n: usize) -> ParseResult<()> {
    if l.args.len() == n {
        Ok(())
    } else {
        err(
            l.no,
            format!("`{}` takes {n} fields, got {}", l.key, l.args.len()),
        )
    }
}

fn complex(l: &Line<'_>) -> ParseResult<QComplex> {
    arity(l, 2)?;
    QComplex::parse_pair(l.args[0], l.args[1]).map_or_else(
        || {
            err(
                l.no,
                format!("bad rational pair `{} {}`", l.args[0], l.args[1]),
            )
        },
        Ok,
    )
}

fn names(args: &[&str]) -> Vec<String> {
    args.iter().map(|s| s.to_string()).collect()
}

fn alphabet_line(l: &Line<'_>) -> ParseResult<Arc<Alphabet>> {
    Alphabet::new(l.args.iter().copied()).map(Arc::new).at(l.no)
}

/// Picks the alphabet from the file or from the caller, requiring agreement
/// when both are present.
fn resolve_alphabet(
    declared: Option<(usize, Arc<Alphabet>)>,
    context: Option<&Arc<Alphabet>>,
) -> ParseResult<Arc<Alphabet>> {
    match (declared, context) {
        (Some((no, a)), Some(c)) if *a != **c => err(
            no,
            format!("alphabet `{a}` does not match the system alphabet `{c}`"),
        ),
        (Some((_, a)), _) => Ok(a),
        (None, Some(c)) => Ok(c.clone()),
        (None, None) => err(0, "missing `alphabet:` line"),
    }
}

/// Accumulates the set lines of a `.clo` file or an observable piece.
struct SetBuilder {
    set: ClopenSet,
    block: Option<(i64, usize)>,
}

impl SetBuilder {
    fn new(alphabet: &Arc<Alphabet>) -> Self {
        SetBuilder {
            set: ClopenSet::empty(alphabet.clone()),
            block: None,
        }
    }

    /// Returns `false` when the line is not a set line.
    fn accept(&mut self, l: &Line<'_>) -> ParseResult<bool> {
        let alpha = self.set.alphabet().clone();
        match l.key {
            "cylinder" => {
                arity(l, 2)?;
                let lo = int(l.no, l.args[0], "cylinder start")?;
                let c = ClopenSet::cylinder(alpha, lo, l.args[1]).at(l.no)?;
                self.set = self.set.union(&c).at(l.no)?;
            }
            "interval" => {
                arity(l, 2)?;
                let lo: i64 = int(l.no, l.args[0], "interval start")?;
                let hi: i64 = int(l.no, l.args[1], "interval end")?;
                let iv = crate::alphabet::Interval::new(lo, hi).at(l.no)?;
                self.block = Some((lo, iv.width()));
            }
            "words" => {
                let Some((lo, width)) = self.block else {
                    return err(l.no, "`words:` needs a preceding `interval:`");
                };
                let words = l
                    .args
                    .iter()
                    .map(|w| alpha.parse_word(w))
                    .collect::<Result<Vec<Vec<Symbol>>, Error>>()
                    .at(l.no)?;
                let s = ClopenSet::from_words(alpha, lo, width, words).at(l.no)?;
                self.set = self.set.union(&s).at(l.no)?;
            }
            _ => return Ok(false),
        }
        Ok(true)
    }
}

/// Parses a `.clo` file. `context` supplies the alphabet when the file has
/// no `alphabet:` line.
pub fn parse_clopen(text: &str, context: Option<&Arc<Alphabet>>) -> ParseResult<ClopenSet> {
    let ls = lines(text)?;
    let (declared, body) = split_alphabet(&ls)?;
    let alphabet = resolve_alphabet(declared, context)?;
    let mut b = SetBuilder::new(&alphabet);
    for l in body {
        if !b.accept(l)? {
            return err(l.no, format!("unknown key `{}` in a set file", l.key));
        }
    }
    Ok(b.set)
}

type Declared = Option<(usize, Arc<Alphabet>)>;

/// The leading `alphabet:` line, if any, and the remaining lines.
fn split_alphabet<'l, 'a>(ls: &'l [Line<'a>]) -> ParseResult<(Declared, &'l [Line<'a>])> {
    let declared = match ls.first() {
        Some(l) if l.key == "alphabet" => Some((l.no, alphabet_line(l)?)),
        _ => None,
    };
    let rest = &ls[usize::from(declared.is_some())..];
    if let Some(l) = rest.iter().find(|l| l.key == "alphabet") {
        return err(l.no, "`alphabet:` must be the first line");
    }
    Ok((declared, rest))
}

/// Parses a `.sys` file; `tm` paths are resolved against `base_dir`.
pub fn parse_system(text: &str, base_dir: Option<&Path>) -> ParseResult<SlidingBlockCode> {
    let ls = lines(text)?;
    let (declared, body) = split_alphabet(&ls)?;
    if let Some(l) = body.iter().find(|l| l.key == "builtin") {
        if let Some(extra) = body.iter().find(|x| x.no != l.no) {
            return err(extra.no, "`builtin:` must be the only entry after `alphabet:`");
        }
        return builtin(l, declared, base_dir);
    }
    let alphabet = resolve_alphabet(declared, None)?;
    let Some(w) = body.first().filter(|l| l.key == "window") else {
        return err(
            body.first().map_or(0, |l| l.no),
            "expected `builtin:` or `window:` after `alphabet:`",
        );
    };
    arity(w, 2)?;
    let memory: usize = int(w.no, w.args[0], "memory")?;
    let anticipation: usize = int(w.no, w.args[1], "anticipation")?;
    let len = memory + anticipation + 1;
    let sigma = alphabet.len();
    let size = u32::try_from(len)
        .ok()
        .and_then(|n| sigma.checked_pow(n))
        .filter(|&n| n <= 1 << 20)
        .map_or_else(|| err(w.no, "window is too large for an explicit table"), Ok)?;
    let mut table: Vec<Option<Symbol>> = vec![None; size];
    for l in &body[1..] {
        if l.key != "rule" {
            return err(l.no, format!("unknown key `{}` in a system file", l.key));
        }
        if l.args.len() != 3 || l.args[1] != "->" {
            return err(l.no, "expected `rule: <word> -> <symbol>`");
        }
        let word = alphabet.parse_word(l.args[0]).at(l.no)?;
        if word.len() != len {
            return err(
                l.no,
                format!("rule word `{}` has {} symbols, window needs {len}", l.args[0], word.len()),
            );
        }
        let image = alphabet.index_of(l.args[2]).at(l.no)?;
        let code = word.iter().fold(0usize, |acc, &s| acc * sigma + s as usize);
        match table[code] {
            Some(prev) if prev != image => {
                return err(
                    l.no,
                    format!(
                        "{}: `{}` and `{}`",
                        Error::RuleConflict(l.args[0].to_string()),
                        alphabet.name(prev),
                        l.args[2]
                    ),
                )
            }
            _ => table[code] = Some(image),
        }
    }
    let mut rule = Vec::with_capacity(size);
    let mut buf = vec![0 as Symbol; len];
    for (code, entry) in table.iter().enumerate() {
        match entry {
            Some(s) => rule.push(*s),
            None => {
                let mut c = code;
                for slot in buf.iter_mut().rev() {
                    *slot = (c % sigma) as Symbol;
                    c /= sigma;
                }
                let missing = alphabet.format_word(&buf);
                return err(
                    0,
                    Error::RuleNotTotal(missing).to_string(),
                );
            }
        }
    }
    SlidingBlockCode::new(alphabet, memory, anticipation, rule).at(w.no)
}

fn builtin(l: &Line<'_>, declared: Declared, base_dir: Option<&Path>) -> ParseResult<SlidingBlockCode> {
    let Some((&kind, args)) = l.args.split_first() else {
        return err(l.no, "`builtin:` needs a kind: shift, eca, perm or tm");
    };
    let check_implied = |implied: &Arc<Alphabet>| match &declared {
        Some((no, a)) if a != implied => err(
            *no,
            format!("alphabet `{a}` does not match the builtin's alphabet `{implied}`"),
        ),
        _ => Ok(()),
    };
    match kind {
        "shift" => {
            if !args.is_empty() {
                return err(l.no, "`shift` takes no arguments");
            }
            Ok(SlidingBlockCode::shift(resolve_alphabet(declared, None)?))
        }
        "eca" => {
            let [n] = args else {
                return err(l.no, "expected `eca <rule number>`");
            };
            let f = SlidingBlockCode::eca(int(l.no, n, "rule number")?).at(l.no)?;
            check_implied(f.alphabet())?;
            Ok(f)
        }
        "perm" => {
            let alphabet = resolve_alphabet(declared, None)?;
            let perm = args
                .iter()
                .map(|s| alphabet.index_of(s))
                .collect::<Result<Vec<_>, _>>()
                .at(l.no)?;
            SlidingBlockCode::permutation(alphabet, perm).at(l.no)
        }
        "tm" => {
            let [path] = args else {
                return err(l.no, "expected `tm <path>`");
            };
            let full = base_dir.map_or_else(|| Path::new(path).to_path_buf(), |d| d.join(path));
            let text = std::fs::read_to_string(&full)
                .or_else(|e| err(l.no, format!("cannot read `{}`: {e}", full.display())))?;
            let spec = parse_tm(&text).map_err(|e| ParseError {
                line: l.no,
                message: format!("in `{}`: {e}", full.display()),
            })?;
            let f = SlidingBlockCode::compile_tm(&spec).at(l.no)?;
            check_implied(f.alphabet())?;
            Ok(f)
        }
        other => err(l.no, format!("unknown builtin `{other}`")),
    }
}

/// Parses a `.tm` file.
pub fn parse_tm(text: &str) -> ParseResult<TmSpec> {
    let ls = lines(text)?;
    let mut states = None;
    let mut tape = None;
    let mut start = None;
    let mut halt: Vec<&str> = Vec::new();
    let mut trans = Vec::new();
    for l in &ls {
        match l.key {
            "states" => states = Some(names(&l.args)),
            "tape" => tape = Some(names(&l.args)),
            "start" => {
                arity(l, 1)?;
                start = Some(l.args[0]);
            }
            "halt" => halt.extend(l.args.iter().copied()),
            "trans" => {
                if l.args.len() != 6 || l.args[2] != "->" {
                    return err(l.no, "expected `trans: <q> <symbol> -> <q'> <symbol'> <L|R>`");
                }
                let dir = match l.args[5] {
                    "L" => Move::Left,
                    "R" => Move::Right,
                    d => return err(l.no, format!("direction must be L or R, got `{d}`")),
                };
                trans.push((l.args[0], l.args[1], l.args[3], l.args[4], dir));
            }
            k => return err(l.no, format!("unknown key `{k}` in a machine file")),
        }
    }
    let missing = |k: &str| ParseError {
        line: 0,
        message: format!("missing `{k}:` line"),
    };
    TmSpec::new(
        states.ok_or_else(|| missing("states"))?,
        tape.ok_or_else(|| missing("tape"))?,
        start.ok_or_else(|| missing("start"))?,
        &halt,
        &trans,
    )
    .at(0)
}

/// Parses a `.obs` file.
pub fn parse_observable(text: &str, context: Option<&Arc<Alphabet>>) -> ParseResult<PcObservable> {
    let ls = lines(text)?;
    let (declared, body) = split_alphabet(&ls)?;
    let alphabet = resolve_alphabet(declared, context)?;
    let mut pieces = Vec::new();
    let mut default = None;
    let mut current: Option<(usize, SetBuilder)> = None;
    for l in body {
        match l.key {
            "piece" => {
                if let Some((no, _)) = current {
                    return err(no, "piece has no `value:` line");
                }
                arity(l, 0)?;
                current = Some((l.no, SetBuilder::new(&alphabet)));
            }
            "value" => {
                let Some((_, b)) = current.take() else {
                    return err(l.no, "`value:` outside a piece");
                };
                pieces.push((b.set, complex(l)?));
            }
            "default" => {
                if default.is_some() {
                    return err(l.no, "duplicate `default:`");
                }
                default = Some(complex(l)?);
            }
            _ => {
                let accepted = match current.as_mut() {
                    Some((_, b)) => b.accept(l)?,
                    None => false,
                };
                if !accepted {
                    return err(l.no, format!("unexpected `{}` in an observable file", l.key));
                }
            }
        }
    }
    if let Some((no, _)) = current {
        return err(no, "piece has no `value:` line");
    }
    PcObservable::from_pieces(alphabet, pieces, default.unwrap_or_else(QComplex::zero)).at(0)
}

/// Parses a `.aut` file.
pub fn parse_automaton(text: &str) -> ParseResult<Automaton> {
    let ls = lines(text)?;
    let mut states = None;
    let mut alphabet = None;
    let mut halt: Vec<&str> = Vec::new();
    let mut trans = Vec::new();
    for l in &ls {
        match l.key {
            "states" => states = Some(names(&l.args)),
            "alphabet" => alphabet = Some(names(&l.args)),
            "halt" => halt.extend(l.args.iter().copied()),
            "trans" => {
                if l.args.len() != 4 || l.args[2] != "->" {
                    return err(l.no, "expected `trans: <q> <symbol> -> <q'>`");
                }
                trans.push((l.no, (l.args[0], l.args[1], l.args[3])));
            }
            k => return err(l.no, format!("unknown key `{k}` in an automaton file")),
        }
    }
    let states = states.map_or_else(|| err(0, "missing `states:` line"), Ok)?;
    let alphabet = alphabet.map_or_else(|| err(0, "missing `alphabet:` line"), Ok)?;
    // Duplicate transitions are a file-level problem the automaton cannot see.
    for (i, (no, (p, s, _))) in trans.iter().enumerate() {
        if trans[..i].iter().any(|(_, (p2, s2, _))| p2 == p && s2 == s) {
            return err(*no, format!("duplicate transition for ({p}, {s})"));
        }
    }
    let plain: Vec<(&str, &str, &str)> = trans.iter().map(|(_, t)| *t).collect();
    Automaton::new(states, alphabet, &plain, &halt).at(0)
}

/// Parses a `.wdg` file. Without a `vertices:` line, vertices are named in
/// order of first appearance.
pub fn parse_weighted_digraph(text: &str) -> ParseResult<WeightedDigraph> {
    let ls = lines(text)?;
    let mut vertices: Option<Vec<String>> = None;
    let mut seen: Vec<String> = Vec::new();
    let mut raw = Vec::new();
    for l in &ls {
        match l.key {
            "vertices" => {
                if !raw.is_empty() {
                    return err(l.no, "`vertices:` must come before any edge");
                }
                vertices = Some(names(&l.args));
            }
            "edge" => {
                let w = match l.args.len() {
                    2 => QComplex::one(),
                    4 => QComplex::parse_pair(l.args[2], l.args[3]).map_or_else(
                        || err(l.no, format!("bad weight `{} {}`", l.args[2], l.args[3])),
                        Ok,
                    )?,
                    _ => return err(l.no, "expected `edge: <p> <q> [<re> <im>]`"),
                };
                for v in &l.args[..2] {
                    if !seen.iter().any(|s| s == v) {
                        seen.push(v.to_string());
                    }
                }
                raw.push((l.no, l.args[0], l.args[1], w));
            }
            k => return err(l.no, format!("unknown key `{k}` in a graph file")),
        }
    }
    let names = vertices.unwrap_or(seen);
    let index = |no: usize, v: &str| {
        names
            .iter()
            .position(|n| n == v)
            .map_or_else(|| err(no, format!("unknown vertex `{v}`")), Ok)
    };
    let mut edges = Vec::with_capacity(raw.len());
    for (no, p, q, w) in raw {
        if w.is_zero() {
            return err(no, format!("edge {p} -> {q} has weight zero"));
        }
        edges.push((index(no, p)?, index(no, q)?, w));
    }
    WeightedDigraph::new(names, edges).at(0)
}

/// Parses a rational like `3/2` or `-4`.
pub fn parse_lambda(s: &str) -> ParseResult<num_rational::BigRational> {
    parse_rational(s).map_or_else(|| err(0, format!("`{s}` is not a rational p/q")), Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clopen_files() {
        let s = parse_clopen(
            "alphabet: 0 1 # binary\ncylinder: 0 1\n\ninterval: 1 2\nwords: 01 10\n",
            None,
        )
        .unwrap();
        let bin = Arc::new(Alphabet::binary());
        let want = ClopenSet::cylinder(bin.clone(), 0, "1")
            .unwrap()
            .union(&ClopenSet::from_words(bin.clone(), 1, 2, vec![vec![0, 1], vec![1, 0]]).unwrap())
            .unwrap();
        assert_eq!(s, want);
        assert_eq!(parse_clopen("cylinder: 0 1", Some(&bin)).unwrap(), ClopenSet::cylinder(bin.clone(), 0, "1").unwrap());
        assert!(parse_clopen("cylinder: 0 1", None).is_err());
        let e = parse_clopen("alphabet: a b\ncylinder: 0 a", Some(&bin)).unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_clopen("alphabet: 0 1\ncylinder: 0 2", None).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_clopen("alphabet: 0 1\nwords: 01", None).is_err());
        assert!(parse_clopen("alphabet: 0 1", None).unwrap().is_empty());
    }

    #[test]
    fn system_files() {
        let f = parse_system("builtin: eca 110", None).unwrap();
        assert_eq!(f, SlidingBlockCode::eca(110).unwrap());
        let shift = parse_system("alphabet: 0 1\nbuiltin: shift", None).unwrap();
        assert_eq!(shift, SlidingBlockCode::shift(Arc::new(Alphabet::binary())));
        let not = parse_system("alphabet: 0 1\nbuiltin: perm 1 0", None).unwrap();
        assert_eq!(not.as_permutation(), Some(&[1, 0][..]));
        let explicit = "alphabet: 0 1\nwindow: 0 1\nrule: 00 -> 0\nrule: 01 -> 1\nrule: 10 -> 0\nrule: 11 -> 1\n";
        assert_eq!(parse_system(explicit, None).unwrap(), shift);
        let partial = "alphabet: 0 1\nwindow: 0 1\nrule: 00 -> 0\nrule: 01 -> 1\nrule: 11 -> 1\n";
        let e = parse_system(partial, None).unwrap_err();
        assert!(e.message.contains("`10`"), "{e}");
        let conflict = "alphabet: 0 1\nwindow: 0 0\nrule: 0 -> 0\nrule: 0 -> 1\nrule: 1 -> 1\n";
        assert_eq!(parse_system(conflict, None).unwrap_err().line, 4);
        assert!(parse_system("alphabet: a b\nbuiltin: eca 3", None).is_err());
    }

    #[test]
    fn machine_files() {
        let text = "states: A B H\ntape: 0 1\nstart: A\nhalt: H\n\
                    trans: A 0 -> B 1 R\ntrans: A 1 -> B 1 L\ntrans: B 0 -> A 1 L\ntrans: B 1 -> H 1 R\n";
        assert_eq!(parse_tm(text).unwrap(), TmSpec::busy_beaver_2());
        let partial = "states: A B H\ntape: 0 1\nstart: A\nhalt: H\n\
                    trans: A 0 -> B 1 R\ntrans: B 0 -> A 1 L\ntrans: B 1 -> H 1 R\n";
        assert!(parse_tm(partial).unwrap_err().message.contains("(A, 1)"));
    }

    #[test]
    fn observable_files() {
        let text = "alphabet: 0 1\npiece:\ncylinder: 0 1\nvalue: 3/2 0\ndefault: 0 -1\n";
        let g = parse_observable(text, None).unwrap();
        let bin = Arc::new(Alphabet::binary());
        let a = ClopenSet::cylinder(bin.clone(), 0, "1").unwrap();
        let want = PcObservable::indicator(&a)
            .scale(&QComplex::ratio(3, 2))
            .add(&PcObservable::indicator(&a.complement()).scale(&QComplex::parse_pair("0", "-1").unwrap()))
            .unwrap();
        assert_eq!(g, want);
        assert!(parse_observable("alphabet: 0 1\npiece:\ncylinder: 0 1\n", None).is_err());
    }

    #[test]
    fn automaton_files() {
        let text = "states: q0 q1\nalphabet: a b\ntrans: q0 a -> q1\ntrans: q0 b -> q0\ntrans: q1 a -> q1\ntrans: q1 b -> q0\n";
        let a = parse_automaton(text).unwrap();
        assert_eq!(a.run_word(0, &[0, 1]), vec![0, 1, 0]);
        let partial = "states: q0 q1\nalphabet: a\ntrans: q0 a -> q1\n";
        let e = parse_automaton(partial).unwrap_err();
        assert!(e.message.contains("(q1, a)"), "{e}");
    }

    #[test]
    fn graph_files() {
        let g = parse_weighted_digraph("edge: x y 2 0\nedge: y x 1/2 0\nedge: y y\n").unwrap();
        assert_eq!(g.names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(g.edges()[2].2, QComplex::one());
        assert!(parse_weighted_digraph("edge: x y 0 0").is_err());
        assert!(parse_weighted_digraph("vertices: a\nedge: a b").is_err());
    }
}
