use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use koopman_core::automaton::{
    self, cycle_weight_check, exact_spectrum, Automaton, CycleCheck, WeightedDigraph,
};
use koopman_core::format::{self, ParseError};
use koopman_core::halting::{
    span_dimension, CertificateVerdict, Evidence, HaltingVerdict, SpanDimension, UnknownReason,
};
use koopman_core::oracle::{self, WindowReach};
use koopman_core::qcomplex::format_rational;
use koopman_core::topology::{self, TransitionDigraph, DEFAULT_RADIUS};
use koopman_core::{Alphabet, ClopenSet, HaltingQuery, Limits, PcObservable, SlidingBlockCode};

const GRAMMARS: &str = "\
FILE FORMATS
  One `key: value...` entry per line, whitespace-separated tokens, `#` comments.
  Words over single-character alphabets are plain strings (0110); otherwise
  symbols are comma separated (0,A:1,0).

  .clo  clopen set
        alphabet: <symbols>          optional when a system supplies it
        cylinder: <lo> <word>        any number, unioned
        interval: <lo> <hi>          starts a block of explicit words
        words: <w1> <w2> ...         words of length hi-lo+1

  .sys  sliding block code y_i = f(x_{i-l} .. x_{i+r})
        alphabet: <symbols>
        builtin: shift | eca <0..255> | perm <image of each symbol> | tm <path>
     or window: <l> <r>
        rule: <word> -> <symbol>     one line for every window word

  .tm   Turing machine (first tape symbol is the blank)
        states: <q...>   tape: <symbols>   start: <q>   halt: <q...>
        trans: <q> <read> -> <q'> <write> <L|R>

  .obs  piecewise-constant observable
        alphabet: <symbols>          optional
        piece:                       followed by .clo set lines
        value: <re> <im>             rationals such as 3/2 0
        default: <re> <im>           value off every piece, 0 if omitted

  .aut  deterministic automaton
        states: <q...>   alphabet: <symbols>   halt: <q...>
        trans: <q> <symbol> -> <q'>  total over states x symbols

  .wdg  weighted digraph
        vertices: <v...>             optional
        edge: <p> <q> [<re> <im>]    nonzero weight, 1 if omitted

EXIT STATUS
  0 decided, 1 usage or input error, 2 engine and oracle disagree,
  3 undecided within the budget.";

#[derive(Debug, Parser)]
#[command(
    name = "koopman",
    version,
    about = "Exact reachability and Koopman spectra for symbolic systems and automata",
    after_long_help = GRAMMARS
)]
struct Cli {
    /// Print a single `RESULT ...` line.
    #[arg(long, global = true)]
    machine: bool,
    /// Largest interval width a preimage may reach.
    #[arg(
        long,
        global = true,
        env = "KOOPMAN_WINDOW_CAP",
        default_value_t = Limits::DEFAULT_MAX_WIDTH
    )]
    window_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[arg(long)]
    system: PathBuf,
    /// Source set A (.clo).
    #[arg(long)]
    from: PathBuf,
    /// Target set B (.clo).
    #[arg(long)]
    to: PathBuf,
    #[arg(long, default_value_t = 100)]
    budget: usize,
    /// Resolvent parameter, a rational p/q greater than 1.
    #[arg(long, default_value = "2")]
    lambda: String,
}

#[derive(Debug, Args)]
struct GraphSource {
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    automaton: Option<PathBuf>,
    /// Edge list (.wdg); weights are ignored.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether some point of A enters B.
    Reach(QueryArgs),
    /// Certify reachability from a truncated resolvent series.
    Resolvent {
        #[command(flatten)]
        query: QueryArgs,
        /// Truncation order; without it, the first positive order up to
        /// the budget is searched.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Dimension of the Koopman orbit span of an observable.
    SpanDim {
        #[arg(long)]
        system: PathBuf,
        #[arg(long, conflicts_with = "set", required_unless_present = "set")]
        observable: Option<PathBuf>,
        /// Use the indicator of this set (.clo).
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long, default_value_t = 32)]
        budget: usize,
    },
    /// Exact spectrum of the Koopman matrix under one input symbol.
    Spectrum {
        #[arg(long)]
        automaton: PathBuf,
        #[arg(long)]
        symbol: String,
    },
    /// Basin of an absorbing set and its eigenfunction check.
    Basin {
        #[arg(long)]
        automaton: PathBuf,
        #[arg(long)]
        symbol: String,
        /// Comma-separated states; defaults to the fixed points of the map.
        #[arg(long, value_delimiter = ',')]
        absorbing: Vec<String>,
    },
    /// Check that every directed cycle has weight product 1.
    Cycles {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Shortest directed path lengths.
    Distance {
        #[command(flatten)]
        source: GraphSource,
        /// Report a single entry instead of the whole table.
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
    },
    /// Compare successor-closed sets with ball-open sets.
    Topology {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
    },
    /// Run the engine and the brute-force oracle on one query.
    OracleCheck(QueryArgs),
}

struct Report {
    code: i32,
    human: String,
    machine: String,
}

impl Report {
    fn new(code: i32, human: String, machine: String) -> Self {
        Report {
            code,
            human,
            machine,
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn at(path: &Path) -> impl Fn(ParseError) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}

fn load_system(path: &Path) -> Result<SlidingBlockCode, String> {
    format::parse_system(&read(path)?, path.parent()).map_err(at(path))
}

fn load_set(path: &Path, alphabet: &Arc<Alphabet>) -> Result<ClopenSet, String> {
    format::parse_clopen(&read(path)?, Some(alphabet)).map_err(at(path))
}

fn load_automaton(path: &Path) -> Result<Automaton, String> {
    format::parse_automaton(&read(path)?).map_err(at(path))
}

fn load_graph(path: &Path) -> Result<WeightedDigraph, String> {
    format::parse_weighted_digraph(&read(path)?).map_err(at(path))
}

fn load_transition_graph(src: &GraphSource) -> Result<TransitionDigraph, String> {
    if let Some(p) = &src.automaton {
        return Ok(TransitionDigraph::from_automaton(&load_automaton(p)?));
    }
    let p = src.graph.as_ref().expect("clap requires one source");
    let g = load_graph(p)?;
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|(a, b, _)| (*a, *b)).collect();
    TransitionDigraph::new(g.names().to_vec(), &edges).map_err(|e| e.to_string())
}

fn build_query(q: &QueryArgs, limits: Limits) -> Result<HaltingQuery, String> {
    let system = load_system(&q.system)?;
    let from = load_set(&q.from, system.alphabet())?;
    let to = load_set(&q.to, system.alphabet())?;
    let lambda = format::parse_lambda(&q.lambda).map_err(|e| format!("--lambda: {e}"))?;
    HaltingQuery::new(system, from, to, lambda, q.budget)
        .map(|hq| hq.with_limits(limits))
        .map_err(|e| e.to_string())
}

fn verdict_fields(v: &HaltingVerdict, alphabet: &Alphabet) -> String {
    match v {
        HaltingVerdict::Reached { t, witness } => {
            format!("reached t={t} witness={}", alphabet.format_word(&witness.symbols))
        }
        HaltingVerdict::Unreachable(Evidence::Period { start, end }) => {
            format!("unreachable period=({start},{end})")
        }
        HaltingVerdict::Unreachable(Evidence::Stabilized { step }) => {
            format!("unreachable stabilized={step}")
        }
        HaltingVerdict::Unknown { budget, reason } => match reason {
            UnknownReason::Budget => format!("unknown budget={budget}"),
            UnknownReason::Resource(e) => format!("unknown budget={budget} resource=\"{e}\""),
        },
    }
}

fn verdict_human(v: &HaltingVerdict, alphabet: &Alphabet) -> String {
    match v {
        HaltingVerdict::Reached { t, witness } => {
            let iv = witness
                .interval()
                .map_or_else(|| "everywhere".to_string(), |iv| format!("on [{}, {}]", iv.lo(), iv.hi()));
            format!(
                "reached after {t} step(s)\nwitness: {} {iv}",
                alphabet.format_word(&witness.symbols)
            )
        }
        HaltingVerdict::Unreachable(Evidence::Period { start, end }) => format!(
            "unreachable: preimage {end} repeats preimage {start}, so no later preimage is new"
        ),
        HaltingVerdict::Unreachable(Evidence::Stabilized { step }) => {
            format!("unreachable: the union of preimages stopped growing at step {step}")
        }
        HaltingVerdict::Unknown { budget, reason } => match reason {
            UnknownReason::Budget => format!("undecided within {budget} preimage steps"),
            UnknownReason::Resource(e) => format!("undecided: {e}"),
        },
    }
}

fn reach(q: &QueryArgs, limits: Limits) -> Result<Report, String> {
    let query = build_query(q, limits)?;
    let v = query.reach_semidecide();
    let alphabet = query.system.alphabet();
    let code = if v.is_decided() { 0 } else { 3 };
    Ok(Report::new(
        code,
        verdict_human(&v, alphabet),
        verdict_fields(&v, alphabet),
    ))
}

fn resolvent(q: &QueryArgs, order: Option<usize>, limits: Limits) -> Result<Report, String> {
    let query = build_query(q, limits)?;
    let cert = match order {
        Some(n) => Some(query.resolvent_certificate(n).map_err(|e| e.to_string())?),
        None => query
            .first_positive_certificate(query.budget)
            .map_err(|e| e.to_string())?,
    };
    let Some(cert) = cert else {
        return Ok(Report::new(
            3,
            format!("no positive certificate up to order {}", query.budget),
            format!("resolvent inconclusive max_order={}", query.budget),
        ));
    };
    let positive = cert.verdict == CertificateVerdict::Positive;
    let human = format!(
        "order {}: sup |chi_A S_N|^2 = {}, tail bound^2 = {}\n{}",
        cert.order,
        format_rational(&cert.partial_norm_sq),
        format_rational(&cert.tail_bound_sq),
        if positive {
            "positive: A reaches B"
        } else {
            "inconclusive at this order"
        }
    );
    Ok(Report::new(
        if positive { 0 } else { 3 },
        human,
        format!("resolvent {cert}"),
    ))
}

fn span_dim(
    system: &Path,
    observable: Option<&Path>,
    set: Option<&Path>,
    budget: usize,
    limits: Limits,
) -> Result<Report, String> {
    let f = load_system(system)?;
    let g = match (observable, set) {
        (Some(p), _) => format::parse_observable(&read(p)?, Some(f.alphabet())).map_err(at(p))?,
        (None, Some(p)) => PcObservable::indicator(&load_set(p, f.alphabet())?),
        (None, None) => return Err("one of --observable or --set is required".into()),
    };
    Ok(match span_dimension(&f, &g, budget, &limits).map_err(|e| e.to_string())? {
        SpanDimension::Finite(k) => Report::new(
            0,
            format!("span of the Koopman orbit has dimension {k}"),
            format!("span-dim finite={k}"),
        ),
        SpanDimension::ExceedsBudget(b) => Report::new(
            3,
            format!("dimension exceeds {b}"),
            format!("span-dim exceeds budget={b}"),
        ),
    })
}

fn symbol_of(a: &Automaton, name: &str) -> Result<usize, String> {
    a.symbol_index(name).map_err(|e| e.to_string())
}

fn spectrum(path: &Path, symbol: &str) -> Result<Report, String> {
    let a = load_automaton(path)?;
    let map = a.symbol_map(symbol_of(&a, symbol)?);
    let report = exact_spectrum(&map);
    let mut human = String::new();
    let _ = writeln!(human, "cycles (length x count): {:?}", report.cycles);
    let _ = writeln!(human, "transient states: {}", report.zeros);
    let cp: Vec<String> = report
        .characteristic_polynomial()
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(human, "characteristic polynomial (constant term first): [{}]", cp.join(", "));
    let _ = writeln!(human, "trace: {}", report.trace());
    let _ = write!(human, "multiplicity of 1: {}", report.multiplicity_of_one());
    Ok(Report::new(0, human, format!("spectrum {report}")))
}

fn state_list(names: &[String], states: &[usize]) -> String {
    states
        .iter()
        .map(|&q| names[q].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

fn basin(path: &Path, symbol: &str, absorbing: &[String]) -> Result<Report, String> {
    let a = load_automaton(path)?;
    let map = a.symbol_map(symbol_of(&a, symbol)?);
    let h: Vec<usize> = if absorbing.is_empty() {
        map.fixed_points()
    } else {
        absorbing
            .iter()
            .map(|s| a.state_index(s).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?
    };
    let b = automaton::basin(&map, &h).map_err(|e| e.to_string())?;
    let eigen = automaton::check_basin_eigenfunction(&map, &h).map_err(|e| e.to_string())?;
    let names = a.states();
    Ok(Report::new(
        0,
        format!(
            "absorbing set {{{}}}\nbasin {{{}}}\nindicator is an eigenfunction at 1: {eigen}",
            state_list(names, &h),
            state_list(names, &b)
        ),
        format!(
            "basin absorbing={{{}}} states={{{}}} eigenfunction={eigen}",
            state_list(names, &h),
            state_list(names, &b)
        ),
    ))
}

fn cycles(path: &Path) -> Result<Report, String> {
    let g = load_graph(path)?;
    Ok(match cycle_weight_check(&g) {
        CycleCheck::Consistent { potentials } => {
            let pots: Vec<String> = g
                .names()
                .iter()
                .zip(&potentials)
                .map(|(n, p)| format!("{n}={p}"))
                .collect();
            Report::new(
                0,
                format!("every cycle has product 1\npotentials: {}", pots.join(" ")),
                "cycles consistent".into(),
            )
        }
        CycleCheck::Violation { cycle, product } => {
            let c = state_list(g.names(), &cycle);
            Report::new(
                0,
                format!("cycle {c} has product {product}"),
                format!("cycles violation cycle={c} product={product}"),
            )
        }
    })
}

fn dist(d: Option<usize>) -> String {
    d.map_or_else(|| "inf".into(), |d| d.to_string())
}

fn distance(src: &GraphSource, from: Option<&str>, to: Option<&str>) -> Result<Report, String> {
    let g = load_transition_graph(src)?;
    let table = topology::dynamical_distance(&g);
    let index = |s: &str| {
        g.names()
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| format!("unknown state `{s}`"))
    };
    if let (Some(p), Some(q)) = (from, to) {
        let d = dist(table.get(index(p)?, index(q)?));
        return Ok(Report::new(
            0,
            format!("d({p}, {q}) = {d}"),
            format!("distance from={p} to={q} d={d}"),
        ));
    }
    let rows: Vec<String> = table
        .rows()
        .iter()
        .map(|r| r.iter().map(|&d| dist(d)).collect::<Vec<_>>().join(" "))
        .collect();
    let mut human = String::new();
    let _ = writeln!(human, "from \\ to: {}", g.names().join(" "));
    for (n, r) in g.names().iter().zip(&rows) {
        let _ = writeln!(human, "{n}: {r}");
    }
    Ok(Report::new(
        0,
        human.trim_end().to_string(),
        format!("distance rows=[{}]", rows.join(";")),
    ))
}

fn topology_cmd(src: &GraphSource, radius: usize) -> Result<Report, String> {
    let g = load_transition_graph(src)?;
    let r = topology::topologies_equal(&g, radius).map_err(|e| e.to_string())?;
    let mut machine = format!(
        "topology equal={} radius={radius} subsets={} open_sets={}",
        r.equal, r.subsets_checked, r.open_sets
    );
    let human = match &r.counterexample {
        None => format!(
            "the topologies coincide: {} open sets among {} subsets",
            r.open_sets, r.subsets_checked
        ),
        Some(c) => {
            let _ = write!(machine, " counterexample={{{}}}", state_list(g.names(), c));
            format!(
                "the topologies differ on {{{}}}",
                state_list(g.names(), c)
            )
        }
    };
    Ok(Report::new(0, human, machine))
}

fn oracle_check(q: &QueryArgs, limits: Limits) -> Result<Report, String> {
    let query = build_query(q, limits)?;
    let v = query.reach_semidecide();
    let o = oracle::window_reach(
        &query.system,
        &query.from,
        &query.to,
        query.budget,
        oracle::DEFAULT_MAX_WORDS,
    )
    .map_err(|e| format!("oracle: {e}"))?;
    let alphabet = query.system.alphabet();
    let engine = verdict_fields(&v, alphabet);
    let oracle_text = match &o {
        WindowReach::Hit { t, .. } => format!("hit t={t}"),
        WindowReach::NoneWithin(n) => format!("none within={n}"),
    };
    if let HaltingVerdict::Unknown {
        reason: UnknownReason::Resource(_),
        ..
    } = v
    {
        return Ok(Report::new(
            3,
            format!("engine: {engine}\noracle: {oracle_text}\nno comparison: the engine ran out of room"),
            format!("oracle-check agree=unknown engine=({engine}) oracle=({oracle_text})"),
        ));
    }
    let agree = v.hit_time() == o.hit_time();
    Ok(Report::new(
        if agree { 0 } else { 2 },
        format!("engine: {engine}\noracle: {oracle_text}\nagree: {agree}"),
        format!("oracle-check agree={agree} engine=({engine}) oracle=({oracle_text})"),
    ))
}

fn run(cli: &Cli) -> Result<Report, String> {
    if cli.window_cap == 0 {
        return Err("window cap must be positive".into());
    }
    let limits = Limits::with_max_width(cli.window_cap);
    match &cli.command {
        Command::Reach(q) => reach(q, limits),
        Command::Resolvent { query, order } => resolvent(query, *order, limits),
        Command::SpanDim {
            system,
            observable,
            set,
            budget,
        } => span_dim(system, observable.as_deref(), set.as_deref(), *budget, limits),
        Command::Spectrum { automaton, symbol } => spectrum(automaton, symbol),
        Command::Basin {
            automaton,
            symbol,
            absorbing,
        } => basin(automaton, symbol, absorbing),
        Command::Cycles { graph } => cycles(graph),
        Command::Distance { source, from, to } => distance(source, from.as_deref(), to.as_deref()),
        Command::Topology { source, radius } => topology_cmd(source, *radius),
        Command::OracleCheck(q) => oracle_check(q, limits),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.machine {
                println!("RESULT {}", report.machine);
            } else {
                println!("{}", report.human);
            }
            process::exit(report.code);
        }
        Err(e) => {
            eprintln!("koopman: {e}");
            process::exit(1);
        }
    }
}
