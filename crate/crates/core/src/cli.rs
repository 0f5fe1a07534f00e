//! The `toyqm` command line.
//!
//! Exit codes: 0 success, 1 verification or domain failure, 2 usage error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::correspondence::{
    classify_all, coefficient, compare_sum_definitions, epistemic_of, ket_of, ClassificationReport,
    REPORT_SCHEMA,
};
use crate::error::Error;
use crate::f5qm::{superpose, superpose_raw, Observable};
use crate::field::F5;
use crate::outcome::Axis;
use crate::projective::{enumerate_states, is_product, pairing, Named};
use crate::spekkens::{
    epistemic_states, pair_states, simulate_sequence, EpistemicState, OnticState, SimulationReport,
    SpekkensObservable, SumVariant,
};
use crate::verify::{self, VerifyResult};

#[derive(Debug, Parser)]
#[command(name = "toyqm", version, about = "Exact comparison of the Spekkens toy model with quantum mechanics over F5")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    P1,
    P3,
    Spekkens1,
    Spekkens2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kets, bras, the pairing table and the observables.
    Tables,
    /// List a state space with counts.
    Enumerate {
        #[arg(value_enum)]
        space: Space,
    },
    /// Run every verification suite.
    Verify,
    /// Classify the 24 entangled toy-model states against P3(F5).
    Classify,
    /// Monte Carlo measurement sequences in the toy model.
    Simulate {
        #[arg(long)]
        state: EpistemicState,
        /// Comma-separated, e.g. X,Z.
        #[arg(long, value_delimiter = ',', required = true)]
        observables: Vec<Axis>,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sum two epistemic states through F5: `superpose 1v2 1 1v3`.
    Superpose {
        #[arg(required_unless_present = "compare_sums")]
        left: Option<EpistemicState>,
        #[arg(required_unless_present = "compare_sums")]
        variant: Option<SumVariant>,
        #[arg(required_unless_present = "compare_sums")]
        right: Option<EpistemicState>,
        /// Compare the disjoint-sum rule with the F5-induced sums instead.
        #[arg(long, conflicts_with_all = ["left", "variant", "right"])]
        compare_sums: bool,
    },
}

/// A finished command: rendered output plus exit code.
pub struct Output {
    pub body: String,
    pub code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Usage errors go to `err` with exit code 2.
pub fn run<'a, I, T>(args: I, out: &'a mut dyn Write, err: &'a mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let sink = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if e.is_usage() { 2 } else { 1 };
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &result.body).map_err(|e| e.to_string()),
        None => out.write_all(result.body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    result.code
}

pub fn execute(cli: &Cli) -> Result<Output, Error> {
    let f = cli.format;
    match &cli.command {
        Command::Tables => Ok(Output::ok(cmd_tables(f))),
        Command::Enumerate { space } => Ok(Output::ok(cmd_enumerate(*space, f))),
        Command::Verify => {
            let r = verify::run_all(&verify::EXPECTED);
            Ok(Output { code: if r.passed() { 0 } else { 1 }, body: render_verify(&r, f) })
        }
        Command::Classify => Ok(Output::ok(render_classify(&classify_all(), f))),
        Command::Simulate { state, observables, trials, seed } => {
            let seq: Vec<_> = observables.iter().map(|a| SpekkensObservable::of(*a)).collect();
            if seq.is_empty() {
                return Err(Error::Parse("at least one observable is required".into()));
            }
            let r = simulate_sequence(*state, &seq, *trials, *seed)?;
            Ok(Output::ok(render_simulation(&r, f)))
        }
        Command::Superpose { compare_sums: true, .. } => Ok(Output::ok(cmd_compare_sums(f))),
        Command::Superpose { left: Some(l), variant: Some(v), right: Some(r), .. } => {
            cmd_superpose(*l, *v, *r, f).map(Output::ok)
        }
        Command::Superpose { .. } => Err(Error::Parse("superpose needs LEFT VARIANT RIGHT".into())),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn with_schema(kind: &str, mut body: Value) -> String {
    if let Value::Object(m) = &mut body {
        m.insert("schema".into(), json!(REPORT_SCHEMA));
        m.insert("kind".into(), json!(kind));
    }
    to_json(&body)
}

fn cmd_tables(format: Format) -> String {
    let observables = [(Axis::X, Named::C, Named::D), (Axis::Y, Named::E, Named::F), (Axis::Z, Named::A, Named::B)];
    if format == Format::Json {
        let names = |f: &dyn Fn(Named) -> Value| -> Value {
            Named::ALL.iter().map(|n| (n.letter().to_string(), f(*n))).collect::<serde_json::Map<_, _>>().into()
        };
        let table = names(&|bra| names(&|ket| json!(pairing(&bra.bra(), &ket.ket()))));
        let obs: serde_json::Map<String, Value> = observables
            .iter()
            .map(|(a, p, m)| (a.to_string(), json!({"+1": p.letter().to_string(), "-1": m.letter().to_string()})))
            .collect();
        return with_schema(
            "tables",
            json!({
                "kets": names(&|n| json!(n.ket().components())),
                "bras": names(&|n| json!(n.bra().components())),
                "pairing": table,
                "observables": obs,
            }),
        );
    }
    let mut s = String::new();
    s.push_str("kets:\n");
    for n in Named::ALL {
        let _ = writeln!(s, "  |{n}⟩ = {}", n.ket());
    }
    s.push_str("bras:\n");
    for n in Named::ALL {
        let _ = writeln!(s, "  ⟨{n}| = {}", n.bra());
    }
    s.push_str("pairing ⟨row|column⟩:\n");
    s.push_str("      ");
    for n in Named::ALL {
        let _ = write!(s, "{:>5}", format!("|{n}⟩"));
    }
    s.push('\n');
    for (i, bra) in Named::ALL.iter().enumerate() {
        if i % 2 == 0 {
            let _ = writeln!(s, "  {}", "-".repeat(34));
        }
        let _ = write!(s, "  ⟨{bra}| ");
        for ket in Named::ALL {
            let _ = write!(s, "{:>5}", pairing(&bra.bra(), &ket.ket()).to_string());
        }
        s.push('\n');
    }
    let _ = writeln!(s, "  {}", "-".repeat(34));
    s.push_str("observables (+1, -1):\n");
    for (a, p, m) in observables {
        let o = Observable::of(a);
        debug_assert_eq!((o.plus, o.minus), (p.bra(), m.bra()));
        let _ = writeln!(s, "  {a} = {{⟨{p}|, ⟨{m}|}}");
    }
    s
}

fn cmd_enumerate(space: Space, format: Format) -> String {
    let (space_name, rows, summary, counts): (&str, Vec<(String, String)>, String, Value) = match space {
        Space::P1 => {
            let states = enumerate_states::<2>();
            let rows = states
                .iter()
                .map(|s| (s.to_string(), s.named().map(|n| n.to_string()).unwrap_or_default()))
                .collect();
            ("p1", rows, format!("{} total", states.len()), json!({"total": states.len()}))
        }
        Space::P3 => {
            let states = enumerate_states::<4>();
            let products = states.iter().filter(|s| is_product(s).is_some()).count();
            let rows = states
                .iter()
                .map(|s| (s.to_string(), s.factored().unwrap_or_else(|| "entangled".into())))
                .collect();
            let entangled = states.len() - products;
            (
                "p3",
                rows,
                format!("{} total, {products} product, {entangled} entangled", states.len()),
                json!({"total": states.len(), "product": products, "entangled": entangled}),
            )
        }
        Space::Spekkens1 => {
            let rows = epistemic_states()
                .iter()
                .map(|e| (e.to_string(), format!("|{}⟩", ket_of(*e).named().expect("named"))))
                .collect();
            ("spekkens1", rows, "6 epistemic states".into(), json!({"total": 6}))
        }
        Space::Spekkens2 => {
            let (products, entangled) = pair_states();
            let rows = products
                .iter()
                .map(|s| (s.to_string(), "product".to_string()))
                .chain(entangled.iter().map(|s| (s.to_string(), "entangled".to_string())))
                .collect();
            (
                "spekkens2",
                rows,
                format!("{} product, {} entangled", products.len(), entangled.len()),
                json!({"product": products.len(), "entangled": entangled.len()}),
            )
        }
    };
    if format == Format::Json {
        let states: Vec<Value> = rows.iter().map(|(s, d)| json!({"state": s, "label": d})).collect();
        return with_schema("enumerate", json!({"space": space_name, "states": states, "counts": counts}));
    }
    let mut s = String::new();
    for (state, label) in rows {
        let line = format!("{state:<12} {label}");
        let _ = writeln!(s, "{}", line.trim_end());
    }
    let _ = writeln!(s, "{summary}");
    s
}

fn render_verify(r: &VerifyResult, format: Format) -> String {
    if format == Format::Json {
        return to_json(r);
    }
    let mut s = String::new();
    for suite in &r.suites {
        let _ = writeln!(s, "{suite}");
    }
    let failed = r.suites.iter().filter(|x| !x.passed()).count();
    if failed == 0 {
        let _ = writeln!(s, "all {} suites passed", r.suites.len());
    } else {
        let _ = writeln!(s, "{failed} of {} suites failed", r.suites.len());
    }
    s
}

fn render_classify(r: &ClassificationReport, format: Format) -> String {
    if format == Format::Json {
        return to_json(r);
    }
    let mut s = String::new();
    for row in &r.rows {
        let parity = if row.even { "even" } else { "odd" };
        let _ = writeln!(s, "{}  {parity}  matched={}", row.perm, row.matched);
        for a in OnticState::ALL {
            let target = row.perm.apply(a);
            let cells: Vec<&str> =
                OnticState::ALL.iter().map(|b| if *b == target { "#" } else { "." }).collect();
            let _ = writeln!(s, "    {}", cells.join(" "));
        }
        let analogs: Vec<String> = row.analogs.iter().map(|a| a.to_string()).collect();
        let _ = writeln!(
            s,
            "  analogs: {}",
            if analogs.is_empty() { "none".to_string() } else { analogs.join(" ") }
        );
        for (k, e) in row.profile.iter() {
            let _ = writeln!(
                s,
                "  {k:<10} {:<4} {}",
                e.probability.to_string(),
                e.post.factored().unwrap_or_else(|| e.post.to_string())
            );
        }
    }
    let _ = writeln!(s, "{} matched, {} unmatched", r.matched, r.unmatched);
    let _ = writeln!(s, "matched are exactly the odd permutations: {}", r.matched_are_odd);
    let _ = writeln!(s, "analog lists disjoint: {}; sizes {:?}; distinct analogs {}", r.analogs_disjoint, r.analog_counts, r.analog_states_total);
    s
}

fn render_simulation(r: &SimulationReport, format: Format) -> String {
    if format == Format::Json {
        let mut v = serde_json::to_value(r).expect("serializable");
        if let Value::Object(m) = &mut v {
            m.insert("schema".into(), json!(REPORT_SCHEMA));
            m.insert("kind".into(), json!("simulate"));
        }
        return to_json(&v);
    }
    let mut s = String::new();
    let _ = writeln!(s, "initial {}, {} trials, seed {}", r.initial, r.trials, r.seed);
    for (i, step) in r.steps.iter().enumerate() {
        let _ = write!(
            s,
            "step {} {}: +1 {:.5} (exact {})  -1 {:.5} (exact {})",
            i + 1,
            step.observable,
            step.freq_plus(),
            step.exact_plus,
            step.freq_minus(),
            step.exact_minus
        );
        if let Some(rep) = step.repeats {
            let _ = write!(s, "  repeats previous outcome {:.5}", rep as f64 / r.trials as f64);
        }
        s.push('\n');
    }
    let _ = writeln!(s, "knowledge balance held: {}", r.knowledge_balance_held);
    s
}

fn coefficient_term(k: F5) -> String {
    match k.value() {
        1 => "+".into(),
        -1 => "-".into(),
        v if v > 0 => format!("+{v}"),
        v => v.to_string(),
    }
}

fn scalar_prefix(k: F5) -> String {
    match k.value() {
        1 => String::new(),
        -1 => "-".into(),
        v => v.to_string(),
    }
}

fn cmd_superpose(left: EpistemicState, variant: SumVariant, right: EpistemicState, format: Format) -> Result<String, Error> {
    let (u, v) = (ket_of(left), ket_of(right));
    let lambda = coefficient(variant);
    let raw = superpose_raw(&u, lambda, &v);
    let canonical = superpose(&u, lambda, &v)?;
    let result = epistemic_of(&canonical)?;
    let name = |s: &crate::projective::SingleState| s.named().expect("single-system states are named");
    let scalar = canonical.scalar_of(&raw).expect("raw sum lies in its own class");
    if format == Format::Json {
        return Ok(with_schema(
            "superpose",
            json!({
                "left": left,
                "variant": variant,
                "right": right,
                "coefficient": lambda,
                "raw": raw.to_string(),
                "scalar": scalar,
                "canonical": canonical.to_string(),
                "result": result,
            }),
        ));
    }
    let lhs = format!("|{}⟩{}|{}⟩", name(&u), coefficient_term(lambda), name(&v));
    let tail = if scalar == F5::ONE {
        format!("|{}⟩", name(&canonical))
    } else {
        format!("{}|{}⟩ ≐ |{}⟩", scalar_prefix(scalar), name(&canonical), name(&canonical))
    };
    Ok(format!("{result} ({lhs} = {tail})\n"))
}

fn cmd_compare_sums(format: Format) -> String {
    let c = compare_sum_definitions();
    if format == Format::Json {
        let mut v = serde_json::to_value(&c).expect("serializable");
        if let Value::Object(m) = &mut v {
            m.insert("schema".into(), json!(REPORT_SCHEMA));
            m.insert("kind".into(), json!("compare-sums"));
        }
        return to_json(&v);
    }
    let mut s = String::new();
    for r in &c.rows {
        let _ = writeln!(
            s,
            "({}) {} ({})  disjoint-rule {}  induced {}  {}",
            r.left,
            r.variant,
            r.right,
            r.disjoint_rule,
            r.induced_rule,
            if r.agree { "agree" } else { "DISAGREE" }
        );
    }
    let _ = writeln!(s, "{} disagreements of {}", c.disagreements, c.rows.len());
    s
}
