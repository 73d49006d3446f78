//! The `gbal` command line. [`run`] takes argv and the two output streams so
//! the integration tests can drive it in-process.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use greedy_balance::document::{format_poset, format_poset_with_comment, parse_poset};
use greedy_balance::generators::{random_nfree, random_poset, random_sp, DEFAULT_NFREE_ATTEMPTS};
use greedy_balance::greedy::{
    balance_report_with, count_extensions, enumerate_extensions, gp_ratio, jump_count,
    ExtensionKind, DEFAULT_CAP,
};
use greedy_balance::ratio::{fraction_string, parse_fraction};
use greedy_balance::report::{
    balance_json, count_json, extensions_json, poset_json, suite_json, witness_json, Report,
};
use greedy_balance::theorems::{count_disjoint_sum, good_triples, removable_minimals};
use greedy_balance::verify::{run_suite, width2_sweep, VerifyOptions, SUITES};
use greedy_balance::{half_balanced_witness, Error, ErrorClass, Poset, SpExpr};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "gbal",
    version,
    about = "Greedy linear extensions and balanced pairs"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural summary of a poset.
    Analyze { file: PathBuf },
    /// Enumerate or count greedy linear extensions.
    Greedy {
        #[command(subcommand)]
        action: GreedyAction,
    },
    /// Greedy balance of every incomparable pair.
    Balance {
        file: PathBuf,
        /// Threshold such as `1/3`.
        #[arg(long)]
        alpha: Option<String>,
        /// Use all linear extensions instead of greedy ones.
        #[arg(long)]
        all_extensions: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// A pair with greedy ratio exactly 1/2 in an N-free non-chain poset.
    Witness { file: PathBuf },
    /// Generate a poset document.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run a named property suite.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Exhaustive sweeps.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
}

#[derive(Subcommand, Debug)]
enum GreedyAction {
    Enum {
        file: PathBuf,
        /// Print at most this many extensions.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    Count {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Enum)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Enum,
    Formula,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Random series-parallel poset.
    Sp {
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random order from a random DAG with edge probability `p`.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random N-free poset by rejection, falling back to series-parallel.
    Nfree {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_NFREE_ATTEMPTS)]
        attempts: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Evaluate an expression such as `lin(chain(2),dis(chain(1),chain(1)))`.
    Expr {
        expr: String,
        #[command(flatten)]
        common: GenCommon,
    },
}

#[derive(Args, Debug)]
struct GenCommon {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the document here instead of the output stream.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum SweepKind {
    Width2 {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&str> = SUITES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
    /// A suite ran but some property failed.
    Unverified,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e.class() {
                ErrorClass::InvalidInput => EXIT_INVALID_INPUT,
                ErrorClass::Precondition => EXIT_PRECONDITION,
                ErrorClass::Limit => EXIT_LIMIT,
            }
        }
        Err(Failure::Io(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INVALID_INPUT
        }
        Err(Failure::Unverified) => {
            let _ = writeln!(err, "error: some properties failed");
            EXIT_PRECONDITION
        }
    }
}

fn read_poset(path: &Path) -> std::result::Result<Poset, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_poset(&text).map_err(|e| match e {
        Error::Syntax { line, message } => {
            Failure::Io(format!("{}:{line}: {message}", path.display()))
        }
        other => Failure::Core(other),
    })
}

fn emit(out: &mut dyn Write, json: bool, report: Report, text: String) -> Outcome {
    let rendered = if json { report.to_json() + "\n" } else { text };
    out.write_all(rendered.as_bytes())
        .map_err(|e| Failure::Io(e.to_string()))
}

fn file_input(path: &Path, poset: &Poset) -> Value {
    json!({ "file": path.display().to_string(), "poset": poset_json(poset) })
}

fn names(poset: &Poset, xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter()
        .map(|x| poset.name(x))
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Analyze { file } => analyze(file, cli.json, out),
        Command::Greedy {
            action: GreedyAction::Enum { file, limit, cap },
        } => greedy_enum(file, *limit, *cap, cli.json, out),
        Command::Greedy {
            action: GreedyAction::Count { file, method, cap },
        } => greedy_count(file, *method, *cap, cli.json, out),
        Command::Balance {
            file,
            alpha,
            all_extensions,
            cap,
        } => balance(file, alpha.as_deref(), *all_extensions, *cap, cli.json, out),
        Command::Witness { file } => witness(file, cli.json, out),
        Command::Gen { kind } => generate(kind, out),
        Command::Verify {
            suite,
            instances,
            seed,
            max_n,
        } => {
            let options = VerifyOptions {
                instances: *instances,
                seed: *seed,
                max_n: *max_n,
            };
            verify(suite, options, cli.json, out)
        }
        Command::Sweep {
            kind: SweepKind::Width2 { max_n },
        } => sweep_width2(*max_n, cli.json, out),
    }
}

fn analyze(file: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let p = read_poset(file)?;
    let n_witness = p.find_n();
    let components = p.connected_components();
    let triples = good_triples(&p);
    let removable = removable_minimals(&p);
    let mut text = String::new();
    text.push_str(&format!("elements: {}\n", p.len()));
    text.push_str(&format!("width: {}\n", p.width()));
    text.push_str(&format!("minimal: {}\n", names(&p, p.minimals().iter())));
    text.push_str(&format!("maximal: {}\n", names(&p, p.maximals().iter())));
    text.push_str(&format!("chain: {}\n", yes_no(p.is_chain())));
    match &n_witness {
        None => text.push_str("n-free: yes\n"),
        Some(w) => text.push_str(&format!(
            "n-free: no (N on {} {} {} {})\n",
            p.name(w.a),
            p.name(w.b),
            p.name(w.c),
            p.name(w.d)
        )),
    }
    text.push_str(&format!("components: {}\n", components.len()));
    for c in &components {
        text.push_str(&format!("  {{{}}}\n", names(&p, c.iter().copied())));
    }
    text.push_str(&format!("good triples: {}\n", triples.len()));
    for t in &triples {
        text.push_str(&format!(
            "  ({}, {}, {})\n",
            p.name(t.x),
            p.name(t.y),
            p.name(t.z)
        ));
    }
    let removable_text = match removable.is_empty() {
        true => "none".to_string(),
        false => names(&p, removable.iter().copied()),
    };
    text.push_str(&format!("removable minimals: {removable_text}\n"));
    let results = json!({
        "width": p.width(),
        "minimal": p.minimals().iter().map(|x| p.name(x)).collect::<Vec<_>>(),
        "maximal": p.maximals().iter().map(|x| p.name(x)).collect::<Vec<_>>(),
        "is_chain": p.is_chain(),
        "is_n_free": n_witness.is_none(),
        "n_witness": n_witness.map(|w| [w.a, w.b, w.c, w.d].map(|x| p.name(x))),
        "components": components
            .iter()
            .map(|c| c.iter().map(|&x| p.name(x)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "good_triples": triples
            .iter()
            .map(|t| [t.x, t.y, t.z].map(|x| p.name(x)))
            .collect::<Vec<_>>(),
        "removable_minimals": removable.iter().map(|&x| p.name(x)).collect::<Vec<_>>(),
    });
    emit(
        out,
        json,
        Report::new("analyze", file_input(file, &p), results),
        text,
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn greedy_enum(
    file: &Path,
    limit: Option<usize>,
    cap: u64,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let p = read_poset(file)?;
    let all = enumerate_extensions(&p, ExtensionKind::Greedy, cap)?;
    let shown = &all[..limit.unwrap_or(all.len()).min(all.len())];
    let mut text = String::new();
    for l in shown {
        text.push_str(&format!(
            "{}  jumps {}\n",
            names(&p, l.order().iter().copied()),
            jump_count(&p, l.order())
        ));
    }
    text.push_str(&format!("total {}\n", all.len()));
    let results = json!({
        "total": all.len().to_string(),
        "shown": shown.len(),
        "extensions": extensions_json(&p, shown),
    });
    emit(
        out,
        json,
        Report::new("greedy enum", file_input(file, &p), results),
        text,
    )
}

fn greedy_count(file: &Path, method: Method, cap: u64, json: bool, out: &mut dyn Write) -> Outcome {
    let p = read_poset(file)?;
    let enumerated = count_extensions(&p, ExtensionKind::Greedy, cap)?;
    let (text, results) = match method {
        Method::Enum => (
            format!("{enumerated}\n"),
            json!({ "count": count_json(&enumerated) }),
        ),
        Method::Formula => {
            let components: Vec<Poset> = p
                .connected_components()
                .into_iter()
                .map(|c| p.induced(c.into_iter().collect()).map(|(q, _)| q))
                .collect::<Result<_, _>>()?;
            let formula = count_disjoint_sum(&components)?;
            let agrees = formula == enumerated;
            (
                format!(
                    "{formula}\ncomponents {}\nagrees with enumeration: {}\n",
                    components.len(),
                    yes_no(agrees)
                ),
                json!({
                    "count": count_json(&formula),
                    "components": components.len(),
                    "enumerated": count_json(&enumerated),
                    "agrees": agrees,
                }),
            )
        }
    };
    let input = file_input(file, &p);
    emit(out, json, Report::new("greedy count", input, results), text)
}

fn balance(
    file: &Path,
    alpha: Option<&str>,
    all_extensions: bool,
    cap: u64,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let p = read_poset(file)?;
    let alpha = alpha.map(parse_fraction).transpose().map_err(|_| {
        Failure::Io(format!(
            "invalid --alpha {:?}; expected a fraction like 1/3",
            alpha.unwrap_or("")
        ))
    })?;
    let kind = if all_extensions {
        ExtensionKind::All
    } else {
        ExtensionKind::Greedy
    };
    let report = balance_report_with(&p, alpha, kind, cap)?;
    let mut text = format!("extensions: {} ({})\n", report.total, kind.as_str());
    for pair in &report.pairs {
        let (x, y) = (p.name(pair.x), p.name(pair.y));
        text.push_str(&format!(
            "{x} before {y}: {}; {y} before {x}: {}\n",
            pair.ratio,
            pair.ratio.complement()
        ));
    }
    match (&report.best_pair, &report.best_level) {
        (Some((x, y)), Some(level)) => text.push_str(&format!(
            "best pair: ({}, {}) at level {}\n",
            p.name(*x),
            p.name(*y),
            fraction_string(level)
        )),
        _ => text.push_str("best pair: none (no incomparable pairs)\n"),
    }
    if let (Some(a), Some(meets)) = (&report.alpha, report.meets_alpha) {
        let within: Vec<String> = report
            .pairs_within(a)
            .iter()
            .map(|pr| format!("({}, {})", p.name(pr.x), p.name(pr.y)))
            .collect();
        text.push_str(&format!(
            "alpha {}: {}\n",
            fraction_string(a),
            if meets {
                "some pair is balanced"
            } else {
                "no pair is balanced"
            }
        ));
        if !within.is_empty() {
            text.push_str(&format!("balanced pairs: {}\n", within.join(" ")));
        }
    }
    let results = balance_json(&p, &report);
    emit(
        out,
        json,
        Report::new("balance", file_input(file, &p), results),
        text,
    )
}

fn witness(file: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let p = read_poset(file)?;
    let w = half_balanced_witness(&p)?;
    let ratio = gp_ratio(&p, w.x, w.y)?;
    let mut text = String::new();
    for step in &w.trace {
        text.push_str(&format!("{step}\n"));
    }
    text.push_str(&format!("pair: ({}, {})\n", p.name(w.x), p.name(w.y)));
    text.push_str(&format!(
        "GP({} < {}) = {}\n",
        p.name(w.x),
        p.name(w.y),
        ratio
    ));
    emit(
        out,
        json,
        Report::new(
            "witness",
            file_input(file, &p),
            witness_json(&p, &w, &ratio),
        ),
        text,
    )
}

fn generate(kind: &GenKind, out: &mut dyn Write) -> Outcome {
    let (poset, comment, common) = match kind {
        GenKind::Sp { n, common } => (
            random_sp(*n, common.seed)?,
            format!("gen sp {n} --seed {}", common.seed),
            common,
        ),
        GenKind::Random { n, p, common } => (
            random_poset(*n, *p, common.seed)?,
            format!("gen random {n} --p {p} --seed {}", common.seed),
            common,
        ),
        GenKind::Nfree {
            n,
            attempts,
            common,
        } => (
            random_nfree(*n, common.seed, *attempts)?,
            format!("gen nfree {n} --attempts {attempts} --seed {}", common.seed),
            common,
        ),
        GenKind::Expr { expr, common } => {
            let parsed: SpExpr = expr.parse()?;
            (parsed.eval()?, format!("gen expr {parsed}"), common)
        }
    };
    let text = format_poset_with_comment(&poset, &comment);
    match &common.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn verify(suite: &str, options: VerifyOptions, json: bool, out: &mut dyn Write) -> Outcome {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut outcomes = Vec::new();
    let mut text = String::new();
    for name in names {
        let outcome = run_suite(name, options)?;
        for prop in &outcome.properties {
            text.push_str(&format!(
                "{} {}: {} ({})\n",
                if prop.passed { "PASS" } else { "FAIL" },
                outcome.suite,
                prop.property,
                prop.detail
            ));
        }
        outcomes.push(outcome);
    }
    let passed = outcomes.iter().all(|o| o.passed());
    let input = json!({
        "suite": suite,
        "instances": options.instances,
        "seed": options.seed,
        "max_n": options.max_n,
    });
    let results = json!({
        "passed": passed,
        "suites": outcomes.iter().map(suite_json).collect::<Vec<_>>(),
    });
    emit(out, json, Report::new("verify", input, results), text)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Unverified)
    }
}

fn sweep_width2(max_n: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let summary = width2_sweep(max_n)?;
    let min = summary.min_level.as_ref().map(fraction_string);
    let mut text = format!(
        "width-2 posets with 2..={max_n} elements: {}\nminimum best level: {}\n",
        summary.instances,
        min.as_deref().unwrap_or("none")
    );
    if let Some(p) = &summary.argmin {
        text.push_str("first attained by:\n");
        text.push_str(&indent(&format_poset(p)));
    }
    text.push_str(&format!("below 1/3: {}\n", summary.below_third.len()));
    for p in &summary.below_third {
        text.push_str(&indent(&format_poset(p)));
    }
    if summary.inconsistent > 0 {
        text.push_str(&format!(
            "inconsistent instances: {}\n",
            summary.inconsistent
        ));
    }
    let results = json!({
        "instances": summary.instances.to_string(),
        "min_level": min,
        "argmin": summary.argmin.as_ref().map(poset_json),
        "below_third": summary.below_third.iter().map(poset_json).collect::<Vec<_>>(),
        "inconsistent": summary.inconsistent.to_string(),
    });
    emit(
        out,
        json,
        Report::new("sweep width2", json!({ "max_n": max_n }), results),
        text,
    )?;
    if summary.inconsistent > 0 {
        return Err(Failure::Unverified);
    }
    Ok(())
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
