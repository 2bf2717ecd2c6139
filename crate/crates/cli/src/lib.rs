//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with in-memory streams.
//!
//! Exit codes: 0 for YES (or success), 1 for NO, 2 for usage errors and failures.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use schubert::lp::solve_feasibility_traced;
use schubert::oracle::all_schubert_polynomials;
use schubert::perm::{
    accessible_box, essential_set, oneline_to_code, permutations, render_rothe, rothe_diagram, Code,
};
use schubert::schubitope::{
    compressed_instance, decide_nonvanishing_with, witness_with, CompressionKind, DecideOptions,
    Engine,
};
use schubert::tableaux::Tableau;
use schubert::transition::{count_coefficient, transition_tree, TREE_BUDGET};

pub const SCHEMA: &str = "1";
const SELFCHECK_MAX_N: usize = 6;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Decide, count and certify Schubert polynomial coefficients"
)]
struct Cli {
    /// Emit one JSON object per answer.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print YES if the coefficient of x^alpha is positive, NO otherwise.
    Decide(QueryArgs),
    /// Print the coefficient of x^alpha.
    Count(QueryArgs),
    /// Print a perfect tableau of content alpha, or NONE.
    Witness(QueryArgs),
    /// Draw the Rothe diagram.
    Render {
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        code: List,
        /// Draw the hooks of the permutation dots.
        #[arg(long)]
        rays: bool,
    },
    /// Dump the transition tree.
    Tree {
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        code: List,
        /// Maximum number of tree nodes.
        #[arg(long, default_value_t = TREE_BUDGET)]
        budget: usize,
    },
    /// Compare every engine with the polynomial oracle on all of S_n.
    Selfcheck {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(1..=SELFCHECK_MAX_N as i64))]
        n: u8,
    },
}

#[derive(Args, Clone)]
struct QueryArgs {
    /// Lehmer code, comma separated.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, required_unless_present = "stdin")]
    code: Option<List>,
    /// Exponent vector, comma separated; may be empty.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, num_args = 0..=1,
          default_value = "", default_missing_value = "")]
    alpha: List,
    /// Read one query per line from standard input: `CODE [ALPHA]`.
    #[arg(long, conflicts_with = "code")]
    stdin: bool,
    /// Decide on the uncompressed tableau polytope.
    #[arg(long)]
    trivial_compression: bool,
    #[arg(long, value_enum, default_value_t = EngineArg::Flow)]
    engine: EngineArg,
    /// Print the compressed instance and the simplex trace to stderr.
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Flow,
    Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct List(Vec<usize>);

fn parse_list(s: &str) -> Result<List, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(List(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            if t.starts_with('-') {
                return Err(format!("negative entry `{t}`"));
            }
            t.parse::<usize>()
                .map_err(|_| format!("malformed integer `{t}`"))
        })
        .collect::<Result<_, _>>()
        .map(List)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Decide,
    Count,
    Witness,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Decide => "decide",
            Kind::Count => "count",
            Kind::Witness => "witness",
        }
    }
}

#[derive(Serialize)]
struct Query {
    code: Vec<usize>,
    alpha: Vec<usize>,
}

type Answered = (Code, Vec<usize>, Answer);

struct Answer {
    text: String,
    result: Value,
    witness: Value,
    status: i32,
}

fn tableau_json(t: &Tableau) -> Value {
    let cells: Vec<Value> = t.labels().map(|((r, c), l)| json!([r, c, l])).collect();
    json!({ "cells": cells, "render": t.render() })
}

fn answer(kind: Kind, code: &Code, alpha: &[usize], opts: DecideOptions) -> Result<Answer, String> {
    Ok(match kind {
        Kind::Decide => {
            let yes = decide_nonvanishing_with(code, alpha, opts);
            let word = if yes { "YES" } else { "NO" };
            Answer {
                text: word.into(),
                result: json!(word),
                witness: Value::Null,
                status: i32::from(!yes),
            }
        }
        Kind::Count => {
            let c = count_coefficient(code, alpha).to_string();
            Answer {
                text: c.clone(),
                result: json!(c),
                witness: Value::Null,
                status: 0,
            }
        }
        Kind::Witness => match witness_with(code, alpha, opts).map_err(|e| e.to_string())? {
            Some(t) => Answer {
                text: t.render().trim_end_matches('\n').to_string(),
                result: json!("YES"),
                witness: tableau_json(&t),
                status: 0,
            },
            None => Answer {
                text: "NONE".into(),
                result: json!("NO"),
                witness: Value::Null,
                status: 1,
            },
        },
    })
}

fn envelope(kind: Kind, code: &Code, alpha: &[usize], a: &Answer) -> Value {
    json!({
        "schema": SCHEMA,
        "command": kind.name(),
        "query": Query { code: code.entries().to_vec(), alpha: alpha.to_vec() },
        "result": a.result,
        "witness": a.witness,
    })
}

fn error_json(command: &str, msg: &str) -> Value {
    json!({ "schema": SCHEMA, "command": command, "error": msg })
}

fn options(q: &QueryArgs) -> DecideOptions {
    DecideOptions {
        compression: if q.trivial_compression {
            CompressionKind::Trivial
        } else {
            CompressionKind::Rothe
        },
        engine: match q.engine {
            EngineArg::Flow => Engine::Flow,
            EngineArg::Simplex => Engine::Simplex,
        },
    }
}

fn trace(code: &Code, alpha: &[usize], opts: DecideOptions, err: &mut dyn Write) {
    let Some(inst) = compressed_instance(code, alpha, opts.compression) else {
        let _ = writeln!(err, "alpha rejected before building the polytope");
        return;
    };
    let _ = writeln!(
        err,
        "{} variables, {} rows",
        inst.num_vars(),
        inst.rows().len()
    );
    let _ = write!(err, "{inst}");
    if opts.engine == Engine::Simplex {
        let mut log = String::new();
        solve_feasibility_traced(&inst, Some(&mut log));
        let _ = write!(err, "{log}");
    }
}

/// Splits a batch line into code and alpha. Both `CODE ALPHA` and `CODE;ALPHA` work.
fn parse_line(line: &str) -> Result<(Code, Vec<usize>), String> {
    let mut parts = line
        .split(|c: char| c == ';' || c.is_whitespace())
        .filter(|s| !s.is_empty());
    let code = parts.next().ok_or("empty query")?;
    let alpha = parts.next().unwrap_or("");
    if parts.next().is_some() {
        return Err("expected `CODE [ALPHA]`".into());
    }
    Ok((Code::new(parse_list(code)?.0), parse_list(alpha)?.0))
}

fn run_query(
    kind: Kind,
    q: &QueryArgs,
    json_out: bool,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let opts = options(q);
    if !q.stdin {
        let code = Code::new(q.code.clone().map(|l| l.0).unwrap_or_default());
        let alpha = &q.alpha.0;
        if q.verbose {
            trace(&code, alpha, opts, err);
        }
        return match answer(kind, &code, alpha, opts) {
            Ok(a) => {
                if json_out {
                    let _ = writeln!(out, "{}", envelope(kind, &code, alpha, &a));
                } else {
                    let _ = writeln!(out, "{}", a.text);
                }
                a.status
            }
            Err(e) => fail(kind.name(), &e, json_out, out, err),
        };
    }
    let lines: Vec<String> = stdin
        .lines()
        .map_while(|l| l.ok())
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .collect();
    let answers: Vec<Result<Answered, String>> = lines
        .par_iter()
        .map(|line| {
            let (code, alpha) = parse_line(line)?;
            let a = answer(kind, &code, &alpha, opts)?;
            Ok((code, alpha, a))
        })
        .collect();
    let mut status = 0;
    for a in answers {
        match a {
            Ok((code, alpha, a)) => {
                if json_out {
                    let _ = writeln!(out, "{}", envelope(kind, &code, &alpha, &a));
                } else {
                    let _ = writeln!(out, "{}", a.text);
                }
            }
            Err(e) => {
                status = 2;
                if json_out {
                    let _ = writeln!(out, "{}", error_json(kind.name(), &e));
                } else {
                    let _ = writeln!(out, "ERROR {e}");
                }
            }
        }
    }
    status
}

fn fail(command: &str, msg: &str, json_out: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if json_out {
        let _ = writeln!(out, "{}", error_json(command, msg));
    }
    let _ = writeln!(err, "error: {msg}");
    2
}

fn render(code: &Code, rays: bool, json_out: bool, out: &mut dyn Write) -> i32 {
    let grid = render_rothe(code, rays);
    let ess: Vec<(usize, usize)> = essential_set(&rothe_diagram(code)).into_iter().collect();
    let z = accessible_box(code);
    if json_out {
        let v = json!({
            "schema": SCHEMA,
            "command": "render",
            "query": { "code": code.entries() },
            "result": {
                "grid": grid.lines().collect::<Vec<_>>(),
                "essential_set": ess,
                "accessible_box": z,
            },
            "witness": Value::Null,
        });
        let _ = writeln!(out, "{v}");
    } else {
        let _ = write!(out, "{grid}");
        let ess: Vec<String> = ess.iter().map(|(r, c)| format!("({r},{c})")).collect();
        let _ = writeln!(out, "Ess: {}", ess.join(" "));
        match z {
            Some((r, c)) => writeln!(out, "z: ({r},{c})"),
            None => writeln!(out, "z: none"),
        }
        .ok();
    }
    0
}

fn tree(
    code: &Code,
    budget: usize,
    json_out: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match transition_tree(code, budget) {
        Ok(t) => {
            if json_out {
                let v = json!({
                    "schema": SCHEMA,
                    "command": "tree",
                    "query": { "code": code.entries() },
                    "result": t,
                    "witness": Value::Null,
                });
                let _ = writeln!(out, "{v}");
            } else {
                let _ = write!(out, "{}", t.render());
            }
            0
        }
        Err(e) => fail("tree", &e.to_string(), json_out, out, err),
    }
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Serialize, Default, Clone, Copy)]
struct Tally {
    passed: usize,
    total: usize,
}

impl Tally {
    fn add(&mut self, ok: bool) {
        self.total += 1;
        self.passed += usize::from(ok);
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.passed += o.passed;
        self.total += o.total;
        self
    }
}

const SUITES: [&str; 4] = ["decide", "count", "compression", "witness"];

fn selfcheck(n: usize, json_out: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let table = match all_schubert_polynomials(n) {
        Ok(t) => t,
        Err(e) => return fail("selfcheck", &e.to_string(), json_out, out, err),
    };
    let trivial = DecideOptions {
        compression: CompressionKind::Trivial,
        engine: Engine::Simplex,
    };
    let tallies = permutations(n)
        .par_iter()
        .map(|w| {
            let code = oneline_to_code(w);
            let mut t = [Tally::default(); 4];
            for alpha in compositions(code.size(), n) {
                let coeff = table[w].coefficient(&alpha);
                let positive = coeff > 0.into();
                let yes = decide_nonvanishing_with(&code, &alpha, DecideOptions::default());
                t[0].add(yes == positive);
                t[1].add(num_bigint::BigInt::from(count_coefficient(&code, &alpha)) == coeff);
                t[2].add(decide_nonvanishing_with(&code, &alpha, trivial) == yes);
                let ok = match witness_with(&code, &alpha, DecideOptions::default()) {
                    Ok(Some(tab)) => {
                        positive
                            && tab.is_fully_labelled()
                            && tab.is_flagged()
                            && tab.is_column_strict()
                            && tab.content(alpha.len())[..] == alpha[..]
                    }
                    Ok(None) => !positive,
                    Err(_) => false,
                };
                t[3].add(ok);
            }
            t
        })
        .reduce(
            || [Tally::default(); 4],
            |a, b| [0, 1, 2, 3].map(|i| a[i].merge(b[i])),
        );
    let all_pass = tallies.iter().all(|t| t.passed == t.total);
    if json_out {
        let suites: Vec<Value> = SUITES
            .iter()
            .zip(tallies)
            .map(|(name, t)| json!({ "name": name, "passed": t.passed, "total": t.total }))
            .collect();
        let v = json!({
            "schema": SCHEMA,
            "command": "selfcheck",
            "query": { "n": n },
            "result": { "suites": suites, "ok": all_pass },
            "witness": Value::Null,
        });
        let _ = writeln!(out, "{v}");
    } else {
        for (name, t) in SUITES.iter().zip(tallies) {
            let mark = if t.passed == t.total { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{mark} {name}: {}/{}", t.passed, t.total);
        }
    }
    if all_pass {
        0
    } else {
        1
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json_out = cli.json;
    match cli.command {
        Command::Decide(q) => run_query(Kind::Decide, &q, json_out, stdin, out, err),
        Command::Count(q) => run_query(Kind::Count, &q, json_out, stdin, out, err),
        Command::Witness(q) => run_query(Kind::Witness, &q, json_out, stdin, out, err),
        Command::Render { code, rays } => render(&Code::new(code.0), rays, json_out, out),
        Command::Tree { code, budget } => tree(&Code::new(code.0), budget, json_out, out, err),
        Command::Selfcheck { n } => selfcheck(n as usize, json_out, out, err),
    }
}
