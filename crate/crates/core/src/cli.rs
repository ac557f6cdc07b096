//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when `verify` finds a
//! counterexample. Structured output is pretty-printed JSON with a fixed key
//! order, so identical invocations print identical bytes.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::quiver::{cycles_of, Cycle, ResolutionQuiver};
use crate::retraction::{retraction_chain, summary_from_chain, CycleSummary, RetractionStep};
use crate::sequence::{AdmissibleSequence, Kind};
use crate::uniserial::{global_dim, simple_inj_dims, simple_proj_dims, HomDim};
use crate::verify::{enumerate_admissible, run_suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 1;
pub const EXIT_VERIFICATION_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nakayama",
    version,
    about = "Resolution quivers of connected Nakayama algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classification, arrow table, components and cycles of R(A)
    Analyze {
        /// Admissible sequence, e.g. "3,3,3,4"
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        /// JSON output (default)
        #[arg(long)]
        json: bool,
    },
    /// The resolution quiver as JSON, or as DOT with --dot
    Quiver {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(long)]
        dot: bool,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
    },
    /// Projective and injective dimensions of the simple modules
    Dims {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Lift / normalize / retract chain down to a self-injective algebra
    Retract {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Check every claim over all admissible sequences within the bounds
    Verify {
        #[arg(long, default_value_t = 6, value_parser = positive)]
        n_max: usize,
        #[arg(long, default_value_t = 12, value_parser = positive)]
        c_max: usize,
        #[arg(long)]
        json: bool,
        /// Print a human-readable table instead of JSON
        #[arg(long, conflicts_with = "json")]
        summary: bool,
    },
    /// List admissible sequences within the bounds, one per line
    Enumerate {
        #[arg(long, default_value_t = 6, value_parser = positive)]
        n_max: usize,
        #[arg(long, default_value_t = 12, value_parser = positive)]
        c_max: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn invalid(err: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: EXIT_INVALID_INPUT,
        }
    }
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    n: usize,
    c: &'a [usize],
    kind: Kind,
    self_injective: bool,
    p: usize,
    normalized: bool,
    f: &'a [usize],
    components: Vec<Vec<usize>>,
    cycles: Vec<Cycle>,
}

#[derive(Serialize)]
struct QuiverReport<'a> {
    n: usize,
    f: &'a [usize],
    components: Vec<Vec<usize>>,
    cyclic: Vec<usize>,
    cycles: Vec<Cycle>,
}

#[derive(Serialize)]
struct DimsReport<'a> {
    n: usize,
    c: &'a [usize],
    kind: Kind,
    pd: Vec<HomDim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    injdim: Option<Vec<HomDim>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    injdim_note: Option<&'static str>,
    gldim: HomDim,
}

#[derive(Serialize)]
struct RetractReport<'a> {
    input: &'a AdmissibleSequence,
    lift: usize,
    steps: &'a [RetractionStep],
    terminal: &'a AdmissibleSequence,
    summary: CycleSummary,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Vertex lists of the components, ordered like the cycles they contain.
fn component_lists(
    q: &ResolutionQuiver,
) -> (Vec<Vec<usize>>, crate::quiver::ComponentDecomposition) {
    let d = q.decompose();
    let mut comps = vec![Vec::new(); d.cycles().len()];
    for i in 1..=q.n() {
        comps[d.component_of(i)].push(i);
    }
    (comps, d)
}

fn analyze(a: &AdmissibleSequence) -> String {
    let q = ResolutionQuiver::of(a);
    let (components, d) = component_lists(&q);
    to_json(&AnalyzeReport {
        n: a.n(),
        c: a.entries(),
        kind: a.kind(),
        self_injective: a.is_self_injective(),
        p: a.p_min(),
        normalized: a.is_normalized(),
        f: q.table(),
        components,
        cycles: cycles_of(a, &d),
    })
}

fn quiver(a: &AdmissibleSequence, dot: bool) -> String {
    let q = ResolutionQuiver::of(a);
    let (components, d) = component_lists(&q);
    if dot {
        return q.to_dot(&d);
    }
    to_json(&QuiverReport {
        n: q.n(),
        f: q.table(),
        components,
        cyclic: d.cyclic_vertices(),
        cycles: cycles_of(a, &d),
    })
}

fn dims(a: &AdmissibleSequence) -> String {
    let (injdim, injdim_note) = match simple_inj_dims(a) {
        Ok(v) => (Some(v), None),
        Err(_) => (
            None,
            Some("injective dimensions are only computed for cycle algebras"),
        ),
    };
    to_json(&DimsReport {
        n: a.n(),
        c: a.entries(),
        kind: a.kind(),
        pd: simple_proj_dims(a),
        injdim,
        injdim_note,
        gldim: global_dim(a),
    })
}

fn retract(a: &AdmissibleSequence) -> Result<String, Error> {
    let chain = retraction_chain(a)?;
    let summary = summary_from_chain(&chain)?;
    Ok(to_json(&RetractReport {
        input: a,
        lift: chain.lift,
        steps: &chain.steps,
        terminal: &chain.terminal,
        summary,
    }))
}

fn with_sequence(
    text: &str,
    body: impl FnOnce(&AdmissibleSequence) -> Result<String, Error>,
) -> Outcome {
    match text.parse::<AdmissibleSequence>().and_then(|a| body(&a)) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::invalid(&e),
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze { sequence, .. } => with_sequence(&sequence, |a| Ok(analyze(a))),
        Command::Quiver { sequence, dot, .. } => with_sequence(&sequence, |a| Ok(quiver(a, dot))),
        Command::Dims { sequence, .. } => with_sequence(&sequence, |a| Ok(dims(a))),
        Command::Retract { sequence, .. } => with_sequence(&sequence, retract),
        Command::Verify {
            n_max,
            c_max,
            summary,
            ..
        } => {
            let report = run_suite(n_max, c_max);
            let stdout = if summary {
                report.summary_table()
            } else {
                to_json(&report)
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_VERIFICATION_FAILED
                },
            }
        }
        Command::Enumerate { n_max, c_max } => {
            let mut out = String::new();
            for a in enumerate_admissible(n_max, c_max) {
                let _ = writeln!(out, "{a}");
            }
            Outcome::ok(out)
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INVALID_INPUT,
                },
            }
        }
    }
}
