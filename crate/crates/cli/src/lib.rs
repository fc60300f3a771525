//! Command-line front end for `spectra-core`.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! together with everything destined for stdout and stderr, so the binary is
//! a thin wrapper and the commands are testable in-process.

pub mod document;
pub mod error;
pub mod expr;
pub mod render;

use std::io::Read;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use spectra_core::filter::axioms_audit;
use spectra_core::{
    compare, Algebra, BitSet, ElementId, FiniteMonoid, FiniteRing, GabrielFilter, Ideal, Limits,
    ZariskiSpace,
};

use document::AlgebraDocument;
use error::{CliError, CliResult};

pub const MAX_CARRIER_VAR: &str = "SPECTRA_MAX_CARRIER";

#[derive(Parser, Debug)]
#[command(
    name = "spectra",
    version,
    about = "Zariski spectra of finite commutative monoids and rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the algebra laws of a document.
    Validate(Input),
    /// Dump the prime spectrum with its closed sets.
    Spec {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Localize at an element or at a set of elements.
    Localize {
        #[command(flatten)]
        input: Input,
        /// Element to invert.
        #[arg(long, conflicts_with = "set", required_unless_present = "set")]
        at: Option<String>,
        /// Comma-separated elements; the submonoid they generate is inverted.
        #[arg(long)]
        set: Option<String>,
    },
    /// Gabriel filter queries.
    #[command(subcommand)]
    Filter(FilterCommand),
    /// Decide whether basic opens D(f) cover an open.
    Cover {
        #[command(flatten)]
        input: Input,
        /// Generators of the ideal whose open is the target, or `whole`.
        #[arg(long)]
        target: String,
        /// Comma-separated elements f; the family is the D(f).
        #[arg(long)]
        by: String,
    },
    /// Rebuild the spectrum with the brute-force oracle and compare.
    Compare(Input),
}

#[derive(Subcommand, Debug)]
enum FilterCommand {
    /// Whether the filter contains an ideal.
    Contains {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        filter: FilterSpec,
        /// Generators of the ideal to test.
        #[arg(long)]
        ideal: String,
    },
    /// The primes belonging to the filter.
    Primes {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        filter: FilterSpec,
    },
    /// Whether two filters have the same primes.
    Equal {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        filter: FilterSpec,
        /// Generators of the second filter's ideal.
        #[arg(long)]
        other: String,
        #[arg(long, value_enum, default_value_t = Form::LocallyPrimitive)]
        other_form: Form,
    },
    /// Audit a filter, or an explicit set of ideals, against the axioms.
    Audit {
        #[command(flatten)]
        input: Input,
        /// Generators of the filter's ideal.
        #[arg(long, required_unless_present = "member")]
        gen: Option<String>,
        #[arg(long, value_enum, default_value_t = Form::LocallyPrimitive)]
        form: Form,
        /// An explicit member, by generators; repeat for each member.
        #[arg(long, conflicts_with = "gen")]
        member: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Algebra document, or `-` for stdin.
    file: String,
}

#[derive(Args, Debug)]
struct FilterSpec {
    /// Generators of the filter's ideal (for `element` and `localization`,
    /// a single element).
    #[arg(long)]
    gen: String,
    #[arg(long, value_enum, default_value_t = Form::LocallyPrimitive)]
    form: Form,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    /// Ideals containing, for each generator, a power of it.
    LocallyPrimitive,
    /// Ideals containing a power of the generated ideal.
    Primitive,
    /// G_f: ideals containing a power of f.
    Element,
    /// Ideals whose localization at f is the unit ideal.
    Localization,
}

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { 1 } else { 0 };
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match limits_from_env().and_then(|limits| execute(cli.command, &limits)) {
        Ok((stdout, code)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("{e}\n"),
        },
    }
}

fn limits_from_env() -> CliResult<Limits> {
    match std::env::var(MAX_CARRIER_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|cap| Limits::default().with_enumeration_cap(cap))
            .map_err(|_| {
                CliError::Parse(format!(
                    "{MAX_CARRIER_VAR} must be a natural number, got '{v}'"
                ))
            }),
        Err(_) => Ok(Limits::default()),
    }
}

fn load(input: &Input) -> CliResult<Arc<Algebra>> {
    let text = if input.file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| CliError::Parse(format!("{}: {e}", input.file)))?
    };
    AlgebraDocument::from_json(&text)?.to_algebra()
}

/// Splits on commas outside parentheses, so product labels like `(1,x)`
/// stay whole. An empty string is the empty list.
pub fn split_labels(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(current.trim().to_owned());
                current.clear();
                continue;
            }
            _ => {}
        }
        current.push(c);
    }
    if !current.trim().is_empty() || !out.is_empty() {
        out.push(current.trim().to_owned());
    }
    out
}

fn element(a: &Algebra, label: &str) -> CliResult<ElementId> {
    a.element(label)
        .ok_or_else(|| CliError::Parse(format!("unknown element '{label}'")))
}

fn elements(a: &Algebra, list: &str) -> CliResult<Vec<ElementId>> {
    split_labels(list).iter().map(|l| element(a, l)).collect()
}

fn ideal(a: &Arc<Algebra>, generators: &str) -> CliResult<Ideal> {
    if generators.trim() == "whole" && a.element("whole").is_none() {
        return Ok(Ideal::whole(a));
    }
    Ok(Ideal::generated(a, elements(a, generators)?))
}

fn single(a: &Algebra, list: &str, form: Form) -> CliResult<ElementId> {
    match elements(a, list)?.as_slice() {
        [f] => Ok(*f),
        _ => Err(CliError::Parse(format!(
            "form {form:?} takes exactly one element"
        ))),
    }
}

fn filter(
    a: &Arc<Algebra>,
    generators: &str,
    form: Form,
    limits: &Limits,
) -> CliResult<GabrielFilter> {
    Ok(match form {
        Form::LocallyPrimitive => GabrielFilter::locally_primitive(ideal(a, generators)?),
        Form::Primitive => GabrielFilter::primitive(ideal(a, generators)?),
        Form::Element => GabrielFilter::of_element(a, single(a, generators, form)?),
        Form::Localization => {
            GabrielFilter::of_localization(a, single(a, generators, form)?, limits)?
        }
    })
}

fn labels(q: &Ideal) -> Vec<String> {
    q.labels().into_iter().map(String::from).collect()
}

fn pretty(v: serde_json::Value) -> String {
    let mut out = serde_json::to_string_pretty(&v).expect("json serializes");
    out.push('\n');
    out
}

fn execute(command: Command, limits: &Limits) -> CliResult<(String, i32)> {
    match command {
        Command::Validate(input) => {
            let a = load(&input)?;
            let kind = if a.is_ring() { "ring" } else { "monoid" };
            Ok((format!("ok: {kind} with {} elements\n", a.len()), 0))
        }
        Command::Spec { input, format } => {
            let a = load(&input)?;
            let space = ZariskiSpace::build(&a, limits)?;
            Ok((
                match format {
                    Format::Json => render::topology_json(&space),
                    Format::Dot => render::topology_dot(&space),
                },
                0,
            ))
        }
        Command::Localize { input, at, set } => {
            let a = load(&input)?;
            let loc = match (at, set) {
                (Some(f), _) => spectra_core::localization::at_element(&a, element(&a, f.trim())?),
                (None, Some(s)) => {
                    let members = elements(&a, &s)?;
                    let set = BitSet::from_indices(a.len(), members.iter().map(|e| e.index()));
                    spectra_core::localization::at_set(&a, &set)
                }
                (None, None) => return Err(CliError::Parse("give --at or --set".into())),
            };
            Ok((AlgebraDocument::from_localization(&loc).to_json(), 0))
        }
        Command::Filter(sub) => filter_command(sub, limits),
        Command::Cover { input, target, by } => {
            let a = load(&input)?;
            let space = ZariskiSpace::build(&a, limits)?;
            let target = space.open_of_ideal(&ideal(&a, &target)?)?;
            let family: Vec<_> = elements(&a, &by)?
                .into_iter()
                .map(|f| space.d_of(f))
                .collect();
            let report = space.is_cover(&target, &family)?;
            if !report.filter_side_agrees {
                return Err(CliError::Math(
                    "point-set and filter answers disagree".into(),
                ));
            }
            let witness = report.witness.map(|i| space.point_labels(i));
            Ok((
                pretty(json!({ "covered": report.covered, "witness": witness })),
                0,
            ))
        }
        Command::Compare(input) => {
            let a = load(&input)?;
            let report = if a.is_ring() {
                compare::compare_ring_classical(&FiniteRing::from_algebra(a)?, limits)?
            } else {
                compare::compare_deitmar(&FiniteMonoid::from_algebra(a)?, limits)?
            };
            let out = pretty(json!({
                "agrees": report.agrees,
                "points": report.points,
                "open_sets": report.open_sets,
                "mismatch": report.mismatch,
            }));
            Ok((out, if report.agrees { 0 } else { 2 }))
        }
    }
}

fn filter_command(sub: FilterCommand, limits: &Limits) -> CliResult<(String, i32)> {
    let out = match sub {
        FilterCommand::Contains {
            input,
            filter: spec,
            ideal: q,
        } => {
            let a = load(&input)?;
            let g = filter(&a, &spec.gen, spec.form, limits)?;
            json!({ "contains": g.contains(&ideal(&a, &q)?)? })
        }
        FilterCommand::Primes {
            input,
            filter: spec,
        } => {
            let a = load(&input)?;
            let g = filter(&a, &spec.gen, spec.form, limits)?;
            let primes: Vec<Vec<String>> = g.primes(limits)?.iter().map(|p| labels(p)).collect();
            json!({ "primes": primes })
        }
        FilterCommand::Equal {
            input,
            filter: spec,
            other,
            other_form,
        } => {
            let a = load(&input)?;
            let g = filter(&a, &spec.gen, spec.form, limits)?;
            let h = filter(&a, &other, other_form, limits)?;
            json!({ "equal": g.equals(&h, limits)? })
        }
        FilterCommand::Audit {
            input,
            gen,
            form,
            member,
        } => {
            let a = load(&input)?;
            let members = match gen {
                Some(g) => filter(&a, &g, form, limits)?.members(limits)?,
                None => member
                    .iter()
                    .map(|m| ideal(&a, m))
                    .collect::<CliResult<_>>()?,
            };
            let report = axioms_audit(&a, &members, limits)?;
            json!({
                "passed": report.passed(),
                "members": report.members,
                "violation": report.violation.map(|v| v.to_string()),
            })
        }
    };
    Ok((pretty(out), 0))
}
