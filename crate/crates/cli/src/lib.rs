//! The `azumaya` command-line tool as a library: argument types, exact
//! input parsing, the JSON verdict report, and one function per
//! subcommand. [`run`] maps a parsed command line to output and exit code.

pub mod args;
pub mod commands;
pub mod input;
pub mod report;

use std::fs;
use std::time::Instant;

use azumaya_core::document::{FieldSpec, StructureConstantDocument};
use azumaya_core::{Error, Fp, Rational, Result};

pub use args::{Cli, Command};
pub use report::{VerdictReport, EXIT_AZUMAYA, EXIT_DISAGREEMENT, EXIT_INPUT, EXIT_NOT_AZUMAYA};

/// Primes accepted by `--field prime:p`.
pub const SUPPORTED_PRIMES: [u64; 7] = [3, 5, 7, 11, 13, 101, 65521];

macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rational => {
                type $f = Rational;
                $body
            }
            FieldSpec::Prime(p) => with_field!(@prime p, $f => $body;
                3, 5, 7, 11, 13, 101, 65521),
        }
    };
    (@prime $p:ident, $f:ident => $body:expr; $($q:literal),*) => {
        match $p {
            $($q => {
                type $f = Fp<$q>;
                $body
            })*
            other => Err(Error::InvalidParameter(format!(
                "prime:{other} is not built in; supported primes are {SUPPORTED_PRIMES:?}"
            ))),
        }
    };
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn field_spec(text: Option<&str>) -> Result<FieldSpec> {
    text.unwrap_or("rational").parse()
}

fn finish(cli: &Cli, mut report: VerdictReport, start: Instant) -> Outcome {
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let code = report.exit_code();
    Outcome {
        stdout: if cli.json { report.to_json() + "\n" } else { report.render() },
        stderr: String::new(),
        code,
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let start = Instant::now();
    let report = match &cli.command {
        Command::EnCheck { params, routes } => {
            with_field!(field_spec(cli.field.as_deref())?, F => commands::en_check::<F>(params, routes))?
        }
        Command::Table { params } => with_field!(field_spec(cli.field.as_deref())?, F => commands::table::<F>(params))?,
        Command::Sweep(args) => with_field!(field_spec(cli.field.as_deref())?, F => commands::sweep::<F>(args))?,
        Command::Verify { document, checks } => {
            let text =
                fs::read_to_string(document).map_err(|e| Error::Parse(format!("cannot read `{document}`: {e}")))?;
            let doc = StructureConstantDocument::from_json_str(&text)?;
            let spec = doc.field_spec()?;
            if let Some(requested) = &cli.field {
                if requested.parse::<FieldSpec>()? != spec {
                    return Err(Error::InvalidParameter(format!(
                        "--field {requested} conflicts with the document field `{}`",
                        doc.field
                    )));
                }
            }
            with_field!(spec, F => commands::verify::<F>(&doc, document, checks))?
        }
        Command::Export { n, params } => {
            let spec = field_spec(cli.field.as_deref())?;
            let doc = with_field!(spec, F => commands::export::<F>(*n, params.required().as_ref()))?;
            return Ok(Outcome {
                stdout: doc.to_json_string() + "\n",
                stderr: String::new(),
                code: EXIT_AZUMAYA,
            });
        }
    };
    Ok(finish(cli, report, start))
}

/// Exit code 2 for any input error; otherwise the report decides.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            stdout: if cli.json {
                serde_json::json!({ "error": e.to_string() }).to_string() + "\n"
            } else {
                String::new()
            },
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
        },
    }
}
