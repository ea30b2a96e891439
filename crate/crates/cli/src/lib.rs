//! Front end for the `markoff-lab` binary: subcommands emitting JSON or CSV
//! reports, and named verification suites.

pub mod args;
pub mod commands;
pub mod enc;
pub mod suites;

use std::ffi::OsString;

use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, Format};
use commands::Output;
use suites::{verify, Options};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_SUITE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker threads used by suites.
pub const THREADS_ENV: &str = "MARKOFF_LAB_THREADS";

/// Exit status and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg }
    }
}

fn envelope(command: &str, result: Value) -> String {
    let v = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "result": result,
    });
    serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
}

fn thread_pool() -> rayon::ThreadPool {
    let n = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()).filter(|&n| n > 0);
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = n {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

/// Parses the arguments (the first is the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return Outcome {
                code,
                stdout: if code == EXIT_OK { text.clone() } else { String::new() },
                stderr: if code == EXIT_OK { String::new() } else { text },
            };
        }
    };
    thread_pool().install(|| dispatch(cli.command))
}

fn dispatch(cmd: Command) -> Outcome {
    let name = command_name(&cmd);
    if let Command::Verify { suite, depth, format, inject_fault } = &cmd {
        let opts = Options { depth: *depth, inject_fault: *inject_fault };
        return match verify(suite, &opts) {
            Ok(report) => {
                let code = if report.passed() { EXIT_OK } else { EXIT_FAILED_SUITE };
                let stderr: String =
                    report.failures().map(|c| format!("failed check: {} [{}]\n", c.id, c.anchor)).collect();
                let stdout = match format {
                    Format::Json => envelope(name, report.to_json()),
                    Format::Csv | Format::Text => report.to_text(),
                };
                Outcome { code, stdout, stderr }
            }
            Err(e) => Outcome::usage(format!("error: {e}\n")),
        };
    }
    match execute(cmd) {
        Ok(Output::Json(v)) => Outcome { code: EXIT_OK, stdout: envelope(name, v), stderr: String::new() },
        Ok(Output::Text(s)) => Outcome { code: EXIT_OK, stdout: s, stderr: String::new() },
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Tree { .. } => "tree",
        Command::Zigzag { .. } => "zigzag",
        Command::Cohn { .. } => "cohn",
        Command::Form { .. } => "form",
        Command::Alpha { .. } => "alpha",
        Command::Xi { .. } => "xi",
        Command::Conjugates { .. } => "conjugates",
        Command::SpectrumL { .. } => "spectrum-L",
        Command::Mu { .. } => "mu",
        Command::Nu { .. } => "nu",
        Command::Diagnostics { .. } => "diagnostics",
        Command::Balance { .. } => "balance",
        Command::Verify { .. } => "verify",
    }
}

fn execute(cmd: Command) -> markoff_lab::Result<Output> {
    use commands::*;
    match cmd {
        Command::Tree { depth, format } => tree_cmd(depth, format),
        Command::Zigzag { t, depth } => zigzag_cmd(&parse_triple(&t.triple)?, depth),
        Command::Cohn { t } => cohn_cmd(&parse_triple(&t.triple)?),
        Command::Form { t } => form_cmd(&parse_triple(&t.triple)?),
        Command::Alpha { t } => alpha_cmd(&parse_triple(&t.triple)?),
        Command::Xi { t, digits, precision, format } => {
            xi_cmd(&parse_triple(&t.triple)?, digits, precision.as_deref(), format)
        }
        Command::Conjugates { t, precision, box_size } => {
            conjugates_cmd(&parse_triple(&t.triple)?, &precision, box_size)
        }
        Command::SpectrumL { t, window } => spectrum_l_cmd(&parse_triple(&t.triple)?, window),
        Command::Mu { t, box_size } => mu_cmd(&parse_triple(&t.triple)?, box_size),
        Command::Nu { t, digits, format } => nu_cmd(&parse_triple(&t.triple)?, digits, format),
        Command::Diagnostics { t, depth } => diagnostics_cmd(&parse_triple(&t.triple)?, depth),
        Command::Balance { t, precision } => balance_cmd(&parse_triple(&t.triple)?, &precision),
        Command::Verify { .. } => unreachable!("handled by dispatch"),
    }
}
