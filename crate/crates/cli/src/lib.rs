//! Command-line front end for `avoidgf`.
//!
//! ```
//! let q = avoidgf_cli::parse_query(["strings", "--avoid", "1 1", "--alphabet", "2", "--max-length", "6"]).unwrap();
//! let out = avoidgf_cli::run_query(&q);
//! assert_eq!(out.code, 0);
//! assert!(out.stdout.contains("6 | 21"));
//! ```

mod error;
mod query;
mod render;
mod report;

use std::fmt::Write as _;
use std::path::Path;

pub use error::{CliError, EXIT_INVARIANT, EXIT_MISMATCH};
pub use query::{
    parse_batch_line, parse_exponents, parse_invocation, parse_query, parse_words, Cli, Command, Forbidden,
    Format, Invocation, Mode, Query, DEFAULT_MAX_LENGTH, DEFAULT_MAX_WEIGHT,
};
pub use render::render;
pub use report::{compute, Coefficient, Identities, OracleCheck, OracleMismatch, QuasiSeries, Report};

/// Text for both streams plus the process exit status.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    pub fn from_error(e: &CliError) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("avoidgf: {e}\n"),
            code: e.exit_code(),
        }
    }
}

pub fn run_query(q: &Query) -> Output {
    let result = compute(q).and_then(|report| Ok((render(&report, q.format)?, report.exit_code())));
    match result {
        Ok((stdout, code)) => Output {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Output::from_error(&e),
    }
}

/// Runs every query in `contents`, one per line. Blank lines and lines
/// starting with `#` are skipped. The exit status is the largest of the
/// individual statuses.
pub fn run_batch(contents: &str) -> Output {
    let mut out = Output::default();
    for (i, line) in contents.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let _ = writeln!(out.stdout, "== line {}: {line}", i + 1);
        let single = match parse_batch_line(line) {
            Ok(q) => run_query(&q),
            Err(e) => Output::from_error(&e),
        };
        out.stdout.push_str(&single.stdout);
        if !single.stderr.is_empty() {
            let _ = write!(out.stderr, "line {}: {}", i + 1, single.stderr);
        }
        out.code = out.code.max(single.code);
    }
    out
}

pub fn run_batch_file(path: &Path) -> Output {
    match std::fs::read_to_string(path) {
        Ok(contents) => run_batch(&contents),
        Err(source) => Output::from_error(&CliError::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

/// Parses and runs a full command line, excluding the program name.
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_invocation(args) {
        Ok(Invocation::Single(q)) => run_query(&q),
        Ok(Invocation::Batch(path)) => run_batch_file(&path),
        Err(CliError::Usage(e)) if !e.use_stderr() => Output {
            stdout: e.to_string(),
            stderr: String::new(),
            code: 0,
        },
        Err(e) => Output::from_error(&e),
    }
}
