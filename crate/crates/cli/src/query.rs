//! Command-line grammar and query validation.

use std::path::PathBuf;

use avoidgf::engine::Limits;
use avoidgf::{Error as CoreError, ExponentSet, ForbiddenSet, Word};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

pub const DEFAULT_MAX_WEIGHT: usize = 12;
pub const DEFAULT_MAX_LENGTH: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "avoidgf",
    version,
    about = "Exact generating functions for compositions and strings avoiding forbidden substrings",
    args_conflicts_with_subcommands = true,
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Run one query per line of FILE, in the same grammar as the command line.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compositions by weight and number of parts.
    Compositions(CompositionArgs),
    /// Strings over 1..=n by length.
    Strings(StringArgs),
    /// Compositions avoiding 2 1^(a-1) 2 for each exponent a.
    Family(FamilyArgs),
    /// Check the linear-system identities and the oracle for one set.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CompositionArgs {
    /// Forbidden words: parts separated by spaces, words by semicolons,
    /// e.g. "2 2; 2 1 2".
    #[arg(long, default_value = "")]
    pub avoid: String,
    #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
    pub max_weight: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Also print the series of compositions ending in each forbidden word.
    #[arg(long)]
    pub show_quasi: bool,
    /// Compare every coefficient against brute-force enumeration.
    #[arg(long)]
    pub run_oracle: bool,
}

#[derive(Debug, Args)]
pub struct StringArgs {
    #[arg(long, default_value = "")]
    pub avoid: String,
    /// Alphabet size n; letters are 1..=n.
    #[arg(long)]
    pub alphabet: u32,
    #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
    pub max_length: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub run_oracle: bool,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Strictly increasing exponents, e.g. "1,3,5".
    #[arg(long)]
    pub exponents: String,
    #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
    pub max_weight: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub show_quasi: bool,
    #[arg(long)]
    pub run_oracle: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["avoid", "exponents"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub avoid: Option<String>,
    #[arg(long)]
    pub exponents: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
    pub max_weight: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub show_quasi: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Compositions,
    Strings,
    Family,
    Verify,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Compositions => "compositions",
            Mode::Strings => "strings",
            Mode::Family => "family",
            Mode::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Forbidden {
    Words(ForbiddenSet),
    Exponents(ExponentSet),
}

impl Forbidden {
    /// The forbidden words, expanding an exponent set into its family.
    pub fn words(&self) -> ForbiddenSet {
        match self {
            Forbidden::Words(s) => s.clone(),
            Forbidden::Exponents(e) => avoidgf::family::family_words(e),
        }
    }
}

/// A validated request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub mode: Mode,
    pub forbidden: Forbidden,
    pub alphabet_size: Option<u32>,
    pub max_weight: usize,
    pub max_length: usize,
    pub format: Format,
    pub show_quasi: bool,
    pub run_oracle: bool,
}

fn position_in(haystack: &str, needle: &str) -> usize {
    needle.as_ptr() as usize - haystack.as_ptr() as usize
}

/// Parses `"2 2; 2 1 2"` into words. A blank string is the empty set.
pub fn parse_words(input: &str) -> Result<Vec<Word>, CliError> {
    if input.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut words = Vec::new();
    for segment in input.split(';') {
        let mut parts = Vec::new();
        for token in segment.split_whitespace() {
            let position = position_in(input, token);
            let part = token
                .parse::<u32>()
                .ok()
                .filter(|&p| p > 0)
                .ok_or_else(|| CliError::Parse {
                    token: token.to_string(),
                    position,
                    message: "parts must be positive base-10 integers".into(),
                })?;
            parts.push(part);
        }
        if parts.is_empty() {
            return Err(CliError::Parse {
                token: segment.to_string(),
                position: position_in(input, segment),
                message: "empty word between semicolons".into(),
            });
        }
        words.push(Word::new(parts).expect("parts checked positive"));
    }
    Ok(words)
}

/// Parses `"1,3,5"` into exponents.
pub fn parse_exponents(input: &str) -> Result<ExponentSet, CliError> {
    let mut exps = Vec::new();
    for token in input.split(',') {
        let trimmed = token.trim();
        let position = position_in(input, token) + (token.len() - token.trim_start().len());
        let a = trimmed
            .parse::<u32>()
            .ok()
            .filter(|&a| a > 0)
            .ok_or_else(|| CliError::Parse {
                token: trimmed.to_string(),
                position,
                message: "exponents must be positive base-10 integers".into(),
            })?;
        exps.push(a);
    }
    ExponentSet::new(exps).map_err(|_| CliError::Validation(format!(
        "exponents {input:?} must be strictly increasing"
    )))
}

/// Builds the forbidden set, naming offending words on failure.
pub fn forbidden_set(words: Vec<Word>) -> Result<ForbiddenSet, CliError> {
    let names: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    ForbiddenSet::new(words).map_err(|e| match e {
        CoreError::ContainmentViolation { inner, outer } => CliError::Validation(format!(
            "word \"{}\" is a substring of word \"{}\"; forbidden words must not contain each other",
            names[inner], names[outer]
        )),
        CoreError::DuplicateWord { first, .. } => {
            CliError::Validation(format!("word \"{}\" is listed twice", names[first]))
        }
        other => CliError::from(other),
    })
}

fn check_weight(max_weight: usize) -> Result<(), CliError> {
    let cap = Limits::default().max_weight;
    if max_weight > cap {
        return Err(CliError::Bound(format!(
            "--max-weight {max_weight} exceeds the cap of {cap}"
        )));
    }
    Ok(())
}

impl Query {
    pub fn from_command(command: Command) -> Result<Self, CliError> {
        let query = match command {
            Command::Compositions(a) => Query {
                mode: Mode::Compositions,
                forbidden: Forbidden::Words(forbidden_set(parse_words(&a.avoid)?)?),
                alphabet_size: None,
                max_weight: a.max_weight,
                max_length: DEFAULT_MAX_LENGTH,
                format: a.format,
                show_quasi: a.show_quasi,
                run_oracle: a.run_oracle,
            },
            Command::Strings(a) => {
                let set = forbidden_set(parse_words(&a.avoid)?)?;
                if a.alphabet == 0 {
                    return Err(CliError::Validation("--alphabet must be at least 1".into()));
                }
                if let Some(w) = set.iter().find(|w| w.max_part() > a.alphabet) {
                    return Err(CliError::Validation(format!(
                        "word \"{w}\" uses letter {} outside the alphabet 1..={}",
                        w.max_part(),
                        a.alphabet
                    )));
                }
                Query {
                    mode: Mode::Strings,
                    forbidden: Forbidden::Words(set),
                    alphabet_size: Some(a.alphabet),
                    max_weight: DEFAULT_MAX_WEIGHT,
                    max_length: a.max_length,
                    format: a.format,
                    show_quasi: false,
                    run_oracle: a.run_oracle,
                }
            }
            Command::Family(a) => Query {
                mode: Mode::Family,
                forbidden: Forbidden::Exponents(parse_exponents(&a.exponents)?),
                alphabet_size: None,
                max_weight: a.max_weight,
                max_length: DEFAULT_MAX_LENGTH,
                format: a.format,
                show_quasi: a.show_quasi,
                run_oracle: a.run_oracle,
            },
            Command::Verify(a) => {
                let forbidden = match (a.avoid, a.exponents) {
                    (_, Some(e)) => Forbidden::Exponents(parse_exponents(&e)?),
                    (Some(w), None) => Forbidden::Words(forbidden_set(parse_words(&w)?)?),
                    (None, None) => unreachable!("clap requires one source"),
                };
                Query {
                    mode: Mode::Verify,
                    forbidden,
                    alphabet_size: None,
                    max_weight: a.max_weight,
                    max_length: DEFAULT_MAX_LENGTH,
                    format: a.format,
                    show_quasi: a.show_quasi,
                    run_oracle: true,
                }
            }
        };
        if query.mode != Mode::Strings {
            check_weight(query.max_weight)?;
        }
        Ok(query)
    }
}

/// What the command line asked for.
#[derive(Debug)]
pub enum Invocation {
    Single(Query),
    Batch(PathBuf),
}

/// Parses arguments, excluding the program name.
pub fn parse_invocation<I, S>(args: I) -> Result<Invocation, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("avoidgf")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(CliError::Usage)?;
    match (cli.command, cli.batch) {
        (Some(command), None) => Ok(Invocation::Single(Query::from_command(command)?)),
        (None, Some(path)) => Ok(Invocation::Batch(path)),
        _ => Err(CliError::Validation("give either a subcommand or --batch FILE".into())),
    }
}

/// Parses a single query; `--batch` is rejected here.
pub fn parse_query<I, S>(args: I) -> Result<Query, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_invocation(args)? {
        Invocation::Single(q) => Ok(q),
        Invocation::Batch(_) => Err(CliError::Validation("--batch cannot be nested".into())),
    }
}

/// Splits one batch line with shell-style quoting and parses it.
pub fn parse_batch_line(line: &str) -> Result<Query, CliError> {
    let args = shlex::split(line).ok_or_else(|| CliError::Parse {
        token: line.to_string(),
        position: 0,
        message: "unbalanced quotes".into(),
    })?;
    parse_query(args)
}
