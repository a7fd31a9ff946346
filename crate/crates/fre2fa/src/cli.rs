//! The command-line surface: `parse`, `build`, `eval`, `compare`, `fuzz`,
//! and `export`.
//!
//! Exit codes form a small contract so pipelines can assert outcomes
//! without scraping output:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (for `compare`/`fuzz`: everything agreed) |
//! | 2 | expression syntax error, or usage/input error |
//! | 3 | unknown flag value |
//! | 4 | word symbol outside the expression's alphabet |
//! | 5 | a disagreement was found (report still printed) |
//! | 6 | word-enumeration budget exceeded |
//!
//! The environment variable `FRE2FA_BUDGET` overrides the default budget
//! of one million enumerated words.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::ast::Alphabet;
use crate::document::AutomatonDocument;
use crate::dot::to_dot;
use crate::equivalence::{check_equivalence, run_fuzz, EquivalenceError, DEFAULT_WORD_BUDGET};
use crate::generator::GeneratorConfig;
use crate::lattice::{Structure, TruthValue};
use crate::parser::parse_inferring;
use crate::semantics::denote;
use crate::{compile, Method};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_FLAG: u8 = 3;
pub const EXIT_WORD: u8 = 4;
pub const EXIT_DISAGREEMENT: u8 = 5;
pub const EXIT_BUDGET: u8 = 6;

#[derive(Parser)]
#[command(
    name = "fre2fa",
    about = "Compile fuzzy regular expressions into fuzzy finite automata",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its AST in prefix notation
    Parse {
        /// Expression text, e.g. "0.2((0.1(ab)*)*+b)"
        expr: String,
    },
    /// Build a fuzzy automaton and print its JSON document
    Build {
        expr: String,
        /// Construction route: follow | position
        #[arg(long, default_value = "follow")]
        method: String,
        /// Truth-value algebra: goedel | product | boolean
        #[arg(long, default_value = "goedel")]
        structure: String,
    },
    /// Print the degree of membership of a word
    Eval {
        expr: String,
        word: String,
        #[arg(long, default_value = "follow")]
        method: String,
        #[arg(long, default_value = "goedel")]
        structure: String,
        /// Evaluate the denotational semantics instead of the automaton
        #[arg(long)]
        oracle: bool,
    },
    /// Check follow route, position route, and denotation on all words up
    /// to a length bound; print the report as JSON
    Compare {
        expr: String,
        #[arg(long, default_value = "goedel")]
        structure: String,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Run seeded random equivalence checks and print an aggregate report
    Fuzz {
        #[arg(long, default_value_t = 200)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "goedel")]
        structure: String,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 4)]
        max_depth: usize,
        #[arg(long, default_value_t = 2)]
        alphabet_size: usize,
        /// Comma-separated scalar literals drawn for scale nodes
        #[arg(long, default_value = "0.3,0.7")]
        scalar_pool: String,
    },
    /// Re-render an automaton document as DOT or canonical JSON
    Export {
        /// Path to a JSON document, or `-` for standard input
        #[arg(default_value = "-")]
        input: String,
        /// Output format: dot | json
        #[arg(long, default_value = "dot")]
        format: String,
    },
}

/// Entry point for the binary: real streams, exit code from [`run`].
pub fn main() -> ExitCode {
    let args: Vec<OsString> = std::env::args_os().collect();
    let code = run(
        args,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}

/// Dispatches one invocation over explicit streams; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            }
        }
    };
    match cli.command {
        Command::Parse { expr } => cmd_parse(&expr, out, err),
        Command::Build {
            expr,
            method,
            structure,
        } => cmd_build(&expr, &method, &structure, out, err),
        Command::Eval {
            expr,
            word,
            method,
            structure,
            oracle,
        } => cmd_eval(&expr, &word, &method, &structure, oracle, out, err),
        Command::Compare {
            expr,
            structure,
            max_len,
        } => cmd_compare(&expr, &structure, max_len, out, err),
        Command::Fuzz {
            count,
            seed,
            structure,
            max_len,
            max_depth,
            alphabet_size,
            scalar_pool,
        } => cmd_fuzz(
            count,
            seed,
            &structure,
            max_len,
            max_depth,
            alphabet_size,
            &scalar_pool,
            out,
            err,
        ),
        Command::Export { input, format } => cmd_export(&input, &format, stdin, out, err),
    }
}

fn parse_structure(name: &str, err: &mut dyn Write) -> Result<Structure, u8> {
    Structure::from_name(name).ok_or_else(|| {
        let _ = writeln!(
            err,
            "unknown structure `{name}`: expected goedel, product, or boolean"
        );
        EXIT_FLAG
    })
}

fn parse_method(name: &str, err: &mut dyn Write) -> Result<Method, u8> {
    Method::from_name(name).ok_or_else(|| {
        let _ = writeln!(err, "unknown method `{name}`: expected follow or position");
        EXIT_FLAG
    })
}

fn parse_expression(
    text: &str,
    err: &mut dyn Write,
) -> Result<(crate::FuzzyRegex, Alphabet), u8> {
    parse_inferring(text).map_err(|e| {
        let _ = writeln!(err, "{e}");
        EXIT_INPUT
    })
}

fn budget_from_env(err: &mut dyn Write) -> Result<u64, u8> {
    match std::env::var("FRE2FA_BUDGET") {
        Ok(text) => text.trim().parse().map_err(|_| {
            let _ = writeln!(err, "FRE2FA_BUDGET must be an integer, got `{text}`");
            EXIT_INPUT
        }),
        Err(_) => Ok(DEFAULT_WORD_BUDGET),
    }
}

fn cmd_parse(expr: &str, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match parse_expression(expr, err) {
        Ok((ast, _)) => {
            let _ = writeln!(out, "{}", ast.dump());
            EXIT_OK
        }
        Err(code) => code,
    }
}

fn cmd_build(
    expr: &str,
    method: &str,
    structure: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let (method, structure) = match (parse_method(method, err), parse_structure(structure, err)) {
        (Ok(m), Ok(s)) => (m, s),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let (ast, sigma) = match parse_expression(expr, err) {
        Ok(parsed) => parsed,
        Err(code) => return code,
    };
    let automaton = compile(&ast, &sigma, method, structure);
    let _ = write!(out, "{}", AutomatonDocument::from_fuzzy(&automaton).to_json());
    EXIT_OK
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    expr: &str,
    word: &str,
    method: &str,
    structure: &str,
    oracle: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let (method, structure) = match (parse_method(method, err), parse_structure(structure, err)) {
        (Ok(m), Ok(s)) => (m, s),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let (ast, sigma) = match parse_expression(expr, err) {
        Ok(parsed) => parsed,
        Err(code) => return code,
    };
    if let Some(bad) = word.chars().find(|c| !sigma.contains(*c)) {
        let _ = writeln!(err, "word symbol `{bad}` is outside the alphabet {sigma}");
        return EXIT_WORD;
    }
    let value = if oracle {
        denote(&ast, word, structure)
    } else {
        compile(&ast, &sigma, method, structure)
            .eval(word)
            .expect("word symbols were checked against the alphabet")
    };
    let _ = writeln!(out, "{value}");
    EXIT_OK
}

fn cmd_compare(
    expr: &str,
    structure: &str,
    max_len: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let structure = match parse_structure(structure, err) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let (ast, sigma) = match parse_expression(expr, err) {
        Ok(parsed) => parsed,
        Err(code) => return code,
    };
    let budget = match budget_from_env(err) {
        Ok(b) => b,
        Err(code) => return code,
    };
    match check_equivalence(&ast, &sigma, structure, max_len, budget) {
        Ok(report) => {
            let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
            json.push('\n');
            let _ = write!(out, "{json}");
            if report.verdict.is_equal() {
                EXIT_OK
            } else {
                EXIT_DISAGREEMENT
            }
        }
        Err(e @ EquivalenceError::BudgetExceeded { .. }) => {
            let _ = writeln!(err, "{e}");
            EXIT_BUDGET
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_fuzz(
    count: u64,
    seed: u64,
    structure: &str,
    max_len: usize,
    max_depth: usize,
    alphabet_size: usize,
    scalar_pool: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let structure = match parse_structure(structure, err) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if max_depth < 1 {
        let _ = writeln!(err, "--max-depth must be at least 1");
        return EXIT_FLAG;
    }
    if !(1..=26).contains(&alphabet_size) {
        let _ = writeln!(err, "--alphabet-size must be in 1..=26");
        return EXIT_FLAG;
    }
    let mut pool = Vec::new();
    for item in scalar_pool.split(',') {
        match TruthValue::parse_literal(item.trim()) {
            Ok(v) if !v.is_zero() && !v.is_one() => pool.push(v),
            _ => {
                let _ = writeln!(
                    err,
                    "bad --scalar-pool entry `{}`: expected decimals strictly between 0 and 1",
                    item.trim()
                );
                return EXIT_FLAG;
            }
        }
    }
    let budget = match budget_from_env(err) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let config = GeneratorConfig::new(max_depth, alphabet_size, pool);
    match run_fuzz(count, seed, &config, structure, max_len, budget) {
        Ok(report) => {
            let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
            json.push('\n');
            let _ = write!(out, "{json}");
            if report.all_equal() {
                EXIT_OK
            } else {
                EXIT_DISAGREEMENT
            }
        }
        Err(e @ EquivalenceError::BudgetExceeded { .. }) => {
            let _ = writeln!(err, "{e}");
            EXIT_BUDGET
        }
    }
}

fn cmd_export(
    input: &str,
    format: &str,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    if format != "dot" && format != "json" {
        let _ = writeln!(err, "unknown format `{format}`: expected dot or json");
        return EXIT_FLAG;
    }
    let text = if input == "-" {
        let mut buffer = String::new();
        if let Err(e) = stdin.read_to_string(&mut buffer) {
            let _ = writeln!(err, "failed to read standard input: {e}");
            return EXIT_INPUT;
        }
        buffer
    } else {
        match std::fs::read_to_string(input) {
            Ok(text) => text,
            Err(e) => {
                let _ = writeln!(err, "failed to read `{input}`: {e}");
                return EXIT_INPUT;
            }
        }
    };
    let doc = match AutomatonDocument::from_json(&text) {
        Ok(doc) => doc,
        Err(e) => {
            let _ = writeln!(err, "not a valid automaton document: {e}");
            return EXIT_INPUT;
        }
    };
    match format {
        "dot" => {
            let _ = write!(out, "{}", to_dot(&doc));
        }
        _ => {
            let _ = write!(out, "{}", doc.to_json());
        }
    }
    EXIT_OK
}
