//! `syllog`: check, search and validate categorical-syllogism proofs.
//!
//! Exit status is 0 on success, 1 on a logical failure (kernel violation,
//! invalid inference, proof not found) and 2 on usage or parse errors.

use clap::{Parser, Subcommand};
use std::io::Read;
use std::process::ExitCode;
use syllogistic::corpus::{self, oracle_verdict, usage_text, OracleVerdict};
use syllogistic::kernel::check_proof;
use syllogistic::modelcheck::{all_models, Oracle, HARD_MAX_ATOMS};
use syllogistic::script::{effective_system, parse_script, print_script};
use syllogistic::search::{prove, SearchConfig, SearchError};
use syllogistic::systems::{system_by_name, SYSTEM_NAMES};
use syllogistic::translate::render;
use syllogistic::{parse_statement, FormKind, Statement};

#[derive(Parser)]
#[command(
    name = "syllog",
    version,
    about = "Categorical syllogism proof checker and search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof script (`-` reads standard input).
    Check { path: String },
    /// Search for a proof of the last statement from the others.
    Prove {
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 7)]
        depth: usize,
        #[arg(long, default_value_t = 9)]
        size_limit: usize,
        /// Premises followed by the goal.
        #[arg(required = true, allow_hyphen_values = true)]
        statements: Vec<String>,
    },
    /// Decide validity of the last statement from the others over all models.
    Validate {
        #[arg(required = true, allow_hyphen_values = true)]
        statements: Vec<String>,
    },
    /// Render a categorical form in a system or representation table.
    Translate {
        /// A, E, I, O, Aum, Eum, Ium, Oum or Star.
        form: String,
        /// LC, ML, table1, table2 or nocomp.
        target: String,
    },
    /// Syllogism-axiom matrix computed from the embedded corpus.
    Matrix {
        #[arg(long)]
        system: String,
    },
    /// Check every embedded script and print the report.
    Corpus,
    /// List every model of a signature.
    Models {
        /// Comma-separated atom names.
        #[arg(long, value_delimiter = ',', required = true)]
        atoms: Vec<String>,
    },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn logical(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn statements(raw: &[String]) -> Result<Vec<Statement>, Failure> {
    raw.iter()
        .map(|s| {
            parse_statement(s)
                .map(Statement::normalized)
                .map_err(|e| usage(format!("`{s}`: {e}")))
        })
        .collect()
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn cmd_check(path: &str) -> Result<String, Failure> {
    let text = read_source(path)?;
    let proof = parse_script(&text).map_err(|e| usage(format!("{path}:{e}")))?;
    let system = effective_system(&proof).map_err(usage)?;
    let verdict = check_proof(&proof, &system);
    let mut out = format!("system: {}\n", proof.system);
    match &verdict.violation {
        None => {
            out.push_str(&format!(
                "kernel: ok\nsteps: {}\nusage: {}\n",
                proof.step_count(),
                usage_text(&verdict.usage)
            ));
            let oracle = oracle_verdict(&proof);
            out.push_str(&format!("oracle: {oracle}\n"));
            if oracle == OracleVerdict::Valid {
                Ok(out)
            } else {
                Err(logical(out))
            }
        }
        Some(v) => {
            out.push_str(&format!("kernel: fail\nviolation: {v}\n"));
            Err(logical(out))
        }
    }
}

fn cmd_prove(
    system: &str,
    depth: usize,
    size_limit: usize,
    raw: &[String],
) -> Result<String, Failure> {
    let sys = system_by_name(system).ok_or_else(|| {
        usage(format!(
            "unknown system `{system}`; expected one of {}",
            SYSTEM_NAMES.join(", ")
        ))
    })?;
    let stmts = statements(raw)?;
    let (goal, premises) = stmts.split_last().expect("clap requires one statement");
    let config = SearchConfig {
        depth,
        size_limit,
        ..SearchConfig::default()
    };
    match prove(premises, goal, &sys, &config) {
        Ok(proof) => Ok(print_script(&proof, None)),
        Err(SearchError::NotFound(cert)) => Err(logical(format!("{cert}\n"))),
        Err(SearchError::BadConfig) => Err(usage(SearchError::BadConfig.to_string())),
        Err(e) => Err(logical(format!("{e}\n"))),
    }
}

fn cmd_validate(raw: &[String]) -> Result<String, Failure> {
    let stmts = statements(raw)?;
    let (conclusion, premises) = stmts.split_last().expect("clap requires one statement");
    let report = Oracle::new(HARD_MAX_ATOMS)
        .valid(premises, conclusion)
        .map_err(|e| usage(e.to_string()))?;
    if report.valid {
        return Ok(format!(
            "valid ({} models checked)\n",
            report.models_checked
        ));
    }
    let model = report
        .countermodel
        .expect("invalid report carries a countermodel");
    let summary = if model.inhabited == 0 {
        "all minterms empty"
    } else {
        "countermodel"
    };
    Err(logical(format!("invalid\n{summary}\n{model}")))
}

fn cmd_translate(form: &str, target: &str) -> Result<String, Failure> {
    let kind = FormKind::parse(form).ok_or_else(|| usage(format!("unknown form `{form}`")))?;
    render(kind, target).map_err(|e| usage(e.to_string()))
}

fn cmd_matrix(system: &str) -> Result<String, Failure> {
    if !matches!(system, "LC" | "ML") {
        return Err(usage(format!(
            "no syllogism matrix for `{system}`; expected LC or ML"
        )));
    }
    match corpus::axiom_usage_matrix(system) {
        Ok(rows) => Ok(corpus::matrix_text(system, &rows)),
        Err(report) => Err(logical(format!("{report}\n"))),
    }
}

fn cmd_corpus() -> Result<String, Failure> {
    let reports = corpus::check_all();
    let text = corpus::report_text(&reports);
    if reports.iter().all(|r| r.passed()) {
        Ok(text)
    } else {
        Err(logical(text))
    }
}

fn cmd_models(atoms: &[String]) -> Result<String, Failure> {
    let models = all_models(atoms, HARD_MAX_ATOMS).map_err(|e| usage(e.to_string()))?;
    let mut out = String::new();
    for (i, model) in models.enumerate() {
        out.push_str(&format!("model {i}\n{model}"));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { path } => cmd_check(path),
        Command::Prove {
            system,
            depth,
            size_limit,
            statements,
        } => cmd_prove(system, *depth, *size_limit, statements),
        Command::Validate { statements } => cmd_validate(statements),
        Command::Translate { form, target } => cmd_translate(form, target),
        Command::Matrix { system } => cmd_matrix(system),
        Command::Corpus => cmd_corpus(),
        Command::Models { atoms } => cmd_models(atoms),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code: 1, message }) => {
            print!("{message}");
            ExitCode::from(1)
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
