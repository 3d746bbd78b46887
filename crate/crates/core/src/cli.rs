//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when a checked property fails or a verdict
//! is unresolved, and 2 on malformed input.

use std::ffi::OsString;
use std::io::Read;
use std::num::NonZeroU64;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{
    binomial, dense_subset_check, enumerate_smp, parallelogram_scan, parallelogram_summary,
    verify_norm_axioms_with, verify_vector_space_axioms_with, Arithmetic, Fault, Faulty,
    ScanConfig, Standard, DEFAULT_SEED,
};
use crate::gf2::Gf2;
use crate::metric::{analyze_cauchy, Epsilon, VecSequence};
use crate::operator::{Operator, OperatorError};
use crate::vector::{FinSupportVec, RankWidth};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        Outcome {
            status: if passed { EXIT_OK } else { EXIT_FAILED },
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            status: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "gf2space",
    version,
    about = "Finitely-supported GF(2) sequences: norm, metric, operators, exhaustive checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    VectorSpace,
    Norm,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Norm of a vector literal, e.g. "{1,3,7}"
    Norm { x: String },
    /// Sum of two vectors
    Add { x: String, y: String },
    /// Scalar multiple (scalar is 0 or 1)
    Smul { alpha: String, x: String },
    /// Apply an operator to a vector
    Apply { operator: String, x: String },
    /// Operator norm with its attaining basis vector
    Opnorm {
        operator: String,
        /// Columns scanned for rule operators
        #[arg(short = 'b', long = "bound", default_value_t = 64)]
        bound: u64,
    },
    /// Unit vector attaining the operator norm
    Witness {
        operator: String,
        #[arg(short = 'b', long = "bound", default_value_t = 64)]
        bound: u64,
    },
    /// Cauchy analysis of a sequence file ("-" or omitted for stdin)
    Cauchy {
        file: Option<String>,
        #[arg(long = "eps", default_value_t = 0.5)]
        eps: f64,
    },
    /// Vector-space and norm axiom scans at truncation p
    Axioms {
        #[arg(short = 'p', default_value_t = 6)]
        p: u32,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random tuples per axiom above the exhaustive bounds
        #[arg(long, default_value_t = 200_000)]
        samples: u64,
        /// Corrupt one operation to exercise the harness
        #[arg(long = "inject-fault", hide = true)]
        inject_fault: Option<String>,
    },
    /// Parallelogram-identity classification at truncation p
    Parallelogram {
        #[arg(short = 'p', default_value_t = 6)]
        p: u32,
        /// Also print every pair
        #[arg(long)]
        pairs: bool,
    },
    /// List S_m^p: vectors with m ones inside {1..p}
    Enum { p: u32, m: u32 },
    /// Binomial coefficient C(p, m) = |S_m^p|
    Count { p: u64, m: u64 },
    /// Rank of a vector: sum of 2^(i-1) over its support
    Rank {
        x: String,
        #[arg(short = 'w', long = "width", default_value_t = 62)]
        width: u32,
    },
    /// Vector with the given rank
    Unrank { n: u64 },
    /// Whether a list of vectors (one per line) is dense in the truncation at p
    Dense {
        file: Option<String>,
        #[arg(short = 'p')]
        p: u32,
    },
}

fn vector(text: &str) -> Result<FinSupportVec, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn bound(b: u64) -> Result<NonZeroU64, String> {
    NonZeroU64::new(b).ok_or_else(|| "invalid bound `0` (must be at least 1)".to_string())
}

fn read_input(path: Option<&str>, stdin: &mut dyn Read) -> Result<String, String> {
    match path {
        None | Some("-") => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("reading standard input: {e}"))?;
            Ok(text)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("reading `{p}`: {e}")),
    }
}

/// An operator argument is a built-in name, inline columns separated by `;`,
/// `-` for standard input, or a file path.
fn operator(arg: &str, stdin: &mut dyn Read) -> Result<Operator, String> {
    let text = match arg {
        "identity" | "shift_left" | "shift_right" => arg.to_string(),
        _ if arg.contains("->") => arg.replace(';', "\n"),
        _ => read_input(Some(arg), stdin)?,
    };
    Operator::parse(&text).map_err(|e| e.to_string())
}

fn suite_text<A: Arithmetic>(
    ops: &A,
    suite: SuiteArg,
    p: u32,
    config: &ScanConfig,
) -> (bool, String) {
    let mut reports = Vec::new();
    if matches!(suite, SuiteArg::VectorSpace | SuiteArg::All) {
        reports.push(verify_vector_space_axioms_with(ops, p, config));
    }
    if matches!(suite, SuiteArg::Norm | SuiteArg::All) {
        reports.push(verify_norm_axioms_with(ops, p, config));
    }
    let passed = reports.iter().all(|r| r.passed());
    (passed, reports.iter().map(|r| r.render()).collect())
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome, String> {
    Ok(match command {
        Command::Norm { x } => Outcome::ok(format!("{}\n", vector(&x)?.norm())),
        Command::Add { x, y } => Outcome::ok(format!("{}\n", vector(&x)?.add(&vector(&y)?))),
        Command::Smul { alpha, x } => {
            let alpha: Gf2 = alpha.parse().map_err(|e| format!("{e}"))?;
            Outcome::ok(format!("{}\n", vector(&x)?.scalar_mul(alpha)))
        }
        Command::Apply { operator: op, x } => {
            let x = vector(&x)?;
            Outcome::ok(format!("{}\n", operator(&op, stdin)?.apply(&x)))
        }
        Command::Opnorm {
            operator: op,
            bound: b,
        } => {
            let b = bound(b)?;
            let norm = operator(&op, stdin)?.operator_norm(b);
            if norm.exact {
                Outcome::ok(format!("{norm}\n"))
            } else {
                Outcome::verdict(false, format!("{}\n", OperatorError::Unresolved(b.get())))
            }
        }
        Command::Witness {
            operator: op,
            bound: b,
        } => {
            let b = bound(b)?;
            match operator(&op, stdin)?.attainment_witness(b) {
                Ok(w) => Outcome::ok(format!("{w}\n")),
                Err(e) => Outcome::verdict(false, format!("{e}\n")),
            }
        }
        Command::Cauchy { file, eps } => {
            let eps = Epsilon::new(eps).map_err(|e| e.to_string())?;
            let seq = VecSequence::parse(&read_input(file.as_deref(), stdin)?)
                .map_err(|e| e.to_string())?;
            let verdict = analyze_cauchy(&seq, eps);
            Outcome::verdict(verdict.is_cauchy(), format!("{verdict}\n"))
        }
        Command::Axioms {
            p,
            suite,
            seed,
            samples,
            inject_fault,
        } => {
            if p == 0 {
                return Err("invalid truncation `0` (must be at least 1)".to_string());
            }
            let config = ScanConfig {
                seed,
                samples,
                ..ScanConfig::default()
            };
            let (passed, text) = match inject_fault {
                None => suite_text(&Standard, suite, p, &config),
                Some(name) => {
                    let fault =
                        Fault::from_name(&name).ok_or_else(|| format!("unknown fault `{name}`"))?;
                    suite_text(&Faulty(fault), suite, p, &config)
                }
            };
            Outcome::verdict(passed, text)
        }
        Command::Parallelogram { p, pairs } => {
            if p == 0 || p > 16 {
                return Err(format!("invalid truncation `{p}` (expected 1..=16)"));
            }
            let summary = parallelogram_summary(p);
            let mut text = String::new();
            if pairs {
                for verdict in parallelogram_scan(p) {
                    text.push_str(&format!("{verdict}\n"));
                }
            }
            text.push_str(&summary.render());
            Outcome::verdict(summary.holds_iff_some_zero(), text)
        }
        Command::Enum { p, m } => {
            if p > 32 {
                return Err(format!("invalid truncation `{p}` (expected at most 32)"));
            }
            Outcome::ok(
                enumerate_smp(m, p)
                    .iter()
                    .map(|v| format!("{v}\n"))
                    .collect(),
            )
        }
        Command::Count { p, m } => match binomial(p, m) {
            Some(c) => Outcome::ok(format!("{c}\n")),
            None => return Err(format!("C({p}, {m}) exceeds 128 bits")),
        },
        Command::Rank { x, width } => {
            let width = RankWidth::new(width).map_err(|e| e.to_string())?;
            match vector(&x)?.rank(width) {
                Ok(n) => Outcome::ok(format!("{n}\n")),
                Err(e) => return Err(e.to_string()),
            }
        }
        Command::Unrank { n } => Outcome::ok(format!("{}\n", FinSupportVec::unrank(n))),
        Command::Dense { file, p } => {
            let text = read_input(file.as_deref(), stdin)?;
            let members = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(vector)
                .collect::<Result<Vec<_>, _>>()?;
            let dense = dense_subset_check(&members, p).map_err(|e| e.to_string())?;
            Outcome::verdict(
                dense,
                if dense { "dense\n" } else { "not dense\n" }.to_string(),
            )
        }
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(cli.command, stdin).unwrap_or_else(Outcome::input_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut argv = vec!["gf2space"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    fn run_stdin(args: &[&str], input: &str) -> Outcome {
        let mut argv = vec!["gf2space"];
        argv.extend_from_slice(args);
        run(argv, &mut input.as_bytes())
    }

    #[test]
    fn vector_commands() {
        assert_eq!(run_args(&["norm", "{1,3,7}"]).stdout, "1\n");
        assert_eq!(run_args(&["norm", "{}"]).stdout, "0\n");
        assert_eq!(run_args(&["add", "{1,2}", "{2,3}"]).stdout, "{1,3}\n");
        assert_eq!(run_args(&["smul", "0", "{1,5}"]).stdout, "{}\n");
        assert_eq!(run_args(&["rank", "{1,3}"]).stdout, "5\n");
        assert_eq!(run_args(&["unrank", "8"]).stdout, "{4}\n");
        assert_eq!(run_args(&["count", "3", "1"]).stdout, "3\n");
        assert_eq!(
            run_args(&["enum", "3", "2"]).stdout,
            "{1,2}\n{1,3}\n{2,3}\n"
        );
    }

    #[test]
    fn operator_commands() {
        assert_eq!(
            run_args(&["opnorm", "identity", "-b", "4"]).stdout,
            "1 witness={1} exact\n"
        );
        assert_eq!(
            run_args(&["apply", "shift_right", "{1,3}"]).stdout,
            "{2,4}\n"
        );
        assert_eq!(
            run_args(&["apply", "1 -> {1}; 2 -> {1}", "{1,2}"]).stdout,
            "{}\n"
        );
        assert_eq!(run_args(&["witness", "3 -> {1,2}"]).stdout, "{3}\n");
        let piped = run_stdin(&["opnorm", "-"], "4 -> {}\n");
        assert_eq!(
            (piped.status, piped.stdout.as_str()),
            (0, "0 witness=none exact\n")
        );
        let unresolved = run_args(&["opnorm", "shift_left", "-b", "1"]);
        assert_eq!(unresolved.status, EXIT_FAILED);
        assert_eq!(unresolved.stdout, "unresolved at bound 1\n");
        assert_eq!(
            run_args(&["witness", "shift_left", "-b", "1"]).status,
            EXIT_FAILED
        );
        assert_eq!(
            run_args(&["opnorm", "identity", "-b", "0"]).status,
            EXIT_INPUT
        );
    }

    #[test]
    fn malformed_inputs_exit_2() {
        let out = run_args(&["norm", "{2,1}"]);
        assert_eq!(out.status, EXIT_INPUT);
        assert!(out.stderr.contains("`1`"), "{}", out.stderr);
        assert_eq!(out.stderr.lines().count(), 1);
        assert_eq!(run_args(&["smul", "2", "{1}"]).status, EXIT_INPUT);
        assert_eq!(run_args(&["rank", "{63}"]).status, EXIT_INPUT);
        assert_eq!(run_args(&["apply", "1 -> {2,1}", "{1}"]).status, EXIT_INPUT);
        assert_eq!(run_args(&["frobnicate"]).status, EXIT_INPUT);
        assert_eq!(
            run_args(&["axioms", "--inject-fault", "nope"]).status,
            EXIT_INPUT
        );
        assert_eq!(
            run_stdin(&["cauchy", "--eps", "0"], "{1}\nrepeat\n").status,
            EXIT_INPUT
        );
    }

    #[test]
    fn suites() {
        let clean = run_args(&["axioms", "-p", "3"]);
        assert_eq!(clean.status, EXIT_OK, "{}", clean.stdout);
        assert!(clean.stdout.starts_with("suite vector-space p=3"));
        let faulty = run_args(&[
            "axioms",
            "-p",
            "3",
            "--suite",
            "norm",
            "--inject-fault",
            "norm-always-one",
        ]);
        assert_eq!(faulty.status, EXIT_FAILED);
        assert!(faulty
            .stdout
            .contains("counterexample positive-definite {}"));
        let para = run_args(&["parallelogram", "-p", "2"]);
        assert_eq!(para.status, EXIT_OK);
        assert!(para.stdout.contains("discrepancy"));
    }

    #[test]
    fn cauchy_and_dense() {
        let out = run_stdin(&["cauchy"], "{1}\n{2}\n{3}\nrepeat\n");
        assert_eq!(out.stdout, "cauchy settle=2 limit={3}\n");
        let full = "{}\n{1}\n{2}\n{1,2}\n";
        assert_eq!(run_stdin(&["dense", "-p", "2"], full).status, EXIT_OK);
        let partial = run_stdin(&["dense", "-p", "2"], "{}\n{1}\n{2}\n");
        assert_eq!(
            (partial.status, partial.stdout.as_str()),
            (EXIT_FAILED, "not dense\n")
        );
        assert_eq!(run_stdin(&["dense", "-p", "1"], "{2}\n").status, EXIT_INPUT);
    }

    #[test]
    fn help_is_not_an_error() {
        let out = run_args(&["--help"]);
        assert_eq!(out.status, EXIT_OK);
        assert!(out.stdout.contains("opnorm"));
    }
}
