//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a property check fails, 2 on usage or
//! parse errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::{self, ClassifyError};
use crate::cyclic;
use crate::oracle;
use crate::perm::Permutation;
use crate::quandle::{self, Quandle, QuandleError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-quandle",
    version,
    about = "Classify finite quandles of cyclic type"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Worker threads (defaults to the available parallelism; 1 runs serially).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Common {
    fn workers(&self) -> usize {
        self.workers
            .map_or_else(classify::default_workers, |w| w as usize)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate F_n for one n.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=20))]
        n: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Classification table for 3 <= n <= max-n.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=20))]
        max_n: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..=20))]
        min_n: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Write the quandle attached to a member s2 of F_n.
    Phi {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=255))]
        n: u64,
        /// Cycle notation, e.g. "(1 4 3)".
        #[arg(long)]
        s2: String,
        #[command(flatten)]
        common: Common,
    },
    /// Validate a quandle file and report its properties.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Search for an isomorphism between two quandle files.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-check the enumeration against brute force (3 <= n <= 6).
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=6))]
        n: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Compare "n is a prime power" with "F_n is nonempty".
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=20))]
        max_n: u64,
        #[command(flatten)]
        common: Common,
    },
}

/// What a command produced: the exit code and its main output.
struct Outcome {
    code: i32,
    body: String,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            code: EXIT_OK,
            body,
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CHECK_FAILED,
            message: message.into(),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::NotF1(_) | ClassifyError::NotF2(_) => Failure::check(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<oracle::OracleError> for Failure {
    fn from(e: oracle::OracleError) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let out_path = common(&cli.command).out.clone();
    match execute(&cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome.body, out_path.as_deref(), stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Enumerate { common, .. }
        | Command::Table { common, .. }
        | Command::Phi { common, .. }
        | Command::Check { common, .. }
        | Command::Iso { common, .. }
        | Command::Oracle { common, .. }
        | Command::Conjecture { common, .. } => common,
    }
}

fn emit(body: &str, out: Option<&Path>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, body),
        None => stdout.write_all(body.as_bytes()),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Enumerate { n, common } => {
            let row = classify::enumerate_fn_with(*n as usize, common.workers())?;
            Ok(Outcome::ok(match common.format {
                Format::Text => format!("{}\n", row.summary_line()),
                Format::Json => to_json(&row.to_record()),
            }))
        }
        Command::Table {
            max_n,
            min_n,
            common,
        } => {
            let rows = classify::classification_table_with(
                *min_n as usize,
                *max_n as usize,
                common.workers(),
            )?;
            Ok(Outcome::ok(match common.format {
                Format::Text => classify::format_table(&rows),
                Format::Json => to_json(&rows.iter().map(|r| r.to_record()).collect::<Vec<_>>()),
            }))
        }
        Command::Phi { n, s2, common } => {
            let n = *n as usize;
            let s2 = Permutation::parse_cycles(s2, n)
                .map_err(|e| Failure::usage(format!("--s2: {e}")))?;
            let q = classify::phi(&s2, n)?;
            Ok(Outcome::ok(match common.format {
                Format::Text => q.to_text(),
                Format::Json => to_json(&q.to_record()),
            }))
        }
        Command::Check { file, common } => check_file(file, common.format),
        Command::Iso {
            first,
            second,
            common,
        } => {
            let a = load(first)?;
            let b = load(second)?;
            let witness = quandle::are_isomorphic(&a, &b);
            Ok(Outcome::ok(match common.format {
                Format::Text => match &witness {
                    Some(w) => {
                        let images: Vec<String> =
                            w.map.images().iter().map(|i| i.to_string()).collect();
                        format!(
                            "isomorphic: {} {}\n",
                            images.join(" "),
                            w.map.format_cycles()
                        )
                    }
                    None => "not isomorphic\n".to_string(),
                },
                Format::Json => to_json(&serde_json::json!({
                    "isomorphic": witness.is_some(),
                    "witness": witness.as_ref().map(|w| w.map.images()),
                })),
            }))
        }
        Command::Oracle { n, common } => {
            let report = oracle::cross_check_with(*n as usize, common.workers())?;
            Ok(Outcome {
                code: if report.agreed {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                },
                body: match common.format {
                    Format::Text => report.to_text(),
                    Format::Json => to_json(&report),
                },
            })
        }
        Command::Conjecture { max_n, common } => {
            let report =
                classify::prime_power_consistency_with(3, *max_n as usize, common.workers())?;
            Ok(Outcome::ok(match common.format {
                Format::Text => report.to_text(),
                Format::Json => to_json(&report),
            }))
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Loads a quandle file; axiom failures count as parse errors here.
fn load(path: &Path) -> Result<Quandle, Failure> {
    let text = read(path)?;
    Quandle::parse_document(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

#[derive(serde::Serialize)]
struct CheckReport {
    n: usize,
    valid: bool,
    error: Option<String>,
    connected: Option<bool>,
    cyclic_type: Option<bool>,
    cyclic_type_characterization: Option<bool>,
    two_point_homogeneous: Option<bool>,
    inner_group_order: Option<usize>,
}

fn check_file(path: &Path, format: Format) -> Result<Outcome, Failure> {
    let text = read(path)?;
    let result = Quandle::parse_document(&text);
    let report = match result {
        Err(e @ (QuandleError::S1 { .. } | QuandleError::S3 { .. })) => CheckReport {
            n: text
                .split_whitespace()
                .next()
                .and_then(|t| t.parse().ok())
                .unwrap_or(0),
            valid: false,
            error: Some(e.to_string()),
            connected: None,
            cyclic_type: None,
            cyclic_type_characterization: None,
            two_point_homogeneous: None,
            inner_group_order: None,
        },
        Err(e) => return Err(Failure::usage(format!("{}: {e}", path.display()))),
        Ok(q) => CheckReport {
            n: q.size(),
            valid: true,
            error: None,
            connected: Some(q.is_connected()),
            cyclic_type: cyclic::is_cyclic_type(&q).ok(),
            cyclic_type_characterization: cyclic::is_cyclic_type_via_characterization(&q).ok(),
            two_point_homogeneous: Some(q.is_two_point_homogeneous()),
            inner_group_order: q.inner_group().ok().map(|g| g.order()),
        },
    };
    let code = if report.valid {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    let body = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let flag = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
            let mut s = format!("n={}\n", report.n);
            match &report.error {
                Some(e) => s.push_str(&format!("axioms: FAILED ({e})\n")),
                None => {
                    s.push_str("axioms: ok\n");
                    s.push_str(&format!("connected: {}\n", flag(report.connected)));
                    s.push_str(&format!("cyclic type: {}\n", flag(report.cyclic_type)));
                    s.push_str(&format!(
                        "cyclic type (connected + one (n-1)-cycle): {}\n",
                        flag(report.cyclic_type_characterization)
                    ));
                    s.push_str(&format!(
                        "two-point homogeneous: {}\n",
                        flag(report.two_point_homogeneous)
                    ));
                    s.push_str(&format!(
                        "inner group order: {}\n",
                        report
                            .inner_group_order
                            .map_or("over budget".to_string(), |o| o.to_string())
                    ));
                }
            }
            s
        }
    };
    Ok(Outcome { code, body })
}
