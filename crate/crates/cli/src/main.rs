//! `entsplit`: measurement splitting profiles and link analogues from the
//! command line.
//!
//! Exit codes: 0 success, 1 input file or analysis failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use entsplit::state::parse_qubit_label;
use entsplit::{
    measure_computational, qubit_label, read_state_file, render_report, schmidt_decompose, Bipartition, CanonicalState,
    CutSemantics, Error, PureState, ReportDocument, ReportFormat,
};

#[derive(Parser)]
#[command(
    name = "entsplit",
    version,
    about = "Entanglement splitting under single-qubit measurement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure every qubit, report residual Schmidt ranks and the link analogue.
    Analyze {
        #[command(flatten)]
        state: StateSelector,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Possibilistic)]
        semantics: SemanticsArg,
    },
    /// Measure one qubit in the computational basis.
    Measure {
        #[command(flatten)]
        state: StateSelector,
        #[arg(long)]
        qubit: usize,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        outcome: u8,
        /// Print the record as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Schmidt decomposition across a bipartition, e.g. `--left 0 --right 1,2`.
    Schmidt {
        #[command(flatten)]
        state: StateSelector,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List the built-in states.
    States,
}

#[derive(Args)]
struct StateSelector {
    /// Built-in state: ghz, w, wbar, wwbar, star, dicke42, bell.
    name: Option<String>,
    /// State file: {"num_qubits": n, "amplitudes": [[re, im], ...]}.
    #[arg(long, conflicts_with = "name")]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => ReportFormat::Table,
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Possibilistic,
    Necessitarian,
}

impl From<SemanticsArg> for CutSemantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Possibilistic => CutSemantics::Possibilistic,
            SemanticsArg::Necessitarian => CutSemantics::Necessitarian,
        }
    }
}

enum Failure {
    Usage(String),
    Input(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 1,
        }
    }
}

/// Errors caused by the flags rather than by the state.
fn classify_error(e: Error) -> Failure {
    match e {
        Error::QubitOutOfRange { .. } | Error::InvalidPartition(_) | Error::InvalidOutcome(_) => {
            Failure::Usage(e.to_string())
        }
        other => Failure::Input(other.to_string()),
    }
}

fn load(selector: &StateSelector) -> Result<(PureState, String), Failure> {
    match (&selector.name, &selector.file) {
        (Some(name), None) => CanonicalState::from_name(name)
            .map(|c| (c.construct(), c.name().to_owned()))
            .ok_or_else(|| {
                let known: Vec<&str> = CanonicalState::ALL.iter().map(|c| c.name()).collect();
                Failure::Usage(format!("unknown state {name:?}; expected one of {}", known.join(", ")))
            }),
        (None, Some(path)) => read_state_file(path)
            .map(|s| (s, path.display().to_string()))
            .map_err(|e| Failure::Input(e.to_string())),
        _ => Err(Failure::Usage("give exactly one of a state name or --file".into())),
    }
}

fn parse_qubit_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .or_else(|| parse_qubit_label(t))
                .ok_or_else(|| Failure::Usage(format!("bad qubit {t:?} in {text:?}")))
        })
        .collect()
}

/// Up to 15 significant digits, trailing zeros dropped.
fn real(v: f64) -> String {
    let rounded: f64 = format!("{v:.14e}").parse().unwrap_or(v);
    rounded.to_string()
}

fn labels(qubits: impl IntoIterator<Item = usize>) -> String {
    qubits.into_iter().map(qubit_label).collect()
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Analyze {
            state,
            format,
            semantics,
        } => {
            let (state, label) = load(&state)?;
            let doc = ReportDocument::analyze(&state, &label, semantics.into()).map_err(classify_error)?;
            Ok(render_report(&doc, format.into()))
        }
        Command::Measure {
            state,
            qubit,
            outcome,
            json,
        } => {
            let (state, label) = load(&state)?;
            let [zero, one] = measure_computational(&state, qubit).map_err(classify_error)?;
            let record = if outcome == 0 { zero } else { one };
            if json {
                return Ok(serde_json_pretty(&record));
            }
            let remaining = labels((0..state.num_qubits()).filter(|&q| q != qubit));
            let post = record.post_state.as_ref().map_or_else(
                || "none (outcome has probability 0)".to_owned(),
                |s| format!("{s} ({remaining})"),
            );
            Ok(format!(
                "state: {label}\nqubit: {}\noutcome: {outcome}\nprobability: {}\npost_state: {post}\n",
                qubit_label(qubit),
                real(record.probability)
            ))
        }
        Command::Schmidt {
            state,
            left,
            right,
            json,
        } => {
            let (state, label) = load(&state)?;
            let partition = Bipartition::new(parse_qubit_list(&left)?, parse_qubit_list(&right)?);
            let result = schmidt_decompose(&state, &partition).map_err(classify_error)?;
            if json {
                return Ok(serde_json_pretty(&result));
            }
            let join = |v: &[f64]| v.iter().map(|x| real(*x)).collect::<Vec<_>>().join(", ");
            Ok(format!(
                "state: {label}\npartition: {} | {}\ncoefficients: {}\ngram_eigenvalues: {}\nrank: {}\nmaximally_entangled: {}\n",
                labels(partition.left.iter().copied()),
                labels(partition.right.iter().copied()),
                join(&result.coefficients),
                join(&result.gram_eigenvalues),
                result.rank,
                result.maximally_entangled
            ))
        }
        Command::States => Ok(CanonicalState::ALL
            .iter()
            .map(|c| format!("{} = {}\n", c.name(), c.definition()))
            .collect()),
    }
}

fn serde_json_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            e.exit();
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (Failure::Usage(msg) | Failure::Input(msg)) = &failure;
            eprintln!("entsplit: {msg}");
            ExitCode::from(failure.exit_code())
        }
    }
}
