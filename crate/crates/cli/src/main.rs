use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod emit;

#[derive(Parser, Debug)]
#[command(
    name = "cansym",
    version,
    about = "Canonical bases from symbols, constructible characters and families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical basis vectors expanded on the standard basis.
    Canonical {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        /// Keep the weight block of this bipartition, e.g. "((0,1,2),(1,2))".
        #[arg(long, conflicts_with = "weight_raw")]
        weight_of: Option<String>,
        /// Keep the weight block with these root coefficients, as "j:c,j:c,...".
        #[arg(long, allow_hyphen_values = true)]
        weight_raw: Option<String>,
        /// Also emit the f-word the oracle used for each column.
        #[arg(long)]
        show_word: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constructible characters of the Hecke algebra of type B or D.
    Constructible {
        #[arg(long = "type", value_enum)]
        kind: TypeArg,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        /// Type D only: write each character as 1/2 times a sum over ordered labels.
        #[arg(long)]
        literal: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Families of d-partitions of m with the given charges.
    Families {
        #[arg(long)]
        d: usize,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        charges: Vec<i64>,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the consistency checks over all small cases.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_m: u32,
        #[arg(long, default_value_t = 3)]
        max_r: u32,
        /// Report as JSON instead of text.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_output(out: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (result, out) = match &cli.command {
        Command::Canonical {
            m,
            r,
            k,
            weight_of,
            weight_raw,
            show_word,
            format,
            out,
        } => {
            let filter = match (weight_of, weight_raw) {
                (Some(label), _) => commands::WeightFilter::Of(label.clone()),
                (None, Some(raw)) => commands::WeightFilter::Raw(raw.clone()),
                (None, None) => commands::WeightFilter::None,
            };
            (
                commands::canonical(*m, *r, *k, &filter, *show_word, *format).map(|t| (t, true)),
                out,
            )
        }
        Command::Constructible {
            kind,
            m,
            r,
            k,
            literal,
            format,
            out,
        } => (
            commands::constructible(*kind, *m, *r, *k, *literal, *format).map(|t| (t, true)),
            out,
        ),
        Command::Families {
            d,
            charges,
            m,
            format,
            out,
        } => (
            commands::families(*d, charges, *m, *format).map(|t| (t, true)),
            out,
        ),
        Command::Verify {
            max_m,
            max_r,
            json,
            out,
        } => (commands::verify(*max_m, *max_r, *json), out),
    };
    match result {
        Ok((text, passed)) => {
            if let Err(e) = write_output(out.as_ref(), &text) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
