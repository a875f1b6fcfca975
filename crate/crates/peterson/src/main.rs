//! Command-line interface: basis tables, Monk expansions, Giambelli
//! certificates, height lists, and the non-integrality scan, rendered as
//! text tables, JSON, or CSV.

use clap::{Args, Parser, Subcommand};

use peterson::cli::{self, SubsetArg};
use peterson::{LieType, OutputFormat, Result};

#[derive(Parser)]
#[command(
    name = "peterson",
    version,
    about = "Exact Schubert calculus on Peterson varieties"
)]
struct Invocation {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Lie type, e.g. A3, C3, D5, E8, F4, G2.
    lie_type: String,

    /// Output format: table, json, or csv.
    #[arg(long, default_value = "table")]
    format: String,

    /// Use the bundled reference reduced words for the fixed points.
    #[arg(long = "paper-words")]
    paper_words: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the localization matrix of the Peterson class basis.
    Basis {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Expand the product of a generator class with a basis class.
    Monk {
        #[command(flatten)]
        common: CommonArgs,

        /// Simple-root index of the generator class.
        #[arg(long)]
        i: usize,

        /// Basis class subset: comma-separated indices, all, or none.
        #[arg(long = "K")]
        k: String,
    },
    /// Print Giambelli constants with their component factorizations.
    Giambelli {
        #[command(flatten)]
        common: CommonArgs,

        /// Subset: comma-separated indices, all, or none.
        #[arg(long = "K")]
        k: Option<String>,

        /// Print certificates for every subset of the simple roots.
        #[arg(long, conflicts_with = "k")]
        all: bool,
    },
    /// Print the height list of a reduced word.
    Heights {
        #[command(flatten)]
        common: CommonArgs,

        /// Reduced word as comma-separated indices; defaults to a
        /// reduced word of the longest element.
        #[arg(long)]
        word: Option<String>,
    },
    /// Report every non-integer Monk coefficient of the root system.
    Scan {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_common(common: &CommonArgs) -> Result<(LieType, OutputFormat)> {
    let t = LieType::parse(&common.lie_type)?;
    let format: OutputFormat = common.format.parse()?;
    Ok((t, format))
}

fn run(invocation: Invocation) -> Result<String> {
    match invocation.command {
        Command::Basis { common } => {
            let (t, format) = parse_common(&common)?;
            cli::cmd_basis(t, format, common.paper_words)
        }
        Command::Monk { common, i, k } => {
            let (t, format) = parse_common(&common)?;
            let k: SubsetArg = k.parse()?;
            cli::cmd_monk(t, i, &k, format, common.paper_words)
        }
        Command::Giambelli { common, k, all } => {
            let (t, format) = parse_common(&common)?;
            let k = k.map(|s| s.parse::<SubsetArg>()).transpose()?;
            cli::cmd_giambelli(t, k.as_ref(), all, format, common.paper_words)
        }
        Command::Heights { common, word } => {
            let (t, format) = parse_common(&common)?;
            let word = word.map(|s| cli::parse_index_list(&s)).transpose()?;
            cli::cmd_heights(t, word.as_deref(), format, common.paper_words)
        }
        Command::Scan { common } => {
            let (t, format) = parse_common(&common)?;
            cli::cmd_scan(t, format, common.paper_words)
        }
    }
}

fn main() {
    let invocation = Invocation::parse();
    match run(invocation) {
        Ok(output) => {
            // A closed pipe (output fed to head, less, and the like) is a
            // normal way for a run to end, not an error.
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            if let Err(err) = stdout.write_all(output.as_bytes()).and_then(|()| stdout.flush()) {
                if err.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {err}");
                    std::process::exit(1);
                }
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}
