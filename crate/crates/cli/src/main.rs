//! `cayley`: check the complete core axiom, search for witnesses, compute
//! cores and replay the verification suites from the command line.

mod commands;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cayley_core::cayley::DEFAULT_MATERIALIZE_CAP;
use cayley_core::gfp::DEFAULT_ENUMERATION_CAP;
use cayley_core::homcore::DEFAULT_SEARCH_CAP;

#[derive(Debug, Parser)]
#[command(name = "cayley", version)]
#[command(about = "Complete cores of Cayley graphs over F_p^d")]
struct Cli {
    /// Output format for results printed to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel sweeps (default: all available).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Cap on the vertex count for exact core and colouring searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_CAP)]
    max_vertices: usize,

    /// Cap on p^d for witness searches and sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    witness_cap: u64,

    /// Cap on p^d when building a Cayley graph explicitly.
    #[arg(long, global = true, default_value_t = DEFAULT_MATERIALIZE_CAP)]
    materialize_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Connection-set document (JSON).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a candidate witness (V, W) against a connection set
    CheckCca {
        #[command(flatten)]
        input: Input,
        /// Basis of V: semicolon-separated vectors, coordinates separated by commas.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        v: String,
        /// Basis of W, in the same format as --v.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        w: String,
    },
    /// Search exhaustively for a witness
    FindWitness {
        #[command(flatten)]
        input: Input,
    },
    /// Compute the core of the Cayley graph by repeated folding
    Core {
        #[command(flatten)]
        input: Input,
        /// Write the retraction onto the core to this file (JSON).
        #[arg(long)]
        retraction: Option<PathBuf>,
    },
    /// Decide whether every endomorphism is an automorphism
    IsCore {
        #[command(flatten)]
        input: Input,
    },
    /// Summarize the Cayley graph of a connection set
    GraphInfo {
        #[command(flatten)]
        input: Input,
    },
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Sweep,
    Theorem,
    Counterexamples,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run.
    #[arg(
        value_enum,
        conflicts_with = "suite_flag",
        required_unless_present = "suite_flag"
    )]
    suite: Option<Suite>,
    /// Suite to run, as a flag.
    #[arg(long = "suite", value_enum, value_name = "SUITE")]
    suite_flag: Option<Suite>,
    /// Prime p of the field F_p^d.
    #[arg(long)]
    p: Option<u32>,
    /// Dimension d of the field F_p^d.
    #[arg(long)]
    d: Option<usize>,
    /// Table to replay (1 to 6); all tables when omitted.
    #[arg(long)]
    table: Option<u8>,
    /// Write the JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also search high-cardinality sets directly in sweeps.
    #[arg(long)]
    direct: bool,
}

impl VerifyArgs {
    fn suite(&self) -> Suite {
        self.suite.or(self.suite_flag).expect("enforced by clap")
    }
}

/// Bad input: exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub struct Caps {
    pub max_vertices: usize,
    pub witness_cap: u64,
    pub materialize_cap: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let caps = Caps {
        max_vertices: cli.max_vertices,
        witness_cap: cli.witness_cap,
        materialize_cap: cli.materialize_cap,
    };
    let outcome = match &cli.command {
        Command::CheckCca { input, v, w } => commands::check_cca(input, v, w, &caps, cli.format),
        Command::FindWitness { input } => commands::find_witness(input, &caps, cli.format),
        Command::Core { input, retraction } => {
            commands::core(input, retraction.as_deref(), &caps, cli.format)
        }
        Command::IsCore { input } => commands::is_core(input, &caps, cli.format),
        Command::GraphInfo { input } => commands::graph_info(input, &caps, cli.format),
        Command::Verify(args) => commands::verify(args, args.suite(), &caps, cli.format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
