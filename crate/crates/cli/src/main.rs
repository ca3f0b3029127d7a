//! `kmc`: bracket, atom, Khovanov homology and minimality certificates for
//! link diagrams given as PD or signed Gauss codes.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kmc_core::{Field, Limits};

use input::Failure;

#[derive(Debug, Parser)]
#[command(name = "kmc", version, about = "Minimality certificates for classical and virtual link diagrams")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest crossing count for any exponential computation.
    #[arg(long, global = true, env = "KMC_MAX_CROSSINGS", value_parser = clap::value_parser!(u32).range(1..=62))]
    max_crossings: Option<u32>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Gf2,
    Q,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Gf2 => Field::Gf2,
            FieldArg::Q => Field::Q,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kauffman bracket, its span and the strict first-completeness test.
    Bracket { file: PathBuf },
    /// Atom surface: cell counts, Euler characteristic, orientability, genus.
    Atom { file: PathBuf },
    /// Khovanov homology table.
    Kh {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "gf2")]
        field: FieldArg,
    },
    /// Single-circle states and their r values.
    K1 { file: PathBuf },
    /// Minimality certificate for a diagram.
    Certify {
        file: PathBuf,
        /// Coefficient fields; default gf2, plus q for orientable atoms.
        #[arg(long, value_enum, value_delimiter = ',')]
        fields: Vec<FieldArg>,
    },
    /// Minimality certificate from a Khovanov table alone.
    CertifyTable {
        table: PathBuf,
        /// Crossing count of the unknown diagram.
        #[arg(long)]
        n: usize,
        /// Euler characteristic of its atom, when known.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
    },
    /// Certify every .pd / .gauss file in a directory.
    Batch {
        dir: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',')]
        fields: Vec<FieldArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

/// Everything a run needs besides the subcommand's own inputs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub output: OutputMode,
    pub limits: Limits,
    pub jobs: Option<usize>,
}

impl RunConfig {
    fn from_args(args: &GlobalArgs) -> Self {
        Self {
            output: if args.json { OutputMode::Json } else { OutputMode::Text },
            limits: args.max_crossings.map_or_else(Limits::default, |k| Limits::uniform(k as usize)),
            jobs: args.jobs.map(|j| j as usize),
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = RunConfig::from_args(&cli.global);
    if let Some(jobs) = cfg.jobs {
        // a second initialization only happens in tests; keep the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let fields = |fs: Vec<FieldArg>| fs.into_iter().map(Field::from).collect::<Vec<_>>();
    match cli.command {
        Command::Bracket { file } => report::bracket(&cfg, &file).map(|()| true),
        Command::Atom { file } => report::atom(&cfg, &file).map(|()| true),
        Command::Kh { file, field } => report::kh(&cfg, &file, field.into()).map(|()| true),
        Command::K1 { file } => report::k1(&cfg, &file).map(|()| true),
        Command::Certify { file, fields: fs } => report::certify(&cfg, &file, &fields(fs)).map(|()| true),
        Command::CertifyTable { table, n, chi } => report::certify_table(&cfg, &table, n, chi).map(|()| true),
        Command::Batch { dir, fields: fs } => report::batch(&cfg, &dir, &fields(fs)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("kmc: {e}");
            ExitCode::from(1)
        }
    }
}
