//! Command-line front end: parses a document of universes, maps, rings and
//! set-valued homomorphisms, runs one verification or computation, and
//! prints a deterministic report. Exit codes: 0 all checks passed, 1 a
//! check found a violation or counterexample, 2 input or usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use roughring_cli::commands::{self, CliError, Outcome, EXIT_USAGE};
use roughring_cli::document::Document;

#[derive(Parser)]
#[command(
    name = "roughring",
    about = "Rough-set approximations over finite set-valued maps and finite rings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower/upper approximations and the boundary of a set through a map
    Approx {
        #[arg(long)]
        map: String,
        #[arg(long)]
        set: String,
        file: PathBuf,
    },
    /// The inverse of a set-valued map
    Invert {
        #[arg(long)]
        map: String,
        file: PathBuf,
    },
    /// Exhaustive ring-axiom verification of the powerset ring of a universe
    Psring {
        #[arg(long)]
        universe: String,
        file: PathBuf,
    },
    /// Structure report for a declared ring
    Ring {
        #[arg(long)]
        ring: String,
        file: PathBuf,
    },
    /// Coset space and quotient by an ideal, partition, or additive subgroup
    Quotient {
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        partition: Option<String>,
        /// A `set` declaration bound to a ring
        #[arg(long)]
        subgroup: Option<String>,
        file: PathBuf,
    },
    /// Search for a ring isomorphism between two declared rings
    Iso {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        file: PathBuf,
    },
    /// The powerful-law classification of a set-valued homomorphism
    Svh {
        #[arg(long)]
        svh: String,
        file: PathBuf,
    },
    /// Kernel of a powerful set-valued homomorphism and its subring check
    Kernel {
        #[arg(long)]
        svh: String,
        /// Also report the non-default kernel taken at the one element
        #[arg(long)]
        unit_variant: bool,
        file: PathBuf,
    },
    /// Induce a map through a surjective homomorphism and check the
    /// commuting and powerfulness transfers
    Induced {
        #[arg(long)]
        hom: String,
        #[arg(long)]
        svh: String,
        /// Check the commuting law for this set only (default: all subsets)
        #[arg(long)]
        set: Option<String>,
        file: PathBuf,
    },
    /// Kernel, cosets, image ring and the isomorphism between them
    Fundamental {
        #[arg(long)]
        svh: String,
        file: PathBuf,
    },
    /// Exhaustive law verification with witness reporting
    Laws {
        /// One law id such as P21-1 or P42-mul (default: the whole catalog)
        #[arg(long)]
        law: Option<String>,
        /// Source universe size for map enumeration
        #[arg(long, default_value_t = 3)]
        x: usize,
        /// Target universe size for map enumeration
        #[arg(long, default_value_t = 3)]
        y: usize,
    },
    /// The generated errata report over the full default scope
    Errata,
    /// Canonical form of a document
    Emit { file: PathBuf },
}

fn load(path: &PathBuf) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{}`: {e}", path.display())))?;
    Ok(Document::parse(&text)?)
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Approx { map, set, file } => commands::approx(&load(&file)?, &map, &set),
        Command::Invert { map, file } => commands::invert(&load(&file)?, &map),
        Command::Psring { universe, file } => commands::psring(&load(&file)?, &universe),
        Command::Ring { ring, file } => commands::ring_info(&load(&file)?, &ring),
        Command::Quotient {
            ideal,
            partition,
            subgroup,
            file,
        } => commands::quotient(
            &load(&file)?,
            ideal.as_deref(),
            partition.as_deref(),
            subgroup.as_deref(),
        ),
        Command::Iso { left, right, file } => commands::iso(&load(&file)?, &left, &right),
        Command::Svh { svh, file } => commands::svh(&load(&file)?, &svh),
        Command::Kernel {
            svh,
            unit_variant,
            file,
        } => commands::kernel(&load(&file)?, &svh, unit_variant),
        Command::Induced {
            hom,
            svh,
            set,
            file,
        } => commands::induced(&load(&file)?, &hom, &svh, set.as_deref()),
        Command::Fundamental { svh, file } => commands::fundamental(&load(&file)?, &svh),
        Command::Laws { law, x, y } => commands::laws(law.as_deref(), x, y),
        Command::Errata => commands::errata(),
        Command::Emit { file } => commands::emit(&load(&file)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.report);
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
