use std::io::Read;

use clap::{Parser, Subcommand};

use bw1::cli::{
    cmd_fuzz, cmd_gen, cmd_h1, cmd_matrices, cmd_partition, parse_field_flag, CliError, Family,
    FuzzConfig, MatrixFormat, RepSource, Route,
};
use bw1::linalg::Field;

#[derive(Parser)]
#[command(name = "bw1", about = "First Baues-Wirsching cohomology of free categories on quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a built-in quiver family as a quiver document.
    Gen {
        #[arg(value_enum)]
        family: Family,
        n: usize,
    },
    /// Partition a quiver's vertices and arrows.
    Partition {
        /// Quiver document path, or `-` for standard input.
        quiver: String,
    },
    /// Print the symbolic matrices V and W for a quiver.
    Matrices {
        quiver: String,
        #[arg(long, default_value = "text", value_parser = ["text", "structured"])]
        format: String,
    },
    /// Compute dim H^1 and basis representatives.
    H1 {
        quiver: String,
        /// Representation document path or `-`; omit with --regular.
        rep: Option<String>,
        /// Use the free module (acyclic quivers only).
        #[arg(long, conflicts_with = "rep")]
        regular: bool,
        /// Field for --regular: `q` or `p:<prime>`.
        #[arg(long, default_value = "q")]
        field: String,
        /// Compute via the brute-force route only.
        #[arg(long, conflicts_with = "both")]
        oracle: bool,
        /// Compute both routes and fail on disagreement.
        #[arg(long)]
        both: bool,
    },
    /// Differential-test random instances against the brute-force route.
    Fuzz {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// `q` or `p:<prime>`.
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 10)]
        max_arrows: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
}

fn read_input(source: &str) -> Result<String, CliError> {
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(source)?)
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Gen { family, n } => cmd_gen(family, n),
        Command::Partition { quiver } => cmd_partition(&read_input(&quiver)?),
        Command::Matrices { quiver, format } => {
            let format = match format.as_str() {
                "structured" => MatrixFormat::Structured,
                _ => MatrixFormat::Text,
            };
            cmd_matrices(&read_input(&quiver)?, format)
        }
        Command::H1 { quiver, rep, regular, field, oracle, both } => {
            let source = match (rep, regular) {
                (Some(path), false) => RepSource::Document(read_input(&path)?),
                (None, true) => RepSource::Regular(parse_field_flag(&field)?),
                _ => {
                    return Err(CliError::Usage(
                        "provide a representation document or --regular".into(),
                    ))
                }
            };
            let route = if both {
                Route::Both
            } else if oracle {
                Route::Oracle
            } else {
                Route::Main
            };
            cmd_h1(&read_input(&quiver)?, source, route)
        }
        Command::Fuzz { count, seed, field, max_vertices, max_arrows, max_dim } => {
            let field: Field = parse_field_flag(&field)?;
            cmd_fuzz(FuzzConfig { count, seed, field, max_vertices, max_arrows, max_dim })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => print!("{}", output),
        Err(err) => {
            eprintln!("error: {}", err);
            std::process::exit(err.exit_code());
        }
    }
}
