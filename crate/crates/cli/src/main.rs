use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zagreb_cli::{run, Command, Format, Input, RunConfig};
use zagreb_core::oracle::DEFAULT_ENUM_LEN;
use zagreb_core::Family;

/// Bounds on the second Zagreb index of graphs with pendant vertices.
#[derive(Parser)]
#[command(name = "zagreb", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Sub {
    /// Lower and upper bounds for a degree sequence.
    Bounds(InputArgs),
    /// Exact index of a graph given as an edge list.
    Exact {
        /// Edge-list file: one `u v` pair of 0-based indices per line.
        #[arg(long)]
        edges: PathBuf,
    },
    /// Closed-form bounds for a named family.
    ClosedForm {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Comma-separated family parameters, e.g. `3,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<u32>,
    },
    /// Check the extremal vectors against brute-force witnesses.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Seed for sampled witnesses.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest vector enumerated exhaustively.
        #[arg(long, default_value_t = DEFAULT_ENUM_LEN)]
        max_enum: usize,
    },
    /// Erdős–Gallai graphicality test.
    Graphical(InputArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Degrees separated by commas or whitespace.
    #[arg(long)]
    degrees: Option<String>,
    /// File holding the degrees.
    #[arg(long)]
    degree_file: Option<PathBuf>,
    /// Edge-list file; the degree sequence is read off the graph.
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl InputArgs {
    fn into_input(self) -> Option<Input> {
        self.degrees
            .map(Input::Degrees)
            .or(self.degree_file.map(Input::DegreeFile))
            .or(self.edges.map(Input::Edges))
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn config(cli: Cli) -> RunConfig {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let mut config = RunConfig {
        command: Command::Bounds,
        input: None,
        format,
        seed: 0,
        max_enum: DEFAULT_ENUM_LEN,
        family: None,
        params: Vec::new(),
    };
    match cli.command {
        Sub::Bounds(input) => config.input = input.into_input(),
        Sub::Exact { edges } => {
            config.command = Command::Exact;
            config.input = Some(Input::Edges(edges));
        }
        Sub::ClosedForm { family, params } => {
            config.command = Command::ClosedForm;
            config.family = Some(family);
            config.params = params;
        }
        Sub::Verify { input, seed, max_enum } => {
            config.command = Command::Verify;
            config.input = input.into_input();
            config.seed = seed;
            config.max_enum = max_enum;
        }
        Sub::Graphical(input) => {
            config.command = Command::Graphical;
            config.input = input.into_input();
        }
    }
    config
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&config(cli)) {
        Ok(report) => {
            for notice in &report.notices {
                eprintln!("{notice}");
            }
            println!("{}", report.stdout);
            ExitCode::from(if report.success { 0 } else { 1 })
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
