use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use veelocus::{Command, OutputFormat, RunSpec};
use veelocus_cli::{run, EXIT_ERROR};

#[derive(Parser, Debug)]
#[command(
    name = "veelocus",
    version,
    about = "Check locus conditions, vee-conditions and WDVV equations for vector configurations",
    after_help = "TARGET is a catalog name, a path to a JSON configuration, or '-' for stdin.\n\n\
Catalog names (colon-delimited):\n  \
A:<rank>[:m=<k>]   D:<rank>[:m=<k>]   B:<rank>:m=<long>,<short>   C:<rank>:m=<long>,<short>\n  \
An1:n=<n>:m=<m>   Cn1:n=<n>:m=<m>:l=<l>   An2:n=<n>:m=<m>   An2-restricted:n=<n>:m=<m>\n  \
vee-An:c=<c1,..>   vee-Bn:c0=<c0>:c=<c1,..>   vee-An2:n=<n>:m=<m>   vee-A3:mu=<six values>\n  \
weighted:<locus name>\n\n\
Scan queries:\n  \
prop1:m=<m>:l=<l>:k=<k>   thm1:n=<n>[:max_m=3][:perturbations=100]   prop2[:max_m=3][:n=3,4]\n  \
prop3[:samples=50]   thm2[:n=3,4,5][:trials=20]   bn[:n=3,4,5][:trials=20]\n\n\
Exit status: 0 verdict true, 1 verdict false, 2 error."
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Oracle sample points per pivot (check-locus) or WDVV sample points.
    #[arg(long, global = true, default_value_t = 5)]
    samples: usize,
    /// Relative tolerance for the checkers.
    #[arg(long, global = true, env = "VEELOCUS_TOL", default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,
    /// Print nothing; report through the exit status only.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide the locus conditions.
    CheckLocus { target: String },
    /// Decide the vee-conditions (locus targets are weighted by √m first).
    CheckVee { target: String },
    /// Evaluate the generalized WDVV equations at sampled points.
    CheckWdvv { target: String },
    /// Run a parameter-space scan.
    Scan { query: String },
    /// List the named catalog examples.
    CatalogList,
    /// Run every classification scan and print a summary table.
    Reproduce,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, target) = match cli.command {
        Cmd::CheckLocus { target } => (Command::CheckLocus, Some(target)),
        Cmd::CheckVee { target } => (Command::CheckVee, Some(target)),
        Cmd::CheckWdvv { target } => (Command::CheckWdvv, Some(target)),
        Cmd::Scan { query } => (Command::Scan, Some(query)),
        Cmd::CatalogList => (Command::CatalogList, None),
        Cmd::Reproduce => (Command::Reproduce, None),
    };
    let spec = RunSpec {
        command,
        target,
        seed: cli.seed,
        samples: cli.samples,
        tol: cli.tol,
        output: match cli.output {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
    };
    let outcome = run(&spec, io::stdin().lock());
    let code = outcome.exit_code();
    if let Some(err) = &outcome.error {
        if !cli.quiet {
            eprintln!("error: {err}");
        }
        return ExitCode::from(EXIT_ERROR as u8);
    }
    if !cli.quiet {
        let mut out = io::stdout().lock();
        let written = match (spec.output, &outcome.report) {
            (OutputFormat::Json, Some(report)) => {
                writeln!(out, "{}", serde_json::to_string_pretty(report).expect("report serializes"))
            }
            _ => write!(out, "{}", outcome.text),
        };
        if written.is_err() {
            return ExitCode::from(EXIT_ERROR as u8);
        }
    }
    ExitCode::from(code as u8)
}
