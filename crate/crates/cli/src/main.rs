use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twocm_cli::{model, report::Report, run, Command as Cmd, Options};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Checker for 2-crossed modules, their path spaces, and the (lax) homotopy
/// calculus. Names resolve against loaded model files, then the built-in
/// corpus (`fixA`, `fixB`, `fixC_z2`, `fixC_s3`, `fixD`, `q1_*`, and the
/// demonstration cells `f0`, `swap`, `rot2`).
#[derive(Parser)]
#[command(name = "twocm", version)]
struct Cli {
    /// RNG seed for probe sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Word-length bound for probes over free/infinite carriers.
    #[arg(long, global = true)]
    probe_depth: Option<usize>,
    /// Tuple cap per law before seeded sampling.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Worker count (accepted for interface stability; runs are
    /// deterministic regardless).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Model files to load (searched before the built-in corpus).
    #[arg(short, long, global = true)]
    file: Vec<std::path::PathBuf>,
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Run the 2-crossed-module axiom suite.
    Verify { xmod: String },
    /// Compute the homotopy groups.
    Pi { xmod: String },
    /// Build and check the path space with its projections and inclusion.
    Pathspace { xmod: String },
    /// Build and check the free resolution.
    Q1 { xmod: String },
    /// Strict homotopy operations (on the resolutions of lax cells).
    Homotopy { op: String, cells: Vec<String> },
    /// Lax 2-fold homotopy checks.
    Twofold { op: String, cells: Vec<String> },
    /// Lax homotopy operations.
    Lax { op: String, cells: Vec<String> },
    /// Named law suites: kernel | identities.
    Laws { suite: String, xmod: String },
    /// Reproduce the one-way homotopy counterexample.
    Counterexample,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = Options::default();
    if let Some(s) = cli.seed {
        opts.seed = s;
    }
    opts.probe_depth = cli.probe_depth;
    opts.samples = cli.samples;
    opts.jobs = cli.jobs;
    for path in &cli.file {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        };
        match model::parse(&text) {
            Ok(m) => opts.files.push(m),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    let cmd = match cli.command {
        Commands::Verify { xmod } => Cmd::Verify { xmod },
        Commands::Pi { xmod } => Cmd::Pi { xmod },
        Commands::Pathspace { xmod } => Cmd::Pathspace { xmod },
        Commands::Q1 { xmod } => Cmd::Q1 { xmod },
        Commands::Homotopy { op, cells } => Cmd::Homotopy { op, cells },
        Commands::Twofold { op, cells } => Cmd::Twofold { op, cells },
        Commands::Lax { op, cells } => Cmd::Lax { op, cells },
        Commands::Laws { suite, xmod } => Cmd::Laws { suite, xmod },
        Commands::Counterexample => Cmd::Counterexample,
    };
    let report: Report = match run(&cmd, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Text => print!("{}", report.text()),
        Format::Json => println!("{}", report.json()),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
