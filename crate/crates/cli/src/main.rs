use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gvmlab_cli::{max_depth_from_env, run, Command, JobConfig, RunError};

#[derive(Parser)]
#[command(
    name = "gvmlab",
    version,
    about = "Exact computations with generalized Verma modules over sl(m+1)"
)]
struct Cli {
    /// Job file (TOML, or JSON by extension); flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Simplicity verdict for a two-block highest weight.
    Simplicity(JobArgs),
    /// Bounded search for singular vectors.
    Search(JobArgs),
    /// Run the invariant suites.
    Verify(JobArgs),
    /// Check the tensor-module isomorphism and its simplicity criterion.
    Iso(JobArgs),
}

#[derive(Args, Default)]
struct JobArgs {
    #[arg(long)]
    m: Option<usize>,
    /// Highest weight, comma separated rationals.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Option<Vec<String>>,
    #[arg(long)]
    ibar: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Option<Vec<String>>,
    #[arg(long = "mu-w", value_delimiter = ',', allow_hyphen_values = true)]
    mu_w: Option<Vec<String>>,
    /// Confirm the simplicity verdict by a bounded search.
    #[arg(long)]
    confirm: bool,
    /// Run only the suites whose names contain this text.
    #[arg(long)]
    suite: Option<String>,
}

impl JobArgs {
    fn apply(self, mut c: JobConfig) -> JobConfig {
        if self.m.is_some() {
            c.m = self.m;
        }
        if let Some(mu) = self.mu {
            c.mu = mu;
        }
        if self.ibar.is_some() {
            c.ibar = self.ibar;
        }
        if let Some(d) = self.depth {
            c.depth = d;
        }
        if self.lambda.is_some() {
            c.lambda = self.lambda;
        }
        if self.mu_w.is_some() {
            c.mu_w = self.mu_w;
        }
        c.confirm |= self.confirm;
        if self.suite.is_some() {
            c.suite = self.suite;
        }
        c
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Sub::Simplicity(a) => (Command::Simplicity, a),
        Sub::Search(a) => (Command::Search, a),
        Sub::Verify(a) => (Command::Verify, a),
        Sub::Iso(a) => (Command::Iso, a),
    };
    let prepared = (|| {
        let base = match &cli.config {
            Some(path) => JobConfig::from_file(path)?,
            None => JobConfig::default(),
        };
        args.apply(base).normalized(max_depth_from_env()?)
    })();
    let config = match prepared {
        Ok(c) => c,
        Err(e) => {
            eprintln!("gvmlab: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run(command, &config) {
        Ok(r) => r,
        Err(e @ RunError::Usage(_)) => {
            eprintln!("gvmlab: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("gvmlab: {e}");
            return ExitCode::from(1);
        }
    };
    let json = report.to_json();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                eprintln!("gvmlab: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{json}"),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
