use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use sphereconv_harness::commands::{self, Outcome};
use sphereconv_harness::config::SEED_ENV;
use sphereconv_harness::RunConfig;

/// Exit codes: 0 success, 2 assertion failure, 3 precondition or I/O error.
const EXIT_ASSERTION: u8 = 2;
const EXIT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "sphereconv", version, about = "Spherical and Euclidean convex bodies: generators, operations and check suites")]
struct Cli {
    /// Seed for every random draw (trial i uses ChaCha8 stream i)
    #[arg(long, global = true, env = SEED_ENV, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 512)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Ambient dimension (n + 1 for bodies on S^n)
    #[arg(long = "dim", global = true, default_value_t = 3)]
    ambient_dim: usize,
    /// Write the JSON result here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a body or radial map: euclid, sphere or star
    Gen {
        kind: String,
        /// euclid: cube, cross or random; star: ball
        #[arg(long, default_value = "random")]
        shape: String,
        /// Number of generators or vertices
        #[arg(long, default_value_t = 5)]
        m: usize,
        /// Cap radius for spherical bodies
        #[arg(long)]
        theta_max: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
    },
    /// Apply a binary operation to two body files
    Apply {
        op: String,
        files: Vec<PathBuf>,
        /// Fixed chart center (JSON vector) for transported operations
        #[arg(long)]
        center: Option<String>,
    },
    /// Project a body onto the span of the given vectors
    Project {
        file: PathBuf,
        /// JSON list of spanning vectors
        #[arg(long)]
        span: String,
    },
    /// Distance between two bodies: hausdorff, delta_s or gamma
    Metric {
        kind: String,
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        u: Option<String>,
    },
    /// Run a named check suite
    Check { suite: String },
    /// Run a demonstration
    Demo {
        #[arg(default_value = "discontinuity")]
        name: String,
        #[arg(long, value_delimiter = ',')]
        eps: Vec<f64>,
    },
}

fn run(cli: &Cli, cfg: &RunConfig) -> anyhow::Result<Outcome> {
    cfg.validate()?;
    match &cli.command {
        Command::Gen {
            kind,
            shape,
            m,
            theta_max,
            radius,
        } => commands::gen(cfg, kind, shape, *m, *theta_max, *radius),
        Command::Apply { op, files, center } => commands::apply(cfg, op, files, center.as_deref()),
        Command::Project { file, span } => commands::project(file, span),
        Command::Metric { kind, a, b, u } => commands::metric(cfg, kind, a, b, u.as_deref()),
        Command::Check { suite } => commands::check(cfg, suite),
        Command::Demo { name, eps } => commands::demo(name, eps),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")),
        None => match writeln!(io::stdout().lock(), "{text}") {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            r => r,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        seed: cli.seed,
        trials: cli.trials,
        samples: cli.samples,
        tol: cli.tol,
        ambient_dim: cli.ambient_dim,
        output_path: cli.out.as_ref().map(|p| p.display().to_string()),
    };
    match run(&cli, &cfg) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.payload).expect("payload serializes");
            if let Err(e) = emit(&cli.out, &text) {
                eprintln!("{}", json!({"error": "io", "message": e.to_string()}));
                return ExitCode::from(EXIT_ERROR);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_ASSERTION)
            }
        }
        Err(e) => {
            let record = json!({"error": "precondition", "message": format!("{e:#}")});
            println!("{record}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
