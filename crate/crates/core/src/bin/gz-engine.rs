use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gz_engine::commands::{
    cmd_act, cmd_commutators, cmd_gamma, cmd_schubert, cmd_structure_theorem, cmd_verify_invariance, exit_code,
    CommandOptions, LoadedConfig, Report,
};
use gz_engine::simplicity::GraphMode;
use gz_engine::Result;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Regular,
    Singular,
}

#[derive(Parser)]
#[command(name = "gz-engine", version, about = "Exact checks for Gelfand-Tsetlin type operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 2)]
    radius: u32,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Regular)]
    mode: Mode,
    /// Write the report here (gamma-graph also writes `.dot` and `.graph.json` files next to it).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    VerifyInvariance,
    Commutators,
    StructureTheorem,
    Act {
        /// Operator spec (same format as one entry of `operators`).
        #[arg(long)]
        operator: Option<PathBuf>,
        /// `{"point": [...], "w": [...]}` or a module-vector list.
        #[arg(long)]
        functional: Option<PathBuf>,
    },
    Schubert,
    GammaGraph,
}

fn run(cli: &Cli) -> Result<Report> {
    let cfg = match &cli.config {
        Some(p) => LoadedConfig::load(p)?,
        None => LoadedConfig::empty(),
    };
    let mut opts = CommandOptions {
        seed: cli.seed,
        samples: cli.samples,
        radius: cli.radius,
        mode: match cli.mode {
            Mode::Regular => GraphMode::Regular,
            Mode::Singular => GraphMode::Singular,
        },
        out: cli.out.clone(),
        ..Default::default()
    };
    match &cli.command {
        Command::VerifyInvariance => cmd_verify_invariance(&cfg, &opts),
        Command::Commutators => cmd_commutators(&cfg, &opts),
        Command::StructureTheorem => cmd_structure_theorem(&cfg, &opts),
        Command::Act { operator, functional } => {
            opts.operator = operator.clone();
            opts.functional = functional.clone();
            cmd_act(&cfg, &opts)
        }
        Command::Schubert => cmd_schubert(&cfg, &opts),
        Command::GammaGraph => cmd_gamma(&cfg, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("GZ_ENGINE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().ok();
    }
    match run(&cli) {
        Ok(report) => {
            let text = report.render(cli.pretty);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(if report.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
