use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use xlab_core::harness::{run, Experiment, ExperimentConfig, HarnessError};
use xlab_core::{BivariatePolynomial, SetSpec};

#[derive(Parser, Debug)]
#[command(name = "xlab", version, about = "Exact experiments on polynomial difference-quotient sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether (y2 - y1) divides g(x1,y1) - g(x2,y2).
    Degeneracy(Common),
    /// Compute the quotient set X of g over A.
    Quotient(Common),
    /// Check every link of the incidence lower bound for |X|.
    Chain(Common),
    /// Count rich points of the dual line arrangement.
    RichPoints(Common),
    /// Count point-line incidences for the dual lines.
    Incidences(Common),
    /// Fit the growth exponent of |X| against |A|.
    ExponentScan(Common),
    /// Perpendicular-bisector intercepts of the grid A x A.
    Bisector(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// JSON experiment configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the JSON report here (CSV artifacts go next to it).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    allow_degenerate: bool,
    #[arg(long)]
    memory_cap: Option<usize>,
    /// Lift the |A| <= 128 guard on quartic-cost experiments.
    #[arg(long)]
    allow_large: bool,
    /// Polynomial as a JSON term list, e.g. '[{"c":"1","i":1,"j":1}]'.
    #[arg(long = "poly")]
    poly: Option<String>,
    /// Set specification as JSON, e.g. '{"kind":"arithmetic","start":"1","step":"1","size":8}'.
    #[arg(long = "set")]
    set: Option<String>,
    /// Comma-separated sizes for exponent-scan.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Comma-separated thresholds for rich-points.
    #[arg(long, value_delimiter = ',')]
    thresholds: Option<Vec<u64>>,
}

impl Command {
    fn split(self) -> (Experiment, Common) {
        match self {
            Command::Degeneracy(c) => (Experiment::Degeneracy, c),
            Command::Quotient(c) => (Experiment::Quotient, c),
            Command::Chain(c) => (Experiment::Chain, c),
            Command::RichPoints(c) => (Experiment::RichPoints, c),
            Command::Incidences(c) => (Experiment::Incidences, c),
            Command::ExponentScan(c) => (Experiment::ExponentScan, c),
            Command::Bisector(c) => (Experiment::Bisector, c),
        }
    }
}

fn field_error(field: &str) -> impl Fn(serde_json::Error) -> HarnessError + '_ {
    move |e| HarnessError::Config(format!("field `{field}`: {e}"))
}

fn build_config(experiment: Experiment, args: Common) -> Result<ExperimentConfig, HarnessError> {
    let mut config = match &args.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => ExperimentConfig::new(experiment),
    };
    config.experiment = experiment;
    if let Some(text) = &args.poly {
        config.g = Some(serde_json::from_str::<BivariatePolynomial>(text).map_err(field_error("g"))?);
    }
    if let Some(text) = &args.set {
        config.set = Some(serde_json::from_str::<SetSpec>(text).map_err(field_error("set"))?);
    }
    if let Some(sizes) = args.sizes {
        config.sizes = Some(sizes);
    }
    if let Some(ts) = args.thresholds {
        config.thresholds = Some(ts);
    }
    if let Some(out) = args.out {
        config.output = Some(out);
    }
    if let Some(w) = args.workers {
        config.workers = w;
    }
    if let Some(cap) = args.memory_cap {
        config.memory_cap = cap;
    }
    if args.seed.is_some() {
        config.seed = args.seed;
    }
    config.allow_degenerate |= args.allow_degenerate;
    config.allow_large |= args.allow_large;
    Ok(config)
}

fn execute(experiment: Experiment, args: Common) -> Result<(), HarnessError> {
    let config = build_config(experiment, args)?;
    let report = run(&config)?;
    match &config.output {
        Some(path) => {
            for p in report.write(path)? {
                eprintln!("wrote {}", p.display());
            }
        }
        None => println!("{}", report.to_json_pretty()),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let (experiment, args) = cli.command.split();
    match execute(experiment, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
