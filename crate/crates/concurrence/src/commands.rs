//! Subcommands behind the `concurrence` binary.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use concurrence_core::bounds::{self, BoundsReport};
use concurrence_core::ensembles::{random_mixed_with_purity, DEFAULT_SAMPLES};
use concurrence_core::linalg::{haar_random_pure, stream_rng};
use concurrence_core::{states, DensityMatrix, EnsembleSpec, SystemShape};

use crate::error::{CliError, CliResult};
use crate::simulate::{self, Summary};
use crate::statefile::{load_state, StateFile};
use crate::table;
use crate::verify::{self, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "concurrence",
    version,
    about = "Observable concurrence bounds from two copies of a state"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named or random state as a JSON state file.
    Mkstate(MkstateArgs),
    /// Evaluate purities, bounds, offset and the entropy battery for a state file.
    Compute(ComputeArgs),
    /// Sample states at fixed purity and write one CSV row per state.
    Simulate(SimulateArgs),
    /// Run a verification suite; exits 1 at the first failing check.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    Bell,
    Ghz,
    W,
    Werner,
    Maxmixed,
    Random,
}

#[derive(Debug, Args)]
pub struct MkstateArgs {
    pub kind: StateKind,
    /// Local dimensions, e.g. `2x3x2`. Defaults to 2x2 for bell and werner.
    #[arg(long)]
    pub dims: Option<SystemShape>,
    /// Singlet weight of the Werner state.
    #[arg(long = "p")]
    pub p: Option<f64>,
    /// Seed for `random`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// For `random`: isotropic mixture with this purity instead of a pure state.
    #[arg(long)]
    pub purity: Option<f64>,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// State file; `-` reads standard input.
    pub state: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub dims: SystemShape,
    /// Target purity in (1/D, 1].
    #[arg(long)]
    pub purity: f64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long)]
    pub seed: u64,
    /// CSV path; standard output when absent (the summary then goes to stderr).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; 0 uses one per core. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long)]
    pub dims: SystemShape,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Mkstate(args) => mkstate(&args, stdout),
        Command::Compute(args) => compute(&args, stdout),
        Command::Simulate(args) => simulate(&args, stdout),
        Command::Verify(args) => verify(&args, stdout),
    }
}

fn write_out(stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::io("writing output", e))
}

fn two_qubit_dims(kind: &str, dims: Option<&SystemShape>) -> CliResult<SystemShape> {
    match dims {
        None => Ok(SystemShape::qubits(2)?),
        Some(s) if s.is_two_qubit() => Ok(s.clone()),
        Some(s) => Err(CliError::BadInput(format!(
            "{kind} needs dims 2x2, got {s}"
        ))),
    }
}

fn required_dims(kind: &str, dims: Option<&SystemShape>) -> CliResult<SystemShape> {
    dims.cloned()
        .ok_or_else(|| CliError::BadInput(format!("{kind} needs --dims")))
}

pub fn build_state(args: &MkstateArgs) -> CliResult<DensityMatrix> {
    let dims = args.dims.as_ref();
    match args.kind {
        StateKind::Bell => {
            two_qubit_dims("bell", dims)?;
            Ok(states::bell_phi_plus().density())
        }
        StateKind::Werner => {
            two_qubit_dims("werner", dims)?;
            let p = args
                .p
                .ok_or_else(|| CliError::BadInput("werner needs --p".into()))?;
            Ok(states::werner(p)?)
        }
        StateKind::Ghz | StateKind::W => {
            let name = if args.kind == StateKind::Ghz {
                "ghz"
            } else {
                "w"
            };
            let shape = required_dims(name, dims)?;
            if shape.len() < 2 || shape.dims().iter().any(|&d| d != 2) {
                return Err(CliError::BadInput(format!(
                    "{name} needs at least two qubits, got dims {shape}"
                )));
            }
            let psi = if args.kind == StateKind::Ghz {
                states::ghz(shape.len())?
            } else {
                states::w_state(shape.len())?
            };
            Ok(psi.density())
        }
        StateKind::Maxmixed => Ok(DensityMatrix::maximally_mixed(required_dims(
            "maxmixed", dims,
        )?)),
        StateKind::Random => {
            let shape = required_dims("random", dims)?;
            let mut rng = stream_rng(args.seed, 0);
            match args.purity {
                Some(mu) => Ok(random_mixed_with_purity(&shape, mu, &mut rng)?),
                None => Ok(haar_random_pure(&shape, &mut rng).density()),
            }
        }
    }
}

fn mkstate(args: &MkstateArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let rho = build_state(args)?;
    let mut json = StateFile::from_density(&rho).to_json();
    json.push('\n');
    match &args.out {
        Some(path) => std::fs::write(path, json)
            .map_err(|e| CliError::io(format!("writing {}", path.display()), e)),
        None => write_out(stdout, &json),
    }
}

fn subset_name(subsystems: &[usize]) -> String {
    let parts: Vec<String> = subsystems.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Human-readable report. Subsystems are numbered from 0.
pub fn render_text(r: &BoundsReport) -> String {
    let dims: Vec<String> = r.dims.iter().map(|d| d.to_string()).collect();
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("dims            {}", dims.join("x")));
    line(format!("purity          {:.12}", r.purity));
    for p in &r.reduced_purities {
        line(format!(
            "purity {:<8} {:.12}",
            subset_name(&p.subsystems),
            p.purity
        ));
    }
    for (label, value) in &r.upper {
        line(format!("upper {:<9} {:.12}", label.to_string(), value));
    }
    for (label, value) in &r.lower {
        line(format!("lower {:<9} {:.12}", label.to_string(), value));
    }
    line(format!("offset          {:.12}", r.offset));
    line(format!("<A>             {:.12}", r.pure_observable));
    if let Some(t) = &r.two_qubit {
        line(format!("wootters C      {:.12}", t.wootters_c));
        line(format!("wootters C^2    {:.12}", t.wootters_c_sq));
        line(format!("tighter upper   {:.12}", t.tighter_upper));
    }
    if let Some(e) = &r.entropy {
        let verdict = |ok: bool| if ok { "holds" } else { "VIOLATED" };
        line(format!(
            "E(AB) E(A) E(B) {:.12} {:.12} {:.12}",
            e.linear_entropy, e.linear_entropy_a, e.linear_entropy_b
        ));
        line(format!(
            "triangle        {} {}",
            verdict(e.triangle[0]),
            verdict(e.triangle[1])
        ));
        line(format!("subadditivity   {}", verdict(e.subadditivity)));
        line(format!(
            "inverter trace  {:.12} ({})",
            e.inverter_trace,
            verdict(e.inverter_trace_nonnegative)
        ));
    }
    out
}

fn compute(args: &ComputeArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let rho = load_state(&args.state)?;
    let report = bounds::report(&rho)?;
    let text = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(&report),
    };
    write_out(stdout, &text)
}

fn simulate(args: &SimulateArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let spec = EnsembleSpec::new(args.dims.clone(), args.purity, args.samples, args.seed)?;
    let rows = simulate::run(&spec, args.workers)?;
    let summary = Summary::of(&rows);
    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::io(format!("creating {}", path.display()), e))?;
            table::write_rows(BufWriter::new(file), &rows)?;
            write_out(stdout, &format!("{summary}\n"))
        }
        None => {
            table::write_rows(&mut *stdout, &rows)?;
            eprintln!("{summary}");
            Ok(())
        }
    }
}

fn verify(args: &VerifyArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let cfg = verify::Config {
        shape: args.dims.clone(),
        samples: args.samples,
        seed: args.seed,
    };
    for outcome in verify::run(args.suite, &cfg)? {
        write_out(
            stdout,
            &format!("{}: {} checks passed\n", outcome.suite, outcome.checks),
        )?;
    }
    Ok(())
}
