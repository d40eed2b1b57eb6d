//! Command-line interface.
//!
//! Exit codes: 0 success or pass, 1 numerical failure or a failing verdict,
//! 2 usage or validation error.

pub mod files;
pub mod groupspec;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::experiments::{self, ExperimentReport};
use crate::groups::{subgroup_density_z_axis, uniform_density, GroupDensity, GroupKind, Representation};
use crate::linalg::ComplexMatrix;
use crate::measures::{self, MeasureParameters, MeasureResult, MeasureValue};
use crate::quantum::{is_covariant_channel, DensityOperator};
use crate::real::display;

use files::{ChannelCheckReport, ChannelFile, Payload, ReportFile, StateFile};
use groupspec::{parse_element, parse_group};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "asymmetry", version, about = "Asymmetry measures of quantum states relative to symmetry groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one measure on a state.
    Measure(MeasureArgs),
    /// Run a named demonstration and report pass/fail.
    Reproduce(ReproduceArgs),
    /// Check whether a channel commutes with the group action.
    CheckChannel(CheckChannelArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum MeasureKind {
    Holevo,
    Commutator,
    TraceDistance,
    Renyi,
    Skew,
    Char,
    Moments,
    CramerRao,
}

impl MeasureKind {
    fn name(self) -> &'static str {
        match self {
            MeasureKind::Holevo => "holevo",
            MeasureKind::Commutator => "commutator",
            MeasureKind::TraceDistance => "trace-distance",
            MeasureKind::Renyi => "renyi",
            MeasureKind::Skew => "skew",
            MeasureKind::Char => "char",
            MeasureKind::Moments => "moments",
            MeasureKind::CramerRao => "cramer-rao",
        }
    }
}

#[derive(Args, Debug)]
struct MeasureArgs {
    /// State file.
    #[arg(long)]
    state: PathBuf,
    /// Second state, for the Rényi divergence between two given states.
    #[arg(long)]
    state2: Option<PathBuf>,
    /// Group specifier, e.g. su2:0.5, u1:0,1,2, regular:8, tensor:su2:1/2*trivial:su2:2.
    #[arg(long)]
    group: Option<String>,
    #[arg(long, value_enum)]
    measure: MeasureKind,
    /// Order s for skew information and Rényi divergence.
    #[arg(long)]
    s: Option<f64>,
    /// Generator: x, y or z for SU(2); n for U(1).
    #[arg(long)]
    generator: Option<String>,
    /// uniform, uniform:RES or z-axis:RES.
    #[arg(long, default_value = "uniform")]
    density: String,
    /// Group element; repeatable for the characteristic function.
    #[arg(long)]
    element: Vec<String>,
    /// Highest moment order.
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    /// Report file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Recorded in the report; measures are deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    /// spin-example, triviality:N, amplifier:T, interconversion or
    /// monotonicity:INSTANCE:MEASURE:T.
    id: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckChannelArgs {
    /// Channel file with Kraus operators.
    #[arg(long)]
    channel: PathBuf,
    /// Group acting on the channel input (and output, unless --output-group).
    #[arg(long)]
    group: String,
    /// Group representation on the output space, for covariant channels
    /// between different spaces.
    #[arg(long)]
    output_group: Option<String>,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

fn exit_code(e: &Error) -> i32 {
    if e.is_numerical() {
        EXIT_FAIL
    } else {
        EXIT_USAGE
    }
}

/// Parses arguments (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let started = unix_now();
    let outcome = match cli.command {
        Command::Measure(a) => cmd_measure(&a).map(|(m, line)| {
            println!("{line}");
            (Payload::Measure(m), true, a.seed, a.out)
        }),
        Command::Reproduce(a) => cmd_reproduce(&a).map(|r| {
            print_experiment(&r);
            let pass = r.pass;
            (Payload::Experiment(r), pass, a.seed, a.out)
        }),
        Command::CheckChannel(a) => cmd_check_channel(&a).map(|r| {
            println!(
                "{}: max deviation {} (tolerance {})",
                if r.symmetric { "symmetric" } else { "not symmetric" },
                display(r.max_deviation),
                display(r.tolerance)
            );
            let pass = r.symmetric;
            (Payload::ChannelCheck(r), pass, a.seed, a.out)
        }),
    };
    match outcome {
        Ok((payload, pass, seed, out)) => {
            if let Some(path) = out {
                let report = ReportFile {
                    tool: env!("CARGO_PKG_NAME").into(),
                    version: env!("CARGO_PKG_VERSION").into(),
                    command: echo,
                    seed,
                    payload,
                    started_unix: started,
                    finished_unix: unix_now(),
                };
                if let Err(e) = files::write_json_atomic(&path, &report) {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
            if pass {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn print_experiment(r: &ExperimentReport) {
    println!("{} (seed {})", r.experiment, r.seed);
    for c in &r.checks {
        println!(
            "  {} {}: actual {} expected {} ({:?}, tol {})",
            if c.pass { "PASS" } else { "FAIL" },
            c.description,
            display(c.actual),
            display(c.expected),
            c.comparison,
            display(c.tolerance)
        );
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
    println!("overall: {}", if r.pass { "pass" } else { "fail" });
}

fn load_state(path: &Path) -> Result<DensityOperator> {
    files::read_json::<StateFile>(path, "state file")?.to_state()
}

fn require_group(a: &MeasureArgs) -> Result<Representation> {
    let spec = a
        .group
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument(format!("--group is required for --measure {}", a.measure.name())))?;
    parse_group(spec)
}

fn generator(rep: &Representation, name: Option<&str>) -> Result<(String, ComplexMatrix)> {
    let name = match (name, rep.kind()) {
        (Some(n), _) => n,
        (None, GroupKind::U1) => "n",
        (None, GroupKind::Su2) => "z",
        (None, GroupKind::Finite(_)) => {
            return Err(Error::InvalidArgument(
                "finite groups have no generators; use trace-distance or renyi with --element".into(),
            ))
        }
    };
    Ok((name.to_string(), rep.generator(name)?.clone()))
}

fn parse_density(rep: &Representation, text: &str) -> Result<GroupDensity> {
    let resolution =
        |r: &str| -> Result<usize> { r.parse().map_err(|_| Error::Parse(format!("density '{text}': bad resolution"))) };
    match text.split_once(':') {
        None if text == "uniform" => uniform_density(rep, 1),
        None if text == "z-axis" => subgroup_density_z_axis(rep, 1),
        Some(("uniform", r)) => uniform_density(rep, resolution(r)?),
        Some(("z-axis", r)) => subgroup_density_z_axis(rep, resolution(r)?),
        _ => Err(Error::Parse(format!("density '{text}': expected uniform, uniform:RES or z-axis:RES"))),
    }
}

fn single_element(a: &MeasureArgs, rep: &Representation) -> Result<(String, crate::groups::GroupElement)> {
    match a.element.as_slice() {
        [one] => Ok((one.clone(), parse_element(rep, one)?)),
        _ => Err(Error::InvalidArgument(format!("--measure {} needs exactly one --element", a.measure.name()))),
    }
}

fn require_s(a: &MeasureArgs) -> Result<f64> {
    a.s.ok_or_else(|| Error::InvalidArgument(format!("--measure {} needs --s", a.measure.name())))
}

fn format_value(v: &MeasureValue) -> String {
    match v {
        MeasureValue::Scalar(x) => display(*x),
        MeasureValue::Real(xs) => format!("[{}]", xs.iter().map(|x| display(*x)).collect::<Vec<_>>().join(", ")),
        MeasureValue::Complex(zs) => format!(
            "[{}]",
            zs.iter().map(|z| format!("[{}, {}]", display(z.re), display(z.im))).collect::<Vec<_>>().join(", ")
        ),
    }
}

fn cmd_measure(a: &MeasureArgs) -> Result<(MeasureResult, String)> {
    let rho = load_state(&a.state)?;
    let mut params = MeasureParameters { group: a.group.clone(), ..Default::default() };
    let mut inputs: Vec<ComplexMatrix> = vec![rho.matrix().clone()];
    let value = match a.measure {
        MeasureKind::Holevo => {
            let rep = require_group(a)?;
            let p = parse_density(&rep, &a.density)?;
            params.density = Some(p.label().to_string());
            MeasureValue::Scalar(measures::holevo_asymmetry(&rho, &rep, &p)?)
        }
        MeasureKind::Commutator => {
            let rep = require_group(a)?;
            let (name, l) = generator(&rep, a.generator.as_deref())?;
            params.generator = Some(name);
            MeasureValue::Scalar(measures::commutator_asymmetry(&rho, &l)?)
        }
        MeasureKind::TraceDistance => {
            let rep = require_group(a)?;
            let (label, g) = single_element(a, &rep)?;
            params.element = Some(label);
            MeasureValue::Scalar(measures::trace_distance_asymmetry(&rho, &rep, &g)?)
        }
        MeasureKind::Renyi => {
            let s = require_s(a)?;
            params.s = Some(s);
            match &a.state2 {
                Some(path) => {
                    let rho2 = load_state(path)?;
                    inputs.push(rho2.matrix().clone());
                    MeasureValue::Scalar(measures::renyi_divergence(&rho, &rho2, s)?)
                }
                None => {
                    let rep = require_group(a)?;
                    let (label, g) = single_element(a, &rep)?;
                    params.element = Some(label);
                    MeasureValue::Scalar(measures::renyi_asymmetry(&rho, &rep, &g, s)?)
                }
            }
        }
        MeasureKind::Skew => {
            let s = require_s(a)?;
            let rep = require_group(a)?;
            let (name, l) = generator(&rep, a.generator.as_deref())?;
            params.generator = Some(name);
            params.s = Some(s);
            MeasureValue::Scalar(measures::skew_information(&rho, &l, s)?)
        }
        MeasureKind::Moments => {
            let rep = require_group(a)?;
            let (name, l) = generator(&rep, a.generator.as_deref())?;
            params.generator = Some(name);
            MeasureValue::Real(measures::noether_moments(&rho, &l, a.k_max)?)
        }
        MeasureKind::Char => {
            let rep = require_group(a)?;
            let elements = if a.element.is_empty() {
                rep.sample_elements(experiments::LIE_SAMPLE_COUNT)
            } else {
                a.element.iter().map(|e| parse_element(&rep, e)).collect::<Result<Vec<_>>>()?
            };
            if !a.element.is_empty() {
                params.element = Some(a.element.join(" "));
            }
            MeasureValue::Complex(measures::characteristic_function(&rho, &rep, &elements)?)
        }
        MeasureKind::CramerRao => {
            let rep = require_group(a)?;
            let (name, l) = generator(&rep, a.generator.as_deref())?;
            params.generator = Some(name);
            match measures::cramer_rao_bound_value(&rho, &l) {
                Ok(v) => MeasureValue::Scalar(v),
                Err(Error::ZeroAsymmetry) => MeasureValue::Scalar(f64::INFINITY),
                Err(e) => return Err(e),
            }
        }
    };
    let refs: Vec<&ComplexMatrix> = inputs.iter().collect();
    let line = format_value(&value);
    Ok((MeasureResult::new(a.measure.name(), value, &refs, params), line))
}

fn cmd_reproduce(a: &ReproduceArgs) -> Result<ExperimentReport> {
    experiments::run_by_id(&a.id, a.seed)
}

fn cmd_check_channel(a: &CheckChannelArgs) -> Result<ChannelCheckReport> {
    if a.tol.is_nan() || a.tol < 0.0 {
        return Err(Error::InvalidArgument("--tol must be nonnegative".into()));
    }
    let file: ChannelFile = files::read_json(&a.channel, "channel file")?;
    let channel = file.to_channel()?;
    let rep_in = parse_group(&a.group)?;
    let out_spec = a.output_group.clone().unwrap_or_else(|| a.group.clone());
    let rep_out = parse_group(&out_spec)?;
    let check = is_covariant_channel(&channel, &rep_in, &rep_out, a.tol)?;
    Ok(ChannelCheckReport {
        channel_label: file.label,
        input_group: a.group.clone(),
        output_group: out_spec,
        tolerance: a.tol,
        max_deviation: check.max_deviation,
        symmetric: check.symmetric,
    })
}
