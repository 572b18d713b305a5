use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use casimir_cli::commands::{load_optical, GOLD_PLASMA_WAVELENGTH, GOLD_RELAXATION};
use casimir_cli::*;
use casimir_core::QuadratureConfig;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "casimir", version, about = "Casimir force between real mirrors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Force (or energy) at one separation
    Force(RunArgs),
    /// Distance sweep written as CSV
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Reduction-factor datasets for gold and aluminium mirrors
    Figure {
        #[arg(value_enum)]
        name: FigureName,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        range: RangeArgs,
        /// Optical data for the tabulated column (compf, compe)
        #[arg(long)]
        optical: Option<PathBuf>,
        #[arg(long, help = "plasma frequency for --optical, rad/s or length (default: 136nm)")]
        omega_p: Option<String>,
        #[arg(long, help = "relaxation rate for --optical, rad/s (default 5.32e13)")]
        gamma: Option<String>,
        #[arg(long)]
        rel_tol: Option<f64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Continue optical data to the imaginary axis
    IngestOptical {
        input: PathBuf,
        #[arg(long)]
        omega_p: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1e12)]
        xi_min: f64,
        #[arg(long, default_value_t = 1e18)]
        xi_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override any config key, e.g. --set temperature=300K
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    #[arg(long)]
    geometry: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    separation: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    area: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    radius: Option<String>,
    #[arg(long)]
    mirror: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    temperature: Option<String>,
    #[arg(long)]
    zero_frequency: Option<String>,
    #[arg(long)]
    quantity: Option<String>,
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long, allow_hyphen_values = true)]
    from: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    to: Option<String>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, value_enum)]
    spacing: Option<SpacingArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpacingArg {
    Log,
    Linear,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureName {
    Compf,
    Etatherm,
    Compe,
}

impl RunArgs {
    fn settings(&self) -> Result<Settings, CliError> {
        let mut s = match &self.config {
            Some(path) => Settings::from_file(path)?,
            None => Settings::default(),
        };
        let flags = [
            ("geometry", &self.geometry),
            ("separation", &self.separation),
            ("area", &self.area),
            ("radius", &self.radius),
            ("mirror", &self.mirror),
            ("temperature", &self.temperature),
            ("zero_frequency", &self.zero_frequency),
            ("quantity", &self.quantity),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                s.set(key, v.clone())?;
            }
        }
        for o in &self.overrides {
            let (k, v) = o
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("--set expects KEY=VALUE, got '{o}'")))?;
            s.set(k.trim(), v.trim())?;
        }
        if let Some(out) = &self.out {
            s.set("out", out.display().to_string())?;
        }
        Ok(s)
    }
}

fn range(args: &RangeArgs, default: SweepRange) -> Result<SweepRange, CliError> {
    let length = |v: &Option<String>, d: f64| -> Result<f64, CliError> {
        v.as_deref()
            .map_or(Ok(d), |s| parse_quantity(s, Unit::Length).map_err(CliError::Config))
    };
    Ok(SweepRange {
        min: length(&args.from, default.min)?,
        max: length(&args.to, default.max)?,
        points: args.points.unwrap_or(default.points),
        spacing: match args.spacing {
            Some(SpacingArg::Linear) => Spacing::Linear,
            Some(SpacingArg::Log) => Spacing::Log,
            None => default.spacing,
        },
    })
}

fn frequency_or_wavelength(text: &str) -> Result<f64, CliError> {
    match parse_quantity(text, Unit::Frequency) {
        Ok(v) => Ok(v),
        Err(_) => {
            let lambda = parse_quantity(text, Unit::Length).map_err(CliError::Config)?;
            casimir_core::plasma_frequency(lambda).map_err(|e| CliError::Config(e.to_string()))
        }
    }
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Force(args) => {
            let cfg = args.settings()?.build()?;
            let report = cmd_force(&cfg)?;
            if let Some(out) = &cfg.out {
                emit(Some(out), &report.text)?;
            }
            print!("{}", report.text);
            Ok(())
        }
        Command::Sweep { run, range: r, workers } => {
            let defaults = SweepRange {
                min: 0.1e-6,
                max: 10e-6,
                points: 20,
                spacing: Spacing::Log,
            };
            let r = range(&r, defaults)?;
            // the sweep supplies the separation; validation uses the first point
            let mut settings = run.settings()?;
            settings.set("separation", format!("{:e}", r.min))?;
            let cfg = settings.build()?;
            let out = cmd_sweep(&cfg, &r, workers)?;
            emit(cfg.out.as_deref(), &out.csv)?;
            report_failures(&out)
        }
        Command::Figure {
            name,
            out,
            range: r,
            optical,
            omega_p,
            gamma,
            rel_tol,
            workers,
        } => {
            let figure = match name {
                FigureName::Compf => Figure::Compf,
                FigureName::Etatherm => Figure::Etatherm,
                FigureName::Compe => Figure::Compe,
            };
            let r = range(&r, default_figure_range())?;
            let tabulated = match &optical {
                Some(path) => {
                    let wp = match &omega_p {
                        Some(w) => frequency_or_wavelength(w)?,
                        None => casimir_core::plasma_frequency(GOLD_PLASMA_WAVELENGTH)
                            .map_err(|e| CliError::Config(e.to_string()))?,
                    };
                    let g = match &gamma {
                        Some(g) => parse_quantity(g, Unit::Frequency).map_err(CliError::Config)?,
                        None => GOLD_RELAXATION,
                    };
                    Some(load_optical(path, wp, g)?)
                }
                None => None,
            };
            let mut quadrature = QuadratureConfig::default();
            if let Some(t) = rel_tol {
                quadrature.rel_tol = t;
                quadrature.validate().map_err(|e| CliError::Config(e.to_string()))?;
            }
            let out_csv = cmd_figure(figure, &r, tabulated, &quadrature, workers)?;
            emit(out.as_deref(), &out_csv.csv)?;
            report_failures(&out_csv)
        }
        Command::IngestOptical {
            input,
            omega_p,
            gamma,
            out,
            xi_min,
            xi_max,
            points,
        } => {
            let wp = frequency_or_wavelength(&omega_p)?;
            let g = parse_quantity(&gamma, Unit::Frequency).map_err(CliError::Config)?;
            let grid = SweepRange {
                min: xi_min,
                max: xi_max,
                points,
                spacing: Spacing::Log,
            };
            let report = cmd_ingest_optical(&input, wp, g, &grid, &QuadratureConfig::default())?;
            match &out {
                Some(path) => {
                    emit(Some(path), &report.table)?;
                    eprint!("{}", report.text);
                }
                None => {
                    print!("{}", report.table);
                    eprint!("{}", report.text);
                }
            }
            Ok(())
        }
    }
}

fn report_failures(out: &SweepOutput) -> Result<(), CliError> {
    if out.failed == 0 {
        return Ok(());
    }
    eprintln!("{} of {} points failed; see the warnings column", out.failed, out.points);
    if out.failed == out.points {
        Err(CliError::Numerical("every sweep point failed".into()))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
