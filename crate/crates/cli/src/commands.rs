use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use casimir_core::optics::{ImaginaryAxisTable, TabulatedResponse};
use casimir_core::{
    correction_factors, energy_plane_plane, force_crossed_cylinders, force_plane_plane,
    force_sphere_plane, roughness_average, CasimirError, CavityConfig, ForceResult, MirrorModel,
    MirrorPair, OpticalDataTable, PlanePlaneGeometry, QuadratureConfig, Quantity, ThermalState,
    Warning,
};
use rayon::prelude::*;

use crate::config::{load_tabulated, GeometrySpec, QuantityChoice, RunConfig};
use crate::CliError;

/// Evaluate the configured quantity at separation `l`.
pub fn evaluate_at(cfg: &RunConfig, l: f64) -> casimir_core::Result<ForceResult> {
    let base = |x: f64| -> casimir_core::Result<ForceResult> {
        match cfg.geometry.with_separation(x)? {
            GeometrySpec::PlanePlane(g) => {
                let cav = CavityConfig::new(cfg.mirrors.clone(), g, cfg.thermal);
                match cfg.quantity {
                    QuantityChoice::Force => force_plane_plane(&cav, &cfg.quadrature),
                    QuantityChoice::Energy => energy_plane_plane(&cav, &cfg.quadrature),
                }
            }
            GeometrySpec::SpherePlane(g) => force_sphere_plane(&g, &cfg.mirrors, cfg.thermal, &cfg.quadrature),
            GeometrySpec::CrossedCylinders(g) => {
                force_crossed_cylinders(&g, &cfg.mirrors, cfg.thermal, &cfg.quadrature)
            }
        }
    };
    match &cfg.roughness {
        None => base(l),
        Some(profile) => {
            let mut r = roughness_average(base, profile, l)?;
            let ideal_mirrors = cfg.mirrors.first.is_perfect() && cfg.mirrors.second.is_perfect();
            if !ideal_mirrors || !cfg.thermal.is_zero() {
                r.warnings.push(Warning::CorrectionsComposed);
            }
            Ok(r)
        }
    }
}

fn numerical(e: CasimirError) -> CliError {
    if e.is_numerical() {
        CliError::Numerical(e.to_string())
    } else {
        CliError::Config(e.to_string())
    }
}

pub struct ForceReport {
    pub result: ForceResult,
    pub text: String,
}

pub fn cmd_force(cfg: &RunConfig) -> Result<ForceReport, CliError> {
    let l = cfg.geometry.separation();
    let result = evaluate_at(cfg, l).map_err(numerical)?;
    let mut text = String::new();
    let _ = writeln!(text, "geometry: {}", cfg.geometry.describe());
    let _ = writeln!(text, "mirrors: {} | {}", cfg.mirror_labels.0, cfg.mirror_labels.1);
    let _ = writeln!(
        text,
        "temperature: {} K (zero-frequency TE: {:?})",
        cfg.thermal.temperature(),
        cfg.mirrors.zero_frequency
    );
    let (name, unit, factor) = match (result.quantity, &cfg.geometry) {
        (Quantity::Energy, _) => ("energy", "J", "eta_E"),
        (Quantity::Force, GeometrySpec::PlanePlane(_)) => ("force", "N", "eta_F"),
        (Quantity::Force, _) => ("force", "N", "eta_E"),
    };
    let _ = writeln!(text, "{name}: {:.6e} {unit}", result.value);
    let _ = writeln!(text, "reduction factor {factor}: {:.8}", result.reduction_factor);
    let _ = writeln!(text, "numerical error: {:.3e} {unit}", result.error_estimate);
    for w in &result.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    Ok(ForceReport { result, text })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepRange {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl SweepRange {
    pub fn grid(&self) -> Result<Vec<f64>, CliError> {
        if !(self.min > 0.0 && self.max > self.min && self.max.is_finite()) {
            return Err(CliError::Config(format!(
                "sweep range needs 0 < min < max, got {} .. {}",
                self.min, self.max
            )));
        }
        if self.points < 2 {
            return Err(CliError::Config(format!("sweep needs at least 2 points, got {}", self.points)));
        }
        let last = (self.points - 1) as f64;
        Ok((0..self.points)
            .map(|i| {
                if i == self.points - 1 {
                    return self.max;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Log => self.min * (self.max / self.min).powf(t),
                    Spacing::Linear => self.min + (self.max - self.min) * t,
                }
            })
            .collect())
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Io(format!("cannot start worker pool: {e}")))
}

/// Evaluate `f` at every grid point on `workers` threads; output order follows the grid.
fn map_points<T: Send>(grid: &[f64], workers: usize, f: impl Fn(f64) -> T + Sync) -> Result<Vec<T>, CliError> {
    Ok(pool(workers)?.install(|| grid.par_iter().map(|&l| f(l)).collect()))
}

fn join_warnings(warnings: &[Warning]) -> String {
    warnings.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn number(v: f64) -> String {
    format!("{v:e}")
}

pub struct SweepOutput {
    pub csv: String,
    pub failed: usize,
    pub points: usize,
}

pub fn cmd_sweep(cfg: &RunConfig, range: &SweepRange, workers: usize) -> Result<SweepOutput, CliError> {
    let grid = range.grid()?;
    let rows = map_points(&grid, workers, |l| evaluate_at(cfg, l))?;
    let header = match cfg.quantity {
        QuantityChoice::Force => ["L_m", "force_N", "eta_F", "error_est", "warnings"],
        QuantityChoice::Energy => ["L_m", "energy_J", "eta_E", "error_est", "warnings"],
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    let mut failed = 0;
    for (l, row) in grid.iter().zip(&rows) {
        let record = match row {
            Ok(r) => [
                number(*l),
                number(r.value),
                number(r.reduction_factor),
                number(r.error_estimate),
                join_warnings(&r.warnings),
            ],
            Err(e) => {
                failed += 1;
                [number(*l), String::new(), String::new(), String::new(), format!("error: {e}")]
            }
        };
        w.write_record(&record).map_err(io)?;
    }
    let csv = String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.to_string()))?)
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(SweepOutput { csv, failed, points: grid.len() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Force reduction factor for gold at zero temperature.
    Compf,
    /// Full, conductivity and thermal factors for aluminium at room temperature.
    Etatherm,
    /// Energy reduction factor for gold at zero temperature.
    Compe,
}

pub const GOLD_PLASMA_WAVELENGTH: f64 = 136e-9;
pub const GOLD_RELAXATION: f64 = 5.32e13;
pub const ALUMINIUM_PLASMA_WAVELENGTH: f64 = 107e-9;

pub fn default_figure_range() -> SweepRange {
    SweepRange {
        min: 0.05e-6,
        max: 10e-6,
        points: 50,
        spacing: Spacing::Log,
    }
}

pub fn cmd_figure(
    figure: Figure,
    range: &SweepRange,
    tabulated: Option<TabulatedResponse>,
    quadrature: &QuadratureConfig,
    workers: usize,
) -> Result<SweepOutput, CliError> {
    let grid = range.grid()?;
    let cavity = |mirror: MirrorModel, l: f64, t: ThermalState| -> casimir_core::Result<CavityConfig> {
        Ok(CavityConfig::new(
            MirrorPair::identical(mirror),
            PlanePlaneGeometry::new(1.0, l)?,
            t,
        ))
    };
    let gold = MirrorModel::plasma_from_wavelength(GOLD_PLASMA_WAVELENGTH).map_err(numerical)?;
    let tab = tabulated.map(MirrorModel::tabulated);
    type Row = (Vec<f64>, Vec<Warning>);
    let rows: Vec<casimir_core::Result<Row>> = match figure {
        Figure::Compf | Figure::Compe => {
            let factor = |m: &MirrorModel, l: f64, row: &mut Row| -> casimir_core::Result<()> {
                let cav = cavity(m.clone(), l, ThermalState::ZERO)?;
                let r = match figure {
                    Figure::Compf => force_plane_plane(&cav, quadrature)?,
                    _ => energy_plane_plane(&cav, quadrature)?,
                };
                row.0.push(r.reduction_factor);
                for w in r.warnings {
                    if !row.1.contains(&w) {
                        row.1.push(w);
                    }
                }
                Ok(())
            };
            map_points(&grid, workers, |l| {
                let mut row = (Vec::new(), Vec::new());
                factor(&gold, l, &mut row)?;
                if let Some(t) = &tab {
                    factor(t, l, &mut row)?;
                }
                Ok(row)
            })?
        }
        Figure::Etatherm => {
            let al = MirrorModel::plasma_from_wavelength(ALUMINIUM_PLASMA_WAVELENGTH).map_err(numerical)?;
            let room = ThermalState::new(300.0).map_err(numerical)?;
            map_points(&grid, workers, |l| {
                let c = correction_factors(&cavity(al.clone(), l, room)?, quadrature)?;
                Ok((vec![c.eta_full, c.eta_plasma, c.eta_thermal], c.warnings))
            })?
        }
    };
    let prefix = if figure == Figure::Compe { "eta_E" } else { "eta_F" };
    let mut header = vec!["L_m".to_string()];
    match figure {
        Figure::Etatherm => header.extend(["eta_F_full", "eta_F_plasma", "eta_F_thermal"].map(String::from)),
        _ => {
            header.push(format!("{prefix}_plasma"));
            if tab.is_some() {
                header.push(format!("{prefix}_tabulated"));
            }
        }
    }
    header.push("warnings".into());

    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(&header).map_err(io)?;
    let mut failed = 0;
    let width = header.len() - 2;
    for (l, row) in grid.iter().zip(rows) {
        let mut record = vec![number(*l)];
        match row {
            Ok((values, warnings)) => {
                record.extend(values.into_iter().map(number));
                record.push(join_warnings(&warnings));
            }
            Err(e) => {
                failed += 1;
                record.extend(std::iter::repeat_n(String::new(), width));
                record.push(format!("error: {e}"));
            }
        }
        w.write_record(&record).map_err(io)?;
    }
    let csv = String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.to_string()))?)
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(SweepOutput { csv, failed, points: grid.len() })
}

pub struct IngestReport {
    pub table: String,
    pub text: String,
}

/// Continue raw optical data to the imaginary axis on a log grid.
pub fn cmd_ingest_optical(
    input: &Path,
    omega_p: f64,
    gamma: f64,
    grid: &SweepRange,
    quadrature: &QuadratureConfig,
) -> Result<IngestReport, CliError> {
    let text = fs::read_to_string(input).map_err(|e| CliError::Config(format!("cannot read {}: {e}", input.display())))?;
    let data = OpticalDataTable::from_csv_str(&text, omega_p, gamma)
        .map_err(|e| CliError::Config(format!("{}: {e}", input.display())))?;
    let xis = grid.grid()?;
    let mut samples = Vec::with_capacity(xis.len());
    let mut low_max: (f64, f64) = (0.0, 0.0);
    let mut high_max: Option<(f64, f64)> = None;
    for &xi in &xis {
        let b = data.breakdown(xi, quadrature).map_err(numerical)?;
        samples.push((xi, b.epsilon));
        if b.low_fraction > low_max.0 {
            low_max = (b.low_fraction, xi);
        }
        if let Some(h) = b.high_fraction {
            if high_max.is_none_or(|(m, _)| h > m) {
                high_max = Some((h, xi));
            }
        }
    }
    let table = ImaginaryAxisTable::new(&samples, omega_p, gamma).map_err(|e| CliError::Config(e.to_string()))?;
    let (lo, hi) = data.frequency_range();
    let mut report = String::new();
    let _ = writeln!(report, "input: {} rows, omega {lo:.3e} .. {hi:.3e} rad/s", data.len());
    let _ = writeln!(report, "output: {} points, xi {:.3e} .. {:.3e} rad/s", xis.len(), xis[0], xis[xis.len() - 1]);
    let _ = writeln!(
        report,
        "low-frequency Drude extension: up to {:.3e} of eps-1 (at xi = {:.3e} rad/s)",
        low_max.0, low_max.1
    );
    match high_max {
        Some((h, xi)) => {
            let _ = writeln!(report, "high-frequency truncation: up to {h:.3e} of eps-1 (at xi = {xi:.3e} rad/s)");
        }
        None => {
            let _ = writeln!(report, "high-frequency truncation: not estimated (data do not decay at the cutoff)");
        }
    }
    Ok(IngestReport {
        table: table.to_csv_string(),
        text: report,
    })
}

/// Used by `--optical` on the figure command.
pub fn load_optical(path: &Path, omega_p: f64, gamma: f64) -> Result<TabulatedResponse, CliError> {
    load_tabulated(path, Some((omega_p, gamma))).map_err(CliError::Config)
}
