//! Plane-plane Casimir force and energy between real mirrors.
//!
//! With `k^2 = kappa^2 - xi^2/c^2` the zero-temperature force becomes
//!
//! `F = (hbar A / 2 pi^2) sum_p int_0^inf d xi int_{xi/c}^inf d kappa kappa^2 r1 r2 / (e^{2 kappa L} - r1 r2)`
//!
//! and the energy is its analytic distance integral,
//!
//! `E = -(hbar A / 4 pi^2) sum_p int d xi int d kappa kappa ln(1 - r1 r2 e^{-2 kappa L})`.
//!
//! At temperature `T` the frequency integral `hbar int d xi / 2 pi` becomes
//! `k_B T` times a Matsubara sum over `xi_m = 2 pi m k_B T / hbar` with the
//! `m = 0` term half-weighted. The `kappa` integral is always the inner one.

use std::f64::consts::PI;

use crate::domain::{
    constants::{C, HBAR, K_B},
    ideal_casimir_energy, ideal_casimir_force, PlanePlaneGeometry, Polarization, ThermalState,
    Warning,
};
use crate::error::{CasimirError, Result};
use crate::optics::{MirrorModel, SurfaceResponse};
use crate::quadrature::{try_integrate_semi_infinite, try_matsubara_sum, NumericResult, QuadratureConfig};

pub use crate::optics::ZeroFrequencyPrescription;

/// Inner (kappa) integrals run this much tighter than the outer one.
const INNER_TIGHTENING: f64 = 10.0;
/// Extra tightening for the correlation factor, a difference of near-equal numbers.
const CORRELATION_TIGHTENING: f64 = 100.0;

#[derive(Debug, Clone, PartialEq)]
pub struct MirrorPair {
    pub first: MirrorModel,
    pub second: MirrorModel,
    pub zero_frequency: ZeroFrequencyPrescription,
}

impl MirrorPair {
    pub fn new(first: MirrorModel, second: MirrorModel) -> Self {
        Self {
            first,
            second,
            zero_frequency: ZeroFrequencyPrescription::default(),
        }
    }

    pub fn identical(mirror: MirrorModel) -> Self {
        Self::new(mirror.clone(), mirror)
    }

    pub fn perfect() -> Self {
        Self::identical(MirrorModel::PerfectReflector)
    }

    pub fn with_zero_frequency(mut self, prescription: ZeroFrequencyPrescription) -> Self {
        self.zero_frequency = prescription;
        self
    }

    pub fn swapped(&self) -> Self {
        Self {
            first: self.second.clone(),
            second: self.first.clone(),
            zero_frequency: self.zero_frequency,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.first.validate()?;
        self.second.validate()
    }

    pub fn warnings(&self) -> Vec<Warning> {
        let mut w = self.first.warnings();
        if self.first != self.second {
            w.extend(self.second.warnings());
        }
        w
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CavityConfig {
    pub mirrors: MirrorPair,
    pub geometry: PlanePlaneGeometry,
    pub thermal: ThermalState,
}

impl CavityConfig {
    pub fn new(mirrors: MirrorPair, geometry: PlanePlaneGeometry, thermal: ThermalState) -> Self {
        Self {
            mirrors,
            geometry,
            thermal,
        }
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        Ok(Self {
            geometry: self.geometry.with_separation(separation)?,
            ..self.clone()
        })
    }

    pub fn with_thermal(&self, thermal: ThermalState) -> Self {
        Self {
            thermal,
            ..self.clone()
        }
    }

    pub fn with_mirrors(&self, mirrors: MirrorPair) -> Self {
        Self {
            mirrors,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// Newtons, positive for attraction.
    Force,
    /// Joules, positive binding energy.
    Energy,
}

/// A force or energy with its numerical error and reduction factor.
#[derive(Debug, Clone, PartialEq)]
pub struct ForceResult {
    pub quantity: Quantity,
    pub value: f64,
    pub error_estimate: f64,
    /// `value` divided by the ideal Casimir value for the same geometry.
    pub reduction_factor: f64,
    pub warnings: Vec<Warning>,
}

/// Integrand of the `kappa` integral at fixed `xi`.
struct Kernel {
    r1: SurfaceResponse,
    r2: SurfaceResponse,
    q: f64,
    separation: f64,
    quantity: Quantity,
}

impl Kernel {
    fn new(mirrors: &MirrorPair, xi: f64, separation: f64, quantity: Quantity, cfg: &QuadratureConfig) -> Result<Self> {
        let r1 = mirrors.first.response_at(xi, mirrors.zero_frequency, cfg)?;
        let r2 = if mirrors.first == mirrors.second {
            r1
        } else {
            mirrors.second.response_at(xi, mirrors.zero_frequency, cfg)?
        };
        Ok(Self {
            r1,
            r2,
            q: xi / C,
            separation,
            quantity,
        })
    }

    fn eval(&self, kappa: f64) -> Result<f64> {
        let propagation = -2.0 * kappa * self.separation;
        let decay = propagation.exp();
        let mut total = 0.0;
        for pol in Polarization::BOTH {
            let rr = self.r1.amplitude(kappa, pol) * self.r2.amplitude(kappa, pol);
            if rr == 0.0 {
                continue;
            }
            // 1 - rr e^{-2 kappa L}, without cancellation when rr ~ 1 and kappa L ~ 0
            let gap = (1.0 - rr) - rr * propagation.exp_m1();
            let x = rr * decay;
            if gap.is_nan() || gap <= 0.0 {
                return Err(CasimirError::InconsistentAmplitude {
                    product: rr,
                    propagation: (-propagation).exp(),
                });
            }
            total += match self.quantity {
                Quantity::Force => kappa * kappa * x / gap,
                Quantity::Energy => {
                    let log = if x < 0.5 { (-x).ln_1p() } else { gap.ln() };
                    -kappa * log
                }
            };
        }
        Ok(total)
    }

    /// `sum_p int_{xi/c}^inf d kappa (...)`.
    fn integrate(&self, cfg: &QuadratureConfig) -> Result<NumericResult> {
        try_integrate_semi_infinite(
            |t| self.eval(self.q + t),
            1.0 / (2.0 * self.separation),
            cfg,
        )
    }
}

fn spectral_density(
    mirrors: &MirrorPair,
    xi: f64,
    separation: f64,
    quantity: Quantity,
    cfg: &QuadratureConfig,
) -> Result<NumericResult> {
    Kernel::new(mirrors, xi, separation, quantity, cfg)?.integrate(cfg)
}

fn prefactor_t0(quantity: Quantity, area: f64) -> f64 {
    match quantity {
        Quantity::Force => HBAR * area / (2.0 * PI * PI),
        Quantity::Energy => HBAR * area / (4.0 * PI * PI),
    }
}

fn ideal(quantity: Quantity, geom: &PlanePlaneGeometry) -> f64 {
    match quantity {
        Quantity::Force => ideal_casimir_force(geom),
        Quantity::Energy => ideal_casimir_energy(geom),
    }
}

fn finish(cav: &CavityConfig, quantity: Quantity, value: f64, error: f64) -> ForceResult {
    let mut warnings = cav.geometry.warnings();
    warnings.extend(cav.mirrors.warnings());
    ForceResult {
        quantity,
        value,
        error_estimate: error,
        reduction_factor: value / ideal(quantity, &cav.geometry),
        warnings,
    }
}

fn evaluate_t0(cav: &CavityConfig, quantity: Quantity, cfg: &QuadratureConfig) -> Result<ForceResult> {
    cfg.validate()?;
    cav.mirrors.validate()?;
    if !cav.thermal.is_zero() {
        return Err(CasimirError::invalid(
            "temperature",
            cav.thermal.temperature(),
            "zero-temperature evaluation requested at T > 0",
        ));
    }
    let l = cav.geometry.separation();
    let inner = cfg.tightened(INNER_TIGHTENING);
    let mut inner_rel = 0.0f64;
    let outer = try_integrate_semi_infinite(
        |xi| {
            let r = spectral_density(&cav.mirrors, xi, l, quantity, &inner)?;
            inner_rel = inner_rel.max(r.relative_error());
            Ok(r.value)
        },
        C / (2.0 * l),
        cfg,
    )?;
    let pre = prefactor_t0(quantity, cav.geometry.area());
    let value = pre * outer.value;
    let error = pre * (outer.error_estimate + inner_rel * outer.value.abs());
    Ok(finish(cav, quantity, value, error))
}

fn evaluate_finite_t(cav: &CavityConfig, quantity: Quantity, cfg: &QuadratureConfig) -> Result<ForceResult> {
    cfg.validate()?;
    cav.mirrors.validate()?;
    if cav.thermal.is_zero() {
        return Err(CasimirError::invalid(
            "temperature",
            0.0,
            "finite-temperature evaluation requires T > 0",
        ));
    }
    let l = cav.geometry.separation();
    let spacing = cav.thermal.matsubara_spacing();
    let inner = cfg.tightened(INNER_TIGHTENING);
    let sum = try_matsubara_sum(
        |m| spectral_density(&cav.mirrors, m as f64 * spacing, l, quantity, &inner),
        cfg,
    )?;
    // hbar int d xi / (2 pi) -> k_B T sum'
    let pre = 2.0 * PI / HBAR * prefactor_t0(quantity, cav.geometry.area()) * K_B * cav.thermal.temperature();
    Ok(finish(cav, quantity, pre * sum.value, pre * sum.error_estimate))
}

/// Zero-temperature plane-plane force.
pub fn force_plane_plane_t0(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<ForceResult> {
    evaluate_t0(cav, Quantity::Force, cfg)
}

/// Zero-temperature plane-plane binding energy.
pub fn energy_plane_plane_t0(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<ForceResult> {
    evaluate_t0(cav, Quantity::Energy, cfg)
}

/// Plane-plane force at `T > 0` from the Matsubara sum.
///
/// The `m = 0` term uses the zero-frequency limits selected by
/// `cav.mirrors.zero_frequency`.
pub fn force_plane_plane_finite_t(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<ForceResult> {
    evaluate_finite_t(cav, Quantity::Force, cfg)
}

/// Force at the cavity's temperature, zero or finite.
pub fn force_plane_plane(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<ForceResult> {
    if cav.thermal.is_zero() {
        force_plane_plane_t0(cav, cfg)
    } else {
        force_plane_plane_finite_t(cav, cfg)
    }
}

/// Energy at the cavity's temperature; at `T > 0` this is the free energy.
pub fn energy_plane_plane(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<ForceResult> {
    if cav.thermal.is_zero() {
        energy_plane_plane_t0(cav, cfg)
    } else {
        evaluate_finite_t(cav, Quantity::Energy, cfg)
    }
}

pub fn eta_f(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(force_plane_plane(cav, cfg)?.reduction_factor)
}

pub fn eta_e(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(energy_plane_plane(cav, cfg)?.reduction_factor)
}

/// Split of the force correction into conductivity and temperature parts,
/// `eta_full = eta_plasma * eta_thermal * (1 + delta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionFactors {
    /// Given mirrors at the given temperature.
    pub eta_full: f64,
    /// Given mirrors at zero temperature.
    pub eta_plasma: f64,
    /// Perfect mirrors at the given temperature.
    pub eta_thermal: f64,
    pub delta: f64,
    /// Numerical uncertainty of `delta`.
    pub delta_error: f64,
    pub warnings: Vec<Warning>,
}

/// Correction factors evaluated from three independent full computations.
/// Tolerances are tightened 100x relative to `cfg`.
pub fn correction_factors(cav: &CavityConfig, cfg: &QuadratureConfig) -> Result<CorrectionFactors> {
    let tight = cfg.tightened(CORRELATION_TIGHTENING);
    let full = force_plane_plane(cav, &tight)?;
    let plasma = force_plane_plane_t0(&cav.with_thermal(ThermalState::ZERO), &tight)?;
    let perfect = cav.with_mirrors(MirrorPair::perfect());
    let thermal = force_plane_plane(&perfect, &tight)?;

    let rel = |r: &ForceResult| (r.error_estimate / r.value).abs();
    let ratio = full.reduction_factor / (plasma.reduction_factor * thermal.reduction_factor);
    Ok(CorrectionFactors {
        eta_full: full.reduction_factor,
        eta_plasma: plasma.reduction_factor,
        eta_thermal: thermal.reduction_factor,
        delta: ratio - 1.0,
        delta_error: ratio.abs() * (rel(&full) + rel(&plasma) + rel(&thermal)),
        warnings: full.warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::plasma_frequency;

    fn cavity(mirror: MirrorModel, l: f64, t: f64) -> CavityConfig {
        CavityConfig::new(
            MirrorPair::identical(mirror),
            PlanePlaneGeometry::new(1e-4, l).unwrap(),
            ThermalState::new(t).unwrap(),
        )
    }

    fn au() -> MirrorModel {
        MirrorModel::plasma(plasma_frequency(136e-9).unwrap()).unwrap()
    }

    #[test]
    fn perfect_mirrors_recover_ideal_values() {
        let cfg = QuadratureConfig::default();
        for l in [1e-7, 1e-6, 1e-5] {
            let cav = cavity(MirrorModel::PerfectReflector, l, 0.0);
            let f = force_plane_plane_t0(&cav, &cfg).unwrap();
            let e = energy_plane_plane_t0(&cav, &cfg).unwrap();
            assert!((f.reduction_factor - 1.0).abs() < 1e-8, "{f:?}");
            assert!((e.reduction_factor - 1.0).abs() < 1e-8, "{e:?}");
            assert!(f.error_estimate < 1e-8 * f.value);
        }
    }

    #[test]
    fn temperature_preconditions() {
        let cfg = QuadratureConfig::default();
        let warm = cavity(au(), 1e-6, 300.0);
        assert!(force_plane_plane_t0(&warm, &cfg).is_err());
        let cold = cavity(au(), 1e-6, 0.0);
        assert!(force_plane_plane_finite_t(&cold, &cfg).is_err());
    }

    #[test]
    fn gold_reduction_at_short_distance() {
        let cfg = QuadratureConfig::default();
        let f = force_plane_plane_t0(&cavity(au(), 1e-7, 0.0), &cfg).unwrap();
        assert!((0.4..=0.6).contains(&f.reduction_factor), "{f:?}");
        let e = energy_plane_plane_t0(&cavity(au(), 1e-7, 0.0), &cfg).unwrap();
        // the energy factor averages the force factor over larger distances
        assert!(f.reduction_factor < e.reduction_factor && e.reduction_factor < 1.0, "{e:?}");
        let at_lambda = eta_f(&cavity(au(), 136e-9, 0.0), &cfg).unwrap();
        assert!(at_lambda > 0.5 && at_lambda < 0.8, "{at_lambda}");
    }

    #[test]
    fn swapping_mirrors_is_bit_identical() {
        let cfg = QuadratureConfig::default();
        let pair = MirrorPair::new(au(), MirrorModel::drude(plasma_frequency(107e-9).unwrap(), 1e14).unwrap());
        let geom = PlanePlaneGeometry::new(1e-4, 3e-7).unwrap();
        for t in [0.0, 300.0] {
            let thermal = ThermalState::new(t).unwrap();
            let a = force_plane_plane(&CavityConfig::new(pair.clone(), geom, thermal), &cfg).unwrap();
            let b = force_plane_plane(&CavityConfig::new(pair.swapped(), geom, thermal), &cfg).unwrap();
            assert_eq!(a.value.to_bits(), b.value.to_bits());
            assert_eq!(a.error_estimate.to_bits(), b.error_estimate.to_bits());
        }
    }

    #[test]
    fn drude_prescription_lowers_thermal_force() {
        let cfg = QuadratureConfig::default();
        let cav = cavity(au(), 3e-6, 300.0);
        let plasma = force_plane_plane_finite_t(&cav, &cfg).unwrap();
        let drude_cav = cav.with_mirrors(cav.mirrors.clone().with_zero_frequency(ZeroFrequencyPrescription::Drude));
        let drude = force_plane_plane_finite_t(&drude_cav, &cfg).unwrap();
        assert!(drude.value < plasma.value);
    }

    #[test]
    fn correction_factors_for_perfect_mirrors_at_zero_temperature() {
        let cfg = QuadratureConfig::default();
        let c = correction_factors(&cavity(MirrorModel::PerfectReflector, 1e-6, 0.0), &cfg).unwrap();
        for v in [c.eta_full, c.eta_plasma, c.eta_thermal] {
            assert!((v - 1.0).abs() < 1e-9, "{c:?}");
        }
        assert!(c.delta.abs() < 1e-9);
    }
}
