//! Physical constants, geometries, thermal state and the ideal Casimir values.
//!
//! Everything is SI internally: meters, seconds, kelvin, rad/s. Forces and
//! energies are reported positive for attraction / binding.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{CasimirError, Result};

/// CODATA 2018 exact or recommended values.
pub mod constants {
    /// Reduced Planck constant, J s.
    pub const HBAR: f64 = 1.054_571_817e-34;
    /// Speed of light in vacuum, m/s.
    pub const C: f64 = 2.997_924_58e8;
    /// Boltzmann constant, J/K.
    pub const K_B: f64 = 1.380_649e-23;
}

use constants::{C, HBAR, K_B};

/// Non-fatal validity notes attached to results.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// Plate transverse size not much larger than the separation.
    TransverseSize { area: f64, separation: f64 },
    /// Radius below 100 separations; the proximity force approximation is doubtful.
    ProximityForceRegime { radius: f64, separation: f64 },
    /// Drude relaxation rate not small compared with the plasma frequency.
    LargeRelaxation { omega_p: f64, gamma: f64 },
    /// Deriagin roughness averaging only holds for long-wavelength roughness.
    RoughnessLongWavelength,
    /// Crossed-cylinder force uses the effective radius sqrt(R1 R2).
    CrossedCylinderEffectiveRadius,
    /// Roughness and conductivity/temperature corrections are combined as independent.
    CorrectionsComposed,
    /// Free-form note produced by a front end (e.g. a failed sweep point).
    Note(String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::TransverseSize { area, separation } => write!(
                f,
                "plate size not much larger than separation (L^2 = {:.3e} m^2 > 1e-4 A = {:.3e} m^2)",
                separation * separation,
                1e-4 * area
            ),
            Warning::ProximityForceRegime { radius, separation } => write!(
                f,
                "proximity force approximation outside its regime (R = {radius:.3e} m < 100 L = {:.3e} m)",
                100.0 * separation
            ),
            Warning::LargeRelaxation { omega_p, gamma } => write!(
                f,
                "Drude relaxation not small (gamma/omega_P = {:.3e} > 0.1)",
                gamma / omega_p
            ),
            Warning::RoughnessLongWavelength => write!(
                f,
                "roughness averaging assumes long-wavelength roughness"
            ),
            Warning::CrossedCylinderEffectiveRadius => write!(
                f,
                "crossed cylinders use the Deriagin effective radius sqrt(R1 R2)"
            ),
            Warning::CorrectionsComposed => write!(
                f,
                "roughness composed with conductivity/temperature corrections as if independent"
            ),
            Warning::Note(s) => f.write_str(s),
        }
    }
}

fn require_positive(what: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(CasimirError::invalid(what, value, "must be positive and finite"))
    }
}

/// Two parallel plates of area `area` at distance `separation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePlaneGeometry {
    area: f64,
    separation: f64,
}

impl PlanePlaneGeometry {
    pub fn new(area: f64, separation: f64) -> Result<Self> {
        require_positive("area", area)?;
        require_positive("separation", separation)?;
        Ok(Self { area, separation })
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        Self::new(self.area, separation)
    }

    pub fn warnings(&self) -> Vec<Warning> {
        if self.separation * self.separation > 1e-4 * self.area {
            vec![Warning::TransverseSize {
                area: self.area,
                separation: self.separation,
            }]
        } else {
            Vec::new()
        }
    }
}

fn pfa_warnings(radius: f64, separation: f64) -> Vec<Warning> {
    if radius < 100.0 * separation {
        vec![Warning::ProximityForceRegime { radius, separation }]
    } else {
        Vec::new()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePlaneGeometry {
    radius: f64,
    separation: f64,
}

impl SpherePlaneGeometry {
    pub fn new(radius: f64, separation: f64) -> Result<Self> {
        require_positive("radius", radius)?;
        require_positive("separation", separation)?;
        Ok(Self { radius, separation })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn warnings(&self) -> Vec<Warning> {
        pfa_warnings(self.radius, self.separation)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossedCylindersGeometry {
    radius1: f64,
    radius2: f64,
    separation: f64,
}

impl CrossedCylindersGeometry {
    pub fn new(radius1: f64, radius2: f64, separation: f64) -> Result<Self> {
        require_positive("radius1", radius1)?;
        require_positive("radius2", radius2)?;
        require_positive("separation", separation)?;
        Ok(Self {
            radius1,
            radius2,
            separation,
        })
    }

    pub fn radii(&self) -> (f64, f64) {
        (self.radius1, self.radius2)
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    /// Geometric mean of the two radii.
    pub fn effective_radius(&self) -> f64 {
        (self.radius1 * self.radius2).sqrt()
    }

    pub fn warnings(&self) -> Vec<Warning> {
        pfa_warnings(self.effective_radius(), self.separation)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ThermalState {
    temperature: f64,
}

impl ThermalState {
    pub const ZERO: ThermalState = ThermalState { temperature: 0.0 };

    pub fn new(temperature: f64) -> Result<Self> {
        if temperature.is_finite() && temperature >= 0.0 {
            Ok(Self { temperature })
        } else {
            Err(CasimirError::invalid(
                "temperature",
                temperature,
                "must be non-negative and finite",
            ))
        }
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn is_zero(&self) -> bool {
        self.temperature == 0.0
    }

    /// hbar c / (k_B T); infinite at T = 0.
    pub fn thermal_wavelength(&self) -> f64 {
        if self.is_zero() {
            f64::INFINITY
        } else {
            HBAR * C / (K_B * self.temperature)
        }
    }

    /// Spacing of the Matsubara frequencies, 2 pi k_B T / hbar.
    pub fn matsubara_spacing(&self) -> f64 {
        2.0 * PI * K_B * self.temperature / HBAR
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarization {
    TE,
    TM,
}

impl Polarization {
    pub const BOTH: [Polarization; 2] = [Polarization::TE, Polarization::TM];
}

/// hbar c pi^2 A / (240 L^4).
pub fn ideal_casimir_force(geom: &PlanePlaneGeometry) -> f64 {
    let l = geom.separation;
    HBAR * C * PI * PI * geom.area / (240.0 * l * l * l * l)
}

/// hbar c pi^2 A / (720 L^3).
pub fn ideal_casimir_energy(geom: &PlanePlaneGeometry) -> f64 {
    let l = geom.separation;
    HBAR * C * PI * PI * geom.area / (720.0 * l * l * l)
}

/// 2 pi c / omega_P.
pub fn plasma_wavelength(omega_p: f64) -> Result<f64> {
    require_positive("plasma frequency", omega_p)?;
    Ok(2.0 * PI * C / omega_p)
}

/// Inverse of [`plasma_wavelength`].
pub fn plasma_frequency(lambda_p: f64) -> Result<f64> {
    require_positive("plasma wavelength", lambda_p)?;
    Ok(2.0 * PI * C / lambda_p)
}
