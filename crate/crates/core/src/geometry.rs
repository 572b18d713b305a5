//! Proximity force (Deriagin) mapping onto curved geometries, and roughness
//! averaging over local plate separations.

use std::f64::consts::PI;

use crate::domain::{
    constants::{C, HBAR},
    CrossedCylindersGeometry, PlanePlaneGeometry, SpherePlaneGeometry, ThermalState, Warning,
};
use crate::engine::{energy_plane_plane, CavityConfig, ForceResult, MirrorPair, Quantity};
use crate::error::{CasimirError, Result};
use crate::quadrature::{gauss_legendre, QuadratureConfig};

/// Gauss-Legendre nodes used for the truncated Gaussian average.
const GAUSSIAN_NODES: usize = 64;
/// Gaussian profiles are truncated at this many standard deviations.
const GAUSSIAN_TRUNCATION: f64 = 4.0;

/// `hbar c pi^3 R / (360 L^3)`: sphere-plane force for perfect mirrors at T = 0.
pub fn ideal_sphere_plane_force(radius: f64, separation: f64) -> f64 {
    HBAR * C * PI.powi(3) * radius / (360.0 * separation.powi(3))
}

/// `F = (2 pi R / A) E_plane-plane(L)`, so the reduction factor is `eta_E`.
pub fn force_sphere_plane(
    geom: &SpherePlaneGeometry,
    mirrors: &MirrorPair,
    thermal: ThermalState,
    cfg: &QuadratureConfig,
) -> Result<ForceResult> {
    let plates = PlanePlaneGeometry::new(1.0, geom.separation())?;
    let cav = CavityConfig::new(mirrors.clone(), plates, thermal);
    let energy = energy_plane_plane(&cav, cfg)?;
    let scale = 2.0 * PI * geom.radius() / plates.area();
    let mut warnings = geom.warnings();
    warnings.extend(energy.warnings);
    Ok(ForceResult {
        quantity: Quantity::Force,
        value: scale * energy.value,
        error_estimate: scale * energy.error_estimate,
        reduction_factor: energy.reduction_factor,
        warnings,
    })
}

/// Perpendicular crossed cylinders as a sphere of radius `sqrt(R1 R2)`.
pub fn force_crossed_cylinders(
    geom: &CrossedCylindersGeometry,
    mirrors: &MirrorPair,
    thermal: ThermalState,
    cfg: &QuadratureConfig,
) -> Result<ForceResult> {
    let sphere = SpherePlaneGeometry::new(geom.effective_radius(), geom.separation())?;
    let mut r = force_sphere_plane(&sphere, mirrors, thermal, cfg)?;
    r.warnings.push(Warning::CrossedCylinderEffectiveRadius);
    Ok(r)
}

/// Distribution of local separation offsets `h` (plates at `L + h`).
#[derive(Debug, Clone, PartialEq)]
pub enum RoughnessProfile {
    /// Normal distribution with standard deviation `rms`, truncated at +-4 rms.
    Gaussian { rms: f64 },
    /// Offsets with weights summing to one.
    Discrete(Vec<(f64, f64)>),
}

impl RoughnessProfile {
    pub fn gaussian(rms: f64) -> Result<Self> {
        if !(rms >= 0.0 && rms.is_finite()) {
            return Err(CasimirError::Roughness(format!("rms amplitude {rms} must be non-negative")));
        }
        Ok(RoughnessProfile::Gaussian { rms })
    }

    /// Weights must be positive and sum to one within 1e-12.
    pub fn discrete(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(CasimirError::Roughness("no offsets given".into()));
        }
        let mut total = 0.0;
        for &(h, w) in &points {
            if !h.is_finite() {
                return Err(CasimirError::Roughness(format!("offset {h} is not finite")));
            }
            if !(w > 0.0 && w.is_finite()) {
                return Err(CasimirError::Roughness(format!("weight {w} must be positive")));
            }
            total += w;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(CasimirError::Roughness(format!("weights sum to {total}, not 1")));
        }
        Ok(RoughnessProfile::Discrete(points))
    }

    /// Like [`RoughnessProfile::discrete`] but rescales the weights first.
    pub fn discrete_normalized(points: Vec<(f64, f64)>) -> Result<Self> {
        let total: f64 = points.iter().map(|p| p.1).sum();
        if !(total > 0.0 && total.is_finite()) {
            return Err(CasimirError::Roughness(format!("weights sum to {total}")));
        }
        let scaled = points.into_iter().map(|(h, w)| (h, w / total)).collect();
        Self::discrete(scaled)
    }

    /// Symmetric two-point profile `{-a, +a}` with equal weights.
    pub fn two_point(amplitude: f64) -> Result<Self> {
        Self::discrete(vec![(-amplitude, 0.5), (amplitude, 0.5)])
    }

    /// Check the profile can be applied at separation `l`.
    pub fn validate_at(&self, l: f64) -> Result<()> {
        match self {
            RoughnessProfile::Gaussian { rms } => {
                if *rms >= l / 5.0 {
                    return Err(CasimirError::Roughness(format!(
                        "rms amplitude {rms:e} m must be below L/5 = {:e} m",
                        l / 5.0
                    )));
                }
            }
            RoughnessProfile::Discrete(points) => {
                if let Some(&(h, _)) = points.iter().find(|(h, _)| l + h <= 0.0) {
                    return Err(CasimirError::Roughness(format!(
                        "offset {h:e} m closes the gap at L = {l:e} m"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Quadrature offsets and weights.
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        match self {
            RoughnessProfile::Discrete(points) => points.clone(),
            RoughnessProfile::Gaussian { rms } if *rms == 0.0 => vec![(0.0, 1.0)],
            RoughnessProfile::Gaussian { rms } => {
                let (x, w) = gauss_legendre(GAUSSIAN_NODES);
                let half_width = GAUSSIAN_TRUNCATION * rms;
                let raw: Vec<(f64, f64)> = x
                    .iter()
                    .zip(&w)
                    .map(|(&x, &w)| (x * half_width, w * (-0.5 * (x * GAUSSIAN_TRUNCATION).powi(2)).exp()))
                    .collect();
                let norm: f64 = raw.iter().map(|p| p.1).sum();
                raw.into_iter().map(|(h, w)| (h, w / norm)).collect()
            }
        }
    }
}

/// Deriagin roughness average `sum_i w_i F(L + h_i)`.
///
/// `base` evaluates the unperturbed quantity at a separation. The reduction
/// factor is taken relative to the ideal value at `l`.
pub fn roughness_average(
    base: impl Fn(f64) -> Result<ForceResult>,
    profile: &RoughnessProfile,
    l: f64,
) -> Result<ForceResult> {
    if !(l > 0.0 && l.is_finite()) {
        return Err(CasimirError::invalid("separation", l, "must be positive and finite"));
    }
    profile.validate_at(l)?;
    let nodes = profile.nodes();
    let mut value = 0.0;
    let mut error = 0.0;
    let mut warnings: Vec<Warning> = Vec::new();
    let mut ideal_at_l = None;
    let mut quantity = Quantity::Force;
    for &(h, w) in &nodes {
        let r = base(l + h)?;
        value += w * r.value;
        error += w * r.error_estimate;
        quantity = r.quantity;
        if h == 0.0 {
            ideal_at_l = Some(r.value / r.reduction_factor);
        }
        for warning in r.warnings {
            if !warnings.contains(&warning) {
                warnings.push(warning);
            }
        }
    }
    let ideal = match ideal_at_l {
        Some(v) => v,
        None => {
            let r = base(l)?;
            r.value / r.reduction_factor
        }
    };
    warnings.push(Warning::RoughnessLongWavelength);
    Ok(ForceResult {
        quantity,
        value,
        error_estimate: error,
        reduction_factor: value / ideal,
        warnings,
    })
}
