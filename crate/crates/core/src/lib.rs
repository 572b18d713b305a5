//! Casimir force and energy between real mirrors.
//!
//! The crate evaluates the Lifshitz-type imaginary-frequency integral for a pair
//! of bulk mirrors described by a dielectric response, at zero or finite
//! temperature, and maps plane-plane results onto curved geometries with the
//! proximity force (Deriagin) approximation.
//!
//! Module map:
//! - [`domain`]: constants, geometries, thermal state and the ideal Casimir values.
//! - [`optics`]: dielectric models, Fresnel amplitudes, Kramers-Kronig continuation.
//! - [`quadrature`]: adaptive Gauss-Kronrod integration and Matsubara sums.
//! - [`engine`]: plane-plane force/energy and the reduction/correlation factors.
//! - [`geometry`]: sphere-plane, crossed cylinders and roughness averaging.

pub mod domain;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod optics;
pub mod quadrature;

pub use domain::{
    constants, ideal_casimir_energy, ideal_casimir_force, plasma_frequency, plasma_wavelength,
    CrossedCylindersGeometry, PlanePlaneGeometry, Polarization, SpherePlaneGeometry,
    ThermalState, Warning,
};
pub use engine::{
    correction_factors, energy_plane_plane, energy_plane_plane_t0, eta_e, eta_f,
    force_plane_plane, force_plane_plane_finite_t, force_plane_plane_t0, CavityConfig,
    CorrectionFactors, ForceResult, MirrorPair, Quantity, ZeroFrequencyPrescription,
};
pub use error::{CasimirError, Result};
pub use geometry::{force_crossed_cylinders, force_sphere_plane, roughness_average, RoughnessProfile};
pub use optics::{MirrorModel, OpticalDataTable};
pub use quadrature::{NumericResult, QuadratureConfig};
