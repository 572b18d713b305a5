//! Engine against a fixed-grid trapezoid evaluation of the plane-plane
//! integrals with plasma mirrors. The grid code shares nothing with the
//! library beyond the physical constants.

use casimir_core::constants::{C, HBAR};
use casimir_core::*;
use std::f64::consts::PI;

const NODES: usize = 2000;

/// Log-spaced nodes on [lo, hi] with trapezoid weights for `dx`.
fn log_rule(lo: f64, hi: f64, n: usize) -> Vec<(f64, f64)> {
    let h = (hi / lo).ln() / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let x = lo * (h * i as f64).exp();
            let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            (x, w * h * x)
        })
        .collect()
}

/// Squared plasma-mirror amplitudes (TE, TM) at imaginary frequency `xi`.
fn plasma_rr(omega_p: f64, xi: f64, kappa: f64) -> [f64; 2] {
    let kp = omega_p / C;
    let km = (kappa * kappa + kp * kp).sqrt();
    let eps = 1.0 + (omega_p / xi).powi(2);
    let te = (kappa - km) / (kappa + km);
    let tm = (eps * kappa - km) / (eps * kappa + km);
    [te * te, tm * tm]
}

/// (force, energy) per unit area. Variables: x = 2 L xi / c, y = 2 L (kappa - xi / c).
fn trapezoid(omega_p: f64, l: f64) -> (f64, f64) {
    let rule = log_rule(1e-8, 90.0, NODES);
    let jac = C / (4.0 * l * l);
    let (mut force, mut energy) = (0.0, 0.0);
    for &(x, wx) in &rule {
        let xi = x * C / (2.0 * l);
        let (mut fi, mut ei) = (0.0, 0.0);
        for &(y, wy) in &rule {
            let kappa = (x + y) / (2.0 * l);
            let decay = (-2.0 * kappa * l).exp();
            for r in plasma_rr(omega_p, xi, kappa) {
                fi += wy * kappa * kappa * r * decay / (1.0 - r * decay);
                ei += wy * kappa * (-(r * decay)).ln_1p();
            }
        }
        force += wx * fi;
        energy += wx * ei;
    }
    (
        HBAR / (2.0 * PI * PI) * jac * force,
        -HBAR / (4.0 * PI * PI) * jac * energy,
    )
}

fn gold(l: f64) -> CavityConfig {
    let m = MirrorModel::plasma_from_wavelength(136e-9).unwrap();
    CavityConfig::new(
        MirrorPair::identical(m),
        PlanePlaneGeometry::new(1.0, l).unwrap(),
        ThermalState::ZERO,
    )
}

#[test]
fn force_matches_trapezoid_grid() {
    let cfg = QuadratureConfig::default();
    let wp = plasma_frequency(136e-9).unwrap();
    for l in [0.1e-6, 0.5e-6, 2e-6] {
        let (grid, _) = trapezoid(wp, l);
        let f = force_plane_plane_t0(&gold(l), &cfg).unwrap();
        let rel = (f.value / grid - 1.0).abs();
        assert!(rel < 1e-4, "L = {l}: engine {} grid {grid} rel {rel:e}", f.value);
    }
}

#[test]
fn energy_matches_trapezoid_grid() {
    let cfg = QuadratureConfig::default();
    let wp = plasma_frequency(136e-9).unwrap();
    let l = 0.1e-6;
    let (gf, ge) = trapezoid(wp, l);
    let e = energy_plane_plane_t0(&gold(l), &cfg).unwrap();
    assert!((e.value / ge - 1.0).abs() < 1e-4, "{} vs {ge}", e.value);
    let geom = PlanePlaneGeometry::new(1.0, l).unwrap();
    let eta_f = gf / ideal_casimir_force(&geom);
    let eta_e = ge / ideal_casimir_energy(&geom);
    // the grid itself orders the two factors
    assert!(eta_f < eta_e && eta_e < 1.0, "{eta_f} {eta_e}");
    assert!((e.reduction_factor - eta_e).abs() < 1e-4);
}

#[test]
fn large_distance_approaches_ideal() {
    let cfg = QuadratureConfig::default();
    let wp = plasma_frequency(136e-9).unwrap();
    let l = 10e-6;
    let (grid, _) = trapezoid(wp, l);
    let eta_grid = grid / ideal_casimir_force(&PlanePlaneGeometry::new(1.0, l).unwrap());
    let eta = eta_f(&gold(l), &cfg).unwrap();
    assert!((0.95..=1.0).contains(&eta_grid));
    assert!((eta - eta_grid).abs() < 1e-4, "{eta} vs {eta_grid}");
}
