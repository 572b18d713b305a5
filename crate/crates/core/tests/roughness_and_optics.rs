use casimir_core::optics::{ImaginaryAxisTable, TabulatedResponse};
use casimir_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn ideal_plate(l: f64) -> Result<ForceResult> {
    let g = PlanePlaneGeometry::new(1.0, l)?;
    Ok(ForceResult {
        quantity: Quantity::Force,
        value: ideal_casimir_force(&g),
        error_estimate: 0.0,
        reduction_factor: 1.0,
        warnings: Vec::new(),
    })
}

/// Standard normal by Box-Muller, rejected outside 4 sigma.
fn truncated_normal(rng: &mut ChaCha20Rng) -> f64 {
    loop {
        let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
        let v: f64 = rng.gen();
        let z = (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * v).cos();
        if z.abs() <= 4.0 {
            return z;
        }
    }
}

#[test]
fn gaussian_roughness_against_monte_carlo() {
    let l = 1e-7;
    for rms in [2e-9, 5e-9, 1.5e-8] {
        let r = roughness_average(ideal_plate, &RoughnessProfile::gaussian(rms).unwrap(), l).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(0x5eed);
        let n = 100_000;
        let (mut sum, mut sum2) = (0.0, 0.0);
        for _ in 0..n {
            let z = truncated_normal(&mut rng) * rms / l;
            // antithetic pair
            let x = 0.5 * ((1.0 + z).powi(-4) + (1.0 - z).powi(-4));
            sum += x;
            sum2 += x * x;
        }
        let mean = sum / n as f64;
        let std_err = ((sum2 / n as f64 - mean * mean) / n as f64).sqrt();
        assert!(
            (r.reduction_factor - mean).abs() < 5.0 * std_err,
            "rms {rms}: {} vs {mean} +- {std_err}",
            r.reduction_factor
        );
        assert!(r.reduction_factor > 1.0);
    }
}

#[test]
fn symmetric_profiles_on_real_mirrors_increase_the_force() {
    let cfg = QuadratureConfig::default();
    let mirrors = MirrorPair::identical(MirrorModel::plasma_from_wavelength(136e-9).unwrap());
    let base = |x: f64| {
        force_plane_plane_t0(
            &CavityConfig::new(mirrors.clone(), PlanePlaneGeometry::new(1.0, x)?, ThermalState::ZERO),
            &cfg,
        )
    };
    let l = 0.2e-6;
    let flat = base(l).unwrap();
    for profile in [
        RoughnessProfile::two_point(0.1 * l).unwrap(),
        RoughnessProfile::gaussian(0.05 * l).unwrap(),
        RoughnessProfile::discrete(vec![(-0.2 * l, 0.25), (0.0, 0.5), (0.2 * l, 0.25)]).unwrap(),
    ] {
        let rough = roughness_average(base, &profile, l).unwrap();
        assert!(rough.value > flat.value);
        assert!(rough.warnings.contains(&Warning::RoughnessLongWavelength));
    }
}

fn drude_absorption(omega_p: f64, gamma: f64, w: f64) -> f64 {
    omega_p * omega_p * gamma / (w * (w * w + gamma * gamma))
}

#[test]
fn kramers_kronig_round_trip_over_four_decades() {
    let (wp, gamma) = (1.37e16, 5.32e13);
    let n = 600;
    let rows: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let w = 1e10 * 1e10f64.powf(i as f64 / (n - 1) as f64);
            (w, drude_absorption(wp, gamma, w))
        })
        .collect();
    let mut csv = String::from("# synthetic Drude metal\nomega_rad_s,eps_imag\n");
    for (w, e) in &rows {
        csv.push_str(&format!("{w:e},{e:e}\n"));
    }
    let table = OpticalDataTable::from_csv_str(&csv, wp, gamma).unwrap();
    let model = MirrorModel::tabulated(TabulatedResponse::KramersKronig(table));
    let cfg = QuadratureConfig::default();
    let mut samples = Vec::new();
    for i in 0..=40 {
        let xi = 1e13 * 1e4f64.powf(i as f64 / 40.0);
        let analytic = 1.0 + wp * wp / (xi * (xi + gamma));
        let eps = model.epsilon_imaginary_axis_with(xi, &cfg).unwrap();
        assert!((eps / analytic - 1.0).abs() < 1e-3, "xi {xi:e}: {eps} vs {analytic}");
        samples.push((xi, eps));
    }
    // stored on the imaginary axis and read back
    let stored = ImaginaryAxisTable::new(&samples, wp, gamma).unwrap();
    let back = ImaginaryAxisTable::from_csv_str(&stored.to_csv_string(), None).unwrap();
    for ((x0, e0), (x1, e1)) in samples.iter().zip(back.samples()) {
        assert!((x0 / x1 - 1.0).abs() < 1e-12);
        assert!((e0 / e1 - 1.0).abs() < 1e-12);
    }
}

#[test]
fn tabulated_gold_close_to_plasma_at_large_distance() {
    let wp = plasma_frequency(136e-9).unwrap();
    let gamma = 5.32e13;
    let rows: Vec<(f64, f64)> = (0..400)
        .map(|i| {
            let w = 1e11 * 1e8f64.powf(i as f64 / 399.0);
            (w, drude_absorption(wp, gamma, w))
        })
        .collect();
    let table = OpticalDataTable::new(&rows, wp, gamma).unwrap();
    let tabulated = MirrorModel::tabulated(TabulatedResponse::KramersKronig(table));
    let cfg = QuadratureConfig { rel_tol: 1e-6, ..QuadratureConfig::default() };
    let eta = |m: MirrorModel, l: f64| {
        eta_f(
            &CavityConfig::new(MirrorPair::identical(m), PlanePlaneGeometry::new(1.0, l).unwrap(), ThermalState::ZERO),
            &cfg,
        )
        .unwrap()
    };
    let drude = MirrorModel::drude(wp, gamma).unwrap();
    for l in [0.1e-6, 1e-6] {
        let t = eta(tabulated.clone(), l);
        let d = eta(drude.clone(), l);
        assert!((t / d - 1.0).abs() < 2e-3, "L = {l}: {t} vs {d}");
        assert!(t < eta(MirrorModel::plasma(wp).unwrap(), l));
    }
}
