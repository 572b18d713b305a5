//! Optical response of bulk mirrors on the imaginary frequency axis.
//!
//! Mirrors are described by a dielectric function continued to `omega = i xi`,
//! where it is real and at least one. Reflection amplitudes follow from the
//! Fresnel formulas; everything works in wavenumber units (`xi / c`, rad/m).

mod fresnel;
mod kramers_kronig;

use std::sync::Arc;

pub use fresnel::{fresnel_reflection, SurfaceResponse};
pub use kramers_kronig::{
    ImaginaryAxisTable, KramersKronigBreakdown, OpticalDataTable, TabulatedResponse,
    IMAGINARY_AXIS_HEADER,
};

use crate::domain::{constants::C, plasma_frequency, Warning};
use crate::error::{CasimirError, Result};
use crate::quadrature::QuadratureConfig;

/// Which limit is used for the TE amplitude of metals at zero frequency.
///
/// `Plasma` takes the plasma-model limit with the mirror's plasma frequency;
/// `Drude` takes `r_TE(0, k) = 0`. TM is `+1` in both cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroFrequencyPrescription {
    #[default]
    Plasma,
    Drude,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MirrorModel {
    PerfectReflector,
    /// `eps(i xi) = 1 + omega_p^2 / xi^2`
    Plasma { omega_p: f64 },
    /// `eps(i xi) = 1 + omega_p^2 / (xi (xi + gamma))`
    Drude { omega_p: f64, gamma: f64 },
    Tabulated(Arc<TabulatedResponse>),
}

impl MirrorModel {
    pub fn plasma(omega_p: f64) -> Result<Self> {
        let m = MirrorModel::Plasma { omega_p };
        m.validate()?;
        Ok(m)
    }

    pub fn plasma_from_wavelength(lambda_p: f64) -> Result<Self> {
        Self::plasma(plasma_frequency(lambda_p)?)
    }

    pub fn drude(omega_p: f64, gamma: f64) -> Result<Self> {
        let m = MirrorModel::Drude { omega_p, gamma };
        m.validate()?;
        Ok(m)
    }

    pub fn tabulated(response: TabulatedResponse) -> Self {
        MirrorModel::Tabulated(Arc::new(response))
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |what, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(CasimirError::invalid(what, v, "must be positive and finite"))
            }
        };
        match *self {
            MirrorModel::PerfectReflector | MirrorModel::Tabulated(_) => Ok(()),
            MirrorModel::Plasma { omega_p } => positive("plasma frequency", omega_p),
            MirrorModel::Drude { omega_p, gamma } => {
                positive("plasma frequency", omega_p)?;
                positive("relaxation rate", gamma)
            }
        }
    }

    pub fn warnings(&self) -> Vec<Warning> {
        let (omega_p, gamma) = match self {
            MirrorModel::Drude { omega_p, gamma } => (*omega_p, *gamma),
            MirrorModel::Tabulated(t) => (t.omega_p(), t.gamma()),
            _ => return Vec::new(),
        };
        if gamma > 0.1 * omega_p {
            vec![Warning::LargeRelaxation { omega_p, gamma }]
        } else {
            Vec::new()
        }
    }

    pub fn is_perfect(&self) -> bool {
        matches!(self, MirrorModel::PerfectReflector)
    }

    /// Plasma frequency used for the zero-frequency TE limit.
    pub fn plasma_frequency(&self) -> Option<f64> {
        match self {
            MirrorModel::PerfectReflector => None,
            MirrorModel::Plasma { omega_p } | MirrorModel::Drude { omega_p, .. } => Some(*omega_p),
            MirrorModel::Tabulated(t) => Some(t.omega_p()),
        }
    }

    /// `eps(i xi) - 1`; infinite for the perfect reflector.
    pub fn susceptibility(&self, xi: f64, cfg: &QuadratureConfig) -> Result<f64> {
        if xi.is_nan() || xi <= 0.0 || !xi.is_finite() {
            return Err(CasimirError::Diverges { xi });
        }
        match self {
            MirrorModel::PerfectReflector => Ok(f64::INFINITY),
            MirrorModel::Plasma { omega_p } => Ok((omega_p / xi) * (omega_p / xi)),
            MirrorModel::Drude { omega_p, gamma } => Ok(omega_p * omega_p / (xi * (xi + gamma))),
            MirrorModel::Tabulated(t) => Ok(t.epsilon(xi, cfg)? - 1.0),
        }
    }

    /// Dielectric function at `omega = i xi`. The perfect reflector reports
    /// `f64::INFINITY`; `xi <= 0` is reported as [`CasimirError::Diverges`].
    pub fn epsilon_imaginary_axis(&self, xi: f64) -> Result<f64> {
        self.epsilon_imaginary_axis_with(xi, &QuadratureConfig::default())
    }

    pub fn epsilon_imaginary_axis_with(&self, xi: f64, cfg: &QuadratureConfig) -> Result<f64> {
        Ok(1.0 + self.susceptibility(xi, cfg)?)
    }

    /// Everything the Fresnel amplitudes need at one imaginary frequency.
    pub fn response_at(
        &self,
        xi: f64,
        prescription: ZeroFrequencyPrescription,
        cfg: &QuadratureConfig,
    ) -> Result<SurfaceResponse> {
        if self.is_perfect() {
            return Ok(SurfaceResponse::Perfect);
        }
        if xi == 0.0 {
            let te_wavenumber = match prescription {
                ZeroFrequencyPrescription::Plasma => self.plasma_frequency().map(|w| w / C),
                ZeroFrequencyPrescription::Drude => None,
            };
            return Ok(SurfaceResponse::Static { te_wavenumber });
        }
        let chi = self.susceptibility(xi, cfg)?;
        Ok(SurfaceResponse::dielectric(chi, xi / C))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Polarization;

    fn au() -> f64 {
        plasma_frequency(136e-9).unwrap()
    }

    fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| (lo.ln() + (hi / lo).ln() * i as f64 / (n - 1) as f64).exp())
            .collect()
    }

    #[test]
    fn plasma_at_plasma_frequency() {
        let m = MirrorModel::plasma(au()).unwrap();
        assert!((m.epsilon_imaginary_axis(au()).unwrap() - 2.0).abs() < 1e-15);
        assert!(matches!(m.epsilon_imaginary_axis(0.0), Err(CasimirError::Diverges { .. })));
        assert!(MirrorModel::PerfectReflector.epsilon_imaginary_axis(1.0).unwrap().is_infinite());
    }

    #[test]
    fn drude_tends_to_plasma() {
        let p = MirrorModel::plasma(au()).unwrap();
        let gamma = 1e-12 * au();
        let d = MirrorModel::drude(au(), gamma).unwrap();
        for xi in log_grid(1e11, 1e19, 60) {
            let ep = p.epsilon_imaginary_axis(xi).unwrap();
            let ed = d.epsilon_imaginary_axis(xi).unwrap();
            // (chi_P - chi_D) / chi_P = gamma / (xi + gamma)
            let cfg = QuadratureConfig::default();
            let cp = p.susceptibility(xi, &cfg).unwrap();
            let rel = (cp - d.susceptibility(xi, &cfg).unwrap()) / cp;
            assert!((rel - gamma / (xi + gamma)).abs() < 1e-15, "xi {xi}");
            if xi >= au() {
                assert!(((ep - ed) / ep).abs() < 1e-12, "xi {xi}");
            }
        }
        // sup |eps_D - eps_P| shrinks with gamma
        let grid = log_grid(1e13, 1e18, 40);
        let mut prev = f64::INFINITY;
        for g in [1e-1, 1e-2, 1e-3, 1e-4] {
            let d = MirrorModel::drude(au(), g * au()).unwrap();
            let sup = grid
                .iter()
                .map(|&xi| {
                    let ep = p.epsilon_imaginary_axis(xi).unwrap();
                    ((d.epsilon_imaginary_axis(xi).unwrap() - ep) / ep).abs()
                })
                .fold(0.0, f64::max);
            assert!(sup < prev);
            prev = sup;
        }
    }

    #[test]
    fn monotone_decreasing_above_one() {
        for m in [
            MirrorModel::plasma(au()).unwrap(),
            MirrorModel::drude(au(), 5.3e13).unwrap(),
        ] {
            let mut prev = f64::INFINITY;
            for xi in log_grid(1e12, 1e18, 120) {
                let e = m.epsilon_imaginary_axis(xi).unwrap();
                assert!(e >= 1.0 && e < prev);
                prev = e;
            }
            assert!(m.epsilon_imaginary_axis(1e25).unwrap() - 1.0 < 1e-16);
        }
    }

    #[test]
    fn validation_and_warnings() {
        assert!(MirrorModel::plasma(0.0).is_err());
        assert!(MirrorModel::drude(1e16, -1.0).is_err());
        assert!(MirrorModel::plasma_from_wavelength(-1.0).is_err());
        assert!(MirrorModel::drude(1e16, 1e13).unwrap().warnings().is_empty());
        assert_eq!(MirrorModel::drude(1e16, 2e15).unwrap().warnings().len(), 1);
    }

    #[test]
    fn zero_frequency_limits() {
        let cfg = QuadratureConfig::default();
        let wp = au();
        let k = 3e6;
        let plasma = MirrorModel::plasma(wp).unwrap();
        let drude = MirrorModel::drude(wp, 5.3e13).unwrap();

        let r = plasma.response_at(0.0, ZeroFrequencyPrescription::Plasma, &cfg).unwrap();
        let s = (k * k + (wp / C).powi(2)).sqrt();
        let expected = -(s - k) / (s + k);
        assert!((r.amplitude(k, Polarization::TE) - expected).abs() < 1e-15);
        assert_eq!(r.amplitude(k, Polarization::TM), 1.0);
        assert!(r.amplitude(k, Polarization::TE) < 0.0);

        let r = drude.response_at(0.0, ZeroFrequencyPrescription::Drude, &cfg).unwrap();
        assert_eq!(r.amplitude(k, Polarization::TE), 0.0);
        assert_eq!(r.amplitude(k, Polarization::TM), 1.0);

        // plasma limit is the xi -> 0 limit of the plasma-model amplitude
        let r0 = plasma.response_at(0.0, ZeroFrequencyPrescription::Plasma, &cfg).unwrap();
        let xi = 1e3;
        let kappa = (k * k + (xi / C).powi(2)).sqrt();
        let r1 = plasma.response_at(xi, ZeroFrequencyPrescription::Plasma, &cfg).unwrap();
        assert!((r1.amplitude(kappa, Polarization::TE) - r0.amplitude(k, Polarization::TE)).abs() < 1e-9);

        let perfect = MirrorModel::PerfectReflector
            .response_at(0.0, ZeroFrequencyPrescription::Drude, &cfg)
            .unwrap();
        assert_eq!(perfect.amplitude(k, Polarization::TE), -1.0);
        assert_eq!(perfect.amplitude(k, Polarization::TM), 1.0);
    }
}
