use crate::domain::{constants::C, Polarization};
use crate::error::{CasimirError, Result};

/// Optical response of one mirror at a fixed imaginary frequency.
///
/// Amplitudes are evaluated from `kappa = sqrt(k^2 + xi^2/c^2)` so the engine
/// can integrate over `kappa` directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfaceResponse {
    Perfect,
    /// Bulk dielectric with susceptibility `chi = eps - 1` at wavenumber `q = xi / c`.
    Dielectric { chi: f64, q: f64 },
    /// Zero frequency. TE uses the plasma-model limit when a plasma wavenumber
    /// `omega_p / c` is given and vanishes otherwise; TM is `+1`.
    Static { te_wavenumber: Option<f64> },
}

impl SurfaceResponse {
    pub fn dielectric(chi: f64, q: f64) -> Self {
        if chi.is_infinite() {
            SurfaceResponse::Perfect
        } else {
            SurfaceResponse::Dielectric { chi, q }
        }
    }

    /// Reflection amplitude at `kappa >= xi / c`.
    ///
    /// TE lies in `[-1, 0]` and TM in `[0, 1]`.
    pub fn amplitude(&self, kappa: f64, pol: Polarization) -> f64 {
        match *self {
            SurfaceResponse::Perfect => match pol {
                Polarization::TE => -1.0,
                Polarization::TM => 1.0,
            },
            SurfaceResponse::Static { te_wavenumber } => match pol {
                Polarization::TE => match te_wavenumber {
                    Some(kp) => {
                        let s = (kappa * kappa + kp * kp).sqrt() + kappa;
                        -(kp * kp) / (s * s)
                    }
                    None => 0.0,
                },
                Polarization::TM => 1.0,
            },
            SurfaceResponse::Dielectric { chi, q } => {
                // medium wavenumber sqrt(k^2 + eps q^2) = sqrt(kappa^2 + chi q^2)
                let q2chi = q * q * chi;
                let medium = (kappa * kappa + q2chi).sqrt();
                match pol {
                    Polarization::TE => {
                        let s = medium + kappa;
                        -q2chi / (s * s)
                    }
                    Polarization::TM => {
                        let eps = 1.0 + chi;
                        if chi < 1.0 {
                            // (eps kappa)^2 - medium^2 = chi (kappa^2 (eps + 1) - q^2)
                            let s = eps * kappa + medium;
                            chi * (kappa * kappa * (eps + 1.0) - q * q) / (s * s)
                        } else {
                            (eps * kappa - medium) / (eps * kappa + medium)
                        }
                    }
                }
            }
        }
    }
}

/// Fresnel amplitude of a bulk mirror with `eps = eps(i xi)` for transverse
/// wavevector `k`.
///
/// `eps = +inf` gives the perfect-reflector values `-1` (TE) and `+1` (TM).
pub fn fresnel_reflection(eps: f64, xi: f64, k: f64, pol: Polarization) -> Result<f64> {
    if eps.is_nan() || eps < 1.0 {
        return Err(CasimirError::invalid(
            "permittivity",
            eps,
            "must be at least 1 on the imaginary axis",
        ));
    }
    if !(xi >= 0.0 && k >= 0.0) || !xi.is_finite() || !k.is_finite() {
        return Err(CasimirError::invalid(
            "frequency/wavevector",
            if xi >= 0.0 { k } else { xi },
            "must be finite and non-negative",
        ));
    }
    if xi == 0.0 && k == 0.0 {
        return Err(CasimirError::invalid(
            "frequency/wavevector",
            0.0,
            "xi and k cannot both vanish",
        ));
    }
    let q = xi / C;
    let kappa = (k * k + q * q).sqrt();
    Ok(SurfaceResponse::dielectric(eps - 1.0, q).amplitude(kappa, pol))
}
