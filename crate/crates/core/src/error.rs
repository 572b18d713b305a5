use thiserror::Error;

pub type Result<T> = std::result::Result<T, CasimirError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CasimirError {
    #[error("invalid {what}: {value} ({reason})")]
    InvalidParameter {
        what: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("dielectric function diverges at xi = {xi} rad/s")]
    Diverges { xi: f64 },

    #[error("{context} did not converge: {detail}")]
    NonConvergence { context: &'static str, detail: String },

    #[error("inconsistent reflection amplitudes: r1*r2 = {product} >= exp(2*kappa*L) = {propagation}")]
    InconsistentAmplitude { product: f64, propagation: f64 },

    #[error("optical data, row {row}: {message}")]
    OpticalData { row: usize, message: String },

    #[error("invalid roughness profile: {0}")]
    Roughness(String),
}

impl CasimirError {
    pub(crate) fn invalid(what: &'static str, value: f64, reason: &'static str) -> Self {
        CasimirError::InvalidParameter { what, value, reason }
    }

    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            CasimirError::NonConvergence { .. } | CasimirError::InconsistentAmplitude { .. }
        )
    }
}
