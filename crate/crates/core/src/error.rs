use thiserror::Error;

use crate::kernel::KernelVariant;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{operation} is only defined for the exponential kernel (got {variant:?})")]
    UnsupportedKernel {
        operation: &'static str,
        variant: KernelVariant,
    },

    #[error("{operation} requires the slow-envelope regime nu > 1 (nu = {nu})")]
    RegimeViolation { operation: &'static str, nu: f64 },

    #[error(
        "quadrature did not converge: estimate {value:e}, error bound {error_bound:e} \
         after {subdivisions} subdivisions"
    )]
    QuadratureNonconvergence {
        value: f64,
        error_bound: f64,
        subdivisions: usize,
    },

    #[error("no admissible root with L in (0, 1] for psi = {psi}")]
    NoRootInRange { psi: f64 },

    #[error("Fock cutoff {cutoff} too small for mean photon number {n_bar} (need >= {required})")]
    CutoffTooSmall { cutoff: usize, n_bar: f64, required: usize },

    #[error("correlation samples do not decay within the truncation radius (|R| = {edge:e} at the edge)")]
    TruncationTooSmall { edge: f64 },

    #[error("unknown validation case `{id}`")]
    UnknownCase { id: String },
}
