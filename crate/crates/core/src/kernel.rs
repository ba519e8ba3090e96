//! Nonlinear response kernels of the medium.
//!
//! All arguments are in normalised time `θ = t/τ_r` or normalised frequency
//! `Ω = ωτ_r`; conversion from dimensional quantities happens at the call
//! site through [`ResponseKernel::tau_r`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelVariant {
    /// Debye relaxation, `h̃(θ) = e^{−|θ|}`.
    Exponential,
    /// `h̃(θ) = e^{−θ²/2}`; only used for the photon-spectrum correlator.
    Gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResponseKernel {
    variant: KernelVariant,
    tau_r: f64,
}

impl ResponseKernel {
    pub fn new(variant: KernelVariant, tau_r: f64) -> Result<Self> {
        if !(tau_r > 0.0 && tau_r.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "tau_r",
                value: tau_r,
                reason: "relaxation time must be positive and finite",
            });
        }
        Ok(ResponseKernel { variant, tau_r })
    }

    pub fn exponential(tau_r: f64) -> Result<Self> {
        Self::new(KernelVariant::Exponential, tau_r)
    }

    pub fn gaussian(tau_r: f64) -> Result<Self> {
        Self::new(KernelVariant::Gaussian, tau_r)
    }

    pub fn variant(&self) -> KernelVariant {
        self.variant
    }

    pub fn tau_r(&self) -> f64 {
        self.tau_r
    }

    /// Normalised response `h̃(θ)`: even, peak 1 at θ = 0.
    pub fn h_tilde(&self, theta: f64) -> f64 {
        match self.variant {
            KernelVariant::Exponential => (-theta.abs()).exp(),
            KernelVariant::Gaussian => (-0.5 * theta * theta).exp(),
        }
    }

    /// Dimensional two-sided response `h(τ) = h̃(τ/τ_r)/τ_r`.
    pub fn h(&self, tau: f64) -> f64 {
        self.h_tilde(tau / self.tau_r) / self.tau_r
    }

    /// Autocorrelation `g(τ) = τ_r⁻¹ ∫ h̃(θ) h̃(θ + τ/τ_r) dθ`, in inverse time.
    ///
    /// For the exponential kernel this is `(1 + |τ|/τ_r) e^{−|τ|/τ_r} / τ_r`.
    pub fn autocorr_g(&self, tau: f64) -> Result<f64> {
        self.require_exponential("autocorr_g")?;
        let s = (tau / self.tau_r).abs();
        Ok((1.0 + s) * (-s).exp() / self.tau_r)
    }

    /// `∫ g(τ) e^{iωτ} dτ = 4 L²(Ω)` for the exponential kernel.
    pub fn ft_g(&self, omega_norm: f64) -> Result<f64> {
        self.require_exponential("ft_g")?;
        Ok(ft_g(omega_norm))
    }

    /// `∫₀^∞ h̃(θ) dθ`.
    pub fn one_sided_area(&self) -> f64 {
        match self.variant {
            KernelVariant::Exponential => 1.0,
            KernelVariant::Gaussian => (std::f64::consts::PI / 2.0).sqrt(),
        }
    }

    /// `∫₀^∞ h̃²(θ) dθ`.
    pub fn one_sided_square_area(&self) -> f64 {
        match self.variant {
            KernelVariant::Exponential => 0.5,
            KernelVariant::Gaussian => std::f64::consts::PI.sqrt() / 2.0,
        }
    }

    pub(crate) fn require_exponential(&self, operation: &'static str) -> Result<()> {
        match self.variant {
            KernelVariant::Exponential => Ok(()),
            variant => Err(Error::UnsupportedKernel { operation, variant }),
        }
    }
}

/// Lorentzian factor `L(Ω) = 1/(1 + Ω²)`; the exponential kernel transforms
/// as `∫ h(τ) e^{iωτ} dτ = 2L(ωτ_r)`.
pub fn lorentzian_l(omega_norm: f64) -> f64 {
    1.0 / (1.0 + omega_norm * omega_norm)
}

/// `4 L²(Ω)`.
pub fn ft_g(omega_norm: f64) -> f64 {
    let l = lorentzian_l(omega_norm);
    4.0 * l * l
}
