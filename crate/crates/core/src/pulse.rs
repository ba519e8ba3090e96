//! Pulse and medium parameters, the Gaussian envelope, and the self-action
//! functionals `ψ(t)`, `μ(t)` and `K(t₁, t₂)`.
//!
//! Every functional exists in two forms: the exact integral over the response
//! kernel (adaptive quadrature) and the slow-envelope form valid for
//! `ν = τ_p/τ_r ≫ 1`, where the envelope is pulled out of the integral.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{KernelVariant, ResponseKernel};
use crate::quad::{integrate_with_breaks, Tolerances};
use crate::quadspec;

/// Half-width (in units of τ_r) beyond which the exponential kernel is
/// dropped: `e^{−40} ≈ 4e−18`.
pub const KERNEL_TRUNCATION: f64 = 40.0;

/// Above this `ν` the kernel is treated as a delta function.
pub const DELTA_LIMIT_NU: f64 = 1e6;

/// Above this coupling the `γ²` expansions are no longer trusted.
pub const WEAK_COUPLING_LIMIT: f64 = 0.1;

/// Medium and pulse scalars.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KerrParams {
    /// Nonlinear coupling `γ = βz`.
    pub gamma: f64,
    /// Peak mean photon-number density `|α₀|²`.
    pub n_bar0: f64,
    /// Peak nonlinear phase `ψ₀ = 2γn̄₀`.
    pub psi0: f64,
    /// Decay parameter `μ₀ = γψ₀/2 = γ²n̄₀`.
    pub mu0: f64,
    pub tau_p: f64,
    pub tau_r: f64,
    /// `ν = τ_p/τ_r`.
    pub nu: f64,
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}

fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be non-negative and finite",
        })
    }
}

impl KerrParams {
    pub fn new(gamma: f64, n_bar0: f64, tau_p: f64, tau_r: f64) -> Result<Self> {
        let gamma = non_negative("gamma", gamma)?;
        let n_bar0 = non_negative("n_bar0", n_bar0)?;
        let tau_p = positive("tau_p", tau_p)?;
        let tau_r = positive("tau_r", tau_r)?;
        let psi0 = 2.0 * gamma * n_bar0;
        let params = KerrParams {
            gamma,
            n_bar0,
            psi0,
            mu0: gamma * psi0 / 2.0,
            tau_p,
            tau_r,
            nu: tau_p / tau_r,
        };
        if !params.weak_coupling() {
            log::warn!("gamma = {gamma} exceeds {WEAK_COUPLING_LIMIT}; second-order expansions lose accuracy");
        }
        if !params.slow_envelope_valid() {
            log::warn!("nu = {} <= 1; slow-envelope formulas are not valid", params.nu);
        }
        Ok(params)
    }

    /// Parameters in pulse units (`τ_p = 1`, `τ_r = 1/ν`) with `n̄₀` chosen so
    /// that the peak phase is `psi0`.
    pub fn from_psi0(psi0: f64, gamma: f64, nu: f64) -> Result<Self> {
        let psi0 = non_negative("psi0", psi0)?;
        let gamma = positive("gamma", gamma)?;
        let nu = positive("nu", nu)?;
        Self::new(gamma, psi0 / (2.0 * gamma), 1.0, 1.0 / nu)
    }

    pub fn slow_envelope_valid(&self) -> bool {
        self.nu > 1.0
    }

    pub fn weak_coupling(&self) -> bool {
        self.gamma <= WEAK_COUPLING_LIMIT
    }

    pub fn envelope(&self) -> GaussianEnvelope {
        GaussianEnvelope { tau_p: self.tau_p }
    }

    pub(crate) fn require_slow_envelope(&self, operation: &'static str) -> Result<()> {
        if self.slow_envelope_valid() {
            Ok(())
        } else {
            Err(Error::RegimeViolation { operation, nu: self.nu })
        }
    }
}

/// `ρ(t) = exp(−t²/2τ_p²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianEnvelope {
    pub tau_p: f64,
}

impl GaussianEnvelope {
    pub fn rho(&self, t: f64) -> f64 {
        let x = t / self.tau_p;
        (-0.5 * x * x).exp()
    }

    pub fn rho_sq(&self, t: f64) -> f64 {
        let x = t / self.tau_p;
        (-x * x).exp()
    }

    /// Paraxial expansion `ρ²(t) ≈ 1 − t²/τ_p²`.
    pub fn rho_sq_paraxial(&self, t: f64) -> f64 {
        let x = t / self.tau_p;
        1.0 - x * x
    }
}

/// Input phase `φ(t)` of the coherent pulse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PhaseProfile {
    Constant(f64),
    /// Phase that minimises the X-quadrature spectrum at `Ω₀ = ω₀τ_r`.
    Optimal {
        omega0_norm: f64,
    },
}

impl PhaseProfile {
    /// `φ` given the local nonlinear phase `ψ(t)`.
    pub fn phi(&self, psi_t: f64) -> f64 {
        match *self {
            PhaseProfile::Constant(phi) => phi,
            PhaseProfile::Optimal { omega0_norm } => quadspec::optimal_phase_for(psi_t, omega0_norm).phi,
        }
    }
}

/// A pulse propagating through a medium: parameters, envelope and kernel
/// bundled so that `τ_p` and `τ_r` are consistent by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pulse {
    pub params: KerrParams,
    pub envelope: GaussianEnvelope,
    pub kernel: ResponseKernel,
    pub tol: Tolerances,
}

impl Pulse {
    pub fn new(params: KerrParams, variant: KernelVariant) -> Result<Self> {
        Ok(Pulse {
            envelope: params.envelope(),
            kernel: ResponseKernel::new(variant, params.tau_r)?,
            params,
            tol: Tolerances::absolute(1e-10),
        })
    }

    pub fn exponential(params: KerrParams) -> Result<Self> {
        Self::new(params, KernelVariant::Exponential)
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }

    /// `|α₀(t)| = √n̄₀ ρ(t)`.
    pub fn amplitude(&self, t: f64) -> f64 {
        self.params.n_bar0.sqrt() * self.envelope.rho(t)
    }

    /// `ψ(t) = ψ₀ ∫₀^∞ h̃(θ) ρ²(t − θτ_r) dθ` by adaptive quadrature.
    pub fn psi_exact(&self, t: f64) -> Result<f64> {
        self.kernel.require_exponential("psi_exact")?;
        if self.params.nu > DELTA_LIMIT_NU {
            return Ok(self.params.psi0 * self.envelope.rho_sq(t));
        }
        Ok(self.params.psi0 * self.causal_average(t, 1)?)
    }

    /// `μ(t) = μ₀ ∫₀^∞ h̃²(θ) ρ²(t − θτ_r) dθ` by adaptive quadrature.
    pub fn mu_exact(&self, t: f64) -> Result<f64> {
        self.kernel.require_exponential("mu_exact")?;
        if self.params.nu > DELTA_LIMIT_NU {
            return Ok(self.params.mu0 * 0.5 * self.envelope.rho_sq(t));
        }
        Ok(self.params.mu0 * self.causal_average(t, 2)?)
    }

    fn causal_average(&self, t: f64, power: i32) -> Result<f64> {
        let tau_r = self.params.tau_r;
        let est = integrate_with_breaks(
            |theta: f64| self.kernel.h_tilde(theta).powi(power) * self.envelope.rho_sq(t - theta * tau_r),
            &[0.0, 1.0, 4.0, KERNEL_TRUNCATION],
            self.tol,
        )?;
        Ok(est.value)
    }

    /// Slow-envelope phase `ψ₀ρ²(t)`.
    pub fn psi_slow(&self, t: f64) -> Result<f64> {
        self.params.require_slow_envelope("psi_slow")?;
        Ok(self.params.psi0 * self.envelope.rho_sq(t))
    }

    /// Slow-envelope decay exponent `μ₀ρ²(t)/2`.
    pub fn mu_slow(&self, t: f64) -> Result<f64> {
        self.kernel.require_exponential("mu_slow")?;
        self.params.require_slow_envelope("mu_slow")?;
        Ok(self.params.mu0 * self.envelope.rho_sq(t) * self.kernel.one_sided_square_area())
    }

    /// Slow-envelope correlator `K(t₁, t₁+τ) = μ₀ ρ²(t₁+τ/2) τ_r g(τ)`.
    pub fn k_slow(&self, t1: f64, tau: f64) -> Result<f64> {
        self.params.require_slow_envelope("k_slow")?;
        let g = self.kernel.autocorr_g(tau)?;
        Ok(self.params.mu0 * self.envelope.rho_sq(t1 + 0.5 * tau) * self.params.tau_r * g)
    }

    /// `K(t₁, t₂) = μ₀ ∫ h̃(t₁/τ_r − θ) h̃(t₂/τ_r − θ) ρ²(θτ_r) dθ`.
    pub fn k_exact(&self, t1: f64, t2: f64) -> Result<f64> {
        let tau_r = self.params.tau_r;
        let (a, b) = {
            let (x, y) = (t1 / tau_r, t2 / tau_r);
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        };
        let breaks = [a - KERNEL_TRUNCATION, a, b, b + KERNEL_TRUNCATION];
        let est = integrate_with_breaks(
            |theta: f64| {
                self.kernel.h_tilde(a - theta) * self.kernel.h_tilde(b - theta) * self.envelope.rho_sq(theta * tau_r)
            },
            &breaks,
            self.tol,
        )?;
        Ok(self.params.mu0 * est.value)
    }

    /// Total phase `Φ(t) = ψ(t) + φ(t)` with the slow-envelope `ψ`.
    pub fn big_phi(&self, phase: &PhaseProfile, t: f64) -> Result<f64> {
        let psi = self.psi_slow(t)?;
        Ok(psi + phase.phi(psi))
    }
}
