//! Photon-number spectral density of the self-modulated pulse and the
//! spectral photon-number correlation function in the paraxial Gaussian model.
//!
//! Frequencies here are normalised by the pulse duration, `Ω = ωτ_p`, and
//! densities are returned as multiples of `n̄₀`. The relaxation kernel is the
//! Gaussian `h̃(θ) = e^{−θ²/2}`, entering as `exp[−ν²(t₂ − t₁)²/2]` in pulse
//! time.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pulse::KerrParams;
use crate::quad::{integrate, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhotonSpectrumPoint {
    /// `Ω = ωτ_p`.
    pub omega_p_norm: f64,
    /// `n̄(Ω)/n̄₀`.
    pub density: f64,
}

/// `n̄(Ω)/n̄₀ = (1+4ψ₀²)^{−1/2} exp[−Ω²/(1+4ψ₀²)]`.
pub fn photon_density_classical(params: &KerrParams, omega_p_norm: f64) -> f64 {
    density_classical(params.psi0, omega_p_norm)
}

fn density_classical(psi0: f64, omega: f64) -> f64 {
    let a2 = 1.0 + 4.0 * psi0 * psi0;
    (-omega * omega / a2).exp() / a2.sqrt()
}

/// Density with the relaxation correction `κ = γψ₀ν²/4`:
/// `[(1+κ)² + 4ψ₀²]^{−1/2} exp[−Ω²(1+κ)/((1+κ)² + 4ψ₀²)]`.
pub fn photon_density_relaxing(params: &KerrParams, omega_p_norm: f64) -> f64 {
    let psi0 = params.psi0;
    let k = 1.0 + params.gamma * psi0 * params.nu * params.nu / 4.0;
    let d = k * k + 4.0 * psi0 * psi0;
    (-omega_p_norm * omega_p_norm * k / d).exp() / d.sqrt()
}

pub fn density_point(params: &KerrParams, omega_p_norm: f64) -> PhotonSpectrumPoint {
    PhotonSpectrumPoint {
        omega_p_norm,
        density: photon_density_classical(params, omega_p_norm),
    }
}

/// `I₁(Ω₁, Ω₂)/n̄₀ = [n̄(Ω₁) n̄(Ω₂)]^{1/2} exp{iψ₀(Ω₁² − Ω₂²)/(1+4ψ₀²)}`.
pub fn i1(params: &KerrParams, omega1: f64, omega2: f64) -> Complex64 {
    let psi0 = params.psi0;
    let modulus = (density_classical(psi0, omega1) * density_classical(psi0, omega2)).sqrt();
    let phase = psi0 * (omega1 * omega1 - omega2 * omega2) / (1.0 + 4.0 * psi0 * psi0);
    Complex64::from_polar(modulus, phase)
}

/// Weight of `δ(Ω₁ − Ω₂)`: `I₁(Ω, Ω)`, which is the classical density.
pub fn i1_diagonal(params: &KerrParams, omega_p_norm: f64) -> f64 {
    photon_density_classical(params, omega_p_norm)
}

/// Frequency-independent designations of the closed-form correlator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrClosedFormParts {
    pub psi0: f64,
    pub nu: f64,
    /// `α̃ = √(1+4ψ₀²)`.
    pub alpha_t: f64,
    /// `β̃ = √[(1+2ν²−4ψ₀²)² + 16(1+ν²)²ψ₀²]`.
    pub beta_t: f64,
    /// `ϱ = √[(1+ν²)² + 4ψ₀²]`.
    pub rho_aux: f64,
    /// `ε = −arctan 2ψ₀`.
    pub eps: f64,
    /// `ξ`, quadrant-aware so it stays continuous through `1+2ν² = 4ψ₀²`.
    pub xi: f64,
    /// `Σ = arctan[2ψ₀/(1+ν²)]`.
    pub sigma: f64,
}

/// Exponents and phases of `Γ = e^{G+iS} + e^{E+iF}` at one `(Ω₁, Ω₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaExponents {
    pub g_part: f64,
    pub s_part: f64,
    pub e_part: f64,
    pub f_part: f64,
}

impl CorrClosedFormParts {
    pub fn new(psi0: f64, nu: f64) -> Self {
        let p2 = psi0 * psi0;
        let n2 = nu * nu;
        let base = 1.0 + 2.0 * n2 - 4.0 * p2;
        let cross = 4.0 * (1.0 + n2) * psi0;
        CorrClosedFormParts {
            psi0,
            nu,
            alpha_t: (1.0 + 4.0 * p2).sqrt(),
            beta_t: base.hypot(cross),
            rho_aux: (1.0 + n2).hypot(2.0 * psi0),
            eps: -(2.0 * psi0).atan(),
            xi: cross.atan2(base),
            sigma: (2.0 * psi0 / (1.0 + n2)).atan(),
        }
    }

    pub fn from_params(params: &KerrParams) -> Self {
        Self::new(params.psi0, params.nu)
    }

    /// `ψ₀/(2α̃√β̃)`.
    pub fn prefactor(&self) -> f64 {
        self.psi0 / (2.0 * self.alpha_t * self.beta_t.sqrt())
    }

    // G and S with the roles of (Ω₁, Ω₂) as written; E and F are the swap.
    fn g_s(&self, o1: f64, o2: f64) -> (f64, f64) {
        let (a, b, r) = (self.alpha_t, self.beta_t, self.rho_aux);
        let n2 = self.nu * self.nu;
        let n4 = n2 * n2;
        let sum = o1 * o1 + o2 * o2;
        let g = -sum / (2.0 * a) * self.eps.cos()
            - o2 * o2 / (2.0 * r) * self.sigma.cos()
            - r * o1 * o1 / (2.0 * b) * (self.sigma - self.xi).cos()
            - o1 * o2 / b * n2 * self.xi.cos()
            - o2 * o2 * n4 / (2.0 * r * b) * (self.sigma + self.xi).cos();
        let s = sum / (2.0 * a) * self.eps.sin() + o2 * o2 / (2.0 * r) * self.sigma.sin()
            - r * o1 * o1 / (2.0 * b) * (self.sigma - self.xi).sin()
            + o1 * o2 / b * n2 * self.xi.sin()
            + o2 * o2 * n4 / (2.0 * r * b) * (self.sigma + self.xi).sin()
            - (self.eps + 0.5 * self.xi);
        (g, s)
    }

    pub fn exponents(&self, omega1: f64, omega2: f64) -> GammaExponents {
        let (g_part, s_part) = self.g_s(omega1, omega2);
        let (e_part, f_part) = self.g_s(omega2, omega1);
        GammaExponents {
            g_part,
            s_part,
            e_part,
            f_part,
        }
    }

    /// `Im Γ = e^G sin S + e^E sin F`.
    pub fn im_gamma(&self, omega1: f64, omega2: f64) -> f64 {
        let x = self.exponents(omega1, omega2);
        x.g_part.exp() * x.s_part.sin() + x.e_part.exp() * x.f_part.sin()
    }

    /// Smooth part `−ψ₀/(2α̃√β̃) Im Γ(Ω₁, Ω₂)`, in units of `n̄₀`.
    pub fn corr_smooth(&self, omega1: f64, omega2: f64) -> f64 {
        -self.prefactor() * self.im_gamma(omega1, omega2)
    }
}

/// Smooth part of `R(Ω₁, Ω₂)`; the `δ(Ω₁ − Ω₂)` weight is [`i1_diagonal`].
pub fn corr_closed_form(params: &KerrParams, omega1: f64, omega2: f64) -> f64 {
    CorrClosedFormParts::from_params(params).corr_smooth(omega1, omega2)
}

/// `R̃ = ψ₀/(2α̃√β̃) ΔΩ² sin(ε + ξ/2)` at band centre `Ω = 0`.
pub fn band_integral_origin(params: &KerrParams, band_width: f64) -> f64 {
    let c = CorrClosedFormParts::from_params(params);
    c.prefactor() * band_width * band_width * (c.eps + 0.5 * c.xi).sin()
}

/// Band-integrated correlation and its pieces, all in units of `n̄₀`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandIntegral {
    pub band_center: f64,
    pub band_width: f64,
    /// `∫ I₁(Ω, Ω) dΩ` over the band (the delta term).
    pub delta_term: f64,
    /// `∫∫ R_smooth dΩ₁ dΩ₂` over the band square.
    pub smooth_term: f64,
    /// `delta_term + smooth_term − 1`.
    pub literal: f64,
    /// The simplified `Ω = 0` expression, when the band is centred at zero.
    pub simplified: Option<f64>,
}

pub fn band_integral(params: &KerrParams, band_center: f64, band_width: f64) -> Result<BandIntegral> {
    if !(band_width > 0.0 && band_width.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "band_width",
            value: band_width,
            reason: "band width must be positive and finite",
        });
    }
    let lo = band_center - 0.5 * band_width;
    let hi = band_center + 0.5 * band_width;
    let tol = Tolerances {
        abs: 1e-14,
        rel: 1e-11,
        max_subdivisions: 200,
    };
    let delta_term = integrate(|w: f64| i1_diagonal(params, w), lo, hi, tol)?.value;

    let parts = CorrClosedFormParts::from_params(params);
    let mut failure = None;
    let smooth_term = integrate(
        |w1: f64| match integrate(|w2: f64| parts.corr_smooth(w1, w2), lo, hi, tol) {
            Ok(e) => e.value,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        },
        lo,
        hi,
        tol,
    )?
    .value;
    if let Some(e) = failure {
        return Err(e);
    }

    Ok(BandIntegral {
        band_center,
        band_width,
        delta_term,
        smooth_term,
        literal: delta_term + smooth_term - 1.0,
        simplified: (band_center == 0.0).then(|| band_integral_origin(params, band_width)),
    })
}

/// Correlator for the Gaussian kernel as stated for the photon model,
/// `K(t, t+τ) = μ₀ ρ²(t+τ/2) e^{−τ²/4τ_r²}`.
pub fn k_gaussian(params: &KerrParams, t: f64, tau: f64) -> f64 {
    let s = tau / params.tau_r;
    params.mu0 * params.envelope().rho_sq(t + 0.5 * tau) * (-0.25 * s * s).exp()
}

/// Sampled smooth correlation with the diagonal weights and the band integral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhotonCorrGrid {
    pub omega1_grid: Vec<f64>,
    pub omega2_grid: Vec<f64>,
    /// Row-major: `values[i][j] = R_smooth(omega1_grid[i], omega2_grid[j])`.
    pub values: Vec<Vec<f64>>,
    /// `I₁(Ω, Ω)` on `omega1_grid`.
    pub delta_diag: Vec<f64>,
    pub band_center: f64,
    pub band_width: f64,
    pub band: BandIntegral,
}

pub fn corr_grid(
    params: &KerrParams,
    omega1_grid: &[f64],
    omega2_grid: &[f64],
    band_center: f64,
    band_width: f64,
) -> Result<PhotonCorrGrid> {
    let parts = CorrClosedFormParts::from_params(params);
    let values = omega1_grid
        .iter()
        .map(|&w1| omega2_grid.iter().map(|&w2| parts.corr_smooth(w1, w2)).collect())
        .collect();
    Ok(PhotonCorrGrid {
        omega1_grid: omega1_grid.to_vec(),
        omega2_grid: omega2_grid.to_vec(),
        values,
        delta_diag: omega1_grid.iter().map(|&w| i1_diagonal(params, w)).collect(),
        band_center,
        band_width,
        band: band_integral(params, band_center, band_width)?,
    })
}
