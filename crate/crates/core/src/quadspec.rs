//! Quadrature means, correlation functions and fluctuation spectra of the
//! self-modulated pulse, the optimal input phase, and the width of the band
//! in which X-quadrature noise sits below the shot-noise level.
//!
//! Frequencies are normalised by the relaxation time, `Ω = ωτ_r`. The
//! shot-noise level of either quadrature is `1/4`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::lorentzian_l;
use crate::pulse::{PhaseProfile, Pulse};

pub const SHOT_NOISE: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureMeans {
    pub x_mean: f64,
    pub y_mean: f64,
    /// `Φ(t) = ψ(t) + φ(t)`.
    pub big_phi: f64,
}

/// `⟨X̂⟩ = |α₀| e^{−μ} cos Φ`, `⟨Ŷ⟩ = |α₀| e^{−μ} sin Φ`.
pub fn means_from(alpha_abs: f64, mu: f64, big_phi: f64) -> QuadratureMeans {
    let r = alpha_abs * (-mu).exp();
    QuadratureMeans {
        x_mean: r * big_phi.cos(),
        y_mean: r * big_phi.sin(),
        big_phi,
    }
}

pub fn quadrature_means(pulse: &Pulse, phase: &PhaseProfile, t: f64) -> Result<QuadratureMeans> {
    let mu = pulse.mu_slow(t)?;
    let big_phi = pulse.big_phi(phase, t)?;
    Ok(means_from(pulse.amplitude(t), mu, big_phi))
}

/// How the envelope and phase at `t + τ` enter the correlation functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnvelopeTreatment {
    /// `ρ` and `Φ` held at their values at `t` over the correlation time;
    /// the fluctuation spectra are the exact transforms of this form.
    Frozen,
    /// `ρ(t+τ)`, `ρ²(t+τ/2)` and `Φ(t+τ)` evaluated as written; differs from
    /// the frozen form by `O(ν⁻²)`.
    Full,
}

/// Quadrature correlation functions split as `R = w·δ(τ) + smooth(τ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrRxRy {
    /// Smooth part of `R_X(t, t+τ)`, inverse time units.
    pub rx_smooth: f64,
    /// Smooth part of `R_Y(t, t+τ)`.
    pub ry_smooth: f64,
    /// Weight `w` of the `δ(τ)` term (identical for both quadratures); it is
    /// never discretised and contributes `w` to the spectrum at every frequency.
    pub delta_weight: f64,
}

pub fn corr_rx_ry(
    pulse: &Pulse,
    phase: &PhaseProfile,
    t: f64,
    tau: f64,
    treatment: EnvelopeTreatment,
) -> Result<CorrRxRy> {
    pulse.params.require_slow_envelope("corr_rx_ry")?;
    let psi0 = pulse.params.psi0;
    let env = pulse.envelope;
    let h = pulse.kernel.h(tau);
    let g = pulse.kernel.autocorr_g(tau)?;

    let phi_t = pulse.big_phi(phase, t)?;
    let rho_t = env.rho(t);
    let (rho_tau, rho_mid_sq, phi_tau) = match treatment {
        EnvelopeTreatment::Frozen => (rho_t, rho_t * rho_t, phi_t),
        EnvelopeTreatment::Full => (
            env.rho(t + tau),
            env.rho_sq(t + 0.5 * tau),
            pulse.big_phi(phase, t + tau)?,
        ),
    };

    let rr = rho_t * rho_tau;
    let linear = psi0 * rr * h * (phi_t + phi_tau).sin();
    let quadratic = psi0 * psi0 * rr * rho_mid_sq * g;
    Ok(CorrRxRy {
        rx_smooth: 0.25 * (-linear + quadratic * phi_t.sin() * phi_tau.sin()),
        ry_smooth: 0.25 * (linear + quadratic * phi_t.cos() * phi_tau.cos()),
        delta_weight: SHOT_NOISE,
    })
}

/// `(S_X, S_Y)` for local nonlinear phase `ψ`, frequency `Ω` and total phase `Φ`.
pub fn spectrum_for(psi: f64, omega_norm: f64, big_phi: f64) -> (f64, f64) {
    let pl = psi * lorentzian_l(omega_norm);
    let cross = 2.0 * pl * (2.0 * big_phi).sin();
    let quad = 4.0 * pl * pl;
    let (s, c) = big_phi.sin_cos();
    (0.25 * (1.0 - cross + quad * s * s), 0.25 * (1.0 + cross + quad * c * c))
}

pub fn spectrum(pulse: &Pulse, phase: &PhaseProfile, t: f64, omega_norm: f64) -> Result<(f64, f64)> {
    let psi = pulse.psi_slow(t)?;
    Ok(spectrum_for(psi, omega_norm, psi + phase.phi(psi)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimalPhase {
    /// Input phase `φ₀`.
    pub phi: f64,
    /// Resulting total phase `Φ = ½ arctan[1/(ψL(Ω₀))]`.
    pub big_phi: f64,
    /// `ψL(Ω₀) = 0`: the phase is the `π/4` limit and carries no information.
    pub degenerate: bool,
}

/// `φ₀ = ½ arctan[1/(ψ L(Ω₀))] − ψ`.
pub fn optimal_phase_for(psi: f64, omega0_norm: f64) -> OptimalPhase {
    let pl = psi * lorentzian_l(omega0_norm);
    let big_phi = 0.5 * 1.0f64.atan2(pl);
    OptimalPhase {
        phi: big_phi - psi,
        big_phi,
        degenerate: pl == 0.0,
    }
}

pub fn optimal_phase(pulse: &Pulse, t: f64, omega0_norm: f64) -> Result<OptimalPhase> {
    Ok(optimal_phase_for(pulse.psi_slow(t)?, omega0_norm))
}

/// `S_X = ¼[√(1+x²) − x]²`, `S_Y = ¼[√(1+x²) + x]²` with `x = ψL(Ω₀)`.
pub fn spectrum_at_optimum_for(psi_l: f64) -> (f64, f64) {
    let root = psi_l.hypot(1.0);
    let plus = root + psi_l;
    // √(1+x²) − x = 1/(√(1+x²) + x) avoids cancellation for large x
    let minus = 1.0 / plus;
    (0.25 * minus * minus, 0.25 * plus * plus)
}

pub fn spectrum_at_optimum(pulse: &Pulse, t: f64, omega0_norm: f64) -> Result<(f64, f64)> {
    let psi = pulse.psi_slow(t)?;
    Ok(spectrum_at_optimum_for(psi * lorentzian_l(omega0_norm)))
}

/// Spectra at any `Ω` with the input phase optimised for `Ω₀`:
///
/// `S_X(Ω) = S_X(Ω₀) + ½ψ[L − L₀]{(L + L₀)ψ − [1 + (L + L₀)L₀ψ²] / √(1 + ψ²L₀²)}`
///
/// and the same for `S_Y` with `+` before the bracket, `L = L(Ω)`,
/// `L₀ = L(Ω₀)`. This is [`spectrum_for`] evaluated at the optimal phase.
pub fn spectrum_general_for(psi: f64, omega_norm: f64, omega0_norm: f64) -> (f64, f64) {
    let l = lorentzian_l(omega_norm);
    let l0 = lorentzian_l(omega0_norm);
    let (sx0, sy0) = spectrum_at_optimum_for(psi * l0);
    let sum = l + l0;
    let lead = 0.5 * psi * (l - l0);
    let norm = (1.0 + sum * l0 * psi * psi) / (psi * l0).hypot(1.0);
    (sx0 + lead * (sum * psi - norm), sy0 + lead * (sum * psi + norm))
}

/// The same correction with `√(1 + ψ²L²(Ω))` as the normaliser. Kept only
/// to document that this variant is not the optimal-phase spectrum: it does
/// not return to the shot-noise level as `Ω → ∞`.
pub fn spectrum_general_as_printed(psi: f64, omega_norm: f64, omega0_norm: f64) -> (f64, f64) {
    let l = lorentzian_l(omega_norm);
    let l0 = lorentzian_l(omega0_norm);
    let (sx0, sy0) = spectrum_at_optimum_for(psi * l0);
    let sum = l + l0;
    let lead = 0.5 * psi * (l - l0);
    let norm = (1.0 + sum * l0 * psi * psi) / (psi * l).hypot(1.0);
    (sx0 + lead * (sum * psi - norm), sy0 + lead * (sum * psi + norm))
}

pub fn spectrum_general(pulse: &Pulse, t: f64, omega_norm: f64, omega0_norm: f64) -> Result<(f64, f64)> {
    Ok(spectrum_general_for(pulse.psi_slow(t)?, omega_norm, omega0_norm))
}

/// Coefficients of `a L² + 2L + c = 0`, the half-depth condition
/// `S_X(ΔΩ) = ½[¼ + S_X(0)]` written as a quadratic in `L(ΔΩ)`:
/// `a = 2ψ(ψ − √(1+ψ²))`, `c = ψ√(1+ψ²) − ψ² − 1`.
fn bandwidth_quadratic(psi: f64) -> (f64, f64) {
    let root = psi.hypot(1.0);
    // ψ − √(1+ψ²) = −1/(ψ + √(1+ψ²)), ψ√(1+ψ²) − ψ² − 1 = −√(1+ψ²)/(ψ + √(1+ψ²))
    let a = -2.0 * psi / (psi + root);
    let c = -root / (psi + root);
    (a, c)
}

/// Admissible root `L(ΔΩ) ∈ (0, 1]` of the half-depth quadratic.
pub fn bandwidth_lorentzian(psi: f64) -> Result<f64> {
    if !(psi >= 0.0 && psi.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "psi",
            value: psi,
            reason: "nonlinear phase must be non-negative and finite",
        });
    }
    let (a, c) = bandwidth_quadratic(psi);
    // both roots are real (ac ≤ 1/2); the other one, q/a, exceeds 1
    let q = -(1.0 + (1.0 - a * c).sqrt());
    let l = c / q;
    if l > 0.0 && l <= 1.0 {
        Ok(l)
    } else {
        Err(Error::NoRootInRange { psi })
    }
}

/// Width `ΔΩ = τ_rΔω` of the sub-shot-noise band for phase optimised at
/// `Ω₀ = 0`; grows from 1 at `ψ → 0` to `√(1+√2)` at `ψ → ∞`.
pub fn squeezing_bandwidth(psi: f64) -> Result<f64> {
    let l = bandwidth_lorentzian(psi)?;
    Ok((1.0 / l - 1.0).sqrt())
}

/// Explicit radical `ΔΩ = [a / (√(1 − ac) − 1) − 1]^{1/2}`; loses precision
/// as `ψ → 0` and is only used as a cross-check of [`squeezing_bandwidth`].
pub fn squeezing_bandwidth_radical(psi: f64) -> f64 {
    let (a, c) = bandwidth_quadratic(psi);
    (a / ((1.0 - a * c).sqrt() - 1.0) - 1.0).sqrt()
}

pub fn squeezing_bandwidth_at(pulse: &Pulse, t: f64) -> Result<f64> {
    squeezing_bandwidth(pulse.psi_slow(t)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaTag {
    /// Optimal phase for `Ω₀`, any `Ω`.
    General,
    /// Optimal phase evaluated at `Ω = Ω₀` only.
    OptimalFrequency,
    /// Fixed input phase.
    FixedPhase,
}

impl FormulaTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormulaTag::General => "general",
            FormulaTag::OptimalFrequency => "optimal-frequency",
            FormulaTag::FixedPhase => "fixed-phase",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSeries {
    pub omega_norm_grid: Vec<f64>,
    pub s_x: Vec<f64>,
    pub s_y: Vec<f64>,
    pub t_eval: f64,
    pub formula_tag: FormulaTag,
}

/// Samples the spectra over `omegas` at time `t`. An optimal phase uses
/// [`spectrum_general`]; a constant phase uses [`spectrum`].
pub fn spectrum_series(pulse: &Pulse, phase: &PhaseProfile, t: f64, omegas: &[f64]) -> Result<SpectrumSeries> {
    let psi = pulse.psi_slow(t)?;
    let (tag, pairs): (FormulaTag, Vec<(f64, f64)>) = match *phase {
        PhaseProfile::Optimal { omega0_norm } => (
            FormulaTag::General,
            omegas
                .iter()
                .map(|&w| spectrum_general_for(psi, w, omega0_norm))
                .collect(),
        ),
        PhaseProfile::Constant(phi) => (
            FormulaTag::FixedPhase,
            omegas.iter().map(|&w| spectrum_for(psi, w, psi + phi)).collect(),
        ),
    };
    let (s_x, s_y) = pairs.into_iter().unzip();
    Ok(SpectrumSeries {
        omega_norm_grid: omegas.to_vec(),
        s_x,
        s_y,
        t_eval: t,
        formula_tag: tag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pulse::KerrParams;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    fn pulse(psi0: f64, gamma: f64, nu: f64) -> Pulse {
        Pulse::exponential(KerrParams::from_psi0(psi0, gamma, nu).unwrap()).unwrap()
    }

    #[test]
    fn means_examples() {
        let linear = Pulse::exponential(KerrParams::new(0.0, 9.0, 1.0, 0.1).unwrap()).unwrap();
        let m = quadrature_means(&linear, &PhaseProfile::Constant(0.0), 0.0).unwrap();
        assert_eq!((m.x_mean, m.y_mean), (3.0, 0.0));

        let m = means_from(1.0, 0.0, FRAC_PI_2);
        assert_abs_diff_eq!(m.x_mean, 0.0, epsilon = 1e-16);
        assert_eq!(m.y_mean, 1.0);

        // ψ₀ = 1, μ₀ = 0.02 → γ = 0.04, n̄₀ = 12.5
        let p = pulse(1.0, 0.04, 10.0);
        let m = quadrature_means(&p, &PhaseProfile::Constant(0.0), 0.0).unwrap();
        let r = 12.5f64.sqrt() * (-0.01f64).exp();
        assert_abs_diff_eq!(m.x_mean, r * 1.0f64.cos(), epsilon = 1e-14);
        assert_abs_diff_eq!(m.y_mean, r * 1.0f64.sin(), epsilon = 1e-14);
    }

    #[test]
    fn means_modulus_identity() {
        let p = pulse(1.7, 0.03, 20.0);
        for &t in &[-1.0, 0.0, 0.4] {
            let m = quadrature_means(&p, &PhaseProfile::Optimal { omega0_norm: 0.5 }, t).unwrap();
            let expected = p.params.n_bar0 * p.envelope.rho_sq(t) * (-2.0 * p.mu_slow(t).unwrap()).exp();
            assert_relative_eq!(m.x_mean.powi(2) + m.y_mean.powi(2), expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn corr_vanishes_for_coherent_state() {
        let p = Pulse::exponential(KerrParams::new(0.0, 4.0, 1.0, 0.1).unwrap()).unwrap();
        for treatment in [EnvelopeTreatment::Frozen, EnvelopeTreatment::Full] {
            let c = corr_rx_ry(&p, &PhaseProfile::Constant(0.3), 0.1, 0.05, treatment).unwrap();
            assert_eq!((c.rx_smooth, c.ry_smooth), (0.0, 0.0));
            assert_eq!(c.delta_weight, 0.25);
        }
    }

    #[test]
    fn corr_with_zero_total_phase() {
        // φ = −ψ(t) makes Φ(t) = 0 at the evaluation time
        let p = pulse(1.0, 1e-3, 10.0);
        let psi = p.psi_slow(0.0).unwrap();
        let tau = p.params.tau_r;
        let c = corr_rx_ry(&p, &PhaseProfile::Constant(-psi), 0.0, tau, EnvelopeTreatment::Frozen).unwrap();
        assert_abs_diff_eq!(c.rx_smooth, 0.0, epsilon = 1e-15);
        let expected = 0.25 * p.params.psi0.powi(2) * p.kernel.autocorr_g(tau).unwrap();
        assert_relative_eq!(c.ry_smooth, expected, max_relative = 1e-14);
        assert!(c.ry_smooth > 0.0);
    }

    #[test]
    fn corr_regime_and_kernel_checks() {
        let p = pulse(1.0, 1e-3, 0.5);
        assert!(matches!(
            corr_rx_ry(&p, &PhaseProfile::Constant(0.0), 0.0, 0.1, EnvelopeTreatment::Frozen),
            Err(Error::RegimeViolation { .. })
        ));
    }

    #[test]
    fn spectrum_examples() {
        let zero = pulse(0.0, 1e-3, 10.0);
        assert_eq!(
            spectrum(&zero, &PhaseProfile::Constant(1.0), 0.0, 0.7).unwrap(),
            (0.25, 0.25)
        );
        let (sx, _) = spectrum_for(1.0, 0.0, FRAC_PI_2);
        assert_abs_diff_eq!(sx, 1.25, epsilon = 1e-15);
        let (sx, sy) = spectrum_for(1.0, 1e9, 0.4);
        assert_abs_diff_eq!(sx, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(sy, 0.25, epsilon = 1e-15);
    }

    #[test]
    fn optimal_phase_examples() {
        // ψL(Ω₀) = 1
        let o = optimal_phase_for(2.0, 1.0);
        assert_abs_diff_eq!(o.phi, 0.5 * FRAC_PI_4 - 2.0, epsilon = 1e-15);
        let o = optimal_phase_for(0.0, 0.0);
        assert!(o.degenerate);
        assert_abs_diff_eq!(o.phi, FRAC_PI_4, epsilon = 1e-15);
        let o = optimal_phase_for(1.0, 1.0);
        assert_abs_diff_eq!(o.phi, 0.5 * 2.0f64.atan() - 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(o.phi, -0.446_4, epsilon = 1e-4);
    }

    #[test]
    fn optimal_phase_minimises_by_scan() {
        for &(psi, w0) in &[(1.0, 1.0), (0.3, 0.0), (3.0, 2.0)] {
            let o = optimal_phase_for(psi, w0);
            let best = (0..=200_000)
                .map(|i| -FRAC_PI_2 + std::f64::consts::PI * i as f64 / 200_000.0)
                .map(|big_phi| (big_phi, spectrum_for(psi, w0, big_phi).0))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            assert_abs_diff_eq!(best.0, o.big_phi, epsilon = 1e-4);
            let at = spectrum_for(psi, w0, o.big_phi).0;
            assert!(at <= best.1 + 1e-15);
            assert_relative_eq!(
                at,
                spectrum_at_optimum_for(psi * lorentzian_l(w0)).0,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn optimum_examples() {
        assert_eq!(spectrum_at_optimum_for(0.0), (0.25, 0.25));
        let (sx, sy) = spectrum_at_optimum_for(1.0);
        assert_abs_diff_eq!(sx, (SQRT_2 - 1.0).powi(2) / 4.0, epsilon = 1e-16);
        assert_abs_diff_eq!(sy, (SQRT_2 + 1.0).powi(2) / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sx * sy, 1.0 / 16.0, epsilon = 1e-16);
        let (sx, _) = spectrum_at_optimum_for(10.0);
        assert_relative_eq!(sx, 0.25 * (101f64.sqrt() - 10.0).powi(2), max_relative = 1e-10);
        assert_abs_diff_eq!(sx, 6.22e-4, epsilon = 1e-6);
    }

    #[test]
    fn general_reduces_to_optimum_and_to_fixed_phase() {
        for &(psi, w0) in &[(0.5, 0.0), (2.0, 1.0), (5.0, 0.3)] {
            let at = spectrum_general_for(psi, w0, w0);
            let opt = spectrum_at_optimum_for(psi * lorentzian_l(w0));
            assert_abs_diff_eq!(at.0, opt.0, epsilon = 1e-15);
            assert_abs_diff_eq!(at.1, opt.1, epsilon = 1e-14);
            let big_phi = optimal_phase_for(psi, w0).big_phi;
            for &w in &[0.0, 0.2, 1.0, 3.0, 50.0] {
                let g = spectrum_general_for(psi, w, w0);
                let f = spectrum_for(psi, w, big_phi);
                assert_abs_diff_eq!(g.0, f.0, epsilon = 1e-13);
                assert_abs_diff_eq!(g.1, f.1, epsilon = 1e-13);
            }
        }
        assert_eq!(spectrum_general_for(0.0, 0.4, 1.2), (0.25, 0.25));
    }

    #[test]
    fn printed_variant_misses_shot_noise_limit() {
        let (sx, _) = spectrum_general_as_printed(5.0, 1e8, 0.0);
        assert!((sx - 0.25).abs() > 10.0);
        let (sx, _) = spectrum_general_for(5.0, 1e8, 0.0);
        assert_abs_diff_eq!(sx, 0.25, epsilon = 1e-12);
    }

    #[test]
    fn bandwidth_examples() {
        assert_abs_diff_eq!(squeezing_bandwidth(0.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(bandwidth_lorentzian(1.0).unwrap(), 0.341_08, epsilon = 1e-5);
        assert_abs_diff_eq!(squeezing_bandwidth(1.0).unwrap(), 1.390, epsilon = 1e-3);
        let asymptote = (1.0 + SQRT_2).sqrt();
        assert_abs_diff_eq!(squeezing_bandwidth(100.0).unwrap(), asymptote, epsilon = 1e-4);
        assert!(squeezing_bandwidth(-1.0).is_err());
        assert!(squeezing_bandwidth(f64::NAN).is_err());
    }

    // independent route: bisection on S_X(Ω) itself for the half-depth crossing
    fn half_depth_by_bisection(psi: f64) -> f64 {
        let target = 0.5 * (SHOT_NOISE + spectrum_general_for(psi, 0.0, 0.0).0);
        let f = |w: f64| spectrum_general_for(psi, w, 0.0).0 - target;
        let (mut lo, mut hi) = (0.0, 10.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn bandwidth_matches_half_depth_crossing() {
        for &psi in &[1e-3, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0] {
            let w = squeezing_bandwidth(psi).unwrap();
            assert_abs_diff_eq!(w, half_depth_by_bisection(psi), epsilon = 1e-9);
            let target = 0.5 * (SHOT_NOISE + spectrum_general_for(psi, 0.0, 0.0).0);
            assert_abs_diff_eq!(spectrum_general_for(psi, w, 0.0).0, target, epsilon = 1e-10);
            assert_relative_eq!(w, squeezing_bandwidth_radical(psi), max_relative = 1e-8);
        }
    }

    #[test]
    fn series_from_pulse() {
        let p = pulse(2.0, 1e-3, 10.0);
        let s = spectrum_series(&p, &PhaseProfile::Optimal { omega0_norm: 1.0 }, 0.0, &[0.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.formula_tag, FormulaTag::General);
        assert_eq!(s.s_x.len(), 3);
        let opt = spectrum_at_optimum(&p, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(s.s_x[1], opt.0, epsilon = 1e-15);
        let zero = pulse(0.0, 1e-3, 10.0);
        let s = spectrum_series(&zero, &PhaseProfile::Constant(0.2), 0.0, &[0.0, 5.0]).unwrap();
        assert!(s.s_x.iter().chain(&s.s_y).all(|&v| v == 0.25));
        assert_eq!(s.formula_tag, FormulaTag::FixedPhase);
    }

    proptest! {
        #[test]
        fn spectral_identities(psi in 0.0f64..20.0, w in -10.0f64..10.0, big_phi in -4.0f64..4.0) {
            let (sx, sy) = spectrum_for(psi, w, big_phi);
            prop_assert!(sx > 0.0 && sy > 0.0);
            let l = lorentzian_l(w);
            prop_assert!((sx + sy - (0.5 + psi * psi * l * l)).abs() <= 1e-12 * (1.0 + psi * psi));
            // X with Φ equals Y with Φ + π/2
            let (_, sy_shift) = spectrum_for(psi, w, big_phi + FRAC_PI_2);
            prop_assert!((sx - sy_shift).abs() <= 1e-12 * (1.0 + psi * psi));
        }

        #[test]
        fn optimum_is_minimum_uncertainty(x in 0.0f64..1e3) {
            let (sx, sy) = spectrum_at_optimum_for(x);
            prop_assert!((sx * sy - 1.0 / 16.0).abs() <= 1e-12);
            prop_assert!(sx <= 0.25 && sy >= 0.25);
        }

        #[test]
        fn optimum_is_monotone(x in 0.0f64..100.0, dx in 1e-3f64..1.0) {
            let (a, b) = (spectrum_at_optimum_for(x), spectrum_at_optimum_for(x + dx));
            prop_assert!(b.0 < a.0);
            prop_assert!(b.1 > a.1);
        }

        #[test]
        fn bandwidth_in_range(psi in 0.0f64..1e4) {
            let l = bandwidth_lorentzian(psi).unwrap();
            prop_assert!(l > 0.0 && l <= 0.5 + 1e-15);
            let w = squeezing_bandwidth(psi).unwrap();
            prop_assert!(w >= 1.0 && w < (1.0 + SQRT_2).sqrt() + 1e-12);
        }
    }
}
