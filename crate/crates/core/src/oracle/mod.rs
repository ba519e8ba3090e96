//! Brute-force counterparts of the closed forms: adaptive 1-D and 2-D
//! quadrature of the defining integrals, direct Fourier transforms of sampled
//! correlation functions, the exact normally ordered average of `e^{Ô}`, and
//! a truncated Fock-space check of the single-mode coherent-state average.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pulse::{Pulse, KERNEL_TRUNCATION};
use crate::quad::{integrate_with_breaks, Estimate, QuadValue, Tolerances};

pub mod ledger;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Half-width substituted for infinite limits.
    pub truncation_radius: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 0.0,
            max_subdivisions: 2000,
            truncation_radius: KERNEL_TRUNCATION,
        }
    }
}

impl QuadratureSpec {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances {
            abs: self.abs_tol,
            rel: self.rel_tol,
            max_subdivisions: self.max_subdivisions,
        }
    }

    fn with_abs(&self, abs_tol: f64) -> Self {
        QuadratureSpec { abs_tol, ..*self }
    }

    fn finite_limits(&self, a: f64, b: f64) -> (f64, f64) {
        let r = self.truncation_radius;
        match (a.is_finite(), b.is_finite()) {
            (true, true) => (a, b),
            (true, false) => (a, a + r),
            (false, true) => (b - r, b),
            (false, false) => (-r, r),
        }
    }
}

/// `∫_a^b f`; infinite limits are replaced by the truncation radius and a
/// breakpoint is placed at 0 when it lies inside.
pub fn integrate_1d<T, F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Estimate<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    let (a, b) = spec.finite_limits(a, b);
    let points: Vec<f64> = if a < 0.0 && b > 0.0 {
        vec![a, 0.0, b]
    } else {
        vec![a, b]
    };
    integrate_with_breaks(f, &points, spec.tolerances())
}

/// Nested `∫_{ax}^{bx} ∫_{ay}^{by} f(x, y) dy dx`. `inner_breaks(x)` returns
/// interior breakpoints of the inner integrand at that `x`.
pub fn integrate_2d<T, F, B>(
    mut f: F,
    (ax, bx): (f64, f64),
    (ay, by): (f64, f64),
    inner_breaks: B,
    spec: &QuadratureSpec,
) -> Result<Estimate<T>>
where
    T: QuadValue,
    F: FnMut(f64, f64) -> T,
    B: Fn(f64) -> Vec<f64>,
{
    let inner_tol = spec.with_abs(spec.abs_tol / (bx - ax)).tolerances();
    let mut failure = None;
    let mut inner_evals = 0;
    let outer = integrate_with_breaks(
        |x: f64| {
            let mut points = vec![ay];
            points.extend(inner_breaks(x).into_iter().filter(|&p| p > ay && p < by));
            points.push(by);
            points.sort_by(f64::total_cmp);
            match integrate_with_breaks(|y: f64| f(x, y), &points, inner_tol) {
                Ok(e) => {
                    inner_evals += e.evaluations;
                    e.value
                }
                Err(e) => {
                    failure.get_or_insert(e);
                    T::default()
                }
            }
        },
        &[ax, bx],
        spec.tolerances(),
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Estimate {
        evaluations: inner_evals,
        ..outer
    })
}

/// A correlation function sampled on the symmetric grid `τ_k = k·step`,
/// `k = −n..=n`, plus the weight of a `δ(τ)` term kept out of the samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauSamples {
    pub step: f64,
    pub values: Vec<f64>,
    pub delta_weight: f64,
}

impl TauSamples {
    /// Samples `f` out to `radius`; the number of steps per half-line is
    /// rounded up to an even count.
    pub fn sample<F>(mut f: F, step: f64, radius: f64, delta_weight: f64) -> Result<Self>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let mut n = (radius / step).ceil() as usize;
        n += n % 2;
        let values = (0..=2 * n)
            .map(|k| f((k as f64 - n as f64) * step))
            .collect::<Result<Vec<_>>>()?;
        Ok(TauSamples {
            step,
            values,
            delta_weight,
        })
    }

    fn half_len(&self) -> usize {
        self.values.len() / 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FtValue {
    /// `Re ∫ R(τ) e^{iωτ} dτ`, including the delta weight.
    pub value: f64,
    /// Imaginary part; zero up to rounding for even `R`.
    pub imag_residue: f64,
}

/// Edge samples must be below this fraction of the peak.
const TRUNCATION_EDGE: f64 = 1e-10;

/// `∫ R(τ) e^{iωτ} dτ` by composite Simpson on each half of the grid, so a
/// kink at `τ = 0` sits on a panel boundary. `omega` is in inverse units of
/// the sample step.
pub fn numeric_ft(samples: &TauSamples, omega: f64) -> Result<FtValue> {
    let n = samples.half_len();
    let peak = samples.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let edge = samples.values[0].abs().max(samples.values[2 * n].abs());
    if n == 0 || edge > TRUNCATION_EDGE * peak.max(1.0) {
        return Err(Error::TruncationTooSmall { edge });
    }
    let h = samples.step;
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &r) in samples.values.iter().enumerate() {
        let j = k.abs_diff(n);
        let w = if j == 0 {
            2.0
        } else if j == n {
            1.0
        } else if j % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let tau = (k as f64 - n as f64) * h;
        acc += Complex64::from_polar(w * r, omega * tau);
    }
    acc *= h / 3.0;
    Ok(FtValue {
        value: acc.re + samples.delta_weight,
        imag_residue: acc.im,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExactAverage {
    /// `⟨e^{Ô(t)}⟩`.
    pub value: Complex64,
    /// Its logarithm, with the phase unwrapped.
    pub exponent: Complex64,
}

impl ExactAverage {
    pub fn phase(&self) -> f64 {
        self.exponent.im
    }

    /// `−ln|⟨e^{Ô}⟩|`.
    pub fn decay(&self) -> f64 {
        -self.exponent.re
    }
}

/// `⟨e^{Ô(t)}⟩ = exp{∫ [e^{iγh̃(θ)} − 1] n̄₀ρ²(t − θτ_r) dθ}` over the full
/// line, with no expansion in `γ`.
pub fn exact_average_exp_o(pulse: &Pulse, t: f64) -> Result<ExactAverage> {
    let p = pulse.params;
    if p.gamma == 0.0 || p.n_bar0 == 0.0 {
        let zero = Complex64::new(0.0, 0.0);
        return Ok(ExactAverage {
            value: zero.exp(),
            exponent: zero,
        });
    }
    let kernel = pulse.kernel;
    let env = pulse.envelope;
    let tol = Tolerances {
        abs: 0.0,
        rel: 1e-13,
        max_subdivisions: 4000,
    };
    let r = KERNEL_TRUNCATION;
    let exponent = integrate_with_breaks(
        |theta: f64| {
            let x = p.gamma * kernel.h_tilde(theta);
            let s = (0.5 * x).sin();
            // e^{ix} − 1 with cos x − 1 = −2 sin²(x/2)
            Complex64::new(-2.0 * s * s, x.sin()) * (p.n_bar0 * env.rho_sq(t - theta * p.tau_r))
        },
        &[-r, -4.0, -1.0, 0.0, 1.0, 4.0, r],
        tol,
    )?
    .value;
    Ok(ExactAverage {
        value: exponent.exp(),
        exponent,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FockOracleSpec {
    pub n_bar: f64,
    pub cutoff: usize,
}

impl FockOracleSpec {
    /// `⌈n̄ + 12√n̄ + 20⌉`.
    pub fn required_cutoff(n_bar: f64) -> usize {
        (n_bar + 12.0 * n_bar.sqrt() + 20.0).ceil() as usize
    }

    pub fn new(n_bar: f64) -> Self {
        FockOracleSpec {
            n_bar,
            cutoff: Self::required_cutoff(n_bar),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FockCheck {
    /// `Σ_n P(n) e^{iλn}` over the truncated Poisson distribution.
    pub direct: Complex64,
    /// `Σ_k (e^{iλ} − 1)^k ⟨n(n−1)…(n−k+1)⟩ / k!`, the normally ordered series.
    pub normal_ordered: Complex64,
    /// `exp{n̄(e^{iλ} − 1)}`.
    pub closed: Complex64,
    /// Largest term magnitude in the normally ordered series; its rounding
    /// error is of order `ε` times this.
    pub series_scale: f64,
}

/// Coherent-state average of `e^{iλn̂}` three ways.
pub fn fock_check(spec: &FockOracleSpec, lambda: f64) -> Result<FockCheck> {
    let n_bar = spec.n_bar;
    if !(n_bar >= 0.0 && n_bar.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "n_bar",
            value: n_bar,
            reason: "mean photon number must be non-negative and finite",
        });
    }
    let required = FockOracleSpec::required_cutoff(n_bar);
    if spec.cutoff < required {
        return Err(Error::CutoffTooSmall {
            cutoff: spec.cutoff,
            n_bar,
            required,
        });
    }

    let mut probs = Vec::with_capacity(spec.cutoff + 1);
    let mut p = (-n_bar).exp();
    for n in 0..=spec.cutoff {
        if n > 0 {
            p *= n_bar / n as f64;
        }
        probs.push(p);
    }

    let direct = probs
        .iter()
        .enumerate()
        .map(|(n, &p)| Complex64::from_polar(p, lambda * n as f64))
        .sum();

    // factorial moments of the truncated distribution: m_k = Σ_n P(n) n!/(n−k)!
    let mut falling: Vec<f64> = vec![1.0; probs.len()];
    let z = Complex64::from_polar(1.0, lambda) - 1.0;
    let mut normal_ordered = Complex64::new(0.0, 0.0);
    let mut zk_over_kfact = Complex64::new(1.0, 0.0);
    let mut series_scale = 0.0f64;
    for k in 0..=spec.cutoff {
        if k > 0 {
            for (n, f) in falling.iter_mut().enumerate() {
                *f *= n as f64 - (k - 1) as f64;
            }
            zk_over_kfact *= z / k as f64;
        }
        let moment: f64 = probs.iter().zip(&falling).skip(k).map(|(p, f)| p * f).sum();
        let term = zk_over_kfact * moment;
        series_scale = series_scale.max(term.norm());
        normal_ordered += term;
    }

    Ok(FockCheck {
        direct,
        normal_ordered,
        closed: (z * n_bar).exp(),
        series_scale,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhotonIntegral {
    I1,
    I2,
    I3,
}

/// Parameters of the photon double integrals, in pulse time `t/τ_p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhotonIntegralSetup {
    pub psi0: f64,
    pub nu: f64,
    /// Phase `ψ₀(1 − t²)` instead of `ψ₀e^{−t²}`; the amplitude is always exact.
    pub paraxial: bool,
}

/// Half-width of the square integration domain in units of `τ_p`.
pub const PHOTON_DOMAIN: f64 = 8.0;

impl PhotonIntegralSetup {
    fn psi(&self, t: f64) -> f64 {
        if self.paraxial {
            self.psi0 * (1.0 - t * t)
        } else {
            self.psi0 * (-t * t).exp()
        }
    }
}

/// The defining double integral `I₁`, `I₂` or `I₃` at `(Ω₁, Ω₂)`.
pub fn integrate_2d_i(
    setup: &PhotonIntegralSetup,
    which: PhotonIntegral,
    omega1: f64,
    omega2: f64,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    let d = PHOTON_DOMAIN;
    let nu = setup.nu;
    let (sign, with_kernel) = match which {
        PhotonIntegral::I1 => (-1.0, false),
        PhotonIntegral::I2 => (1.0, false),
        PhotonIntegral::I3 => (1.0, true),
    };
    let f = |t1: f64, t2: f64| {
        let mut amp = (-0.5 * (t1 * t1 + t2 * t2)).exp();
        if with_kernel {
            let u = nu * (t2 - t1);
            amp *= (-0.5 * u * u).exp();
        }
        let phase = setup.psi(t1) + sign * setup.psi(t2) + omega1 * t1 + sign * omega2 * t2;
        Complex64::from_polar(amp, phase)
    };
    let breaks = |t1: f64| {
        if with_kernel && nu > 0.0 {
            let w = 8.0 / nu;
            vec![t1 - w, t1, t1 + w]
        } else {
            vec![0.0]
        }
    };
    Ok(integrate_2d(f, (-d, d), (-d, d), breaks, spec)?.value)
}

/// `n̄(Ω)/n̄₀` from `I₁(Ω, Ω)`: the operator prefactors contribute `1/2π`.
pub fn density_from_i1(i1: Complex64) -> f64 {
    i1.re / (2.0 * PI)
}

/// Smooth correlation `−(ψ₀/4π²) Im(I₂* I₃)` in units of `n̄₀`. The
/// integrands are invariant under `(t₁, Ω₁) ↔ (t₂, Ω₂)`, so the symmetrised
/// combination reduces to a single product.
pub fn corr_smooth_from_i2_i3(psi0: f64, i2: Complex64, i3: Complex64) -> f64 {
    -psi0 / (4.0 * PI * PI) * (i2.conj() * i3).im
}

pub fn corr_smooth_oracle(setup: &PhotonIntegralSetup, omega1: f64, omega2: f64, spec: &QuadratureSpec) -> Result<f64> {
    let i2 = integrate_2d_i(setup, PhotonIntegral::I2, omega1, omega2, spec)?;
    let i3 = integrate_2d_i(setup, PhotonIntegral::I3, omega1, omega2, spec)?;
    Ok(corr_smooth_from_i2_i3(setup.psi0, i2, i3))
}
