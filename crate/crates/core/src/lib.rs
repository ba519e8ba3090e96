//! Closed-form quantum theory of ultrashort pulse self-action in a Kerr medium
//! with a finite relaxation time.
//!
//! The crate is organised bottom-up:
//!
//! * [`kernel`] – the medium response `h̃(θ)`, its autocorrelation `g(τ)` and
//!   the Lorentzian spectral factor `L(Ω)`.
//! * [`pulse`] – pulse/medium parameters, the Gaussian envelope and the
//!   self-action functionals `ψ(t)`, `μ(t)`, `K(t₁, t₂)`.
//! * [`quadspec`] – quadrature means, correlation functions, fluctuation
//!   spectra, the optimal input phase and the squeezing bandwidth.
//! * [`photon`] – photon-number spectral density and the spectral photon
//!   correlation function (bunching / antibunching).
//! * [`oracle`] – brute-force quadrature, numeric Fourier transforms and a
//!   truncated Fock-space check used to validate every closed form, plus the
//!   tolerance ledger.
//!
//! Times are carried in a single consistent unit (the CLI uses `τ_p = 1`).
//! Frequencies in [`quadspec`] are normalised by `τ_r`, frequencies in
//! [`photon`] by `τ_p`.

pub mod error;
pub mod kernel;
pub mod oracle;
pub mod photon;
pub mod pulse;
pub mod quad;
pub mod quadspec;

pub use error::{Error, Result};
pub use kernel::{KernelVariant, ResponseKernel};
pub use pulse::{GaussianEnvelope, KerrParams, PhaseProfile, Pulse};
