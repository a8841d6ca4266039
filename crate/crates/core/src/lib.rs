//! Numerical machinery for the Weyl-invariant heat kernel of the rank-one
//! Opdam-Cherednik Laplacian `L = d²/dr² + 2k coth(r) d/dr` with multiplicity
//! `k > 0`, normalized so that `∫₀^∞ h(r,s,t) sinh^{2k}(s) ds = 1`.
//!
//! The crate is organized around the objects of the rank-one theory:
//!
//! * [`specfun`] — ground spherical function φ₀, Heckman-Opdam eigenfunctions
//!   φ_λ, the Plancherel density |Γ(k+iλ)/Γ(iλ)|², and the function `G` with
//!   its bounded remainder `K`.
//! * [`kernels`] — the heat kernel itself, evaluated by spectral quadrature,
//!   plus independent oracles: the k=1 closed form, a Crank-Nicolson PDE
//!   solver, and the exact flat (Dunkl) kernel.
//! * [`envelope`] — the closed-form sharp envelopes: the two-sided estimate
//!   `E(r,s,t)`, its centered and flat specializations, and the general
//!   root-system product formulas.
//! * [`regions`] — the space-time region decomposition, derived constants
//!   (K₀, H, R₀, T, M), the covering windows, and the bump partition.
//! * [`supersolutions`] — auxiliary comparison functions per region, their
//!   closed-form jets, the heat operator `D = ∂_t − L`, and sign sweeps.
//! * [`verify`] — end-to-end checks: two-sided ratio sweeps h/E, mass and
//!   semigroup identities, cross-method agreement, and a Monte Carlo
//!   diffusion cross-check.
//!
//! The core is `no_std`-compatible (with `alloc`); disable default features
//! and enable `libm` for builds without the standard library. IO, file
//! formats, and the command-line front end live in the companion `hk-cli`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod bessel;
pub mod envelope;
pub mod error;
pub mod gamma;
pub mod jet;
pub mod kernels;
pub mod math;
pub mod ode;
pub mod quad;
pub mod regions;
pub mod specfun;
pub mod supersolutions;
pub mod verify;

pub use error::{Error, Result};


