//! Special functions of the rank-one theory.
//!
//! Everything here concerns the operator `L = d²/dr² + 2k coth(r) d/dr` with
//! multiplicity k > 0:
//!
//! * [`phi0`] — the ground spherical (Legendre-type) function φ₀, from the
//!   integral representation
//!   φ₀(r) = (Γ(2k)/Γ(k)²) ∫₀¹ (e^r β + e^{−r}(1−β))^{−k} (β(1−β))^{k−1} dβ,
//!   evaluated in a scaled form by Gauss-Jacobi quadrature with exponents
//!   (k−1, k−1), so the endpoint singularity for k < 1 is exact in the rule.
//! * [`phi0_jet`] — (φ₀, φ₀′, φ₀″) by differentiating under the integral
//!   sign; no numerical differentiation anywhere.
//! * [`phi_lambda`] — the eigenfunction of `L` with eigenvalue −(λ²+k²) and
//!   φ_λ(0)=1, via the Gauss hypergeometric series
//!   ₂F₁((k+iλ)/2,(k−iλ)/2; k+1/2; −sinh²r)
//!   with argument transformations (Pfaff inside the unit disk; the 1/z
//!   connection formula outside), and an adaptive Runge-Kutta fallback where
//!   power series lose too many digits to cancellation.
//! * [`g_function`] — G(r) = r (d/dr) ln(sinh^k r · φ₀(r)) and its bounded
//!   remainder K(r) = (G(r)−1)(1+r).
//! * [`plancherel_density`] — |Γ(k+iλ)/Γ(iλ)|², the symmetric Plancherel
//!   density up to the global constant fixed in the kernel module.

use crate::error::{domain_err, eval_err, Result};
use crate::gamma::{ln_gamma, log_gamma_complex};
use crate::math;
use crate::ode;
use crate::quad::jacobi_rule_cached;
use num_complex::Complex64;

/// The multiplicity parameter k > 0 (ρ = k in rank one).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multiplicity(f64);

impl Multiplicity {
    pub fn new(k: f64) -> Result<Self> {
        if k.is_finite() && k > 0.0 {
            Ok(Multiplicity(k))
        } else {
            Err(domain_err!("multiplicity must be finite and positive, got {k}"))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// A spectral frequency λ ≥ 0 (evenness in λ makes negative values redundant).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint(f64);

impl SpectralPoint {
    pub fn new(lambda: f64) -> Result<Self> {
        if lambda.is_finite() && lambda >= 0.0 {
            Ok(SpectralPoint(lambda))
        } else {
            Err(domain_err!("spectral point must be finite and >= 0, got {lambda}"))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Quadrature resolution knobs shared by the special-function and kernel
/// integrals.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    /// Gauss-Jacobi nodes for the β-integral behind φ₀.
    pub beta_nodes: usize,
    /// Minimum number of panels for the spectral λ-integral.
    pub lambda_panels: usize,
    /// Gauss-Legendre nodes per λ-panel.
    pub nodes_per_panel: usize,
    /// Relative tolerance targeted by adaptive refinements.
    pub rel_tol: f64,
}

impl QuadratureSpec {
    pub fn new(
        beta_nodes: usize,
        lambda_panels: usize,
        nodes_per_panel: usize,
        rel_tol: f64,
    ) -> Result<Self> {
        if beta_nodes < 4 || lambda_panels < 4 || nodes_per_panel < 4 {
            return Err(domain_err!("quadrature node/panel counts must be >= 4"));
        }
        if !(rel_tol > 0.0 && rel_tol <= 1e-2) {
            return Err(domain_err!("rel_tol must lie in (0, 1e-2], got {rel_tol}"));
        }
        Ok(QuadratureSpec {
            beta_nodes,
            lambda_panels,
            nodes_per_panel,
            rel_tol,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            beta_nodes: 128,
            lambda_panels: 8,
            nodes_per_panel: 16,
            rel_tol: 1e-10,
        }
    }
}

// --- phi0 ---------------------------------------------------------------

/// p(y) = (1 − e^{−y})/y and its first two derivatives, series-stabilized
/// near 0.
fn p_jet(y: f64) -> (f64, f64, f64) {
    if y < 0.1 {
        let p = 1.0
            + y * (-1.0 / 2.0
                + y * (1.0 / 6.0
                    + y * (-1.0 / 24.0
                        + y * (1.0 / 120.0
                            + y * (-1.0 / 720.0 + y * (1.0 / 5040.0 - y / 40320.0))))));
        let dp = -1.0 / 2.0
            + y * (1.0 / 3.0
                + y * (-1.0 / 8.0
                    + y * (1.0 / 30.0 + y * (-1.0 / 144.0 + y * (1.0 / 840.0 - y / 5760.0)))));
        let ddp = 1.0 / 3.0
            + y * (-1.0 / 4.0
                + y * (1.0 / 10.0 + y * (-1.0 / 36.0 + y * (1.0 / 168.0 - y / 960.0))));
        (p, dp, ddp)
    } else {
        let e = math::exp(-y);
        let y2 = y * y;
        (
            -math::exp_m1(-y) / y,
            (e * (1.0 + y) - 1.0) / y2,
            (2.0 - e * (y2 + 2.0 * y + 2.0)) / (y2 * y),
        )
    }
}

/// ln φ₀(r) together with d/dr ln φ₀ and d²/dr² ln φ₀.
fn phi0_ln_jet(k: f64, r: f64, beta_nodes: usize) -> Result<(f64, f64, f64)> {
    debug_assert!(r > 0.0);
    let rule = jacobi_rule_cached(beta_nodes, k - 1.0, k - 1.0)?;

    // Jq = ∫ (1−x²)^{k−1} Ψ dx with Ψ = [p(r(1−x)) p(r(1+x))]^{k−1},
    // plus its first two r-derivatives in the same pass.
    let km1 = k - 1.0;
    let mut jq = 0.0;
    let mut jq1 = 0.0;
    let mut jq2 = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let um = 1.0 - x;
        let up = 1.0 + x;
        let (pm, dpm, ddpm) = p_jet(r * um);
        let (pp, dpp, ddpp) = p_jet(r * up);
        let psi = math::exp(km1 * (math::ln(pm) + math::ln(pp)));
        let lm = dpm / pm;
        let lp = dpp / pp;
        let dlog = km1 * (um * lm + up * lp);
        let ddlog = km1 * (um * um * (ddpm / pm - lm * lm) + up * up * (ddpp / pp - lp * lp));
        jq += w * psi;
        jq1 += w * psi * dlog;
        jq2 += w * psi * (ddlog + dlog * dlog);
    }

    let ln_c = ln_gamma(2.0 * k) - 2.0 * ln_gamma(k);
    let ln_phi0 = ln_c + (1.0 - 2.0 * k) * math::ln_sinh_over_x(r) + km1 * r
        - (2.0 * k - 1.0) * core::f64::consts::LN_2
        + math::ln(jq);
    let l1 = (1.0 - 2.0 * k) * math::coth_minus_inv(r) + km1 + jq1 / jq;
    let l2 =
        (1.0 - 2.0 * k) * math::inv_sq_minus_csch_sq(r) + jq2 / jq - (jq1 / jq) * (jq1 / jq);
    Ok((ln_phi0, l1, l2))
}

fn check_r(r: f64) -> Result<()> {
    if r.is_finite() && r >= 0.0 {
        Ok(())
    } else {
        Err(domain_err!("radial argument must be finite and >= 0, got {r}"))
    }
}

/// The ground spherical function φ₀(r) ∈ (0, 1].
pub fn phi0(k: Multiplicity, r: f64, q: &QuadratureSpec) -> Result<f64> {
    check_r(r)?;
    if r == 0.0 {
        return Ok(1.0);
    }
    Ok(math::exp(phi0_ln_jet(k.get(), r, q.beta_nodes)?.0))
}

/// ln φ₀(r); preferred over [`phi0`] where e^{−kr} underflows.
pub fn phi0_ln(k: Multiplicity, r: f64, q: &QuadratureSpec) -> Result<f64> {
    check_r(r)?;
    if r == 0.0 {
        return Ok(0.0);
    }
    Ok(phi0_ln_jet(k.get(), r, q.beta_nodes)?.0)
}

/// (φ₀, φ₀′, φ₀″) with all derivatives taken under the integral sign.
pub fn phi0_jet(k: Multiplicity, r: f64, q: &QuadratureSpec) -> Result<(f64, f64, f64)> {
    check_r(r)?;
    let kk = k.get();
    if r == 0.0 {
        return Ok((1.0, 0.0, -kk * kk / (1.0 + 2.0 * kk)));
    }
    let (ln, l1, l2) = phi0_ln_jet(kk, r, q.beta_nodes)?;
    let v = math::exp(ln);
    Ok((v, v * l1, v * (l2 + l1 * l1)))
}

/// (ln φ₀, (ln φ₀)′, (ln φ₀)″) — the log-derivative jet, stable where φ₀
/// itself underflows.
pub fn phi0_log_jet(k: Multiplicity, r: f64, q: &QuadratureSpec) -> Result<(f64, f64, f64)> {
    check_r(r)?;
    let kk = k.get();
    if r == 0.0 {
        return Ok((0.0, 0.0, -kk * kk / (1.0 + 2.0 * kk)));
    }
    phi0_ln_jet(kk, r, q.beta_nodes)
}

// --- G and K -------------------------------------------------------------

/// G(r) = r·(d/dr) ln(sinh^k r · φ₀(r)) and K(r) = (G(r) − 1)(1 + r).
///
/// G is positive for r > 0 and tends to k as r → 0⁺; that limit value is
/// available from [`g_function_at_zero`].
pub fn g_function(k: Multiplicity, r: f64, q: &QuadratureSpec) -> Result<(f64, f64)> {
    if !(r.is_finite() && r > 0.0) {
        return Err(domain_err!(
            "g_function needs r > 0 (the r -> 0 limit is G = k, K = k - 1); got {r}"
        ));
    }
    let kk = k.get();
    let (_, l1, _) = phi0_ln_jet(kk, r, q.beta_nodes)?;
    let g = r * (kk * math::coth(r) + l1);
    Ok((g, (g - 1.0) * (1.0 + r)))
}

/// The r → 0⁺ limit of (G, K).
pub fn g_function_at_zero(k: Multiplicity) -> (f64, f64) {
    (k.get(), k.get() - 1.0)
}

// --- Plancherel density ---------------------------------------------------

/// |Γ(k+iλ)/Γ(iλ)|², the unnormalized symmetric Plancherel density.
/// Vanishes at λ = 0 and grows like λ^{2k}.
pub fn plancherel_density(k: Multiplicity, lam: SpectralPoint) -> f64 {
    let l = lam.get();
    if l == 0.0 {
        return 0.0;
    }
    let a = log_gamma_complex(Complex64::new(k.get(), l)).expect("k > 0 excludes poles");
    let b = log_gamma_complex(Complex64::new(0.0, l)).expect("lambda > 0 excludes the pole");
    math::exp(2.0 * (a.re - b.re))
}

// --- phi_lambda ------------------------------------------------------------

/// Smallest λ treated as genuinely non-zero; below this φ_λ = φ₀ to well
/// beyond double precision (the error is O(λ²r²)).
const LAMBDA_TINY: f64 = 1e-8;

/// sinh² threshold between the Pfaff series and the 1/z connection formula.
const SH2_CROSSOVER: f64 = 1.5;

/// The Heckman-Opdam eigenfunction φ_λ(r): solution of
/// φ″ + 2k coth(r) φ′ + (λ²+k²) φ = 0 with φ(0) = 1, φ′(0) = 0.
pub fn phi_lambda(k: Multiplicity, lam: SpectralPoint, r: f64, q: &QuadratureSpec) -> Result<f64> {
    check_r(r)?;
    let kk = k.get();
    let l = lam.get();
    if r == 0.0 {
        return Ok(1.0);
    }
    if l < LAMBDA_TINY {
        return phi0(k, r, q);
    }
    let sh = math::sinh(r);
    if sh * sh >= SH2_CROSSOVER {
        return hc_expansion(kk, l, r);
    }
    match pfaff_series(kk, l, r) {
        SeriesOutcome::Converged(v) => Ok(v),
        SeriesOutcome::LostPrecision => phi_lambda_ode(k, lam, r),
        SeriesOutcome::NoConvergence => Err(eval_err!(
            "phi_lambda series failed to converge at k={kk}, lambda={l}, r={r}"
        )),
    }
}

/// Independent oracle: integrate the defining ODE with a Taylor start at the
/// origin and adaptive Runge-Kutta.
pub fn phi_lambda_ode(k: Multiplicity, lam: SpectralPoint, r: f64) -> Result<f64> {
    check_r(r)?;
    let kk = k.get();
    let l = lam.get();
    if r == 0.0 {
        return Ok(1.0);
    }
    let e = l * l + kk * kk;
    let c2 = -e / (2.0 * (1.0 + 2.0 * kk));
    let c4 = -c2 * (e + 4.0 * kk / 3.0) / (4.0 * (3.0 + 2.0 * kk));
    let c6 = -(c4 * (e + 8.0 * kk / 3.0) - 4.0 * kk * c2 / 45.0) / (6.0 * (5.0 + 2.0 * kk));
    let r0 = (0.1 / math::sqrt(e + 1.0)).min(1e-3);
    if r <= r0 {
        let r2 = r * r;
        return Ok(1.0 + r2 * (c2 + r2 * (c4 + r2 * c6)));
    }
    let r02 = r0 * r0;
    let y0 = [
        1.0 + r02 * (c2 + r02 * (c4 + r02 * c6)),
        r0 * (2.0 * c2 + r02 * (4.0 * c4 + r02 * 6.0 * c6)),
    ];
    let y = ode::integrate(
        |x, y: &[f64; 2]| [y[1], -2.0 * kk * math::coth(x) * y[1] - e * y[0]],
        r0,
        y0,
        r,
        1e-11,
        1e-250,
    )?;
    Ok(y[0])
}

/// Series evaluation cross-validated against the ODE oracle; disagreement
/// beyond 1e-6 relative is reported as an evaluation error.
pub fn phi_lambda_checked(
    k: Multiplicity,
    lam: SpectralPoint,
    r: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    let a = phi_lambda(k, lam, r, q)?;
    let b = phi_lambda_ode(k, lam, r)?;
    let scale = a.abs().max(b.abs()).max(1e-300);
    if (a - b).abs() > 1e-6 * scale {
        return Err(eval_err!(
            "phi_lambda methods disagree at k={}, lambda={}, r={r}: series {a} vs ODE {b}",
            k.get(),
            lam.get()
        ));
    }
    Ok(a)
}

enum SeriesOutcome {
    Converged(f64),
    LostPrecision,
    NoConvergence,
}

/// Pfaff-transformed Gauss series valid on sinh²r < 1:
/// φ_λ = Re[(cosh r)^{−(k+iλ)} ₂F₁((k+iλ)/2, (k+1+iλ)/2; k+1/2; tanh²r)].
fn pfaff_series(k: f64, l: f64, r: f64) -> SeriesOutcome {
    let th = math::tanh(r);
    let w = th * th;
    let a = Complex64::new(0.5 * k, 0.5 * l);
    let a2 = Complex64::new(0.5 * (k + 1.0), 0.5 * l);
    let c = k + 0.5;

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut max_mag: f64 = 1.0;
    let mut small_streak = 0;
    let mut converged = false;
    for n in 0..4000 {
        let nf = n as f64;
        term *= (a + nf) * (a2 + nf) * (w / ((c + nf) * (nf + 1.0)));
        sum += term;
        max_mag = max_mag.max(term.norm());
        if term.norm() <= sum.norm() * 1e-18 + 1e-308 {
            small_streak += 1;
            if small_streak >= 2 {
                converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    if !converged {
        return SeriesOutcome::NoConvergence;
    }
    // Cancellation audit: the roundoff floor is eps times the largest term.
    if max_mag * 2e-16 > sum.norm() * 3e-8 {
        return SeriesOutcome::LostPrecision;
    }
    let ln_ch = math::ln(math::cosh(r));
    let prefactor = (-Complex64::new(k, l) * ln_ch).exp();
    SeriesOutcome::Converged((prefactor * sum).re)
}

/// Connection-formula evaluation for sinh²r > 1:
/// φ_λ = 2 Re[A(λ) sinh^{−(k+iλ)}(r) ₂F₁(a, a−c+1; 1+iλ; −1/sinh²r)]
/// with A(λ) = Γ(k+1/2) Γ(−iλ) 2^{k−iλ−1} / (√π Γ(k−iλ)).
fn hc_expansion(k: f64, l: f64, r: f64) -> Result<f64> {
    let (f, _) = hc_inner_series(Complex64::new(0.0, l), k, r, 4000)?;
    let ln_a = ln_gamma(k + 0.5)
        + log_gamma_complex(Complex64::new(0.0, -l))?
        + Complex64::new(k - 1.0, -l) * core::f64::consts::LN_2
        - 0.5 * core::f64::consts::PI.ln()
        - log_gamma_complex(Complex64::new(k, -l))?;
    let expo = ln_a - Complex64::new(k, l) * math::ln_sinh(r) + f.ln();
    Ok(2.0 * expo.exp().re)
}

/// ₂F₁((k+iλ)/2, (1−k+iλ)/2; 1+iλ; −1/sinh²r) for complex iλ = `ilam`,
/// returning the sum and the largest term magnitude.
pub(crate) fn hc_inner_series(
    ilam: Complex64,
    k: f64,
    r: f64,
    max_terms: usize,
) -> Result<(Complex64, f64)> {
    let sh = math::sinh(r);
    let w = -1.0 / (sh * sh);
    let a = (ilam + k) * 0.5;
    let b = (ilam + (1.0 - k)) * 0.5;
    let c = ilam + 1.0;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut max_mag: f64 = 1.0;
    let mut small_streak = 0;
    for n in 0..max_terms {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) * (w / ((c + nf) * (nf + 1.0)));
        sum += term;
        max_mag = max_mag.max(term.norm());
        if term.norm() <= sum.norm() * 1e-18 + 1e-308 {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok((sum, max_mag));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(eval_err!(
        "hypergeometric connection series failed to converge at k={k}, r={r}"
    ))
}
