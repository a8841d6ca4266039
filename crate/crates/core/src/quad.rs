//! Gaussian quadrature rules built by the Golub-Welsch algorithm.
//!
//! The Jacobi rule integrates (1−x)^α (1+x)^β f(x) on [−1, 1] with the weight
//! absorbed into the rule, which makes endpoint singularities with exponent
//! > −1 exact. Recurrence coefficients follow Gautschi's `r_jacobi`
//! normalization; nodes and weights come from the implicit QL eigensolver
//! below, which tracks only the first row of the eigenvector matrix.

use crate::error::{config_err, eval_err, Result};
use crate::gamma::ln_gamma;
use crate::math;
use alloc::vec;
use alloc::vec::Vec;

/// Nodes and weights of a Gaussian rule on [−1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// Gauss-Legendre rule with `n` nodes.
    pub fn legendre(n: usize) -> Result<Self> {
        Self::jacobi(n, 0.0, 0.0)
    }

    /// Gauss-Jacobi rule with `n` nodes for the weight (1−x)^α (1+x)^β.
    pub fn jacobi(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        if n < 2 {
            return Err(config_err!("quadrature degree must be at least 2, got {n}"));
        }
        if !(alpha > -1.0 && alpha.is_finite() && beta > -1.0 && beta.is_finite()) {
            return Err(config_err!(
                "Jacobi exponents must be finite and > -1, got ({alpha}, {beta})"
            ));
        }
        let ab = alpha + beta;
        // Total weight mass: 2^{α+β+1} B(α+1, β+1).
        let mu0 = math::exp(
            (ab + 1.0) * core::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
                - ln_gamma(ab + 2.0),
        );

        let mut diag = vec![0.0; n];
        let mut off = vec![0.0; n];
        diag[0] = (beta - alpha) / (ab + 2.0);
        for i in 1..n {
            let fi = i as f64;
            let den = 2.0 * fi + ab;
            diag[i] = (beta * beta - alpha * alpha) / (den * (den + 2.0));
            let b = if i == 1 {
                4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0))
            } else {
                4.0 * fi * (fi + alpha) * (fi + beta) * (fi + ab)
                    / (den * den * (den + 1.0) * (den - 1.0))
            };
            off[i - 1] = math::sqrt(b);
        }

        let (mut nodes, first_row) = tridiag_eigen_first_row(diag, off)?;
        let mut weights: Vec<f64> = first_row.iter().map(|z| mu0 * z * z).collect();

        // Symmetric weight: enforce the exact node/weight symmetry the
        // eigensolver only approximates.
        if alpha == beta {
            let half = n / 2;
            for i in 0..half {
                let j = n - 1 - i;
                let x = 0.5 * (nodes[i] - nodes[j]);
                nodes[i] = x;
                nodes[j] = -x;
                let w = 0.5 * (weights[i] + weights[j]);
                weights[i] = w;
                weights[j] = w;
            }
            if n % 2 == 1 {
                nodes[half] = 0.0;
            }
        }
        Ok(GaussRule { nodes, weights })
    }

    /// ∫ over [a, b] of w(x)·f(x) with the rule's weight mapped affinely.
    ///
    /// For a Jacobi rule the absorbed weight transforms as
    /// (1−x)^α (1+x)^β ↦ ((b−u)·2/(b−a))^α ((u−a)·2/(b−a))^β, so the returned
    /// value is ∫ₐᵇ ((b−u)2/(b−a))^α ((u−a)2/(b−a))^β f(u) du.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let c = 0.5 * (b - a);
        let m = 0.5 * (b + a);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(m + c * x);
        }
        c * acc
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// [`GaussRule::jacobi`] behind a small per-thread cache. Rule construction
/// is O(n²); the special-function evaluators hit the same (n, α, β) key for
/// every point of a sweep.
#[cfg(feature = "std")]
pub fn jacobi_rule_cached(n: usize, alpha: f64, beta: f64) -> Result<alloc::rc::Rc<GaussRule>> {
    use alloc::rc::Rc;
    use core::cell::RefCell;

    std::thread_local! {
        static CACHE: RefCell<Vec<((usize, u64, u64), Rc<GaussRule>)>> =
            const { RefCell::new(Vec::new()) };
    }
    let key = (n, alpha.to_bits(), beta.to_bits());
    CACHE.with(|cache| {
        let mut cache = cache.borrow_mut();
        if let Some((_, rule)) = cache.iter().find(|(k, _)| *k == key) {
            return Ok(rule.clone());
        }
        let rule = Rc::new(GaussRule::jacobi(n, alpha, beta)?);
        if cache.len() >= 32 {
            cache.remove(0);
        }
        cache.push((key, rule.clone()));
        Ok(rule)
    })
}

#[cfg(not(feature = "std"))]
pub fn jacobi_rule_cached(n: usize, alpha: f64, beta: f64) -> Result<alloc::rc::Rc<GaussRule>> {
    GaussRule::jacobi(n, alpha, beta).map(alloc::rc::Rc::new)
}

/// Eigenvalues (ascending) and first components of the orthonormal
/// eigenvectors of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (length n, last entry ignored). Implicit QL with
/// Wilkinson-style shifts.
fn tridiag_eigen_first_row(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = d.len();
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    if n == 1 {
        return Ok((d, z));
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                if e[m].abs() <= f64::EPSILON * (d[m].abs() + d[m + 1].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(eval_err!("tridiagonal QL failed to converge at row {l}"));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = math::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r } else { -r });
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let mut f = s * e[i];
                let b = c * e[i];
                r = math::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_unstable_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap());
    let nodes = idx.iter().map(|&i| d[i]).collect();
    let first = idx.iter().map(|&i| z[i]).collect();
    Ok((nodes, first))
}
