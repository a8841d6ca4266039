//! Adaptive Runge-Kutta integration (Cash-Karp 4(5)) for small systems.

use crate::error::{eval_err, Result};
use crate::math;

const A2: f64 = 1.0 / 5.0;
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [3.0 / 10.0, -9.0 / 10.0, 6.0 / 5.0];
const A5: [f64; 4] = [-11.0 / 54.0, 5.0 / 2.0, -70.0 / 27.0, 35.0 / 27.0];
const A6: [f64; 5] = [
    1631.0 / 55296.0,
    175.0 / 512.0,
    575.0 / 13824.0,
    44275.0 / 110592.0,
    253.0 / 4096.0,
];
const B5: [f64; 6] = [
    37.0 / 378.0,
    0.0,
    250.0 / 621.0,
    125.0 / 594.0,
    0.0,
    512.0 / 1771.0,
];
const B4: [f64; 6] = [
    2825.0 / 27648.0,
    0.0,
    18575.0 / 48384.0,
    13525.0 / 55296.0,
    277.0 / 14336.0,
    1.0 / 4.0,
];

/// Integrate y' = f(x, y) from `x0` to `x1` (x1 > x0) with per-step error
/// control `rtol`/`atol`. Returns y(x1).
pub fn integrate<const N: usize, F>(
    mut f: F,
    x0: f64,
    y0: [f64; N],
    x1: f64,
    rtol: f64,
    atol: f64,
) -> Result<[f64; N]>
where
    F: FnMut(f64, &[f64; N]) -> [f64; N],
{
    if x1 <= x0 {
        return Ok(y0);
    }
    let mut x = x0;
    let mut y = y0;
    let mut h = ((x1 - x0) * 1e-3).min(0.1).max(1e-12);
    let mut steps: u64 = 0;

    while x < x1 {
        if x + h > x1 {
            h = x1 - x;
        }
        steps += 1;
        if steps > 2_000_000 {
            return Err(eval_err!("ODE integration exceeded step budget"));
        }

        let k1 = f(x, &y);
        let mut yt = y;
        for i in 0..N {
            yt[i] = y[i] + h * A2 * k1[i];
        }
        let k2 = f(x + A2 * h, &yt);
        for i in 0..N {
            yt[i] = y[i] + h * (A3[0] * k1[i] + A3[1] * k2[i]);
        }
        let k3 = f(x + 0.3 * h, &yt);
        for i in 0..N {
            yt[i] = y[i] + h * (A4[0] * k1[i] + A4[1] * k2[i] + A4[2] * k3[i]);
        }
        let k4 = f(x + 0.6 * h, &yt);
        for i in 0..N {
            yt[i] = y[i] + h * (A5[0] * k1[i] + A5[1] * k2[i] + A5[2] * k3[i] + A5[3] * k4[i]);
        }
        let k5 = f(x + h, &yt);
        for i in 0..N {
            yt[i] = y[i]
                + h * (A6[0] * k1[i]
                    + A6[1] * k2[i]
                    + A6[2] * k3[i]
                    + A6[3] * k4[i]
                    + A6[4] * k5[i]);
        }
        let k6 = f(x + 0.875 * h, &yt);

        let ks = [k1, k2, k3, k4, k5, k6];
        let mut y5 = y;
        let mut err: f64 = 0.0;
        for i in 0..N {
            let mut d5 = 0.0;
            let mut d4 = 0.0;
            for (j, k) in ks.iter().enumerate() {
                d5 += B5[j] * k[i];
                d4 += B4[j] * k[i];
            }
            y5[i] = y[i] + h * d5;
            let scale = atol + rtol * y[i].abs().max(y5[i].abs());
            err = err.max((h * (d5 - d4)).abs() / scale);
        }

        if err <= 1.0 {
            x += h;
            y = y5;
        }
        let factor = if err > 0.0 {
            (0.9 * math::powf(err, -0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h *= factor;
        if h < 1e-14 * (x1 - x0) {
            return Err(eval_err!("ODE step size underflow at x = {x}"));
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay() {
        let y = integrate(|_, y: &[f64; 1]| [-y[0]], 0.0, [1.0], 3.0, 1e-12, 1e-14).unwrap();
        assert!((y[0] - (-3.0f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn harmonic_oscillator() {
        // y'' = -ω² y with ω = 5, over several periods.
        let om = 5.0;
        let y = integrate(
            |_, y: &[f64; 2]| [y[1], -om * om * y[0]],
            0.0,
            [1.0, 0.0],
            4.0,
            1e-11,
            1e-14,
        )
        .unwrap();
        assert!((y[0] - (om * 4.0f64).cos()).abs() < 1e-8);
        assert!((y[1] + om * (om * 4.0f64).sin()).abs() < 1e-7);
    }
}
