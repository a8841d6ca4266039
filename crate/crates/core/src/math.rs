//! Scalar math routines, routed to std intrinsics or `libm` under `no_std`.

#[cfg(feature = "std")]
mod imp {
    #[inline]
    pub fn exp(x: f64) -> f64 {
        x.exp()
    }
    #[inline]
    pub fn exp_m1(x: f64) -> f64 {
        x.exp_m1()
    }
    #[inline]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }
    #[inline]
    pub fn ln_1p(x: f64) -> f64 {
        x.ln_1p()
    }
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    #[inline]
    pub fn powf(x: f64, y: f64) -> f64 {
        x.powf(y)
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        x.sin()
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        x.cos()
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        y.atan2(x)
    }
    #[inline]
    pub fn sinh(x: f64) -> f64 {
        x.sinh()
    }
    #[inline]
    pub fn cosh(x: f64) -> f64 {
        x.cosh()
    }
    #[inline]
    pub fn tanh(x: f64) -> f64 {
        x.tanh()
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        x.hypot(y)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        x.floor()
    }
    #[inline]
    pub fn ceil(x: f64) -> f64 {
        x.ceil()
    }
    #[inline]
    pub fn round(x: f64) -> f64 {
        x.round()
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    #[inline]
    pub fn exp(x: f64) -> f64 {
        libm::exp(x)
    }
    #[inline]
    pub fn exp_m1(x: f64) -> f64 {
        libm::expm1(x)
    }
    #[inline]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
    #[inline]
    pub fn ln_1p(x: f64) -> f64 {
        libm::log1p(x)
    }
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn powf(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }
    #[inline]
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        libm::atan2(y, x)
    }
    #[inline]
    pub fn sinh(x: f64) -> f64 {
        libm::sinh(x)
    }
    #[inline]
    pub fn cosh(x: f64) -> f64 {
        libm::cosh(x)
    }
    #[inline]
    pub fn tanh(x: f64) -> f64 {
        libm::tanh(x)
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        libm::hypot(x, y)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    #[inline]
    pub fn ceil(x: f64) -> f64 {
        libm::ceil(x)
    }
    #[inline]
    pub fn round(x: f64) -> f64 {
        libm::round(x)
    }
}

pub use imp::*;

/// coth(x) for x > 0.
#[inline]
pub fn coth(x: f64) -> f64 {
    1.0 / tanh(x)
}

/// ln(sinh x), overflow-free for large x.
#[inline]
pub fn ln_sinh(x: f64) -> f64 {
    if x > 20.0 {
        x - core::f64::consts::LN_2 + ln_1p(-exp(-2.0 * x))
    } else {
        ln(sinh(x))
    }
}

/// ln(sinh(x)/x); stable near 0 where sinh(x)/x → 1.
#[inline]
pub fn ln_sinh_over_x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x < 0.1 {
        let x2 = x * x;
        ln_1p(x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0)))
    } else {
        ln_sinh(x) - ln(x)
    }
}

/// coth(x) − 1/x; stable near 0 (→ x/3).
#[inline]
pub fn coth_minus_inv(x: f64) -> f64 {
    if x < 0.05 {
        let x2 = x * x;
        x / 3.0 * (1.0 - x2 / 15.0 * (1.0 - 2.0 * x2 / 21.0))
    } else {
        coth(x) - 1.0 / x
    }
}

/// 1/x² − 1/sinh²(x); stable near 0 (→ 1/3).
#[inline]
pub fn inv_sq_minus_csch_sq(x: f64) -> f64 {
    if x < 0.05 {
        let x2 = x * x;
        (1.0 - x2 / 5.0 * (1.0 - 17.0 * x2 / 84.0)) / 3.0
    } else {
        let s = sinh(x);
        1.0 / (x * x) - 1.0 / (s * s)
    }
}

/// (1 − e^{−y})/y for y ≥ 0, with p(0) = 1.
#[inline]
pub fn expm1_ratio(y: f64) -> f64 {
    if y < 1e-8 {
        1.0 - 0.5 * y
    } else {
        -exp_m1(-y) / y
    }
}
