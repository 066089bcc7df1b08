//! Complex log-gamma, reciprocal gamma and Pochhammer symbols.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::{c64, ComplexValue};

const LANCZOS_G: f64 = 607.0 / 128.0;

// Godfrey's 15-term coefficient set for g = 607/128.
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_78;

/// Below this real part the shift recurrence is used to reach the Lanczos region.
const SHIFT_LIMIT: f64 = -256.0;

/// Returns `Some(n)` when `z` is (numerically) the non-positive integer `-n`.
pub fn as_nonpositive_integer(z: ComplexValue) -> Option<u64> {
    if z.im != 0.0 || z.re > 0.0 {
        return None;
    }
    let r = z.re.round();
    if (z.re - r).abs() <= 1e-12 * r.abs().max(1.0) {
        Some((-r) as u64)
    } else {
        None
    }
}

fn lanczos_ln_gamma(z: ComplexValue) -> ComplexValue {
    // lnΓ(x + 1) with x = z − 1, valid for Re z ≥ 1/2.
    let x = z - 1.0;
    let mut series = c64(LANCZOS_COEF[0], 0.0);
    for (k, coef) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += *coef / (x + k as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (x + 0.5) * t.ln() - t + series.ln()
}

/// Principal branch of log Γ(z).
///
/// The result is the analytic continuation of the real log-gamma from the
/// positive axis with the cut along the negative real axis. For Re z < 1/2 the
/// argument is shifted up with Γ(z) = Γ(z+n)/∏(z+k), which keeps the imaginary
/// part on that branch; far to the left the reflection formula takes over and
/// the imaginary part is only defined modulo 2π.
pub fn ln_gamma(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("ln_gamma of non-finite argument {z}")));
    }
    if let Some(n) = as_nonpositive_integer(z) {
        return Err(Error::pole(format!("Γ has a pole at z = -{n}")));
    }
    if z.re >= 0.5 {
        return Ok(lanczos_ln_gamma(z));
    }
    if z.re < SHIFT_LIMIT {
        let one_minus = lanczos_ln_gamma(1.0 - z);
        return Ok(PI.ln() - ln_sin_pi(z) - one_minus);
    }
    let shift = (0.5 - z.re).ceil() as usize;
    let mut acc = lanczos_ln_gamma(z + shift as f64);
    for k in 0..shift {
        acc -= (z + k as f64).ln();
    }
    Ok(acc)
}

// ln sin(πz) without overflow for large |Im z|.
fn ln_sin_pi(z: ComplexValue) -> ComplexValue {
    let i = c64(0.0, 1.0);
    if z.im.abs() < 20.0 {
        (PI * z).sin().ln()
    } else if z.im > 0.0 {
        let e = (2.0 * PI * i * z).exp();
        -(2.0f64.ln()) + i * (PI / 2.0) - i * PI * z + (1.0 - e).ln()
    } else {
        let e = (-2.0 * PI * i * z).exp();
        -(2.0f64.ln()) - i * (PI / 2.0) + i * PI * z + (1.0 - e).ln()
    }
}

/// Γ(z) for complex z.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    ln_gamma(z).map(|l| l.exp())
}

/// 1/Γ(z), an entire function: zero at the poles of Γ.
pub fn rgamma(z: ComplexValue) -> ComplexValue {
    if as_nonpositive_integer(z).is_some() {
        return c64(0.0, 0.0);
    }
    if z.norm() < 0.5 {
        // 1/Γ(z) = z/Γ(1+z) stays regular as z → 0.
        return z * (-lanczos_ln_gamma(z + 1.0)).exp();
    }
    match ln_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => c64(0.0, 0.0),
    }
}

/// Real log-gamma for x > 0.
pub fn ln_gamma_real(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    lanczos_ln_gamma(c64(x, 0.0)).re
}

/// Rising factorial (a)_n = a(a+1)…(a+n−1); the empty product for n = 0.
pub fn pochhammer(a: ComplexValue, n: usize) -> ComplexValue {
    let mut acc = c64(1.0, 0.0);
    for k in 0..n {
        acc *= a + k as f64;
    }
    acc
}
