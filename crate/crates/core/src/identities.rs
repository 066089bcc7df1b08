//! Two-sided evaluations of the hypergeometric identities the transforms rest
//! on. Each check evaluates both sides by independent routes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::{
    appell_f1, gauss_2f1, gauss_2f1_series, hyp3f2_terminating_unit, kdf_f5_with, ln_gamma, F5Args, F5Method,
};
use crate::orthopoly::{jacobi_p, JacobiParams};
use crate::quadrature::{integrate_endpoint_powers, GradedConfig};
use crate::{c64, ComplexValue};

/// Both sides of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
}

impl IdentityCheck {
    /// |lhs − rhs| / max(1, |rhs|).
    pub fn error(&self) -> f64 {
        (self.lhs - self.rhs).norm() / self.rhs.norm().max(1.0)
    }
}

/// ₂F₁(a,b;c;x) = (1−x)^{−a} ₂F₁(a, c−b; c; x/(x−1)), both sides by the plain
/// power series.
pub fn pfaff(a: ComplexValue, b: ComplexValue, c: ComplexValue, x: ComplexValue) -> Result<IdentityCheck> {
    let lhs = gauss_2f1_series(a, b, c, x)?;
    let rhs = (1.0 - x).powc(-a) * gauss_2f1_series(a, c - b, c, x / (x - 1.0))?;
    Ok(IdentityCheck { lhs, rhs })
}

/// F₁(a; b, c; b+c; x, y) = (1−y)^{−a} ₂F₁(a, b; b+c; (x−y)/(1−y)).
pub fn f1_reduction(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    x: ComplexValue,
    y: ComplexValue,
) -> Result<IdentityCheck> {
    let lhs = appell_f1(a, b, c, b + c, x, y)?;
    let rhs = (1.0 - y).powc(-a) * gauss_2f1(a, b, b + c, (x - y) / (1.0 - y))?;
    Ok(IdentityCheck { lhs, rhs })
}

/// F₅ with a = a′ collapses to ₂F₁(c, d; e; χ+ζ).
pub fn f5_reduction(
    c: ComplexValue,
    d: ComplexValue,
    e: ComplexValue,
    a: ComplexValue,
    chi: ComplexValue,
    zeta: ComplexValue,
    method: F5Method,
) -> Result<IdentityCheck> {
    let args = F5Args {
        c,
        d,
        e,
        a,
        a_prime: a,
        chi,
        zeta,
    };
    let lhs = kdf_f5_with(&args, method)?;
    let rhs = gauss_2f1(c, d, e, chi + zeta)?;
    Ok(IdentityCheck { lhs, rhs })
}

/// Arguments of the Srivastava–Rao bilinear sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SrivastavaRaoArgs {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub alpha: f64,
    pub gamma: f64,
}

/// Σ_{n<N} n! tⁿ/(1+α)_n P_n^{(γ−n,α)}(x) P_n^{(γ−n,α)}(y) against
/// (1 − (x−1)(y−1)t/4)^{−(1+γ+α)} (1−t)^γ
/// ₂F₁(1+γ+α, −γ; 1+α; −(x+1)(y+1)t/((1−t)(4−(x−1)(y−1)t))).
///
/// Needs |t| ≤ 1/4, x, y ∈ (−1, 1) and α > −1.
pub fn srivastava_rao(args: &SrivastavaRaoArgs, terms: usize) -> Result<IdentityCheck> {
    let SrivastavaRaoArgs { t, x, y, alpha, gamma } = *args;
    if t.abs() > 0.25 || x.abs() >= 1.0 || y.abs() >= 1.0 || alpha <= -1.0 {
        return Err(Error::domain(format!(
            "Srivastava–Rao check needs |t| ≤ 1/4, |x|, |y| < 1 and α > −1 (got t={t}, x={x}, y={y}, α={alpha})"
        )));
    }
    let mut lhs = c64(0.0, 0.0);
    let mut coef = 1.0;
    for n in 0..terms {
        let nf = n as f64;
        let p = |arg: f64| {
            jacobi_p(&JacobiParams {
                n,
                alpha: gamma - nf,
                beta: alpha,
                x: c64(arg, 0.0),
            })
        };
        lhs += coef * p(x) * p(y);
        coef *= (nf + 1.0) * t / (1.0 + alpha + nf);
    }
    let q = 4.0 - (x - 1.0) * (y - 1.0) * t;
    let arg = -(x + 1.0) * (y + 1.0) * t / ((1.0 - t) * q);
    let s = 1.0 + gamma + alpha;
    let rhs = (0.25 * q).powf(-s)
        * (1.0 - t).powf(gamma)
        * gauss_2f1(c64(s, 0.0), c64(-gamma, 0.0), c64(1.0 + alpha, 0.0), c64(arg, 0.0))?;
    Ok(IdentityCheck { lhs, rhs })
}

/// Arguments of the reduced Saran generating function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaranArgs {
    pub theta: f64,
    pub v: f64,
    pub y: f64,
    pub alpha: f64,
    /// Non-negative integer shift; it makes the F₁ side terminate.
    pub beta: u32,
    pub b: f64,
    pub c: ComplexValue,
}

/// Σ_{k<N} θ^k P_k^{(α−k, β−k)}(V) ₂F₁(−k, c; b; y) against
/// [1+(V+1)θ/2]^α [1+(V−1)θ/2]^β F₁(c; −α, −β; b; X, Y) with
/// X = y(V+1)θ/(2+(V+1)θ) and Y = y(V−1)θ/(2+(V−1)θ).
///
/// Needs |θ| ≤ 0.3 and |y| ≤ 0.4.
pub fn saran(args: &SaranArgs, terms: usize) -> Result<IdentityCheck> {
    let SaranArgs { theta, v, y, alpha, beta, b, c } = *args;
    if theta.abs() > 0.3 || y.abs() > 0.4 {
        return Err(Error::domain(format!(
            "Saran check needs |θ| ≤ 0.3 and |y| ≤ 0.4 (got θ={theta}, y={y})"
        )));
    }
    let beta_f = beta as f64;
    let mut lhs = c64(0.0, 0.0);
    let mut power = 1.0;
    for k in 0..terms {
        let kf = k as f64;
        let p = jacobi_p(&JacobiParams {
            n: k,
            alpha: alpha - kf,
            beta: beta_f - kf,
            x: c64(v, 0.0),
        });
        lhs += power * p * gauss_2f1(c64(-kf, 0.0), c, c64(b, 0.0), c64(y, 0.0))?;
        power *= theta;
    }
    let u_plus = 1.0 + 0.5 * (v + 1.0) * theta;
    let u_minus = 1.0 + 0.5 * (v - 1.0) * theta;
    let big_x = y * (v + 1.0) * theta / (2.0 * u_plus);
    let big_y = y * (v - 1.0) * theta / (2.0 * u_minus);
    let rhs = c64(u_plus, 0.0).powf(alpha)
        * u_minus.powi(beta as i32)
        * appell_f1(c, c64(-alpha, 0.0), c64(-beta_f, 0.0), c64(b, 0.0), c64(big_x, 0.0), c64(big_y, 0.0))?;
    Ok(IdentityCheck { lhs, rhs })
}

/// ₃F₂(−k, β, ρ; τ, ρ+ω; 1) as a finite sum against
/// Γ(ρ+ω)/(Γ(ρ)Γ(ω)) ∫₀¹ x^{ρ−1}(1−x)^{ω−1} ₂F₁(−k, β; τ; x) dx.
pub fn hyp3f2_integral(
    k: usize,
    beta: ComplexValue,
    rho: ComplexValue,
    tau: ComplexValue,
    omega: ComplexValue,
) -> Result<IdentityCheck> {
    let lhs = hyp3f2_terminating_unit(k, beta, rho, tau, rho + omega)?;
    let kf = -(k as f64);
    let integral = integrate_endpoint_powers(
        rho - 1.0,
        omega - 1.0,
        |x| gauss_2f1(c64(kf, 0.0), beta, tau, c64(x, 0.0)),
        &GradedConfig::default(),
    )?;
    let pre = (ln_gamma(rho + omega)? - ln_gamma(rho)? - ln_gamma(omega)?).exp();
    Ok(IdentityCheck { lhs, rhs: pre * integral })
}
