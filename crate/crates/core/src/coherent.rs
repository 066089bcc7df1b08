//! Coherent states labelled by disk points: normalization, overlaps and
//! wavefunctions.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::disk::{basis_phi, DiskPoint, LandauIndex};
use crate::error::{Error, Result};
use crate::hypergeom::{gauss_2f1, kdf_f5_terminating_bounded, kdf_f5_with, ln_gamma_real, F5Args, F5Method};
use crate::oscillator::{common_factor, eigenfunctions, ModelParams};
use crate::{c64, ComplexValue};

/// Largest |z| accepted by the closed-form kernels.
pub const R_MAX: f64 = 0.85;
/// Smallest |1 − z| accepted by the closed-form kernels.
pub const MIN_DIST_FROM_ONE: f64 = 0.2;

/// Rejects labels outside |z| ≤ 0.85, |1 − z| ≥ 0.2.
pub fn check_kernel_domain(z: DiskPoint) -> Result<()> {
    if z.z.norm() > R_MAX {
        return Err(Error::domain(format!(
            "|z| = {:.6} exceeds the kernel cap r_max = {R_MAX}",
            z.z.norm()
        )));
    }
    if (1.0 - z.z).norm() < MIN_DIST_FROM_ONE {
        return Err(Error::domain(format!(
            "|1 − z| = {:.6} is below the kernel cap {MIN_DIST_FROM_ONE}",
            (1.0 - z.z).norm()
        )));
    }
    Ok(())
}

/// A coherent state: disk label plus model parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherentLabel {
    pub z: DiskPoint,
    pub params: ModelParams,
}

/// N_{σ,m}(z) = (σ−2m−1)/(π(1−|z|²)^σ).
pub fn normalization(idx: &LandauIndex, z: DiskPoint) -> f64 {
    idx.beta() / (PI * (1.0 - z.r2()).powf(idx.sigma))
}

/// Overlap of the coherent states labelled z and w:
/// (N(z)N(w))^{−1/2} Σ_k Φ_k(z) conj(Φ_k(w)), in closed form.
///
/// The closed form is
/// Γ(σ−m)/(m!(−1)^m Γ(σ−2m)) (ρ_z ρ_w)^{σ/2−m} |1−z w̄|^{2m} (1−z w̄)^{−σ}
/// ₂F₁(−m, σ−m; σ−2m; ρ_z ρ_w/|1−z w̄|²) with ρ = 1 − |·|². The power
/// (1−z w̄)^{−σ} is on the principal branch, which is continuous on 𝔻 × 𝔻
/// since Re(1 − z w̄) > 0.
pub fn overlap(idx: &LandauIndex, z: DiskPoint, w: DiskPoint) -> Result<ComplexValue> {
    idx.validate()?;
    let (sigma, m) = (idx.sigma, idx.m);
    let mf = m as f64;
    let rho = (1.0 - z.r2()) * (1.0 - w.r2());
    let q = 1.0 - z.z * w.z.conj();
    let q2 = q.norm_sqr();
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let ln_ratio = ln_gamma_real(sigma - mf) - ln_gamma_real(mf + 1.0) - ln_gamma_real(sigma - 2.0 * mf);
    let f = gauss_2f1(
        c64(-mf, 0.0),
        c64(sigma - mf, 0.0),
        c64(sigma - 2.0 * mf, 0.0),
        c64(rho / q2, 0.0),
    )?;
    let modulus = (ln_ratio + (0.5 * sigma - mf) * rho.ln() + mf * q2.ln()).exp();
    Ok(sign * modulus * (-sigma * q.ln()).exp() * f)
}

/// The truncated series (N(z)N(w))^{−1/2} Σ_{k≤K} Φ_k(z) conj(Φ_k(w)).
pub fn overlap_series(idx: &LandauIndex, z: DiskPoint, w: DiskPoint, kmax: usize) -> Result<ComplexValue> {
    idx.validate()?;
    let mut sum = c64(0.0, 0.0);
    for k in 0..=kmax {
        sum += basis_phi(k, idx, z)? * basis_phi(k, idx, w)?.conj();
    }
    Ok(sum / (normalization(idx, z) * normalization(idx, w)).sqrt())
}

/// ‖|z⟩ − |w⟩‖ = √(2(1 − Re⟨z|w⟩)).
pub fn cs_distance(idx: &LandauIndex, z: DiskPoint, w: DiskPoint) -> Result<f64> {
    let o = overlap(idx, z, w)?;
    Ok((2.0 * (1.0 - o.re)).max(0.0).sqrt())
}

/// The F₅ arguments of the closed-form wavefunction at label z and energy ξ.
pub fn wavefunction_f5_args(params: &ModelParams, z: DiskPoint, xi: f64) -> F5Args {
    let g = params.gamma();
    let zz = z.z;
    let r = z.r2();
    F5Args {
        c: c64(g, xi),
        d: c64(g, -xi),
        e: c64(g + 0.5, 0.0),
        a: c64(2.0 * g + params.m as f64, 0.0),
        a_prime: c64(2.0 * g, 0.0),
        chi: (1.0 - r) / ((zz.conj() - 1.0) * (1.0 - zz)),
        zeta: 1.0 / (1.0 - zz),
    }
}

/// Closed-form wavefunction of the coherent state with label `label`.
pub fn cs_wavefunction(label: &CoherentLabel, xi: f64) -> Result<ComplexValue> {
    cs_wavefunction_with(label, xi, F5Method::Auto)
}

/// Closed-form wavefunction with a chosen F₅ evaluation path:
///
/// √(2Γ(2γ+m)/m!) i^γ (c^{−4})^{iξ} Γ²(γ+iξ)/(Γ(iξ)Γ(2γ)Γ(γ+½))
/// · (1−|z|²)^γ (1−z̄)^{−2γ} ((z−1)/(1−z̄))^m
/// · F₅(γ+iξ, γ−iξ : 2γ+m ; · , γ+½ : 2γ | τ, ν)
///
/// with τ = (1−|z|²)/((z̄−1)(1−z)) and ν = 1/(1−z).
pub fn cs_wavefunction_with(label: &CoherentLabel, xi: f64, method: F5Method) -> Result<ComplexValue> {
    match wavefunction_prefactor(label, xi)? {
        None => Ok(c64(0.0, 0.0)),
        Some(pre) => Ok(pre * kdf_f5_with(&wavefunction_f5_args(&label.params, label.z, xi), method)?),
    }
}

/// Closed-form wavefunction through the terminating F₅ sum, with a bound on
/// its rounding error.
///
/// For |z| near the cap and large ξ the ₂F₁ terms grow like e^{2ξ√|μ|} while
/// the sum stays moderate, so the bound can exceed the value itself.
pub fn cs_wavefunction_bounded(label: &CoherentLabel, xi: f64) -> Result<(ComplexValue, f64)> {
    match wavefunction_prefactor(label, xi)? {
        None => Ok((c64(0.0, 0.0), 0.0)),
        Some(pre) => {
            let (f5, bound) = kdf_f5_terminating_bounded(&wavefunction_f5_args(&label.params, label.z, xi))?;
            Ok((pre * f5, pre.norm() * bound))
        }
    }
}

fn wavefunction_prefactor(label: &CoherentLabel, xi: f64) -> Result<Option<ComplexValue>> {
    check_kernel_domain(label.z)?;
    if !(xi >= 0.0) || !xi.is_finite() {
        return Err(Error::domain(format!("ξ must be a finite non-negative number (got {xi})")));
    }
    if xi == 0.0 {
        return Ok(None);
    }
    let p = &label.params;
    let g = p.gamma();
    let mf = p.m as f64;
    let z = label.z.z;
    let zc = z.conj();
    let r = label.z.r2();
    let scale = (0.5 * (ln_gamma_real(2.0 * g + mf) - ln_gamma_real(mf + 1.0))
        - ln_gamma_real(2.0 * g)
        - ln_gamma_real(g + 0.5))
    .exp();
    let geometric = (1.0 - r).powf(g)
        * (-2.0 * g * (1.0 - zc).ln()).exp()
        * ((z - 1.0) / (1.0 - zc)).powi(p.m as i32);
    Ok(Some(common_factor(&p.osc, xi)? * scale * geometric))
}

pub const DEFAULT_ORACLE_TERMS: usize = 160;

/// The superposition N^{−1/2} Σ_{k≤K} conj(Φ_k(z)) φ_k(ξ), with a tail estimate.
///
/// The tail is estimated geometrically from the decay of the last ten terms.
/// A tail above `tol` is reported as non-convergence.
pub fn cs_wavefunction_oracle(
    label: &CoherentLabel,
    xi: f64,
    kmax: usize,
    tol: f64,
) -> Result<(ComplexValue, f64)> {
    if kmax == 0 && label.z.z != c64(0.0, 0.0) {
        return Err(Error::domain("oracle truncation must be at least 1"));
    }
    let idx = label.params.landau();
    let phis = eigenfunctions(kmax, &label.params.osc, xi)?;
    let mut terms = Vec::with_capacity(kmax + 1);
    for (k, phi) in phis.iter().enumerate() {
        terms.push(basis_phi(k, &idx, label.z)?.conj() * phi);
    }
    let norm = normalization(&idx, label.z).sqrt();
    let sum: ComplexValue = terms.iter().sum::<ComplexValue>() / norm;
    let tail = tail_estimate(&terms) / norm;
    if tail > tol {
        return Err(Error::no_convergence(
            format!("coherent-state superposition truncated at K = {kmax}"),
            tail,
            kmax,
        ));
    }
    Ok((sum, tail))
}

fn tail_estimate(terms: &[ComplexValue]) -> f64 {
    let n = terms.len();
    if n < 2 {
        return 0.0;
    }
    if n < 12 {
        return terms[n - 1].norm();
    }
    let last = terms[n - 1].norm().max(terms[n - 2].norm());
    let earlier = terms[n - 11].norm().max(terms[n - 12].norm());
    if last == 0.0 {
        return 0.0;
    }
    if earlier == 0.0 {
        return f64::INFINITY;
    }
    let q = (last / earlier).powf(0.1);
    if q >= 1.0 {
        return f64::INFINITY;
    }
    last * q / (1.0 - q)
}
