//! Poincaré-disk geometry, Landau levels and the eigenbasis Φ_k^{σ,m}.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::ln_gamma_real;
use crate::quadrature::integrate_disk;
use crate::{c64, ComplexValue};

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    pub z: ComplexValue,
}

impl DiskPoint {
    pub fn new(z: ComplexValue) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
            return Err(Error::domain(format!("point {z} is not in the open unit disk")));
        }
        Ok(DiskPoint { z })
    }

    pub fn from_parts(re: f64, im: f64) -> Result<Self> {
        Self::new(c64(re, im))
    }

    /// |z|²
    pub fn r2(&self) -> f64 {
        self.z.norm_sqr()
    }
}

/// Magnetic parameter σ and Landau level index m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LandauIndex {
    pub sigma: f64,
    pub m: usize,
}

impl LandauIndex {
    pub fn new(sigma: f64, m: usize) -> Result<Self> {
        let idx = LandauIndex { sigma, m };
        idx.validate()?;
        Ok(idx)
    }

    /// σ > 1 and σ − 2m − 1 > 0.
    ///
    /// The bound is strict: at σ − 2m − 1 = 0 the normalization of Φ_k and of
    /// the coherent states vanishes.
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 1.0) || !self.sigma.is_finite() {
            return Err(Error::domain(format!("σ must exceed 1 (got {})", self.sigma)));
        }
        if self.beta() <= 0.0 {
            return Err(Error::domain(format!(
                "level m = {} needs σ − 2m − 1 > 0 (σ = {})",
                self.m, self.sigma
            )));
        }
        Ok(())
    }

    /// σ − 2m − 1, the second Jacobi parameter of the basis.
    pub fn beta(&self) -> f64 {
        self.sigma - 2.0 * self.m as f64 - 1.0
    }
}

/// ε_m^σ = 4m(σ − 1 − m).
pub fn landau_level(idx: &LandauIndex) -> Result<f64> {
    idx.validate()?;
    let m = idx.m as f64;
    Ok(4.0 * m * (idx.sigma - 1.0 - m))
}

/// Hyperbolic distance with cosh² d = |1 − z w̄|² / ((1−|z|²)(1−|w|²)).
///
/// Evaluated through sinh² d = |z − w|² / ((1−|z|²)(1−|w|²)), which keeps full
/// relative accuracy for nearby points.
pub fn bergman_distance(z: DiskPoint, w: DiskPoint) -> f64 {
    let s2 = (z.z - w.z).norm_sqr() / ((1.0 - z.r2()) * (1.0 - w.r2()));
    s2.sqrt().asinh()
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    ln_gamma_real(n as f64 + 1.0) - ln_gamma_real(k as f64 + 1.0) - ln_gamma_real((n - k) as f64 + 1.0)
}

/// (1 − |z|²)^m Φ_k^{σ,m}(z), a polynomial in z and z̄.
///
/// Expanding the Jacobi polynomial of the basis definition in powers of 1−|z|²
/// gives
/// C_k Σ_{i=0}^{min(m,k)} (−1)^i C(m,i) C(k+β, k−i) z^{k−i} z̄^{m−i} (1−|z|²)^i
/// with β = σ−2m−1 and C_k the normalization, free of the apparent pole of
/// z̄^{m−k} at the origin when k > m.
pub fn basis_phi_polynomial(k: usize, idx: &LandauIndex, z: DiskPoint) -> Result<ComplexValue> {
    idx.validate()?;
    let m = idx.m;
    let beta = idx.beta();
    let (kf, mf) = (k as f64, m as f64);
    let ln_norm = 0.5
        * (beta.ln() + ln_gamma_real(idx.sigma - mf) + ln_gamma_real(kf + 1.0)
            - PI.ln()
            - ln_gamma_real(mf + 1.0)
            - ln_gamma_real(beta + 1.0 + kf));
    let one_minus = 1.0 - z.r2();
    let zc = z.z.conj();
    let mut sum = c64(0.0, 0.0);
    for i in 0..=m.min(k) {
        let fi = i as f64;
        let ln_coef = ln_norm + ln_binomial(m, i) + ln_gamma_real(kf + beta + 1.0)
            - ln_gamma_real(kf - fi + 1.0)
            - ln_gamma_real(beta + fi + 1.0);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let mono = z.z.powi((k - i) as i32) * zc.powi((m - i) as i32) * one_minus.powi(i as i32);
        sum += sign * ln_coef.exp() * mono;
    }
    Ok(sum)
}

/// The orthonormal eigenfunction Φ_k^{σ,m}(z) of Δ_σ at level ε_m^σ.
pub fn basis_phi(k: usize, idx: &LandauIndex, z: DiskPoint) -> Result<ComplexValue> {
    let poly = basis_phi_polynomial(k, idx, z)?;
    Ok(poly * (1.0 - z.r2()).powi(-(idx.m as i32)))
}

/// Density of dμ_{σ,m} against Lebesgue measure: (σ−2m−1)/(π(1−|z|²)²).
pub fn measure_density(idx: &LandauIndex, z: DiskPoint) -> f64 {
    idx.beta() / (PI * (1.0 - z.r2()).powi(2))
}

pub const DEFAULT_FD_STEP: f64 = 1e-4;

/// Δ_σ ψ(z) = −4(1−|z|²)((1−|z|²) ∂²ψ/∂z∂z̄ − σ z̄ ∂ψ/∂z̄) by finite differences.
///
/// The Laplacian uses the 9-point stencil
/// [4(N+S+E+W) + (NE+NW+SE+SW) − 20C]/(6h²) and ∂/∂z̄ = ½(∂ₓ + i∂ᵧ) uses
/// central differences; both are O(h²).
pub fn maass_apply_fd<F>(idx: &LandauIndex, psi: F, z: DiskPoint, h: f64) -> Result<ComplexValue>
where
    F: Fn(ComplexValue) -> ComplexValue,
{
    idx.validate()?;
    if !(h > 0.0) {
        return Err(Error::domain(format!("finite-difference step must be positive (got {h})")));
    }
    if z.z.norm() + 2.0 * h >= 1.0 {
        return Err(Error::domain(format!(
            "stencil of width {h} at {} reaches the boundary",
            z.z
        )));
    }
    let at = |dx: f64, dy: f64| psi(z.z + c64(dx * h, dy * h));
    let center = at(0.0, 0.0);
    let (e, w, n, s) = (at(1.0, 0.0), at(-1.0, 0.0), at(0.0, 1.0), at(0.0, -1.0));
    let corners = at(1.0, 1.0) + at(-1.0, 1.0) + at(1.0, -1.0) + at(-1.0, -1.0);
    let laplacian = (4.0 * (e + w + n + s) + corners - 20.0 * center) / (6.0 * h * h);
    let dx = (e - w) / (2.0 * h);
    let dy = (n - s) / (2.0 * h);
    let d_zbar = 0.5 * (dx + c64(0.0, 1.0) * dy);
    let d_zzbar = 0.25 * laplacian;
    let rho = 1.0 - z.r2();
    Ok(-4.0 * rho * (rho * d_zzbar - idx.sigma * z.z.conj() * d_zbar))
}

/// Gram matrix ⟨Φ_j, Φ_k⟩ in L²(𝔻, (1−|z|²)^{σ−2} dν) for j, k ≤ `kmax`.
///
/// Each entry is integrated as (1−|z|²)^{2m} Φ_j conj(Φ_k) against the weight
/// (1−|z|²)^{σ−2m−2}, so the integrand is a polynomial in z and z̄.
pub fn gram_matrix(idx: &LandauIndex, kmax: usize, tol: f64) -> Result<Vec<Vec<ComplexValue>>> {
    idx.validate()?;
    let weight = idx.sigma - 2.0 * idx.m as f64 - 2.0;
    let mut gram = vec![vec![c64(0.0, 0.0); kmax + 1]; kmax + 1];
    for j in 0..=kmax {
        for k in j..=kmax {
            let v = integrate_disk(
                |z| {
                    let p = DiskPoint { z };
                    let a = basis_phi_polynomial(j, idx, p).unwrap_or_default();
                    let b = basis_phi_polynomial(k, idx, p).unwrap_or_default();
                    a * b.conj()
                },
                weight,
                tol,
            )?;
            gram[j][k] = v;
            gram[k][j] = v.conj();
        }
    }
    Ok(gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{jacobi_p, JacobiParams};
    use approx::assert_abs_diff_eq;

    fn pt(re: f64, im: f64) -> DiskPoint {
        DiskPoint::from_parts(re, im).unwrap()
    }

    // The basis as literally defined through the Jacobi polynomial (z ≠ 0).
    fn basis_via_jacobi(k: usize, idx: &LandauIndex, z: ComplexValue) -> ComplexValue {
        let (sigma, m) = (idx.sigma, idx.m as f64);
        let kf = k as f64;
        let norm = ((sigma - 2.0 * m - 1.0)
            * (ln_gamma_real(sigma - m) + ln_gamma_real(kf + 1.0)
                - ln_gamma_real(m + 1.0)
                - ln_gamma_real(sigma - 2.0 * m + kf))
            .exp()
            / PI)
            .sqrt();
        let r = z.norm_sqr();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let p = jacobi_p(&JacobiParams {
            n: k,
            alpha: m - kf,
            beta: sigma - 2.0 * m - 1.0,
            x: c64(1.0 - 2.0 * r, 0.0),
        });
        norm * sign * z.conj().powi(idx.m as i32 - k as i32) / (1.0 - r).powi(idx.m as i32) * p
    }

    #[test]
    fn landau_levels() {
        assert_eq!(landau_level(&LandauIndex::new(4.3, 0).unwrap()).unwrap(), 0.0);
        assert_eq!(landau_level(&LandauIndex::new(7.0, 2).unwrap()).unwrap(), 32.0);
        let g = 1.366_025_403_784_438_6;
        let idx = LandauIndex::new(2.0 * (g + 1.0), 1).unwrap();
        assert_abs_diff_eq!(landau_level(&idx).unwrap(), 4.0 * (1.0 + 2.0 * g - 1.0), epsilon = 1e-13);
        assert!(landau_level(&LandauIndex { sigma: 5.0, m: 3 }).is_err());
        assert!(LandauIndex::new(5.0, 2).is_err());
        assert!(LandauIndex::new(0.5, 0).is_err());
    }

    #[test]
    fn distances() {
        let z = pt(0.3, -0.2);
        assert_eq!(bergman_distance(z, z), 0.0);
        let d = bergman_distance(pt(0.0, 0.0), pt(0.6, 0.0));
        assert_abs_diff_eq!(d, (1.0f64 / 0.8).acosh(), epsilon = 1e-14);
        let w = pt(-0.5, 0.41);
        assert_abs_diff_eq!(bergman_distance(z, w), bergman_distance(w, z), epsilon = 1e-15);
    }

    #[test]
    fn basis_low_order_closed_forms() {
        let sigma = 5.5;
        let idx = LandauIndex::new(sigma, 0).unwrap();
        let v = basis_phi(0, &idx, pt(0.4, 0.1)).unwrap();
        assert_abs_diff_eq!(v.re, ((sigma - 1.0) / PI).sqrt(), epsilon = 1e-14);
        let z = c64(0.3, -0.45);
        for k in 0..6 {
            let kf = k as f64;
            let c = ((sigma - 1.0)
                * (ln_gamma_real(sigma + kf) - ln_gamma_real(sigma) - ln_gamma_real(kf + 1.0)).exp()
                / PI)
                .sqrt();
            let v = basis_phi(k, &idx, DiskPoint { z }).unwrap();
            assert!((v - c * z.powi(k as i32)).norm() < 1e-13 * (1.0 + v.norm()));
        }
    }

    #[test]
    fn basis_matches_jacobi_definition() {
        for &(sigma, m) in &[(7.5, 1usize), (9.0, 2), (6.2, 2)] {
            let idx = LandauIndex::new(sigma, m).unwrap();
            for k in 0..10 {
                for z in [c64(0.3, 0.2), c64(-0.55, 0.1), c64(0.05, -0.7)] {
                    let a = basis_phi(k, &idx, DiskPoint { z }).unwrap();
                    let b = basis_via_jacobi(k, &idx, z);
                    assert!((a - b).norm() < 1e-11 * (1.0 + b.norm()), "σ={sigma} m={m} k={k}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn basis_is_finite_at_origin() {
        let idx = LandauIndex::new(9.0, 2).unwrap();
        for k in 0..6 {
            let v = basis_phi(k, &idx, pt(0.0, 0.0)).unwrap();
            assert!(v.re.is_finite() && v.im.is_finite());
            if k != idx.m {
                assert_eq!(v.norm(), 0.0);
            }
        }
    }

    #[test]
    fn orthonormality_small() {
        let idx = LandauIndex::new(7.5, 1).unwrap();
        let g = gram_matrix(&idx, 4, 1e-13).unwrap();
        for (j, row) in g.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let target = if j == k { 1.0 } else { 0.0 };
                assert!((v - c64(target, 0.0)).norm() < 1e-10, "({j},{k}) = {v}");
            }
        }
    }

    #[test]
    fn maass_operator_cases() {
        let idx = LandauIndex::new(7.5, 1).unwrap();
        let z = pt(0.3, 0.2);
        let c = maass_apply_fd(&idx, |_| c64(2.0, -1.0), z, 1e-4).unwrap();
        assert!(c.norm() < 1e-6);
        let hol = maass_apply_fd(&idx, |w| w.powi(3), z, 1e-4).unwrap();
        assert!(hol.norm() < 1e-5);
        let eps = landau_level(&idx).unwrap();
        let phi = |w: ComplexValue| basis_phi(3, &idx, DiskPoint { z: w }).unwrap();
        let lhs = maass_apply_fd(&idx, phi, z, 1e-4).unwrap();
        let rhs = eps * phi(z.z);
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-5, "{lhs} vs {rhs}");
        assert!(matches!(maass_apply_fd(&idx, phi, pt(0.99995, 0.0), 1e-4), Err(Error::Domain(_))));
    }

    #[test]
    fn measure() {
        let idx = LandauIndex::new(7.5, 1).unwrap();
        assert_abs_diff_eq!(measure_density(&idx, pt(0.0, 0.0)), 4.5 / PI, epsilon = 1e-15);
        assert_abs_diff_eq!(measure_density(&idx, pt(0.0, 0.5)), 4.5 / PI / 0.5625, epsilon = 1e-14);
    }
}
