//! Relativistic pseudoharmonic oscillator: γ(c), spectrum and eigenfunctions.

use std::f64::consts::{FRAC_PI_2, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::disk::LandauIndex;
use crate::error::{Error, Result};
use crate::hypergeom::{ln_gamma, ln_gamma_real, rgamma};
use crate::orthopoly::cdhahn_s;
use crate::quadrature::try_integrate_halfline;
use crate::{c64, ComplexValue};

/// γ = (1 + √(1 + 2c⁴))/2.
pub fn gamma_of_c(c: f64) -> Result<f64> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::domain(format!("c must be positive (got {c})")));
    }
    Ok(0.5 * (1.0 + (1.0 + 2.0 * c.powi(4)).sqrt()))
}

/// The oscillator parameter c; γ is always derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscParams {
    c: f64,
}

impl OscParams {
    pub fn new(c: f64) -> Result<Self> {
        gamma_of_c(c)?;
        Ok(OscParams { c })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn gamma(&self) -> f64 {
        0.5 * (1.0 + (1.0 + 2.0 * self.c.powi(4)).sqrt())
    }
}

/// Oscillator parameters together with a Landau level m; σ = 2(γ + m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub osc: OscParams,
    pub m: usize,
}

impl ModelParams {
    pub fn new(c: f64, m: usize) -> Result<Self> {
        Ok(ModelParams { osc: OscParams::new(c)?, m })
    }

    pub fn gamma(&self) -> f64 {
        self.osc.gamma()
    }

    pub fn sigma(&self) -> f64 {
        2.0 * (self.gamma() + self.m as f64)
    }

    pub fn landau(&self) -> LandauIndex {
        LandauIndex {
            sigma: self.sigma(),
            m: self.m,
        }
    }
}

/// E_k = 2k + 2γ.
pub fn energy(k: usize, osc: &OscParams) -> f64 {
    2.0 * k as f64 + 2.0 * osc.gamma()
}

/// The k-independent factor √2 i^γ (c^{−4})^{iξ} Γ²(γ+iξ)/Γ(iξ).
pub(crate) fn common_factor(osc: &OscParams, xi: f64) -> Result<ComplexValue> {
    let g = osc.gamma();
    let phase = FRAC_PI_2 * g - 4.0 * xi * osc.c.ln();
    let gammas = if xi < 1.0 {
        (2.0 * ln_gamma(c64(g, xi))?).exp() * rgamma(c64(0.0, xi))
    } else {
        (2.0 * ln_gamma(c64(g, xi))? - ln_gamma(c64(0.0, xi))?).exp()
    };
    Ok(SQRT_2 * c64(0.0, phase).exp() * gammas)
}

/// φ_0^γ(ξ), …, φ_kmax^γ(ξ).
///
/// The polynomial parts S_k(ξ²; γ, γ, ½)/(Γ(k+γ+½)√(k!Γ(k+2γ))) are generated
/// by the normalized three-term recurrence
/// b_k p_{k+1} = (A_k + C_k − γ² − ξ²) p_k − b_{k−1} p_{k−1}
/// with A_k = (k+2γ)(k+γ+½), C_k = k(k+γ−½) and b_k = √(A_k C_{k+1}), which
/// stays well scaled where the Pochhammer prefactors alone would overflow.
pub fn eigenfunctions(kmax: usize, osc: &OscParams, xi: f64) -> Result<Vec<ComplexValue>> {
    if !(xi >= 0.0) || !xi.is_finite() {
        return Err(Error::domain(format!("ξ must be a finite non-negative number (got {xi})")));
    }
    let g = osc.gamma();
    let w = common_factor(osc, xi)?;
    let a_k = |k: f64| (k + 2.0 * g) * (k + g + 0.5);
    let c_k = |k: f64| k * (k + g - 0.5);
    let b_k = |k: f64| (a_k(k) * c_k(k + 1.0)).sqrt();
    let mut out = Vec::with_capacity(kmax + 1);
    let mut prev = 0.0;
    let mut cur = (-0.5 * ln_gamma_real(2.0 * g) - ln_gamma_real(g + 0.5)).exp();
    out.push(w * cur);
    for k in 0..kmax {
        let kf = k as f64;
        let diag = a_k(kf) + c_k(kf) - g * g - xi * xi;
        let back = if k == 0 { 0.0 } else { b_k(kf - 1.0) };
        let next = (diag * cur - back * prev) / b_k(kf);
        prev = cur;
        cur = next;
        out.push(w * cur);
    }
    Ok(out)
}

/// φ_k^γ(ξ), normalized in L²(ℝ₊, dξ); vanishes at ξ = 0.
pub fn eigenfunction(k: usize, osc: &OscParams, xi: f64) -> Result<ComplexValue> {
    Ok(eigenfunctions(k, osc, xi)?[k])
}

/// φ_k^γ(ξ) evaluated literally: Pochhammer prefactors times the ₃F₂ sum.
pub fn eigenfunction_direct(k: usize, osc: &OscParams, xi: f64) -> Result<ComplexValue> {
    let g = osc.gamma();
    let kf = k as f64;
    let w = common_factor(osc, xi)?;
    let s = cdhahn_s(k, xi, g, g, 0.5);
    let ln_h = ln_gamma_real(kf + g + 0.5) + 0.5 * (ln_gamma_real(kf + 1.0) + ln_gamma_real(kf + 2.0 * g));
    Ok(w * s * (-ln_h).exp())
}

/// Half-line integration scale for integrands built from φ_k^γ.
///
/// |Γ(γ+iξ)|²/|Γ(iξ)| decays like e^{−πξ/2} times a power of ξ that grows
/// with γ, so panels scale as max(1, γ/π).
pub fn decay_scale(osc: &OscParams) -> f64 {
    (osc.gamma() / std::f64::consts::PI).max(1.0)
}

/// Gram matrix ⟨φ_j, φ_k⟩ in L²(ℝ₊, dξ) for j, k ≤ `kmax`, with the largest
/// integrator error estimate.
pub fn gram_matrix(kmax: usize, osc: &OscParams, tol: f64) -> Result<(Vec<Vec<ComplexValue>>, f64)> {
    let mut gram = vec![vec![c64(0.0, 0.0); kmax + 1]; kmax + 1];
    let mut worst = 0.0f64;
    for j in 0..=kmax {
        for k in j..=kmax {
            let (v, err) = try_integrate_halfline(
                |xi| {
                    let phi = eigenfunctions(k, osc, xi)?;
                    Ok(phi[j] * phi[k].conj())
                },
                decay_scale(osc),
                tol,
            )?;
            gram[j][k] = v;
            gram[k][j] = v.conj();
            worst = worst.max(err);
        }
    }
    Ok((gram, worst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_halfline;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gamma_values() {
        assert_abs_diff_eq!(gamma_of_c(1.0).unwrap(), 1.366_025_403_784_438_6, epsilon = 1e-15);
        assert_abs_diff_eq!(gamma_of_c(2f64.sqrt()).unwrap(), 2.0, epsilon = 1e-14);
        let small = gamma_of_c(1e-3).unwrap();
        assert!(small > 1.0 && small - 1.0 < 1e-11);
        assert!(gamma_of_c(0.0).is_err());
        assert!(gamma_of_c(-1.0).is_err());
    }

    #[test]
    fn spectrum() {
        let osc = OscParams::new(2f64.sqrt()).unwrap();
        assert_abs_diff_eq!(energy(0, &osc), 4.0, epsilon = 1e-14);
        let osc = OscParams::new(1.0).unwrap();
        assert_abs_diff_eq!(energy(3, &osc), 6.0 + 1.0 + 3f64.sqrt(), epsilon = 1e-14);
        for k in 0..10 {
            assert_abs_diff_eq!(energy(k + 1, &osc) - energy(k, &osc), 2.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn model_coupling() {
        let p = ModelParams::new(1.0, 2).unwrap();
        assert_abs_diff_eq!(p.sigma(), 2.0 * (p.gamma() + 2.0), epsilon = 1e-15);
        assert!(p.landau().validate().is_ok());
    }

    #[test]
    fn vanishes_at_origin() {
        let osc = OscParams::new(1.0).unwrap();
        for k in 0..5 {
            assert_eq!(eigenfunction(k, &osc, 0.0).unwrap().norm(), 0.0);
        }
        assert!(eigenfunction(0, &osc, -0.1).is_err());
    }

    #[test]
    fn ground_state_reference() {
        // mpmath at 30 digits, c = 1, ξ = 1
        let osc = OscParams::new(1.0).unwrap();
        let v = eigenfunction(0, &osc, 1.0).unwrap();
        assert!((v - c64(-0.400_717_171_875_449_6, -0.580_907_495_598_646_8)).norm() < 1e-12);
        assert_abs_diff_eq!(v.norm_sqr(), 0.498_027_770_278_550_5, epsilon = 1e-12);
    }

    #[test]
    fn recurrence_matches_direct_sum() {
        let osc = OscParams::new(0.8).unwrap();
        for xi in [0.3, 1.7, 4.0] {
            let all = eigenfunctions(8, &osc, xi).unwrap();
            for (k, v) in all.iter().enumerate() {
                let d = eigenfunction_direct(k, &osc, xi).unwrap();
                assert!((v - d).norm() < 1e-11 * (1.0 + d.norm()), "k={k} ξ={xi}: {v} vs {d}");
            }
        }
    }

    #[test]
    fn gram_is_identity() {
        let osc = OscParams::new(1.5).unwrap();
        let (g, _) = gram_matrix(3, &osc, 1e-11).unwrap();
        for (j, row) in g.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let target = if j == k { 1.0 } else { 0.0 };
                assert!((v - target).norm() < 1e-8, "({j},{k}) {v}");
            }
        }
    }

    #[test]
    fn orthonormal_small() {
        let osc = OscParams::new(1.0).unwrap();
        let (v, _) = integrate_halfline(
            |xi| {
                let f = eigenfunctions(2, &osc, xi).unwrap();
                f[1] * f[2].conj() + f[2] * f[2].conj()
            },
            decay_scale(&osc),
            1e-11,
        )
        .unwrap();
        assert!((v - c64(1.0, 0.0)).norm() < 1e-8, "{v}");
    }
}
