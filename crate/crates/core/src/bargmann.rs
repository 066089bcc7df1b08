//! The classical second Bargmann transform and the relativistic
//! Bargmann-type transforms on the disk.

use std::f64::consts::PI;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coherent::{
    check_kernel_domain, cs_wavefunction_bounded, cs_wavefunction_with, normalization, CoherentLabel, R_MAX,
};
use crate::disk::{basis_phi_polynomial, DiskPoint, LandauIndex};
use crate::error::{Error, Result};
use crate::hypergeom::{gauss_2f1, ln_gamma, ln_gamma_real, F5Method};
use crate::oscillator::{decay_scale, eigenfunctions, ModelParams, OscParams};
use crate::orthopoly::laguerre_l;
use crate::quadrature::{
    gauss_jacobi, integrate_disk_within_grid, integrate_halfline, try_integrate_halfline, DiskGrid,
};
use crate::{c64, ComplexValue};

/// A function on ℝ₊ that the transforms can integrate.
pub trait Signal: Sync {
    fn value(&self, x: f64) -> ComplexValue;
}

impl<F> Signal for F
where
    F: Fn(f64) -> ComplexValue + Sync,
{
    fn value(&self, x: f64) -> ComplexValue {
        self(x)
    }
}

/// Samples of a function on ℝ₊, interpolated by a natural cubic spline and
/// taken to vanish outside the sampled range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction {
    grid: Vec<f64>,
    values: Vec<ComplexValue>,
    #[serde(skip)]
    second: Vec<ComplexValue>,
}

impl SampledFunction {
    pub fn new(grid: Vec<f64>, values: Vec<ComplexValue>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidInput(format!(
                "grid has {} points but there are {} values",
                grid.len(),
                values.len()
            )));
        }
        if grid.len() < 2 {
            return Err(Error::InvalidInput("at least two samples are needed".into()));
        }
        if let Some(i) = grid.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!("grid point {i} is not finite")));
        }
        if let Some(i) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::InvalidInput(format!("value at grid point {i} is not finite")));
        }
        if grid[0] < 0.0 {
            return Err(Error::InvalidInput(format!("grid starts at {} < 0", grid[0])));
        }
        if let Some(i) = grid.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::InvalidInput(format!(
                "grid is not strictly increasing at index {}",
                i + 1
            )));
        }
        let second = natural_spline_second_derivatives(&grid, &values);
        Ok(SampledFunction { grid, values, second })
    }

    /// Samples `f` on `grid`.
    pub fn from_fn<F: Fn(f64) -> ComplexValue>(grid: Vec<f64>, f: F) -> Result<Self> {
        let values = grid.iter().map(|x| f(*x)).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[ComplexValue] {
        &self.values
    }

    /// Spline value at x; zero outside [grid₀, grid_last].
    pub fn eval(&self, x: f64) -> ComplexValue {
        let n = self.grid.len();
        if !(x >= self.grid[0] && x <= self.grid[n - 1]) {
            return c64(0.0, 0.0);
        }
        let hi = self.grid.partition_point(|g| *g < x).clamp(1, n - 1);
        let lo = hi - 1;
        let h = self.grid[hi] - self.grid[lo];
        let a = (self.grid[hi] - x) / h;
        let b = 1.0 - a;
        a * self.values[lo]
            + b * self.values[hi]
            + ((a * a * a - a) * self.second[lo] + (b * b * b - b) * self.second[hi]) * (h * h / 6.0)
    }
}

impl Signal for SampledFunction {
    fn value(&self, x: f64) -> ComplexValue {
        self.eval(x)
    }
}

fn natural_spline_second_derivatives(x: &[f64], y: &[ComplexValue]) -> Vec<ComplexValue> {
    let n = x.len();
    let mut m = vec![c64(0.0, 0.0); n];
    if n < 3 {
        return m;
    }
    // Thomas algorithm on the interior equations
    let mut c_prime = vec![0.0; n];
    let mut d_prime = vec![c64(0.0, 0.0); n];
    for i in 1..n - 1 {
        let h0 = x[i] - x[i - 1];
        let h1 = x[i + 1] - x[i];
        let diag = 2.0 * (h0 + h1);
        let rhs = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
        let denom = diag - h0 * c_prime[i - 1];
        c_prime[i] = h1 / denom;
        d_prime[i] = (rhs - h0 * d_prime[i - 1]) / denom;
    }
    for i in (1..n - 1).rev() {
        m[i] = d_prime[i] - c_prime[i] * m[i + 1];
    }
    m
}

/// Controls shared by the transform evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformConfig {
    /// Absolute tolerance handed to the half-line integrator.
    pub tol: f64,
    /// Panel width of the half-line integrator; derived from γ when absent.
    pub decay_scale: Option<f64>,
    #[serde(skip, default = "default_method")]
    pub method: F5Method,
}

fn default_method() -> F5Method {
    F5Method::Auto
}

impl Default for TransformConfig {
    fn default() -> Self {
        TransformConfig {
            tol: 1e-10,
            decay_scale: None,
            method: F5Method::Auto,
        }
    }
}

/// A transform value with the integrator's error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformPoint {
    pub value: ComplexValue,
    pub quadrature_error: f64,
}

/// The normalized Laguerre mode
/// √(k!/Γ(σ+k)) x^{(σ−1)/2} e^{−x/2} L_k^{(σ−1)}(x), orthonormal in L²(ℝ₊).
pub fn laguerre_mode(k: usize, sigma: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return if sigma == 1.0 && x == 0.0 { laguerre_l(k, 0.0, 0.0) * norm_laguerre(k, sigma) } else { 0.0 };
    }
    let ln = 0.5 * (ln_gamma_real(k as f64 + 1.0) - ln_gamma_real(sigma + k as f64))
        + 0.5 * (sigma - 1.0) * x.ln()
        - 0.5 * x;
    ln.exp() * laguerre_l(k, sigma - 1.0, x)
}

fn norm_laguerre(k: usize, sigma: f64) -> f64 {
    (0.5 * (ln_gamma_real(k as f64 + 1.0) - ln_gamma_real(sigma + k as f64))).exp()
}

/// The classical second Bargmann transform
/// ((σ−1)/(πΓ(σ)))^{1/2} (1−z)^{−σ} ∫₀^∞ exp(−(x/2)(1+z)/(1−z)) f(x) x^{(σ−1)/2} dx.
pub fn classical_bargmann<S: Signal + ?Sized>(
    sigma: f64,
    f: &S,
    z: DiskPoint,
    tol: f64,
) -> Result<TransformPoint> {
    if !(sigma > 1.0) {
        return Err(Error::domain(format!("σ must exceed 1 (got {sigma})")));
    }
    if z.z.norm() > R_MAX {
        return Err(Error::domain(format!(
            "|z| = {:.6} exceeds the kernel cap r_max = {R_MAX}",
            z.z.norm()
        )));
    }
    let s = 0.5 * (1.0 + z.z) / (1.0 - z.z);
    let power = 0.5 * (sigma - 1.0);
    let integrand = |x: f64| {
        if x <= 0.0 {
            return c64(0.0, 0.0);
        }
        (-s * x + power * x.ln()).exp() * f.value(x)
    };
    let scale = 2.0 * (0.25 * sigma).max(1.0);
    let (v, err) = integrate_halfline(integrand, scale, tol)?;
    let pre = (0.5 * ((sigma - 1.0).ln() - PI.ln() - ln_gamma_real(sigma))).exp();
    let outer = pre * (-sigma * (1.0 - z.z).ln()).exp();
    Ok(TransformPoint {
        value: outer * v,
        quadrature_error: outer.norm() * err,
    })
}

fn transform_scale(osc: &OscParams, cfg: &TransformConfig) -> f64 {
    cfg.decay_scale.unwrap_or_else(|| decay_scale(osc))
}

/// The relativistic Bargmann-type transform
/// B[f](z) = N_{σ,m}(z)^{1/2} ∫₀^∞ f(ξ) conj(ψ_z(ξ)) dξ with σ = 2(γ+m) and
/// ψ_z the closed-form coherent-state wavefunction.
pub fn relativistic_transform<S: Signal + ?Sized>(
    params: &ModelParams,
    f: &S,
    z: DiskPoint,
    cfg: &TransformConfig,
) -> Result<TransformPoint> {
    check_kernel_domain(z)?;
    let label = CoherentLabel { z, params: *params };
    let noise = Mutex::new((0.0f64, 0.0f64));
    let integrand = |xi: f64| -> Result<ComplexValue> {
        let fx = f.value(xi);
        if fx == c64(0.0, 0.0) {
            return Ok(fx);
        }
        let (psi, bound) = match cfg.method {
            F5Method::Auto | F5Method::Terminating => cs_wavefunction_bounded(&label, xi)?,
            method => (cs_wavefunction_with(&label, xi, method)?, 0.0),
        };
        // values swamped by rounding are dropped; |ψ| ≤ |computed| + bound
        let (kept, err) = if bound >= 0.5 * psi.norm() {
            (c64(0.0, 0.0), fx.norm() * (psi.norm() + bound))
        } else {
            (psi, fx.norm() * bound)
        };
        if err > 0.0 {
            let mut n = noise.lock().unwrap();
            n.0 = n.0.max(err);
            n.1 = n.1.max(xi);
        }
        Ok(fx * kept.conj())
    };
    let (v, err) = try_integrate_halfline(integrand, transform_scale(&params.osc, cfg), cfg.tol)?;
    let (peak, extent) = *noise.lock().unwrap();
    let scale = normalization(&params.landau(), z).sqrt();
    Ok(TransformPoint {
        value: scale * v,
        quadrature_error: scale * (err + peak * extent),
    })
}

/// The m = 0 transform through its reduced kernel
/// ((2γ−1)/π)^{1/2} (−i)^γ √2 / (Γ(γ+½)√Γ(2γ)) (1−z)^{−γ}
/// ∫ (c^{−4})^{−iξ} Γ²(γ−iξ)/((1−z)^{iξ}Γ(−iξ)) ₂F₁(γ−iξ, ½−iξ; γ+½; z) f(ξ) dξ.
pub fn relativistic_transform_m0<S: Signal + ?Sized>(
    osc: &OscParams,
    f: &S,
    z: DiskPoint,
    cfg: &TransformConfig,
) -> Result<TransformPoint> {
    check_kernel_domain(z)?;
    let g = osc.gamma();
    let log_one_minus = (1.0 - z.z).ln();
    let ln_c = osc.c().ln();
    let integrand = |xi: f64| -> Result<ComplexValue> {
        let fx = f.value(xi);
        if fx == c64(0.0, 0.0) || xi == 0.0 {
            return Ok(c64(0.0, 0.0));
        }
        let gammas = if xi < 1.0 {
            (2.0 * ln_gamma(c64(g, -xi))?).exp() * crate::hypergeom::rgamma(c64(0.0, -xi))
        } else {
            (2.0 * ln_gamma(c64(g, -xi))? - ln_gamma(c64(0.0, -xi))?).exp()
        };
        let phase = c64(0.0, 4.0 * xi * ln_c).exp() * (c64(0.0, -xi) * log_one_minus).exp();
        let hyp = gauss_2f1(c64(g, -xi), c64(0.5, -xi), c64(g + 0.5, 0.0), z.z)?;
        Ok(phase * gammas * hyp * fx)
    };
    let (v, err) = try_integrate_halfline(integrand, transform_scale(osc, cfg), cfg.tol)?;
    let pre = ((2.0 * g - 1.0) / PI).sqrt() * 2f64.sqrt()
        * (-ln_gamma_real(g + 0.5) - 0.5 * ln_gamma_real(2.0 * g)).exp();
    let outer = pre * c64(0.0, -0.5 * PI * g).exp() * (-g * log_one_minus).exp();
    Ok(TransformPoint {
        value: outer * v,
        quadrature_error: outer.norm() * err,
    })
}

/// Transform values over a list of points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformResult {
    pub points: Vec<DiskPoint>,
    pub values: Vec<ComplexValue>,
    pub params: ModelParams,
    /// Largest integrator error estimate over the points.
    pub quadrature_error: f64,
    pub point_errors: Vec<f64>,
}

/// Evaluates the relativistic transform at every point, in parallel; results
/// keep the input order.
pub fn transform_grid<S: Signal + ?Sized>(
    params: &ModelParams,
    f: &S,
    points: &[DiskPoint],
    cfg: &TransformConfig,
) -> Result<TransformResult> {
    let evaluated: Vec<TransformPoint> = points
        .par_iter()
        .map(|z| relativistic_transform(params, f, *z, cfg))
        .collect::<Result<_>>()?;
    let point_errors: Vec<f64> = evaluated.iter().map(|p| p.quadrature_error).collect();
    Ok(TransformResult {
        points: points.to_vec(),
        values: evaluated.iter().map(|p| p.value).collect(),
        params: *params,
        quadrature_error: point_errors.iter().cloned().fold(0.0, f64::max),
        point_errors,
    })
}

/// Resolution of the disk quadrature in [`isometry_check`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsometryBudget {
    /// Radius of the disk on which B[f] is integrated directly.
    pub radius: f64,
    /// Basis functions used for the contribution of the outer annulus.
    pub kmax: usize,
    /// Radial × angular nodes of the disk quadrature; a coarser grid with
    /// two thirds of the nodes each way provides the error estimate.
    pub grid: DiskGrid,
    pub transform: TransformConfig,
}

impl Default for IsometryBudget {
    fn default() -> Self {
        IsometryBudget {
            radius: 0.8,
            kmax: 12,
            grid: DiskGrid { radial: 18, angular: 24 },
            transform: TransformConfig {
                tol: 1e-9,
                ..TransformConfig::default()
            },
        }
    }
}

/// Outcome of [`isometry_check`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsometryReport {
    /// ‖B[f]‖² in L²(𝔻, (1−|z|²)^{σ−2} dν).
    pub transform_norm_sq: f64,
    /// ‖f‖² in L²(ℝ₊).
    pub input_norm_sq: f64,
    /// Part of the first norm contributed by |z| > radius.
    pub annulus_part: f64,
    /// |fine − coarse| of the disk quadrature.
    pub disk_error: f64,
    /// ‖f‖² − Σ_{k≤kmax} |⟨f, φ_k⟩|², the weight outside the basis window.
    pub unresolved: f64,
    /// |transform_norm_sq − input_norm_sq| / input_norm_sq (0 when f = 0).
    pub gap: f64,
}

/// Compares ‖B[f]‖ with ‖f‖.
///
/// B[f] is integrated directly over |z| ≤ radius. On the annulus the
/// expansion B[f] = Σ ⟨f, φ_k⟩ Φ_k is used: distinct Φ_k are orthogonal on
/// every circle, so the annulus contributes Σ |⟨f, φ_k⟩|² ∫_{|z|>R} |Φ_k|² weight.
pub fn isometry_check<S: Signal + ?Sized>(
    params: &ModelParams,
    f: &S,
    budget: &IsometryBudget,
) -> Result<IsometryReport> {
    let osc = &params.osc;
    let scale = transform_scale(osc, &budget.transform);
    let tol = budget.transform.tol;
    let (input, _) = integrate_halfline(|x| c64(f.value(x).norm_sqr(), 0.0), scale, tol)?;
    let input_norm_sq = input.re;
    if input_norm_sq == 0.0 {
        return Ok(IsometryReport {
            transform_norm_sq: 0.0,
            input_norm_sq: 0.0,
            annulus_part: 0.0,
            disk_error: 0.0,
            unresolved: 0.0,
            gap: 0.0,
        });
    }
    let idx = params.landau();
    let kmax = budget.kmax;
    let (coef, _) = {
        let mut out = vec![c64(0.0, 0.0); kmax + 1];
        let mut err = 0.0;
        for (k, slot) in out.iter_mut().enumerate() {
            let (v, e) = integrate_halfline(
                |x| {
                    let phi = eigenfunctions(k, osc, x).map(|v| v[k]).unwrap_or_default();
                    f.value(x) * phi.conj()
                },
                scale,
                tol,
            )?;
            *slot = v;
            err += e;
        }
        (out, err)
    };
    let captured: f64 = coef.iter().map(|c| c.norm_sqr()).sum();
    let mut annulus_part = 0.0;
    for (k, c) in coef.iter().enumerate() {
        annulus_part += c.norm_sqr() * basis_annulus_mass(k, &idx, budget.radius)?;
    }
    let weight = idx.sigma - 2.0;
    let density = |z: ComplexValue| match relativistic_transform(params, f, DiskPoint { z }, &budget.transform) {
        Ok(t) => c64(t.value.norm_sqr(), 0.0),
        Err(_) => c64(f64::NAN, 0.0),
    };
    let inner = integrate_disk_within_grid(&density, weight, budget.radius, budget.grid)?;
    let coarse_grid = DiskGrid {
        radial: (2 * budget.grid.radial / 3).max(2),
        angular: (2 * budget.grid.angular / 3).max(3),
    };
    let coarse = integrate_disk_within_grid(&density, weight, budget.radius, coarse_grid)?;
    if !(inner.re.is_finite() && coarse.re.is_finite()) {
        return Err(Error::no_convergence("transform inside the isometry disk", f64::NAN, 0));
    }
    let transform_norm_sq = inner.re + annulus_part;
    Ok(IsometryReport {
        transform_norm_sq,
        input_norm_sq,
        annulus_part,
        disk_error: (inner.re - coarse.re).abs(),
        unresolved: input_norm_sq - captured,
        gap: (transform_norm_sq - input_norm_sq).abs() / input_norm_sq,
    })
}

/// ∫_{|z|>R} |Φ_k(z)|² (1−|z|²)^{σ−2} dν(z).
pub fn basis_annulus_mass(k: usize, idx: &LandauIndex, radius: f64) -> Result<f64> {
    let r0 = radius * radius;
    let p = idx.sigma - 2.0 * idx.m as f64 - 2.0;
    let rule = gauss_jacobi(64, p, 0.0)?;
    // r = r0 + (1−r0)(1+x)/2, 1 − r = (1−r0)(1−x)/2, dν = ½ dr dφ
    let jac = 0.5 * (1.0 - r0);
    let weight_scale = (0.5 * (1.0 - r0)).powf(p);
    let mut acc = 0.0;
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let r = r0 + (1.0 - r0) * 0.5 * (1.0 + x);
        let v = basis_phi_polynomial(k, idx, DiskPoint { z: c64(r.sqrt(), 0.0) })?;
        acc += w * v.norm_sqr();
    }
    Ok(PI * jac * weight_scale * acc)
}
