//! Gauss rules, adaptive half-line integration and polar disk integration.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergeom::ln_gamma_real;
use crate::{c64, ComplexValue};

/// Where the nodes of a rule live.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Interval(f64, f64),
    HalfLine,
    DiskRadial,
}

/// Nodes and positive weights of a quadrature rule.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub domain: Domain,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Σ wᵢ f(xᵢ) in node order.
    pub fn apply<F: Fn(f64) -> ComplexValue>(&self, f: F) -> ComplexValue {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(c64(0.0, 0.0), |acc, (x, w)| acc + *w * f(*x))
    }

    /// ∫_a^b f for a rule on (−1, 1) with unit weight.
    pub fn apply_on<F: Fn(f64) -> ComplexValue>(&self, a: f64, b: f64, f: F) -> ComplexValue {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self.apply(|x| f(mid + half * x))
    }
}

pub const MAX_NODES: usize = 4096;

type RuleKey = (usize, u64, u64);

static RULES: Lazy<Mutex<HashMap<RuleKey, Arc<QuadratureRule>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Gauss–Legendre rule with `n` nodes on (−1, 1).
pub fn gauss_legendre(n: usize) -> Result<Arc<QuadratureRule>> {
    gauss_jacobi(n, 0.0, 0.0)
}

/// Gauss–Jacobi rule for the weight (1−x)^α (1+x)^β on (−1, 1).
///
/// Rules are cached and shared; building one costs O(n²).
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<Arc<QuadratureRule>> {
    if n == 0 || n > MAX_NODES {
        return Err(Error::domain(format!("rule size must be in 1..={MAX_NODES}, got {n}")));
    }
    if !(alpha > -1.0 && beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::domain(format!(
            "Gauss–Jacobi needs α, β > −1 (got α = {alpha}, β = {beta})"
        )));
    }
    let key = (n, alpha.to_bits(), beta.to_bits());
    if let Some(rule) = RULES.lock().expect("rule cache poisoned").get(&key) {
        return Ok(rule.clone());
    }
    let rule = Arc::new(build_jacobi(n, alpha, beta));
    RULES
        .lock()
        .expect("rule cache poisoned")
        .entry(key)
        .or_insert_with(|| rule.clone());
    Ok(rule)
}

fn build_jacobi(n: usize, alpha: f64, beta: f64) -> QuadratureRule {
    let ab = alpha + beta;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    for (k, d) in diag.iter_mut().enumerate() {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        *d = if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / (s * (s + 2.0))
        };
    }
    for (k, o) in off.iter_mut().enumerate().skip(1) {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        let sq = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        *o = sq.sqrt();
    }
    let mut nodes = tridiagonal_eigenvalues(diag, off);
    nodes.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalue"));

    let nf = n as f64;
    let ln_c = (ab + 1.0) * std::f64::consts::LN_2 + ln_gamma_real(nf + alpha + 1.0)
        + ln_gamma_real(nf + beta + 1.0)
        - ln_gamma_real(nf + ab + 1.0)
        - ln_gamma_real(nf + 1.0);
    let mut weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        let mut dp = 0.0;
        for _ in 0..8 {
            let (p, d) = jacobi_with_derivative(n, alpha, beta, *x);
            dp = d;
            let step = p / d;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1e-3) {
                break;
            }
        }
        let (_, d) = jacobi_with_derivative(n, alpha, beta, *x);
        if d.is_finite() && d != 0.0 {
            dp = d;
        }
        let ln_w = ln_c - 2.0 * dp.abs().ln() - ((1.0 - *x) * (1.0 + *x)).ln();
        weights.push(ln_w.exp());
    }
    // ln_c loses digits for large n; the zeroth moment is known accurately
    let mu0 = if alpha == 0.0 && beta == 0.0 {
        2.0
    } else {
        ((ab + 1.0) * std::f64::consts::LN_2 + ln_gamma_real(alpha + 1.0)
        + ln_gamma_real(beta + 1.0)
        - ln_gamma_real(ab + 2.0))
        .exp()
    };
    let total: f64 = weights.iter().sum();
    for w in weights.iter_mut() {
        *w *= mu0 / total;
    }
    QuadratureRule {
        nodes,
        weights,
        domain: Domain::Interval(-1.0, 1.0),
    }
}

/// P_n^{(α,β)}(x) and its derivative by the three-term recurrence.
fn jacobi_with_derivative(n: usize, alpha: f64, beta: f64, x: f64) -> (f64, f64) {
    let ab = alpha + beta;
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut p_prev, mut d_prev) = (1.0, 0.0);
    let mut p = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
    let mut d = (ab + 2.0) / 2.0;
    for k in 2..=n {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        let a1 = 2.0 * kf * (kf + ab) * (s - 2.0);
        let slope = (s - 1.0) * s * (s - 2.0);
        let a2 = slope * x + (s - 1.0) * (alpha * alpha - beta * beta);
        let a3 = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * s;
        let next = (a2 * p - a3 * p_prev) / a1;
        let next_d = (slope * p + a2 * d - a3 * d_prev) / a1;
        p_prev = p;
        d_prev = d;
        p = next;
        d = next_d;
    }
    (p, d)
}

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix;
// off[0] is unused and off[k] couples rows k−1 and k.
fn tridiagonal_eigenvalues(mut d: Vec<f64>, off: Vec<f64>) -> Vec<f64> {
    let n = d.len();
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(&off[1..n]);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                break;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
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
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d
}

/// ∫₀^∞ f(x) dx for integrands decaying beyond a few multiples of `decay_scale`.
pub fn integrate_halfline<F>(f: F, decay_scale: f64, tol: f64) -> Result<(ComplexValue, f64)>
where
    F: Fn(f64) -> ComplexValue + Sync,
{
    try_integrate_halfline(|x| Ok(f(x)), decay_scale, tol)
}

/// Fallible-integrand version of [`integrate_halfline`].
///
/// The half-line is cut into panels of width `decay_scale`; each panel is
/// integrated by a 16/32-point Gauss–Legendre pair with bisection until the
/// pair agrees. Integration stops once three consecutive panels each
/// contribute less than tol/10. The error estimate adds the panel-pair
/// differences and the last panel's contribution.
pub fn try_integrate_halfline<F>(f: F, decay_scale: f64, tol: f64) -> Result<(ComplexValue, f64)>
where
    F: Fn(f64) -> Result<ComplexValue> + Sync,
{
    if !(decay_scale > 0.0 && tol > 0.0) {
        return Err(Error::domain(format!(
            "half-line integration needs positive decay scale and tolerance (got {decay_scale}, {tol})"
        )));
    }
    let g16 = gauss_legendre(16)?;
    let g32 = gauss_legendre(32)?;
    let limit = 64.0 * decay_scale;
    let mut total = c64(0.0, 0.0);
    let mut err = 0.0;
    let mut quiet = 0;
    let mut a = 0.0;
    while a < limit - 1e-12 * limit {
        let b = a + decay_scale;
        let (v, e) = adaptive_panel(&f, a, b, tol / 4.0, &g16, &g32, 0)?;
        total += v;
        err += e;
        if v.norm() < tol / 10.0 {
            quiet += 1;
            if quiet >= 3 {
                return Ok((total, err + v.norm()));
            }
        } else {
            quiet = 0;
        }
        a = b;
    }
    Err(Error::no_convergence(
        format!("half-line tail did not settle by x = {limit}"),
        err,
        64,
    ))
}

const MAX_BISECTIONS: usize = 14;

fn adaptive_panel<F>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    g16: &QuadratureRule,
    g32: &QuadratureRule,
    depth: usize,
) -> Result<(ComplexValue, f64)>
where
    F: Fn(f64) -> Result<ComplexValue> + Sync,
{
    let coarse = try_apply_on(g16, a, b, f)?;
    let fine = try_apply_on(g32, a, b, f)?;
    let diff = (fine - coarse).norm();
    if diff <= tol.max(1e-15 * fine.norm()) {
        return Ok((fine, diff));
    }
    if depth >= MAX_BISECTIONS {
        // rounding noise in the integrand stops bisection from helping; keep
        // the panel if it still fits the share it started with
        if diff <= tol * (1u64 << depth) as f64 {
            return Ok((fine, diff));
        }
        return Err(Error::no_convergence(
            format!("panel [{a}, {b}] did not resolve"),
            diff,
            MAX_BISECTIONS,
        ));
    }
    let mid = 0.5 * (a + b);
    let (left, right) = rayon::join(
        || adaptive_panel(f, a, mid, tol / 2.0, g16, g32, depth + 1),
        || adaptive_panel(f, mid, b, tol / 2.0, g16, g32, depth + 1),
    );
    let (l, el) = left?;
    let (r, er) = right?;
    Ok((l + r, el + er))
}

fn try_apply_on<F>(rule: &QuadratureRule, a: f64, b: f64, f: &F) -> Result<ComplexValue>
where
    F: Fn(f64) -> Result<ComplexValue> + Sync,
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let values: Vec<ComplexValue> = rule
        .nodes
        .par_iter()
        .map(|x| f(mid + half * x))
        .collect::<Result<_>>()?;
    let mut acc = c64(0.0, 0.0);
    for (v, w) in values.iter().zip(&rule.weights) {
        acc += *w * v;
    }
    Ok(half * acc)
}

/// Refinement controls for [`integrate_endpoint_powers`].
#[derive(Debug, Clone, Copy)]
pub struct GradedConfig {
    /// Relative tolerance between successive node doublings.
    pub tol: f64,
    pub start_nodes: usize,
    pub max_nodes: usize,
}

impl Default for GradedConfig {
    fn default() -> Self {
        GradedConfig {
            tol: 1e-12,
            start_nodes: 8,
            max_nodes: 256,
        }
    }
}

/// ∫₀¹ t^{p0} (1−t)^{p1} g(t) dt for complex p0, p1 with real parts > −1 and
/// smooth g.
///
/// [0, 1] is cut into panels graded geometrically towards both endpoints. The
/// two end pieces use Gauss–Jacobi rules weighted by the real parts of the
/// endpoint powers; the factors t^{i Im p0} and (1−t)^{i Im p1} oscillate
/// without bound near the endpoints and are only smooth on the graded panels.
/// Node counts per panel double until two estimates agree.
pub fn integrate_endpoint_powers<G>(
    p0: ComplexValue,
    p1: ComplexValue,
    g: G,
    cfg: &GradedConfig,
) -> Result<ComplexValue>
where
    G: Fn(f64) -> Result<ComplexValue>,
{
    if !(p0.re > -1.0 && p1.re > -1.0) {
        return Err(Error::domain(format!(
            "endpoint exponents need real parts above −1 (got {p0}, {p1})"
        )));
    }
    // End pieces [0, h] and [1−h, 1] carry mass ~ h^{Re p0 + 1} and h^{Re p1 + 1}.
    let decay = (p0.re + 1.0).min(p1.re + 1.0);
    let depth = ((1e4 / cfg.tol).log2() / decay).ceil().clamp(4.0, 1000.0) as i32;
    let h = 0.5f64.powi(depth);
    let i = c64(0.0, 1.0);

    // t and s = 1 − t are passed separately so neither end loses digits.
    let full = |t: f64, s: f64| -> Result<ComplexValue> { Ok((p0 * t.ln() + p1 * s.ln()).exp() * g(t)?) };
    let estimate = |n: usize| -> Result<ComplexValue> {
        let gl = gauss_legendre(n)?;
        let mut acc = c64(0.0, 0.0);
        for j in 1..depth {
            let hi = 0.5f64.powi(j);
            let lo = 0.5 * hi;
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (hi + lo);
            for (x, w) in gl.nodes.iter().zip(&gl.weights) {
                let u = mid + half * x;
                acc += *w * half * (full(u, 1.0 - u)? + full(1.0 - u, u)?);
            }
        }
        let left = gauss_jacobi(n, 0.0, p0.re)?;
        let scale = 0.5 * h * (0.5 * h).powf(p0.re);
        for (x, w) in left.nodes.iter().zip(&left.weights) {
            let t = 0.5 * h * (1.0 + x);
            let rest = (i * p0.im * t.ln() + p1 * (1.0 - t).ln()).exp();
            acc += *w * scale * rest * g(t)?;
        }
        let right = gauss_jacobi(n, 0.0, p1.re)?;
        let scale = 0.5 * h * (0.5 * h).powf(p1.re);
        for (x, w) in right.nodes.iter().zip(&right.weights) {
            let s = 0.5 * h * (1.0 + x);
            let rest = (i * p1.im * s.ln() + p0 * (1.0 - s).ln()).exp();
            acc += *w * scale * rest * g(1.0 - s)?;
        }
        Ok(acc)
    };

    let mut n = cfg.start_nodes.max(2);
    let mut prev = estimate(n)?;
    while 2 * n <= cfg.max_nodes {
        n *= 2;
        let next = estimate(n)?;
        let diff = (next - prev).norm();
        if diff <= cfg.tol * next.norm().max(1.0) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::no_convergence("graded endpoint quadrature", prev.norm(), cfg.max_nodes))
}

/// Grid sizes for disk integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DiskGrid {
    pub radial: usize,
    pub angular: usize,
}

const DISK_START: DiskGrid = DiskGrid { radial: 24, angular: 32 };
const DISK_MAX_RADIAL: usize = 768;
const DISK_MAX_ANGULAR: usize = 1024;

/// ∫_𝔻 g(z) (1−|z|²)^{p} dν(z) with p = `weight_exponent` > −1.
///
/// With z = √r e^{iφ} the measure is ½ dr dφ, the weight is Jacobi-type in r
/// and handled by a Gauss–Jacobi rule; φ uses the trapezoid rule. Both grids
/// double until two estimates agree to `tol` (relative to max(1, |value|)).
pub fn integrate_disk<G>(g: G, weight_exponent: f64, tol: f64) -> Result<ComplexValue>
where
    G: Fn(ComplexValue) -> ComplexValue + Sync,
{
    let p = weight_exponent;
    if !(p > -1.0) {
        return Err(Error::domain(format!("disk weight exponent must exceed −1 (got {p})")));
    }
    let eval = |grid: DiskGrid| -> Result<ComplexValue> {
        let rule = gauss_jacobi(grid.radial, p, 0.0)?;
        // r = (1+x)/2 so 1−r = (1−x)/2; the ½ from dν and dr = dx/2 fold in too
        let scale = 0.25 * 0.5f64.powf(p);
        Ok(scale * radial_angular_sum(&g, &rule.nodes, &rule.weights, grid.angular, |x| 0.5 * (1.0 + x)))
    };
    refine_disk(eval, tol, "disk integral")
}

/// ∫_{|z| ≤ radius} g(z) (1−|z|²)^{p} dν(z), Gauss–Legendre in r = |z|².
pub fn integrate_disk_within<G>(
    g: G,
    weight_exponent: f64,
    radius: f64,
    tol: f64,
) -> Result<ComplexValue>
where
    G: Fn(ComplexValue) -> ComplexValue + Sync,
{
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::domain(format!("disk radius must lie in (0, 1), got {radius}")));
    }
    refine_disk(
        |grid| integrate_disk_within_grid(&g, weight_exponent, radius, grid),
        tol,
        "truncated disk integral",
    )
}

/// One fixed-grid evaluation of the integral in [`integrate_disk_within`].
pub fn integrate_disk_within_grid<G>(
    g: &G,
    weight_exponent: f64,
    radius: f64,
    grid: DiskGrid,
) -> Result<ComplexValue>
where
    G: Fn(ComplexValue) -> ComplexValue + Sync,
{
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::domain(format!("disk radius must lie in (0, 1), got {radius}")));
    }
    let p = weight_exponent;
    let r_max = radius * radius;
    let weighted = |z: ComplexValue| g(z) * (1.0 - z.norm_sqr()).powf(p);
    let rule = gauss_legendre(grid.radial)?;
    let scale = 0.25 * r_max;
    Ok(scale * radial_angular_sum(&weighted, &rule.nodes, &rule.weights, grid.angular, |x| {
        0.5 * r_max * (1.0 + x)
    }))
}

fn radial_angular_sum<G, M>(
    g: &G,
    nodes: &[f64],
    weights: &[f64],
    angular: usize,
    to_r: M,
) -> ComplexValue
where
    G: Fn(ComplexValue) -> ComplexValue + Sync,
    M: Fn(f64) -> f64 + Sync,
{
    let dphi = 2.0 * PI / angular as f64;
    let rows: Vec<ComplexValue> = nodes
        .par_iter()
        .map(|x| {
            let rho = to_r(*x).sqrt();
            let mut acc = c64(0.0, 0.0);
            for j in 0..angular {
                let phi = dphi * j as f64;
                acc += g(c64(rho * phi.cos(), rho * phi.sin()));
            }
            acc * dphi
        })
        .collect();
    rows.iter().zip(weights).fold(c64(0.0, 0.0), |acc, (v, w)| acc + *w * v)
}

fn refine_disk<E>(eval: E, tol: f64, what: &str) -> Result<ComplexValue>
where
    E: Fn(DiskGrid) -> Result<ComplexValue>,
{
    let mut grid = DISK_START;
    let mut prev = eval(grid)?;
    loop {
        let next_grid = DiskGrid {
            radial: (grid.radial * 2).min(DISK_MAX_RADIAL),
            angular: (grid.angular * 2).min(DISK_MAX_ANGULAR),
        };
        if next_grid.radial == grid.radial && next_grid.angular == grid.angular {
            return Err(Error::no_convergence(
                what,
                f64::NAN,
                grid.radial * grid.angular,
            ));
        }
        let next = eval(next_grid)?;
        let change = (next - prev).norm();
        if change <= tol * next.norm().max(1.0) {
            return Ok(next);
        }
        grid = next_grid;
        prev = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::ln_gamma;
    use approx::assert_abs_diff_eq;

    #[test]
    fn single_node_rule() {
        let r = gauss_legendre(1).unwrap();
        assert_abs_diff_eq!(r.nodes[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.weights[0], 2.0, epsilon = 1e-15);
    }

    #[test]
    fn legendre_exactness_and_symmetry() {
        let r = gauss_legendre(5).unwrap();
        let v = r.apply(|x| c64(x.powi(8), 0.0));
        assert_abs_diff_eq!(v.re, 2.0 / 9.0, epsilon = 1e-14);
        for i in 0..5 {
            assert_abs_diff_eq!(r.nodes[i], -r.nodes[4 - i], epsilon = 1e-15);
        }
        let r = gauss_legendre(64).unwrap();
        let v = r.apply(|x| c64(x.exp(), 0.0));
        let e = std::f64::consts::E;
        assert_abs_diff_eq!(v.re, e - 1.0 / e, epsilon = 1e-14);
    }

    #[test]
    fn large_rules_are_sane() {
        for n in [513, 2048] {
            let r = gauss_legendre(n).unwrap();
            let s: f64 = r.weights.iter().sum();
            assert_abs_diff_eq!(s, 2.0, epsilon = 1e-12);
            assert!(r.weights.iter().all(|w| *w > 0.0));
            assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
            assert!(r.nodes[0] > -1.0 && r.nodes[n - 1] < 1.0);
        }
    }

    #[test]
    fn jacobi_with_zero_exponents_is_legendre() {
        let l = build_jacobi(12, 0.0, 0.0);
        let j = gauss_legendre(12).unwrap();
        for (a, b) in l.nodes.iter().zip(&j.nodes) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-15);
        }
    }

    #[test]
    fn jacobi_beta_function() {
        // ∫₀¹ t^{0.8}(1−t)^{−1/2} dt = B(1.8, 1/2); t = (1+x)/2
        let r = gauss_jacobi(32, -0.5, 0.8).unwrap();
        let v = r.apply(|_| c64(1.0, 0.0)).re * 0.5f64.powf(-0.5 + 0.8 + 1.0);
        let beta = (ln_gamma(c64(1.8, 0.0)).unwrap() + ln_gamma(c64(0.5, 0.0)).unwrap()
            - ln_gamma(c64(2.3, 0.0)).unwrap())
        .exp()
        .re;
        assert_abs_diff_eq!(v, beta, epsilon = 1e-12);
        assert_abs_diff_eq!(v, 1.414_946_349_814_135_4, epsilon = 1e-12);
    }

    #[test]
    fn jacobi_oscillatory_reference() {
        // ∫₀¹ t^{0.6}(1−t)^{−1/2} cos(0.6 ln t) dt, mpmath reference
        let r = gauss_jacobi(1024, -0.5, 0.6).unwrap();
        let v = r.apply(|x| c64((0.6 * (0.5 * (1.0 + x)).ln()).cos(), 0.0)).re
            * 0.5f64.powf(-0.5 + 0.6 + 1.0);
        assert_abs_diff_eq!(v, 1.421_131_389_373_301_9, epsilon = 1e-10);
    }

    #[test]
    fn jacobi_rejects_bad_exponents() {
        assert!(matches!(gauss_jacobi(8, -1.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(gauss_jacobi(0, 0.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(gauss_legendre(MAX_NODES + 1), Err(Error::Domain(_))));
    }

    #[test]
    fn halfline_elementary() {
        let (v, _) = integrate_halfline(|x| c64((-x).exp(), 0.0), 1.0, 1e-13).unwrap();
        assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-12);
        let (v, _) = integrate_halfline(|x| c64(x * (-x * x).exp(), 0.0), 1.0, 1e-13).unwrap();
        assert_abs_diff_eq!(v.re, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn halfline_gamma_weight() {
        // ∫₀^∞ |Γ(1.6+iξ)|⁴/|Γ(iξ)|² dξ, mpmath reference
        let f = |xi: f64| {
            let g = ln_gamma(c64(1.6, xi)).unwrap().re;
            let r = crate::hypergeom::rgamma(c64(0.0, xi)).norm();
            c64((4.0 * g).exp() * r * r, 0.0)
        };
        let (v, err) = integrate_halfline(f, 1.0, 1e-12).unwrap();
        assert!((v.re - 1.327_281_842_705_210_4).abs() < 1e-8 * 1.33, "{v} ± {err}");
    }

    #[test]
    fn halfline_without_decay_fails() {
        let r = integrate_halfline(|_| c64(1.0, 0.0), 1.0, 1e-10);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn disk_weight_mass_and_symmetry() {
        let v = integrate_disk(|_| c64(1.0, 0.0), 2.0, 1e-13).unwrap();
        assert_abs_diff_eq!(v.re, PI / 3.0, epsilon = 1e-12);
        let v = integrate_disk(|z| z, 2.0, 1e-13).unwrap();
        assert!(v.norm() < 1e-13);
        let v = integrate_disk_within(|_| c64(1.0, 0.0), 0.0, 0.5, 1e-13).unwrap();
        assert_abs_diff_eq!(v.re, PI * 0.25, epsilon = 1e-13);
    }
}
