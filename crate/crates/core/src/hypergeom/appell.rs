//! Appell F₁ and the Kampé de Fériet function F₅.

use crate::error::{Error, Result};
use crate::hypergeom::gamma::{as_nonpositive_integer, ln_gamma};
use crate::hypergeom::gauss::{
    gauss_2f1_pfaff_extended_tracked, gauss_2f1_with, SeriesConfig, Tracked,
};
use crate::quadrature::{integrate_endpoint_powers, GradedConfig};
use crate::{c64, ComplexValue};

/// Appell F₁(a; b, c; d; x, y) with the default truncation policy.
pub fn appell_f1(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    d: ComplexValue,
    x: ComplexValue,
    y: ComplexValue,
) -> Result<ComplexValue> {
    appell_f1_with(a, b, c, d, x, y, &SeriesConfig::default())
}

/// Appell F₁ as the double series Σ (a)_{m+n}(b)_m(c)_n / ((d)_{m+n} m! n!) x^m y^n.
///
/// The series is summed by rows in the `y` index, each row being
/// (a)_n(c)_n/((d)_n n!) yⁿ ₂F₁(a+n, b; d+n; x). A non-positive integer `c`
/// (or `b`, by symmetry) makes the outer sum finite.
pub fn appell_f1_with(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    d: ComplexValue,
    x: ComplexValue,
    y: ComplexValue,
    cfg: &SeriesConfig,
) -> Result<ComplexValue> {
    let zero = c64(0.0, 0.0);
    if x == zero && y == zero {
        return Ok(c64(1.0, 0.0));
    }
    if as_nonpositive_integer(c).is_none() && as_nonpositive_integer(b).is_some() {
        return appell_f1_with(a, c, b, d, y, x, cfg);
    }
    let row = |n: usize| gauss_2f1_with(a + n as f64, b, d + n as f64, x, cfg);
    let coef_ratio = |n: usize| -> Result<ComplexValue> {
        let nf = n as f64;
        let den = (d + nf) * (nf + 1.0);
        if den == zero {
            return Err(Error::pole("F₁ lower parameter hits zero"));
        }
        Ok((a + nf) * (c + nf) / den * y)
    };
    if let Some(rows) = as_nonpositive_integer(c) {
        let mut coef = c64(1.0, 0.0);
        let mut sum = row(0)?;
        for n in 0..rows as usize {
            coef *= coef_ratio(n)?;
            sum += coef * row(n + 1)?;
        }
        return Ok(sum);
    }
    if x.norm() >= 1.0 || y.norm() >= 1.0 {
        return Err(Error::domain(format!(
            "F₁ double series needs |x|, |y| < 1 (got {x}, {y})"
        )));
    }
    if y == zero {
        return row(0);
    }
    // Outer sum over rows; the per-row ₂F₁ values change the term ratio, so
    // track coefficient and row value separately.
    let mut coef = c64(1.0, 0.0);
    let mut sum = row(0)?;
    let mut quiet = 0usize;
    for n in 0..cfg.max_terms {
        coef *= coef_ratio(n)?;
        let term = coef * row(n + 1)?;
        sum += term;
        if term.norm() <= cfg.rel_tol * sum.norm() {
            quiet += 1;
            if quiet >= cfg.patience {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::no_convergence("F₁ outer series", f64::NAN, cfg.max_terms))
}

/// Parameters and arguments of F₅(c, d : a ; · , e : a′ | χ, ζ).
///
/// Its double series is
/// Σ_{r,s} (c)_{r+s}(d)_{r+s}(a)_r / ((e)_{r+s}(a′)_r r! s!) χ^r ζ^s
/// and its integral representation is
/// Γ(e)/(Γ(d)Γ(e−d)) ∫₀¹ t^{d−1}(1−t)^{e−d−1}(1−ζt)^{−c} ₂F₁(a, c; a′; χt/(1−ζt)) dt.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F5Args {
    pub c: ComplexValue,
    pub d: ComplexValue,
    pub e: ComplexValue,
    pub a: ComplexValue,
    pub a_prime: ComplexValue,
    pub chi: ComplexValue,
    pub zeta: ComplexValue,
}

/// How [`kdf_f5_with`] evaluates F₅.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum F5Method {
    /// Integral representation with a Gauss–Jacobi rule.
    #[default]
    Integral,
    /// The double series, summed by rows.
    Series,
    /// Finite sum of ₂F₁ values, available when a′ − a ∈ {0, −1, −2, …}.
    Terminating,
    /// `Terminating` when available, `Integral` otherwise.
    Auto,
}

impl F5Args {
    /// Re(d) > 0 and Re(e − d) > 0.
    pub fn check_parameters(&self) -> Result<()> {
        if self.d.re <= 0.0 || (self.e - self.d).re <= 0.0 {
            return Err(Error::domain(format!(
                "F₅ integral needs Re d > 0 and Re(e−d) > 0 (d = {}, e = {})",
                self.d, self.e
            )));
        }
        Ok(())
    }

    /// The non-negative integer M with a′ − a = −M, if any.
    pub fn terminating_order(&self) -> Option<u64> {
        let diff = self.a_prime - self.a;
        if diff.im.abs() > 1e-12 || diff.re > 1e-9 {
            return None;
        }
        let r = diff.re.round();
        ((diff.re - r).abs() <= 1e-9).then_some((-r) as u64)
    }
}

/// Controls of the Gauss–Jacobi refinement in [`kdf_f5`].
#[derive(Debug, Clone, Copy)]
pub struct F5IntegralConfig {
    pub tol: f64,
    pub start_nodes: usize,
    pub max_nodes: usize,
}

impl Default for F5IntegralConfig {
    fn default() -> Self {
        F5IntegralConfig {
            tol: 1e-12,
            start_nodes: 8,
            max_nodes: 256,
        }
    }
}

/// Which form of the integrand is used on [0, 1].
#[derive(Debug, Clone, Copy)]
enum Integrand {
    /// (1−ζt)^{−c} ₂F₁(a, c; a′; χt/(1−ζt))
    Direct,
    /// (1−(χ+ζ)t)^{−c} ₂F₁(a′−a, c; a′; −χt/(1−(χ+ζ)t)), the Pfaff-transformed
    /// inner function; it continues F₅ to |ζ| ≥ 1 as long as |χ+ζ| < 1.
    Transformed,
}

const RELIABLE_RADIUS: f64 = 0.98;

/// F₅ by its integral representation.
pub fn kdf_f5(args: &F5Args) -> Result<ComplexValue> {
    kdf_f5_integral(args, &F5IntegralConfig::default())
}

/// F₅ by the selected evaluation path.
pub fn kdf_f5_with(args: &F5Args, method: F5Method) -> Result<ComplexValue> {
    match method {
        F5Method::Integral => kdf_f5(args),
        F5Method::Series => kdf_f5_series(args),
        F5Method::Terminating => kdf_f5_terminating(args),
        F5Method::Auto => {
            if args.terminating_order().is_some() {
                kdf_f5_terminating(args)
            } else {
                kdf_f5(args)
            }
        }
    }
}

/// F₅ by its integral representation with explicit refinement controls; the
/// quadrature is [`integrate_endpoint_powers`].
///
/// The direct integrand is used when |ζ| < 1 and |χ/(1−ζ)| < 1. Otherwise the
/// Pfaff-transformed integrand is used, which needs |χ+ζ| < 1. Nodes where the
/// inner ₂F₁ argument leaves the disk of radius 0.98 (non-terminating case)
/// are reported as non-convergence.
pub fn kdf_f5_integral(args: &F5Args, cfg: &F5IntegralConfig) -> Result<ComplexValue> {
    args.check_parameters()?;
    let F5Args { c, d, e, a, a_prime, chi, zeta } = *args;
    let mu = chi + zeta;
    let form = if zeta.norm() < 1.0 && (chi / (1.0 - zeta)).norm() < 1.0 {
        Integrand::Direct
    } else if mu.norm() < 1.0 {
        Integrand::Transformed
    } else {
        return Err(Error::domain(format!(
            "F₅ arguments (χ, ζ) = ({chi}, {zeta}) outside the validated domain"
        )));
    };
    let terminating_inner = match form {
        Integrand::Direct => as_nonpositive_integer(a).is_some(),
        Integrand::Transformed => args.terminating_order().is_some(),
    };
    let series_cfg = SeriesConfig::default();
    let inner = |t: f64| -> Result<ComplexValue> {
        let (base, upper, arg) = match form {
            Integrand::Direct => {
                let den = 1.0 - zeta * t;
                (den, a, chi * t / den)
            }
            Integrand::Transformed => {
                let den = 1.0 - mu * t;
                (den, a_prime - a, -chi * t / den)
            }
        };
        if !terminating_inner && arg.norm() > RELIABLE_RADIUS {
            return Err(Error::no_convergence(
                format!("inner ₂F₁ of F₅ at t = {t:.6} has argument {arg}"),
                arg.norm(),
                0,
            ));
        }
        Ok(base.powc(-c) * gauss_2f1_with(upper, c, a_prime, arg, &series_cfg)?)
    };

    let prefactor = (ln_gamma(e)? - ln_gamma(d)? - ln_gamma(e - d)?).exp();
    let graded = GradedConfig {
        tol: cfg.tol,
        start_nodes: cfg.start_nodes,
        max_nodes: cfg.max_nodes,
    };
    let value = integrate_endpoint_powers(d - 1.0, e - d - 1.0, inner, &graded)
        .map_err(|err| match err {
            Error::NonConvergence { estimate, budget, .. } => {
                Error::no_convergence("F₅ graded Gauss refinement", estimate, budget)
            }
            other => other,
        })?;
    Ok(prefactor * value)
}

/// F₅ by its double series, valid for |χ| + |ζ| < 1.
pub fn kdf_f5_series(args: &F5Args) -> Result<ComplexValue> {
    let F5Args { c, d, e, a, a_prime, chi, zeta } = *args;
    if chi.norm() + zeta.norm() >= 1.0 {
        return Err(Error::domain(format!(
            "F₅ double series needs |χ| + |ζ| < 1 (got {})",
            chi.norm() + zeta.norm()
        )));
    }
    let cfg = SeriesConfig::default();
    let row = |r: usize| {
        let rf = r as f64;
        gauss_2f1_with(c + rf, d + rf, e + rf, zeta, &cfg)
    };
    if chi == c64(0.0, 0.0) {
        return row(0);
    }
    let zero = c64(0.0, 0.0);
    let mut coef = c64(1.0, 0.0);
    let mut sum = row(0)?;
    let mut quiet = 0usize;
    for r in 0..cfg.max_terms {
        let rf = r as f64;
        let den = (e + rf) * (a_prime + rf) * (rf + 1.0);
        if den == zero {
            return Err(Error::pole("F₅ lower parameter hits zero"));
        }
        coef *= (c + rf) * (d + rf) * (a + rf) / den * chi;
        if coef == zero {
            return Ok(sum);
        }
        let term = coef * row(r + 1)?;
        sum += term;
        if term.norm() <= cfg.rel_tol * sum.norm() {
            quiet += 1;
            if quiet >= cfg.patience {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::no_convergence("F₅ outer series", f64::NAN, cfg.max_terms))
}

/// F₅ as the finite sum
/// Σ_{j=0}^{M} (−M)_j (c)_j (d)_j / ((a′)_j (e)_j j!) (−χ)^j ₂F₁(c+j, d+j; e+j; χ+ζ)
/// when a′ − a = −M. This is the analytic continuation of the double series
/// and needs only Re(χ+ζ) < 1/2 or |χ+ζ| < 1.
pub fn kdf_f5_terminating(args: &F5Args) -> Result<ComplexValue> {
    Ok(kdf_f5_terminating_tracked(args)?.value)
}

/// [`kdf_f5_terminating`] with its rounding error bound.
pub fn kdf_f5_terminating_bounded(args: &F5Args) -> Result<(ComplexValue, f64)> {
    let t = kdf_f5_terminating_tracked(args)?;
    Ok((t.value, t.rounding_bound()))
}

fn kdf_f5_terminating_tracked(args: &F5Args) -> Result<Tracked> {
    let order = args.terminating_order().ok_or_else(|| {
        Error::domain(format!(
            "terminating F₅ needs a′ − a to be a non-positive integer (a = {}, a′ = {})",
            args.a, args.a_prime
        ))
    })?;
    let F5Args { c, d, e, a_prime, chi, zeta, .. } = *args;
    let mu = chi + zeta;
    let cfg = SeriesConfig::default();
    let m = -(order as f64);
    let mut coef = c64(1.0, 0.0);
    let first = gauss_2f1_pfaff_extended_tracked(c, d, e, mu, &cfg)?;
    let mut sum = first.value;
    let mut mass = first.mass;
    for j in 0..order as usize {
        let jf = j as f64;
        let den = (a_prime + jf) * (e + jf) * (jf + 1.0);
        if den == c64(0.0, 0.0) {
            return Err(Error::pole("F₅ lower parameter hits zero"));
        }
        coef *= (m + jf) * (c + jf) * (d + jf) / den * (-chi);
        let k = jf + 1.0;
        let inner = gauss_2f1_pfaff_extended_tracked(c + k, d + k, e + k, mu, &cfg)?;
        sum += coef * inner.value;
        mass += coef.norm() * inner.mass;
    }
    Ok(Tracked { value: sum, mass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::gauss::gauss_2f1;

    fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn f1_trivial_cases() {
        let (a, b, c, d) = (c64(1.3, 0.2), c64(2.1, 0.0), c64(0.4, -0.1), c64(2.9, 0.0));
        let zero = c64(0.0, 0.0);
        assert_eq!(appell_f1(a, b, c, d, zero, zero).unwrap(), c64(1.0, 0.0));
        let x = c64(0.3, -0.2);
        let v = appell_f1(a, b, zero, d, x, c64(0.6, 0.1)).unwrap();
        assert!(close(v, gauss_2f1(a, b, d, x).unwrap(), 1e-14));
    }

    #[test]
    fn f1_reduction_at_reference_point() {
        let (a, b, c) = (c64(1.3, 0.0), c64(2.1, 0.0), c64(0.4, 0.0));
        let (x, y) = (c64(0.2, 0.0), c64(-0.1, 0.0));
        let lhs = appell_f1(a, b, c, b + c, x, y).unwrap();
        let rhs = (1.0 - y).powc(-a) * gauss_2f1(a, b, b + c, (x - y) / (1.0 - y)).unwrap();
        assert!(close(lhs, rhs, 1e-12), "{lhs} vs {rhs}");
    }

    #[test]
    fn f1_outside_domain() {
        let one = c64(1.0, 0.0);
        assert!(matches!(
            appell_f1(one, c64(0.5, 0.0), c64(0.5, 0.0), c64(2.0, 0.0), c64(1.2, 0.0), c64(0.1, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn f5_with_zero_chi_is_euler_integral() {
        let args = F5Args {
            c: c64(1.2, 0.5),
            d: c64(1.2, -0.5),
            e: c64(1.7, 0.0),
            a: c64(3.0, 0.0),
            a_prime: c64(2.2, 0.0),
            chi: c64(0.0, 0.0),
            zeta: c64(0.3, 0.1),
        };
        let expected = gauss_2f1(args.c, args.d, args.e, args.zeta).unwrap();
        assert!(close(kdf_f5(&args).unwrap(), expected, 1e-11));
        assert!(close(kdf_f5_series(&args).unwrap(), expected, 1e-14));
    }

    #[test]
    fn f5_reduces_when_a_equals_a_prime() {
        let args = F5Args {
            c: c64(1.2, 0.5),
            d: c64(1.2, -0.5),
            e: c64(1.7, 0.0),
            a: c64(2.5, 0.0),
            a_prime: c64(2.5, 0.0),
            chi: c64(0.15, 0.0),
            zeta: c64(0.2, 0.0),
        };
        let expected = gauss_2f1(args.c, args.d, args.e, args.chi + args.zeta).unwrap();
        for method in [F5Method::Integral, F5Method::Series, F5Method::Terminating] {
            let v = kdf_f5_with(&args, method).unwrap();
            assert!(close(v, expected, 1e-9), "{method:?}: {v} vs {expected}");
        }
    }

    #[test]
    fn f5_series_and_integral_agree_generic() {
        let args = F5Args {
            c: c64(1.5, 0.3),
            d: c64(1.5, -0.3),
            e: c64(2.0, 0.0),
            a: c64(4.2, 0.0),
            a_prime: c64(3.0, 0.0),
            chi: c64(0.1, 0.0),
            zeta: c64(0.15, 0.0),
        };
        let s = kdf_f5_series(&args).unwrap();
        let i = kdf_f5(&args).unwrap();
        assert!(close(s, i, 1e-9), "{s} vs {i}");
        assert!(matches!(kdf_f5_terminating(&args), Err(Error::Domain(_))));
    }

    #[test]
    fn f5_terminating_continues_beyond_series_domain() {
        // ζ = 1/(1−z) with z = 0.25 lies outside the series domain
        let g = 1.366_025_403_784_438_6;
        let xi = 0.8;
        let z = c64(0.25, 0.0);
        let r = z.norm_sqr();
        let args = F5Args {
            c: c64(g, xi),
            d: c64(g, -xi),
            e: c64(g + 0.5, 0.0),
            a: c64(2.0 * g + 1.0, 0.0),
            a_prime: c64(2.0 * g, 0.0),
            chi: (1.0 - r) / ((z.conj() - 1.0) * (1.0 - z)),
            zeta: 1.0 / (1.0 - z),
        };
        assert!(kdf_f5_series(&args).is_err());
        let t = kdf_f5_terminating(&args).unwrap();
        let i = kdf_f5(&args).unwrap();
        assert!(close(t, i, 1e-10), "{t} vs {i}");
    }

    #[test]
    fn f5_parameter_checks() {
        let args = F5Args {
            c: c64(1.0, 0.0),
            d: c64(-0.5, 0.0),
            e: c64(2.0, 0.0),
            a: c64(1.0, 0.0),
            a_prime: c64(1.0, 0.0),
            chi: c64(0.1, 0.0),
            zeta: c64(0.1, 0.0),
        };
        assert!(matches!(kdf_f5(&args), Err(Error::Domain(_))));
        let far = F5Args { d: c64(0.5, 0.0), chi: c64(0.9, 0.0), zeta: c64(0.9, 0.0), ..args };
        assert!(matches!(kdf_f5(&far), Err(Error::Domain(_))));
    }
}
