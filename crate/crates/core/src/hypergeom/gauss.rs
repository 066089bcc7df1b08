//! Gauss ₂F₁ and the terminating ₃F₂ at unit argument.

use crate::error::{Error, Result};
use crate::hypergeom::gamma::as_nonpositive_integer;
use crate::{c64, ComplexValue};

/// Truncation policy shared by all power series in this module.
#[derive(Debug, Clone, Copy)]
pub struct SeriesConfig {
    /// A term is negligible once it is below `rel_tol * |partial sum|`.
    pub rel_tol: f64,
    /// Number of consecutive negligible terms required before stopping.
    pub patience: usize,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: f64::EPSILON,
            patience: 20,
            max_terms: 10_000,
        }
    }
}

/// Radius inside which ₂F₁ is summed directly.
const DIRECT_RADIUS: f64 = 0.5;

/// A series value together with Σ|t_n|, the magnitude the rounding error
/// scales with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Tracked {
    pub value: ComplexValue,
    pub mass: f64,
}

impl Tracked {
    fn scaled(self, factor: ComplexValue) -> Tracked {
        Tracked {
            value: factor * self.value,
            mass: factor.norm() * self.mass,
        }
    }

    /// Rounding error bound 4ε Σ|t_n|; observed errors sit about 30× below it.
    pub fn rounding_bound(&self) -> f64 {
        4.0 * f64::EPSILON * self.mass
    }
}

/// Sums Σ t_n where t_0 = 1 and t_{n+1} = t_n · ratio(n).
fn sum_ratio_series_tracked<F>(mut ratio: F, cfg: &SeriesConfig, what: &str) -> Result<Tracked>
where
    F: FnMut(usize) -> Result<ComplexValue>,
{
    let mut term = c64(1.0, 0.0);
    let mut sum = term;
    let mut mass = 1.0;
    let mut quiet = 0usize;
    for n in 0..cfg.max_terms {
        term *= ratio(n)?;
        sum += term;
        mass += term.norm();
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::no_convergence(format!("{what}: overflow"), f64::INFINITY, n));
        }
        if term.norm() <= cfg.rel_tol * sum.norm() {
            quiet += 1;
            if quiet >= cfg.patience {
                return Ok(Tracked { value: sum, mass });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::no_convergence(what.to_string(), term.norm() / sum.norm(), cfg.max_terms))
}

fn terminating_2f1(n: u64, other: ComplexValue, c: ComplexValue, z: ComplexValue) -> Result<Tracked> {
    let a = -(n as f64);
    let mut term = c64(1.0, 0.0);
    let mut sum = term;
    let mut mass = 1.0;
    for j in 0..n {
        let den = c + j as f64;
        if den == c64(0.0, 0.0) {
            return Err(Error::pole(format!("₂F₁ lower parameter hits zero at term {j}")));
        }
        let jf = j as f64;
        term *= (a + jf) * (other + jf) / (den * (jf + 1.0)) * z;
        sum += term;
        mass += term.norm();
    }
    Ok(Tracked { value: sum, mass })
}

fn direct_2f1(a: ComplexValue, b: ComplexValue, c: ComplexValue, z: ComplexValue, cfg: &SeriesConfig) -> Result<Tracked> {
    sum_ratio_series_tracked(
        |n| {
            let nf = n as f64;
            Ok((a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z)
        },
        cfg,
        "₂F₁ power series",
    )
}

fn terminating_order(a: ComplexValue, b: ComplexValue) -> Option<(u64, ComplexValue)> {
    match (as_nonpositive_integer(a), as_nonpositive_integer(b)) {
        (Some(n), Some(m)) if m < n => Some((m, a)),
        (Some(n), _) => Some((n, b)),
        (None, Some(m)) => Some((m, a)),
        (None, None) => None,
    }
}

/// ₂F₁(a, b; c; z) with the default truncation policy.
pub fn gauss_2f1(a: ComplexValue, b: ComplexValue, c: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    gauss_2f1_with(a, b, c, z, &SeriesConfig::default())
}

/// ₂F₁(a, b; c; z).
///
/// Terminating cases are summed exactly for any z. Otherwise |z| < 1 is
/// required: the series is summed directly for |z| ≤ 1/2, and for larger |z|
/// a Pfaff transformation is applied whenever z/(z−1) is closer to the origin.
pub fn gauss_2f1_with(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    cfg: &SeriesConfig,
) -> Result<ComplexValue> {
    Ok(gauss_2f1_tracked(a, b, c, z, cfg)?.value)
}

pub(crate) fn gauss_2f1_tracked(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    cfg: &SeriesConfig,
) -> Result<Tracked> {
    if z == c64(0.0, 0.0) {
        return Ok(Tracked { value: c64(1.0, 0.0), mass: 1.0 });
    }
    if let Some((n, other)) = terminating_order(a, b) {
        return terminating_2f1(n, other, c, z);
    }
    if let Some(q) = as_nonpositive_integer(c) {
        return Err(Error::pole(format!("₂F₁ with c = -{q} and a non-terminating series")));
    }
    let r = z.norm();
    if r >= 1.0 {
        return Err(Error::domain(format!("₂F₁ outside the unit disk (|z| = {r})")));
    }
    if r <= DIRECT_RADIUS {
        return direct_2f1(a, b, c, z, cfg);
    }
    let w = z / (z - 1.0);
    if w.norm() < r {
        return pfaff(a, b, c, z, w, cfg);
    }
    direct_2f1(a, b, c, z, cfg)
}

/// ₂F₁(a, b; c; z) by its power series alone, for any |z| < 1; no
/// transformation is applied.
pub fn gauss_2f1_series(a: ComplexValue, b: ComplexValue, c: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if let Some((n, other)) = terminating_order(a, b) {
        return Ok(terminating_2f1(n, other, c, z)?.value);
    }
    if let Some(q) = as_nonpositive_integer(c) {
        return Err(Error::pole(format!("₂F₁ with c = -{q} and a non-terminating series")));
    }
    if z.norm() >= 1.0 {
        return Err(Error::domain(format!("₂F₁ series outside the unit disk (|z| = {})", z.norm())));
    }
    Ok(direct_2f1(a, b, c, z, &SeriesConfig::default())?.value)
}

// ₂F₁(a,b;c;z) = (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1)), or the a ↔ b variant
// when that one terminates.
fn pfaff(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    w: ComplexValue,
    cfg: &SeriesConfig,
) -> Result<Tracked> {
    let one_minus = 1.0 - z;
    if as_nonpositive_integer(c - a).is_some() && as_nonpositive_integer(c - b).is_none() {
        return Ok(gauss_2f1_tracked(c - a, b, c, w, cfg)?.scaled(one_minus.powc(-b)));
    }
    Ok(gauss_2f1_tracked(a, c - b, c, w, cfg)?.scaled(one_minus.powc(-a)))
}

/// ₂F₁ continued to points outside the unit disk that a Pfaff transformation
/// maps back inside (Re z < 1/2).
pub(crate) fn gauss_2f1_pfaff_extended_tracked(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    cfg: &SeriesConfig,
) -> Result<Tracked> {
    if z.norm() < 1.0 || terminating_order(a, b).is_some() {
        return gauss_2f1_tracked(a, b, c, z, cfg);
    }
    let w = z / (z - 1.0);
    if w.norm() >= 1.0 {
        return Err(Error::domain(format!(
            "₂F₁ argument {z} is not reachable by a Pfaff transformation"
        )));
    }
    if let Some(q) = as_nonpositive_integer(c) {
        return Err(Error::pole(format!("₂F₁ with c = -{q}")));
    }
    pfaff(a, b, c, z, w, cfg)
}

/// Σ_{j=0}^{n} (−n)_j (a2)_j (a3)_j / ((b1)_j (b2)_j j!), the ₃F₂ at unit argument.
pub fn hyp3f2_terminating_unit(
    n: usize,
    a2: ComplexValue,
    a3: ComplexValue,
    b1: ComplexValue,
    b2: ComplexValue,
) -> Result<ComplexValue> {
    let minus_n = -(n as f64);
    let mut term = c64(1.0, 0.0);
    let mut sum = term;
    for j in 0..n {
        let jf = j as f64;
        let den = (b1 + jf) * (b2 + jf);
        if den == c64(0.0, 0.0) {
            return Err(Error::pole(format!("₃F₂ lower parameter hits zero at term {j}")));
        }
        term *= (minus_n + jf) * (a2 + jf) * (a3 + jf) / (den * (jf + 1.0));
        sum += term;
    }
    Ok(sum)
}
