//! Jacobi, Laguerre and continuous dual Hahn polynomials.

use crate::error::{Error, Result};
use crate::hypergeom::{hyp3f2_terminating_unit, pochhammer};
use crate::{c64, ComplexValue};

/// Degree, parameters and argument of P_n^{(α,β)}(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub x: ComplexValue,
}

/// Π_{i=0}^{len−1} (a + i)/(i + 1), i.e. (a)_len / len!.
fn binomial_like(a: f64, len: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..len {
        acc *= (a + i as f64) / (i as f64 + 1.0);
    }
    acc
}

/// P_n^{(α,β)}(x) for any real α, β, including negative integers.
///
/// Uses the rearranged terminating series
/// P_n^{(α,β)}(x) = Σ_j (−1)^j (α+1+j)_{n−j}/(n−j)! · (n+α+β+1)_j/j! · ((1−x)/2)^j,
/// which equals ((α+1)_n/n!) ₂F₁(−n, n+α+β+1; α+1; (1−x)/2) but never divides
/// by (α+1)_j, so α = −1, −2, … needs no special path. For Re x < 0 the
/// reflection P_n^{(α,β)}(x) = (−1)^n P_n^{(β,α)}(−x) keeps |(1−x)/2| ≤ 1.
///
/// In the classical range α, β > −1 the three-term recurrence is used
/// instead; the alternating series cancels badly for large n near x = 0.
pub fn jacobi_p(p: &JacobiParams) -> ComplexValue {
    let JacobiParams { n, alpha, beta, x } = *p;
    if recurrence_is_safe(alpha, beta) {
        return jacobi_recurrence(n, alpha, beta, x);
    }
    if x.re < 0.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return sign * jacobi_series(n, beta, alpha, -x);
    }
    jacobi_series(n, alpha, beta, x)
}

/// The recurrence is used only for α, β > −1; outside that range P_n can
/// carry high-order zeros at x = ±1 or pass near poles of the recurrence
/// coefficients, and the pole-free series is the safer route.
fn recurrence_is_safe(alpha: f64, beta: f64) -> bool {
    alpha > -1.0 && beta > -1.0
}

fn jacobi_recurrence(n: usize, a: f64, b: f64, x: ComplexValue) -> ComplexValue {
    let mut p0 = c64(1.0, 0.0);
    if n == 0 {
        return p0;
    }
    let mut p1 = 0.5 * (2.0 * (a + 1.0) + (a + b + 2.0) * (x - 1.0));
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let p2 = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * p1 - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * p0)
            / (2.0 * k * (k + a + b) * (s - 2.0));
        p0 = p1;
        p1 = p2;
    }
    p1
}

fn jacobi_series(n: usize, alpha: f64, beta: f64, x: ComplexValue) -> ComplexValue {
    let u = (1.0 - x) * 0.5;
    let top = n as f64 + alpha + beta + 1.0;
    let mut sum = c64(0.0, 0.0);
    let mut u_pow = c64(1.0, 0.0);
    let mut upper = 1.0;
    for j in 0..=n {
        let lower = binomial_like(alpha + 1.0 + j as f64, n - j);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * lower * upper * u_pow;
        upper *= (top + j as f64) / (j as f64 + 1.0);
        u_pow *= u;
    }
    sum
}

/// P_n^{(α,β)}(u) through the connection formula
/// ((1−u)/2)^n · P_n^{(−2n−α−β−1, β)}((u+3)/(u−1)).
pub fn jacobi_connection(n: usize, alpha: f64, beta: f64, u: ComplexValue) -> Result<ComplexValue> {
    if u == c64(1.0, 0.0) {
        return Err(Error::domain("connection formula is singular at u = 1"));
    }
    if n == 0 {
        return Ok(c64(1.0, 0.0));
    }
    let inner = jacobi_p(&JacobiParams {
        n,
        alpha: -2.0 * n as f64 - alpha - beta - 1.0,
        beta,
        x: (u + 3.0) / (u - 1.0),
    });
    Ok(((1.0 - u) * 0.5).powi(n as i32) * inner)
}

/// Generalized Laguerre polynomial L_n^{(α)}(x) by the three-term recurrence.
pub fn laguerre_l(n: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Continuous dual Hahn polynomial
/// S_n(ξ²; a, b, c) = (a+b)_n (a+c)_n ₃F₂(−n, a+iξ, a−iξ; a+b, a+c; 1).
///
/// The terms are complex but pair up into a real sum; any imaginary residue
/// is dropped.
pub fn cdhahn_s(n: usize, xi: f64, a: f64, b: f64, c: f64) -> f64 {
    let ab = c64(a + b, 0.0);
    let ac = c64(a + c, 0.0);
    let f = hyp3f2_terminating_unit(n, c64(a, xi), c64(a, -xi), ab, ac)
        .expect("a + b and a + c are positive");
    (pochhammer(ab, n) * pochhammer(ac, n) * f).re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::gamma;
    use approx::assert_abs_diff_eq;

    // Standard three-term recurrence, independent of the series above.
    fn jacobi_recurrence(n: usize, a: f64, b: f64, x: f64) -> f64 {
        let mut p0 = 1.0;
        if n == 0 {
            return p0;
        }
        let mut p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
        for k in 2..=n {
            let k = k as f64;
            let s = 2.0 * k + a + b;
            let next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * p1
                - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * p0)
                / (2.0 * k * (k + a + b) * (s - 2.0));
            p0 = p1;
            p1 = next;
        }
        p1
    }

    fn jp(n: usize, alpha: f64, beta: f64, x: f64) -> ComplexValue {
        jacobi_p(&JacobiParams { n, alpha, beta, x: c64(x, 0.0) })
    }

    #[test]
    fn jacobi_degree_zero_and_unit_argument() {
        assert_eq!(jp(0, 2.3, -0.4, 0.7), c64(1.0, 0.0));
        for n in 0..8 {
            let alpha = 1.7;
            let expected = (gamma(c64(n as f64 + alpha + 1.0, 0.0)).unwrap()
                / gamma(c64(alpha + 1.0, 0.0)).unwrap()
                / gamma(c64(n as f64 + 1.0, 0.0)).unwrap())
            .re;
            assert_abs_diff_eq!(jp(n, alpha, 0.9, 1.0).re, expected, epsilon = 1e-12 * expected);
        }
    }

    #[test]
    fn jacobi_matches_recurrence() {
        for n in 0..12 {
            for &(a, b, x) in &[(0.3, 1.7, 0.4), (2.5, -0.5, -0.8), (5.1, 3.2, 0.95)] {
                let r = jacobi_recurrence(n, a, b, x);
                assert_abs_diff_eq!(jp(n, a, b, x).re, r, epsilon = 1e-11 * (1.0 + r.abs()));
            }
        }
    }

    #[test]
    fn jacobi_fully_negative_alpha_closed_form() {
        // P_k^{(−k, σ−1)}(1−2r) = (−r)^k Γ(σ+k)/(Γ(σ) k!)
        let (k, sigma, r) = (3usize, 5.0f64, 0.2f64);
        let expected = (-r).powi(k as i32) * 7.0 * 6.0 * 5.0 / 6.0;
        assert_abs_diff_eq!(jp(k, -(k as f64), sigma - 1.0, 1.0 - 2.0 * r).re, expected, epsilon = 1e-14);
    }

    #[test]
    fn jacobi_continuous_through_negative_integer_alpha() {
        let at = |alpha: f64| jp(5, alpha, 3.5, 0.3).re;
        for q in 1..=5 {
            let a = -(q as f64);
            let left = at(a - 1e-7);
            let right = at(a + 1e-7);
            assert!((left - right).abs() < 1e-5 * (1.0 + at(a).abs()));
            assert!((0.5 * (left + right) - at(a)).abs() < 1e-6 * (1.0 + at(a).abs()));
        }
    }

    #[test]
    fn connection_formula_agrees() {
        let (g, m, r) = (1.6, 1.0, 0.3);
        let u = c64(1.0 - 2.0 * r, 0.0);
        let direct = jacobi_p(&JacobiParams { n: 2, alpha: 2.0 * g - 1.0, beta: m - 2.0, x: u });
        let conn = jacobi_connection(2, 2.0 * g - 1.0, m - 2.0, u).unwrap();
        assert!((direct - conn).norm() < 1e-12);
        assert_eq!(jacobi_connection(0, 0.2, 0.4, c64(0.3, 0.0)).unwrap(), c64(1.0, 0.0));
        assert!(matches!(jacobi_connection(3, 0.2, 0.4, c64(1.0, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn jacobi_reflection_symmetry() {
        let lhs = jp(3, 0.7, 2.4, 0.35);
        let rhs = -jp(3, 2.4, 0.7, -0.35);
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn laguerre_low_degrees() {
        assert_eq!(laguerre_l(0, 1.3, 4.0), 1.0);
        assert_abs_diff_eq!(laguerre_l(1, 1.3, 0.4), 1.9, epsilon = 1e-15);
        // L_2^{(α)}(x) = ((α+1)(α+2) − 2(α+2)x + x²)/2
        let (a, x) = (2.5, 1.7);
        let exact = ((a + 1.0) * (a + 2.0) - 2.0 * (a + 2.0) * x + x * x) / 2.0;
        assert_abs_diff_eq!(laguerre_l(2, a, x), exact, epsilon = 1e-14);
    }

    #[test]
    fn cdhahn_low_degrees() {
        assert_eq!(cdhahn_s(0, 0.4, 1.6, 1.6, 0.5), 1.0);
        let (xi, a, b, c) = (0.8, 1.6, 1.6, 0.5);
        let exact = (a + b) * (a + c) - (a * a + xi * xi);
        assert_abs_diff_eq!(cdhahn_s(1, xi, a, b, c), exact, epsilon = 1e-13);
    }

    #[test]
    fn cdhahn_matches_recurrence() {
        // Monic-free recurrence for S_n with A_n = (n+a+b)(n+a+c), C_n = n(n+b+c−1):
        // −(a²+ξ²) S_n = A_n S_{n+1} − (A_n + C_n) S_n + C_n S_{n−1}, with S_n scaled
        // so that S_n = (a+b)_n (a+c)_n · (₃F₂ value).
        let (xi, a, b, c) = (0.5, 1.6, 1.6, 0.5);
        let x = -(a * a + xi * xi);
        let mut s_prev = 1.0; // ₃F₂ normalization p_0
        let mut s = 1.0 + x / ((a + b) * (a + c));
        let norm = |n: usize| {
            let mut p = 1.0;
            for k in 0..n {
                p *= (k as f64 + a + b) * (k as f64 + a + c);
            }
            p
        };
        for n in 1..6 {
            let nf = n as f64;
            let an = (nf + a + b) * (nf + a + c);
            let cn = nf * (nf + b + c - 1.0);
            let next = ((an + cn + x) * s - cn * s_prev) / an;
            s_prev = s;
            s = next;
            let expected = s * norm(n + 1);
            let got = cdhahn_s(n + 1, xi, a, b, c);
            assert!((got - expected).abs() < 1e-11 * expected.abs().max(1.0), "n={n}: {got} vs {expected}");
        }
        let two = cdhahn_s(2, xi, a, b, c);
        assert!(two.is_finite());
    }
}
