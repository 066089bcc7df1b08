//! Grid specifications.
//!
//! z-grids:
//! * `re,im;re,im;…` explicit points, each must lie inside the evaluation cap;
//! * `rect:re0,re1,nre;im0,im1,nim` inclusive rectangular mesh;
//! * `polar:rmax,nr,nphi` the origin plus `nr` rings of `nphi` points.
//!
//! Mesh points outside the evaluation region (|z| ≤ r_max, |1 − z| ≥ 0.2) are
//! dropped. ξ-grids are `x0,x1,…` or `lin:x0,x1,n`, all non-negative.

use std::f64::consts::PI;

use relbarg::coherent::{MIN_DIST_FROM_ONE, R_MAX};
use relbarg::disk::DiskPoint;
use relbarg::{c64, ComplexValue};

use crate::error::CliError;

fn number(s: &str, what: &str) -> Result<f64, CliError> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::config(format!("{what}: '{}' is not a number", s.trim())))?;
    if !v.is_finite() {
        return Err(CliError::config(format!("{what}: '{}' is not finite", s.trim())));
    }
    Ok(v)
}

fn count(s: &str, what: &str) -> Result<usize, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::config(format!("{what}: '{}' is not a count", s.trim())))
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

fn triple(s: &str, what: &str) -> Result<(f64, f64, usize), CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::config(format!("{what}: expected 'start,end,count' (got '{s}')")));
    }
    Ok((number(parts[0], what)?, number(parts[1], what)?, count(parts[2], what)?))
}

/// A complex number written `re,im`.
pub fn parse_complex(s: &str, what: &str) -> Result<ComplexValue, CliError> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| CliError::config(format!("{what}: expected 're,im' (got '{s}')")))?;
    Ok(c64(number(re, what)?, number(im, what)?))
}

fn in_region(z: ComplexValue) -> bool {
    z.norm() <= R_MAX && (1.0 - z).norm() >= MIN_DIST_FROM_ONE
}

fn capped(z: ComplexValue) -> Result<DiskPoint, CliError> {
    if z.norm() > R_MAX {
        return Err(CliError::Domain(format!(
            "grid point {} + {}i has |z| = {:.6} beyond the evaluation cap r_max = {R_MAX}",
            z.re,
            z.im,
            z.norm()
        )));
    }
    Ok(DiskPoint::new(z)?)
}

pub fn parse_z_grid(spec: &str) -> Result<Vec<DiskPoint>, CliError> {
    let spec = spec.trim();
    let points = if let Some(body) = spec.strip_prefix("rect:") {
        let (re, im) = body
            .split_once(';')
            .ok_or_else(|| CliError::config("rect grid: expected 're0,re1,n;im0,im1,n'"))?;
        let (a, b, n) = triple(re, "rect grid")?;
        let (c, d, k) = triple(im, "rect grid")?;
        let mut pts = Vec::new();
        for y in linspace(c, d, k) {
            for x in linspace(a, b, n) {
                let z = c64(x, y);
                if in_region(z) {
                    pts.push(DiskPoint::new(z)?);
                }
            }
        }
        pts
    } else if let Some(body) = spec.strip_prefix("polar:") {
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 3 {
            return Err(CliError::config("polar grid: expected 'rmax,nr,nphi'"));
        }
        let rmax = number(parts[0], "polar grid")?;
        let (nr, nphi) = (count(parts[1], "polar grid")?, count(parts[2], "polar grid")?);
        if rmax > R_MAX {
            return Err(CliError::Domain(format!(
                "polar grid radius {rmax} exceeds the evaluation cap r_max = {R_MAX}"
            )));
        }
        if rmax < 0.0 || nphi == 0 {
            return Err(CliError::config("polar grid needs rmax ≥ 0 and nphi ≥ 1"));
        }
        let mut pts = vec![DiskPoint::new(c64(0.0, 0.0))?];
        for i in 1..=nr {
            let r = rmax * i as f64 / nr as f64;
            for j in 0..nphi {
                let z = ComplexValue::from_polar(r, 2.0 * PI * j as f64 / nphi as f64);
                if in_region(z) {
                    pts.push(DiskPoint::new(z)?);
                }
            }
        }
        pts
    } else {
        spec.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|p| parse_complex(p, "grid point").and_then(capped))
            .collect::<Result<Vec<_>, _>>()?
    };
    if points.is_empty() {
        return Err(CliError::config(format!("z-grid '{spec}' contains no points")));
    }
    Ok(points)
}

pub fn parse_xi_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let spec = spec.trim();
    let xs = if let Some(body) = spec.strip_prefix("lin:") {
        let (a, b, n) = triple(body, "xi grid")?;
        linspace(a, b, n)
    } else {
        spec.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| number(s, "xi grid"))
            .collect::<Result<Vec<_>, _>>()?
    };
    if xs.is_empty() {
        return Err(CliError::config(format!("xi-grid '{spec}' contains no points")));
    }
    if let Some(x) = xs.iter().find(|x| **x < 0.0) {
        return Err(CliError::config(format!("xi-grid values must be non-negative (got {x})")));
    }
    Ok(xs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_lists() {
        let g = parse_z_grid("0,0; 0.3,-0.2 ;").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[1].z, c64(0.3, -0.2));
        assert!(matches!(parse_z_grid("0.9,0"), Err(CliError::Domain(m)) if m.contains("r_max")));
        assert!(matches!(parse_z_grid(""), Err(CliError::Config(_))));
        assert!(matches!(parse_z_grid("0,nan"), Err(CliError::Config(_))));
        assert!(matches!(parse_z_grid("0;1"), Err(CliError::Config(_))));
    }

    #[test]
    fn meshes_are_clipped() {
        let g = parse_z_grid("rect:-0.8,0.8,5;-0.8,0.8,5").unwrap();
        assert!(g.len() < 25 && !g.is_empty());
        assert!(g.iter().all(|p| in_region(p.z)));
        let p = parse_z_grid("polar:0.5,2,4").unwrap();
        assert_eq!(p.len(), 9);
        assert!((p[8].z.norm() - 0.5).abs() < 1e-15);
        assert!(matches!(parse_z_grid("polar:0.9,2,4"), Err(CliError::Domain(_))));
        assert!(matches!(parse_z_grid("rect:0.9,0.95,2;0,0,1"), Err(CliError::Config(_))));
    }

    #[test]
    fn xi_grids() {
        assert_eq!(parse_xi_grid("lin:0,1,3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(parse_xi_grid("0.5, 2").unwrap(), vec![0.5, 2.0]);
        assert!(parse_xi_grid("").is_err());
        assert!(parse_xi_grid("-1").is_err());
    }
}
