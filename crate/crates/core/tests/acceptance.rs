//! The eleven acceptance criteria, run in sequence with their tolerances and
//! time limits. Each prints one PASS/FAIL line; the test fails if any does.

use std::f64::consts::PI;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relbarg::bargmann::{
    classical_bargmann, laguerre_mode, relativistic_transform, relativistic_transform_m0, TransformConfig,
};
use relbarg::coherent::{cs_wavefunction, cs_wavefunction_oracle, normalization, overlap, CoherentLabel};
use relbarg::disk::{basis_phi, gram_matrix, maass_apply_fd, DiskPoint, LandauIndex};
use relbarg::hypergeom::{ln_gamma_real, F5Method};
use relbarg::identities::{f5_reduction, pfaff, saran, srivastava_rao, SaranArgs, SrivastavaRaoArgs};
use relbarg::oscillator::{self, eigenfunctions, ModelParams, OscParams};
use relbarg::verify::resolution_defect;
use relbarg::{c64, ComplexValue, Result};

const SEED: u64 = 0x5eed_ac;

struct Criterion {
    id: u32,
    name: &'static str,
    tol: f64,
    limit: Duration,
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, name: "disk basis Gram matrix, k <= 8", tol: 1e-8, limit: Duration::from_secs(10) },
    Criterion { id: 2, name: "eigen-equation by finite differences", tol: 1e-4, limit: Duration::from_secs(5) },
    Criterion { id: 3, name: "overlap closed form vs series", tol: 1e-8, limit: Duration::from_secs(10) },
    Criterion { id: 4, name: "Srivastava-Rao and Saran identities", tol: 1e-8, limit: Duration::from_secs(10) },
    Criterion { id: 5, name: "oscillator Gram matrix, k <= 5", tol: 1e-6, limit: Duration::from_secs(30) },
    Criterion { id: 6, name: "closed-form wavefunction vs superposition", tol: 1e-6, limit: Duration::from_secs(60) },
    Criterion { id: 7, name: "F5 reduction and Pfaff, randomized", tol: 1e-9, limit: Duration::from_secs(5) },
    Criterion { id: 8, name: "basis mapping B[phi_j] = Phi_j", tol: 1e-6, limit: Duration::from_secs(120) },
    Criterion { id: 9, name: "m = 0 reduced kernel and holomorphy", tol: 1e-8, limit: Duration::from_secs(60) },
    Criterion { id: 10, name: "resolution of the identity", tol: 1e-5, limit: Duration::from_secs(120) },
    Criterion { id: 11, name: "classical transform monomial images", tol: 1e-7, limit: Duration::from_secs(10) },
];

const PFAFF_TOL: f64 = 1e-10;
const HOLOMORPHY_TOL: f64 = 1e-5;
const DISK_INDICES: [(f64, usize); 3] = [(5.0, 0), (7.5, 1), (9.0, 2)];

fn pt(re: f64, im: f64) -> DiskPoint {
    DiskPoint::from_parts(re, im).unwrap()
}

fn random_point(rng: &mut ChaCha8Rng, rmax: f64) -> DiskPoint {
    let r = rmax * rng.gen::<f64>().sqrt();
    DiskPoint::new(ComplexValue::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))).unwrap()
}

fn disk_indices() -> Vec<LandauIndex> {
    DISK_INDICES.iter().map(|&(s, m)| LandauIndex::new(s, m).unwrap()).collect()
}

fn eigenfunction(j: usize, osc: &OscParams) -> impl Fn(f64) -> ComplexValue + Sync + '_ {
    move |xi| eigenfunctions(j, osc, xi).map(|e| e[j]).unwrap_or(c64(f64::NAN, 0.0))
}

/// max |G − I| over the Gram matrices of the three disk indices.
fn disk_gram() -> Result<f64> {
    let mut worst = 0.0f64;
    for idx in disk_indices() {
        let g = gram_matrix(&idx, 8, 1e-13)?;
        for (j, row) in g.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let delta = if j == k { 1.0 } else { 0.0 };
                worst = worst.max((v - delta).norm());
            }
        }
    }
    Ok(worst)
}

/// max |ΔΦ_k − εΦ_k| / (1 + |Φ_k|) over a 5×5 interior grid with ε = 4m(σ−1−m).
fn eigen_equation() -> Result<f64> {
    let grid: Vec<DiskPoint> = (0..5)
        .flat_map(|i| (0..5).map(move |j| pt(-0.5 + 0.25 * i as f64, -0.5 + 0.25 * j as f64)))
        .collect();
    let mut worst = 0.0f64;
    for idx in disk_indices() {
        let m = idx.m as f64;
        let eps = 4.0 * m * (idx.sigma - 1.0 - m);
        for k in 0..=5 {
            let phi = |z: ComplexValue| basis_phi(k, &idx, DiskPoint { z }).unwrap();
            for z in &grid {
                let lap = maass_apply_fd(&idx, phi, *z, 1e-4)?;
                let v = phi(z.z);
                worst = worst.max((lap - eps * v).norm() / (1.0 + v.norm()));
            }
        }
    }
    Ok(worst)
}

/// Closed-form overlap against (N(z)N(w))^{−1/2} Σ_{k≤160} Φ_k(z) conj Φ_k(w).
fn overlap_series_agreement() -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    for idx in disk_indices() {
        for _ in 0..50 {
            let (z, w) = (random_point(&mut rng, 0.5), random_point(&mut rng, 0.5));
            let mut sum = c64(0.0, 0.0);
            for k in 0..=160 {
                sum += basis_phi(k, &idx, z)? * basis_phi(k, &idx, w)?.conj();
            }
            let series = sum / (normalization(&idx, z) * normalization(&idx, w)).sqrt();
            worst = worst.max((overlap(&idx, z, w)? - series).norm());
        }
    }
    Ok(worst)
}

fn bilinear_identities() -> Result<f64> {
    // left-hand series at these arguments, from a 30-digit mpmath evaluation
    let anchor = SrivastavaRaoArgs { t: 0.2, x: 0.3, y: -0.4, alpha: 3.5, gamma: 1.5 };
    let mut worst = (srivastava_rao(&anchor, 80)?.lhs - c64(1.068_049_153_295_109_8, 0.0)).norm();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for _ in 0..20 {
        let args = SrivastavaRaoArgs {
            t: rng.gen_range(-0.25..=0.25),
            x: rng.gen_range(-0.95..0.95),
            y: rng.gen_range(-0.95..0.95),
            alpha: rng.gen_range(-0.5..5.0),
            gamma: rng.gen_range(0.0..4.0),
        };
        worst = worst.max(srivastava_rao(&args, 80)?.error());
    }
    for _ in 0..20 {
        let args = SaranArgs {
            theta: rng.gen_range(-0.3..=0.3),
            v: rng.gen_range(-0.9..0.9),
            y: rng.gen_range(-0.4..=0.4),
            alpha: -rng.gen_range(1.0..5.0),
            beta: rng.gen_range(0..4),
            b: rng.gen_range(1.5..4.0),
            c: c64(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0)),
        };
        worst = worst.max(saran(&args, 60)?.error());
    }
    Ok(worst)
}

fn oscillator_gram() -> Result<f64> {
    let mut worst = 0.0f64;
    for c in [0.8, 1.0, 1.5] {
        let (g, _) = oscillator::gram_matrix(5, &OscParams::new(c)?, 1e-10)?;
        for (j, row) in g.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let delta = if j == k { 1.0 } else { 0.0 };
                worst = worst.max((v - delta).norm());
            }
        }
    }
    Ok(worst)
}

fn wavefunction_vs_oracle() -> Result<f64> {
    let zs = [pt(0.25, 0.0), pt(0.2, 0.15), pt(-0.3, 0.2)];
    let xis = [0.5, 0.8, 1.0, 2.0];
    let mut worst = 0.0f64;
    for m in [0usize, 1] {
        let params = ModelParams::new(1.0, m)?;
        for z in zs {
            let label = CoherentLabel { z, params };
            for xi in xis {
                let closed = cs_wavefunction(&label, xi)?;
                let (series, _) = cs_wavefunction_oracle(&label, xi, 160, 1e-9)?;
                worst = worst.max((closed - series).norm());
            }
        }
    }
    Ok(worst)
}

/// (F₅ reduction error, Pfaff error).
fn randomized_identities() -> Result<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let cplx = |rng: &mut ChaCha8Rng, lo: f64, hi: f64, im: f64| c64(rng.gen_range(lo..hi), rng.gen_range(-im..=im));
    let mut pfaff_worst = 0.0f64;
    for _ in 0..100 {
        let (a, b) = (cplx(&mut rng, -2.0, 2.0, 1.0), cplx(&mut rng, -2.0, 2.0, 1.0));
        let c = cplx(&mut rng, 0.5, 3.0, 1.0);
        let x = random_point(&mut rng, 0.5).z;
        pfaff_worst = pfaff_worst.max(pfaff(a, b, c, x)?.error());
    }
    let mut f5_worst = 0.0f64;
    for method in [F5Method::Integral, F5Method::Series, F5Method::Terminating] {
        for _ in 0..30 {
            let c = cplx(&mut rng, 0.5, 2.5, 1.0);
            let d = rng.gen_range(0.3..2.5);
            let e = d + rng.gen_range(0.3..2.0);
            let a = cplx(&mut rng, 0.5, 3.0, 0.5);
            let (chi, zeta) = (random_point(&mut rng, 0.3).z, random_point(&mut rng, 0.3).z);
            let r = f5_reduction(c, c64(d, 0.0), c64(e, 0.0), a, chi, zeta, method)?;
            f5_worst = f5_worst.max(r.error());
        }
    }
    Ok((f5_worst, pfaff_worst))
}

fn basis_mapping() -> Result<f64> {
    let points = [pt(0.25, 0.1), pt(0.0, 0.0), pt(-0.4, 0.3), pt(0.1, -0.6), pt(0.55, 0.35)];
    let cfg = TransformConfig::default();
    let mut worst = 0.0f64;
    for m in [0usize, 1] {
        let params = ModelParams::new(1.0, m)?;
        let idx = params.landau();
        for j in 0..=2 {
            let f = eigenfunction(j, &params.osc);
            for z in points {
                let b = relativistic_transform(&params, &f, z, &cfg)?;
                worst = worst.max((b.value - basis_phi(j, &idx, z)?).norm());
            }
        }
    }
    Ok(worst)
}

/// (reduced vs general kernel, max |∂B/∂z̄|).
fn m0_consistency() -> Result<(f64, f64)> {
    let osc = OscParams::new(1.0)?;
    let params = ModelParams { osc, m: 0 };
    let (e0, e1, e2) = (eigenfunction(0, &osc), eigenfunction(1, &osc), eigenfunction(2, &osc));
    let f = |xi: f64| 0.6 * e0(xi) + c64(0.0, 0.8) * e1(xi) - 0.3 * e2(xi);
    let cfg = TransformConfig { tol: 1e-12, ..TransformConfig::default() };
    let mut agreement = 0.0f64;
    let mut holomorphy = 0.0f64;
    let reduced = |re: f64, im: f64| relativistic_transform_m0(&osc, &f, pt(re, im), &cfg).map(|p| p.value);
    let h = 1e-3;
    for x in [-0.4, 0.0, 0.4] {
        for y in [-0.4, 0.0, 0.4] {
            let general = relativistic_transform(&params, &f, pt(x, y), &cfg)?.value;
            agreement = agreement.max((general - reduced(x, y)?).norm());
            let dx = (reduced(x + h, y)? - reduced(x - h, y)?) / (2.0 * h);
            let dy = (reduced(x, y + h)? - reduced(x, y - h)?) / (2.0 * h);
            holomorphy = holomorphy.max((0.5 * (dx + c64(0.0, 1.0) * dy)).norm());
        }
    }
    Ok((agreement, holomorphy))
}

fn resolution() -> Result<f64> {
    let pairs = [(pt(0.3, 0.1), pt(-0.2, 0.25)), (pt(0.0, 0.0), pt(0.0, 0.4)), (pt(0.5, -0.3), pt(0.45, -0.2))];
    let mut worst = 0.0f64;
    for idx in disk_indices() {
        for (z, zp) in pairs {
            worst = worst.max(resolution_defect(&idx, z, zp, 1e-9)?);
        }
    }
    Ok(worst)
}

/// The transform of the k-th Laguerre mode divided by z^k, against the constant
/// √((σ−1)Γ(σ+k)/(πΓ(σ)k!)) from ∫₀^∞ e^{−sx}x^α L_k^{(α)} dx = Γ(α+k+1)(s−1)^k/(k! s^{α+k+1}).
fn classical_baseline() -> Result<f64> {
    let mut worst = 0.0f64;
    for sigma in [3.0, 5.5] {
        for k in 0..=4usize {
            let kf = k as f64;
            let expected = ((sigma - 1.0)
                * (ln_gamma_real(sigma + kf) - ln_gamma_real(sigma) - ln_gamma_real(kf + 1.0)).exp()
                / PI)
                .sqrt();
            let mode = |x: f64| c64(laguerre_mode(k, sigma, x), 0.0);
            let mut ratios = Vec::new();
            for r in [0.1, 0.2, 0.3] {
                let z = pt(r, 0.0);
                let b = classical_bargmann(sigma, &mode, z, 1e-13)?;
                ratios.push(b.value / z.z.powi(k as i32));
            }
            for q in &ratios {
                worst = worst.max((q - ratios[0]).norm() / expected);
                worst = worst.max((q - expected).norm() / expected);
            }
        }
    }
    Ok(worst)
}

struct Line {
    pass: bool,
    text: String,
}

fn judge(c: &Criterion, measured: Result<Vec<(f64, f64)>>, elapsed: Duration) -> Line {
    let in_time = elapsed <= c.limit;
    let (pass, detail) = match measured {
        Ok(pairs) => {
            let ok = pairs.iter().all(|(e, t)| e.is_finite() && e <= t);
            let shown: Vec<String> = pairs.iter().map(|(e, t)| format!("error {e:.2e} (tol {t:.0e})")).collect();
            (ok, shown.join(", "))
        }
        Err(e) => (false, format!("evaluation failed: {e}")),
    };
    let pass = pass && in_time;
    Line {
        pass,
        text: format!(
            "[{}] {:>2}. {:<44} {}; time {:.2}s (limit {}s)",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        ),
    }
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let measured: Result<Vec<(f64, f64)>> = match c.id {
            1 => disk_gram().map(|e| vec![(e, c.tol)]),
            2 => eigen_equation().map(|e| vec![(e, c.tol)]),
            3 => overlap_series_agreement().map(|e| vec![(e, c.tol)]),
            4 => bilinear_identities().map(|e| vec![(e, c.tol)]),
            5 => oscillator_gram().map(|e| vec![(e, c.tol)]),
            6 => wavefunction_vs_oracle().map(|e| vec![(e, c.tol)]),
            7 => randomized_identities().map(|(f5, pf)| vec![(f5, c.tol), (pf, PFAFF_TOL)]),
            8 => basis_mapping().map(|e| vec![(e, c.tol)]),
            9 => m0_consistency().map(|(a, h)| vec![(a, c.tol), (h, HOLOMORPHY_TOL)]),
            10 => resolution().map(|e| vec![(e, c.tol)]),
            11 => classical_baseline().map(|e| vec![(e, c.tol)]),
            _ => unreachable!(),
        };
        let line = judge(c, measured, start.elapsed());
        // written past the test harness's capture so the summary always shows
        let _ = writeln!(std::io::stderr(), "{}", line.text);
        lines.push(line);
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.pass).map(|l| l.text.as_str()).collect();
    assert!(failed.is_empty(), "failing criteria:\n{}", failed.join("\n"));
}
