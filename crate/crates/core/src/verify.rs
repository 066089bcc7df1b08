//! Verification suites: each suite evaluates a family of invariants and
//! reports one [`Check`] per measured quantity.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bargmann::{
    isometry_check, relativistic_transform, relativistic_transform_m0, IsometryBudget, TransformConfig,
};
use crate::coherent::{overlap, overlap_series};
use crate::disk::{basis_phi, gram_matrix, landau_level, maass_apply_fd, DiskPoint, LandauIndex, DEFAULT_FD_STEP};
use crate::error::{Error, Result};
use crate::hypergeom::F5Method;
use crate::identities::{
    f1_reduction, f5_reduction, hyp3f2_integral, pfaff, saran, srivastava_rao, IdentityCheck, SaranArgs,
    SrivastavaRaoArgs,
};
use crate::oscillator::{eigenfunctions, ModelParams, OscParams};
use crate::quadrature::integrate_disk;
use crate::{c64, ComplexValue};

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OrthonormalityDisk,
    OrthonormalityOscillator,
    Overlap,
    Resolution,
    EigenEquation,
    SrivastavaRao,
    Saran,
    F5Reductions,
    Isometry,
    M0Reduction,
    All,
}

impl Suite {
    /// Every suite except `All`, in the order `All` runs them.
    pub const INDIVIDUAL: [Suite; 10] = [
        Suite::OrthonormalityDisk,
        Suite::OrthonormalityOscillator,
        Suite::Overlap,
        Suite::Resolution,
        Suite::EigenEquation,
        Suite::SrivastavaRao,
        Suite::Saran,
        Suite::F5Reductions,
        Suite::Isometry,
        Suite::M0Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OrthonormalityDisk => "orthonormality-disk",
            Suite::OrthonormalityOscillator => "orthonormality-oscillator",
            Suite::Overlap => "overlap",
            Suite::Resolution => "resolution",
            Suite::EigenEquation => "eigen-equation",
            Suite::SrivastavaRao => "srivastava-rao",
            Suite::Saran => "saran",
            Suite::F5Reductions => "f5-reductions",
            Suite::Isometry => "isometry",
            Suite::M0Reduction => "m0-reduction",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite '{s}'")))
    }
}

/// One measured quantity against its tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Measured error; `None` when the evaluation itself failed.
    pub error: Option<f64>,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn measured(name: impl Into<String>, error: f64, tol: f64) -> Check {
        Check {
            name: name.into(),
            error: Some(error),
            tol,
            pass: error.is_finite() && error <= tol,
            detail: None,
        }
    }

    fn from_result(name: impl Into<String>, r: Result<f64>, tol: f64) -> Check {
        match r {
            Ok(e) => Check::measured(name, e, tol),
            Err(err) => Check {
                name: name.into(),
                error: None,
                tol,
                pass: false,
                detail: Some(err.to_string()),
            },
        }
    }
}

/// Outcome of a suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Parameters a suite may take from the caller; unset fields use the suite's
/// own grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub c: Option<f64>,
    pub m: Option<usize>,
    pub sigma: Option<f64>,
    pub kmax: Option<usize>,
    /// Overrides every check tolerance.
    pub tol: Option<f64>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            c: None,
            m: None,
            sigma: None,
            kmax: None,
            tol: None,
            seed: 20_240_601,
        }
    }
}

impl VerifyConfig {
    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    fn landau_indices(&self) -> Result<Vec<LandauIndex>> {
        match (self.sigma, self.m) {
            (Some(s), m) => Ok(vec![LandauIndex::new(s, m.unwrap_or(0))?]),
            (None, Some(m)) => Ok(vec![ModelParams::new(self.c.unwrap_or(1.0), m)?.landau()]),
            (None, None) => [(5.0, 0), (7.5, 1), (9.0, 2)]
                .iter()
                .map(|&(s, m)| LandauIndex::new(s, m))
                .collect(),
        }
    }

    fn c_values(&self, defaults: &[f64]) -> Vec<f64> {
        self.c.map(|c| vec![c]).unwrap_or_else(|| defaults.to_vec())
    }

    fn m_values(&self, defaults: &[usize]) -> Vec<usize> {
        self.m.map(|m| vec![m]).unwrap_or_else(|| defaults.to_vec())
    }
}

/// Runs one suite, or all of them for [`Suite::All`].
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::INDIVIDUAL {
                for mut c in run_suite(s, cfg)?.checks {
                    c.name = format!("{}/{}", s.name(), c.name);
                    all.push(c);
                }
            }
            all
        }
        Suite::OrthonormalityDisk => orthonormality_disk(cfg)?,
        Suite::OrthonormalityOscillator => orthonormality_oscillator(cfg)?,
        Suite::Overlap => overlap_suite(cfg)?,
        Suite::Resolution => resolution(cfg)?,
        Suite::EigenEquation => eigen_equation(cfg)?,
        Suite::SrivastavaRao => srivastava_rao_suite(cfg),
        Suite::Saran => saran_suite(cfg),
        Suite::F5Reductions => f5_reductions(cfg),
        Suite::Isometry => isometry_suite(cfg)?,
        Suite::M0Reduction => m0_reduction(cfg)?,
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(SuiteReport { suite, checks, pass })
}

fn pt(re: f64, im: f64) -> DiskPoint {
    DiskPoint { z: c64(re, im) }
}

fn random_point(rng: &mut ChaCha8Rng, radius: f64) -> DiskPoint {
    let r = radius * rng.gen::<f64>().sqrt();
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    pt(r * phi.cos(), r * phi.sin())
}

fn max_identity_deviation(gram: &[Vec<ComplexValue>]) -> f64 {
    let mut worst = 0.0f64;
    for (j, row) in gram.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            let target = if j == k { 1.0 } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}

fn orthonormality_disk(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let kmax = cfg.kmax.unwrap_or(8);
    let tol = cfg.tol(1e-8);
    Ok(cfg
        .landau_indices()?
        .iter()
        .map(|idx| {
            Check::from_result(
                format!("gram sigma={} m={} K={kmax}", idx.sigma, idx.m),
                gram_matrix(idx, kmax, 1e-13).map(|g| max_identity_deviation(&g)),
                tol,
            )
        })
        .collect())
}

fn orthonormality_oscillator(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let kmax = cfg.kmax.unwrap_or(5);
    let tol = cfg.tol(1e-6);
    let mut checks = Vec::new();
    for c in cfg.c_values(&[0.8, 1.0, 1.5]) {
        let osc = OscParams::new(c)?;
        checks.push(Check::from_result(
            format!("gram c={c} K={kmax}"),
            crate::oscillator::gram_matrix(kmax, &osc, 1e-11).map(|(g, _)| max_identity_deviation(&g)),
            tol,
        ));
    }
    Ok(checks)
}

fn overlap_suite(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(1e-8);
    let mut checks = Vec::new();
    for idx in cfg.landau_indices()? {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut series_err = 0.0f64;
        let mut herm_err = 0.0f64;
        let mut modulus_excess = 0.0f64;
        let mut diag_err = 0.0f64;
        let mut failure = None;
        for _ in 0..50 {
            let z = random_point(&mut rng, 0.5);
            let w = random_point(&mut rng, 0.5);
            let mut eval = || -> Result<()> {
                let closed = overlap(&idx, z, w)?;
                let series = overlap_series(&idx, z, w, 120)?;
                series_err = series_err.max((closed - series).norm());
                herm_err = herm_err.max((closed - overlap(&idx, w, z)?.conj()).norm());
                modulus_excess = modulus_excess.max(closed.norm() - 1.0);
                diag_err = diag_err.max((overlap(&idx, z, z)? - 1.0).norm());
                Ok(())
            };
            if let Err(e) = eval() {
                failure = Some(e);
                break;
            }
        }
        let label = format!("sigma={} m={}", idx.sigma, idx.m);
        if let Some(e) = failure {
            checks.push(Check::from_result(format!("closed form vs series {label}"), Err(e), tol));
            continue;
        }
        checks.push(Check::measured(format!("closed form vs series {label}"), series_err, tol));
        checks.push(Check::measured(format!("hermitian symmetry {label}"), herm_err, tol));
        checks.push(Check::measured(format!("unit diagonal {label}"), diag_err, tol));
        checks.push(Check::measured(
            format!("modulus at most one {label}"),
            modulus_excess.max(0.0),
            1e-12,
        ));
    }
    Ok(checks)
}

/// ∫ ⟨z|w⟩⟨w|z′⟩ dμ(w) − ⟨z|z′⟩ with dμ(w) = ((σ−2m−1)/π)(1−|w|²)^{−2} dν(w).
///
/// The product of overlaps carries (1−|w|²)^{σ−2m}; it is divided out and
/// moved into the Gauss–Jacobi weight (1−|w|²)^{σ−2m−2}, so the whole disk is
/// integrated with no truncation radius.
pub fn resolution_defect(idx: &LandauIndex, z: DiskPoint, z_prime: DiskPoint, tol: f64) -> Result<f64> {
    idx.validate()?;
    let p = idx.beta();
    let exponent = idx.sigma - 2.0 * idx.m as f64;
    let integral = integrate_disk(
        |w| {
            let wp = DiskPoint { z: w };
            let a = overlap(idx, z, wp).unwrap_or_default();
            let b = overlap(idx, wp, z_prime).unwrap_or_default();
            a * b / (1.0 - w.norm_sqr()).powf(exponent)
        },
        p - 1.0,
        tol,
    )?;
    let value = integral * (p / std::f64::consts::PI);
    Ok((value - overlap(idx, z, z_prime)?).norm())
}

fn resolution(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(1e-5);
    let pairs = [
        (pt(0.3, 0.1), pt(-0.2, 0.25)),
        (pt(0.0, 0.0), pt(0.0, 0.4)),
        (pt(0.5, -0.3), pt(0.45, -0.2)),
    ];
    let mut checks = Vec::new();
    for idx in cfg.landau_indices()? {
        for (i, (z, zp)) in pairs.iter().enumerate() {
            checks.push(Check::from_result(
                format!("reproducing kernel sigma={} m={} pair {i}", idx.sigma, idx.m),
                resolution_defect(&idx, *z, *zp, 1e-9),
                tol,
            ));
        }
    }
    Ok(checks)
}

/// Normwise relative residual max|Δψ − εψ| / (max(1, |ε|) · max|ψ|) over `points`.
pub fn eigen_residual<F>(idx: &LandauIndex, psi: F, points: &[DiskPoint], h: f64) -> Result<f64>
where
    F: Fn(ComplexValue) -> ComplexValue,
{
    let eps = landau_level(idx)?;
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for z in points {
        let lap = maass_apply_fd(idx, &psi, *z, h)?;
        let value = psi(z.z);
        worst = worst.max((lap - eps * value).norm());
        scale = scale.max(value.norm());
    }
    Ok(worst / (eps.abs().max(1.0) * scale))
}

/// 25 points on five rings inside |z| ≤ 0.7.
pub fn eigen_points() -> Vec<DiskPoint> {
    let mut out = Vec::with_capacity(25);
    for (i, r) in [0.15, 0.3, 0.45, 0.6, 0.7].iter().enumerate() {
        for j in 0..5 {
            let phi = 0.4 * i as f64 + j as f64 * std::f64::consts::TAU / 5.0;
            out.push(pt(r * phi.cos(), r * phi.sin()));
        }
    }
    out
}

fn eigen_equation(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tol(1e-4);
    let points = eigen_points();
    let mut checks = Vec::new();
    for idx in cfg.landau_indices()? {
        for k in [0usize, 2, 5] {
            checks.push(Check::from_result(
                format!("basis sigma={} m={} k={k}", idx.sigma, idx.m),
                eigen_residual(
                    &idx,
                    |z| basis_phi(k, &idx, DiskPoint { z }).unwrap_or_else(|_| c64(f64::NAN, 0.0)),
                    &points,
                    DEFAULT_FD_STEP,
                ),
                tol,
            ));
        }
    }
    // B[f] for m ≥ 1 must stay in the eigenspace; the composed tolerance is looser.
    let params = ModelParams::new(cfg.c.unwrap_or(1.0), cfg.m.filter(|m| *m >= 1).unwrap_or(1))?;
    let f = mixed_signal(&params.osc);
    let tcfg = TransformConfig { tol: 1e-13, ..TransformConfig::default() };
    let transform_points = [pt(0.2, 0.1), pt(-0.3, 0.25), pt(0.1, -0.45)];
    checks.push(Check::from_result(
        format!("transform output c={} m={}", params.osc.c(), params.m),
        eigen_residual(
            &params.landau(),
            |z| {
                relativistic_transform(&params, &f, DiskPoint { z }, &tcfg)
                    .map(|t| t.value)
                    .unwrap_or_else(|_| c64(f64::NAN, 0.0))
            },
            &transform_points,
            1e-3,
        ),
        cfg.tol(1e-3),
    ));
    Ok(checks)
}

/// 0.6 φ_0 + 0.8i φ_1 − 0.3 φ_2 (not normalized), a signal outside any single
/// basis direction.
pub fn mixed_signal(osc: &OscParams) -> impl Fn(f64) -> ComplexValue + Sync + '_ {
    move |xi| match eigenfunctions(2, osc, xi) {
        Ok(e) => 0.6 * e[0] + c64(0.0, 0.8) * e[1] - 0.3 * e[2],
        Err(_) => c64(f64::NAN, 0.0),
    }
}

fn identity_error(r: Result<IdentityCheck>) -> Result<f64> {
    r.map(|c| c.error())
}

fn srivastava_rao_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tol(1e-8);
    let cases = [
        SrivastavaRaoArgs { t: 0.2, x: 0.3, y: -0.4, alpha: 3.5, gamma: 1.5 },
        SrivastavaRaoArgs { t: 0.25, x: 0.9, y: -0.95, alpha: 2.2, gamma: 3.0 },
        SrivastavaRaoArgs { t: -0.15, x: -0.6, y: 0.2, alpha: 0.7, gamma: 2.366 },
        SrivastavaRaoArgs { t: 0.1, x: 0.5, y: 0.5, alpha: 5.5, gamma: 0.0 },
    ];
    cases
        .iter()
        .map(|a| {
            Check::from_result(
                format!("t={} x={} y={} alpha={} gamma={}", a.t, a.x, a.y, a.alpha, a.gamma),
                identity_error(srivastava_rao(a, 80)),
                tol,
            )
        })
        .collect()
}

fn saran_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let tol = cfg.tol(1e-8);
    let mut cases = vec![
        SaranArgs { theta: 0.2, v: 0.4, y: 0.3, alpha: -3.7, beta: 2, b: 2.7, c: c64(1.35, 0.5) },
        SaranArgs { theta: 0.25, v: -1.5, y: -0.35, alpha: -4.2, beta: 1, b: 3.2, c: c64(1.6, -0.8) },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5a5a);
    for _ in 0..6 {
        cases.push(SaranArgs {
            theta: rng.gen_range(-0.3..0.3),
            v: rng.gen_range(-0.9..0.9),
            y: rng.gen_range(-0.4..0.4),
            alpha: -rng.gen_range(1.0..5.0),
            beta: rng.gen_range(0..4),
            b: rng.gen_range(1.5..4.0),
            c: c64(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0)),
        });
    }
    cases
        .iter()
        .map(|a| {
            Check::from_result(
                format!(
                    "theta={:.4} V={:.4} y={:.4} alpha={:.4} beta={} b={:.4} c={:.4}",
                    a.theta, a.v, a.y, a.alpha, a.beta, a.b, a.c
                ),
                identity_error(saran(a, 60)),
                tol,
            )
        })
        .collect()
}

fn random_complex(rng: &mut ChaCha8Rng, re: std::ops::Range<f64>, im: f64) -> ComplexValue {
    c64(rng.gen_range(re), rng.gen_range(-im..=im))
}

fn random_small(rng: &mut ChaCha8Rng, radius: f64) -> ComplexValue {
    let r = radius * rng.gen::<f64>().sqrt();
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    c64(r * phi.cos(), r * phi.sin())
}

// |x|, |y| ≤ 1/2 with the reduced argument (x−y)/(1−y) inside radius 0.9.
fn admissible_f1_arguments(rng: &mut ChaCha8Rng) -> (ComplexValue, ComplexValue) {
    loop {
        let x = random_small(rng, 0.5);
        let y = random_small(rng, 0.5);
        if ((x - y) / (1.0 - y)).norm() < 0.9 {
            return (x, y);
        }
    }
}

fn worst_of<I>(name: String, items: I, tol: f64) -> Check
where
    I: Iterator<Item = Result<IdentityCheck>>,
{
    let mut worst = 0.0f64;
    for r in items {
        match r {
            Ok(c) => worst = worst.max(c.error()),
            Err(e) => return Check::from_result(name, Err(e), tol),
        }
    }
    Check::measured(name, worst, tol)
}

fn f5_reductions(cfg: &VerifyConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pfaff_cases: Vec<_> = (0..100)
        .map(|_| {
            (
                random_complex(&mut rng, -2.0..2.0, 1.0),
                random_complex(&mut rng, -2.0..2.0, 1.0),
                random_complex(&mut rng, 0.5..3.0, 1.0),
                random_small(&mut rng, 0.5),
            )
        })
        .collect();
    let f1_cases: Vec<_> = (0..50)
        .map(|_| {
            (
                random_complex(&mut rng, 0.2..2.5, 0.5),
                random_complex(&mut rng, 0.2..2.5, 0.5),
                random_complex(&mut rng, 0.2..2.0, 0.5),
                admissible_f1_arguments(&mut rng),
            )
        })
        .map(|(a, b, c, (x, y))| (a, b, c, x, y))
        .collect();
    let f5_cases: Vec<_> = (0..30)
        .map(|_| {
            let g = rng.gen_range(1.0..2.5);
            let xi = rng.gen_range(-2.0..2.0);
            (
                c64(g, xi),
                c64(g, -xi),
                c64(g + rng.gen_range(0.3..1.0), 0.0),
                c64(rng.gen_range(1.5..4.5), 0.0),
                random_small(&mut rng, 0.3),
                random_small(&mut rng, 0.4),
            )
        })
        .collect();
    let mut checks = vec![
        worst_of(
            "pfaff x100 |x|<=0.5".into(),
            pfaff_cases.iter().map(|&(a, b, c, x)| pfaff(a, b, c, x)),
            cfg.tol(1e-10),
        ),
        worst_of(
            "f1 reduction d=b+c x50".into(),
            f1_cases.iter().map(|&(a, b, c, x, y)| f1_reduction(a, b, c, x, y)),
            cfg.tol(1e-10),
        ),
    ];
    for method in [F5Method::Integral, F5Method::Series, F5Method::Terminating] {
        checks.push(worst_of(
            format!("f5 reduction a=a' x30 ({method:?})").to_lowercase(),
            f5_cases
                .iter()
                .map(|&(c, d, e, a, chi, zeta)| f5_reduction(c, d, e, a, chi, zeta, method)),
            cfg.tol(1e-9),
        ));
    }
    let (g, xi) = (1.8, 0.6);
    checks.push(Check::from_result(
        "3f2 integral representation k=3 gamma=1.8 xi=0.6",
        identity_error(hyp3f2_integral(
            3,
            c64(g, xi),
            c64(g, -xi),
            c64(2.0 * g, 0.0),
            c64(0.5, xi),
        )),
        cfg.tol(1e-9),
    ));
    checks
}

/// The five label points of the basis-mapping check.
pub fn mapping_points() -> [DiskPoint; 5] {
    [pt(0.25, 0.1), pt(0.0, 0.0), pt(-0.4, 0.3), pt(0.1, -0.6), pt(0.55, 0.35)]
}

fn isometry_suite(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let c = cfg.c.unwrap_or(1.0);
    let mut checks = Vec::new();
    let tcfg = TransformConfig::default();
    for m in cfg.m_values(&[0, 1]) {
        let params = ModelParams::new(c, m)?;
        let idx = params.landau();
        for j in 0..=2usize {
            let f = |xi: f64| {
                eigenfunctions(j, &params.osc, xi)
                    .map(|e| e[j])
                    .unwrap_or_else(|_| c64(f64::NAN, 0.0))
            };
            let worst = mapping_points().iter().try_fold(0.0f64, |acc, z| {
                let v = relativistic_transform(&params, &f, *z, &tcfg)?;
                Ok::<f64, Error>(acc.max((v.value - basis_phi(j, &idx, *z)?).norm()))
            });
            checks.push(Check::from_result(
                format!("basis mapping c={c} m={m} j={j}"),
                worst,
                cfg.tol(1e-6),
            ));
        }
    }
    let m = cfg.m.unwrap_or(1);
    let params = ModelParams::new(c, m)?;
    let osc = params.osc;
    let ground = move |xi: f64| {
        eigenfunctions(0, &osc, xi)
            .map(|e| e[0])
            .unwrap_or_else(|_| c64(f64::NAN, 0.0))
    };
    let pair = move |xi: f64| {
        eigenfunctions(1, &osc, xi)
            .map(|e| (e[0] + e[1]) * FRAC_1_SQRT_2)
            .unwrap_or_else(|_| c64(f64::NAN, 0.0))
    };
    let budget = IsometryBudget::default();
    checks.push(Check::from_result(
        format!("norm gap phi0 c={c} m={m}"),
        isometry_check(&params, &ground, &budget).map(|r| r.gap),
        cfg.tol(1e-4),
    ));
    checks.push(Check::from_result(
        format!("norm gap (phi0+phi1)/sqrt2 c={c} m={m}"),
        isometry_check(&params, &pair, &budget).map(|r| r.gap),
        cfg.tol(1e-4),
    ));
    Ok(checks)
}

/// The 3×3 label grid of the m = 0 consistency check.
pub fn m0_grid() -> Vec<DiskPoint> {
    let mut out = Vec::with_capacity(9);
    for y in [-0.4, 0.0, 0.4] {
        for x in [-0.4, 0.0, 0.4] {
            out.push(pt(x, y));
        }
    }
    out
}

/// max |∂B[f]/∂z̄| over `points` by central differences of step h.
pub fn holomorphy_defect<F>(b: F, points: &[DiskPoint], h: f64) -> Result<f64>
where
    F: Fn(DiskPoint) -> Result<ComplexValue>,
{
    let mut worst = 0.0f64;
    for z in points {
        let dx = (b(pt(z.z.re + h, z.z.im))? - b(pt(z.z.re - h, z.z.im))?) / (2.0 * h);
        let dy = (b(pt(z.z.re, z.z.im + h))? - b(pt(z.z.re, z.z.im - h))?) / (2.0 * h);
        worst = worst.max((0.5 * (dx + c64(0.0, 1.0) * dy)).norm());
    }
    Ok(worst)
}

fn m0_reduction(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let osc = OscParams::new(cfg.c.unwrap_or(1.0))?;
    let params = ModelParams { osc, m: 0 };
    let f = mixed_signal(&osc);
    let tcfg = TransformConfig { tol: 1e-12, ..TransformConfig::default() };
    let grid = m0_grid();
    let agreement = grid.iter().try_fold(0.0f64, |acc, z| {
        let general = relativistic_transform(&params, &f, *z, &tcfg)?;
        let reduced = relativistic_transform_m0(&osc, &f, *z, &tcfg)?;
        Ok::<f64, Error>(acc.max((general.value - reduced.value).norm()))
    });
    let holo = holomorphy_defect(
        |z| Ok(relativistic_transform_m0(&osc, &f, z, &tcfg)?.value),
        &grid,
        1e-3,
    );
    Ok(vec![
        Check::from_result(format!("reduced vs general kernel c={}", osc.c()), agreement, cfg.tol(1e-8)),
        Check::from_result(format!("d/dzbar of reduced output c={}", osc.c()), holo, cfg.tol(1e-5)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::INDIVIDUAL.iter().chain(std::iter::once(&Suite::All)) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn fast_suites_pass() {
        let cfg = VerifyConfig::default();
        for s in [Suite::SrivastavaRao, Suite::Saran, Suite::F5Reductions, Suite::Overlap] {
            let r = run_suite(s, &cfg).unwrap();
            assert!(r.pass, "{:#?}", r.checks);
        }
    }

    #[test]
    fn failed_evaluation_is_a_failed_check() {
        let c = Check::from_result("x", Err(Error::domain("nope")), 1.0);
        assert!(!c.pass && c.error.is_none() && c.detail.is_some());
    }
}
