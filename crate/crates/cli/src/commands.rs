use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use relbarg::bargmann::{relativistic_transform_m0, transform_grid, SampledFunction, TransformConfig};
use relbarg::coherent::{cs_wavefunction, normalization, overlap, CoherentLabel};
use relbarg::disk::{basis_phi, landau_level, DiskPoint, LandauIndex};
use relbarg::oscillator::{eigenfunction, energy, ModelParams, OscParams};
use relbarg::verify::{run_suite, Suite, VerifyConfig};
use relbarg::{ComplexValue, VERSION};

use crate::config::{check_tol, finite, pick, EvalFunction, FileConfig, Format, Kernel, RunConfig};
use crate::error::CliError;
use crate::grid::{parse_complex, parse_xi_grid, parse_z_grid};
use crate::output::{emit, to_json, Cell, Table};
use crate::{Cli, Command, CommonArgs};

const DEFAULT_C: f64 = 1.0;
const DEFAULT_TRANSFORM_TOL: f64 = 1e-10;
const DEFAULT_SPECTRUM_KMAX: usize = 3;
const DEFAULT_SPECTRUM_MMAX: usize = 2;

struct Common {
    c: Option<f64>,
    m: Option<usize>,
    tol: Option<f64>,
    out: Option<PathBuf>,
    format: Option<Format>,
    grid: Option<String>,
}

fn resolve_common(args: CommonArgs, file: &FileConfig) -> Result<Common, CliError> {
    let c = finite(pick(args.c, file, "c")?, "c")?;
    if let Some(c) = c {
        if c <= 0.0 {
            return Err(CliError::config(format!("c must be positive (got {c})")));
        }
    }
    Ok(Common {
        c,
        m: pick(args.m, file, "m")?,
        tol: check_tol(pick(args.tol, file, "tol")?)?,
        out: pick(args.out, file, "out")?,
        format: pick(args.format, file, "format")?,
        grid: pick(args.grid, file, "grid")?,
    })
}

pub fn run(cli: Cli) -> Result<u8, CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    match cli.command {
        Command::Eval { function, k, sigma, xi, w, common } => {
            let sigma = finite(pick(sigma, &file, "sigma")?, "sigma")?;
            let k = pick(k, &file, "k")?;
            let xi = pick(xi, &file, "xi")?;
            let w = pick(w, &file, "w")?;
            cmd_eval(function, k, sigma, xi, w, resolve_common(common, &file)?)
        }
        Command::Transform { input, kernel, common } => {
            let input = pick(input, &file, "input")?;
            let kernel = pick(kernel, &file, "kernel")?;
            cmd_transform(input, kernel, resolve_common(common, &file)?)
        }
        Command::Verify { suite, sigma, kmax, seed, common } => {
            let sigma = finite(pick(sigma, &file, "sigma")?, "sigma")?;
            let kmax = pick(kmax, &file, "kmax")?;
            let seed = pick(seed, &file, "seed")?;
            cmd_verify(&suite, sigma, kmax, seed, resolve_common(common, &file)?)
        }
        Command::Spectrum { kmax, common } => {
            let kmax = pick(kmax, &file, "kmax")?;
            cmd_spectrum(kmax, resolve_common(common, &file)?)
        }
    }
}

fn z_grid(spec: &Option<String>) -> Result<Vec<DiskPoint>, CliError> {
    let spec = spec.as_deref().ok_or_else(|| CliError::config("a z-grid (--grid) is required"))?;
    parse_z_grid(spec)
}

fn xi_grid(spec: &Option<String>) -> Result<Vec<f64>, CliError> {
    let spec = spec.as_deref().ok_or_else(|| CliError::config("a ξ-grid (--xi) is required"))?;
    parse_xi_grid(spec)
}

/// Evaluates in parallel; the first failure in input order is reported.
fn par_eval<T, F>(items: &[T], f: F) -> Result<Vec<ComplexValue>, CliError>
where
    T: Sync,
    F: Fn(&T) -> relbarg::Result<ComplexValue> + Sync + Send,
{
    let results: Vec<relbarg::Result<ComplexValue>> = items.par_iter().map(f).collect();
    results.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

fn write_table(table: &Table, cfg: &RunConfig, extra: Option<(&str, Value)>, out: Option<&Path>) -> Result<(), CliError> {
    let bytes = match cfg.format {
        Format::Csv => table.to_csv()?,
        Format::Json => {
            let mut doc = json!({ "version": VERSION, "config": cfg });
            if let Some((key, value)) = extra {
                doc[key] = value;
            }
            doc["records"] = table.records();
            to_json(&doc)?
        }
    };
    emit(&bytes, out)
}

fn path_string(p: &Option<PathBuf>) -> Option<String> {
    p.as_ref().map(|p| p.display().to_string())
}

fn cmd_eval(
    function: EvalFunction,
    k: Option<usize>,
    sigma: Option<f64>,
    xi: Option<String>,
    w: Option<String>,
    common: Common,
) -> Result<u8, CliError> {
    let mut cfg = RunConfig::new("eval", common.format.unwrap_or(Format::Csv));
    cfg.function = Some(function);
    cfg.tol = common.tol;
    cfg.out = path_string(&common.out);
    let m = common.m.unwrap_or(0);
    let c = common.c.unwrap_or(DEFAULT_C);

    let landau = |cfg: &mut RunConfig| -> Result<LandauIndex, CliError> {
        cfg.m = Some(m);
        match sigma {
            Some(s) => {
                cfg.sigma = Some(s);
                Ok(LandauIndex::new(s, m)?)
            }
            None => {
                cfg.c = Some(c);
                let idx = ModelParams::new(c, m)?.landau();
                cfg.sigma = Some(idx.sigma);
                Ok(idx)
            }
        }
    };

    let table = match function {
        EvalFunction::BasisPhi | EvalFunction::Overlap => {
            let idx = landau(&mut cfg)?;
            let zs = z_grid(&common.grid)?;
            cfg.grid = common.grid.clone();
            let values = if function == EvalFunction::BasisPhi {
                let k = k.unwrap_or(0);
                cfg.k = Some(k);
                par_eval(&zs, |z| basis_phi(k, &idx, *z))?
            } else {
                let w = match &w {
                    Some(s) => parse_complex(s, "w")?,
                    None => ComplexValue::new(0.0, 0.0),
                };
                cfg.w = Some([w.re, w.im]);
                let w = DiskPoint::new(w)?;
                par_eval(&zs, |z| overlap(&idx, *z, w))?
            };
            let mut t = Table::new(vec!["re_z", "im_z", "re_val", "im_val"]);
            for (z, v) in zs.iter().zip(values) {
                t.push(vec![Cell::Real(z.z.re), Cell::Real(z.z.im), Cell::Real(v.re), Cell::Real(v.im)]);
            }
            t
        }
        EvalFunction::Eigenfunction => {
            let k = k.unwrap_or(0);
            cfg.k = Some(k);
            cfg.c = Some(c);
            let osc = OscParams::new(c)?;
            let xs = xi_grid(&xi)?;
            cfg.xi = xi.clone();
            let values = par_eval(&xs, |x| eigenfunction(k, &osc, *x))?;
            let mut t = Table::new(vec!["xi", "re_val", "im_val"]);
            for (x, v) in xs.iter().zip(values) {
                t.push(vec![Cell::Real(*x), Cell::Real(v.re), Cell::Real(v.im)]);
            }
            t
        }
        EvalFunction::CsWavefunction | EvalFunction::Kernel => {
            if sigma.is_some() {
                return Err(CliError::config("σ is fixed to 2(γ + m) for coherent-state kernels; drop --sigma"));
            }
            cfg.c = Some(c);
            cfg.m = Some(m);
            let params = ModelParams::new(c, m)?;
            let zs = z_grid(&common.grid)?;
            let xs = xi_grid(&xi)?;
            cfg.grid = common.grid.clone();
            cfg.xi = xi.clone();
            let pairs: Vec<(DiskPoint, f64)> = zs.iter().flat_map(|z| xs.iter().map(move |x| (*z, *x))).collect();
            let kernel = function == EvalFunction::Kernel;
            let values = par_eval(&pairs, |(z, x)| {
                let psi = cs_wavefunction(&CoherentLabel { z: *z, params }, *x)?;
                Ok(if kernel {
                    normalization(&params.landau(), *z).sqrt() * psi.conj()
                } else {
                    psi
                })
            })?;
            let mut t = Table::new(vec!["re_z", "im_z", "xi", "re_val", "im_val"]);
            for ((z, x), v) in pairs.iter().zip(values) {
                t.push(vec![
                    Cell::Real(z.z.re),
                    Cell::Real(z.z.im),
                    Cell::Real(*x),
                    Cell::Real(v.re),
                    Cell::Real(v.im),
                ]);
            }
            t
        }
    };
    write_table(&table, &cfg, None, common.out.as_deref())?;
    Ok(0)
}

/// Reads a CSV with header `xi,re,im`.
pub fn read_samples(path: &Path) -> Result<SampledFunction, CliError> {
    let text = std::fs::read(path)
        .map_err(|e| CliError::config(format!("cannot read input {}: {e}", path.display())))?;
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_slice());
    let headers = reader.headers().map_err(|e| CliError::Input(e.to_string()))?;
    if headers.iter().collect::<Vec<_>>() != ["xi", "re", "im"] {
        return Err(CliError::Input(format!(
            "expected header 'xi,re,im' (got '{}')",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let (mut grid, mut values) = (Vec::new(), Vec::new());
    for (n, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Input(e.to_string()))?;
        let line = n + 2;
        let field = |i: usize| -> Result<f64, CliError> {
            let s = record.get(i).unwrap_or("");
            let v: f64 = s
                .parse()
                .map_err(|_| CliError::Input(format!("line {line}: '{s}' is not a number")))?;
            if !v.is_finite() {
                return Err(CliError::Input(format!("line {line}: non-finite value '{s}'")));
            }
            Ok(v)
        };
        grid.push(field(0)?);
        values.push(ComplexValue::new(field(1)?, field(2)?));
    }
    SampledFunction::new(grid, values).map_err(|e| CliError::Input(e.to_string()))
}

fn cmd_transform(input: Option<PathBuf>, kernel: Option<Kernel>, common: Common) -> Result<u8, CliError> {
    let input = input.ok_or_else(|| CliError::config("an input file (--input) is required"))?;
    let mut cfg = RunConfig::new("transform", common.format.unwrap_or(Format::Csv));
    let kernel = kernel.unwrap_or(Kernel::General);
    let (c, m) = (common.c.unwrap_or(DEFAULT_C), common.m.unwrap_or(0));
    let tol = common.tol.unwrap_or(DEFAULT_TRANSFORM_TOL);
    cfg.c = Some(c);
    cfg.m = Some(m);
    cfg.tol = Some(tol);
    cfg.kernel = Some(kernel);
    cfg.grid = common.grid.clone();
    cfg.input = Some(input.display().to_string());
    cfg.out = path_string(&common.out);
    if kernel == Kernel::M0 && m != 0 {
        return Err(CliError::config(format!("the m0 kernel needs m = 0 (got m = {m})")));
    }
    let params = ModelParams::new(c, m)?;
    let zs = z_grid(&common.grid)?;
    let f = read_samples(&input)?;
    let tcfg = TransformConfig { tol, ..TransformConfig::default() };

    let (values, errors): (Vec<ComplexValue>, Vec<f64>) = match kernel {
        Kernel::General => {
            let r = transform_grid(&params, &f, &zs, &tcfg)?;
            (r.values, r.point_errors)
        }
        Kernel::M0 => {
            let results: Vec<_> = zs.par_iter().map(|z| relativistic_transform_m0(&params.osc, &f, *z, &tcfg)).collect();
            let points = results.into_iter().collect::<relbarg::Result<Vec<_>>>()?;
            points.iter().map(|p| (p.value, p.quadrature_error)).unzip()
        }
    };
    let mut t = Table::new(vec!["re_z", "im_z", "re_val", "im_val", "quadrature_error"]);
    for ((z, v), e) in zs.iter().zip(&values).zip(&errors) {
        t.push(vec![
            Cell::Real(z.z.re),
            Cell::Real(z.z.im),
            Cell::Real(v.re),
            Cell::Real(v.im),
            Cell::Real(*e),
        ]);
    }
    let worst = errors.iter().cloned().fold(0.0, f64::max);
    write_table(&t, &cfg, Some(("quadrature_error", json!(worst))), common.out.as_deref())?;
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    sigma: Option<f64>,
    kmax: Option<usize>,
    seed: Option<u64>,
    common: Common,
) -> Result<u8, CliError> {
    let parsed: Suite = suite.parse().map_err(|_| {
        let names: Vec<&str> = Suite::INDIVIDUAL.iter().map(|s| s.name()).collect();
        CliError::config(format!("unknown suite '{suite}'; expected one of {}, all", names.join(", ")))
    })?;
    let vcfg = VerifyConfig {
        c: common.c,
        m: common.m,
        sigma,
        kmax,
        tol: common.tol,
        seed: seed.unwrap_or(VerifyConfig::default().seed),
    };
    let mut cfg = RunConfig::new("verify", common.format.unwrap_or(Format::Json));
    cfg.suite = Some(parsed.name().to_string());
    cfg.c = vcfg.c;
    cfg.m = vcfg.m;
    cfg.sigma = vcfg.sigma;
    cfg.kmax = vcfg.kmax;
    cfg.tol = vcfg.tol;
    cfg.seed = Some(vcfg.seed);
    cfg.out = path_string(&common.out);

    let report = run_suite(parsed, &vcfg)?;
    let bytes = match cfg.format {
        Format::Json => to_json(&json!({
            "suite": report.suite,
            "checks": report.checks,
            "pass": report.pass,
            "version": VERSION,
            "config": cfg,
        }))?,
        Format::Csv => {
            let mut t = Table::new(vec!["name", "error", "tol", "pass", "detail"]);
            for c in &report.checks {
                t.push(vec![
                    Cell::Text(c.name.clone()),
                    c.error.map(Cell::Real).unwrap_or(Cell::Empty),
                    Cell::Real(c.tol),
                    Cell::Text(c.pass.to_string()),
                    c.detail.clone().map(Cell::Text).unwrap_or(Cell::Empty),
                ]);
            }
            t.to_csv()?
        }
    };
    emit(&bytes, common.out.as_deref())?;
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    eprintln!(
        "verify {}: {}/{} checks passed",
        parsed.name(),
        report.checks.len() - failed,
        report.checks.len()
    );
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_spectrum(kmax: Option<usize>, common: Common) -> Result<u8, CliError> {
    let c = common.c.unwrap_or(DEFAULT_C);
    let kmax = kmax.unwrap_or(DEFAULT_SPECTRUM_KMAX);
    let mmax = common.m.unwrap_or(DEFAULT_SPECTRUM_MMAX);
    let mut cfg = RunConfig::new("spectrum", common.format.unwrap_or(Format::Csv));
    cfg.c = Some(c);
    cfg.kmax = Some(kmax);
    cfg.m = Some(mmax);
    cfg.out = path_string(&common.out);
    let osc = OscParams::new(c)?;

    let mut t = Table::new(vec!["quantity", "index", "sigma", "value"]);
    let mut energies = Vec::new();
    for k in 0..=kmax {
        let e = energy(k, &osc);
        energies.push(json!({ "k": k, "energy": e }));
        t.push(vec![Cell::Text("energy".into()), Cell::Int(k as u64), Cell::Empty, Cell::Real(e)]);
    }
    let mut levels = Vec::new();
    for m in 0..=mmax {
        let idx = ModelParams::new(c, m)?.landau();
        let eps = landau_level(&idx)?;
        levels.push(json!({ "m": m, "sigma": idx.sigma, "epsilon": eps }));
        t.push(vec![
            Cell::Text("landau".into()),
            Cell::Int(m as u64),
            Cell::Real(idx.sigma),
            Cell::Real(eps),
        ]);
    }
    let bytes = match cfg.format {
        Format::Csv => t.to_csv()?,
        Format::Json => to_json(&json!({
            "version": VERSION,
            "config": cfg,
            "gamma": osc.gamma(),
            "energies": energies,
            "landau": levels,
        }))?,
    };
    emit(&bytes, common.out.as_deref())?;
    Ok(0)
}
