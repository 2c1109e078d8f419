use std::path::{Path, PathBuf};
use std::thread;

use anyhow::{Context, Result};
use photoexc_core::elements::MatrixElementSet;
use photoexc_core::quadrature::RadialQuadrature;
use photoexc_core::ratios::{b_coefficients, decompose_b0, B0Decomposition, RatioCoefficients};
use photoexc_core::wavefunction::{self, hylleraas_basis, AlphaOptimum, CorrelatedWavefunction};

use crate::config::RunConfig;

pub const WAVEFUNCTION_DIR: &str = "wavefunctions";

/// A solved ground state and where it lives on disk.
pub struct Ground {
    pub wf: CorrelatedWavefunction,
    /// Present only when the exponent was optimized in this run.
    pub optimum: Option<AlphaOptimum>,
    pub path: PathBuf,
}

pub struct Atom {
    pub z: f64,
    pub ground: Ground,
    pub me: MatrixElementSet,
    pub parts: Vec<B0Decomposition>,
    pub coeffs: RatioCoefficients,
}

pub fn z_label(z: f64) -> String {
    if z.fract() == 0.0 {
        format!("{}", z as i64)
    } else {
        format!("{z}").replace('.', "p")
    }
}

fn wavefunction_path(cfg: &RunConfig, z: f64) -> PathBuf {
    let mut name = format!("z{}_d{}", z_label(z), cfg.degree);
    if let Some(a) = cfg.alpha {
        name.push_str(&format!("_a{}", format!("{a}").replace('.', "p")));
    }
    name.push_str(".wf");
    cfg.out.join(WAVEFUNCTION_DIR).join(name)
}

fn solve(cfg: &RunConfig, z: f64) -> Result<(CorrelatedWavefunction, Option<AlphaOptimum>)> {
    let basis = hylleraas_basis(cfg.degree);
    Ok(match cfg.alpha {
        Some(alpha) => (CorrelatedWavefunction::solve(z, alpha, &basis)?, None),
        None => {
            let (wf, opt) = CorrelatedWavefunction::solve_optimized(z, &basis)?;
            (wf, Some(opt))
        }
    })
}

/// A cached file is reused only if it holds the requested charge, basis and
/// (when fixed) exponent.
fn usable(cfg: &RunConfig, z: f64, wf: &CorrelatedWavefunction) -> bool {
    let basis = hylleraas_basis(cfg.degree);
    wf.z() == z
        && wf.terms().len() == basis.len()
        && wf.terms().iter().zip(&basis).all(|(a, b)| a.powers() == b.powers())
        && cfg.alpha.is_none_or(|a| wf.alpha() == a)
}

fn load_cached(cfg: &RunConfig, z: f64, path: &Path) -> Option<CorrelatedWavefunction> {
    if !path.exists() {
        return None;
    }
    match wavefunction::load(path) {
        Ok(wf) if usable(cfg, z, &wf) => Some(wf),
        Ok(_) => {
            eprintln!("{}: does not match the requested basis, solving again", path.display());
            None
        }
        Err(e) => {
            eprintln!("{}: {e}, solving again", path.display());
            None
        }
    }
}

/// Solves (or, unless `fresh`, reuses the cached file for) the ground state
/// of charge `z`, saving it under the output directory.
pub fn ground(cfg: &RunConfig, z: f64, fresh: bool) -> Result<Ground> {
    let path = wavefunction_path(cfg, z);
    if !fresh {
        if let Some(wf) = load_cached(cfg, z, &path) {
            return Ok(Ground {
                wf,
                optimum: None,
                path,
            });
        }
    }
    let (wf, optimum) = solve(cfg, z).with_context(|| format!("ground state for Z = {z}"))?;
    std::fs::create_dir_all(cfg.out.join(WAVEFUNCTION_DIR))?;
    wavefunction::save(&wf, &path).with_context(|| format!("saving {}", path.display()))?;
    Ok(Ground { wf, optimum, path })
}

pub fn atom(cfg: &RunConfig, z: f64) -> Result<Atom> {
    let ground = ground(cfg, z, false)?;
    let me = MatrixElementSet::compute(
        &ground.wf.coalescence_profile(),
        cfg.n_max,
        cfg.l_max,
        cfg.nu,
        &RadialQuadrature::default(),
    )
    .with_context(|| format!("matrix elements for Z = {z}"))?;
    Ok(Atom {
        z,
        parts: decompose_b0(&me)?,
        coeffs: b_coefficients(&me, cfg.kappa)?,
        ground,
        me,
    })
}

/// Runs `f` for every configured charge on its own thread; results come back
/// in configuration order.
pub fn per_charge<T: Send>(cfg: &RunConfig, f: impl Fn(f64) -> T + Sync) -> Vec<T> {
    thread::scope(|s| {
        let f = &f;
        let handles: Vec<_> = cfg.z.iter().map(|&z| s.spawn(move || f(z))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}

pub fn atoms(cfg: &RunConfig) -> Result<Vec<Atom>> {
    std::fs::create_dir_all(cfg.out.join(WAVEFUNCTION_DIR))?;
    per_charge(cfg, |z| atom(cfg, z)).into_iter().collect()
}
