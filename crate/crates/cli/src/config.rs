use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::Args;
use photoexc_core::ratios::{validity_guard_ev, Kappa, OmegaGrid, OmegaScale};
use photoexc_core::wavefunction::DEFAULT_DEGREE;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => bail!("format must be 'csv' or 'json', got {other:?}"),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Flags shared by every subcommand. Anything left unset falls back to the
/// config file, then to the built-in default.
#[derive(Debug, Default, Args)]
pub struct Overrides {
    /// Flat key = value file with the same keys as these flags
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Nuclear charges, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub z: Option<Vec<f64>>,
    #[arg(long, global = true)]
    pub nmax: Option<u32>,
    #[arg(long, global = true)]
    pub lmax: Option<u32>,
    /// Highest total power i + j + k of the correlated basis
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Fixed exponent instead of the optimized one
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    /// Infrared regulator, bohr⁻¹
    #[arg(long, global = true)]
    pub nu: Option<f64>,
    /// Lowest photon energy, eV (default: the validity guard 2Z² hartree)
    #[arg(long, global = true)]
    pub omega_min: Option<f64>,
    /// Highest photon energy, eV
    #[arg(long, global = true)]
    pub omega_max: Option<f64>,
    #[arg(long, global = true)]
    pub omega_points: Option<usize>,
    /// log | linear
    #[arg(long, global = true)]
    pub omega_scale: Option<String>,
    /// literal | c1
    #[arg(long, global = true)]
    pub kappa: Option<String>,
    /// Output directory
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// csv | json
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Also print tables in the m.mm(e) layout of the published tables
    #[arg(long, global = true)]
    pub paper_style: bool,
    /// Keep photon energies below the validity guard, tagged out of domain
    #[arg(long, global = true)]
    pub allow_low_omega: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub z: Vec<f64>,
    pub n_max: u32,
    pub l_max: u32,
    pub degree: u32,
    pub alpha: Option<f64>,
    pub nu: f64,
    pub omega_min: Option<f64>,
    pub omega_max: f64,
    pub omega_points: usize,
    pub omega_scale: OmegaScale,
    pub kappa: Kappa,
    pub out: PathBuf,
    pub format: Format,
    pub paper_style: bool,
    pub allow_low_omega: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            z: vec![2.0, 3.0, 4.0, 6.0, 10.0],
            n_max: 6,
            l_max: 3,
            degree: DEFAULT_DEGREE,
            alpha: None,
            nu: 1.0,
            omega_min: None,
            omega_max: 1.0e4,
            omega_points: 40,
            omega_scale: OmegaScale::Log,
            kappa: Kappa::default(),
            out: PathBuf::from("out"),
            format: Format::Csv,
            paper_style: false,
            allow_low_omega: false,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: fmt::Display,
{
    value
        .trim()
        .parse()
        .map_err(|e| anyhow::anyhow!("bad value {value:?} for {key}: {e}"))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => bail!("bad value {other:?} for {key}: expected true or false"),
    }
}

fn parse_z_list(value: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .map(|s| parse::<f64>("z", s))
        .collect()
}

impl RunConfig {
    /// Defaults, then the config file, then command-line flags.
    pub fn resolve(o: &Overrides) -> Result<Self> {
        let mut cfg = match &o.config {
            Some(path) => Self::from_file(path)?,
            None => Self::default(),
        };
        if let Some(z) = &o.z {
            cfg.z = z.clone();
        }
        if let Some(v) = o.nmax {
            cfg.n_max = v;
        }
        if let Some(v) = o.lmax {
            cfg.l_max = v;
        }
        if let Some(v) = o.degree {
            cfg.degree = v;
        }
        if o.alpha.is_some() {
            cfg.alpha = o.alpha;
        }
        if let Some(v) = o.nu {
            cfg.nu = v;
        }
        if o.omega_min.is_some() {
            cfg.omega_min = o.omega_min;
        }
        if let Some(v) = o.omega_max {
            cfg.omega_max = v;
        }
        if let Some(v) = o.omega_points {
            cfg.omega_points = v;
        }
        if let Some(v) = &o.omega_scale {
            cfg.omega_scale = parse("omega_scale", v)?;
        }
        if let Some(v) = &o.kappa {
            cfg.kappa = parse("kappa", v)?;
        }
        if let Some(v) = &o.out {
            cfg.out = v.clone();
        }
        if let Some(v) = &o.format {
            cfg.format = parse("format", v)?;
        }
        cfg.paper_style |= o.paper_style;
        cfg.allow_low_omega |= o.allow_low_omega;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        Self::from_text(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected key = value, got {raw:?}", lineno + 1);
            };
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            match key.as_str() {
                "z" => cfg.z = parse_z_list(value)?,
                "nmax" | "n_max" => cfg.n_max = parse(&key, value)?,
                "lmax" | "l_max" => cfg.l_max = parse(&key, value)?,
                "degree" => cfg.degree = parse(&key, value)?,
                "alpha" => cfg.alpha = Some(parse(&key, value)?),
                "nu" => cfg.nu = parse(&key, value)?,
                "omega_min" => cfg.omega_min = Some(parse(&key, value)?),
                "omega_max" => cfg.omega_max = parse(&key, value)?,
                "omega_points" => cfg.omega_points = parse(&key, value)?,
                "omega_scale" => cfg.omega_scale = parse(&key, value)?,
                "kappa" => cfg.kappa = parse(&key, value)?,
                "out" => cfg.out = PathBuf::from(value),
                "format" => cfg.format = parse(&key, value)?,
                "paper_style" => cfg.paper_style = parse_bool(&key, value)?,
                "allow_low_omega" => cfg.allow_low_omega = parse_bool(&key, value)?,
                other => bail!("line {}: unknown key {other:?}", lineno + 1),
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.z.is_empty() {
            bail!("at least one nuclear charge is required");
        }
        if let Some(z) = self.z.iter().find(|z| !(**z > 0.0 && z.is_finite())) {
            bail!("nuclear charges must be positive, got {z}");
        }
        let mut sorted = self.z.clone();
        sorted.sort_by(f64::total_cmp);
        sorted.dedup();
        if sorted.len() != self.z.len() {
            bail!("nuclear charges must be distinct");
        }
        if self.n_max < 2 {
            bail!("nmax must be at least 2, got {}", self.n_max);
        }
        if self.degree == 0 {
            bail!("degree must be at least 1");
        }
        if let Some(a) = self.alpha {
            if !(a > 0.0 && a.is_finite()) {
                bail!("alpha must be positive, got {a}");
            }
        }
        if !(self.nu > 0.0 && self.nu.is_finite()) {
            bail!("nu must be positive, got {}", self.nu);
        }
        if self.omega_points == 0 {
            bail!("omega_points must be at least 1");
        }
        if let Some(lo) = self.omega_min {
            if !(lo > 0.0 && lo <= self.omega_max) {
                bail!("need 0 < omega_min <= omega_max, got {lo} and {}", self.omega_max);
            }
        }
        Ok(())
    }

    /// Photon-energy grid for charge `z`; starts at the validity guard unless
    /// a lower bound was configured.
    pub fn omega_grid(&self, z: f64) -> Result<Vec<f64>> {
        let min_ev = self.omega_min.unwrap_or_else(|| validity_guard_ev(z));
        if min_ev > self.omega_max {
            bail!(
                "omega_max = {} eV lies below the validity guard {min_ev} eV for Z = {z}",
                self.omega_max
            );
        }
        Ok(OmegaGrid {
            min_ev,
            max_ev: self.omega_max,
            points: self.omega_points,
            scale: self.omega_scale,
        }
        .values()?)
    }

    pub fn echo(&self) -> Value {
        json!({
            "z": self.z,
            "nmax": self.n_max,
            "lmax": self.l_max,
            "degree": self.degree,
            "alpha": self.alpha,
            "nu": self.nu,
            "omega_min": self.omega_min,
            "omega_max": self.omega_max,
            "omega_points": self.omega_points,
            "omega_scale": match self.omega_scale {
                OmegaScale::Linear => "linear",
                OmegaScale::Log => "log",
            },
            "kappa": self.kappa.name(),
            "format": self.format.to_string(),
            "paper_style": self.paper_style,
            "allow_low_omega": self.allow_low_omega,
        })
    }
}
