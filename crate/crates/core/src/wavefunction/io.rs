//! Plain-text wavefunction files.
//!
//! ```text
//! # comment
//! format_version = 1
//! Z = 2.0000000000000000e0
//! alpha = 2.2345...e0
//! energy = -2.9037...e0
//! norm = 1.0000000000000000e0
//! terms = 2
//! 0 0 0 1.2345678901234567e0
//! 0 0 1 -3.2100000000000000e-1
//! ```

use std::fmt::Write as _;
use std::path::Path;

use super::{CorrelatedWavefunction, HylleraasTerm};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

pub fn to_text(wf: &CorrelatedWavefunction) -> String {
    let mut out = String::new();
    out.push_str("# correlated two-electron wavefunction: exp(-alpha s) sum c s^i t^j u^k\n");
    let _ = writeln!(out, "format_version = {FORMAT_VERSION}");
    let _ = writeln!(out, "Z = {:.16e}", wf.z());
    let _ = writeln!(out, "alpha = {:.16e}", wf.alpha());
    let _ = writeln!(out, "energy = {:.16e}", wf.energy());
    let _ = writeln!(out, "norm = {:.16e}", wf.norm());
    let _ = writeln!(out, "terms = {}", wf.terms().len());
    for t in wf.terms() {
        let _ = writeln!(out, "{} {} {} {:.16e}", t.i, t.j, t.k, t.coefficient);
    }
    out
}

pub fn from_text(text: &str) -> Result<CorrelatedWavefunction> {
    let mut version = None;
    let mut z = None;
    let mut alpha = None;
    let mut energy = None;
    let mut norm = None;
    let mut count = None;
    let mut terms = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| Error::Format(format!("line {}: {what}: {raw:?}", lineno + 1));
        if let Some((key, value)) = line.split_once('=') {
            let value = value.trim();
            let real = || value.parse::<f64>().map_err(|_| bad("expected a real number"));
            match key.trim() {
                "format_version" => {
                    version = Some(value.parse::<u32>().map_err(|_| bad("expected an integer"))?)
                }
                "Z" => z = Some(real()?),
                "alpha" => alpha = Some(real()?),
                "energy" => energy = Some(real()?),
                "norm" => norm = Some(real()?),
                "terms" => count = Some(value.parse::<usize>().map_err(|_| bad("expected a count"))?),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(bad("term rows need i j k coefficient"));
        }
        let power = |s: &str| s.parse::<u32>().map_err(|_| bad("expected a power"));
        let coefficient = fields[3].parse::<f64>().map_err(|_| bad("expected a coefficient"))?;
        let term = HylleraasTerm::new(power(fields[0])?, power(fields[1])?, power(fields[2])?, coefficient)
            .map_err(|e| bad(&e.to_string()))?;
        terms.push(term);
    }

    let missing = |k: &str| Error::Format(format!("missing key {k}"));
    match version {
        Some(FORMAT_VERSION) => {}
        Some(v) => {
            return Err(Error::Format(format!(
                "unsupported format_version {v} (expected {FORMAT_VERSION})"
            )))
        }
        None => return Err(missing("format_version")),
    }
    let count = count.ok_or_else(|| missing("terms"))?;
    if count != terms.len() {
        return Err(Error::Format(format!(
            "header announces {count} terms but {} rows follow",
            terms.len()
        )));
    }
    CorrelatedWavefunction::from_parts(
        z.ok_or_else(|| missing("Z"))?,
        alpha.ok_or_else(|| missing("alpha"))?,
        terms,
        energy.ok_or_else(|| missing("energy"))?,
        norm.ok_or_else(|| missing("norm"))?,
    )
}

pub fn save(wf: &CorrelatedWavefunction, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_text(wf))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<CorrelatedWavefunction> {
    from_text(&std::fs::read_to_string(path)?)
}
