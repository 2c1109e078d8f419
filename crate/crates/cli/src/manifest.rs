use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Result;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::RunConfig;

pub const MANIFEST_NAME: &str = "manifest.json";

#[derive(Debug, Serialize)]
pub struct FileEntry {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

#[derive(Debug, Serialize)]
pub struct TableEntry {
    pub table: String,
    pub path: String,
}

#[derive(Debug, Serialize)]
pub struct ReportManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub created: String,
    pub kappa: &'static str,
    pub kappa_value: f64,
    pub config: serde_json::Value,
    pub wavefunctions: Vec<FileEntry>,
    pub tables: Vec<TableEntry>,
    /// Every file under the output directory except this manifest.
    pub files: Vec<FileEntry>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn relative(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

fn walk(dir: &Path, out: &mut Vec<PathBuf>) -> Result<()> {
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_dir() {
            walk(&path, out)?;
        } else {
            out.push(path);
        }
    }
    Ok(())
}

fn entry(root: &Path, path: &Path) -> Result<FileEntry> {
    let bytes = fs::read(path)?;
    Ok(FileEntry {
        path: relative(root, path),
        sha256: sha256_hex(&bytes),
        bytes: bytes.len() as u64,
    })
}

/// Digests everything under the output directory and writes the manifest.
pub fn write(
    cfg: &RunConfig,
    command: &str,
    wavefunctions: &[PathBuf],
    tables: &[(String, PathBuf)],
) -> Result<PathBuf> {
    let root = &cfg.out;
    let manifest_path = root.join(MANIFEST_NAME);
    let mut paths = Vec::new();
    walk(root, &mut paths)?;
    paths.retain(|p| p != &manifest_path);
    paths.sort();
    let files = paths.iter().map(|p| entry(root, p)).collect::<Result<Vec<_>>>()?;
    let wavefunctions = wavefunctions
        .iter()
        .map(|p| entry(root, p))
        .collect::<Result<Vec<_>>>()?;
    let manifest = ReportManifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        created: chrono::Utc::now().to_rfc3339(),
        kappa: cfg.kappa.name(),
        kappa_value: cfg.kappa.value(),
        config: cfg.echo(),
        wavefunctions,
        tables: tables
            .iter()
            .map(|(name, p)| TableEntry {
                table: name.clone(),
                path: relative(root, p),
            })
            .collect(),
        files,
    };
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    fs::write(&manifest_path, text)?;
    Ok(manifest_path)
}
