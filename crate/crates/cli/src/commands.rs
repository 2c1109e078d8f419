use std::path::PathBuf;

use anyhow::{bail, Result};
use photoexc_core::ratios::{
    closed_form_r_f, fit_z_series, mu_at, ratio_curves, scaled_ratios,
};
use photoexc_core::units::hartree_to_ev;

use crate::config::RunConfig;
use crate::pipeline::{self, z_label, Atom};
use crate::table::{charge_cell, Cell, Table};

/// What a command produced, before anything is written.
#[derive(Default)]
pub struct Outcome {
    pub tables: Vec<Table>,
    pub wavefunctions: Vec<PathBuf>,
    /// Per-charge failures that did not stop the other charges.
    pub failures: Vec<anyhow::Error>,
    pub summary: Vec<String>,
}

pub fn ground(cfg: &RunConfig) -> Result<Outcome> {
    std::fs::create_dir_all(cfg.out.join(pipeline::WAVEFUNCTION_DIR))?;
    let results = pipeline::per_charge(cfg, |z| pipeline::ground(cfg, z, true));
    let mut table = Table::new(
        "ground",
        &[
            ("Z", "e"),
            ("alpha", "1/bohr"),
            ("energy", "eV"),
            ("alpha_at_boundary", "1"),
            ("cusp_deviation", "1"),
            ("terms", "1"),
            ("file", "path"),
        ],
    );
    let mut out = Outcome::default();
    for (z, result) in cfg.z.iter().zip(results) {
        match result {
            Ok(g) => {
                let profile = g.wf.coalescence_profile();
                out.summary.push(format!(
                    "Z = {z}: E = {:.7} hartree, alpha = {:.5}, {} terms",
                    g.wf.energy(),
                    g.wf.alpha(),
                    g.wf.terms().len()
                ));
                let file = g
                    .path
                    .strip_prefix(&cfg.out)
                    .unwrap_or(&g.path)
                    .to_string_lossy()
                    .replace('\\', "/");
                table.push(vec![
                    charge_cell(*z),
                    g.wf.alpha().into(),
                    hartree_to_ev(g.wf.energy()).into(),
                    g.optimum.map_or(Cell::Empty, |o| o.at_boundary.into()),
                    profile.cusp_deviation().into(),
                    (g.wf.terms().len() as u32).into(),
                    Cell::Text(file),
                ]);
                out.wavefunctions.push(g.path);
            }
            Err(e) => out.failures.push(e),
        }
    }
    out.tables.push(table);
    Ok(out)
}

fn wavefunction_paths(atoms: &[Atom]) -> Vec<PathBuf> {
    atoms.iter().map(|a| a.ground.path.clone()).collect()
}

pub fn limits(cfg: &RunConfig) -> Result<Outcome> {
    let atoms = pipeline::atoms(cfg)?;
    let mut table = Table::new(
        "limits",
        &[
            ("Z", "e"),
            ("n", "1"),
            ("A_n", "1"),
            ("A_n_Z2_x100", "1"),
            ("n3_A_n", "1"),
        ],
    );
    for atom in &atoms {
        for ch in atom.coeffs.channels.iter().filter(|c| c.n >= 2) {
            let n = f64::from(ch.n);
            table.push(vec![
                charge_cell(atom.z),
                ch.n.into(),
                ch.a.into(),
                (100.0 * atom.z * atom.z * ch.a).into(),
                (n * n * n * ch.a).into(),
            ]);
        }
    }
    Ok(Outcome {
        tables: vec![table],
        wavefunctions: wavefunction_paths(&atoms),
        ..Outcome::default()
    })
}

pub fn coefficients(cfg: &RunConfig) -> Result<Outcome> {
    let atoms = pipeline::atoms(cfg)?;
    let mut b0 = Table::new(
        "coefficients_b0",
        &[
            ("Z", "e"),
            ("n", "1"),
            ("A_n", "1"),
            ("kinematical_1_minus_mu", "hartree"),
            ("isi", "hartree"),
            ("fsi", "hartree"),
            ("B_n0_const", "hartree"),
            ("B_n0_mu", "hartree"),
        ],
    );
    let mut bl = Table::new(
        "coefficients_bl",
        &[
            ("Z", "e"),
            ("n", "1"),
            ("l", "1"),
            ("B_nl_const", "hartree"),
            ("B_nl_mu", "hartree"),
        ],
    );
    let mut bn = Table::new(
        "coefficients_bn",
        &[
            ("Z", "e"),
            ("n", "1"),
            ("B_n_const", "hartree"),
            ("B_n_mu", "hartree"),
        ],
    );
    let mut me = Table::new(
        "matrix_elements",
        &[
            ("Z", "e"),
            ("n", "1"),
            ("S", "a.u."),
            ("Q", "a.u."),
            ("P", "a.u."),
            ("U", "a.u."),
            ("V", "a.u."),
            ("W", "a.u."),
            ("nu", "1/bohr"),
        ],
    );
    let mut overlaps = Table::new(
        "shake_overlaps",
        &[("Z", "e"), ("n", "1"), ("l", "1"), ("S_nl", "a.u.")],
    );
    for atom in &atoms {
        let z = charge_cell(atom.z);
        for n in 1..=atom.me.n_max() {
            me.push(vec![
                z.clone(),
                n.into(),
                atom.me.s(n, 0).into(),
                atom.me.q(n).into(),
                atom.me.p(n).into(),
                atom.me.u(n).into(),
                atom.me.v(n).into(),
                atom.me.w(n).into(),
                atom.me.nu().into(),
            ]);
            for l in 0..=atom.me.l_top(n) {
                overlaps.push(vec![z.clone(), n.into(), l.into(), atom.me.s(n, l).into()]);
            }
        }
        for (ch, part) in atom.coeffs.channels.iter().zip(&atom.parts) {
            if ch.n < 2 {
                continue;
            }
            b0.push(vec![
                z.clone(),
                ch.n.into(),
                ch.a.into(),
                part.kinematical.into(),
                part.isi.into(),
                part.fsi.into(),
                ch.d.into(),
                ch.f.into(),
            ]);
            bl.push(vec![z.clone(), ch.n.into(), 0u32.into(), ch.d.into(), ch.f.into()]);
            for l in 1..=ch.l_top() {
                let b = ch.b(l).expect("stored partial wave");
                bl.push(vec![z.clone(), ch.n.into(), l.into(), b.into(), 0.0.into()]);
            }
            let total = ch.b_total();
            bn.push(vec![
                z.clone(),
                ch.n.into(),
                total.constant.into(),
                total.mu_coeff.into(),
            ]);
        }
    }
    Ok(Outcome {
        tables: vec![b0, bl, bn, me, overlaps],
        wavefunctions: wavefunction_paths(&atoms),
        summary: vec![format!(
            "interference convention kappa = {} ({:.6})",
            cfg.kappa,
            cfg.kappa.value()
        )],
        ..Outcome::default()
    })
}

pub fn ratios(cfg: &RunConfig) -> Result<Outcome> {
    let grids = cfg
        .z
        .iter()
        .map(|&z| cfg.omega_grid(z))
        .collect::<Result<Vec<_>>>()?;
    let atoms = pipeline::atoms(cfg)?;
    let mut out = Outcome {
        wavefunctions: wavefunction_paths(&atoms),
        ..Outcome::default()
    };
    for (atom, grid) in atoms.iter().zip(&grids) {
        let curves = ratio_curves(&atom.coeffs, grid, cfg.allow_low_omega)?;
        for curve in curves.iter().filter(|c| c.n >= 2) {
            let l_count = curve.l_count() as u32;
            let mut names = vec![
                ("omega".to_string(), "eV"),
                ("mu".to_string(), "1"),
                ("R_n".to_string(), "1"),
            ];
            names.extend((0..l_count).map(|l| (format!("R_n{l}"), "1")));
            names.extend((0..l_count).map(|l| (format!("X_n{l}"), "1")));
            names.push(("R_su_exact".to_string(), "1"));
            names.push(("out_of_domain".to_string(), "1"));
            let cols: Vec<(&str, &str)> = names.iter().map(|(c, u)| (c.as_str(), *u)).collect();
            let mut table = Table::new(format!("ratios_Z{}_n{}", z_label(atom.z), curve.n), &cols);
            for s in &curve.samples {
                let mut row: Vec<Cell> = vec![
                    s.omega_ev.into(),
                    mu_at(s.omega_ev, atom.z).into(),
                    s.r_n.into(),
                ];
                row.extend(s.r_l.iter().map(|&r| Cell::from(r)));
                row.extend(s.x_l.iter().map(|&x| Cell::from(x)));
                row.push(s.r_su_exact.into());
                row.push(s.out_of_domain.into());
                table.push(row);
            }
            out.tables.push(table);
        }
    }
    Ok(out)
}

pub fn zscan(cfg: &RunConfig) -> Result<Outcome> {
    if cfg.z.len() < 3 {
        bail!("zscan needs at least 3 nuclear charges, got {}", cfg.z.len());
    }
    let atoms = pipeline::atoms(cfg)?;
    let mut fit = Table::new(
        "zscan_fit",
        &[
            ("n", "1"),
            ("a_n", "1"),
            ("b_n", "1"),
            ("max_residual", "1"),
            ("rms_residual", "1"),
            ("c_n_reference", "1"),
            ("charges", "1"),
        ],
    );
    for n in 2..=cfg.n_max {
        let points: Vec<(f64, f64)> = atoms
            .iter()
            .map(|a| (a.z, a.coeffs.channel(n).expect("channel computed").a))
            .collect();
        let f = fit_z_series(n, &points)?;
        fit.push(vec![
            n.into(),
            f.a.into(),
            f.b.into(),
            f.max_residual.into(),
            f.rms_residual.into(),
            f.c_reference.into(),
            (points.len() as u32).into(),
        ]);
    }
    let mut scaled = Table::new(
        "zscan_scaled",
        &[
            ("Z", "e"),
            ("n", "1"),
            ("r_d0", "1"),
            ("r_f0", "1"),
            ("r_f0_closed_form", "1"),
            ("r_d", "1"),
            ("r_f", "1"),
        ],
    );
    let mut scaled_l = Table::new(
        "zscan_scaled_l",
        &[("Z", "e"), ("n", "1"), ("l", "1"), ("r_nl", "1")],
    );
    for atom in &atoms {
        for r in scaled_ratios(&atom.coeffs) {
            let z = charge_cell(atom.z);
            scaled.push(vec![
                z.clone(),
                r.n.into(),
                r.r_d0.into(),
                r.r_f0.into(),
                closed_form_r_f(r.n).into(),
                r.r_d.into(),
                r.r_f.into(),
            ]);
            for (i, v) in r.r_l.iter().enumerate() {
                scaled_l.push(vec![z.clone(), r.n.into(), (i as u32 + 1).into(), (*v).into()]);
            }
        }
    }
    Ok(Outcome {
        tables: vec![fit, scaled, scaled_l],
        wavefunctions: wavefunction_paths(&atoms),
        ..Outcome::default()
    })
}
