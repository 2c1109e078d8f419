#![allow(dead_code)]

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use photoexc_core::elements::{MatrixElementSet, DEFAULT_NU};
use photoexc_core::quadrature::RadialQuadrature;
use photoexc_core::ratios::{b_coefficients, decompose_b0, B0Decomposition, Kappa, RatioCoefficients};
use photoexc_core::wavefunction::{
    hylleraas_basis, AlphaOptimum, CoalescenceProfile, CorrelatedWavefunction, DEFAULT_DEGREE,
};

pub const Z_GRID: [u32; 5] = [2, 3, 4, 6, 10];
pub const N_MAX: u32 = 6;
pub const L_MAX: u32 = 3;

/// Everything computed for one nuclear charge with the default basis.
pub struct Atom {
    pub wf: CorrelatedWavefunction,
    pub opt: AlphaOptimum,
    pub solve_time: Duration,
    pub profile: CoalescenceProfile,
    pub me: MatrixElementSet,
    pub parts: Vec<B0Decomposition>,
    pub c1: RatioCoefficients,
    pub literal: RatioCoefficients,
}

impl Atom {
    pub fn coeffs(&self, kappa: Kappa) -> &RatioCoefficients {
        match kappa {
            Kappa::C1 => &self.c1,
            Kappa::Literal => &self.literal,
        }
    }

    pub fn a(&self, n: u32) -> f64 {
        self.c1.channel(n).unwrap().a
    }
}

fn build(z: u32) -> Atom {
    let z = f64::from(z);
    let basis = hylleraas_basis(DEFAULT_DEGREE);
    let start = Instant::now();
    let (wf, opt) = CorrelatedWavefunction::solve_optimized(z, &basis).unwrap();
    let solve_time = start.elapsed();
    let profile = wf.coalescence_profile();
    let me = MatrixElementSet::compute(&profile, N_MAX, L_MAX, DEFAULT_NU, &RadialQuadrature::default())
        .unwrap();
    Atom {
        parts: decompose_b0(&me).unwrap(),
        c1: b_coefficients(&me, Kappa::C1).unwrap(),
        literal: b_coefficients(&me, Kappa::Literal).unwrap(),
        wf,
        opt,
        solve_time,
        profile,
        me,
    }
}

pub fn atom(z: u32) -> &'static Atom {
    static CACHE: [OnceLock<Atom>; 5] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let slot = Z_GRID
        .iter()
        .position(|&g| g == z)
        .unwrap_or_else(|| panic!("Z = {z} is not in the cached grid"));
    CACHE[slot].get_or_init(|| build(z))
}
