/// Helium high-energy limits A_n, n = 2..6.
pub const TABLE_I: [(u32, f64); 5] = [(2, 4.80e-2), (3, 0.590e-2), (4, 0.195e-2), (5, 0.0900e-2), (6, 0.0493e-2)];

/// A_n Z² · 100, rows n = 2..6, columns Z = 2, 3, 4, 6, 10.
pub const TABLE_IV: [[f64; 5]; 5] = [
    [19.1, 14.9, 12.8, 11.4, 10.4],
    [2.36, 2.18, 2.06, 1.93, 1.84],
    [0.781, 0.749, 0.722, 0.692, 0.660],
    [0.360, 0.351, 0.340, 0.327, 0.316],
    [0.197, 0.193, 0.188, 0.182, 0.176],
];

/// a_n for n = 2..6.
pub const TABLE_V_A: [f64; 5] = [8.9e-2, 1.7e-2, 0.61e-2, 0.30e-2, 0.17e-2];
pub const TABLE_V_B2: f64 = 15.0e-2;
pub const TABLE_V_B4: f64 = 0.48e-2;

/// Helium n = 2 split: kinematical coefficient of (1 − μ), ISI, FSI.
pub const HELIUM_B20_PARTS: [f64; 3] = [0.072, 0.027, 0.094];
/// Same split for Z = 10.
pub const NEON_B20_PARTS: [f64; 3] = [0.0390, 0.0191, 0.0496];

pub const HELIUM_B21: f64 = 0.130;
pub const HELIUM_B32: f64 = 3.07e-3;
pub const HELIUM_B42: f64 = 1.35e-3;
pub const HELIUM_B43: f64 = 3.9e-5;

/// Charge-scaled r_2^d for Z = 2 and 10.
pub const R2_D: [(u32, f64); 2] = [(2, 1.69), (10, 2.38)];
/// Charge-scaled 3p ratio for Z = 10.
pub const NEON_R31: f64 = 1.68;
