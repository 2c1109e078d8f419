use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("factorial overflow in basis integral: total power {0} exceeds the f64-safe bound")]
    FactorialOverflow(u32),

    #[error("degenerate basis: overlap matrix is not positive definite (pivot {pivot} = {value:e})")]
    DegenerateBasis { pivot: usize, value: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    EigenNoConvergence { sweeps: usize, off_norm: f64 },

    #[error("quadrature did not converge: estimated error {error:e} against tolerance {tolerance:e}")]
    QuadratureNoConvergence { error: f64, tolerance: f64 },

    #[error("integrand does not decay within r = {0} bohr")]
    NoDecay(f64),

    #[error("channel n = {n} closed at ω = {omega_hartree} hartree (threshold {threshold_hartree} hartree)")]
    ClosedChannel {
        n: u32,
        omega_hartree: f64,
        threshold_hartree: f64,
    },

    #[error("ω = {omega_ev} eV lies below the validity guard {guard_ev} eV for Z = {z}")]
    OutOfDomain { omega_ev: f64, guard_ev: f64, z: f64 },

    #[error("wavefunction file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of an iterative or adaptive numerical procedure.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::DegenerateBasis { .. }
                | Error::EigenNoConvergence { .. }
                | Error::QuadratureNoConvergence { .. }
                | Error::NoDecay(_)
                | Error::FactorialOverflow(_)
        )
    }

    /// True for photon energies outside the open-channel or validity domain.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::ClosedChannel { .. } | Error::OutOfDomain { .. })
    }
}
