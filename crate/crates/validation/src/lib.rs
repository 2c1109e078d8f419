//! Published reference values, a cached per-charge fixture, and the
//! pass/fail reporter used by the acceptance suite.

pub mod fixture;
pub mod reference;
pub mod report;

pub use fixture::{atom, Atom, L_MAX, N_MAX, Z_GRID};
pub use report::Criterion;
