//! Generalized hypergeometric series at and near unit argument.
//!
//! Three normalizations are used downstream:
//!
//! ```text
//! pFq   = sum_n z^n/n! prod <a_i>_n / prod <b_j>_n            (plain)
//! pFq*  = sum_n z^n/n! prod <a_i>_n / prod Gamma(b_j + n)     (regularized)
//! pFq!  = (prod Gamma(a_i)) pFq*                              (completed)
//! ```
//!
//! The regularized series is entire in the lower parameters (terms with
//! `Gamma` at a pole contribute zero); the completed one is what the
//! contiguous relations are cleanest in. Completion factors `Gamma(a_i)` at
//! non-positive integers are dropped in favor of the exact Pochhammer
//! products of the terminating series, which is the finite limiting value.

mod pfq;
mod relations;

pub use pfq::{pfq, HypMode, HypSpec};
pub use relations::{relation_residual, Relation};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum HypError {
    #[error("series neither terminates nor converges (p = {p}, q = {q}, margin Re = {margin})")]
    Divergence { p: usize, q: usize, margin: f64 },
    #[error("denominator parameter {param} hits a pole at term {term}")]
    Pole { param: Complex64, term: u32 },
    #[error("tail bound {bound:e} above target after {terms} terms")]
    SlowConvergence { bound: f64, terms: u32 },
}

pub type Result<T> = std::result::Result<T, HypError>;

/// Tolerance for recognizing a parameter as a non-positive integer.
pub const TERMINATION_TOL: f64 = 1e-10;

/// `Some(n)` when `z` is within tolerance of `-n`, `n >= 0`.
pub fn as_nonpos_int(z: Complex64) -> Option<u32> {
    let n = z.re.round();
    if n <= TERMINATION_TOL && (z - Complex64::new(n, 0.0)).norm() < TERMINATION_TOL {
        Some((-n.min(0.0)) as u32)
    } else {
        None
    }
}
