//! Mellin-Barnes evaluation of the kernels and their series assembly.
//!
//! `kernel_k` sums the coset series
//! `K_w = sum_(w') C_w(params^(w')) J_w(y, params^(w'))`; `mb_eval` computes
//! the same function from its contour-integral representation. Agreement of
//! the two routes is the central correctness check of the crate.

mod contour;
mod eval;

pub use contour::{nodes, panels, ContourConfig, Node};
pub use eval::{mb_eval, trace_csv, MbConfig, MbValue};

use crate::frobenius::{j_series, FrobeniusError};
use crate::weyl::{c_w, SpectralParams, WeylElement, WeylError, YPoint};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum MbError {
    #[error("no Mellin-Barnes integrand for Weyl element {0}")]
    Unsupported(String),
    #[error("evaluation budget exhausted after {evals} integrand evaluations")]
    Budget { evals: u64, partial: MbValue },
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

pub type Result<T> = std::result::Result<T, MbError>;

/// Kernel value by coset-summed series at the given truncation order.
pub fn kernel_k(
    w: &WeylElement,
    y: &YPoint,
    params: &SpectralParams,
    order: usize,
) -> Result<Complex64> {
    if w.is_identity() {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut total = Complex64::new(0.0, 0.0);
    for rep in w.coset_reps() {
        let moved = params.acted(&rep);
        let c = c_w(&moved, w)?;
        let j = j_series(w, y, &moved, order)?;
        total += c * j.value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests;
