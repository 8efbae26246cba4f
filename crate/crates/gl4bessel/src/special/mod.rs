//! Complex gamma and the gamma-factor calculus it feeds.
//!
//! Everything downstream (hypergeometric sums, series coefficients and the
//! Mellin-Barnes integrands) reduces to the gamma function, the normalized
//! factors
//!
//! ```text
//! G_eta(s) = pi^(1/2-s) i^eta' Gamma((eta'+s)/2) / Gamma((1+eta'-s)/2),
//! R_eta(s) = i^eta' cos(pi (s-eta') / 2),          eta' = eta mod 2 in {0,1},
//! ```
//!
//! and the classical GL(2) Bessel combination `Z^eta_s`.

mod bessel;
mod gamma;
mod geta;

pub use bessel::{bessel_i, bessel_j, bessel_k, classical_z, z_mellin_barnes};
pub use gamma::{gamma, ln_gamma, pochhammer, stirling_magnitude};
pub use geta::{g_eta, g_eta_ln, g_vec, g_vec_ln, r_eta, residue_g, residue_inv_r, ParityIndex};

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the gamma-factor layer.
#[derive(Debug, Clone, Error)]
pub enum SpecialError {
    /// Argument within pole tolerance of the pole lattice.
    #[error("argument {arg} is within {tol:e} of a pole{}", context_suffix(.context))]
    Pole {
        arg: Complex64,
        tol: f64,
        context: &'static str,
    },
    /// A residue was requested at a lattice point of the wrong parity.
    #[error("s = -{n} has parity {} but eta' = {eta_reduced}: not a pole", n % 2)]
    NotAPole { n: u32, eta_reduced: u8 },
    /// Argument outside the domain of definition (e.g. `a = 0` for `Z`).
    #[error("domain error: {0}")]
    Domain(&'static str),
}

fn context_suffix(context: &str) -> String {
    if context.is_empty() {
        String::new()
    } else {
        format!(" of {context}")
    }
}

pub type Result<T> = std::result::Result<T, SpecialError>;

/// Distance below which an argument counts as sitting on a pole.
pub const POLE_TOL: f64 = 1e-12;

/// `i^k` for integer `k`, computed exactly by parity of `k mod 4`.
pub fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `(-1)^k` for integer `k`.
pub fn neg_one_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Distance from `z` to the nearest non-positive integer.
pub fn dist_to_nonpos_int(z: Complex64) -> f64 {
    let n = z.re.round().min(0.0);
    (z - Complex64::new(n, 0.0)).norm()
}
