//! Numerics for the Bessel kernels of the GL(4) Kuznetsov formula.
//!
//! The crate is organized around the objects those kernels are built from:
//!
//! - [`special`]: complex gamma, the normalized gamma factors `G_eta` / `R_eta`
//!   and the classical GL(2) Bessel combination `Z^eta_s`.
//! - [`hyp`]: generalized hypergeometric series at unit argument (plain,
//!   regularized and fully completed) with the contiguous-relation suite.
//! - [`weyl`]: spectral parameters, power functions, Weyl combinatorics, the
//!   normalization factors `Lambda_w` and first-term constants `C_w`.
//! - [`frobenius`]: power-series coefficients and evaluation of the kernel
//!   series `J_w`, plus independent recurrence oracles.
//! - [`diffops`]: the Bessel differential operators in Euler form and the
//!   annihilation checks for the series solutions.
//! - [`mb`]: numerical Mellin-Barnes evaluation of the kernels and their
//!   assembly from the series, the central cross-representation check.
//! - [`decomp`]: numerical verification of the explicit Iwasawa and Bruhat
//!   decompositions of `w x`.
//! - [`interchange`]: the oscillatory-integral case prover over exact linear
//!   inequalities in the dyadic scales `log C_j`.

pub mod decomp;
pub mod diffops;
pub mod frobenius;
pub mod hyp;
pub mod interchange;
pub mod mb;
pub mod sampling;
pub mod special;
pub mod weyl;

pub use num_complex::Complex64;

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}
