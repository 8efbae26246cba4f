//! Power-series (Frobenius) data for the kernels `J_w`.
//!
//! Each relevant Weyl element `w` carries a series
//!
//! ```text
//! J_w(y, mu) = prod_i |y_i|^(alpha_i(mu)) sum_m a_(w,m)(mu) y^m
//! ```
//!
//! over its free coordinates, with closed-form coefficients. For the
//! (2,1,1) and long elements several equivalent closed forms exist; the
//! starred (normalized) forms all satisfy one recurrence relation, which
//! doubles as an independent oracle.

mod coeffs;
mod recurrences;
mod series;

pub use coeffs::{series_coefficient, star_coefficient, Form};
pub use recurrences::{oracle_wl, r_nk, recurrence_residual, RecurrenceFamily};
pub use series::{
    coefficient_csv, coefficient_lattice, j_series, leading_exponents, CoeffLattice, SeriesValue,
};

use crate::hyp::HypError;
use crate::weyl::WeylError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum FrobeniusError {
    #[error("spectral parameters degenerate mod Z; series coefficients undefined")]
    DegenerateParameters,
    #[error("no series data for Weyl element {0}")]
    UnsupportedElement(String),
    #[error("form {0:?} not defined for Weyl element {1}")]
    UnsupportedForm(Form, String),
    #[error(transparent)]
    Hyp(#[from] HypError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

pub type Result<T> = std::result::Result<T, FrobeniusError>;

#[cfg(test)]
mod tests;
