//! Spectral parameters, power functions and Weyl-group combinatorics.
//!
//! The relevant Weyl elements of GL(4) are the reverse-block permutation
//! matrices indexed by compositions of 4. Everything the kernel assembly
//! needs from the group lives here: the parameter action, coset transversals
//! for `W / W_w`, the inversion-pair sets `S_w`, the normalization
//! `Lambda_w`, the first-term constants `C_w`, the Casimir eigenvalues and
//! the duality transform `w -> w^iota`.

mod element;
mod power;

pub use element::{relevant_weyl_list, Permutation, WeylElement, YPoint};
pub use power::{chi, iota_power, power_i, power_i_unnormalized, power_i_tilde, sign_character};

use crate::special::{gamma, r_eta, neg_one_pow};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum WeylError {
    #[error("spectral parameters must sum to zero (|sum| = {0:e})")]
    NonzeroSum(f64),
    #[error("coordinate {0} of the parameter vector is degenerate mod Z")]
    Degenerate(usize),
    #[error("a coordinate of the diagonal argument vanishes")]
    ZeroCoordinate,
    #[error("R_{eta}(1 + mu_{j} - mu_{k}) vanishes in C_w")]
    VanishingR { eta: i64, j: usize, k: usize },
    #[error("Gamma factor of Lambda_w at a pole for pair ({j},{k})")]
    LambdaPole { j: usize, k: usize },
    #[error("operation not defined for Weyl element {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, WeylError>;

/// Half-sum of positive roots for GL(4).
pub const RHO: [f64; 4] = [1.5, 0.5, -0.5, -1.5];

/// Spectral parameters `(mu, delta)` of a principal-series representation:
/// `mu` in C^4 with `sum mu_i = 0`, `delta` in Z^4.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpectralParamsRepr", into = "SpectralParamsRepr")]
pub struct SpectralParams {
    pub mu: [Complex64; 4],
    pub delta: [i64; 4],
}

/// JSON shape: complex numbers as `[re, im]` pairs.
#[derive(Serialize, Deserialize)]
struct SpectralParamsRepr {
    mu: [[f64; 2]; 4],
    delta: [i64; 4],
}

impl TryFrom<SpectralParamsRepr> for SpectralParams {
    type Error = WeylError;
    fn try_from(r: SpectralParamsRepr) -> Result<Self> {
        let mu = r.mu.map(|p| Complex64::new(p[0], p[1]));
        SpectralParams::new(mu, r.delta)
    }
}

impl From<SpectralParams> for SpectralParamsRepr {
    fn from(p: SpectralParams) -> Self {
        SpectralParamsRepr {
            mu: p.mu.map(|z| [z.re, z.im]),
            delta: p.delta,
        }
    }
}

impl SpectralParams {
    pub fn new(mu: [Complex64; 4], delta: [i64; 4]) -> Result<Self> {
        let s = (mu[0] + mu[1] + mu[2] + mu[3]).norm();
        if s > 1e-12 {
            return Err(WeylError::NonzeroSum(s));
        }
        Ok(SpectralParams { mu, delta })
    }

    /// `delta_1 + delta_2 + delta_3 + delta_4`.
    pub fn delta_sum(&self) -> i64 {
        self.delta.iter().sum()
    }

    /// Coordinates distinct mod Z within `tol`; the series layers require it.
    pub fn is_distinct_mod_z(&self, tol: f64) -> bool {
        crate::sampling::distinct_mod_z(&self.mu, tol)
    }

    /// Right action `(mu, delta) -> (mu^w, delta^w)`, `mu^w_i = mu_{w^{-1}(i)}`.
    pub fn acted(&self, w: &Permutation) -> SpectralParams {
        SpectralParams {
            mu: std::array::from_fn(|i| self.mu[w.inv_image(i)]),
            delta: std::array::from_fn(|i| self.delta[w.inv_image(i)]),
        }
    }
}

/// `mu^w` alone, for callers that carry no sign vector.
pub fn weyl_action_mu(mu: &[Complex64; 4], w: &Permutation) -> [Complex64; 4] {
    std::array::from_fn(|i| mu[w.inv_image(i)])
}

/// Eigenvalues `(lambda_1, .., lambda_4)` of the renormalized Casimir
/// operators on the power function:
///
/// ```text
/// lambda_1 = 0
/// lambda_2 = 5/2 - (mu_1^2 + .. + mu_4^2)/2
/// lambda_3 = e_3(mu)   (third elementary symmetric function)
/// lambda_4 = 41/16 - (mu_1^4 + .. + mu_4^4)/4
/// ```
pub fn lambda_eigen(mu: &[Complex64; 4]) -> [Complex64; 4] {
    let p2: Complex64 = mu.iter().map(|m| m * m).sum();
    let p4: Complex64 = mu.iter().map(|m| m * m * m * m).sum();
    let mut e3 = Complex64::new(0.0, 0.0);
    for i in 0..4 {
        for j in (i + 1)..4 {
            for k in (j + 1)..4 {
                e3 += mu[i] * mu[j] * mu[k];
            }
        }
    }
    [
        Complex64::new(0.0, 0.0),
        Complex64::new(2.5, 0.0) - p2 / 2.0,
        e3,
        Complex64::new(41.0 / 16.0, 0.0) - p4 / 4.0,
    ]
}

/// Inversion pairs `S_w = {(j,k) : j < k, w^{-1}(k) < w^{-1}(j)}`, 0-based.
pub fn inversion_pairs(w: &WeylElement) -> Vec<(usize, usize)> {
    let p = w.permutation();
    let mut pairs = Vec::new();
    for j in 0..4 {
        for k in (j + 1)..4 {
            if p.inv_image(k) < p.inv_image(j) {
                pairs.push((j, k));
            }
        }
    }
    pairs
}

/// Normalization `Lambda_w(mu) = prod_((j,k) in S_w) (2 pi)^(mu_k - mu_j) Gamma(1 + mu_j - mu_k)`.
pub fn lambda_w(mu: &[Complex64; 4], w: &WeylElement) -> Result<Complex64> {
    let mut v = Complex64::new(1.0, 0.0);
    for (j, k) in inversion_pairs(w) {
        let d = mu[j] - mu[k];
        let g = gamma(Complex64::new(1.0, 0.0) + d)
            .map_err(|_| WeylError::LambdaPole { j, k })?;
        v *= Complex64::new(2.0 * PI, 0.0).powc(-d) * g;
    }
    Ok(v)
}

/// First-term constants
/// `C_w(mu, delta) = prod_((j,k) in S_w) (-1)^delta_j pi / R_(delta_j + delta_k)(1 + mu_j - mu_k)`.
pub fn c_w(params: &SpectralParams, w: &WeylElement) -> Result<Complex64> {
    let mut v = Complex64::new(1.0, 0.0);
    for (j, k) in inversion_pairs(w) {
        let eta = params.delta[j] + params.delta[k];
        let r = r_eta(eta, Complex64::new(1.0, 0.0) + params.mu[j] - params.mu[k]);
        if r.norm() < 1e-12 {
            return Err(WeylError::VanishingR { eta, j, k });
        }
        v *= neg_one_pow(params.delta[j]) * PI / r;
    }
    Ok(v)
}

/// The duality transform behind `K_w(y, mu, delta) = K_(w^iota)(v~ y^iota, -mu^(w_l), delta^(w_l))`:
/// returns the transformed `(y, params, w)` triple.
///
/// `w^iota = w_l w w_l`; `y^iota` reverses the coordinate triple; `v~` is
/// the sign adjustment `v (w v w^{-1})` with `v = Y(-1,-1,-1,-1)`.
pub fn iota_transform(
    y: &YPoint,
    params: &SpectralParams,
    w: &WeylElement,
) -> (YPoint, SpectralParams, WeylElement) {
    let wl = Permutation::long_element();
    let w_iota = w.conjugated_by_long();
    // v = Y(-1,-1,-1,-1) has diagonal (1,-1,1,-1); v~_ii = v_i v_(w^-1(i)).
    let v = [1.0f64, -1.0, 1.0, -1.0];
    let vt: [f64; 4] = std::array::from_fn(|i| v[i] * v[w.permutation().inv_image(i)]);
    // y^iota in coordinates: the triple reversed; then y'_i scaled by vt_i/vt_(i+1).
    let rev = [y.coords()[2], y.coords()[1], y.coords()[0]];
    let scaled = [
        rev[0] * vt[0] / vt[1],
        rev[1] * vt[1] / vt[2],
        rev[2] * vt[2] / vt[3],
    ];
    let y_new = YPoint::new_unchecked(w_iota.clone(), scaled);
    let mu_new = std::array::from_fn(|i| -params.mu[wl.inv_image(i)]);
    let delta_new = std::array::from_fn(|i| params.delta[wl.inv_image(i)]);
    (
        y_new,
        SpectralParams {
            mu: mu_new,
            delta: delta_new,
        },
        w_iota,
    )
}

#[cfg(test)]
mod tests;
