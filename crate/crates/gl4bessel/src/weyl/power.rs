//! Multiplicative characters and the power functions on the diagonal.

use super::{Result, SpectralParams, WeylError, YPoint, RHO};
use num_complex::Complex64;

/// `chi_s^l(a) = sgn(a)^l |a|^s` for real `a != 0`.
pub fn chi(s: Complex64, ell: i64, a: f64) -> Result<Complex64> {
    if a == 0.0 {
        return Err(WeylError::ZeroCoordinate);
    }
    let sign = if a < 0.0 && ell.rem_euclid(2) == 1 {
        -1.0
    } else {
        1.0
    };
    Ok(sign * (s * a.abs().ln()).exp())
}

/// Power function `I_(mu,delta)(diag(a)) = prod_i chi^(delta_i)_(rho_i + mu_i)(a_i)`.
pub fn power_i(params: &SpectralParams, a: &[f64; 4]) -> Result<Complex64> {
    let mut v = Complex64::new(1.0, 0.0);
    for i in 0..4 {
        v *= chi(params.mu[i] + RHO[i], params.delta[i], a[i])?;
    }
    Ok(v)
}

/// Unnormalized power function `I^*_(mu,delta) = I_(mu - rho, delta)`, i.e.
/// plain exponents `mu_i` with no rho shift.
pub fn power_i_unnormalized(params: &SpectralParams, a: &[f64; 4]) -> Result<Complex64> {
    let mut v = Complex64::new(1.0, 0.0);
    for i in 0..4 {
        v *= chi(params.mu[i], params.delta[i], a[i])?;
    }
    Ok(v)
}

/// The three-argument form
/// `I~_(mu,delta)(a_1,a_2,a_3) = prod_(i=1..3) chi^(delta_i + delta_(i+1))_(-1 + mu_(i+1) - mu_i)(a_i)`.
pub fn power_i_tilde(params: &SpectralParams, a: &[f64; 3]) -> Result<Complex64> {
    let mut v = Complex64::new(1.0, 0.0);
    for i in 0..3 {
        v *= chi(
            Complex64::new(-1.0, 0.0) + params.mu[i + 1] - params.mu[i],
            params.delta[i] + params.delta[i + 1],
            a[i],
        )?;
    }
    Ok(v)
}

/// `I_(mu,delta)(y^iota)` in the coordinates `(y_1, y_2, y_3)`:
///
/// ```text
/// chi^(d4)_(3/2 - mu4)(y1) chi^(d3+d4)_(2 - mu3 - mu4)(y2) chi^(d2+d3+d4)_(3/2 - mu2 - mu3 - mu4)(y3)
/// ```
pub fn iota_power(params: &SpectralParams, y: &[f64; 3]) -> Result<Complex64> {
    let [m1, m2, m3, m4] = params.mu;
    let _ = m1;
    let [d1, d2, d3, d4] = params.delta;
    let _ = d1;
    let a = chi(Complex64::new(1.5, 0.0) - m4, d4, y[0])?;
    let b = chi(Complex64::new(2.0, 0.0) - m3 - m4, d3 + d4, y[1])?;
    let c = chi(Complex64::new(1.5, 0.0) - m2 - m3 - m4, d2 + d3 + d4, y[2])?;
    Ok(a * b * c)
}

/// The sign character `I_(0,delta)(y) / I_(0,0)(y)` on `Y` at `y_4 = 1`:
/// `prod_i sgn(d_i)^(delta_i)` over the diagonal entries. It carries the
/// sign dependence of the kernel series `J_w(y, mu, delta)`.
pub fn sign_character(delta: &[i64; 4], y: &YPoint) -> f64 {
    let d = y.diagonal();
    let mut s = 1.0;
    for i in 0..4 {
        if d[i] < 0.0 && delta[i].rem_euclid(2) == 1 {
            s = -s;
        }
    }
    s
}
