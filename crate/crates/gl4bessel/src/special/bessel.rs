//! Classical Bessel functions of complex order and the GL(2) kernel `Z^eta_s`.
//!
//! Arguments in the verification suites are O(1), so ascending series are
//! used throughout: `J` and `I` directly, `K` through the `I` combination
//! for non-integer order and through the logarithmic series at integer order
//! (the limit of the combination).

use super::gamma::gamma;
use super::{i_pow, neg_one_pow, Result, SpecialError};
use num_complex::Complex64;
use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_TERMS: usize = 400;

/// `J_nu(x)` by ascending series, complex order, real `x > 0`.
pub fn bessel_j(nu: Complex64, x: f64) -> Result<Complex64> {
    series_i_or_j(nu, x, true)
}

/// `I_nu(x)` by ascending series, complex order, real `x > 0`.
pub fn bessel_i(nu: Complex64, x: f64) -> Result<Complex64> {
    series_i_or_j(nu, x, false)
}

fn series_i_or_j(nu: Complex64, x: f64, alternating: bool) -> Result<Complex64> {
    let half = Complex64::new(x / 2.0, 0.0);
    let q = half * half * if alternating { -1.0 } else { 1.0 };
    // (x/2)^nu / Gamma(nu + 1), then the term recurrence.
    let mut term = half.powc(nu) / gamma(nu + 1.0)?;
    let mut sum = term;
    for k in 1..MAX_TERMS {
        term *= q / (k as f64 * (nu + k as f64));
        sum += term;
        if term.norm() < 1e-17 * sum.norm() + 1e-300 {
            break;
        }
    }
    Ok(sum)
}

fn digamma_int(m: u32) -> f64 {
    // psi(m) = -gamma + H_{m-1}
    let mut h = 0.0;
    for j in 1..m {
        h += 1.0 / j as f64;
    }
    -EULER_GAMMA + h
}

/// `K_n(x)` at non-negative integer order, logarithmic series.
fn bessel_k_int(n: u32, x: f64) -> Complex64 {
    let half = x / 2.0;
    let q = half * half;
    let mut finite = Complex64::new(0.0, 0.0);
    // sum_{k=0}^{n-1} (n-k-1)!/k! (-q)^k, prefactor (1/2)(x/2)^(-n)
    let mut fact_top = (1..n).map(|j| j as f64).product::<f64>(); // (n-1)!
    let mut pw = 1.0;
    let mut kfact = 1.0;
    for k in 0..n {
        finite += Complex64::new(0.5 * half.powi(-(n as i32)) * fact_top / kfact * pw, 0.0);
        if k + 1 < n {
            fact_top /= (n - 1 - k) as f64;
            kfact *= (k + 1) as f64;
            pw *= -q;
        }
    }
    let i_n = bessel_i(Complex64::new(n as f64, 0.0), x).expect("integer order");
    let log_part = neg_one_pow(n as i64 + 1) * half.ln() * i_n;
    let mut tail = Complex64::new(0.0, 0.0);
    let mut coef = 0.5 * half.powi(n as i32) / (1..=n).map(|j| j as f64).product::<f64>();
    for k in 0..MAX_TERMS as u32 {
        let term = coef * (digamma_int(k + 1) + digamma_int(n + k + 1));
        tail += Complex64::new(term, 0.0);
        if term.abs() < 1e-17 * tail.norm() + 1e-300 && k > 4 {
            break;
        }
        coef *= q / ((k + 1) as f64 * (n + k + 1) as f64);
    }
    finite + log_part + neg_one_pow(n as i64) * tail
}

/// `K_s(x)` of complex order via `pi/2 (I_(-s) - I_s) / sin(pi s)`, falling
/// back to the logarithmic series when `s` sits on (or hugs) an integer.
pub fn bessel_k(s: Complex64, x: f64) -> Result<Complex64> {
    let nearest = s.re.round();
    if (s - Complex64::new(nearest, 0.0)).norm() < 1e-6 {
        // K_{-n} = K_n
        return Ok(bessel_k_int(nearest.abs() as u32, x));
    }
    let num = bessel_i(-s, x)? - bessel_i(s, x)?;
    Ok(PI / 2.0 * num / (PI * s).sin())
}

/// The normalized GL(2) Bessel kernel
///
/// ```text
/// Z^eta_s(-a) = 4 i^eta K_s(4 pi sqrt(a)) cos(pi (s - eta) / 2),   a > 0,
/// Z^eta_s(+a) = pi i^eta (J_(-s) - (-1)^eta J_s)(4 pi sqrt(a)) / sin(pi (s + eta) / 2),
/// ```
///
/// invariant under `eta -> eta + 2`. The series implementations need
/// `|Re s| < 2`.
pub fn classical_z(s: Complex64, eta: i64, a: f64) -> Result<Complex64> {
    if a == 0.0 {
        return Err(SpecialError::Domain("Z^eta_s undefined at 0"));
    }
    if s.re.abs() >= 2.0 {
        return Err(SpecialError::Domain("classical_z needs |Re s| < 2"));
    }
    // eta enters only mod 2: reduce once and use the representative in both
    // the i-power and the trigonometric factor.
    let ep = eta.rem_euclid(2);
    let x = 4.0 * PI * a.abs().sqrt();
    if a < 0.0 {
        let k = bessel_k(s, x)?;
        Ok(4.0 * i_pow(ep) * k * (PI * (s - ep as f64) / 2.0).cos())
    } else {
        let den = (PI * (s + ep as f64) / 2.0).sin();
        if den.norm() < 1e-12 {
            return Err(SpecialError::Pole {
                arg: s,
                tol: 1e-12,
                context: "sin factor of Z^eta_s(+a)",
            });
        }
        let num = bessel_j(-s, x)? - neg_one_pow(ep) * bessel_j(s, x)?;
        Ok(PI * i_pow(ep) * num / den)
    }
}

/// Vertical-line Mellin-Barnes representation of `Z^eta_t(-a)`, `a > 0`:
///
/// ```text
/// 2 i^eta cos(pi (t - eta)/2) Int_(Re u = c) Gamma(u + t/2) Gamma(u - t/2) (4 pi^2 a)^(-u) du / (2 pi i)
/// ```
///
/// evaluated by trapezoid quadrature (the integrand decays exponentially).
/// This is the independent oracle the `classical_z` tests compare against.
pub fn z_mellin_barnes(t: Complex64, eta: i64, a: f64, c: f64) -> Result<Complex64> {
    assert!(a > 0.0, "oracle covers the negative-argument branch Z(-a)");
    let ep = eta.rem_euclid(2) as f64;
    let base = Complex64::new(4.0 * PI * PI * a, 0.0);
    let h = 0.02;
    let t_max = 40.0;
    let n = (t_max / h) as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in -n..=n {
        let u = Complex64::new(c, k as f64 * h);
        let f = gamma(u + t / 2.0)? * gamma(u - t / 2.0)? * base.powc(-u);
        acc += f * Complex64::new(0.0, h);
    }
    acc /= Complex64::new(0.0, 2.0 * PI);
    Ok(2.0 * i_pow(eta.rem_euclid(2)) * (PI * (t - ep) / 2.0).cos() * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel_err;

    #[test]
    fn k_zero_matches_tabulated() {
        // K_0(1) = 0.42102443824070834..., K_0(2) = 0.11389387274953344...
        let k1 = bessel_k(Complex64::new(0.0, 0.0), 1.0).unwrap();
        assert!((k1.re - 0.421_024_438_240_708_34).abs() < 1e-12 && k1.im.abs() < 1e-15);
        let k2 = bessel_k(Complex64::new(0.0, 0.0), 2.0).unwrap();
        assert!((k2.re - 0.113_893_872_749_533_44).abs() < 1e-12);
    }

    #[test]
    fn k_near_integer_is_continuous() {
        let x = 3.1;
        let at = bessel_k_int(1, x);
        let near = bessel_k(Complex64::new(1.0 + 2e-6, 0.0), x).unwrap();
        assert!(rel_err(at, near) < 1e-5);
    }

    #[test]
    fn j_tabulated() {
        // J_0(1) = 0.7651976865579666
        let j = bessel_j(Complex64::new(0.0, 0.0), 1.0).unwrap();
        assert!((j.re - 0.765_197_686_557_966_6).abs() < 1e-13);
    }

    #[test]
    fn z_eta_period_two() {
        let s = Complex64::new(0.35, 0.8);
        for a in [0.3, -0.45] {
            let z0 = classical_z(s, 0, a).unwrap();
            let z2 = classical_z(s, 2, a).unwrap();
            assert!(rel_err(z0, z2) < 1e-13);
            let z1 = classical_z(s, 1, a).unwrap();
            let z3 = classical_z(s, 3, a).unwrap();
            assert!(rel_err(z1, z3) < 1e-13);
        }
    }

    #[test]
    fn z_negative_argument_even_parity_is_k() {
        let a = 0.4;
        let z = classical_z(Complex64::new(0.0, 0.0), 0, -a).unwrap();
        let k = bessel_k(Complex64::new(0.0, 0.0), 4.0 * PI * a.sqrt()).unwrap();
        assert!(rel_err(z, 4.0 * k) < 1e-13);
    }

    #[test]
    fn z_matches_mellin_barnes_oracle() {
        let t = Complex64::new(0.4, 0.0);
        let direct = classical_z(t, 0, -0.25).unwrap();
        let mb = z_mellin_barnes(t, 0, 0.25, 0.3).unwrap();
        assert!(rel_err(direct, mb) < 1e-9, "{direct} vs {mb}");
        // And once with nonzero order imaginary part and odd parity.
        let t2 = Complex64::new(0.3, 0.6);
        let direct2 = classical_z(t2, 1, -0.1).unwrap();
        let mb2 = z_mellin_barnes(t2, 1, 0.1, 0.35).unwrap();
        assert!(rel_err(direct2, mb2) < 1e-9);
    }

    #[test]
    fn z_domain_and_pole_errors() {
        assert!(classical_z(Complex64::new(0.1, 0.0), 0, 0.0).is_err());
        // sin(pi (s + eta)/2) = 0 at s = 0, eta = 0 on the positive branch.
        assert!(classical_z(Complex64::new(0.0, 0.0), 0, 0.5).is_err());
    }
}
