//! The normalized gamma factors `G_eta` and `R_eta`.
//!
//! `G_eta(s)` carries simple poles at `s = -n`, `n >= 0`, `n = eta (mod 2)`,
//! with residue `2 (2 pi i)^n / n!`, and satisfies
//! `G_eta(s) = 2 (2 pi)^(-s) R_eta(s) Gamma(s)` together with the reflection
//! `G_eta(s) G_eta(1-s) = (-1)^eta`. The suites below the kernel assembly
//! lean on those identities, so they are unit-tested here directly.

use super::gamma::{gamma, ln_gamma};
use super::{i_pow, neg_one_pow, Result, SpecialError, POLE_TOL};
use num_complex::Complex64;
use std::f64::consts::PI;

/// An integer parity datum `eta` together with its reduction to {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityIndex {
    eta: i64,
}

impl ParityIndex {
    pub fn new(eta: i64) -> Self {
        ParityIndex { eta }
    }

    pub fn eta(self) -> i64 {
        self.eta
    }

    /// The representative in {0, 1} congruent to `eta` mod 2.
    pub fn reduced(self) -> u8 {
        self.eta.rem_euclid(2) as u8
    }

    /// `i^eta'` with the reduced parity, exact.
    pub fn i_power(self) -> Complex64 {
        i_pow(self.reduced() as i64)
    }
}

impl From<i64> for ParityIndex {
    fn from(eta: i64) -> Self {
        ParityIndex::new(eta)
    }
}

/// Distance from `s` to the pole lattice of `G_eta` (non-positive integers
/// of parity `eta`).
fn dist_to_g_pole(eta: ParityIndex, s: Complex64) -> f64 {
    let mut n = s.re.round();
    if n > 0.0 {
        n = 0.0;
    }
    // Nearest lattice integer of the right parity.
    let parity = eta.reduced() as f64;
    let n = if (n.abs() as i64).rem_euclid(2) == parity as i64 {
        n
    } else {
        // Step to whichever neighbor of the right parity is closer (or the
        // only one that is <= 0).
        let up = n + 1.0;
        let down = n - 1.0;
        if up <= 0.0 && (s.re - up).abs() < (s.re - down).abs() {
            up
        } else {
            down
        }
    };
    if n > 0.0 {
        return f64::INFINITY;
    }
    (s - Complex64::new(n, 0.0)).norm()
}

/// `R_eta(s) = i^eta' cos(pi (s - eta') / 2)`. Entire.
pub fn r_eta(eta: impl Into<ParityIndex>, s: Complex64) -> Complex64 {
    let eta = eta.into();
    eta.i_power() * (PI * (s - eta.reduced() as f64) / 2.0).cos()
}

/// `G_eta(s) = pi^(1/2-s) i^eta' Gamma((eta'+s)/2) / Gamma((1+eta'-s)/2)`.
pub fn g_eta(eta: impl Into<ParityIndex>, s: Complex64) -> Result<Complex64> {
    let eta = eta.into();
    if dist_to_g_pole(eta, s) < POLE_TOL {
        return Err(SpecialError::Pole {
            arg: s,
            tol: POLE_TOL,
            context: "G_eta",
        });
    }
    let ep = eta.reduced() as f64;
    let num = gamma((s + ep) / 2.0)?;
    let den = gamma((1.0 + ep - s) / 2.0)?;
    Ok(Complex64::new(PI, 0.0).powc(Complex64::new(0.5, 0.0) - s) * eta.i_power() * num / den)
}

/// `log G_eta(s)` modulo `2 pi i`, stable for large |Im s|.
///
/// Only meaningful under exponentiation; contour integrands sum these logs
/// across many factors before a single `exp`.
pub fn g_eta_ln(eta: impl Into<ParityIndex>, s: Complex64) -> Complex64 {
    let eta = eta.into();
    let ep = eta.reduced() as f64;
    let phase = Complex64::new(0.0, PI / 2.0) * ep; // log i^eta'
    (Complex64::new(0.5, 0.0) - s) * PI.ln() + phase + ln_gamma((s + ep) / 2.0)
        - ln_gamma((1.0 + ep - s) / 2.0)
}

/// Vector factor `G_ell(s, t, eta) = prod_j G_(ell + eta_j)(s + t_j)`.
///
/// On error the index of the offending factor is reported through the pole
/// argument (the shifted abscissa `s + t_j` is what is recorded).
pub fn g_vec(ell: i64, s: Complex64, t: &[Complex64], eta: &[i64]) -> Result<Complex64> {
    assert_eq!(t.len(), eta.len(), "shift and parity vectors must align");
    let mut p = Complex64::new(1.0, 0.0);
    for (tj, ej) in t.iter().zip(eta) {
        p *= g_eta(ell + ej, s + tj)?;
    }
    Ok(p)
}

/// `log` of [`g_vec`], summed factorwise; for integrand use only.
pub fn g_vec_ln(ell: i64, s: Complex64, t: &[Complex64], eta: &[i64]) -> Complex64 {
    assert_eq!(t.len(), eta.len());
    t.iter()
        .zip(eta)
        .map(|(tj, ej)| g_eta_ln(ell + ej, s + tj))
        .sum()
}

/// Residue of `G_eta` at `s = -n`: `2 (2 pi i)^n / n!`.
///
/// Lattice points of the wrong parity are regular, reported as `NotAPole`.
pub fn residue_g(eta: impl Into<ParityIndex>, n: u32) -> Result<Complex64> {
    let eta = eta.into();
    if n as i64 % 2 != eta.reduced() as i64 {
        return Err(SpecialError::NotAPole {
            n,
            eta_reduced: eta.reduced(),
        });
    }
    let mut r = Complex64::new(2.0, 0.0);
    for k in 1..=n {
        r *= Complex64::new(0.0, 2.0 * PI) / k as f64;
    }
    Ok(r)
}

/// Residue of `1 / R_eta` at the integer `n` (zero off the parity
/// `n = eta + 1 mod 2`, where `R_eta` does not vanish).
pub fn residue_inv_r(eta: impl Into<ParityIndex>, n: i64) -> Complex64 {
    let eta = eta.into();
    if n.rem_euclid(2) == eta.reduced() as i64 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(0.0, 2.0 / PI) * neg_one_pow(eta.eta()) * i_pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel_err;

    const ONE: Complex64 = Complex64::new(1.0, 0.0);

    fn sample_s() -> Vec<Complex64> {
        vec![
            Complex64::new(0.31, 0.77),
            Complex64::new(0.66, -2.4),
            Complex64::new(0.12, 17.0),
            Complex64::new(0.9, -29.0),
        ]
    }

    #[test]
    fn g0_at_half_is_one() {
        assert!(rel_err(g_eta(0, Complex64::new(0.5, 0.0)).unwrap(), ONE) < 1e-14);
    }

    #[test]
    fn g1_at_one() {
        // pi^(-1/2) i Gamma(1) / Gamma(1/2) = i / pi
        let v = g_eta(1, Complex64::new(1.0, 0.0)).unwrap();
        assert!(rel_err(v, Complex64::new(0.0, 1.0 / PI)) < 1e-13);
    }

    #[test]
    fn r_values() {
        assert!(rel_err(r_eta(0, Complex64::new(0.0, 0.0)), ONE) < 1e-15);
        assert!(rel_err(r_eta(1, Complex64::new(1.0, 0.0)), Complex64::new(0.0, 1.0)) < 1e-15);
        assert!(r_eta(0, Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn g_to_r_gamma_and_reflection() {
        for eta in 0..2i64 {
            for s in sample_s() {
                let g = g_eta(eta, s).unwrap();
                let viar = 2.0
                    * Complex64::new(2.0 * PI, 0.0).powc(-s)
                    * r_eta(eta, s)
                    * gamma(s).unwrap();
                assert!(rel_err(g, viar) < 1e-12);
                let refl = g * g_eta(eta, 1.0 - s).unwrap();
                assert!(rel_err(refl, Complex64::new(neg_one_pow(eta), 0.0)) < 1e-12);
            }
        }
    }

    #[test]
    fn r_shift_and_reflection() {
        for eta in -1..3i64 {
            for s in sample_s() {
                for n in -3..=3i64 {
                    let lhs = r_eta(eta, s + n as f64);
                    let rhs = i_pow(n) * r_eta(eta + n, s);
                    assert!(rel_err(lhs, rhs) < 1e-12);
                }
                let lhs = r_eta(eta, s);
                let rhs = neg_one_pow(eta) * r_eta(eta, -s);
                assert!(rel_err(lhs, rhs) < 1e-12);
                let prod = r_eta(eta, s) * r_eta(eta, 1.0 - s);
                let sine = 0.5 * neg_one_pow(eta) * (PI * s).sin();
                assert!(rel_err(prod, sine) < 1e-12);
            }
        }
    }

    #[test]
    fn g_vec_is_product_and_shift_invariant() {
        let t = [Complex64::new(0.0, 0.1), Complex64::new(0.0, -0.1)];
        let eta = [0i64, 1];
        let s = Complex64::new(0.2, 0.0);
        let v = g_vec(0, s, &t, &eta).unwrap();
        let direct = g_eta(0, s + t[0]).unwrap() * g_eta(1, s + t[1]).unwrap();
        assert!(rel_err(v, direct) < 1e-13);
        // G_ell(s, t, eta) = G_ell(s+u, t-u, eta)
        let u = Complex64::new(0.37, -0.21);
        let shifted: Vec<_> = t.iter().map(|tj| tj - u).collect();
        let w = g_vec(0, s + u, &shifted, &eta).unwrap();
        assert!(rel_err(v, w) < 1e-12);
    }

    #[test]
    fn g_pole_and_parity() {
        assert!(g_eta(0, Complex64::new(0.0, 0.0)).is_err());
        assert!(g_eta(0, Complex64::new(-2.0, 0.0)).is_err());
        // Wrong parity: regular point.
        assert!(g_eta(0, Complex64::new(-1.0, 0.0)).is_ok());
        assert!(g_eta(1, Complex64::new(-1.0, 0.0)).is_err());
    }

    #[test]
    fn residues_match_circle_quadrature() {
        // (1/2 pi i) closed-circle integral around s = -n, trapezoid rule.
        for (eta, n) in [(0i64, 0u32), (1, 1), (0, 2), (1, 3), (0, 4)] {
            let center = Complex64::new(-(n as f64), 0.0);
            let r = 0.3;
            let m = 400;
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..m {
                let th = 2.0 * PI * k as f64 / m as f64;
                let z = center + r * Complex64::new(th.cos(), th.sin());
                let dz = r * Complex64::new(-th.sin(), th.cos()) * (2.0 * PI / m as f64);
                acc += g_eta(eta, z).unwrap() * dz;
            }
            acc /= Complex64::new(0.0, 2.0 * PI);
            let expect = residue_g(eta, n).unwrap();
            assert!(rel_err(acc, expect) < 1e-8, "residue at -{n}: {acc} vs {expect}");
        }
        assert!(residue_g(0, 1).is_err());
        let r0 = residue_g(0, 0).unwrap();
        assert!(rel_err(r0, Complex64::new(2.0, 0.0)) < 1e-15);
        let r1 = residue_g(1, 1).unwrap();
        assert!(rel_err(r1, Complex64::new(0.0, 4.0 * PI)) < 1e-15);
    }

    #[test]
    fn inv_r_residue_matches_quadrature() {
        for (eta, n) in [(0i64, 1i64), (0, -1), (1, 0), (1, 2), (0, 3)] {
            let center = Complex64::new(n as f64, 0.0);
            let r = 0.25;
            let m = 400;
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..m {
                let th = 2.0 * PI * k as f64 / m as f64;
                let z = center + r * Complex64::new(th.cos(), th.sin());
                let dz = r * Complex64::new(-th.sin(), th.cos()) * (2.0 * PI / m as f64);
                acc += dz / r_eta(eta, z);
            }
            acc /= Complex64::new(0.0, 2.0 * PI);
            let expect = residue_inv_r(eta, n);
            assert!((acc - expect).norm() < 1e-8, "1/R residue at {n}");
        }
    }

    #[test]
    fn g_ln_consistent_with_g() {
        for eta in 0..2i64 {
            for s in sample_s() {
                let a = g_eta_ln(eta, s).exp();
                let b = g_eta(eta, s).unwrap();
                assert!(rel_err(a, b) < 1e-11);
            }
        }
    }
}
