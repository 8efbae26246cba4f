//! Recurrence relations of the series coefficients, used as oracles.
//!
//! Each family is stated for the coefficients in the rescaled variables the
//! operators separate in (the power prefactors stripped off), so the residual
//! checks instantiate closed forms on both sides of exact three-to-five term
//! identities.

use super::coeffs::{star_coefficient, Form};
use super::{FrobeniusError, Result};
use crate::special::{gamma, neg_one_pow, pochhammer};
use crate::weyl::WeylElement;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceFamily {
    /// One-step recurrence of the (3,1) coefficients.
    W31,
    /// One-step recurrence of the (2,2) coefficients.
    W22,
    /// First (mixed-shift) recurrence of the (1,2,1) pair.
    W121First,
    /// Second (single-variable) recurrence of the (1,2,1) pair.
    W121Second,
    /// First recurrence of the (2,1,1) starred coefficients.
    W211First,
    /// Second recurrence of the (2,1,1) starred coefficients.
    W211Second,
    /// Three-neighbor recurrence of the long-element coefficients.
    Wl,
}

impl RecurrenceFamily {
    pub const ALL: [RecurrenceFamily; 7] = [
        RecurrenceFamily::W31,
        RecurrenceFamily::W22,
        RecurrenceFamily::W121First,
        RecurrenceFamily::W121Second,
        RecurrenceFamily::W211First,
        RecurrenceFamily::W211Second,
        RecurrenceFamily::Wl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RecurrenceFamily::W31 => "w31",
            RecurrenceFamily::W22 => "w22",
            RecurrenceFamily::W121First => "w121-mixed",
            RecurrenceFamily::W121Second => "w121-single",
            RecurrenceFamily::W211First => "w211-first",
            RecurrenceFamily::W211Second => "w211-second",
            RecurrenceFamily::Wl => "wl",
        }
    }

    /// Lattice dimension of the index argument.
    pub fn index_dim(self) -> usize {
        match self {
            RecurrenceFamily::W31 | RecurrenceFamily::W22 => 1,
            RecurrenceFamily::Wl => 3,
            _ => 2,
        }
    }
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn fact(m: u32) -> f64 {
    (1..=m).map(|k| k as f64).product()
}

fn g(z: Complex64) -> Result<Complex64> {
    gamma(z).map_err(|_| FrobeniusError::DegenerateParameters)
}

/// Rescaled (3,1) coefficient: the series coefficient with the power
/// prefactor `(-16 pi^4)^m` removed.
fn t31(mu: &[Complex64; 4], m: i64) -> Result<Complex64> {
    if m < 0 {
        return Ok(c(0.0));
    }
    let m = m as u32;
    let mut den = c(fact(m));
    for j in 0..3 {
        den *= g(ONE + mu[j] - mu[3] + m as f64)?;
    }
    Ok(neg_one_pow(m as i64) / den)
}

fn t22(mu: &[Complex64; 4], m: i64) -> Result<Complex64> {
    if m < 0 {
        return Ok(c(0.0));
    }
    let m = m as u32;
    let sigma = mu[0] + mu[1];
    let num = pochhammer(ONE + 2.0 * sigma + m as f64, m);
    let mut den = c(fact(m));
    for (j, k) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        den *= g(ONE + mu[j] - mu[k] + m as f64)?;
    }
    Ok(num / den)
}

fn t121(mu: &[Complex64; 4], m1: i64, m2: i64) -> Result<Complex64> {
    if m1 < 0 || m2 < 0 {
        return Ok(c(0.0));
    }
    let (m1, m2) = (m1 as u32, m2 as u32);
    let num = g(ONE + mu[0] - mu[3] + (m1 + m2) as f64)?;
    let mut den = c(fact(m1) * fact(m2));
    den *= g(ONE + mu[0] - mu[1] + m1 as f64)?;
    den *= g(ONE + mu[0] - mu[2] + m1 as f64)?;
    den *= g(ONE + mu[0] - mu[3] + m1 as f64)?;
    den *= g(ONE + mu[0] - mu[3] + m2 as f64)?;
    den *= g(ONE + mu[1] - mu[3] + m2 as f64)?;
    den *= g(ONE + mu[2] - mu[3] + m2 as f64)?;
    Ok(neg_one_pow(m2 as i64) * num / den)
}

fn star(form: Form, mu: &[Complex64; 4], m: &[i64]) -> Result<Complex64> {
    let w = if m.len() == 2 {
        WeylElement::parse("211").unwrap()
    } else {
        WeylElement::parse("1111").unwrap()
    };
    star_coefficient(&w, mu, m, form)
}

fn residual_pair(lhs: Complex64, rhs: Complex64) -> f64 {
    let scale = lhs.norm().max(rhs.norm());
    if scale == 0.0 {
        0.0
    } else {
        (lhs - rhs).norm() / scale
    }
}

/// Instantiate the family's recurrence at lattice point `m` with the closed
/// forms substituted; returns `|LHS - RHS| / max-term`.
pub fn recurrence_residual(
    family: RecurrenceFamily,
    mu: &[Complex64; 4],
    m: &[i64],
) -> Result<f64> {
    assert_eq!(m.len(), family.index_dim(), "index dimension mismatch");
    match family {
        RecurrenceFamily::W31 => {
            let mm = m[0];
            let mf = mm as f64;
            let lhs = t31(mu, mm - 1)?;
            let rhs = -c(mf)
                * (mu[0] - mu[3] + mf)
                * (mu[1] - mu[3] + mf)
                * (mu[2] - mu[3] + mf)
                * t31(mu, mm)?;
            Ok(residual_pair(lhs, rhs))
        }
        RecurrenceFamily::W22 => {
            let mm = m[0];
            let mf = mm as f64;
            let s = mu[0] + mu[1];
            let lhs = 2.0 * (s + mf) * (2.0 * s + 2.0 * mf - 1.0) * t22(mu, mm - 1)?;
            let rhs = c(mf)
                * (2.0 * s + mf)
                * (mu[0] - mu[2] + mf)
                * (mu[0] - mu[3] + mf)
                * (mu[1] - mu[2] + mf)
                * (mu[1] - mu[3] + mf)
                * t22(mu, mm)?;
            Ok(residual_pair(lhs, rhs))
        }
        RecurrenceFamily::W121First => {
            let (m1, m2) = (m[0], m[1]);
            let (f1, f2) = (m1 as f64, m2 as f64);
            let lhs = t121(mu, m1, m2 - 1)? + t121(mu, m1 - 1, m2)?;
            let bracket = c(f1) * (mu[0] - mu[1] + f1) * (mu[0] - mu[2] + f1)
                - c(f2) * (mu[1] - mu[3] + f2) * (mu[2] - mu[3] + f2)
                + c(f1 * f2) * (2.0 * mu[1] + 2.0 * mu[2] - f1 + f2);
            Ok(residual_pair(lhs, bracket * t121(mu, m1, m2)?))
        }
        RecurrenceFamily::W121Second => {
            let (m1, m2) = (m[0], m[1]);
            let f1 = m1 as f64;
            let lhs = (mu[0] - mu[3] + (m1 + m2) as f64) * t121(mu, m1 - 1, m2)?;
            let rhs = c(f1)
                * (mu[0] - mu[1] + f1)
                * (mu[0] - mu[2] + f1)
                * (mu[0] - mu[3] + f1)
                * t121(mu, m1, m2)?;
            Ok(residual_pair(lhs, rhs))
        }
        RecurrenceFamily::W211First => {
            let (m1, m2) = (m[0], m[1]);
            let (f1, f2) = (m1 as f64, m2 as f64);
            let lhs = star(Form::A, mu, &[m1 - 1, m2])?
                - 2.0 * (mu[0] + mu[1] + f1) * star(Form::A, mu, &[m1, m2 - 1])?;
            let bracket = -c(f1) * (mu[0] - mu[2] + f1) * (mu[1] - mu[2] + f1)
                - 2.0 * f2 * (mu[0] + mu[1] + f1) * (mu[2] - mu[3] + f2 - f1);
            Ok(residual_pair(lhs, bracket * star(Form::A, mu, &[m1, m2])?))
        }
        RecurrenceFamily::W211Second => {
            let (m1, m2) = (m[0], m[1]);
            let (f1, f2) = (m1 as f64, m2 as f64);
            let lhs = c(f2)
                * (mu[0] - mu[3] + f2)
                * (mu[1] - mu[3] + f2)
                * (mu[2] - mu[3] + f2)
                * star(Form::A, mu, &[m1, m2])?
                + star(Form::A, mu, &[m1, m2 - 2])?;
            let bracket = 2.0 * mu[0] * mu[0]
                + mu[0]
                + mu[1] * (5.0 * mu[0] + 2.0 * mu[1] + 1.0)
                + mu[2] * (-2.0 * mu[2] - 3.0 * mu[3] + 2.0)
                + c(f1 + 1.0) * (2.0 * mu[0] + 2.0 * mu[1] + f1)
                + c(2.0 * (f2 - 1.0)) * (f2 - 2.0 * mu[3])
                + ONE;
            Ok(residual_pair(lhs, bracket * star(Form::A, mu, &[m1, m2 - 1])?))
        }
        RecurrenceFamily::Wl => {
            let (m1, m2, m3) = (m[0], m[1], m[2]);
            let d = wl_denominator(mu, m1, m2, m3);
            let lhs = d * star(Form::A, mu, &[m1, m2, m3])?;
            let rhs = star(Form::A, mu, &[m1 - 1, m2, m3])?
                + star(Form::A, mu, &[m1, m2 - 1, m3])?
                + star(Form::A, mu, &[m1, m2, m3 - 1])?;
            Ok(residual_pair(lhs, rhs))
        }
    }
}

fn wl_denominator(mu: &[Complex64; 4], m1: i64, m2: i64, m3: i64) -> Complex64 {
    let (f1, f2, f3) = (m1 as f64, m2 as f64, m3 as f64);
    c(f1 * f1 + f2 * f2 + f3 * f3 - f1 * f2 - f2 * f3)
        + f1 * (mu[0] - mu[1])
        + f2 * (mu[1] - mu[2])
        + f3 * (mu[2] - mu[3])
}

/// `R_(n,k)(mu) = (1/2) sum_j ((k_j - k_(j-1))^2 + 2 k_j (mu_j - mu_(j+1)))`
/// with `k_j = 0` outside `1..n-1`; the general-rank recurrence denominator.
pub fn r_nk(n: usize, k: &[i64], mu: &[Complex64]) -> Complex64 {
    assert_eq!(k.len(), n - 1);
    assert_eq!(mu.len(), n);
    let kj = |j: i64| -> f64 {
        if j >= 1 && (j as usize) <= n - 1 {
            k[(j - 1) as usize] as f64
        } else {
            0.0
        }
    };
    let mut s = Complex64::new(0.0, 0.0);
    for j in 1..=n as i64 {
        let diff = kj(j) - kj(j - 1);
        let mu_next = if (j as usize) < n {
            mu[j as usize]
        } else {
            Complex64::new(0.0, 0.0)
        };
        s += c(diff * diff) + 2.0 * kj(j) * (mu[(j - 1) as usize] - mu_next);
    }
    s / 2.0
}

/// The pure-recurrence lattice for the long element: `G_0 = 1`,
/// `G_m = (G_(m-e1) + G_(m-e2) + G_(m-e3)) / D(m, mu)`, independent of every
/// closed form. This is the oracle the six closed forms are tested against.
pub fn oracle_wl(mu: &[Complex64; 4], order: usize) -> Result<super::CoeffLattice> {
    let dims = vec![order + 1; 3];
    let mut lat = super::CoeffLattice::zeros(&dims);
    lat.set(&[0, 0, 0], ONE);
    for total in 1..=(3 * order) as i64 {
        for m1 in 0..=(order as i64) {
            for m2 in 0..=(order as i64) {
                let m3 = total - m1 - m2;
                if !(0..=order as i64).contains(&m3) {
                    continue;
                }
                let d = wl_denominator(mu, m1, m2, m3);
                if d.norm() < 1e-9 {
                    return Err(FrobeniusError::DegenerateParameters);
                }
                let v = (lat.get(&[m1 - 1, m2, m3])
                    + lat.get(&[m1, m2 - 1, m3])
                    + lat.get(&[m1, m2, m3 - 1]))
                    / d;
                lat.set(&[m1, m2, m3], v);
            }
        }
    }
    Ok(lat)
}
