//! Closed-form series coefficients.

use super::{FrobeniusError, Result};
use crate::hyp::{pfq, HypSpec};
use crate::special::{gamma, neg_one_pow, pochhammer};
use crate::weyl::WeylElement;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Selector among the equivalent closed forms where several exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// The coefficient as it enters the series in the `y` coordinates.
    Default,
    A,
    B,
    C,
    D,
    E,
    F,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn fact(m: u32) -> f64 {
    (1..=m).map(|k| k as f64).product()
}

fn pow16pi4(e: Complex64) -> Complex64 {
    (e * (16.0 * PI.powi(4)).ln()).exp()
}

fn pow2pi(e: Complex64) -> Complex64 {
    (e * (2.0 * PI).ln()).exp()
}

/// Guard shared by every coefficient: parameters distinct mod Z.
fn check_distinct(mu: &[Complex64; 4]) -> Result<()> {
    if crate::sampling::distinct_mod_z(mu, 1e-9) {
        Ok(())
    } else {
        Err(FrobeniusError::DegenerateParameters)
    }
}

/// Series coefficient of `J_w` at lattice point `m` (zero off the lattice).
///
/// `Form::Default` is the coefficient entering the `y`-coordinate series,
/// power prefactors included. The letter forms select among the starred
/// normalized alternatives of the (2,1,1) and long elements.
pub fn series_coefficient(
    w: &WeylElement,
    mu: &[Complex64; 4],
    m: &[i64],
    form: Form,
) -> Result<Complex64> {
    if m.iter().any(|&mi| mi < 0) {
        return Ok(c(0.0, 0.0));
    }
    check_distinct(mu)?;
    let m: Vec<u32> = m.iter().map(|&mi| mi as u32).collect();
    match (w.name().as_str(), form) {
        ("31", Form::Default) => a31(mu, m[0]),
        ("22", Form::Default) => a22(mu, m[0]),
        ("121", Form::Default) => a121(mu, m[0], m[1]),
        ("211", Form::Default) => a211(mu, m[0], m[1]),
        ("211", Form::A | Form::B | Form::C) => star211(form, mu, m[0], m[1]),
        ("1111", Form::Default) => a1111(mu, m[0], m[1], m[2]),
        ("1111", _) => star1111(form, mu, m[0], m[1], m[2]),
        ("4", Form::Default) => Ok(if m.iter().all(|&x| x == 0) { ONE } else { c(0.0, 0.0) }),
        (name, Form::Default) => Err(FrobeniusError::UnsupportedElement(name.to_string())),
        (name, f) => Err(FrobeniusError::UnsupportedForm(f, name.to_string())),
    }
}

/// Starred normalized coefficient (no power prefactors, no `Lambda_w`).
pub fn star_coefficient(
    w: &WeylElement,
    mu: &[Complex64; 4],
    m: &[i64],
    form: Form,
) -> Result<Complex64> {
    if m.iter().any(|&mi| mi < 0) {
        return Ok(c(0.0, 0.0));
    }
    check_distinct(mu)?;
    let m: Vec<u32> = m.iter().map(|&mi| mi as u32).collect();
    match w.name().as_str() {
        "211" => star211(form, mu, m[0], m[1]),
        "1111" => star1111(form, mu, m[0], m[1], m[2]),
        name => Err(FrobeniusError::UnsupportedElement(name.to_string())),
    }
}

fn a31(mu: &[Complex64; 4], m: u32) -> Result<Complex64> {
    let mut den = c(fact(m), 0.0);
    for j in 0..3 {
        den *= gamma(ONE + mu[j] - mu[3] + m as f64).map_err(|_| FrobeniusError::DegenerateParameters)?;
    }
    let pref = pow16pi4(-mu[3]) * (-16.0 * PI.powi(4)).powi(m as i32);
    Ok(pref / den)
}

fn a22(mu: &[Complex64; 4], m: u32) -> Result<Complex64> {
    let sigma = mu[0] + mu[1];
    let mf = m as f64;
    // Gamma(1+2s+2m)/Gamma(1+2s+m) = <1+2s+m>_m
    let num = pochhammer(ONE + 2.0 * sigma + mf, m);
    let mut den = c(fact(m), 0.0);
    for (j, k) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        den *= gamma(ONE + mu[j] - mu[k] + mf).map_err(|_| FrobeniusError::DegenerateParameters)?;
    }
    Ok(pow16pi4(sigma + mf) * num / den)
}

fn a121(mu: &[Complex64; 4], m1: u32, m2: u32) -> Result<Complex64> {
    let g = |z: Complex64| gamma(z).map_err(|_| FrobeniusError::DegenerateParameters);
    let num = g(ONE + mu[0] - mu[3] + (m1 + m2) as f64)?;
    let mut den = c(fact(m1) * fact(m2), 0.0);
    den *= g(ONE + mu[0] - mu[1] + m1 as f64)?;
    den *= g(ONE + mu[0] - mu[2] + m1 as f64)?;
    den *= g(ONE + mu[0] - mu[3] + m1 as f64)?;
    den *= g(ONE + mu[0] - mu[3] + m2 as f64)?;
    den *= g(ONE + mu[1] - mu[3] + m2 as f64)?;
    den *= g(ONE + mu[2] - mu[3] + m2 as f64)?;
    let p3 = 8.0 * PI.powi(3);
    let pref = (Complex64::new(0.0, 1.0) * p3).powu(m1)
        * (Complex64::new(0.0, -1.0) * p3).powu(m2)
        * ((mu[0] - mu[3]) * p3.ln()).exp();
    Ok(pref * num / den)
}

fn a211(mu: &[Complex64; 4], m1: u32, m2: u32) -> Result<Complex64> {
    let g = |z: Complex64| gamma(z).map_err(|_| FrobeniusError::DegenerateParameters);
    let mut den = c(fact(m1) * fact(m2), 0.0);
    den *= g(ONE + mu[0] - mu[3] + m1 as f64)?;
    den *= g(ONE + mu[1] - mu[3] + m1 as f64)?;
    den *= g(ONE + mu[2] - mu[3] + m2 as f64)?;
    den *= g(ONE + mu[0] - mu[2])?;
    den *= g(ONE + mu[1] - mu[2])?;
    let f = pfq(&HypSpec::plain(
        &[
            c(-(m1 as f64), 0.0),
            ONE + 2.0 * (mu[0] + mu[1]) + m1 as f64,
            mu[3] - mu[2] - m2 as f64,
        ],
        &[ONE + mu[0] - mu[2], ONE + mu[1] - mu[2]],
        ONE,
    ))?;
    let pref = pow2pi(3.0 * mu[0] + 3.0 * mu[1] - 2.0 * mu[3])
        * (Complex64::new(0.0, -8.0 * PI.powi(3))).powu(m1)
        * (4.0 * PI * PI).powi(m2 as i32);
    Ok(pref * f / den)
}

fn a1111(mu: &[Complex64; 4], m1: u32, m2: u32, m3: u32) -> Result<Complex64> {
    let g = |z: Complex64| gamma(z).map_err(|_| FrobeniusError::DegenerateParameters);
    let two_s = 2.0 * (mu[0] + mu[1]);
    let mut v = pow2pi(
        3.0 * mu[0] + mu[1] - mu[2] - 3.0 * mu[3] + 2.0 * ((m1 + m2 + m3) as f64),
    );
    v /= c(fact(m1) * fact(m2) * fact(m3), 0.0);
    v /= g(ONE + mu[2] - mu[3])?;
    v /= g(ONE + mu[0] - mu[1] + m1 as f64)?;
    v /= g(ONE + mu[0] - mu[2] + m1 as f64)?;
    v *= g(ONE + two_s + (m2 + m3) as f64)?;
    v *= g(ONE + mu[0] - mu[2] + (m1 + m2) as f64)?;
    v /= g(ONE + two_s + m2 as f64)?;
    v /= g(ONE + mu[0] - mu[2] + m2 as f64)?;
    v /= g(ONE + mu[1] - mu[2] + m2 as f64)?;
    v /= g(ONE + mu[0] - mu[3] + m3 as f64)?;
    v /= g(ONE + mu[1] - mu[3] + m3 as f64)?;
    let f = pfq(&HypSpec::plain(
        &[
            -c(m1 as f64, 0.0) - mu[0] + mu[2],
            -c(m2 as f64, 0.0) - mu[1] + mu[2],
            -c(m2 as f64, 0.0) - mu[0] + mu[2],
            c(-(m3 as f64), 0.0),
        ],
        &[
            ONE + mu[2] - mu[3],
            -c((m1 + m2) as f64, 0.0) - mu[0] + mu[2],
            -c((m2 + m3) as f64, 0.0) - two_s,
        ],
        ONE,
    ))?;
    Ok(v * f)
}

fn star211(form: Form, mu: &[Complex64; 4], m1: u32, m2: u32) -> Result<Complex64> {
    let m1f = m1 as f64;
    let m2f = m2 as f64;
    let sign = neg_one_pow(m1 as i64);
    let base = sign / (fact(m1) * fact(m2));
    let (poch, num, den): (Complex64, Vec<Complex64>, Vec<Complex64>) = match form {
        Form::A => (
            pochhammer(ONE + mu[0] - mu[3], m1)
                * pochhammer(ONE + mu[1] - mu[3], m1)
                * pochhammer(ONE + mu[2] - mu[3], m2),
            vec![
                c(-m1f, 0.0),
                ONE + 2.0 * (mu[0] + mu[1]) + m1f,
                mu[3] - mu[2] - m2f,
            ],
            vec![ONE + mu[0] - mu[2], ONE + mu[1] - mu[2]],
        ),
        Form::B => (
            pochhammer(ONE + mu[0] - mu[2], m1)
                * pochhammer(ONE + mu[1] - mu[2], m1)
                * pochhammer(ONE + mu[0] - mu[3], m2),
            vec![
                mu[2] - mu[0] - m1f,
                ONE + mu[1] - mu[3] + m1f,
                c(-m2f, 0.0),
            ],
            vec![ONE + mu[1] - mu[3], ONE + mu[2] - mu[3]],
        ),
        Form::C => (
            pochhammer(ONE + mu[0] - mu[2], m1)
                * pochhammer(ONE + mu[1] - mu[2], m1)
                * pochhammer(ONE + mu[2] - mu[3], m2),
            vec![
                c(-m1f, 0.0),
                ONE + 2.0 * (mu[0] + mu[1]) + m1f,
                c(-m2f, 0.0),
            ],
            vec![ONE + mu[0] - mu[3], ONE + mu[1] - mu[3]],
        ),
        _ => {
            return Err(FrobeniusError::UnsupportedForm(form, "211".into()));
        }
    };
    let f = pfq(&HypSpec::plain(&num, &den, ONE))?;
    Ok(base * f / poch)
}

fn star1111(form: Form, mu: &[Complex64; 4], m1: u32, m2: u32, m3: u32) -> Result<Complex64> {
    let (m1f, m2f, m3f) = (m1 as f64, m2 as f64, m3 as f64);
    let two_s = 2.0 * (mu[0] + mu[1]);
    let d = |j: usize, k: usize| ONE + mu[j] - mu[k];
    let p = pochhammer;
    // numerator pochhammers, denominator pochhammers, 4F3 parameters
    let (num_poch, den_poch, fnum, fden): (Complex64, Complex64, Vec<Complex64>, Vec<Complex64>) =
        match form {
            Form::A => (
                p(ONE + two_s, m2 + m3) * p(d(0, 2), m1 + m2),
                p(d(0, 1), m1)
                    * p(ONE + two_s, m2)
                    * p(d(0, 2), m1)
                    * p(d(0, 2), m2)
                    * p(d(1, 2), m2)
                    * p(d(0, 3), m3)
                    * p(d(1, 3), m3),
                vec![
                    -c(m1f, 0.0) - mu[0] + mu[2],
                    -c(m2f, 0.0) - mu[1] + mu[2],
                    -c(m2f, 0.0) - mu[0] + mu[2],
                    c(-m3f, 0.0),
                ],
                vec![
                    d(2, 3),
                    -c(m1f + m2f, 0.0) - mu[0] + mu[2],
                    -c(m2f + m3f, 0.0) - two_s,
                ],
            ),
            Form::B => (
                p(d(0, 3), m2 + m3) * p(d(0, 2), m1 + m2),
                p(d(0, 1), m1)
                    * p(d(0, 2), m1)
                    * p(d(0, 2), m2)
                    * p(d(1, 2), m2)
                    * p(d(0, 3), m2)
                    * p(d(0, 3), m3)
                    * p(d(2, 3), m3),
                vec![
                    -c(m1f, 0.0) - mu[0] + mu[1],
                    c(-m2f, 0.0),
                    -c(m2f, 0.0) - mu[0] + mu[2],
                    c(-m3f, 0.0),
                ],
                vec![
                    d(1, 3),
                    -c(m1f + m2f, 0.0) - mu[0] + mu[2],
                    -c(m2f + m3f, 0.0) - mu[0] + mu[3],
                ],
            ),
            Form::C => (
                p(d(0, 3), m2 + m3) * p(d(0, 3), m1 + m2),
                p(d(0, 1), m1)
                    * p(d(0, 2), m2)
                    * p(d(0, 3), m1)
                    * p(d(0, 3), m2)
                    * p(d(0, 3), m3)
                    * p(d(1, 3), m2)
                    * p(d(2, 3), m3),
                vec![
                    -c(m1f, 0.0) - mu[0] + mu[1],
                    c(-m2f, 0.0),
                    -c(m2f, 0.0) - mu[0] + mu[3],
                    -c(m3f, 0.0) - mu[2] + mu[3],
                ],
                vec![
                    d(1, 2),
                    -c(m1f + m2f, 0.0) - mu[0] + mu[3],
                    -c(m2f + m3f, 0.0) - mu[0] + mu[3],
                ],
            ),
            Form::D => (
                p(d(1, 3), m2 + m3) * p(d(0, 2), m1 + m2),
                p(d(0, 1), m1)
                    * p(d(0, 2), m1)
                    * p(d(0, 2), m2)
                    * p(d(1, 2), m2)
                    * p(d(1, 3), m2)
                    * p(d(1, 3), m3)
                    * p(d(2, 3), m3),
                vec![
                    c(-m1f, 0.0),
                    c(-m2f, 0.0),
                    -c(m2f, 0.0) - mu[1] + mu[2],
                    c(-m3f, 0.0),
                ],
                vec![
                    d(0, 3),
                    -c(m1f + m2f, 0.0) - mu[0] + mu[2],
                    -c(m2f + m3f, 0.0) - mu[1] + mu[3],
                ],
            ),
            Form::E => (
                p(d(1, 3), m2 + m3) * p(d(0, 3), m1 + m2),
                p(d(0, 1), m1)
                    * p(d(1, 2), m2)
                    * p(d(0, 3), m1)
                    * p(d(0, 3), m2)
                    * p(d(1, 3), m2)
                    * p(d(1, 3), m3)
                    * p(d(2, 3), m3),
                vec![
                    c(-m1f, 0.0),
                    c(-m2f, 0.0),
                    -c(m2f, 0.0) - mu[1] + mu[3],
                    -c(m3f, 0.0) - mu[2] + mu[3],
                ],
                vec![
                    d(0, 2),
                    -c(m1f + m2f, 0.0) - mu[0] + mu[3],
                    -c(m2f + m3f, 0.0) - mu[1] + mu[3],
                ],
            ),
            Form::F => (
                p(d(1, 3), m2 + m3) * p(ONE + two_s, m1 + m2),
                p(ONE + two_s, m2)
                    * p(d(0, 2), m1)
                    * p(d(1, 2), m2)
                    * p(d(0, 3), m1)
                    * p(d(1, 3), m2)
                    * p(d(1, 3), m3)
                    * p(d(2, 3), m3),
                vec![
                    c(-m1f, 0.0),
                    -c(m2f, 0.0) - mu[1] + mu[2],
                    -c(m2f, 0.0) - mu[1] + mu[3],
                    -c(m3f, 0.0) - mu[1] + mu[3],
                ],
                vec![
                    d(0, 1),
                    -c(m1f + m2f, 0.0) - two_s,
                    -c(m2f + m3f, 0.0) - mu[1] + mu[3],
                ],
            ),
            Form::Default => {
                return Err(FrobeniusError::UnsupportedForm(form, "1111".into()));
            }
        };
    let f = pfq(&HypSpec::plain(&fnum, &fden, ONE))?;
    Ok(num_poch * f / (c(fact(m1) * fact(m2) * fact(m3), 0.0) * den_poch))
}
