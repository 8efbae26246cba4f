//! Series evaluation of pFq in the three normalizations.

use super::{as_nonpos_int, HypError, Result, TERMINATION_TOL};
use crate::special::{gamma, pochhammer};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypMode {
    /// Pochhammer quotients in the denominator.
    Plain,
    /// Denominators as `1 / Gamma(b_j + n)` (zero at poles).
    Star,
    /// Star times `prod Gamma(a_i)`, terminating factors replaced by their
    /// Pochhammer products.
    Dagger,
}

/// Parameters of a generalized hypergeometric series.
#[derive(Debug, Clone)]
pub struct HypSpec {
    pub numerator: Vec<Complex64>,
    pub denominator: Vec<Complex64>,
    pub argument: Complex64,
    pub mode: HypMode,
}

impl HypSpec {
    pub fn new(
        numerator: &[Complex64],
        denominator: &[Complex64],
        argument: Complex64,
        mode: HypMode,
    ) -> Self {
        HypSpec {
            numerator: numerator.to_vec(),
            denominator: denominator.to_vec(),
            argument,
            mode,
        }
    }

    pub fn plain(numerator: &[Complex64], denominator: &[Complex64], z: Complex64) -> Self {
        Self::new(numerator, denominator, z, HypMode::Plain)
    }

    pub fn star(numerator: &[Complex64], denominator: &[Complex64], z: Complex64) -> Self {
        Self::new(numerator, denominator, z, HypMode::Star)
    }

    pub fn dagger(numerator: &[Complex64], denominator: &[Complex64], z: Complex64) -> Self {
        Self::new(numerator, denominator, z, HypMode::Dagger)
    }

    /// Smallest `n` with some numerator parameter within tolerance of `-n`.
    pub fn termination_index(&self) -> Option<u32> {
        self.numerator.iter().filter_map(|&a| as_nonpos_int(a)).min()
    }

    /// Saalschuetzian (balanced) at unit argument:
    /// `1 + sum a = sum b` and `z = 1`.
    pub fn is_saalschuetzian(&self) -> bool {
        if (self.argument - Complex64::new(1.0, 0.0)).norm() > TERMINATION_TOL {
            return false;
        }
        let sa: Complex64 = self.numerator.iter().sum();
        let sb: Complex64 = self.denominator.iter().sum();
        (sa + 1.0 - sb).norm() < 1e-9
    }

    /// `Re(sum b - sum a)`, the convergence margin at `z = 1`.
    pub fn margin(&self) -> f64 {
        let sa: Complex64 = self.numerator.iter().sum();
        let sb: Complex64 = self.denominator.iter().sum();
        (sb - sa).re
    }
}

const MAX_TERMS: u32 = 10_000;

/// Evaluate the series.
///
/// Terminating series are summed exactly. Otherwise the series must either
/// satisfy `|z| < 1` (with `p <= q + 1`) or converge at `z = 1`
/// (`p <= q + 1` and positive margin); slowly convergent sums get an
/// asymptotic tail correction refined by one Richardson step.
pub fn pfq(spec: &HypSpec) -> Result<Complex64> {
    let completion = match spec.mode {
        HypMode::Dagger => {
            let mut c = Complex64::new(1.0, 0.0);
            for &a in &spec.numerator {
                if as_nonpos_int(a).is_none() {
                    c *= gamma(a).map_err(|_| HypError::Pole { param: a, term: 0 })?;
                }
            }
            c
        }
        _ => Complex64::new(1.0, 0.0),
    };

    if let Some(n_max) = spec.termination_index() {
        return Ok(completion * sum_terminating(spec, n_max)?);
    }

    let p = spec.numerator.len();
    let q = spec.denominator.len();
    let at_one = (spec.argument - Complex64::new(1.0, 0.0)).norm() < 1e-14;
    let inside = spec.argument.norm() < 1.0 - 1e-12;
    if p > q + 1 || !(inside || (at_one && spec.margin() > 0.25)) {
        return Err(HypError::Divergence {
            p,
            q,
            margin: spec.margin(),
        });
    }
    Ok(completion * sum_convergent(spec)?)
}

fn term_ratio(spec: &HypSpec, n: u32) -> Complex64 {
    // t_(n+1) / t_n; denominator poles are pre-checked by the callers.
    let nf = n as f64;
    let mut r = spec.argument / (nf + 1.0);
    for &a in &spec.numerator {
        r *= a + nf;
    }
    for &b in &spec.denominator {
        r /= b + nf;
    }
    r
}

fn denominator_gamma_start(spec: &HypSpec) -> Result<(Complex64, u32)> {
    // First index n0 at which no 1/Gamma(b_j + n) vanishes, and the value of
    // prod_j 1/Gamma(b_j + n0).
    let mut n0 = 0u32;
    for &b in &spec.denominator {
        if let Some(p) = as_nonpos_int(b) {
            n0 = n0.max(p + 1);
        }
    }
    let mut inv = Complex64::new(1.0, 0.0);
    for &b in &spec.denominator {
        let g = gamma(b + n0 as f64).map_err(|_| HypError::Pole {
            param: b,
            term: n0,
        })?;
        inv /= g;
    }
    Ok((inv, n0))
}

fn sum_terminating(spec: &HypSpec, n_max: u32) -> Result<Complex64> {
    match spec.mode {
        HypMode::Plain => {
            // Any denominator pole at or before the last surviving term is real.
            for &b in &spec.denominator {
                if let Some(p) = as_nonpos_int(b) {
                    if p < n_max {
                        return Err(HypError::Pole { param: b, term: p + 1 });
                    }
                }
            }
            let mut sum = Complex64::new(0.0, 0.0);
            let mut term = Complex64::new(1.0, 0.0);
            for n in 0..=n_max {
                sum += term;
                if n < n_max {
                    term *= term_ratio(spec, n);
                }
            }
            Ok(sum)
        }
        HypMode::Star | HypMode::Dagger => {
            // Term-wise with 1/Gamma zeros: the sum effectively starts at n0,
            // but Pochhammer zeros can kill everything first.
            let (invg, n0) = denominator_gamma_start(spec)?;
            if n0 > n_max {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let mut numer = Complex64::new(1.0, 0.0);
            for &a in &spec.numerator {
                numer *= pochhammer(a, n0);
            }
            let mut fact = Complex64::new(1.0, 0.0);
            for k in 1..=n0 {
                fact *= k as f64;
            }
            let mut term = spec.argument.powu(n0) * numer * invg / fact;
            let mut sum = Complex64::new(0.0, 0.0);
            for n in n0..=n_max {
                sum += term;
                if n < n_max {
                    term *= term_ratio(spec, n);
                }
            }
            Ok(sum)
        }
    }
}

fn sum_convergent(spec: &HypSpec) -> Result<Complex64> {
    // No termination: in star mode skip the leading zero terms the same way.
    let (start_inv, n0) = match spec.mode {
        HypMode::Plain => (Complex64::new(1.0, 0.0), 0u32),
        _ => denominator_gamma_start(spec)?,
    };
    let mut term = match spec.mode {
        HypMode::Plain => Complex64::new(1.0, 0.0),
        _ => {
            let mut numer = Complex64::new(1.0, 0.0);
            for &a in &spec.numerator {
                numer *= pochhammer(a, n0);
            }
            let mut fact = Complex64::new(1.0, 0.0);
            for k in 1..=n0 {
                fact *= k as f64;
            }
            spec.argument.powu(n0) * numer * start_inv / fact
        }
    };
    let sigma = {
        let sa: Complex64 = spec.numerator.iter().sum();
        let sb: Complex64 = spec.denominator.iter().sum();
        sb - sa
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut half_sum = Complex64::new(0.0, 0.0);
    let half_at = MAX_TERMS / 2;
    let mut half_term = Complex64::new(0.0, 0.0);
    let mut n = n0;
    loop {
        sum += term;
        if n == half_at {
            half_sum = sum;
            half_term = term;
        }
        let scale = sum.norm().max(1e-300);
        if term.norm() < 1e-17 * scale && n > n0 + 20 {
            return Ok(sum);
        }
        if n >= MAX_TERMS {
            break;
        }
        term *= term_ratio(spec, n);
        n += 1;
    }
    // Polynomially convergent at z = 1: terms behave like C n^(-1-sigma).
    // Correct with the asymptotic tail T(N) ~ t_N N / sigma and remove the
    // O(1/N) defect with one Richardson step from the half-length sum.
    if sigma.re <= 0.25 {
        return Err(HypError::SlowConvergence {
            bound: term.norm(),
            terms: n,
        });
    }
    let tail = |t: Complex64, nn: u32| t * nn as f64 / sigma;
    let full = sum + tail(term, MAX_TERMS);
    let half = half_sum + tail(half_term, half_at);
    // Errors scale like 1/N: extrapolate full + (full - half).
    Ok(full + (full - half))
}
