//! Series assembly: coefficient lattices and evaluation of `J_w(y, mu, delta)`.

use super::coeffs::{series_coefficient, Form};
use super::{FrobeniusError, Result};
use crate::weyl::{sign_character, SpectralParams, WeylElement, YPoint};
use num_complex::Complex64;

/// Leading exponents `alpha_i(mu)` attached to the free coordinates of `w`,
/// listed in coordinate order:
///
/// ```text
/// w_31:   (3/2 - mu4)                       on y3
/// w_22:   (2 + mu1 + mu2)                   on y2
/// w_121:  (3/2 + mu1, 3/2 - mu4)            on (y1, y3)
/// w_211:  (2 + mu1 + mu2, 3/2 - mu4)        on (y2, y3)
/// w_1111: (3/2 + mu1, 2 + mu1 + mu2, 3/2 - mu4)
/// ```
pub fn leading_exponents(w: &WeylElement, mu: &[Complex64; 4]) -> Result<Vec<Complex64>> {
    let one = Complex64::new(1.0, 0.0);
    Ok(match w.name().as_str() {
        "4" => vec![],
        "31" => vec![1.5 * one - mu[3]],
        "22" => vec![2.0 * one + mu[0] + mu[1]],
        "121" => vec![1.5 * one + mu[0], 1.5 * one - mu[3]],
        "211" => vec![2.0 * one + mu[0] + mu[1], 1.5 * one - mu[3]],
        "1111" => vec![
            1.5 * one + mu[0],
            2.0 * one + mu[0] + mu[1],
            1.5 * one - mu[3],
        ],
        name => return Err(FrobeniusError::UnsupportedElement(name.to_string())),
    })
}

/// Dense coefficient lattice over `[0, order]^d` for the free coordinates.
#[derive(Debug, Clone)]
pub struct CoeffLattice {
    pub dims: Vec<usize>,
    pub data: Vec<Complex64>,
}

impl CoeffLattice {
    pub fn zeros(dims: &[usize]) -> Self {
        CoeffLattice {
            dims: dims.to_vec(),
            data: vec![Complex64::new(0.0, 0.0); dims.iter().product()],
        }
    }

    fn offset(&self, idx: &[i64]) -> Option<usize> {
        let mut off = 0usize;
        for (k, &i) in idx.iter().enumerate() {
            if i < 0 || i as usize >= self.dims[k] {
                return None;
            }
            off = off * self.dims[k] + i as usize;
        }
        Some(off)
    }

    pub fn get(&self, idx: &[i64]) -> Complex64 {
        match self.offset(idx) {
            Some(o) => self.data[o],
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn set(&mut self, idx: &[i64], v: Complex64) {
        let o = self.offset(idx).expect("index inside lattice");
        self.data[o] = v;
    }

    pub fn iter_indices(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let dims = self.dims.clone();
        let total: usize = dims.iter().product();
        (0..total).map(move |mut flat| {
            let mut idx = vec![0i64; dims.len()];
            for k in (0..dims.len()).rev() {
                idx[k] = (flat % dims[k]) as i64;
                flat /= dims[k];
            }
            idx
        })
    }
}

/// Populate the lattice of `Form::Default` coefficients of `w` up to `order`
/// in every coordinate.
pub fn coefficient_lattice(
    w: &WeylElement,
    mu: &[Complex64; 4],
    order: usize,
) -> Result<CoeffLattice> {
    let d = w.free_coords().len();
    let dims = vec![order + 1; d.max(1)];
    let mut lat = CoeffLattice::zeros(&dims);
    if d == 0 {
        lat.set(&[0], Complex64::new(1.0, 0.0));
        return Ok(lat);
    }
    let indices: Vec<Vec<i64>> = lat.iter_indices().collect();
    for idx in indices {
        let v = series_coefficient(w, mu, &idx, Form::Default)?;
        lat.set(&idx, v);
    }
    Ok(lat)
}

/// Value of a truncated series together with its last-shell magnitude.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: Complex64,
    /// Magnitude of the outermost truncation shell, as an error proxy.
    pub last_shell: f64,
    /// False when the last shell exceeds `1e-12 x |value|`.
    pub converged: bool,
}

/// Evaluate `J_w(y, mu, delta)` by truncated series over `[0, order]^d`.
///
/// The sign vector enters through the character `I_(0,delta)` restricted to
/// its sign part (the magnitude profile is carried by the leading powers).
pub fn j_series(
    w: &WeylElement,
    y: &YPoint,
    params: &SpectralParams,
    order: usize,
) -> Result<SeriesValue> {
    if w.is_identity() {
        return Ok(SeriesValue {
            value: Complex64::new(1.0, 0.0),
            last_shell: 0.0,
            converged: true,
        });
    }
    let alpha = leading_exponents(w, &params.mu)?;
    let free = w.free_coords();
    let yv: Vec<f64> = free.iter().map(|&i| y.coords()[i]).collect();
    let lat = coefficient_lattice(w, &params.mu, order)?;
    let mut head = Complex64::new(1.0, 0.0);
    for (a, &yi) in alpha.iter().zip(&yv) {
        head *= (a * yi.abs().ln()).exp();
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last_shell = 0.0f64;
    for idx in lat.iter_indices() {
        let mut mono = Complex64::new(1.0, 0.0);
        for (k, &mi) in idx.iter().enumerate() {
            mono *= yv[k].powi(mi as i32);
        }
        let term = lat.get(&idx) * mono;
        sum += term;
        let shell = idx.iter().copied().max().unwrap_or(0);
        if shell as usize == lat.dims[0] - 1 {
            last_shell = last_shell.max(term.norm());
        }
    }
    let value = sign_character(&params.delta, y) * head * sum;
    let scale = value.norm();
    Ok(SeriesValue {
        value,
        last_shell: last_shell * head.norm(),
        converged: last_shell * head.norm() <= 1e-12 * scale.max(1e-300),
    })
}

/// Coefficient-lattice dump: CSV lines `m1,..,md,re,im`.
pub fn coefficient_csv(w: &WeylElement, mu: &[Complex64; 4], order: usize) -> Result<String> {
    let lat = coefficient_lattice(w, mu, order)?;
    let d = lat.dims.len();
    let mut out = String::new();
    for k in 0..d {
        out.push_str(&format!("m{},", k + 1));
    }
    out.push_str("re,im\n");
    for idx in lat.iter_indices() {
        let v = lat.get(&idx);
        for i in &idx {
            out.push_str(&format!("{i},"));
        }
        out.push_str(&format!("{:.17e},{:.17e}\n", v.re, v.im));
    }
    Ok(out)
}
