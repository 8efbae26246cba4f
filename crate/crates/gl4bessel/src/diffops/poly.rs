//! Dense multivariate polynomials in the Euler variables `theta_1..theta_d`.

use num_complex::Complex64;

pub const MAX_DEG: usize = 6;

/// Polynomial over up to three variables, power basis, degree <= 6 each.
#[derive(Debug, Clone)]
pub struct ThetaPoly {
    pub dim: usize,
    // coeff[i][j][k] of theta1^i theta2^j theta3^k (unused axes at index 0)
    coeff: Vec<Complex64>,
}

const N: usize = MAX_DEG + 1;

fn idx(i: usize, j: usize, k: usize) -> usize {
    (i * N + j) * N + k
}

impl ThetaPoly {
    pub fn zero(dim: usize) -> Self {
        assert!((1..=3).contains(&dim));
        ThetaPoly {
            dim,
            coeff: vec![Complex64::new(0.0, 0.0); N * N * N],
        }
    }

    pub fn constant(dim: usize, c: Complex64) -> Self {
        let mut p = ThetaPoly::zero(dim);
        p.coeff[idx(0, 0, 0)] = c;
        p
    }

    /// Falling factorial `theta_v (theta_v - 1) .. (theta_v - k + 1)`.
    pub fn falling(dim: usize, var: usize, k: usize) -> Self {
        assert!(var < dim && k <= MAX_DEG);
        let mut p = ThetaPoly::constant(dim, Complex64::new(1.0, 0.0));
        for j in 0..k {
            let lin = ThetaPoly::linear(dim, var, -(j as f64));
            p = p.mul(&lin);
        }
        p
    }

    /// `theta_v + c`.
    pub fn linear(dim: usize, var: usize, c: f64) -> Self {
        let mut p = ThetaPoly::constant(dim, Complex64::new(c, 0.0));
        let mut e = [0usize; 3];
        e[var] = 1;
        p.coeff[idx(e[0], e[1], e[2])] = Complex64::new(1.0, 0.0);
        p
    }

    pub fn get(&self, e: [usize; 3]) -> Complex64 {
        self.coeff[idx(e[0], e[1], e[2])]
    }

    pub fn scale(&self, c: Complex64) -> ThetaPoly {
        let mut out = self.clone();
        for v in &mut out.coeff {
            *v *= c;
        }
        out
    }

    pub fn add(&self, other: &ThetaPoly) -> ThetaPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (a, b) in out.coeff.iter_mut().zip(&other.coeff) {
            *a += b;
        }
        out
    }

    pub fn mul(&self, other: &ThetaPoly) -> ThetaPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = ThetaPoly::zero(self.dim);
        for i1 in 0..N {
            for j1 in 0..N {
                for k1 in 0..N {
                    let a = self.coeff[idx(i1, j1, k1)];
                    if a.norm() == 0.0 {
                        continue;
                    }
                    for i2 in 0..(N - i1) {
                        for j2 in 0..(N - j1) {
                            for k2 in 0..(N - k1) {
                                let b = other.coeff[idx(i2, j2, k2)];
                                if b.norm() == 0.0 {
                                    continue;
                                }
                                out.coeff[idx(i1 + i2, j1 + j2, k1 + k2)] += a * b;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Cancellation-free magnitude proxy: sum of |coeff| |at|^deg. Used to
    /// normalize annihilation residuals.
    pub fn eval_abs(&self, at: &[Complex64]) -> f64 {
        assert_eq!(at.len(), self.dim);
        let mut pw = [[1.0f64; N]; 3];
        for v in 0..self.dim {
            for e in 1..N {
                pw[v][e] = pw[v][e - 1] * at[v].norm();
            }
        }
        let mut s = 0.0;
        for i in 0..N {
            for j in 0..N {
                for k in 0..N {
                    let c = self.coeff[idx(i, j, k)];
                    if c.norm() != 0.0 {
                        s += c.norm() * pw[0][i] * pw[1][j] * pw[2][k];
                    }
                }
            }
        }
        s
    }

    pub fn eval(&self, at: &[Complex64]) -> Complex64 {
        assert_eq!(at.len(), self.dim);
        let mut pw = [[Complex64::new(1.0, 0.0); N]; 3];
        for v in 0..self.dim {
            for e in 1..N {
                pw[v][e] = pw[v][e - 1] * at[v];
            }
        }
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..N {
            for j in 0..N {
                for k in 0..N {
                    let c = self.coeff[idx(i, j, k)];
                    if c.norm() != 0.0 {
                        s += c * pw[0][i] * pw[1][j] * pw[2][k];
                    }
                }
            }
        }
        s
    }

    /// Expand into the falling-factorial basis: coefficients of
    /// `prod_v FF_(k_v)(theta_v)` via Stirling numbers of the second kind.
    pub fn falling_basis(&self) -> Vec<([usize; 3], Complex64)> {
        let s2 = stirling2();
        let mut acc = std::collections::HashMap::new();
        for i in 0..N {
            for j in 0..N {
                for kk in 0..N {
                    let c = self.coeff[idx(i, j, kk)];
                    if c.norm() == 0.0 {
                        continue;
                    }
                    for a in 0..=i {
                        for b in 0..=j {
                            for d in 0..=kk {
                                let w = s2[i][a] * s2[j][b] * s2[kk][d];
                                if w == 0.0 {
                                    continue;
                                }
                                *acc.entry([a, b, d]).or_insert(Complex64::new(0.0, 0.0)) +=
                                    c * w;
                            }
                        }
                    }
                }
            }
        }
        let mut out: Vec<_> = acc
            .into_iter()
            .filter(|(_, v)| v.norm() > 1e-12)
            .collect();
        out.sort_by_key(|(e, _)| *e);
        out
    }
}

fn stirling2() -> [[f64; N]; N] {
    let mut s = [[0.0; N]; N];
    s[0][0] = 1.0;
    for n in 1..N {
        for k in 1..=n {
            s[n][k] = s[n - 1][k - 1] + k as f64 * s[n - 1][k];
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_eval() {
        let p = ThetaPoly::falling(1, 0, 4);
        let at = [Complex64::new(2.5, 0.3)];
        let expect = at[0] * (at[0] - 1.0) * (at[0] - 2.0) * (at[0] - 3.0);
        assert!((p.eval(&at) - expect).norm() < 1e-13);
    }

    #[test]
    fn falling_basis_round_trip() {
        // theta^3 in one variable: S2(3,1) FF1 + S2(3,2) FF2 + S2(3,3) FF3
        let t = ThetaPoly::linear(1, 0, 0.0);
        let cube = t.mul(&t).mul(&t);
        let basis = cube.falling_basis();
        assert_eq!(basis.len(), 3);
        let coeffs: Vec<f64> = basis.iter().map(|(_, c)| c.re).collect();
        assert_eq!(coeffs, vec![1.0, 3.0, 1.0]);
    }
}
