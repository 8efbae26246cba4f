//! 4x4 real matrix helpers and the standard coordinate matrices.

/// Row-major 4x4 real matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4(pub [[f64; 4]; 4]);

impl From<[[f64; 4]; 4]> for Mat4 {
    fn from(m: [[f64; 4]; 4]) -> Self {
        Mat4(m)
    }
}

impl Mat4 {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Mat4(m)
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += self.0[i][k] * other.0[k][j];
                }
                out[i][j] = s;
            }
        }
        Mat4(out)
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[j][i] = self.0[i][j];
            }
        }
        Mat4(out)
    }

    pub fn det(&self) -> f64 {
        // Gaussian elimination with partial pivoting.
        let mut m = self.0;
        let mut det = 1.0;
        for col in 0..4 {
            let piv = (col..4)
                .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
                .unwrap();
            if m[piv][col] == 0.0 {
                return 0.0;
            }
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            det *= m[col][col];
            for row in (col + 1)..4 {
                let f = m[row][col] / m[col][col];
                for k in col..4 {
                    m[row][k] -= f * m[col][k];
                }
            }
        }
        det
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }
}

/// Upper unipotent `X(x1..x6)`: first superdiagonal `(x1, x3, x6)`, second
/// `(x2, x5)`, corner `x4`.
pub fn mat_x(x: &[f64; 6]) -> Mat4 {
    Mat4([
        [1.0, x[0], x[1], x[3]],
        [0.0, 1.0, x[2], x[4]],
        [0.0, 0.0, 1.0, x[5]],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// Lower unipotent `transpose(X(args))`.
pub fn mat_x_lower(x: &[f64; 6]) -> Mat4 {
    mat_x(x).transpose()
}

/// Diagonal `Y(y1..y4) = diag(y1 y2 y3 y4, y2 y3 y4, y3 y4, y4)`.
pub fn mat_y(y: &[f64; 4]) -> Mat4 {
    let mut m = [[0.0; 4]; 4];
    m[0][0] = y[0] * y[1] * y[2] * y[3];
    m[1][1] = y[1] * y[2] * y[3];
    m[2][2] = y[2] * y[3];
    m[3][3] = y[3];
    Mat4(m)
}

/// Diagonal `A(a1..a4) = diag(a1/a2, a2/a3, a3/a4, a4)`.
pub fn mat_a(a: &[f64; 4]) -> Mat4 {
    let mut m = [[0.0; 4]; 4];
    m[0][0] = a[0] / a[1];
    m[1][1] = a[1] / a[2];
    m[2][2] = a[2] / a[3];
    m[3][3] = a[3];
    Mat4(m)
}

/// Rotation block `K_(ij)(x)` (1-based `i < j`): the Givens rotation with
/// `cos = 1/sqrt(1+x^2)`, `-sin = x/sqrt(1+x^2)` in rows/columns `i, j`.
pub fn mat_k(i: usize, j: usize, x: f64) -> Mat4 {
    assert!(i >= 1 && j <= 4 && i < j);
    let c = 1.0 / (1.0 + x * x).sqrt();
    let s = x / (1.0 + x * x).sqrt();
    let mut m = Mat4::identity().0;
    m[i - 1][i - 1] = c;
    m[i - 1][j - 1] = -s;
    m[j - 1][i - 1] = s;
    m[j - 1][j - 1] = c;
    Mat4(m)
}

/// Max absolute entrywise difference.
pub fn mat_sub_abs_max(a: &Mat4, b: &Mat4) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((a.0[i][j] - b.0[i][j]).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_blocks_are_orthogonal() {
        for (i, j) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            for x in [-1.7, 0.0, 0.4, 2.9] {
                let k = mat_k(i, j, x);
                let prod = k.transpose().mul(&k);
                assert!(
                    mat_sub_abs_max(&prod, &Mat4::identity()) < 1e-14,
                    "K_{i}{j}({x}) not orthogonal"
                );
            }
        }
    }

    #[test]
    fn determinant_of_diagonal_a() {
        let a = mat_a(&[-1.0, 0.7, -2.3, 1.9]);
        assert!((a.det() + 1.0).abs() < 1e-12);
    }
}
